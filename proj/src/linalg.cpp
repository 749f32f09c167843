// SPDX-License-Identifier: Apache-2.0
#include "catsl2/linalg.hpp"

namespace catsl2 {

namespace {

// Reduced row echelon form in place; returns pivot columns.
std::vector<size_t> rref(QMat& m, size_t ncols) {
    std::vector<size_t> piv;
    size_t r = 0;
    for (size_t c = 0; c < ncols && r < m.size(); ++c) {
        size_t p = r;
        while (p < m.size() && m[p][c] == 0) ++p;
        if (p == m.size()) continue;
        std::swap(m[p], m[r]);
        mpq_class inv = 1 / m[r][c];
        for (auto& v : m[r]) v *= inv;
        for (size_t i = 0; i < m.size(); ++i) {
            if (i == r || m[i][c] == 0) continue;
            mpq_class f = m[i][c];
            for (size_t j = c; j < m[i].size(); ++j) m[i][j] -= f * m[r][j];
        }
        piv.push_back(c);
        ++r;
    }
    return piv;
}

}  // namespace

size_t rank(QMat m) {
    if (m.empty()) return 0;
    return rref(m, m[0].size()).size();
}

std::optional<QVec> solve_columns(const std::vector<QVec>& cols, const QVec& b) {
    const size_t rows = b.size(), n = cols.size();
    QMat m(rows, QVec(n + 1));
    for (size_t i = 0; i < rows; ++i) {
        for (size_t j = 0; j < n; ++j) m[i][j] = cols[j][i];
        m[i][n] = b[i];
    }
    auto piv = rref(m, n + 1);
    if (!piv.empty() && piv.back() == n) return std::nullopt;
    QVec x(n);
    for (size_t r = 0; r < piv.size(); ++r) x[piv[r]] = m[r][n];
    return x;
}

}  // namespace catsl2
