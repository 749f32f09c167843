// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <gmpxx.h>

#include <optional>
#include <vector>

namespace catsl2 {

using QVec = std::vector<mpq_class>;
using QMat = std::vector<QVec>;  // row-major

/// Rank of a rational matrix by fraction-free row reduction.
size_t rank(QMat m);

/// Solve sum_i x_i * cols[i] = b. Returns nullopt when b is not in the span.
/// When the columns are dependent the free variables are set to zero.
std::optional<QVec> solve_columns(const std::vector<QVec>& cols, const QVec& b);

}  // namespace catsl2
