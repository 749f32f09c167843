// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "catsl2/linalg.hpp"
#include "catsl2/qring.hpp"

#include <gmpxx.h>

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

namespace catsl2 {

using Partition = std::vector<int>;  ///< weakly decreasing, no trailing zeros

std::string partition_str(const Partition& p);
Partition conjugate(const Partition& p);

/// H*(Gr(k,N); Q) in the Schur basis of the k x (N-k) box.
class GrRing {
public:
    static const GrRing& get(int k, int N);

    int k() const { return k_; }
    int N() const { return N_; }
    size_t dim() const { return basis_.size(); }
    const std::vector<Partition>& basis() const { return basis_; }
    int index(const Partition& p) const;  ///< -1 when outside the box
    int weight(size_t i) const { return wt_[i]; }  ///< |lambda|

    /// s_lambda * s_mu, as (index, integer coefficient) pairs; built on first use.
    const std::vector<std::pair<int, long>>& product(size_t i, size_t j) const;
    /// Vertical / horizontal strip Pieri rules on a basis element.
    std::vector<int> pieri_e(const Partition& lam, int j) const;
    std::vector<int> pieri_h(const Partition& lam, int l) const;

private:
    GrRing(int k, int N);
    int k_, N_;
    std::vector<Partition> basis_;
    std::vector<int> wt_;
    std::map<Partition, int> idx_;
    using Sparse = std::vector<std::pair<int, long>>;
    mutable std::mutex mu_;
    mutable std::map<std::pair<size_t, size_t>, Sparse> products_;
    mutable std::map<size_t, std::map<std::vector<int>, long>> emono_;  // dual Jacobi-Trudi expansions
    const std::map<std::vector<int>, long>& e_expansion(size_t i) const;
};

/// Element of H_k.
class GrElement {
public:
    GrElement() = default;
    GrElement(int k, int N);
    static GrElement one(int k, int N);
    static GrElement schur(int k, int N, const Partition& p);
    static GrElement x(int k, int N, int j);  ///< elementary class, zero out of range
    static GrElement y(int k, int N, int l);  ///< (-1)^l complete class, zero out of range

    int k() const { return k_; }
    int N() const { return N_; }
    const QVec& coeffs() const { return c_; }
    QVec& coeffs() { return c_; }
    const GrRing& ring() const { return GrRing::get(k_, N_); }
    std::map<Partition, mpq_class> terms() const;
    bool is_zero() const;
    bool homogeneous(int* deg = nullptr) const;  ///< deg = 2|lambda|

    GrElement& operator+=(const GrElement& o);
    GrElement& operator-=(const GrElement& o);
    GrElement& operator*=(const mpq_class& s);
    friend GrElement operator+(GrElement a, const GrElement& b) { return a += b; }
    friend GrElement operator-(GrElement a, const GrElement& b) { return a -= b; }
    bool operator==(const GrElement& o) const { return k_ == o.k_ && N_ == o.N_ && c_ == o.c_; }
    std::string str() const;

private:
    int k_ = 0, N_ = 0;
    QVec c_;
};

GrElement gr_mul(const GrElement& u, const GrElement& v);
/// Polynomial in x_1..x_k, y_1..y_{N-k} with rational coefficients.
GrElement gr_from_poly(int k, int N, const std::string& expr);

/// Graded dimension of H_k by partition census.
LaurentPoly gr_graded_dim(int k, int N);
/// q^2-Gaussian binomial by the Pascal recursion.
LaurentPoly gaussian_binomial_q2(int N, int k);

// ---- iterated flag bimodules -------------------------------------------------------

/// Pattern as written left to right; the last letter is strand 1, next to region 0 of weight n0.
struct BimSignature {
    int N = 0;
    int n0 = 0;
    std::string pattern;
    int shift = 0;

    int strands() const { return static_cast<int>(pattern.size()); }
    char strand(int r) const { return pattern[pattern.size() - static_cast<size_t>(r)]; }
    int k_at(int region) const;  ///< k of region r (0 = rightmost); may leave [0,N]
    int weight_at(int region) const { return 2 * k_at(region) - N; }
    bool parity_ok() const { return ((n0 + N) % 2 + 2) % 2 == 0; }
    bool is_zero_object() const;
    int cap(int r) const;
    /// One-step shifts of the flag functor, summed over strands.
    int gamma_shift() const;
    bool operator==(const BimSignature& o) const {
        return N == o.N && n0 == o.n0 && pattern == o.pattern && shift == o.shift;
    }
    std::string str() const;
};

using Exps = std::vector<int>;  ///< index r-1 holds the exponent of xi_r
using BimPoly = std::map<Exps, QVec>;

class Bimodule;
using BimodulePtr = std::shared_ptr<const Bimodule>;

/// Free right H_{k0}-module with basis of bounded xi-monomials.
class Bimodule {
public:
    static BimodulePtr get(const BimSignature& sig);

    const BimSignature& sig() const { return sig_; }
    bool zero() const { return zero_; }
    const GrRing& base() const { return GrRing::get(sig_.k_at(0), sig_.N); }
    int strands() const { return sig_.strands(); }

    /// Class x_j or y_l of region r in normal form; zero outside its range.
    const BimPoly& region_class(int region, char which, int j) const;
    /// xi_r^{cap+1} rewritten in lower powers of xi_r.
    const BimPoly& xi_reduce(int r) const { return top_[static_cast<size_t>(r - 1)]; }
    /// All normal-form xi-monomials, in lexicographic order.
    std::vector<Exps> generators() const;

    BimPoly normalize(BimPoly p) const;
    BimPoly mul(const BimPoly& a, const BimPoly& b) const;  ///< product, normalized

private:
    explicit Bimodule(const BimSignature& sig);
    void build();
    BimSignature sig_;
    bool zero_ = false;
    std::vector<int> caps_;
    // classes_[r]['x'/'y'][j]
    std::vector<std::vector<BimPoly>> xcls_, ycls_;
    // top_[r-1] = expression of xi_r^{cap+1} in lower powers of xi_r
    std::vector<BimPoly> top_;
    BimPoly empty_;
    BimPoly reduce_strand(const BimPoly& p, int r) const;
};

/// Element of a flag bimodule: map from xi-exponents to coefficients over H_{k0}.
class BimElement {
public:
    BimElement() = default;
    explicit BimElement(BimodulePtr m) : mod_(std::move(m)) {}
    static BimElement generator(BimodulePtr m, const Exps& e);

    const BimodulePtr& module() const { return mod_; }
    const BimSignature& sig() const { return mod_->sig(); }
    const BimPoly& terms() const { return t_; }
    BimPoly& terms() { return t_; }
    bool is_zero() const;
    /// Total degree (2 sum exps + 2|lambda| + shifts); false when inhomogeneous.
    bool degree(int* deg) const;

    BimElement& operator+=(const BimElement& o);
    BimElement& operator-=(const BimElement& o);
    BimElement& operator*=(const mpq_class& s);
    bool operator==(const BimElement& o) const;
    std::string str() const;

private:
    BimodulePtr mod_;
    BimPoly t_;
};

BimElement bim_normalize(const BimElement& e);
BimElement mul_region_class(const BimElement& e, int region, char which, int j);
BimElement apply_dot(const BimElement& e, int strand);
BimElement apply_cross(const BimElement& e, int strand);
/// Remove strands pos+1, pos+2 (counted from the right) by the cap of the given kind.
BimElement apply_cap(const BimElement& e, int pos, const std::string& kind);
/// Insert two strands at region pos by the cup of the given kind ("FE" or "EF").
/// form 0 is the double sum; forms 1 and 2 are the single sums over the right and left outer regions.
BimElement apply_cup(const BimElement& e, int pos, const std::string& kind, int form = 0);
/// Multiply by a bubble in region pos; orient "cw" or "ccw", dots may be negative.
BimElement apply_bubble(const BimElement& e, int pos, const std::string& orient, int dots);

/// Image of a dotted bubble in H_k for weight n; zero for negative degree.
GrElement bubble_class(int N, int n, const std::string& orient, int dots);
/// Degree of a bubble with the given dots at weight n.
int bubble_degree(int n, const std::string& orient, int dots);

BimSignature cup_target(const BimSignature& s, int pos, const std::string& kind);
BimSignature cap_target(const BimSignature& s, int pos, const std::string& kind);

}  // namespace catsl2
