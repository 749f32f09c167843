// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <gmpxx.h>

#include <map>
#include <string>
#include <vector>

namespace catsl2 {

/// Sparse element of Z[q, q^-1].
class LaurentPoly {
public:
    using Map = std::map<int, mpz_class>;

    LaurentPoly() = default;
    LaurentPoly(long c);  // NOLINT: implicit constant
    static LaurentPoly monomial(int exp, const mpz_class& c = 1);
    static LaurentPoly q(int exp = 1) { return monomial(exp); }

    const Map& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    mpz_class coeff(int e) const;
    int min_exp() const;
    int max_exp() const;

    /// Evaluate a single coefficient slot, dropping zeros.
    void add_term(int e, const mpz_class& c);

    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    LaurentPoly& operator*=(const LaurentPoly& o);
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    LaurentPoly operator-() const;
    bool operator==(const LaurentPoly& o) const { return t_ == o.t_; }
    bool operator!=(const LaurentPoly& o) const { return !(t_ == o.t_); }
    bool operator<(const LaurentPoly& o) const;

    LaurentPoly shifted(int k) const;  ///< times q^k
    LaurentPoly bar() const;           ///< q -> q^-1
    LaurentPoly pow(unsigned e) const;

    /// Exact division; throws std::domain_error when d does not divide *this.
    LaurentPoly exact_div(const LaurentPoly& d) const;

    bool nonneg_coeffs() const;
    std::string str() const;
    static LaurentPoly parse(const std::string& s);

private:
    Map t_;
};

/// Element of Q(q) kept in canonical reduced form.
class RatFun {
public:
    RatFun() : num_(0), den_(1) {}
    RatFun(long c) : num_(c), den_(1) {}  // NOLINT
    RatFun(const LaurentPoly& p) : num_(p), den_(1) {}  // NOLINT
    RatFun(const LaurentPoly& n, const LaurentPoly& d);

    const LaurentPoly& num() const { return num_; }
    const LaurentPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    RatFun& operator+=(const RatFun& o);
    RatFun& operator-=(const RatFun& o);
    RatFun& operator*=(const RatFun& o);
    RatFun& operator/=(const RatFun& o);
    friend RatFun operator+(RatFun a, const RatFun& b) { return a += b; }
    friend RatFun operator-(RatFun a, const RatFun& b) { return a -= b; }
    friend RatFun operator*(RatFun a, const RatFun& b) { return a *= b; }
    friend RatFun operator/(RatFun a, const RatFun& b) { return a /= b; }
    RatFun operator-() const;
    bool operator==(const RatFun& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const RatFun& o) const { return !(*this == o); }

    /// Value equality by cross-multiplication (independent of canonical form).
    bool cross_equal(const RatFun& o) const;
    RatFun bar() const;
    RatFun inverse() const;

    /// Coefficients of the Laurent expansion at q = 0, exponents lo..hi.
    std::map<int, mpz_class> series(int hi) const;

    std::string str() const;

private:
    void canonicalize();
    LaurentPoly num_, den_;
};

/// Univariate gcd over Z of two Laurent polynomials, up to units q^k and sign.
LaurentPoly poly_gcd(const LaurentPoly& a, const LaurentPoly& b);

LaurentPoly qint(long a);
LaurentPoly qfact(long a);
LaurentPoly qbin(long m, long j);
RatFun g(long a);

struct IdentityReport {
    std::string name;
    bool ok = true;
    std::vector<long> counterexample;
};

/// Appendix identities: two Pascal rules and two g-recursions over a box.
std::vector<IdentityReport> check_qidentities(long amax, long jmax);

/// Right-hand factor of the second g-recursion, with its exponent parameter exposed.
RatFun g_recursion_rhs(long m, long j, long exp_param);

}  // namespace catsl2
