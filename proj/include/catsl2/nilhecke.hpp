// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "catsl2/qring.hpp"

#include <gmpxx.h>

#include <map>
#include <string>
#include <vector>

namespace catsl2 {

/// Permutation in one-line notation, values 1..a.
class Perm {
public:
    Perm() = default;
    explicit Perm(std::vector<int> w);
    static Perm identity(int a);
    static Perm longest(int a);
    static Perm simple(int a, int i);  ///< s_i, 1 <= i < a
    static Perm parse(const std::string& s);
    static std::vector<Perm> all(int a);  ///< sorted by length, then lexicographically

    int size() const { return static_cast<int>(w_.size()); }
    int operator()(int i) const { return w_[static_cast<size_t>(i - 1)]; }
    const std::vector<int>& one_line() const { return w_; }
    int length() const;
    Perm inverse() const;
    Perm operator*(const Perm& o) const;  ///< (uv)(i) = u(v(i))
    bool operator==(const Perm& o) const { return w_ == o.w_; }
    bool operator<(const Perm& o) const { return w_ < o.w_; }
    /// Lexicographically smallest reduced word i_1..i_l with w = s_{i_1}...s_{i_l}.
    std::vector<int> reduced_word() const;
    std::string str() const;

private:
    std::vector<int> w_;
};

/// Polynomial in x_1..x_a with integer coefficients; deg x_i = 2.
class IntPoly {
public:
    using Mono = std::vector<int>;
    IntPoly() = default;
    explicit IntPoly(int a) : a_(a) {}
    static IntPoly constant(int a, const mpz_class& c);
    static IntPoly var(int a, int i);
    static IntPoly monomial(const Mono& m, const mpz_class& c = 1);
    static IntPoly staircase(int a);  ///< x^delta = x_1^{a-1} ... x_{a-1}

    int nvars() const { return a_; }
    const std::map<Mono, mpz_class>& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    void add(const Mono& m, const mpz_class& c);
    bool homogeneous(int* deg = nullptr) const;  ///< deg in the doubled grading

    IntPoly& operator+=(const IntPoly& o);
    IntPoly& operator-=(const IntPoly& o);
    friend IntPoly operator+(IntPoly x, const IntPoly& y) { return x += y; }
    friend IntPoly operator-(IntPoly x, const IntPoly& y) { return x -= y; }
    friend IntPoly operator*(const IntPoly& x, const IntPoly& y);
    IntPoly scaled(const mpz_class& c) const;
    bool operator==(const IntPoly& o) const { return t_ == o.t_; }
    bool operator!=(const IntPoly& o) const { return t_ != o.t_; }
    bool operator<(const IntPoly& o) const { return t_ < o.t_; }

    IntPoly swap_vars(int i) const;  ///< s_i acting on variables
    bool symmetric() const;
    std::string str() const;

private:
    int a_ = 0;
    std::map<Mono, mpz_class> t_;
};

IntPoly divided_difference(int i, const IntPoly& p);
/// d_w = d_{i_1} ... d_{i_l} for a reduced word of w.
IntPoly divided_difference(const Perm& w, const IntPoly& p);
IntPoly schubert(const Perm& w);

/// Element of the nilHecke ring: sum over w of (polynomial in chi) * u_w.
class NHElement {
public:
    NHElement() = default;
    explicit NHElement(int a) : a_(a) {}
    static NHElement one(int a);
    static NHElement chi(int a, int i);
    static NHElement u(int a, int i);
    static NHElement u(const Perm& w);
    static NHElement poly_times_u(const IntPoly& p, const Perm& w);

    int rank() const { return a_; }
    const std::map<Perm, IntPoly>& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    void add(const Perm& w, const IntPoly& p);
    NHElement& operator+=(const NHElement& o);
    NHElement& operator-=(const NHElement& o);
    friend NHElement operator+(NHElement x, const NHElement& y) { return x += y; }
    friend NHElement operator-(NHElement x, const NHElement& y) { return x -= y; }
    bool operator==(const NHElement& o) const { return t_ == o.t_; }
    std::string str() const;
    static NHElement parse(int a, const std::string& s);

private:
    int a_ = 0;
    std::map<Perm, IntPoly> t_;
};

NHElement nh_mul(const NHElement& x, const NHElement& y);
IntPoly act(const NHElement& e, const IntPoly& p);

/// Coefficients of p in the Schubert basis over symmetric polynomials, by Perm::all order.
std::vector<IntPoly> schubert_coordinates(const IntPoly& p);
/// a! x a! matrix of act(e, .) in the Schubert basis; entry [row][col].
std::vector<std::vector<IntPoly>> phi_matrix(const NHElement& e);
std::vector<std::vector<IntPoly>> matmul(const std::vector<std::vector<IntPoly>>& x,
                                         const std::vector<std::vector<IntPoly>>& y);

NHElement e_w0(int a);
bool is_idempotent(const NHElement& e);

struct RankReport {
    LaurentPoly nilcoxeter_census, nilcoxeter_expected;
    LaurentPoly schubert_census, schubert_expected;
    RatFun nilhecke_rank;
    bool ok() const { return nilcoxeter_census == nilcoxeter_expected && schubert_census == schubert_expected; }
};
RankReport graded_rank_checks(int a);

}  // namespace catsl2
