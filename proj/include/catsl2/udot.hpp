// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "catsl2/qring.hpp"

#include <map>
#include <optional>
#include <string>
#include <tuple>

namespace catsl2 {

enum class Order { EF, FE };

/// E^(a)F^(b)1_n (EF) or F^(b)E^(a)1_n (FE).
struct BasisLabel {
    Order order = Order::EF;
    int a = 0;
    int b = 0;
    int n = 0;

    int src() const { return n; }
    int dst() const { return n + 2 * (a - b); }
    bool canonical() const { return order == Order::EF ? n <= b - a : n >= b - a; }
    /// Canonical labels with n == b-a are stored with the EF tag.
    BasisLabel normalized() const;
    auto key() const { return std::tie(order, a, b, n); }
    bool operator<(const BasisLabel& o) const { return key() < o.key(); }
    bool operator==(const BasisLabel& o) const { return key() == o.key(); }
    std::string str() const;
};

/// Linear combination of E^(a)F^(b)1_n with fixed source and target weight.
class UdotElement {
public:
    using Terms = std::map<std::pair<int, int>, LaurentPoly>;

    UdotElement() = default;
    UdotElement(int src, int dst) : src_(src), dst_(dst) {}
    static UdotElement from_label(const BasisLabel& l, const LaurentPoly& c = 1);
    static UdotElement idem(int n) { return from_label({Order::EF, 0, 0, n}); }
    static UdotElement E(int n, int a = 1) { return from_label({Order::EF, a, 0, n}); }
    static UdotElement F(int n, int b = 1) { return from_label({Order::EF, 0, b, n}); }

    int src() const { return src_; }
    int dst() const { return dst_; }
    const Terms& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    void add(int a, int b, const LaurentPoly& c);

    UdotElement& operator+=(const UdotElement& o);
    UdotElement& operator-=(const UdotElement& o);
    friend UdotElement operator+(UdotElement x, const UdotElement& y) { return x += y; }
    friend UdotElement operator-(UdotElement x, const UdotElement& y) { return x -= y; }
    UdotElement scaled(const LaurentPoly& c) const;
    bool operator==(const UdotElement& o) const;

    std::string str() const;
    static UdotElement parse(const std::string& s);

private:
    int src_ = 0, dst_ = 0;
    bool weights_set_ = false;
    Terms t_;
    friend UdotElement mul(const UdotElement&, const UdotElement&);
};

using CanonMap = std::map<BasisLabel, LaurentPoly>;

/// F^(b)E^(a)1_n rewritten in the EF-ordered basis.
UdotElement fe_to_ef(int a, int b, int n, const LaurentPoly& c = 1);

UdotElement mul(const UdotElement& x, const UdotElement& y);
CanonMap to_canonical(const UdotElement& x);
UdotElement from_canonical(const CanonMap& m);
std::string canon_str(const CanonMap& m);

struct StructureConstants {
    CanonMap terms;
    bool positive = true;
};
StructureConstants structure_constants(const BasisLabel& b1, const BasisLabel& b2);

enum class Sym { omega, sigma, psi, tau, tau_inv, rho };
UdotElement apply_symmetry(Sym which, const UdotElement& x);
Sym parse_sym(const std::string& s);

/// Semilinear form from the triple-binomial closed formula.
RatFun form(const UdotElement& x, const UdotElement& y);
/// Semilinear form from the g-product closed formula.
RatFun form_alt(const UdotElement& x, const UdotElement& y);
/// Canonical-label evaluation; FE pairs use the FE-ordered formulas directly.
RatFun form_labels(const BasisLabel& x, const BasisLabel& y, bool alt);
RatFun form_bilinear(const UdotElement& x, const UdotElement& y);

RatFun grdim(const UdotElement& x, const UdotElement& y);
bool indecomposable(const BasisLabel& b);

struct NastySides {
    RatFun lhs, rhs;
    bool ok() const { return lhs == rhs; }
};
NastySides verify_nasty(int a, int b, int c, int n);

}  // namespace catsl2
