// SPDX-License-Identifier: Apache-2.0
#include "catsl2/udot.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace catsl2 {

BasisLabel BasisLabel::normalized() const {
    if (order == Order::FE && n == b - a) return {Order::EF, a, b, n};
    return *this;
}

namespace {

std::string word(int a, int b, int n, Order o) {
    std::string s;
    auto e = [&] { if (a) s += "E(" + std::to_string(a) + ")"; };
    auto f = [&] { if (b) s += "F(" + std::to_string(b) + ")"; };
    if (o == Order::EF) { e(); f(); } else { f(); e(); }
    return s + "1_{" + std::to_string(n) + "}";
}

std::string coeff_prefix(const LaurentPoly& c) {
    if (c == LaurentPoly(1)) return "";
    return "(" + c.str() + ")";
}

}  // namespace

std::string BasisLabel::str() const { return word(a, b, n, order); }

UdotElement UdotElement::from_label(const BasisLabel& l, const LaurentPoly& c) {
    if (l.a < 0 || l.b < 0) throw std::invalid_argument("negative divided power");
    if (l.order == Order::FE) return fe_to_ef(l.a, l.b, l.n, c);
    UdotElement x(l.src(), l.dst());
    x.add(l.a, l.b, c);
    return x;
}

void UdotElement::add(int a, int b, const LaurentPoly& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = t_.try_emplace({a, b}, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) t_.erase(it);
    }
}

UdotElement& UdotElement::operator+=(const UdotElement& o) {
    if (o.t_.empty()) return *this;
    if (t_.empty()) {
        src_ = o.src_;
        dst_ = o.dst_;
    } else if (src_ != o.src_ || dst_ != o.dst_) {
        throw std::invalid_argument("adding elements of different weight spaces");
    }
    for (const auto& [k, c] : o.t_) add(k.first, k.second, c);
    return *this;
}

UdotElement& UdotElement::operator-=(const UdotElement& o) { return *this += o.scaled(-1); }

UdotElement UdotElement::scaled(const LaurentPoly& c) const {
    UdotElement r(src_, dst_);
    for (const auto& [k, v] : t_) r.add(k.first, k.second, v * c);
    return r;
}

bool UdotElement::operator==(const UdotElement& o) const {
    if (t_.empty() || o.t_.empty()) return t_.empty() && o.t_.empty();
    return src_ == o.src_ && dst_ == o.dst_ && t_ == o.t_;
}

std::string UdotElement::str() const {
    if (t_.empty()) return "0";
    std::string s;
    for (const auto& [k, c] : t_) {
        if (!s.empty()) s += " + ";
        s += coeff_prefix(c) + word(k.first, k.second, src_, Order::EF);
    }
    return s;
}

UdotElement fe_to_ef(int a, int b, int n, const LaurentPoly& c) {
    UdotElement x(n, n + 2 * (a - b));
    for (int j = 0; j <= std::min(a, b); ++j) x.add(a - j, b - j, c * qbin(b - a - n, j));
    return x;
}

UdotElement mul(const UdotElement& x, const UdotElement& y) {
    UdotElement r(y.src_, x.dst_);
    if (x.is_zero() || y.is_zero() || x.src_ != y.dst_) return r;
    const int n = y.src_;
    for (const auto& [kx, cx] : x.t_) {
        auto [a, b] = kx;
        for (const auto& [ky, cy] : y.t_) {
            auto [c, d] = ky;
            LaurentPoly cc = cx * cy;
            for (int j = 0; j <= std::min(b, c); ++j) {
                LaurentPoly k = qbin(b - c - (n - 2 * d), j);
                if (k.is_zero()) continue;
                r.add(a + c - j, b + d - j, cc * k * qbin(a + c - j, a) * qbin(b + d - j, d));
            }
        }
    }
    return r;
}

CanonMap to_canonical(const UdotElement& x) {
    CanonMap out;
    auto put = [&](const BasisLabel& l, const LaurentPoly& c) {
        auto [it, fresh] = out.try_emplace(l.normalized(), c);
        if (!fresh) {
            it->second += c;
            if (it->second.is_zero()) out.erase(it);
        }
    };
    const int n = x.src();
    for (const auto& [k, c] : x.terms()) {
        auto [a, b] = k;
        if (n <= b - a) {
            put({Order::EF, a, b, n}, c);
            continue;
        }
        for (int j = 0; j <= std::min(a, b); ++j)
            put({Order::FE, a - j, b - j, n}, c * qbin(a - b + n, j));
    }
    for (auto it = out.begin(); it != out.end();) it = it->second.is_zero() ? out.erase(it) : std::next(it);
    return out;
}

UdotElement from_canonical(const CanonMap& m) {
    UdotElement r;
    for (const auto& [l, c] : m) r += UdotElement::from_label(l, c);
    return r;
}

std::string canon_str(const CanonMap& m) {
    if (m.empty()) return "0";
    std::string s;
    for (const auto& [l, c] : m) {
        if (!s.empty()) s += " + ";
        s += coeff_prefix(c) + l.str();
    }
    return s;
}

StructureConstants structure_constants(const BasisLabel& b1, const BasisLabel& b2) {
    StructureConstants sc;
    sc.terms = to_canonical(mul(UdotElement::from_label(b1), UdotElement::from_label(b2)));
    for (const auto& [l, c] : sc.terms)
        if (!c.nonneg_coeffs()) sc.positive = false;
    return sc;
}

UdotElement apply_symmetry(Sym which, const UdotElement& x) {
    UdotElement r;
    const int n = x.src();
    for (const auto& [k, c] : x.terms()) {
        auto [a, b] = k;
        const int m = n + 2 * (a - b);
        switch (which) {
            case Sym::omega: r += fe_to_ef(b, a, -n, c); break;
            case Sym::sigma: r += fe_to_ef(a, b, -m, c); break;
            case Sym::psi: r += UdotElement::from_label({Order::EF, a, b, n}, c.bar()); break;
            case Sym::tau:
                r += UdotElement::from_label({Order::EF, b, a, m}, c.bar().shifted(-(a - b) * (a - b + n)));
                break;
            case Sym::tau_inv:
                r += UdotElement::from_label({Order::EF, b, a, m}, c.bar().shifted(-(b - a) * (a - b + n)));
                break;
            case Sym::rho: return apply_symmetry(Sym::psi, apply_symmetry(Sym::tau, x));
        }
    }
    if (r.is_zero()) {
        switch (which) {
            case Sym::omega: return UdotElement(-x.src(), -x.dst());
            case Sym::sigma: return UdotElement(-x.dst(), -x.src());
            case Sym::psi: return UdotElement(x.src(), x.dst());
            default: return UdotElement(x.dst(), x.src());
        }
    }
    return r;
}

Sym parse_sym(const std::string& s) {
    if (s == "omega" || s == "ω") return Sym::omega;
    if (s == "sigma" || s == "σ") return Sym::sigma;
    if (s == "psi" || s == "ψ") return Sym::psi;
    if (s == "tau" || s == "τ") return Sym::tau;
    if (s == "tau-inv" || s == "tau_inv" || s == "tau-1" || s == "τ⁻¹") return Sym::tau_inv;
    if (s == "rho" || s == "ρ") return Sym::rho;
    throw std::invalid_argument("unknown symmetry: " + s);
}

namespace {

RatFun form_ef(int a, int b, int c, int d, int n) {
    if (a - b != c - d) return 0;
    RatFun s;
    for (int j = 0; j <= std::min(a, c); ++j) {
        LaurentPoly k = qbin(b + d - n, j) * qbin(b + c - j, b) * qbin(a + d - j, d);
        if (k.is_zero()) continue;
        s += RatFun(k.shifted((a + c - j) * (b + d - j - n))) * g(b + c - j);
    }
    return s;
}

RatFun form_fe(int a, int b, int c, int d, int n) {
    if (a - b != c - d) return 0;
    RatFun s;
    for (int j = 0; j <= std::min(b, d); ++j) {
        LaurentPoly k = qbin(a + c + n, j) * qbin(a + d - j, a) * qbin(b + c - j, c);
        if (k.is_zero()) continue;
        s += RatFun(k.shifted((b + d - j) * (a + c - j + n))) * g(a + d - j);
    }
    return s;
}

RatFun gprod(int a, int b, int c, int j) { return g(a - j) * g(b - j) * g(j) * g(c - a + j); }

RatFun form_alt_ef(int a, int b, int c, int d, int n) {
    if (a - b != c - d) return 0;
    RatFun s;
    for (int j = std::max(0, a - c); j <= std::min(a, b); ++j)
        s += RatFun(LaurentPoly::q(2 * j * j + (a - d + n) * (a - c - 2 * j))) * gprod(a, b, c, j);
    return s;
}

RatFun form_alt_fe(int a, int b, int c, int d, int n) {
    if (a - b != c - d) return 0;
    RatFun s;
    for (int j = std::max(0, a - c); j <= std::min(a, b); ++j)
        s += RatFun(LaurentPoly::q(2 * j * j + (b - c - n) * (b - d - 2 * j))) * gprod(a, b, c, j);
    return s;
}

template <class F>
RatFun extend(const UdotElement& x, const UdotElement& y, F f) {
    RatFun s;
    if (x.is_zero() || y.is_zero() || x.src() != y.src() || x.dst() != y.dst()) return s;
    for (const auto& [kx, cx] : x.terms())
        for (const auto& [ky, cy] : y.terms()) {
            RatFun v = f(kx.first, kx.second, ky.first, ky.second, x.src());
            if (!v.is_zero()) s += RatFun(cx.bar() * cy) * v;
        }
    return s;
}

}  // namespace

RatFun form(const UdotElement& x, const UdotElement& y) { return extend(x, y, form_ef); }
RatFun form_alt(const UdotElement& x, const UdotElement& y) { return extend(x, y, form_alt_ef); }

RatFun form_labels(const BasisLabel& x, const BasisLabel& y, bool alt) {
    if (x.src() != y.src() || x.dst() != y.dst()) return 0;
    if (x.order == Order::FE && y.order == Order::FE)
        return alt ? form_alt_fe(x.a, x.b, y.a, y.b, x.n) : form_fe(x.a, x.b, y.a, y.b, x.n);
    auto ex = UdotElement::from_label(x), ey = UdotElement::from_label(y);
    return alt ? form_alt(ex, ey) : form(ex, ey);
}

RatFun form_bilinear(const UdotElement& x, const UdotElement& y) {
    return form(x, apply_symmetry(Sym::psi, y)).bar();
}

RatFun grdim(const UdotElement& x, const UdotElement& y) { return form(x, y); }

bool indecomposable(const BasisLabel& l) {
    const int a = l.a, b = l.b, n = l.n;
    for (int j = 1; j <= std::min(a, b); ++j) {
        int e = l.order == Order::EF ? 2 * j * j + (a - b + n) * (-2 * j)
                                     : 2 * j * j + (b - a - n) * (-2 * j);
        if (e <= 0) return false;
    }
    return true;
}

NastySides verify_nasty(int a, int b, int c, int n) {
    RatFun lhs, rhs;
    for (int j = 0; j <= a; ++j) {
        LaurentPoly k = qbin(a, j) * qbin(b + c - j, b) * qbin(2 * b + c - a - n, j);
        if (k.is_zero()) continue;
        lhs += RatFun(k.shifted(-j * (b + c - n))) / g(j);
    }
    lhs *= RatFun(LaurentPoly::q(a * (3 * b + 2 * (c - a) - 2 * n)));
    for (int s = 0; s <= a; ++s)
        rhs += RatFun((qbin(a, s) * qbin(-a + b + c, b - s)).shifted(-s * (2 * a - 3 * b - c + 2 * n)));
    return {lhs, rhs};
}

// ---- text syntax -----------------------------------------------------------

namespace {

struct Reader {
    const std::string& s;
    size_t i = 0;
    void ws() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    bool eof() {
        ws();
        return i >= s.size();
    }
    char peek() {
        ws();
        return i < s.size() ? s[i] : '\0';
    }
    [[noreturn]] void fail(const std::string& what) const {
        throw std::invalid_argument("parse error at " + std::to_string(i) + ": " + what + " in '" + s + "'");
    }
    long integer() {
        ws();
        size_t st = i;
        if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (st == i || (i == st + 1 && !std::isdigit(static_cast<unsigned char>(s[st])))) fail("integer expected");
        return std::stol(s.substr(st, i - st));
    }
    void expect(char c) {
        if (peek() != c) fail(std::string("expected '") + c + "'");
        ++i;
    }
};

LaurentPoly read_coeff(Reader& r) {
    LaurentPoly c(1);
    if (r.peek() == '(') {
        int depth = 0;
        size_t st = r.i;
        for (; r.i < r.s.size(); ++r.i) {
            if (r.s[r.i] == '(') ++depth;
            if (r.s[r.i] == ')' && --depth == 0) break;
        }
        if (r.i >= r.s.size()) r.fail("unbalanced parenthesis");
        c = LaurentPoly::parse(r.s.substr(st + 1, r.i - st - 1));
        ++r.i;
        return c;
    }
    const bool idem_next = r.peek() == '1' && r.i + 1 < r.s.size() && r.s[r.i + 1] == '_';
    if (!idem_next && std::isdigit(static_cast<unsigned char>(r.peek()))) {
        c = LaurentPoly(r.integer());
        if (r.peek() == '*') ++r.i;
    }
    if (r.peek() == 'q') {
        ++r.i;
        int e = 1;
        if (r.peek() == '^') {
            ++r.i;
            bool brace = r.peek() == '{';
            if (brace) ++r.i;
            e = static_cast<int>(r.integer());
            if (brace) r.expect('}');
        }
        c = c.shifted(e);
        if (r.peek() == '*') ++r.i;
    }
    return c;
}

UdotElement read_term(Reader& r) {
    LaurentPoly c = read_coeff(r);
    std::vector<std::pair<char, int>> fac;
    while (r.peek() == 'E' || r.peek() == 'F') {
        char g = r.s[r.i++];
        int p = 1;
        if (r.i < r.s.size() && r.s[r.i] == '(') {
            ++r.i;
            p = static_cast<int>(r.integer());
            r.expect(')');
        } else if (r.i < r.s.size() && r.s[r.i] == '^') {
            ++r.i;
            p = static_cast<int>(r.integer());
        }
        if (p < 0) r.fail("negative divided power");
        fac.emplace_back(g, p);
    }
    if (r.peek() != '1') r.fail("idempotent 1_{n} expected");
    ++r.i;
    r.expect('_');
    int n;
    if (r.peek() == '{') {
        ++r.i;
        n = static_cast<int>(r.integer());
        r.expect('}');
    } else {
        n = static_cast<int>(r.integer());
    }
    UdotElement x = UdotElement::idem(n);
    for (auto it = fac.rbegin(); it != fac.rend(); ++it) {
        int w = x.dst();
        UdotElement f = it->first == 'E' ? UdotElement::E(w, it->second) : UdotElement::F(w, it->second);
        x = mul(f, x);
    }
    return x.scaled(c);
}

}  // namespace

UdotElement UdotElement::parse(const std::string& s) {
    Reader r{s};
    if (r.eof()) throw std::invalid_argument("empty expression");
    UdotElement total;
    bool have = false;
    int src = 0, dst = 0;
    bool first = true;
    while (!r.eof()) {
        int sign = 1;
        char p = r.peek();
        if (p == '+' || p == '-') {
            sign = p == '-' ? -1 : 1;
            ++r.i;
        } else if (!first) {
            r.fail("expected + or -");
        }
        first = false;
        UdotElement t = read_term(r);
        if (have && (t.src() != src || t.dst() != dst)) r.fail("terms have different weights");
        have = true;
        src = t.src();
        dst = t.dst();
        total += t.scaled(sign);
    }
    if (total.is_zero()) return UdotElement(src, dst);
    return total;
}

}  // namespace catsl2
