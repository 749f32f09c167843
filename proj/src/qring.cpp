// SPDX-License-Identifier: Apache-2.0
#include "catsl2/qring.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace catsl2 {

LaurentPoly::LaurentPoly(long c) {
    if (c != 0) t_[0] = c;
}

LaurentPoly LaurentPoly::monomial(int exp, const mpz_class& c) {
    LaurentPoly p;
    p.add_term(exp, c);
    return p;
}

mpz_class LaurentPoly::coeff(int e) const {
    auto it = t_.find(e);
    return it == t_.end() ? mpz_class(0) : it->second;
}

int LaurentPoly::min_exp() const {
    if (t_.empty()) throw std::domain_error("min_exp of zero polynomial");
    return t_.begin()->first;
}

int LaurentPoly::max_exp() const {
    if (t_.empty()) throw std::domain_error("max_exp of zero polynomial");
    return t_.rbegin()->first;
}

void LaurentPoly::add_term(int e, const mpz_class& c) {
    if (c == 0) return;
    auto [it, fresh] = t_.try_emplace(e, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) t_.erase(it);
    }
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.t_) add_term(e, c);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.t_) add_term(e, -c);
    return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly r;
    for (const auto& [ea, ca] : a.t_)
        for (const auto& [eb, cb] : b.t_) r.add_term(ea + eb, ca * cb);
    return r;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) { return *this = *this * o; }

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r;
    for (const auto& [e, c] : t_) r.t_[e] = -c;
    return r;
}

bool LaurentPoly::operator<(const LaurentPoly& o) const {
    return std::lexicographical_compare(
        t_.begin(), t_.end(), o.t_.begin(), o.t_.end(), [](const auto& x, const auto& y) {
            if (x.first != y.first) return x.first < y.first;
            return x.second < y.second;
        });
}

LaurentPoly LaurentPoly::shifted(int k) const {
    LaurentPoly r;
    for (const auto& [e, c] : t_) r.t_[e + k] = c;
    return r;
}

LaurentPoly LaurentPoly::bar() const {
    LaurentPoly r;
    for (const auto& [e, c] : t_) r.t_[-e] = c;
    return r;
}

LaurentPoly LaurentPoly::pow(unsigned e) const {
    LaurentPoly r(1), b = *this;
    while (e) {
        if (e & 1u) r *= b;
        b *= b;
        e >>= 1u;
    }
    return r;
}

LaurentPoly LaurentPoly::exact_div(const LaurentPoly& d) const {
    if (d.is_zero()) throw std::domain_error("division by zero polynomial");
    LaurentPoly rem = *this, quo;
    const int dlo = d.min_exp(), dhi = d.max_exp();
    const mpz_class& lead = d.t_.rbegin()->second;
    while (!rem.is_zero()) {
        int rhi = rem.max_exp();
        if (rhi - (dhi - dlo) < rem.min_exp()) throw std::domain_error("inexact polynomial division");
        const mpz_class& rc = rem.t_.rbegin()->second;
        if (!mpz_divisible_p(rc.get_mpz_t(), lead.get_mpz_t()))
            throw std::domain_error("inexact polynomial division");
        mpz_class c = rc / lead;
        int e = rhi - dhi;
        quo.add_term(e, c);
        for (const auto& [de, dc] : d.t_) rem.add_term(de + e, -c * dc);
    }
    return quo;
}

bool LaurentPoly::nonneg_coeffs() const {
    for (const auto& [e, c] : t_)
        if (c < 0) return false;
    return true;
}

std::string LaurentPoly::str() const {
    if (t_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = t_.rbegin(); it != t_.rend(); ++it) {
        const auto& [e, c] = *it;
        mpz_class a = abs(c);
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        if (e == 0) {
            os << a.get_str();
            continue;
        }
        if (a != 1) os << a.get_str();
        os << "q";
        if (e != 1) os << "^" << e;
    }
    return os.str();
}

LaurentPoly LaurentPoly::parse(const std::string& s) {
    LaurentPoly r;
    size_t i = 0;
    auto skip = [&] {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    };
    auto read_int = [&](bool allow_sign) -> std::string {
        std::string d;
        if (allow_sign && i < s.size() && (s[i] == '-' || s[i] == '+')) d += s[i++];
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) d += s[i++];
        return d;
    };
    skip();
    if (i == s.size()) throw std::invalid_argument("empty polynomial");
    bool first = true;
    while (true) {
        skip();
        if (i == s.size()) break;
        int sign = 1;
        if (s[i] == '+' || s[i] == '-') {
            sign = s[i] == '-' ? -1 : 1;
            ++i;
            skip();
        } else if (!first) {
            throw std::invalid_argument("expected + or - in polynomial: " + s);
        }
        first = false;
        mpz_class c = 1;
        bool have_coeff = false;
        std::string digits = read_int(false);
        if (!digits.empty()) {
            c = mpz_class(digits);
            have_coeff = true;
        }
        skip();
        if (i < s.size() && s[i] == '*') {
            ++i;
            skip();
        }
        int e = 0;
        if (i < s.size() && s[i] == 'q') {
            ++i;
            e = 1;
            skip();
            if (i < s.size() && s[i] == '^') {
                ++i;
                skip();
                bool brace = i < s.size() && (s[i] == '{' || s[i] == '(');
                if (brace) ++i;
                std::string ex = read_int(true);
                if (ex.empty() || ex == "-" || ex == "+") throw std::invalid_argument("bad exponent: " + s);
                e = std::stoi(ex);
                if (brace) {
                    if (i >= s.size() || (s[i] != '}' && s[i] != ')')) throw std::invalid_argument("unclosed exponent: " + s);
                    ++i;
                }
            }
        } else if (!have_coeff) {
            throw std::invalid_argument("bad polynomial term: " + s);
        }
        r.add_term(e, sign * c);
    }
    return r;
}

namespace {

using Dense = std::vector<mpz_class>;

Dense to_dense(const LaurentPoly& p) {
    int lo = p.min_exp(), hi = p.max_exp();
    Dense d(static_cast<size_t>(hi - lo + 1));
    for (const auto& [e, c] : p.terms()) d[static_cast<size_t>(e - lo)] = c;
    return d;
}

void trim(Dense& d) {
    while (!d.empty() && d.back() == 0) d.pop_back();
}

mpz_class content(const Dense& d) {
    mpz_class g = 0;
    for (const auto& c : d) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    return g;
}

void make_primitive(Dense& d) {
    mpz_class g = content(d);
    if (g == 0) return;
    if (d.back() < 0) g = -g;
    for (auto& c : d) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
}

Dense pseudo_rem(Dense a, const Dense& b) {
    const size_t db = b.size() - 1;
    while (!a.empty() && a.size() - 1 >= db) {
        mpz_class la = a.back();
        const mpz_class& lb = b.back();
        size_t sh = a.size() - 1 - db;
        for (auto& c : a) c *= lb;
        for (size_t k = 0; k <= db; ++k) a[k + sh] -= la * b[k];
        trim(a);
    }
    return a;
}

}  // namespace

LaurentPoly poly_gcd(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.is_zero() && b.is_zero()) return LaurentPoly(0);
    if (a.is_zero()) return b.shifted(-b.min_exp());
    if (b.is_zero()) return a.shifted(-a.min_exp());
    Dense x = to_dense(a), y = to_dense(b);
    mpz_class cg;
    mpz_gcd(cg.get_mpz_t(), content(x).get_mpz_t(), content(y).get_mpz_t());
    make_primitive(x);
    make_primitive(y);
    if (x.size() < y.size()) std::swap(x, y);
    while (!y.empty()) {
        Dense r = pseudo_rem(x, y);
        x = std::move(y);
        make_primitive(r);
        y = std::move(r);
    }
    make_primitive(x);
    LaurentPoly out;
    for (size_t k = 0; k < x.size(); ++k) out.add_term(static_cast<int>(k), cg * x[k]);
    return out;
}

RatFun::RatFun(const LaurentPoly& n, const LaurentPoly& d) : num_(n), den_(d) {
    if (den_.is_zero()) throw std::domain_error("zero denominator");
    canonicalize();
}

void RatFun::canonicalize() {
    if (num_.is_zero()) {
        den_ = LaurentPoly(1);
        return;
    }
    if (den_.terms().size() > 1) {
        LaurentPoly gg = poly_gcd(num_, den_);
        if (!(gg.terms().size() == 1 && gg.terms().begin()->second == 1)) {
            num_ = num_.exact_div(gg);
            den_ = den_.exact_div(gg);
        }
    } else {
        // monomial denominator: only integer content matters
        mpz_class g = 0;
        for (const auto& [e, c] : num_.terms()) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        mpz_class dc = den_.terms().begin()->second;
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), dc.get_mpz_t());
        if (g != 1) {
            num_ = num_.exact_div(LaurentPoly::monomial(0, g));
            den_ = den_.exact_div(LaurentPoly::monomial(0, g));
        }
    }
    int lo = den_.min_exp();
    if (lo != 0) {
        num_ = num_.shifted(-lo);
        den_ = den_.shifted(-lo);
    }
    if (den_.coeff(0) < 0) {
        num_ = -num_;
        den_ = -den_;
    }
}

RatFun& RatFun::operator+=(const RatFun& o) {
    if (o.is_zero()) return *this;
    if (is_zero()) return *this = o;
    if (den_ == o.den_) {
        num_ += o.num_;
    } else {
        num_ = num_ * o.den_ + o.num_ * den_;
        den_ = den_ * o.den_;
    }
    canonicalize();
    return *this;
}

RatFun& RatFun::operator-=(const RatFun& o) { return *this += -o; }

RatFun& RatFun::operator*=(const RatFun& o) {
    num_ *= o.num_;
    den_ *= o.den_;
    canonicalize();
    return *this;
}

RatFun& RatFun::operator/=(const RatFun& o) { return *this *= o.inverse(); }

RatFun RatFun::operator-() const {
    RatFun r = *this;
    r.num_ = -r.num_;
    return r;
}

RatFun RatFun::inverse() const {
    if (is_zero()) throw std::domain_error("inverse of zero");
    return RatFun(den_, num_);
}

bool RatFun::cross_equal(const RatFun& o) const { return num_ * o.den_ == o.num_ * den_; }

RatFun RatFun::bar() const { return RatFun(num_.bar(), den_.bar()); }

std::map<int, mpz_class> RatFun::series(int hi) const {
    std::map<int, mpz_class> out;
    if (is_zero()) return out;
    const mpz_class c0 = den_.coeff(0);
    if (c0 != 1 && c0 != -1) throw std::domain_error("series needs a unit constant term");
    int lo = num_.min_exp();
    // solve den * s = num degree by degree
    std::map<int, mpz_class> s;
    for (int e = lo; e <= hi; ++e) {
        mpz_class v = num_.coeff(e);
        for (const auto& [de, dc] : den_.terms()) {
            if (de == 0) continue;
            auto it = s.find(e - de);
            if (it != s.end()) v -= dc * it->second;
        }
        v *= c0;
        if (v != 0) s[e] = v;
    }
    return s;
}

std::string RatFun::str() const {
    if (den_ == LaurentPoly(1)) return num_.str();
    return "(" + num_.str() + ")/(" + den_.str() + ")";
}

LaurentPoly qint(long a) {
    LaurentPoly r;
    long s = a < 0 ? -1 : 1;
    long m = a < 0 ? -a : a;
    for (long k = 0; k < m; ++k) r.add_term(static_cast<int>(m - 1 - 2 * k), s);
    return r;
}

LaurentPoly qfact(long a) {
    if (a < 0) throw std::domain_error("qfact of negative integer");
    LaurentPoly r(1);
    for (long k = 2; k <= a; ++k) r *= qint(k);
    return r;
}

LaurentPoly qbin(long m, long j) {
    if (j < 0) return LaurentPoly(0);
    LaurentPoly top(1);
    for (long i = 0; i < j; ++i) top *= qint(m - i);
    return top.exact_div(qfact(j));
}

RatFun g(long a) {
    if (a < 0) throw std::domain_error("g of negative integer");
    LaurentPoly d(1);
    for (long j = 1; j <= a; ++j) d *= LaurentPoly(1) - LaurentPoly::q(static_cast<int>(2 * j));
    return RatFun(LaurentPoly(1), d);
}

RatFun g_recursion_rhs(long m, long j, long exp_param) {
    LaurentPoly f = LaurentPoly::q(static_cast<int>(-2 * exp_param)) - LaurentPoly(1);
    return RatFun(f.shifted(static_cast<int>(m + 1 + j)) * qbin(m - 1, j)) / g(j);
}

std::vector<IdentityReport> check_qidentities(long amax, long jmax) {
    IdentityReport r88{"pascal-minus", true, {}}, r89{"pascal-plus", true, {}}, r90{"g-step", true, {}},
        r91{"g-step-lowered", true, {}};
    for (long a = 0; a <= amax; ++a)
        for (long j = 1; j <= jmax; ++j) {
            LaurentPoly lhs = qbin(a + 1, j);
            auto a1 = static_cast<int>(a), j1 = static_cast<int>(j);
            if (r88.ok && lhs != qbin(a, j).shifted(-j1) + qbin(a, j - 1).shifted(a1 - j1 + 1))
                r88 = {r88.name, false, {a, j}};
            if (r89.ok && lhs != qbin(a, j).shifted(j1) + qbin(a, j - 1).shifted(-a1 + j1 - 1))
                r89 = {r89.name, false, {a, j}};
        }
    for (long m = -amax; m <= amax; ++m)
        for (long j = 0; j <= jmax; ++j) {
            RatFun lhs = RatFun(qbin(m, j + 1)) / g(j + 1);
            LaurentPoly f = LaurentPoly::q(static_cast<int>(2 * (j - m))) - LaurentPoly(1);
            RatFun rhs90 = RatFun(f.shifted(static_cast<int>(m + 1)) * qbin(m, j)) / g(j);
            if (r90.ok && lhs != rhs90) r90 = {r90.name, false, {m, j}};
            if (r91.ok && lhs != g_recursion_rhs(m, j, m)) r91 = {r91.name, false, {m, j}};
        }
    return {r88, r89, r90, r91};
}

}  // namespace catsl2
