// SPDX-License-Identifier: Apache-2.0
#include "catsl2/nilhecke.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace catsl2 {

// ---- permutations -----------------------------------------------------------

Perm::Perm(std::vector<int> w) : w_(std::move(w)) {
    std::vector<int> s = w_;
    std::sort(s.begin(), s.end());
    for (size_t i = 0; i < s.size(); ++i)
        if (s[i] != static_cast<int>(i) + 1) throw std::invalid_argument("not a permutation");
}

Perm Perm::identity(int a) {
    std::vector<int> w(static_cast<size_t>(a));
    std::iota(w.begin(), w.end(), 1);
    return Perm(w);
}

Perm Perm::longest(int a) {
    std::vector<int> w(static_cast<size_t>(a));
    for (int i = 0; i < a; ++i) w[static_cast<size_t>(i)] = a - i;
    return Perm(w);
}

Perm Perm::simple(int a, int i) {
    if (i < 1 || i >= a) throw std::invalid_argument("simple reflection index out of range");
    Perm p = identity(a);
    std::swap(p.w_[static_cast<size_t>(i - 1)], p.w_[static_cast<size_t>(i)]);
    return p;
}

Perm Perm::parse(const std::string& s) {
    std::vector<int> w;
    bool sep = s.find_first_of(", ") != std::string::npos;
    if (sep) {
        std::string tok;
        std::istringstream is(s);
        while (std::getline(is, tok, s.find(',') != std::string::npos ? ',' : ' '))
            if (!tok.empty()) w.push_back(std::stoi(tok));
    } else {
        for (char c : s) {
            if (!std::isdigit(static_cast<unsigned char>(c))) throw std::invalid_argument("bad permutation: " + s);
            w.push_back(c - '0');
        }
    }
    return Perm(w);
}

std::vector<Perm> Perm::all(int a) {
    std::vector<Perm> out;
    std::vector<int> w(static_cast<size_t>(a));
    std::iota(w.begin(), w.end(), 1);
    do out.emplace_back(w);
    while (std::next_permutation(w.begin(), w.end()));
    std::stable_sort(out.begin(), out.end(), [](const Perm& x, const Perm& y) { return x.length() < y.length(); });
    return out;
}

int Perm::length() const {
    int l = 0;
    for (size_t i = 0; i < w_.size(); ++i)
        for (size_t j = i + 1; j < w_.size(); ++j)
            if (w_[i] > w_[j]) ++l;
    return l;
}

Perm Perm::inverse() const {
    std::vector<int> v(w_.size());
    for (size_t i = 0; i < w_.size(); ++i) v[static_cast<size_t>(w_[i] - 1)] = static_cast<int>(i) + 1;
    return Perm(v);
}

Perm Perm::operator*(const Perm& o) const {
    if (o.size() != size()) throw std::invalid_argument("composing permutations of different size");
    std::vector<int> v(w_.size());
    for (size_t i = 0; i < w_.size(); ++i) v[i] = w_[static_cast<size_t>(o.w_[i] - 1)];
    return Perm(v);
}

std::vector<int> Perm::reduced_word() const {
    std::vector<int> word;
    Perm w = *this;
    while (w.length() > 0) {
        Perm inv = w.inverse();
        for (int i = 1; i < size(); ++i) {
            if (inv(i) > inv(i + 1)) {
                word.push_back(i);
                w = simple(size(), i) * w;
                break;
            }
        }
    }
    return word;
}

std::string Perm::str() const {
    std::string s;
    for (int v : w_) s += std::to_string(v);
    return s;
}

// ---- polynomials -------------------------------------------------------------

IntPoly IntPoly::constant(int a, const mpz_class& c) {
    IntPoly p(a);
    p.add(Mono(static_cast<size_t>(a), 0), c);
    return p;
}

IntPoly IntPoly::var(int a, int i) {
    Mono m(static_cast<size_t>(a), 0);
    m.at(static_cast<size_t>(i - 1)) = 1;
    return monomial(m);
}

IntPoly IntPoly::monomial(const Mono& m, const mpz_class& c) {
    IntPoly p(static_cast<int>(m.size()));
    p.add(m, c);
    return p;
}

IntPoly IntPoly::staircase(int a) {
    Mono m(static_cast<size_t>(a));
    for (int i = 0; i < a; ++i) m[static_cast<size_t>(i)] = a - 1 - i;
    return monomial(m);
}

void IntPoly::add(const Mono& m, const mpz_class& c) {
    if (c == 0) return;
    auto [it, fresh] = t_.try_emplace(m, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) t_.erase(it);
    }
}

bool IntPoly::homogeneous(int* deg) const {
    int d = -1;
    for (const auto& [m, c] : t_) {
        int s = 2 * std::accumulate(m.begin(), m.end(), 0);
        if (d >= 0 && s != d) return false;
        d = s;
    }
    if (deg) *deg = d < 0 ? 0 : d;
    return true;
}

IntPoly& IntPoly::operator+=(const IntPoly& o) {
    if (a_ == 0) a_ = o.a_;
    for (const auto& [m, c] : o.t_) add(m, c);
    return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& o) {
    if (a_ == 0) a_ = o.a_;
    for (const auto& [m, c] : o.t_) add(m, -c);
    return *this;
}

IntPoly operator*(const IntPoly& x, const IntPoly& y) {
    IntPoly r(std::max(x.a_, y.a_));
    for (const auto& [mx, cx] : x.t_)
        for (const auto& [my, cy] : y.t_) {
            IntPoly::Mono m(mx.size());
            for (size_t i = 0; i < m.size(); ++i) m[i] = mx[i] + my[i];
            r.add(m, cx * cy);
        }
    return r;
}

IntPoly IntPoly::scaled(const mpz_class& c) const {
    IntPoly r(a_);
    for (const auto& [m, v] : t_) r.add(m, v * c);
    return r;
}

IntPoly IntPoly::swap_vars(int i) const {
    IntPoly r(a_);
    for (const auto& [m0, c] : t_) {
        auto m = m0;
        std::swap(m[static_cast<size_t>(i - 1)], m[static_cast<size_t>(i)]);
        r.add(m, c);
    }
    return r;
}

bool IntPoly::symmetric() const {
    for (int i = 1; i < a_; ++i)
        if (swap_vars(i) != *this) return false;
    return true;
}

std::string IntPoly::str() const {
    if (t_.empty()) return "0";
    std::string s;
    // graded reverse order: higher degree first
    std::vector<std::pair<Mono, mpz_class>> v(t_.rbegin(), t_.rend());
    std::stable_sort(v.begin(), v.end(), [](const auto& x, const auto& y) {
        return std::accumulate(x.first.begin(), x.first.end(), 0) > std::accumulate(y.first.begin(), y.first.end(), 0);
    });
    for (const auto& [m, c] : v) {
        mpz_class a = abs(c);
        if (s.empty()) s += c < 0 ? "-" : "";
        else s += c < 0 ? " - " : " + ";
        std::string mono;
        for (size_t i = 0; i < m.size(); ++i) {
            if (m[i] == 0) continue;
            if (!mono.empty()) mono += " ";
            mono += "x" + std::to_string(i + 1);
            if (m[i] > 1) mono += "^" + std::to_string(m[i]);
        }
        if (mono.empty()) s += a.get_str();
        else if (a == 1) s += mono;
        else s += a.get_str() + " " + mono;
    }
    return s;
}

IntPoly divided_difference(int i, const IntPoly& p) {
    if (i < 1 || i >= p.nvars()) throw std::invalid_argument("divided difference index out of range");
    IntPoly r(p.nvars());
    const auto a = static_cast<size_t>(i - 1), b = static_cast<size_t>(i);
    for (const auto& [m, c] : p.terms()) {
        int u = m[a], v = m[b];
        if (u == v) continue;
        // (x^u y^v - x^v y^u)/(x - y) = sign * x^lo y^lo * h_{hi-lo-1}(x, y)
        int lo = std::min(u, v), d = std::abs(u - v);
        mpz_class sc = u > v ? c : mpz_class(-c);
        IntPoly::Mono mm = m;
        for (int k = 0; k < d; ++k) {
            mm[a] = lo + d - 1 - k;
            mm[b] = lo + k;
            r.add(mm, sc);
        }
    }
    return r;
}

IntPoly divided_difference(const Perm& w, const IntPoly& p) {
    auto word = w.reduced_word();
    IntPoly r = p;
    for (auto it = word.rbegin(); it != word.rend(); ++it) r = divided_difference(*it, r);
    return r;
}

IntPoly schubert(const Perm& w) {
    const int a = w.size();
    return divided_difference(w.inverse() * Perm::longest(a), IntPoly::staircase(a));
}

// ---- nilHecke ring -------------------------------------------------------------

NHElement NHElement::one(int a) { return poly_times_u(IntPoly::constant(a, 1), Perm::identity(a)); }
NHElement NHElement::chi(int a, int i) { return poly_times_u(IntPoly::var(a, i), Perm::identity(a)); }
NHElement NHElement::u(int a, int i) { return poly_times_u(IntPoly::constant(a, 1), Perm::simple(a, i)); }
NHElement NHElement::u(const Perm& w) { return poly_times_u(IntPoly::constant(w.size(), 1), w); }

NHElement NHElement::poly_times_u(const IntPoly& p, const Perm& w) {
    NHElement e(w.size());
    e.add(w, p);
    return e;
}

void NHElement::add(const Perm& w, const IntPoly& p) {
    if (p.is_zero()) return;
    auto [it, fresh] = t_.try_emplace(w, p);
    if (!fresh) {
        it->second += p;
        if (it->second.is_zero()) t_.erase(it);
    }
}

NHElement& NHElement::operator+=(const NHElement& o) {
    if (a_ == 0) a_ = o.a_;
    for (const auto& [w, p] : o.t_) add(w, p);
    return *this;
}

NHElement& NHElement::operator-=(const NHElement& o) {
    if (a_ == 0) a_ = o.a_;
    for (const auto& [w, p] : o.t_) add(w, p.scaled(-1));
    return *this;
}

namespace {

bool lengths_add(const Perm& x, const Perm& y, Perm& out) {
    out = x * y;
    return out.length() == x.length() + y.length();
}

}  // namespace

NHElement nh_mul(const NHElement& x, const NHElement& y) {
    const int a = std::max(x.rank(), y.rank());
    NHElement r(a);
    for (const auto& [w, p] : x.terms()) {
        auto word = w.reduced_word();
        for (const auto& [v, q] : y.terms()) {
            // u_w q = sum over v' of R_{v'} u_{v'}
            std::map<Perm, IntPoly> st{{Perm::identity(a), q}};
            for (auto it = word.rbegin(); it != word.rend(); ++it) {
                std::map<Perm, IntPoly> nx;
                const int i = *it;
                const Perm si = Perm::simple(a, i);
                for (const auto& [vp, R] : st) {
                    Perm sv;
                    if (lengths_add(si, vp, sv)) {
                        IntPoly s = R.swap_vars(i);
                        if (!s.is_zero()) nx[sv] += s;
                    }
                    IntPoly d = divided_difference(i, R);
                    if (!d.is_zero()) nx[vp] += d;
                }
                st.clear();
                for (auto& [k, P] : nx)
                    if (!P.is_zero()) st.emplace(k, std::move(P));
            }
            for (const auto& [vp, R] : st) {
                Perm out;
                if (lengths_add(vp, v, out)) r.add(out, p * R);
            }
        }
    }
    return r;
}

IntPoly act(const NHElement& e, const IntPoly& p) {
    IntPoly r(p.nvars());
    for (const auto& [w, c] : e.terms()) r += c * divided_difference(w, p);
    return r;
}

std::vector<IntPoly> schubert_coordinates(const IntPoly& p) {
    const int a = p.nvars();
    auto perms = Perm::all(a);
    std::vector<IntPoly> coords(perms.size(), IntPoly(a));
    IntPoly rem = p;
    for (size_t k = perms.size(); k-- > 0;) {
        IntPoly c = divided_difference(perms[k], rem);
        if (!c.symmetric()) throw std::logic_error("Schubert coefficient not symmetric");
        coords[k] = c;
        rem -= c * schubert(perms[k]);
    }
    if (!rem.is_zero()) throw std::logic_error("Schubert decomposition left a remainder");
    return coords;
}

std::vector<std::vector<IntPoly>> phi_matrix(const NHElement& e) {
    const int a = e.rank();
    auto perms = Perm::all(a);
    const size_t n = perms.size();
    std::vector<std::vector<IntPoly>> m(n, std::vector<IntPoly>(n, IntPoly(a)));
    for (size_t col = 0; col < n; ++col) {
        auto c = schubert_coordinates(act(e, schubert(perms[col])));
        for (size_t row = 0; row < n; ++row) m[row][col] = c[row];
    }
    return m;
}

std::vector<std::vector<IntPoly>> matmul(const std::vector<std::vector<IntPoly>>& x,
                                         const std::vector<std::vector<IntPoly>>& y) {
    const size_t n = x.size();
    std::vector<std::vector<IntPoly>> r(n, std::vector<IntPoly>(y.empty() ? 0 : y[0].size()));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < r[i].size(); ++j)
            for (size_t k = 0; k < y.size(); ++k) r[i][j] += x[i][k] * y[k][j];
    return r;
}

NHElement e_w0(int a) { return NHElement::poly_times_u(IntPoly::staircase(a), Perm::longest(a)); }

bool is_idempotent(const NHElement& e) { return nh_mul(e, e) == e; }

RankReport graded_rank_checks(int a) {
    RankReport r;
    for (const auto& w : Perm::all(a)) {
        r.nilcoxeter_census += LaurentPoly::q(-2 * w.length());
        r.schubert_census += LaurentPoly::q(2 * w.length());
    }
    r.nilcoxeter_expected = qfact(a).shifted(-a * (a - 1) / 2);
    r.schubert_expected = qfact(a).shifted(a * (a - 1) / 2);
    RatFun base(LaurentPoly(1), LaurentPoly(1) - LaurentPoly::q(2));
    RatFun s = r.nilcoxeter_census;
    for (int i = 0; i < a; ++i) s *= base;
    r.nilhecke_rank = s;
    return r;
}

// ---- text form -------------------------------------------------------------------

std::string NHElement::str() const {
    if (t_.empty()) return "0";
    std::string s;
    for (const auto& [w, p] : t_) {
        if (!s.empty()) s += " + ";
        bool id = w.length() == 0;
        std::string ps = p.str();
        if (id) s += p.terms().size() > 1 ? "(" + ps + ")" : ps;
        else if (ps == "1") s += "u[" + w.str() + "]";
        else s += "(" + ps + ") u[" + w.str() + "]";
    }
    return s;
}

namespace {

struct NHParser {
    int a;
    const std::string& s;
    size_t i = 0;
    void ws() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    [[noreturn]] void fail(const std::string& m) const {
        throw std::invalid_argument("nilHecke parse error at " + std::to_string(i) + ": " + m);
    }
    int num() {
        size_t st = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (st == i) fail("number expected");
        return std::stoi(s.substr(st, i - st));
    }
    int power() {
        if (i < s.size() && s[i] == '^') {
            ++i;
            return num();
        }
        return 1;
    }
    NHElement expr() {
        NHElement r(a);
        bool first = true;
        while (true) {
            ws();
            int sign = 1;
            if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
                sign = s[i] == '-' ? -1 : 1;
                ++i;
            } else if (!first) {
                break;
            }
            first = false;
            NHElement t = term();
            if (sign < 0) t = nh_mul(NHElement::poly_times_u(IntPoly::constant(a, -1), Perm::identity(a)), t);
            r += t;
        }
        return r;
    }
    NHElement term() {
        NHElement t = factor();
        while (true) {
            ws();
            if (i < s.size() && s[i] == '*') {
                ++i;
                ws();
            }
            if (i >= s.size() || s[i] == '+' || s[i] == '-' || s[i] == ')') break;
            t = nh_mul(t, factor());
        }
        return t;
    }
    NHElement factor() {
        ws();
        if (i >= s.size()) fail("factor expected");
        char c = s[i];
        if (c == '(') {
            ++i;
            NHElement e = expr();
            ws();
            if (i >= s.size() || s[i] != ')') fail("')' expected");
            ++i;
            return e;
        }
        if (std::isdigit(static_cast<unsigned char>(c)))
            return NHElement::poly_times_u(IntPoly::constant(a, num()), Perm::identity(a));
        if (c == 'x' || s.compare(i, 3, "chi") == 0) {
            i += c == 'x' ? 1 : 3;
            if (i < s.size() && s[i] == '_') ++i;
            int k = num();
            if (k < 1 || k > a) fail("variable index out of range");
            int e = power();
            IntPoly p = IntPoly::constant(a, 1);
            for (int j = 0; j < e; ++j) p = p * IntPoly::var(a, k);
            return NHElement::poly_times_u(p, Perm::identity(a));
        }
        if (c == 'u') {
            ++i;
            if (i < s.size() && s[i] == '[') {
                size_t close = s.find(']', i);
                if (close == std::string::npos) fail("']' expected");
                Perm w = Perm::parse(s.substr(i + 1, close - i - 1));
                if (w.size() != a) fail("permutation size mismatch");
                i = close + 1;
                return NHElement::u(w);
            }
            if (i < s.size() && s[i] == '_') ++i;
            int k = num();
            if (k < 1 || k >= a) fail("u index out of range");
            return NHElement::u(a, k);
        }
        fail(std::string("unexpected '") + c + "'");
    }
};

}  // namespace

NHElement NHElement::parse(int a, const std::string& s) {
    NHParser p{a, s};
    NHElement e = p.expr();
    p.ws();
    if (p.i != s.size()) p.fail("trailing input");
    return e;
}

}  // namespace catsl2
