// SPDX-License-Identifier: Apache-2.0
#include "catsl2/flag.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace catsl2 {

std::string partition_str(const Partition& p) {
    std::string s = "[";
    for (size_t i = 0; i < p.size(); ++i) s += (i ? "," : "") + std::to_string(p[i]);
    return s + "]";
}

Partition conjugate(const Partition& p) {
    Partition c;
    if (p.empty()) return c;
    for (int j = 1; j <= p[0]; ++j) {
        int cnt = 0;
        for (int v : p)
            if (v >= j) ++cnt;
        c.push_back(cnt);
    }
    return c;
}

namespace {

Partition strip_zeros(Partition p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
    return p;
}

Partition padded(const Partition& p, int k) {
    Partition q = p;
    q.resize(static_cast<size_t>(k), 0);
    return q;
}

}  // namespace

// ---- Grassmannian ring -------------------------------------------------------------

const GrRing& GrRing::get(int k, int N) {
    static std::mutex mu;
    static std::map<std::pair<int, int>, std::unique_ptr<GrRing>> cache;
    if (k < 0 || k > N) throw std::invalid_argument("Grassmannian index out of range");
    std::lock_guard<std::mutex> lock(mu);
    auto& slot = cache[{k, N}];
    if (!slot) slot.reset(new GrRing(k, N));
    return *slot;
}

int GrRing::index(const Partition& p) const {
    auto it = idx_.find(strip_zeros(p));
    return it == idx_.end() ? -1 : it->second;
}

std::vector<int> GrRing::pieri_e(const Partition& lam, int j) const {
    std::vector<int> out;
    if (j < 0 || j > k_) return out;
    Partition l = padded(lam, k_);
    for (unsigned mask = 0; mask < (1u << k_); ++mask) {
        if (__builtin_popcount(mask) != j) continue;
        Partition m = l;
        bool ok = true;
        for (int i = 0; i < k_; ++i)
            if (mask & (1u << i)) ++m[static_cast<size_t>(i)];
        for (int i = 0; i < k_ && ok; ++i) {
            if (m[static_cast<size_t>(i)] > N_ - k_) ok = false;
            if (i > 0 && m[static_cast<size_t>(i)] > m[static_cast<size_t>(i - 1)]) ok = false;
        }
        if (ok) out.push_back(index(m));
    }
    return out;
}

std::vector<int> GrRing::pieri_h(const Partition& lam, int l) const {
    std::vector<int> out;
    if (l < 0) return out;
    Partition lp = padded(lam, k_);
    Partition m(lp.size());
    std::function<void(size_t, int)> rec = [&](size_t i, int left) {
        if (i == lp.size()) {
            if (left == 0) out.push_back(index(m));
            return;
        }
        int hi = i == 0 ? N_ - k_ : lp[i - 1];
        for (int v = lp[i]; v <= hi && v - lp[i] <= left; ++v) {
            m[i] = v;
            rec(i + 1, left - (v - lp[i]));
        }
    };
    if (k_ == 0) {
        if (l == 0) out.push_back(0);
        return out;
    }
    rec(0, l);
    return out;
}

GrRing::GrRing(int k, int N) : k_(k), N_(N) {
    Partition cur(static_cast<size_t>(k), 0);
    std::function<void(size_t, int)> rec = [&](size_t i, int hi) {
        if (i == cur.size()) {
            basis_.push_back(strip_zeros(cur));
            return;
        }
        for (int v = 0; v <= hi; ++v) {
            cur[i] = v;
            rec(i + 1, v);
        }
    };
    rec(0, N - k);
    std::stable_sort(basis_.begin(), basis_.end(), [](const Partition& a, const Partition& b) {
        int sa = std::accumulate(a.begin(), a.end(), 0), sb = std::accumulate(b.begin(), b.end(), 0);
        if (sa != sb) return sa < sb;
        return a > b;
    });
    for (size_t i = 0; i < basis_.size(); ++i) {
        idx_[basis_[i]] = static_cast<int>(i);
        wt_.push_back(std::accumulate(basis_[i].begin(), basis_[i].end(), 0));
    }
}

const std::map<std::vector<int>, long>& GrRing::e_expansion(size_t mu) const {
    {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = emono_.find(mu);
        if (it != emono_.end()) return it->second;
    }
    // dual Jacobi-Trudi: s_mu = det(e_{mu'_i - i + j}), expanded into e-monomials
    Partition c = conjugate(basis_[mu]);
    const size_t l = c.size();
    std::map<std::vector<int>, long> emono;
    std::vector<size_t> p(l);
    std::iota(p.begin(), p.end(), 0);
    do {
        int sign = 1;
        for (size_t a = 0; a < l; ++a)
            for (size_t b = a + 1; b < l; ++b)
                if (p[a] > p[b]) sign = -sign;
        std::vector<int> m;
        bool dead = false;
        for (size_t i = 0; i < l; ++i) {
            int j = c[i] - static_cast<int>(i) + static_cast<int>(p[i]);
            if (j < 0 || j > k_) {
                dead = true;
                break;
            }
            if (j > 0) m.push_back(j);
        }
        if (dead) continue;
        std::sort(m.begin(), m.end());
        emono[m] += sign;
    } while (std::next_permutation(p.begin(), p.end()));
    for (auto it = emono.begin(); it != emono.end();) it = it->second == 0 ? emono.erase(it) : std::next(it);
    std::lock_guard<std::mutex> lock(mu_);
    return emono_.emplace(mu, std::move(emono)).first->second;
}

const std::vector<std::pair<int, long>>& GrRing::product(size_t i, size_t j) const {
    if (wt_[i] > wt_[j] || (wt_[i] == wt_[j] && i > j)) std::swap(i, j);
    {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = products_.find({i, j});
        if (it != products_.end()) return it->second;
    }
    std::map<int, long> acc;
    for (const auto& [m, coef] : e_expansion(i)) {
        std::map<int, long> v{{static_cast<int>(j), coef}};
        for (int e : m) {
            std::map<int, long> w;
            for (const auto& [t, c] : v)
                for (int u : pieri_e(basis_[static_cast<size_t>(t)], e)) w[u] += c;
            v.swap(w);
        }
        for (const auto& [t, c] : v) acc[t] += c;
    }
    Sparse out;
    for (const auto& [t, c] : acc)
        if (c != 0) out.emplace_back(t, c);
    std::lock_guard<std::mutex> lock(mu_);
    return products_.emplace(std::make_pair(i, j), std::move(out)).first->second;
}

// ---- elements ----------------------------------------------------------------------------

GrElement::GrElement(int k, int N) : k_(k), N_(N), c_(GrRing::get(k, N).dim()) {}

GrElement GrElement::one(int k, int N) { return schur(k, N, {}); }

GrElement GrElement::schur(int k, int N, const Partition& p) {
    GrElement e(k, N);
    int i = e.ring().index(p);
    if (i >= 0) e.c_[static_cast<size_t>(i)] = 1;
    return e;
}

GrElement GrElement::x(int k, int N, int j) {
    if (j < 0 || j > k) return GrElement(k, N);
    return schur(k, N, Partition(static_cast<size_t>(j), 1));
}

GrElement GrElement::y(int k, int N, int l) {
    if (l < 0 || l > N - k) return GrElement(k, N);
    GrElement e = schur(k, N, l ? Partition{l} : Partition{});
    if (l % 2) e *= -1;
    return e;
}

std::map<Partition, mpq_class> GrElement::terms() const {
    std::map<Partition, mpq_class> m;
    const auto& b = ring().basis();
    for (size_t i = 0; i < c_.size(); ++i)
        if (c_[i] != 0) m[b[i]] = c_[i];
    return m;
}

bool GrElement::is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](const mpq_class& v) { return v == 0; });
}

bool GrElement::homogeneous(int* deg) const {
    int d = -1;
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        int w = 2 * ring().weight(i);
        if (d >= 0 && d != w) return false;
        d = w;
    }
    if (deg) *deg = d < 0 ? 0 : d;
    return true;
}

GrElement& GrElement::operator+=(const GrElement& o) {
    if (c_.empty()) return *this = o;
    if (o.k_ != k_ || o.N_ != N_) throw std::invalid_argument("adding classes of different Grassmannians");
    for (size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
}

GrElement& GrElement::operator-=(const GrElement& o) {
    GrElement t = o;
    t *= -1;
    return *this += t;
}

GrElement& GrElement::operator*=(const mpq_class& s) {
    for (auto& v : c_) v *= s;
    return *this;
}

std::string GrElement::str() const {
    std::string s;
    for (const auto& [p, c] : terms()) {
        if (!s.empty()) s += c < 0 ? " - " : " + ";
        else if (c < 0) s += "-";
        mpq_class a = abs(c);
        std::string sp = "s" + partition_str(p);
        if (p.empty()) s += a.get_str();
        else s += (a == 1 ? "" : a.get_str() + " ") + sp;
    }
    return s.empty() ? "0" : s;
}

namespace {

void ring_mul_into(const GrRing& R, const QVec& a, const QVec& b, QVec& out) {
    std::vector<size_t> sa, sb;
    for (size_t i = 0; i < a.size(); ++i)
        if (sgn(a[i]) != 0) sa.push_back(i);
    for (size_t j = 0; j < b.size(); ++j)
        if (sgn(b[j]) != 0) sb.push_back(j);
    for (size_t i : sa) {
        for (size_t j : sb) {
            mpq_class ab = a[i] * b[j];
            for (const auto& [t, c] : R.product(i, j)) out[static_cast<size_t>(t)] += ab * c;
        }
    }
}

}  // namespace

GrElement gr_mul(const GrElement& u, const GrElement& v) {
    if (u.k() != v.k() || u.N() != v.N()) throw std::invalid_argument("multiplying classes of different Grassmannians");
    GrElement r(u.k(), u.N());
    ring_mul_into(u.ring(), u.coeffs(), v.coeffs(), r.coeffs());
    return r;
}

namespace {

struct GrParser {
    int k, N;
    const std::string& s;
    size_t i = 0;
    void ws() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    [[noreturn]] void fail(const std::string& m) const {
        throw std::invalid_argument("class parse error at " + std::to_string(i) + ": " + m);
    }
    int num() {
        size_t st = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (st == i) fail("number expected");
        return std::stoi(s.substr(st, i - st));
    }
    GrElement expr() {
        GrElement r(k, N);
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
            GrElement t = term();
            t *= sign;
            r += t;
        }
        return r;
    }
    GrElement term() {
        GrElement t = factor();
        while (true) {
            ws();
            if (i < s.size() && s[i] == '*') {
                ++i;
                ws();
            }
            if (i >= s.size() || s[i] == '+' || s[i] == '-' || s[i] == ')') break;
            t = gr_mul(t, factor());
        }
        return t;
    }
    GrElement factor() {
        ws();
        if (i >= s.size()) fail("factor expected");
        GrElement base(k, N);
        char c = s[i];
        if (c == '(') {
            ++i;
            base = expr();
            ws();
            if (i >= s.size() || s[i] != ')') fail("')' expected");
            ++i;
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t st = i;
            while (i < s.size() && (std::isdigit(static_cast<unsigned char>(s[i])) || s[i] == '/')) ++i;
            base = GrElement::one(k, N);
            base *= mpq_class(s.substr(st, i - st));
        } else if (c == 'x' || c == 'y') {
            ++i;
            bool brace = false;
            if (i < s.size() && s[i] == '_') {
                ++i;
                if (i < s.size() && s[i] == '{') {
                    brace = true;
                    ++i;
                }
            }
            int j = num();
            if (brace) {
                if (i >= s.size() || s[i] != '}') fail("'}' expected");
                ++i;
            }
            base = c == 'x' ? GrElement::x(k, N, j) : GrElement::y(k, N, j);
        } else {
            fail(std::string("unknown symbol '") + c + "'");
        }
        ws();
        if (i < s.size() && s[i] == '^') {
            ++i;
            ws();
            int e = num();
            GrElement r = GrElement::one(k, N);
            for (int t = 0; t < e; ++t) r = gr_mul(r, base);
            return r;
        }
        return base;
    }
};

}  // namespace

GrElement gr_from_poly(int k, int N, const std::string& expr) {
    GrParser p{k, N, expr};
    GrElement e = p.expr();
    p.ws();
    if (p.i != expr.size()) p.fail("trailing input");
    return e;
}

LaurentPoly gr_graded_dim(int k, int N) {
    LaurentPoly p;
    const GrRing& R = GrRing::get(k, N);
    for (size_t i = 0; i < R.dim(); ++i) p += LaurentPoly::q(2 * R.weight(i));
    return p;
}

LaurentPoly gaussian_binomial_q2(int N, int k) {
    if (k < 0 || k > N) return LaurentPoly(0);
    if (k == 0 || k == N) return LaurentPoly(1);
    return gaussian_binomial_q2(N - 1, k - 1) + gaussian_binomial_q2(N - 1, k).shifted(2 * k);
}

// ---- signatures ----------------------------------------------------------------------------

int BimSignature::k_at(int region) const {
    int twice = n0 + N;
    int k = twice / 2;
    for (int r = 1; r <= region; ++r) k += strand(r) == 'E' ? 1 : -1;
    return k;
}

bool BimSignature::is_zero_object() const {
    if (!parity_ok()) return true;
    for (int r = 0; r <= strands(); ++r) {
        int k = k_at(r);
        if (k < 0 || k > N) return true;
    }
    return false;
}

int BimSignature::cap(int r) const {
    int k = k_at(r - 1);
    return strand(r) == 'E' ? N - k - 1 : k - 1;
}

int BimSignature::gamma_shift() const {
    int s = 0;
    for (int r = 1; r <= strands(); ++r) {
        int k = k_at(r - 1);
        s += strand(r) == 'E' ? 1 - N + k : 1 - k;
    }
    return s;
}

std::string BimSignature::str() const {
    return "{N=" + std::to_string(N) + ", n0=" + std::to_string(n0) + ", strands=\"" + pattern +
           "\", shift=" + std::to_string(shift) + "}";
}

// ---- bimodules -------------------------------------------------------------------------------

namespace {

void add_into(BimPoly& p, const Exps& e, const QVec& c) {
    auto [it, fresh] = p.try_emplace(e, c);
    if (!fresh)
        for (size_t i = 0; i < c.size(); ++i) it->second[i] += c[i];
}

void prune(BimPoly& p) {
    for (auto it = p.begin(); it != p.end();) {
        bool z = std::all_of(it->second.begin(), it->second.end(), [](const mpq_class& v) { return v == 0; });
        it = z ? p.erase(it) : std::next(it);
    }
}

BimPoly raw_mul(const GrRing& R, const BimPoly& a, const BimPoly& b) {
    BimPoly r;
    for (const auto& [ea, ca] : a)
        for (const auto& [eb, cb] : b) {
            Exps e(ea.size());
            for (size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            QVec c(R.dim());
            ring_mul_into(R, ca, cb, c);
            add_into(r, e, c);
        }
    prune(r);
    return r;
}

BimPoly scaled(BimPoly p, const mpq_class& s) {
    for (auto& [e, c] : p)
        for (auto& v : c) v *= s;
    return p;
}

BimPoly xi_power(int m, int r, int e, size_t dim) {
    Exps ex(static_cast<size_t>(m), 0);
    ex[static_cast<size_t>(r - 1)] = e;
    QVec c(dim);
    c[0] = 1;
    return {{ex, c}};
}

BimPoly add(BimPoly a, const BimPoly& b) {
    for (const auto& [e, c] : b) add_into(a, e, c);
    prune(a);
    return a;
}

std::string sig_key(const BimSignature& s) {
    return std::to_string(s.N) + "|" + std::to_string(s.n0) + "|" + s.pattern + "|" + std::to_string(s.shift);
}

}  // namespace

BimodulePtr Bimodule::get(const BimSignature& sig) {
    static std::mutex mu;
    static std::map<std::string, BimodulePtr> cache;
    std::string key = sig_key(sig);
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    std::shared_ptr<Bimodule> b(new Bimodule(sig));
    b->build();
    std::lock_guard<std::mutex> lock(mu);
    return cache.emplace(key, b).first->second;
}

Bimodule::Bimodule(const BimSignature& sig) : sig_(sig) { zero_ = sig.is_zero_object(); }

void Bimodule::build() {
    if (zero_) return;
    const int m = strands(), N = sig_.N;
    const GrRing& R = base();
    const size_t dim = R.dim();
    for (int r = 1; r <= m; ++r) caps_.push_back(sig_.cap(r));
    xcls_.assign(static_cast<size_t>(m + 1), {});
    ycls_.assign(static_cast<size_t>(m + 1), {});
    top_.assign(static_cast<size_t>(m), {});
    const int k0 = sig_.k_at(0);
    Exps zero(static_cast<size_t>(m), 0);
    for (int j = 0; j <= k0; ++j) xcls_[0].push_back({{zero, GrElement::x(k0, N, j).coeffs()}});
    for (int l = 0; l <= N - k0; ++l) ycls_[0].push_back({{zero, GrElement::y(k0, N, l).coeffs()}});
    auto cls = [&](const std::vector<BimPoly>& v, int j) -> BimPoly {
        if (j < 0 || static_cast<size_t>(j) >= v.size()) return {};
        return v[static_cast<size_t>(j)];
    };
    for (int r = 1; r <= m; ++r) {
        const int kl = sig_.k_at(r - 1), kr = sig_.k_at(r);
        const bool E = sig_.strand(r) == 'E';
        const auto& xs = xcls_[static_cast<size_t>(r - 1)];
        const auto& ys = ycls_[static_cast<size_t>(r - 1)];
        // top power relation of xi_r in terms of the classes of region r-1
        const int top = E ? N - kl : kl;
        BimPoly rel;
        for (int j = 1; j <= top; ++j) {
            BimPoly c = E ? cls(ys, j) : cls(xs, j);
            BimPoly t = raw_mul(R, c, xi_power(m, r, top - j, dim));
            rel = add(rel, scaled(t, (j % 2 ? 1 : -1)));
        }
        top_[static_cast<size_t>(r - 1)] = rel;
        auto& xo = xcls_[static_cast<size_t>(r)];
        auto& yo = ycls_[static_cast<size_t>(r)];
        for (int j = 0; j <= kr; ++j) {
            BimPoly v;
            if (E) {
                v = add(cls(xs, j), raw_mul(R, xi_power(m, r, 1, dim), cls(xs, j - 1)));
            } else {
                for (int i = 0; i <= j; ++i)
                    v = add(v, scaled(raw_mul(R, xi_power(m, r, j - i, dim), cls(xs, i)), (j - i) % 2 ? -1 : 1));
            }
            xo.push_back(normalize(v));
        }
        for (int l = 0; l <= N - kr; ++l) {
            BimPoly v;
            if (E) {
                for (int i = 0; i <= l; ++i)
                    v = add(v, scaled(raw_mul(R, xi_power(m, r, l - i, dim), cls(ys, i)), (l - i) % 2 ? -1 : 1));
            } else {
                v = add(cls(ys, l), raw_mul(R, xi_power(m, r, 1, dim), cls(ys, l - 1)));
            }
            yo.push_back(normalize(v));
        }
    }
}

const BimPoly& Bimodule::region_class(int region, char which, int j) const {
    if (zero_ || region < 0 || region > strands()) return empty_;
    const auto& v = which == 'x' ? xcls_[static_cast<size_t>(region)] : ycls_[static_cast<size_t>(region)];
    if (j < 0 || static_cast<size_t>(j) >= v.size()) return empty_;
    return v[static_cast<size_t>(j)];
}

std::vector<Exps> Bimodule::generators() const {
    std::vector<Exps> out;
    if (zero_) return out;
    const int m = strands();
    Exps e(static_cast<size_t>(m), 0);
    std::function<void(int)> rec = [&](int r) {
        if (r == m) {
            out.push_back(e);
            return;
        }
        for (int v = 0; v <= caps_[static_cast<size_t>(r)]; ++v) {
            e[static_cast<size_t>(r)] = v;
            rec(r + 1);
        }
    };
    rec(0);
    return out;
}

BimPoly Bimodule::reduce_strand(const BimPoly& p, int r) const {
    const size_t ri = static_cast<size_t>(r - 1);
    const int cap = caps_[ri];
    const GrRing& R = base();
    BimPoly done, work = p;
    while (!work.empty()) {
        BimPoly next;
        for (const auto& [e, c] : work) {
            if (e[ri] <= cap) {
                add_into(done, e, c);
                continue;
            }
            Exps rest = e;
            rest[ri] -= cap + 1;
            BimPoly t = raw_mul(R, top_[ri], BimPoly{{rest, c}});
            for (const auto& [e2, c2] : t) add_into(next, e2, c2);
        }
        prune(next);
        work.swap(next);
    }
    prune(done);
    return done;
}

BimPoly Bimodule::normalize(BimPoly p) const {
    if (zero_) return {};
    prune(p);
    for (int r = strands(); r >= 1; --r) p = reduce_strand(p, r);
    return p;
}

BimPoly Bimodule::mul(const BimPoly& a, const BimPoly& b) const {
    if (zero_) return {};
    return normalize(raw_mul(base(), a, b));
}

// ---- elements of bimodules -------------------------------------------------------------------

BimElement BimElement::generator(BimodulePtr m, const Exps& e) {
    BimElement x(m);
    if (m->zero()) return x;
    QVec c(m->base().dim());
    c[0] = 1;
    x.t_ = m->normalize({{e, c}});
    return x;
}

bool BimElement::is_zero() const { return t_.empty(); }

bool BimElement::degree(int* deg) const {
    int d = 0;
    bool seen = false;
    const GrRing& R = mod_->base();
    const int off = sig().shift + sig().gamma_shift();
    for (const auto& [e, c] : t_) {
        int xs = 2 * std::accumulate(e.begin(), e.end(), 0);
        for (size_t i = 0; i < c.size(); ++i) {
            if (c[i] == 0) continue;
            int v = xs + 2 * R.weight(i) + off;
            if (seen && v != d) return false;
            d = v;
            seen = true;
        }
    }
    if (deg) *deg = d;
    return true;
}

BimElement& BimElement::operator+=(const BimElement& o) {
    if (!mod_) mod_ = o.mod_;
    if (o.mod_ && !(o.sig() == sig())) throw std::invalid_argument("adding elements of different bimodules");
    for (const auto& [e, c] : o.t_) add_into(t_, e, c);
    prune(t_);
    return *this;
}

BimElement& BimElement::operator-=(const BimElement& o) {
    BimElement t = o;
    t *= -1;
    return *this += t;
}

BimElement& BimElement::operator*=(const mpq_class& s) {
    t_ = scaled(t_, s);
    prune(t_);
    return *this;
}

bool BimElement::operator==(const BimElement& o) const {
    BimElement d = *this;
    d -= o;
    return d.is_zero();
}

std::string BimElement::str() const {
    if (t_.empty()) return "0";
    std::string s;
    const GrRing& R = mod_->base();
    for (const auto& [e, c] : t_) {
        if (!s.empty()) s += " + ";
        std::string xi = "xi";
        for (size_t i = 0; i < e.size(); ++i) xi += (i ? "," : "^(") + std::to_string(e[i]);
        xi += e.empty() ? "" : ")";
        GrElement g(R.k(), R.N());
        g.coeffs() = c;
        s += "(" + g.str() + ")" + (e.empty() ? "" : " " + xi);
    }
    return s;
}

// ---- elementary maps ---------------------------------------------------------------------------

BimElement bim_normalize(const BimElement& e) {
    BimElement r(e.module());
    r.terms() = e.module()->normalize(e.terms());
    return r;
}

BimElement mul_region_class(const BimElement& e, int region, char which, int j) {
    BimElement r(e.module());
    if (e.module()->zero()) return r;
    r.terms() = e.module()->mul(e.terms(), e.module()->region_class(region, which, j));
    return r;
}

BimElement apply_dot(const BimElement& e, int strand) {
    BimElement r(e.module());
    if (e.module()->zero()) return r;
    if (strand < 1 || strand > e.sig().strands()) throw std::invalid_argument("dot on missing strand");
    BimPoly p;
    for (const auto& [ex, c] : e.terms()) {
        Exps n = ex;
        ++n[static_cast<size_t>(strand - 1)];
        add_into(p, n, c);
    }
    r.terms() = e.module()->normalize(p);
    return r;
}

BimElement apply_cross(const BimElement& e, int strand) {
    const auto& sig = e.sig();
    if (strand < 1 || strand + 1 > sig.strands()) throw std::invalid_argument("crossing on missing strands");
    const char o = sig.strand(strand);
    if (o != sig.strand(strand + 1)) throw std::invalid_argument("crossing needs strands of equal orientation");
    BimElement r(e.module());
    if (e.module()->zero()) return r;
    const size_t R = static_cast<size_t>(strand - 1), L = static_cast<size_t>(strand);
    BimPoly p;
    for (const auto& [ex, c] : e.terms()) {
        // divided difference in the left variable (upward) or the right variable (downward)
        int a = o == 'E' ? ex[L] : ex[R];
        int b = o == 'E' ? ex[R] : ex[L];
        if (a == b) continue;
        int lo = std::min(a, b), d = std::abs(a - b);
        mpq_class sgn = a > b ? 1 : -1;
        QVec cc = c;
        for (auto& v : cc) v *= sgn;
        for (int t = 0; t < d; ++t) {
            Exps n = ex;
            int first = lo + d - 1 - t, second = lo + t;
            if (o == 'E') {
                n[L] = first;
                n[R] = second;
            } else {
                n[R] = first;
                n[L] = second;
            }
            add_into(p, n, cc);
        }
    }
    r.terms() = e.module()->normalize(p);
    return r;
}

BimSignature cup_target(const BimSignature& s, int pos, const std::string& kind) {
    if (pos < 0 || pos > s.strands()) throw std::invalid_argument("cup position out of range");
    if (kind != "FE" && kind != "EF") throw std::invalid_argument("cup kind must be FE or EF");
    BimSignature t = s;
    size_t at = s.pattern.size() - static_cast<size_t>(pos);
    t.pattern = s.pattern.substr(0, at) + kind + s.pattern.substr(at);
    return t;
}

BimSignature cap_target(const BimSignature& s, int pos, const std::string& kind) {
    if (pos < 0 || pos + 2 > s.strands()) throw std::invalid_argument("cap position out of range");
    if (kind != "FE" && kind != "EF") throw std::invalid_argument("cap kind must be FE or EF");
    size_t at = s.pattern.size() - static_cast<size_t>(pos) - 2;
    if (s.pattern.substr(at, 2) != kind) throw std::invalid_argument("cap kind does not match strands");
    BimSignature t = s;
    t.pattern = s.pattern.substr(0, at) + s.pattern.substr(at + 2);
    return t;
}

namespace {

// Embed a polynomial of the old signature into the new one, inserting `count` zero exponents
// after strand index `pos` (old strands > pos move up).
Exps widen(const Exps& e, int pos, int count) {
    Exps n;
    n.reserve(e.size() + static_cast<size_t>(count));
    for (int i = 0; i < pos; ++i) n.push_back(e[static_cast<size_t>(i)]);
    for (int i = 0; i < count; ++i) n.push_back(0);
    for (size_t i = static_cast<size_t>(pos); i < e.size(); ++i) n.push_back(e[i]);
    return n;
}

}  // namespace

BimElement apply_cup(const BimElement& e, int pos, const std::string& kind, int form) {
    BimSignature ts = cup_target(e.sig(), pos, kind);
    auto tm = Bimodule::get(ts);
    BimElement r(tm);
    if (tm->zero() || e.module()->zero()) return r;
    const int N = ts.N, k = ts.k_at(pos);
    const int m = ts.strands();
    const size_t dim = tm->base().dim();
    const int right = pos + 1, left = pos + 2, mid = pos + 1;
    auto xi = [&](int strand, int p) { return xi_power(m, strand, p, dim); };
    auto cls = [&](int region, char w, int j) { return tm->region_class(region, w, j); };
    BimPoly img;
    if (kind == "FE") {
        // left strand F, right strand E; middle region k+1
        if (form == 0) {
            for (int l = 0; l <= k; ++l)
                for (int j = 0; j <= k - l; ++j)
                    img = add(img, scaled(raw_mul(tm->base(), raw_mul(tm->base(), xi(left, k - l - j), cls(mid, 'x', l)), xi(right, j)), l % 2 ? -1 : 1));
        } else if (form == 1) {
            for (int l = 0; l <= k; ++l)
                img = add(img, scaled(raw_mul(tm->base(), xi(left, k - l), cls(pos, 'x', l)), l % 2 ? -1 : 1));
        } else {
            for (int l = 0; l <= k; ++l)
                img = add(img, scaled(raw_mul(tm->base(), cls(pos + 2, 'x', l), xi(right, k - l)), l % 2 ? -1 : 1));
        }
    } else {
        // left strand E, right strand F; middle region k-1
        if (form == 0) {
            for (int l = 0; l <= N - k; ++l)
                for (int j = 0; j <= N - k - l; ++j)
                    img = add(img, scaled(raw_mul(tm->base(), raw_mul(tm->base(), xi(left, N - k - l - j), cls(mid, 'y', l)), xi(right, j)), l % 2 ? -1 : 1));
        } else if (form == 1) {
            for (int l = 0; l <= N - k; ++l)
                img = add(img, scaled(raw_mul(tm->base(), xi(left, N - k - l), cls(pos, 'y', l)), l % 2 ? -1 : 1));
        } else {
            for (int l = 0; l <= N - k; ++l)
                img = add(img, scaled(raw_mul(tm->base(), cls(pos + 2, 'y', l), xi(right, N - k - l)), l % 2 ? -1 : 1));
        }
    }
    BimPoly src;
    for (const auto& [ex, c] : e.terms()) add_into(src, widen(ex, pos, 2), c);
    r.terms() = tm->mul(src, img);
    return r;
}

BimElement apply_cap(const BimElement& e, int pos, const std::string& kind) {
    BimSignature ts = cap_target(e.sig(), pos, kind);
    auto tm = Bimodule::get(ts);
    BimElement r(tm);
    if (tm->zero() || e.module()->zero()) return r;
    const int N = ts.N, k = ts.k_at(pos);
    const size_t R = static_cast<size_t>(pos), L = static_cast<size_t>(pos + 1);
    BimPoly out;
    for (const auto& [ex, c] : e.terms()) {
        int s = ex[L] + ex[R];
        int idx = kind == "FE" ? s + k - N + 1 : s + 1 - k;
        char w = kind == "FE" ? 'x' : 'y';
        const BimPoly& cl = tm->region_class(pos, w, idx);
        if (cl.empty()) continue;
        Exps rest;
        for (size_t i = 0; i < ex.size(); ++i)
            if (i != L && i != R) rest.push_back(ex[i]);
        BimPoly t = raw_mul(tm->base(), BimPoly{{rest, c}}, cl);
        if (idx % 2) t = scaled(t, -1);
        out = add(out, t);
    }
    r.terms() = tm->normalize(out);
    return r;
}

int bubble_degree(int n, const std::string& orient, int dots) {
    if (orient == "cw") return 2 * (dots - n + 1);
    if (orient == "ccw") return 2 * (dots + n + 1);
    throw std::invalid_argument("bubble orientation must be cw or ccw");
}

GrElement bubble_class(int N, int n, const std::string& orient, int dots) {
    if (((n + N) % 2 + 2) % 2) throw std::invalid_argument("weight parity does not match N");
    const int k = (n + N) / 2;
    const int alpha = bubble_degree(n, orient, dots) / 2;
    if (k < 0 || k > N) throw std::invalid_argument("weight outside the representation");
    GrElement r(k, N);
    if (alpha < 0) return r;
    for (int l = 0; l <= alpha; ++l) {
        GrElement a = orient == "cw" ? GrElement::y(k, N, l) : GrElement::x(k, N, l);
        GrElement b = orient == "cw" ? GrElement::y(k, N, alpha - l) : GrElement::x(k, N, alpha - l);
        r += gr_mul(a, b);
    }
    if (alpha % 2) r *= -1;
    return r;
}

BimElement apply_bubble(const BimElement& e, int pos, const std::string& orient, int dots) {
    BimElement r(e.module());
    if (e.module()->zero()) return r;
    const auto& sig = e.sig();
    const int N = sig.N, n = sig.weight_at(pos), k = sig.k_at(pos);
    const int alpha = bubble_degree(n, orient, dots) / 2;
    if (alpha < 0) return r;
    const char w = orient == "cw" ? 'y' : 'x';
    const auto& mod = *e.module();
    BimPoly cls;
    for (int l = 0; l <= alpha; ++l) {
        int lim = w == 'y' ? N - k : k;
        if (l > lim || alpha - l > lim) continue;
        cls = add(cls, mod.mul(mod.region_class(pos, w, l), mod.region_class(pos, w, alpha - l)));
    }
    if (alpha % 2) cls = scaled(cls, -1);
    r.terms() = mod.mul(e.terms(), cls);
    return r;
}

}  // namespace catsl2
