// SPDX-License-Identifier: Apache-2.0
#include "catsl2/relations.hpp"

#include "catsl2/linalg.hpp"
#include "catsl2/nilhecke.hpp"
#include "catsl2/qring.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <stdexcept>
#include <thread>

namespace catsl2 {

namespace {

using S = Slice;
using SV = std::vector<Slice>;

SV cat(std::initializer_list<SV> parts) {
    SV out;
    for (const auto& p : parts) out.insert(out.end(), p.begin(), p.end());
    return out;
}

OneMor obj(const std::string& p, int n) { return OneMor{p, n, 0}; }

OneMor fold(const OneMor& x, const SV& sl) {
    OneMor cur = x;
    for (const auto& s : sl) cur = slice_target(cur, s);
    return cur;
}

/// Sum accumulator with fixed boundary, so empty sums stay well typed.
struct Acc {
    TwoMor m;
    Acc(const OneMor& src, const OneMor& tgt) : m(src, tgt) {}
    Acc(const OneMor& src, const SV& shape) : m(src, fold(src, shape)) {}
    void add(const SV& sl, const mpq_class& c = 1) { m += TwoMor::word(m.source(), sl, c); }
};

TwoMor W(const OneMor& x, const SV& sl, const mpq_class& c = 1) { return TwoMor::word(x, sl, c); }

S cupS(const char* k, int p) { return S::cup(k, p); }
S capS(const char* k, int p) { return S::cap(k, p); }
S bub(const char* o, int d, int p = 0) { return S::bubble(o, d, p); }

void push(std::vector<RelationPair>& out, const std::string& g, const std::string& name, TwoMor l, TwoMor r) {
    out.push_back({g, name, std::move(l), std::move(r)});
}

std::string idx(const std::string& base, int v) { return base + "[" + std::to_string(v) + "]"; }

// ---- groups -------------------------------------------------------------------------------------

void biadjoint(int n, std::vector<RelationPair>& out) {
    const OneMor E = obj("E", n), F = obj("F", n);
    push(out, "biadjoint", "zigzag E cupFE/capEF", W(E, {cupS("FE", 0), capS("EF", 1)}), TwoMor::identity(E));
    push(out, "biadjoint", "zigzag E cupEF/capFE", W(E, {cupS("EF", 1), capS("FE", 0)}), TwoMor::identity(E));
    push(out, "biadjoint", "zigzag F cupFE/capEF", W(F, {cupS("FE", 1), capS("EF", 0)}), TwoMor::identity(F));
    push(out, "biadjoint", "zigzag F cupEF/capFE", W(F, {cupS("EF", 0), capS("FE", 1)}), TwoMor::identity(F));
    const TwoMor dotF = W(F, {S::dot(1)});
    push(out, "biadjoint", "dot cyclic F left", W(F, {cupS("EF", 0), S::dot(2), capS("FE", 1)}), dotF);
    push(out, "biadjoint", "dot cyclic F right", W(F, {cupS("FE", 1), S::dot(2), capS("EF", 0)}), dotF);
    const TwoMor dotE = W(E, {S::dot(1)});
    push(out, "biadjoint", "dot cyclic E left", W(E, {cupS("FE", 0), S::dot(2), capS("EF", 1)}), dotE);
    push(out, "biadjoint", "dot cyclic E right", W(E, {cupS("EF", 1), S::dot(2), capS("FE", 0)}), dotE);
    const OneMor FF = obj("FF", n);
    const TwoMor rotR =
        W(FF, {cupS("EF", 0), cupS("EF", 1), S::cross(3), capS("FE", 3), capS("FE", 2)});
    const TwoMor rotL =
        W(FF, {cupS("FE", 2), cupS("FE", 3), S::cross(3), capS("EF", 1), capS("EF", 0)});
    push(out, "biadjoint", "crossing cyclic", rotR, rotL);
    push(out, "biadjoint", "crossing dual", rotR, W(FF, {S::cross(1)}));
}

void nilhecke_group(int n, std::vector<RelationPair>& out) {
    const OneMor EE = obj("EE", n), EEE = obj("EEE", n);
    const TwoMor id = TwoMor::identity(EE);
    push(out, "nilhecke", "U^2 = 0", W(EE, {S::cross(1), S::cross(1)}), TwoMor(EE, EE));
    push(out, "nilhecke", "dot slide a", W(EE, {S::dot(2), S::cross(1)}) - W(EE, {S::cross(1), S::dot(1)}), id);
    push(out, "nilhecke", "dot slide b", W(EE, {S::cross(1), S::dot(2)}) - W(EE, {S::dot(1), S::cross(1)}), id);
    push(out, "nilhecke", "braid", W(EEE, {S::cross(1), S::cross(2), S::cross(1)}),
         W(EEE, {S::cross(2), S::cross(1), S::cross(2)}));
    for (int m = 1; m <= 3; ++m) {
        Acc c(EE, EE);
        for (int j = 0; j < m; ++j) c.add(cat({dots(2, m - j - 1), dots(1, j)}));
        push(out, "nilhecke", idx("induction top-left", m),
             W(EE, cat({{S::cross(1)}, dots(2, m)})) - W(EE, cat({dots(1, m), {S::cross(1)}})), c.m);
        push(out, "nilhecke", idx("induction bottom-left", m),
             W(EE, cat({dots(2, m), {S::cross(1)}})) - W(EE, cat({{S::cross(1)}, dots(1, m)})), c.m);
    }
    push(out, "nilhecke", "symmetric dots commute",
         W(EE, {S::cross(1), S::dot(2)}) + W(EE, {S::cross(1), S::dot(1)}),
         W(EE, {S::dot(2), S::cross(1)}) + W(EE, {S::dot(1), S::cross(1)}));
    push(out, "nilhecke", "product of dots commutes", W(EE, {S::cross(1), S::dot(2), S::dot(1)}),
         W(EE, {S::dot(1), S::dot(2), S::cross(1)}));
}

void bubbles_group(int n, std::vector<RelationPair>& out) {
    const OneMor one = obj("", n);
    const TwoMor id = TwoMor::identity(one), zero(one, one);
    if (n - 2 >= 0) push(out, "bubbles", "negative cw vanishes", W(one, {bub("cw", n - 2)}), zero);
    if (-n - 2 >= 0) push(out, "bubbles", "negative ccw vanishes", W(one, {bub("ccw", -n - 2)}), zero);
    if (n - 1 >= 0) push(out, "bubbles", "degree zero cw", W(one, {bub("cw", n - 1)}), id);
    if (-n - 1 >= 0) push(out, "bubbles", "degree zero ccw", W(one, {bub("ccw", -n - 1)}), id);

    for (int m = 0; m <= 3; ++m) {
        const OneMor E = obj("E", n);
        {
            Acc r(E, E);
            for (int l = 0; l <= m - n; ++l) r.add(cat({{bub("cw", n - 1 + l, 0)}, dots(1, m - n - l)}), -1);
            push(out, "bubbles", idx("curl right", m),
                 W(E, cat({{cupS("EF", 0)}, dots(1, m), {S::cross(2), capS("EF", 0)}})), r.m);
        }
        {
            const OneMor E2 = obj("E", n - 2);
            Acc r(E2, E2);
            for (int j = 0; j <= m + n; ++j) r.add(cat({{bub("ccw", -n - 1 + j, 1)}, dots(1, m + n - j)}));
            push(out, "bubbles", idx("curl left", m),
                 W(E2, cat({{cupS("FE", 1)}, dots(3, m), {S::cross(1), capS("FE", 1)}})), r.m);
        }
    }
    for (int d = 1; d <= 4; ++d) {
        Acc s(one, one);
        for (int j = 0; j <= d; ++j) s.add({bub("cw", n - 1 + j), bub("ccw", -n - 1 + d - j)});
        push(out, "bubbles", idx("grassmannian", d), s.m, zero);
    }
    for (int j = 1; j <= std::abs(n); ++j) {
        const std::string fake = n > 0 ? "ccw" : "cw";
        if (n == 0) break;
        push(out, "bubbles", idx("fake bubble", j), W(one, {bub(fake.c_str(), bubble_dots_for(n, fake, j))}),
             fake_bubble_poly(n, j).to_twomor());
    }
}

void decomp_group(int n, std::vector<RelationPair>& out) {
    push(out, "decomp", "identity EF", TwoMor::identity(obj("EF", n)), identity_decomposition_rhs(n, true));
    push(out, "decomp", "identity FE", TwoMor::identity(obj("FE", n)), identity_decomposition_rhs(n, false));
}

void slides_group(int n, std::vector<RelationPair>& out) {
    const OneMor E = obj("E", n);
    for (int a = 0; a <= 3; ++a) {
        Acc ra(E, E), rb(E, E);
        for (int l = 0; l <= a; ++l) {
            ra.add(cat({{bub("ccw", -n - 3 + l, 1)}, dots(1, a - l)}), a + 1 - l);
            rb.add(cat({{bub("cw", n - 1 + l, 0)}, dots(1, a - l)}), a + 1 - l);
        }
        push(out, "slides", idx("ccw right to left", a), W(E, {bub("ccw", -n - 1 + a, 0)}), ra.m);
        push(out, "slides", idx("cw left to right", a), W(E, {bub("cw", n + 1 + a, 1)}), rb.m);

        Acc rc(E, E), rd(E, E);
        rc.add(cat({{bub("cw", n + 1 + a - 2, 1)}, dots(1, 2)}));
        rc.add(cat({{bub("cw", n + 1 + a - 1, 1)}, dots(1, 1)}), -2);
        rc.add({bub("cw", n + 1 + a, 1)});
        rd.add(cat({{bub("ccw", -n - 1 + a - 2, 0)}, dots(1, 2)}));
        rd.add(cat({{bub("ccw", -n - 1 + a - 1, 0)}, dots(1, 1)}), -2);
        rd.add({bub("ccw", -n - 1 + a, 0)});
        push(out, "slides", idx("cw right to left", a), W(E, {bub("cw", n - 1 + a, 0)}), rc.m);
        push(out, "slides", idx("ccw left to right", a), W(E, {bub("ccw", -n - 3 + a, 1)}), rd.m);
    }
}

void triangle_group(int n, std::vector<RelationPair>& out) {
    const OneMor FE = obj("FE", n);
    const OneMor FEFE = obj("FEFE", n);
    // sideways crossings on strands (i, i+1)
    auto x_ef_fe = [](int i) { return SV{cupS("FE", i + 1), S::cross(i + 1), capS("EF", i - 1)}; };
    auto x_fe_ef = [](int i) { return SV{cupS("EF", i - 1), S::cross(i + 1), capS("FE", i + 1)}; };
    const SV lhs1 = cat({x_fe_ef(1), {cupS("FE", 1)}, x_ef_fe(3), x_ef_fe(1)});
    Acc lhs(FE, FEFE);
    lhs.add(lhs1);
    for (int l = 0; l <= n; ++l)
        for (int j = 0; j <= l; ++j)
            for (int f = 0; f <= l - j; ++f)
                lhs.add(cat({dots(2, l - j - f), dots(1, f), {bub("ccw", -n - 3 + j, 1), cupS("EF", 1)},
                             dots(2, n - l)}));
    Acc rhs(FE, FEFE);
    rhs.add(cat({{cupS("FE", 1), S::cross(1), S::cross(3)}, x_fe_ef(2)}));
    for (int l = 0; l <= -n - 2; ++l)
        for (int j = 0; j <= l; ++j)
            for (int f = 0; f <= -n - 2 - l; ++f)
                rhs.add(cat({dots(1, l - j), {capS("FE", 0), bub("cw", n - 1 + j, 0), cupS("FE", 0)},
                             dots(1, -n - 2 - l - f), {cupS("FE", 2)}, dots(3, f)}),
                        -1);
    push(out, "triangle", "triangle", lhs.m, rhs.m);
}

void symmetry_group(int n, std::vector<RelationPair>& out) {
    std::vector<RelationPair> base;
    nilhecke_group(n, base);
    biadjoint(n, base);
    decomp_group(n, base);
    std::vector<RelationPair> more;
    bubbles_group(n, more);
    for (auto& r : more)
        if (r.name.rfind("curl", 0) == 0 && r.name.find("[1]") != std::string::npos) base.push_back(r);
    const std::pair<DiagSym, const char*> syms[] = {{DiagSym::Omega, "omega"},
                                                    {DiagSym::Sigma, "sigma"},
                                                    {DiagSym::Psi, "psi"},
                                                    {DiagSym::Tau, "tau"},
                                                    {DiagSym::TauInv, "tau-inv"}};
    for (const auto& r : base) {
        if (r.name.rfind("induction", 0) == 0 && r.name.find("[1]") == std::string::npos) continue;
        for (const auto& [s, nm] : syms)
            push(out, "symmetry", std::string(nm) + "(" + r.name + ")", symmetry(r.lhs, s), symmetry(r.rhs, s));
    }
}

}  // namespace

std::vector<Slice> dots(int strand, int m) { return std::vector<Slice>(static_cast<size_t>(std::max(0, m)), S::dot(strand)); }

TwoMor sideways_ef_fe(int n) { return W(obj("EF", n), {cupS("FE", 2), S::cross(2), capS("EF", 0)}); }

TwoMor sideways_fe_ef(int n) { return W(obj("FE", n), {cupS("EF", 0), S::cross(2), capS("FE", 2)}); }

TwoMor whisker(const TwoMor& f, const std::string& left, const std::string& right, int n) {
    const TwoMor idR = TwoMor::identity(obj(right, n));
    const TwoMor mid = right.empty() ? f : compose_h(f, idR);
    if (left.empty()) return mid;
    return compose_h(TwoMor::identity(obj(left, f.source().left_weight())), mid);
}

TwoMor identity_decomposition_rhs(int n, bool ef, const mpq_class& crossing_sign) {
    if (ef) {
        const OneMor x = obj("EF", n);
        TwoMor r = compose_v(sideways_fe_ef(n), sideways_ef_fe(n));
        r *= -crossing_sign;
        Acc s(x, x);
        for (int l = 0; l <= n - 1; ++l)
            for (int j = 0; j <= l; ++j)
                s.add(cat({dots(1, l - j), {capS("EF", 0), bub("ccw", -n - 1 + j, 0), cupS("EF", 0)},
                           dots(1, n - 1 - l)}));
        return r + s.m;
    }
    const OneMor x = obj("FE", n);
    TwoMor r = compose_v(sideways_ef_fe(n), sideways_fe_ef(n));
    r *= -crossing_sign;
    Acc s(x, x);
    for (int l = 0; l <= -n - 1; ++l)
        for (int j = 0; j <= l; ++j)
            s.add(cat({dots(1, l - j), {capS("FE", 0), bub("cw", n - 1 + j, 0), cupS("FE", 0)}, dots(1, -n - 1 - l)}));
    return r + s.m;
}

std::vector<std::string> suite_names() {
    return {"biadjoint", "nilhecke", "bubbles", "decomp", "slides", "triangle", "symmetry", "all"};
}

std::vector<RelationPair> relations_at(int n, const std::string& suite) {
    std::vector<RelationPair> out;
    const bool all = suite == "all";
    bool known = all;
    const std::pair<const char*, std::function<void(int, std::vector<RelationPair>&)>> groups[] = {
        {"biadjoint", biadjoint}, {"nilhecke", nilhecke_group}, {"bubbles", bubbles_group},
        {"decomp", decomp_group}, {"slides", slides_group},     {"triangle", triangle_group},
        {"symmetry", symmetry_group}};
    for (const auto& [name, fn] : groups)
        if (all || suite == name) {
            known = true;
            fn(n, out);
        }
    if (!known) throw std::invalid_argument("unknown suite '" + suite + "'");
    return out;
}

bool SuiteReport::ok() const { return failures() == 0; }

size_t SuiteReport::failures() const {
    return static_cast<size_t>(std::count_if(checks.begin(), checks.end(), [](const RelationCheck& c) { return !c.ok; }));
}

SuiteReport relation_suite(int Nmin, int Nmax, std::optional<int> nmin, std::optional<int> nmax,
                           const std::string& suite, unsigned threads) {
    struct Job {
        RelationPair rel;
        int n, N;
    };
    std::vector<Job> jobs;
    for (int N = std::max(0, Nmin); N <= Nmax; ++N)
        for (int n = -N; n <= N; n += 2) {
            if ((nmin && n < *nmin) || (nmax && n > *nmax)) continue;
            for (auto& r : relations_at(n, suite)) jobs.push_back({std::move(r), n, N});
        }
    SuiteReport rep;
    rep.checks.resize(jobs.size());
    std::atomic<size_t> next{0};
    auto work = [&] {
        for (size_t i = next++; i < jobs.size(); i = next++) {
            const Job& j = jobs[i];
            RelationCheck c{j.rel.group, j.rel.name, j.n, j.N, false, {}};
            try {
                const auto g = equal_under_gamma(j.rel.lhs, j.rel.rhs, j.N);
                c.ok = g.equal;
                c.detail = g.detail;
            } catch (const std::exception& e) {
                c.detail = e.what();
            }
            rep.checks[i] = std::move(c);
        }
    };
    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < threads; ++t) pool.emplace_back(work);
    work();
    for (auto& t : pool) t.join();
    return rep;
}

// ---- decomposition --------------------------------------------------------------------------------

DecompReport decomposition_idempotents(int n, int N) {
    DecompReport rep;
    rep.n = n;
    rep.N = N;
    const int a = std::abs(n);
    const OneMor one = obj("", a), EF = obj("EF", a);
    for (int s = 0; s < a; ++s) {
        TwoMor lam = W(one, cat({{cupS("EF", 0)}, dots(1, a - 1 - s)}));
        Acc sig(EF, one);
        for (int j = 0; j <= s; ++j) sig.add(cat({dots(1, s - j), {capS("EF", 0), bub("ccw", -a - 1 + j, 0)}}));
        rep.pairs.emplace_back(lam, sig.m);
    }
    rep.pairs.emplace_back(sideways_fe_ef(a), -1 * sideways_ef_fe(a));
    if (n < 0)
        for (auto& [l, s] : rep.pairs) {
            l = symmetry(l, DiagSym::Omega);
            s = symmetry(s, DiagSym::Omega);
        }
    auto check = [&](const std::string& what, const TwoMor& x, const TwoMor& y) {
        try {
            const auto g = equal_under_gamma(x, y, N);
            if (!g.equal) rep.failures.push_back(what + ": " + g.detail);
        } catch (const std::exception& e) {
            rep.failures.push_back(what + ": " + e.what());
        }
    };
    const size_t k = rep.pairs.size();
    for (size_t i = 0; i < k; ++i)
        for (size_t j = 0; j < k; ++j) {
            const TwoMor p = compose_v(rep.pairs[i].second, rep.pairs[j].first);
            const TwoMor want = i == j ? TwoMor::identity(p.source()) : TwoMor(p.source(), p.target());
            check("sigma_" + std::to_string(i) + " lambda_" + std::to_string(j), p, want);
        }
    TwoMor sum(rep.pairs[0].first.target(), rep.pairs[0].first.target());
    for (const auto& [l, s] : rep.pairs) sum += compose_v(l, s);
    check("sum lambda sigma", sum, TwoMor::identity(sum.source()));
    rep.ok = rep.failures.empty();
    return rep;
}

// ---- endomorphisms of E^a 1_n -------------------------------------------------------------------------

namespace {

void compositions(int total, int parts, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
    if (static_cast<int>(cur.size()) == parts - 1) {
        cur.push_back(total);
        out.push_back(cur);
        cur.pop_back();
        return;
    }
    for (int v = 0; v <= total; ++v) {
        cur.push_back(v);
        compositions(total - v, parts, cur, out);
        cur.pop_back();
    }
}

void partitions_of(int d, int maxpart, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
    if (d == 0) {
        out.push_back(cur);
        return;
    }
    for (int p = std::min(d, maxpart); p >= 1; --p) {
        cur.push_back(p);
        partitions_of(d - p, p, cur, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<TwoMor> endring_basis(int a, int n, int d) {
    std::vector<TwoMor> out;
    if (a < 1 || d % 2) return out;
    const OneMor x = obj(std::string(static_cast<size_t>(a), 'E'), n);
    const std::string vo = v_orient(n);
    for (const auto& w : Perm::all(a)) {
        const int half = (d + 2 * w.length()) / 2;  // |alpha| + |mu|
        if (half < 0) continue;
        SV base;
        const auto rw = w.reduced_word();
        for (auto it = rw.rbegin(); it != rw.rend(); ++it) base.push_back(S::cross(a - *it));
        for (int am = 0; am <= half; ++am) {
            std::vector<std::vector<int>> alphas, mus;
            std::vector<int> cur;
            compositions(am, a, cur, alphas);
            partitions_of(half - am, half - am, cur, mus);
            for (const auto& al : alphas)
                for (const auto& mu : mus) {
                    SV sl = base;
                    for (int i = 1; i <= a; ++i) {
                        auto ds = dots(a + 1 - i, al[static_cast<size_t>(i - 1)]);
                        sl.insert(sl.end(), ds.begin(), ds.end());
                    }
                    for (int j : mu) sl.push_back(bub(vo.c_str(), bubble_dots_for(n, vo, j), 0));
                    out.push_back(W(x, sl));
                }
        }
    }
    return out;
}

long endring_predicted(int a, int d) {
    RatFun f(qfact(a).shifted(-a * (a - 1) / 2), LaurentPoly(1));
    const RatFun one_minus_q2(LaurentPoly(1) - LaurentPoly::q(2), LaurentPoly(1));
    for (int i = 0; i < a; ++i) f /= one_minus_q2;
    const int J = std::max(0, (d + a * (a - 1)) / 2);
    for (int j = 1; j <= J; ++j) f /= RatFun(LaurentPoly(1) - LaurentPoly::q(2 * j), LaurentPoly(1));
    const auto s = f.series(d);
    const auto it = s.find(d);
    return it == s.end() ? 0 : it->second.get_si();
}

EndRingReport endring_dim_check(int a, int n, int d, std::optional<int> Nopt) {
    EndRingReport rep;
    rep.a = a;
    rep.n = n;
    rep.d = d;
    const auto basis = endring_basis(a, n, d);
    rep.count = basis.size();
    rep.predicted = endring_predicted(a, d);
    if (basis.empty()) return rep;
    TwoMor all(basis[0].source(), basis[0].target());
    for (const auto& b : basis) all += b;
    rep.N = Nopt ? *Nopt : auto_N(all);
    auto mod = Bimodule::get(signature(basis[0].source(), rep.N));
    const auto gens = mod->generators();
    // add generator images until the rank saturates
    std::vector<QVec> rows(basis.size());
    for (const auto& g : gens) {
        const auto e = BimElement::generator(mod, g);
        std::vector<BimElement> imgs;
        std::map<Exps, size_t> keys;
        for (const auto& b : basis) {
            imgs.push_back(eval_on(b, e));
            for (const auto& [ex, v] : imgs.back().terms()) keys.emplace(ex, v.size());
        }
        size_t off = 0;
        for (auto& [ex, o] : keys) {
            const size_t len = o;
            o = off;
            off += len;
        }
        for (size_t i = 0; i < basis.size(); ++i) {
            QVec add(off);
            for (const auto& [ex, v] : imgs[i].terms())
                for (size_t t = 0; t < v.size(); ++t) add[keys[ex] + t] = v[t];
            rows[i].insert(rows[i].end(), add.begin(), add.end());
        }
        rep.rank = rank(rows);
        if (rep.rank == basis.size()) break;
    }
    return rep;
}

// ---- bubble generation ------------------------------------------------------------------------------------

bool SpanReport::ok() const {
    return std::all_of(by_degree.begin(), by_degree.end(), [](const auto& p) { return p.first == p.second; });
}

SpanReport bubble_generation_check(int k, int N) {
    SpanReport rep;
    rep.k = k;
    rep.N = N;
    const int n = 2 * k - N;
    const std::string vo = v_orient(n);
    const GrRing& R = GrRing::get(k, N);
    for (int d = 0; d <= std::min(k, N - k); ++d) {
        std::vector<std::vector<int>> mus;
        std::vector<int> cur;
        partitions_of(d, d, cur, mus);
        QMat rows;
        for (const auto& mu : mus) {
            BubblePoly p = BubblePoly::constant(n, vo, 1);
            for (int j : mu) p = p * BubblePoly::var(n, vo, j);
            rows.push_back(bubble_poly_image(p, N).coeffs());
        }
        size_t dim = 0;
        for (size_t i = 0; i < R.dim(); ++i) dim += R.weight(i) == d;
        rep.by_degree.emplace_back(rank(rows), dim);
    }
    return rep;
}

}  // namespace catsl2
