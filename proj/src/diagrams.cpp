// SPDX-License-Identifier: Apache-2.0
#include "catsl2/diagrams.hpp"

#include "catsl2/linalg.hpp"

#include <json.hpp>

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace catsl2 {

using json = nlohmann::json;

// ---- 1-morphisms and slices ----------------------------------------------------------------

int OneMor::weight_at(int region) const {
    if (region < 0 || region > strands()) throw std::invalid_argument("region out of range");
    int w = n;
    for (int r = 1; r <= region; ++r) w += strand(r) == 'E' ? 2 : -2;
    return w;
}

std::string OneMor::str() const {
    std::string s = pattern + "1_{" + std::to_string(n) + "}";
    if (shift) s += "{" + std::to_string(shift) + "}";
    return s;
}

Slice Slice::dot(int strand) {
    Slice s;
    s.op = Op::Dot;
    s.strand = strand;
    return s;
}

Slice Slice::cross(int strand) {
    Slice s;
    s.op = Op::Cross;
    s.strand = strand;
    return s;
}

Slice Slice::cup(const std::string& kind, int pos) {
    Slice s;
    s.op = Op::Cup;
    s.kind = kind;
    s.pos = pos;
    return s;
}

Slice Slice::cap(const std::string& kind, int pos) {
    Slice s;
    s.op = Op::Cap;
    s.kind = kind;
    s.pos = pos;
    return s;
}

Slice Slice::bubble(const std::string& orient, int dots, int pos) {
    Slice s;
    s.op = Op::Bubble;
    s.orient = orient;
    s.dots = dots;
    s.pos = pos;
    return s;
}

bool Slice::operator==(const Slice& o) const {
    if (op != o.op) return false;
    switch (op) {
        case Op::Dot:
        case Op::Cross: return strand == o.strand;
        case Op::Cup:
        case Op::Cap: return kind == o.kind && pos == o.pos;
        case Op::Bubble: return orient == o.orient && dots == o.dots && pos == o.pos;
    }
    return false;
}

std::string Slice::str() const {
    switch (op) {
        case Op::Dot: return "dot(" + std::to_string(strand) + ")";
        case Op::Cross: return "cross(" + std::to_string(strand) + ")";
        case Op::Cup: return "cup_" + kind + "(" + std::to_string(pos) + ")";
        case Op::Cap: return "cap_" + kind + "(" + std::to_string(pos) + ")";
        case Op::Bubble:
            return orient + "(" + std::to_string(dots) + (pos ? "@" + std::to_string(pos) : "") + ")";
    }
    return "?";
}

OneMor slice_target(const OneMor& src, const Slice& s) {
    const int m = src.strands();
    switch (s.op) {
        case Slice::Op::Dot:
            if (s.strand < 1 || s.strand > m) throw std::invalid_argument("dot on missing strand " + std::to_string(s.strand));
            return src;
        case Slice::Op::Cross:
            if (s.strand < 1 || s.strand + 1 > m)
                throw std::invalid_argument("crossing on missing strands " + std::to_string(s.strand));
            if (src.strand(s.strand) != src.strand(s.strand + 1))
                throw std::invalid_argument("crossing needs strands of equal orientation");
            return src;
        case Slice::Op::Cup: {
            if (s.kind != "FE" && s.kind != "EF") throw std::invalid_argument("cup kind must be fe or ef");
            if (s.pos < 0 || s.pos > m) throw std::invalid_argument("cup position out of range");
            OneMor t = src;
            size_t at = src.pattern.size() - static_cast<size_t>(s.pos);
            t.pattern = src.pattern.substr(0, at) + s.kind + src.pattern.substr(at);
            return t;
        }
        case Slice::Op::Cap: {
            if (s.kind != "FE" && s.kind != "EF") throw std::invalid_argument("cap kind must be fe or ef");
            if (s.pos < 0 || s.pos + 2 > m) throw std::invalid_argument("cap position out of range");
            size_t at = src.pattern.size() - static_cast<size_t>(s.pos) - 2;
            if (src.pattern.substr(at, 2) != s.kind) throw std::invalid_argument("cap kind does not match strands");
            OneMor t = src;
            t.pattern = src.pattern.substr(0, at) + src.pattern.substr(at + 2);
            return t;
        }
        case Slice::Op::Bubble:
            if (s.orient != "cw" && s.orient != "ccw") throw std::invalid_argument("bubble orientation must be cw or ccw");
            if (s.pos < 0 || s.pos > m) throw std::invalid_argument("bubble region out of range");
            return src;
    }
    return src;
}

int slice_degree(const OneMor& src, const Slice& s) {
    slice_target(src, s);
    switch (s.op) {
        case Slice::Op::Dot: return 2;
        case Slice::Op::Cross: return -2;
        case Slice::Op::Cup:
        case Slice::Op::Cap: {
            int w = src.weight_at(s.pos);
            return s.kind == "FE" ? w + 1 : 1 - w;
        }
        case Slice::Op::Bubble: return bubble_degree(src.weight_at(s.pos), s.orient, s.dots);
    }
    return 0;
}

// ---- 2-morphisms -------------------------------------------------------------------------------

namespace {

OneMor fold(const OneMor& src, const std::vector<Slice>& sl) {
    OneMor cur = src;
    for (const auto& s : sl) cur = slice_target(cur, s);
    return cur;
}

}  // namespace

int degree(const OneMor& src, const Term2& t) {
    int d = 0;
    OneMor cur = src;
    for (const auto& s : t.slices) {
        d += slice_degree(cur, s);
        cur = slice_target(cur, s);
    }
    return d;
}

TwoMor TwoMor::identity(const OneMor& x) { return word(x, {}); }

TwoMor TwoMor::word(const OneMor& x, std::vector<Slice> slices, const mpq_class& c) {
    OneMor t = fold(x, slices);
    TwoMor a(x, t);
    a.add_term(Term2{c, std::move(slices)});
    return a;
}

void TwoMor::add_term(const Term2& t) {
    OneMor tg = fold(src_, t.slices);
    if (!tg.same_shape(tgt_))
        throw std::invalid_argument("term ends at " + tg.str() + " instead of " + tgt_.str());
    if (t.coeff == 0) return;
    for (auto& e : terms_)
        if (e.slices == t.slices) {
            e.coeff += t.coeff;
            terms_.erase(std::remove_if(terms_.begin(), terms_.end(), [](const Term2& x) { return x.coeff == 0; }),
                         terms_.end());
            return;
        }
    terms_.push_back(t);
}

std::vector<int> TwoMor::degrees() const {
    std::vector<int> d;
    for (const auto& t : terms_) d.push_back(degree(src_, t));
    return d;
}

bool TwoMor::homogeneous(int* deg) const {
    auto d = degrees();
    for (size_t i = 1; i < d.size(); ++i)
        if (d[i] != d[0]) return false;
    if (deg) *deg = d.empty() ? 0 : d[0];
    return true;
}

TwoMor& TwoMor::operator+=(const TwoMor& o) {
    if (!o.src_.same_shape(src_) || !o.tgt_.same_shape(tgt_))
        throw std::invalid_argument("adding 2-morphisms with different boundaries");
    for (const auto& t : o.terms_) add_term(t);
    return *this;
}

TwoMor& TwoMor::operator-=(const TwoMor& o) {
    TwoMor t = o;
    t *= -1;
    return *this += t;
}

TwoMor& TwoMor::operator*=(const mpq_class& c) {
    if (c == 0) terms_.clear();
    for (auto& t : terms_) t.coeff *= c;
    return *this;
}

std::string TwoMor::str() const {
    std::string s = src_.str() + " => " + tgt_.str() + ": ";
    if (terms_.empty()) return s + "0";
    bool first = true;
    for (const auto& t : terms_) {
        mpq_class c = t.coeff;
        if (!first) s += c < 0 ? " - " : " + ";
        else if (c < 0) s += "-";
        first = false;
        mpq_class a = abs(c);
        if (a != 1 || t.slices.empty()) s += a.get_str() + (t.slices.empty() ? "" : " ");
        for (size_t i = 0; i < t.slices.size(); ++i) s += (i ? " " : "") + t.slices[i].str();
    }
    return s;
}

TwoMor compose_v(const TwoMor& a, const TwoMor& b) {
    if (!b.target().same_shape(a.source()))
        throw std::invalid_argument("vertical composition: " + b.target().str() + " does not match " + a.source().str());
    TwoMor r(b.source(), a.target());
    for (const auto& tb : b.terms())
        for (const auto& ta : a.terms()) {
            Term2 t{ta.coeff * tb.coeff, tb.slices};
            t.slices.insert(t.slices.end(), ta.slices.begin(), ta.slices.end());
            r.add_term(t);
        }
    return r;
}

namespace {

Slice offset(Slice s, int o) {
    if (s.op == Slice::Op::Dot || s.op == Slice::Op::Cross) s.strand += o;
    else s.pos += o;
    return s;
}

}  // namespace

TwoMor compose_h(const TwoMor& a, const TwoMor& b) {
    if (a.source().n != b.source().left_weight() || a.target().n != b.target().left_weight())
        throw std::invalid_argument("horizontal composition: weights do not match");
    OneMor src{a.source().pattern + b.source().pattern, b.source().n, a.source().shift + b.source().shift};
    OneMor tgt{a.target().pattern + b.target().pattern, b.target().n, a.target().shift + b.target().shift};
    TwoMor r(src, tgt);
    const int o = b.target().strands();
    for (const auto& ta : a.terms())
        for (const auto& tb : b.terms()) {
            Term2 t{ta.coeff * tb.coeff, tb.slices};
            for (const auto& s : ta.slices) t.slices.push_back(offset(s, o));
            r.add_term(t);
        }
    return r;
}

// ---- evaluation ------------------------------------------------------------------------------------

BimSignature signature(const OneMor& x, int N) {
    BimSignature s{N, x.n, x.pattern, x.shift};
    if (!s.parity_ok())
        throw std::invalid_argument("weight " + std::to_string(x.n) + " has the wrong parity for N=" + std::to_string(N));
    return s;
}

bool BimMap::is_zero() const {
    return std::all_of(images.begin(), images.end(), [](const BimElement& e) { return e.is_zero(); });
}

namespace {

BimElement apply_slice(const BimElement& e, const Slice& s) {
    switch (s.op) {
        case Slice::Op::Dot: return apply_dot(e, s.strand);
        case Slice::Op::Cross: return apply_cross(e, s.strand);
        case Slice::Op::Cup: return apply_cup(e, s.pos, s.kind);
        case Slice::Op::Cap: return apply_cap(e, s.pos, s.kind);
        case Slice::Op::Bubble: return apply_bubble(e, s.pos, s.orient, s.dots);
    }
    return e;
}

}  // namespace

BimElement eval_on(const TwoMor& a, const BimElement& e) {
    const int N = e.sig().N;
    BimElement out(Bimodule::get(signature(a.target(), N)));
    for (const auto& t : a.terms()) {
        BimElement cur = e;
        for (const auto& s : t.slices) {
            if (cur.is_zero()) break;
            cur = apply_slice(cur, s);
        }
        if (cur.is_zero()) continue;
        cur *= t.coeff;
        out += cur;
    }
    return out;
}

BimMap eval(const TwoMor& a, int N) {
    BimMap m;
    m.source = signature(a.source(), N);
    m.target = signature(a.target(), N);
    auto mod = Bimodule::get(m.source);
    m.generators = mod->generators();
    for (const auto& g : m.generators) m.images.push_back(eval_on(a, BimElement::generator(mod, g)));
    return m;
}

int auto_N(const TwoMor& a) {
    int D = 0;
    for (const auto& t : a.terms()) {
        int d = 0;
        OneMor cur = a.source();
        for (const auto& s : t.slices) {
            if (s.op == Slice::Op::Dot) d += 2;
            if (s.op == Slice::Op::Bubble) d += std::max(0, slice_degree(cur, s));
            cur = slice_target(cur, s);
        }
        D = std::max(D, d);
    }
    int W = 0;
    for (const OneMor* x : {&a.source(), &a.target()})
        for (int r = 0; r <= x->strands(); ++r) W = std::max(W, std::abs(x->weight_at(r)));
    int N = D + W + 1;
    if (((N + a.source().n) % 2 + 2) % 2) ++N;
    return N;
}

GammaCheck equal_under_gamma(const TwoMor& a, const TwoMor& b, std::optional<int> N) {
    GammaCheck r;
    if (!a.source().same_shape(b.source()) || !a.target().same_shape(b.target())) {
        r.detail = "boundaries differ";
        return r;
    }
    TwoMor d = a - b;
    r.N = N ? *N : std::max(auto_N(a), auto_N(b));
    BimMap m = eval(d, r.N);
    for (size_t i = 0; i < m.images.size(); ++i)
        if (!m.images[i].is_zero()) {
            std::string g;
            for (size_t j = 0; j < m.generators[i].size(); ++j) g += (j ? "," : "") + std::to_string(m.generators[i][j]);
            r.detail = "difference on xi^(" + g + ") is " + m.images[i].str();
            return r;
        }
    r.equal = true;
    return r;
}

// ---- bubbles -------------------------------------------------------------------------------------------

std::string v_orient(int n) { return n >= 0 ? "ccw" : "cw"; }

int bubble_dots_for(int n, const std::string& orient, int j) { return orient == "cw" ? n - 1 + j : -n - 1 + j; }

BubblePoly BubblePoly::constant(int n, const std::string& orient, const mpq_class& c) {
    BubblePoly p{n, orient, {}};
    if (c != 0) p.terms[{}] = c;
    return p;
}

BubblePoly BubblePoly::var(int n, const std::string& orient, int j) {
    BubblePoly p{n, orient, {}};
    if (j == 0) p.terms[{}] = 1;
    else p.terms[{j}] = 1;
    return p;
}

bool BubblePoly::is_zero() const { return terms.empty(); }

int BubblePoly::max_degree() const {
    int d = 0;
    for (const auto& [m, c] : terms) {
        int s = 0;
        for (int j : m) s += 2 * j;
        d = std::max(d, s);
    }
    return d;
}

BubblePoly& BubblePoly::operator+=(const BubblePoly& o) {
    if (terms.empty() && orient.empty()) {
        n = o.n;
        orient = o.orient;
    }
    for (const auto& [m, c] : o.terms) {
        auto& v = terms[m];
        v += c;
        if (v == 0) terms.erase(m);
    }
    return *this;
}

BubblePoly& BubblePoly::operator*=(const mpq_class& c) {
    if (c == 0) terms.clear();
    for (auto& [m, v] : terms) v *= c;
    return *this;
}

bool BubblePoly::operator==(const BubblePoly& o) const { return n == o.n && orient == o.orient && terms == o.terms; }

BubblePoly operator*(const BubblePoly& a, const BubblePoly& b) {
    BubblePoly r{a.n, a.orient, {}};
    for (const auto& [ma, ca] : a.terms)
        for (const auto& [mb, cb] : b.terms) {
            std::vector<int> m = ma;
            m.insert(m.end(), mb.begin(), mb.end());
            std::sort(m.begin(), m.end());
            auto& v = r.terms[m];
            v += ca * cb;
            if (v == 0) r.terms.erase(m);
        }
    return r;
}

std::string BubblePoly::str() const {
    if (terms.empty()) return "0";
    const std::string var = n == 0 || orient == v_orient(n) ? "v" : "w";
    std::vector<std::pair<std::vector<int>, mpq_class>> ordered(terms.begin(), terms.end());
    std::stable_sort(ordered.begin(), ordered.end(), [](const auto& x, const auto& y) {
        int sx = 0, sy = 0;
        for (int j : x.first) sx += j;
        for (int j : y.first) sy += j;
        return sx > sy;
    });
    std::string s;
    for (const auto& [m, c] : ordered) {
        if (!s.empty()) s += c < 0 ? " - " : " + ";
        else if (c < 0) s += "-";
        mpq_class a = abs(c);
        std::string mono;
        for (size_t i = 0; i < m.size();) {
            size_t e = i;
            while (e < m.size() && m[e] == m[i]) ++e;
            mono += (mono.empty() ? "" : " ") + var + std::to_string(m[i]) + (e - i > 1 ? "^" + std::to_string(e - i) : "");
            i = e;
        }
        if (mono.empty()) s += a.get_str();
        else s += (a == 1 ? "" : a.get_str() + " ") + mono;
    }
    return s;
}

TwoMor BubblePoly::to_twomor() const {
    OneMor x{"", n, 0};
    TwoMor r(x, x);
    for (const auto& [m, c] : terms) {
        Term2 t{c, {}};
        for (int j : m) t.slices.push_back(Slice::bubble(orient, bubble_dots_for(n, orient, j)));
        r.add_term(t);
    }
    return r;
}

BubblePoly fake_bubble_poly(int n, int j) {
    if (j < 0 || j > std::abs(n)) throw std::out_of_range("fake bubble index out of range");
    const std::string honest = n >= 0 ? "cw" : "ccw";
    std::vector<BubblePoly> fake{BubblePoly::constant(n, honest, 1)};
    for (int i = 1; i <= j; ++i) {
        BubblePoly acc{n, honest, {}};
        if (n >= 0) {
            for (int l = 1; l <= i; ++l) acc += BubblePoly::var(n, honest, l) * fake[static_cast<size_t>(i - l)];
        } else {
            for (int l = 0; l <= i - 1; ++l) acc += fake[static_cast<size_t>(l)] * BubblePoly::var(n, honest, i - l);
        }
        acc *= -1;
        fake.push_back(acc);
    }
    return fake[static_cast<size_t>(j)];
}

GrElement bubble_poly_image(const BubblePoly& p, int N) {
    const int k = (p.n + N) / 2;
    GrElement r(k, N);
    for (const auto& [m, c] : p.terms) {
        GrElement t = GrElement::one(k, N);
        for (int j : m) t = gr_mul(t, bubble_class(N, p.n, p.orient, bubble_dots_for(p.n, p.orient, j)));
        t *= c;
        r += t;
    }
    return r;
}

namespace {

void partitions(int d, int maxpart, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
    if (d == 0) {
        std::vector<int> m = cur;
        std::sort(m.begin(), m.end());
        out.push_back(m);
        return;
    }
    for (int p = std::min(d, maxpart); p >= 1; --p) {
        cur.push_back(p);
        partitions(d - p, p, cur, out);
        cur.pop_back();
    }
}

}  // namespace

BubblePoly closed_to_bubbles(const TwoMor& a, std::optional<int> Nopt, const std::string& orient) {
    if (!a.source().pattern.empty() || !a.target().pattern.empty())
        throw std::invalid_argument("closed_to_bubbles needs a closed diagram");
    const int n = a.source().n;
    const int N = Nopt ? *Nopt : auto_N(a);
    auto mod = Bimodule::get(signature(a.source(), N));
    if (mod->zero()) throw std::invalid_argument("weight outside the representation; increase N");
    BimElement img = eval_on(a, BimElement::generator(mod, {}));
    const int k = (n + N) / 2;
    const GrRing& R = GrRing::get(k, N);
    QVec val(R.dim());
    if (!img.terms().empty()) val = img.terms().begin()->second;
    const std::string o = n == 0 && !orient.empty() ? orient : v_orient(n);
    BubblePoly out{n, o, {}};
    int top = 0;
    for (size_t i = 0; i < R.dim(); ++i) top = std::max(top, R.weight(i));
    std::map<int, GrElement> vcache;
    auto vclass = [&](int j) -> const GrElement& {
        auto it = vcache.find(j);
        if (it == vcache.end()) it = vcache.emplace(j, bubble_class(N, n, o, bubble_dots_for(n, o, j))).first;
        return it->second;
    };
    for (int d = 0; d <= top; ++d) {
        std::vector<size_t> at;
        for (size_t i = 0; i < R.dim(); ++i)
            if (R.weight(i) == d) at.push_back(i);
        QVec b(at.size());
        bool any = false;
        for (size_t r = 0; r < at.size(); ++r) {
            b[r] = val[at[r]];
            any = any || b[r] != 0;
        }
        if (!any) continue;
        std::vector<std::vector<int>> monos;
        std::vector<int> cur;
        partitions(d, d, cur, monos);
        std::vector<QVec> cols;
        for (const auto& m : monos) {
            GrElement img = GrElement::one(k, N);
            for (int j : m) img = gr_mul(img, vclass(j));
            QVec c(at.size());
            for (size_t r = 0; r < at.size(); ++r) c[r] = img.coeffs()[at[r]];
            cols.push_back(std::move(c));
        }
        if (rank(cols) < cols.size())
            throw std::runtime_error("bubble monomials of degree " + std::to_string(2 * d) + " are dependent at N=" +
                                     std::to_string(N) + "; increase N");
        auto sol = solve_columns(cols, b);
        if (!sol) throw std::runtime_error("closed diagram not in the span of bubble monomials at N=" + std::to_string(N));
        for (size_t i = 0; i < monos.size(); ++i)
            if ((*sol)[i] != 0) out.terms[monos[i]] = (*sol)[i];
    }
    return out;
}

// ---- symmetries --------------------------------------------------------------------------------------------

std::optional<DiagSym> parse_diag_sym(const std::string& s) {
    if (s == "omega") return DiagSym::Omega;
    if (s == "sigma") return DiagSym::Sigma;
    if (s == "psi") return DiagSym::Psi;
    if (s == "tau") return DiagSym::Tau;
    if (s == "tau-inv" || s == "tauinv") return DiagSym::TauInv;
    return std::nullopt;
}

namespace {

std::string swap_letters(std::string p) {
    for (auto& c : p) c = c == 'E' ? 'F' : 'E';
    return p;
}

std::string reversed(std::string p) {
    std::reverse(p.begin(), p.end());
    return p;
}

OneMor omega_obj(const OneMor& x) { return {swap_letters(x.pattern), -x.n, x.shift}; }
OneMor sigma_obj(const OneMor& x) { return {reversed(x.pattern), -x.left_weight(), x.shift}; }
OneMor rot_obj(const OneMor& x) { return {reversed(swap_letters(x.pattern)), x.left_weight(), -x.shift}; }

}  // namespace

TwoMor symmetry(const TwoMor& a, DiagSym which) {
    switch (which) {
        case DiagSym::Omega: {
            TwoMor r(omega_obj(a.source()), omega_obj(a.target()));
            for (const auto& t : a.terms()) {
                Term2 u{t.coeff, {}};
                for (auto s : t.slices) {
                    if (s.op == Slice::Op::Cross) u.coeff = -u.coeff;
                    if (s.op == Slice::Op::Cup || s.op == Slice::Op::Cap) s.kind = reversed(s.kind);
                    if (s.op == Slice::Op::Bubble) s.orient = s.orient == "cw" ? "ccw" : "cw";
                    u.slices.push_back(s);
                }
                r.add_term(u);
            }
            return r;
        }
        case DiagSym::Sigma: {
            TwoMor r(sigma_obj(a.source()), sigma_obj(a.target()));
            for (const auto& t : a.terms()) {
                Term2 u{t.coeff, {}};
                OneMor cur = a.source();
                for (auto s : t.slices) {
                    const int m = cur.strands();
                    cur = slice_target(cur, s);
                    switch (s.op) {
                        case Slice::Op::Dot: s.strand = m + 1 - s.strand; break;
                        case Slice::Op::Cross:
                            s.strand = m - s.strand;
                            u.coeff = -u.coeff;
                            break;
                        case Slice::Op::Cup:
                            s.pos = m - s.pos;
                            s.kind = reversed(s.kind);
                            break;
                        case Slice::Op::Cap:
                            s.pos = m - s.pos - 2;
                            s.kind = reversed(s.kind);
                            break;
                        case Slice::Op::Bubble:
                            s.pos = m - s.pos;
                            s.orient = s.orient == "cw" ? "ccw" : "cw";
                            break;
                    }
                    u.slices.push_back(s);
                }
                r.add_term(u);
            }
            return r;
        }
        case DiagSym::Psi: {
            OneMor src = a.target(), tgt = a.source();
            src.shift = -src.shift;
            tgt.shift = -tgt.shift;
            TwoMor r(src, tgt);
            for (const auto& t : a.terms()) {
                Term2 u{t.coeff, {}};
                for (auto it = t.slices.rbegin(); it != t.slices.rend(); ++it) {
                    Slice s = *it;
                    if (s.op == Slice::Op::Cup) s.op = Slice::Op::Cap;
                    else if (s.op == Slice::Op::Cap) s.op = Slice::Op::Cup;
                    u.slices.push_back(s);
                }
                r.add_term(u);
            }
            return r;
        }
        case DiagSym::Tau:
        case DiagSym::TauInv: {
            TwoMor r(rot_obj(a.target()), rot_obj(a.source()));
            for (const auto& t : a.terms()) {
                std::vector<std::pair<int, Slice>> seq;  // strand count of the slice source
                OneMor cur = a.source();
                for (const auto& s : t.slices) {
                    seq.emplace_back(cur.strands(), s);
                    cur = slice_target(cur, s);
                }
                Term2 u{t.coeff, {}};
                for (auto it = seq.rbegin(); it != seq.rend(); ++it) {
                    auto [m, s] = *it;
                    switch (s.op) {
                        case Slice::Op::Dot: s.strand = m + 1 - s.strand; break;
                        case Slice::Op::Cross: s.strand = m - s.strand; break;
                        case Slice::Op::Cup:
                            s.op = Slice::Op::Cap;
                            s.pos = m - s.pos;
                            break;
                        case Slice::Op::Cap:
                            s.op = Slice::Op::Cup;
                            s.pos = m - 2 - s.pos;
                            break;
                        case Slice::Op::Bubble: s.pos = m - s.pos; break;
                    }
                    u.slices.push_back(s);
                }
                r.add_term(u);
            }
            return r;
        }
    }
    return a;
}

// ---- JSON -----------------------------------------------------------------------------------------------------

namespace {

std::string upper(std::string s) {
    for (auto& c : s) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    return s;
}

std::string lower(std::string s) {
    for (auto& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return s;
}

OneMor onemor_from(const json& j) {
    OneMor x;
    x.pattern = upper(j.value("pattern", std::string()));
    for (char c : x.pattern)
        if (c != 'E' && c != 'F') throw std::invalid_argument("pattern must consist of E and F");
    x.n = j.at("n").get<int>();
    x.shift = j.value("shift", 0);
    return x;
}

json onemor_to(const OneMor& x) { return {{"pattern", x.pattern}, {"n", x.n}, {"shift", x.shift}}; }

mpq_class coeff_from(const json& j) {
    mpq_class c;
    if (j.is_number_integer()) c = j.get<long>();
    else if (j.is_string()) {
        if (c.set_str(j.get<std::string>(), 10) != 0) throw std::invalid_argument("bad coefficient");
        c.canonicalize();
    } else
        throw std::invalid_argument("coefficient must be an integer or a string");
    return c;
}

Slice slice_from(const json& j) {
    const std::string op = j.at("op").get<std::string>();
    if (op == "dot") return Slice::dot(j.at("strand").get<int>());
    if (op == "cross") return Slice::cross(j.at("strand").get<int>());
    if (op == "cup") return Slice::cup(upper(j.at("kind").get<std::string>()), j.value("pos", 0));
    if (op == "cap") return Slice::cap(upper(j.at("kind").get<std::string>()), j.value("pos", 0));
    if (op == "bubble") return Slice::bubble(j.at("orient").get<std::string>(), j.at("dots").get<int>(), j.value("pos", 0));
    throw std::invalid_argument("unknown slice op '" + op + "'");
}

json slice_to(const Slice& s) {
    switch (s.op) {
        case Slice::Op::Dot: return {{"op", "dot"}, {"strand", s.strand}};
        case Slice::Op::Cross: return {{"op", "cross"}, {"strand", s.strand}};
        case Slice::Op::Cup: return {{"op", "cup"}, {"kind", lower(s.kind)}, {"pos", s.pos}};
        case Slice::Op::Cap: return {{"op", "cap"}, {"kind", lower(s.kind)}, {"pos", s.pos}};
        case Slice::Op::Bubble: return {{"op", "bubble"}, {"orient", s.orient}, {"dots", s.dots}, {"pos", s.pos}};
    }
    return {};
}

}  // namespace

TwoMor twomor_from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("diagram is not valid JSON: ") + e.what());
    }
    try {
        OneMor src = onemor_from(j.at("source"));
        std::vector<Term2> terms;
        for (const auto& t : j.value("terms", json::array())) {
            Term2 u{t.contains("coeff") ? coeff_from(t["coeff"]) : mpq_class(1), {}};
            for (const auto& s : t.value("slices", json::array())) u.slices.push_back(slice_from(s));
            terms.push_back(u);
        }
        OneMor tgt;
        if (j.contains("target")) tgt = onemor_from(j["target"]);
        else if (!terms.empty()) {
            tgt = fold(src, terms[0].slices);
            tgt.shift = src.shift;
        } else
            tgt = src;
        TwoMor a(src, tgt);
        for (const auto& t : terms) a.add_term(t);
        return a;
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("malformed diagram: ") + e.what());
    }
}

std::string twomor_to_json(const TwoMor& a) {
    json terms = json::array();
    for (const auto& t : a.terms()) {
        json sl = json::array();
        for (const auto& s : t.slices) sl.push_back(slice_to(s));
        terms.push_back({{"coeff", t.coeff.get_str()}, {"slices", sl}});
    }
    return json{{"source", onemor_to(a.source())}, {"target", onemor_to(a.target())}, {"terms", terms}}.dump();
}

}  // namespace catsl2
