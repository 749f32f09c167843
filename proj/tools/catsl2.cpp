// SPDX-License-Identifier: Apache-2.0
// Command-line front end. Exit codes: 0 pass, 1 check failed, 2 bad input.
#include "catsl2/diagrams.hpp"
#include "catsl2/flag.hpp"
#include "catsl2/nilhecke.hpp"
#include "catsl2/qring.hpp"
#include "catsl2/relations.hpp"
#include "catsl2/udot.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

using namespace catsl2;
using json = nlohmann::json;

namespace {

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_payload(const std::string& arg) {
    if (!arg.empty() && arg.front() == '{') return arg;
    std::ifstream in(arg);
    if (!in) throw InputError("cannot open " + arg);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

TwoMor read_diagram(const std::string& arg) { return twomor_from_json(read_payload(arg)); }

json sig_json(const BimSignature& s) { return {{"N", s.N}, {"n0", s.n0}, {"strands", s.pattern}, {"shift", s.shift}}; }

json element_json(const BimElement& e) {
    json out = json::array();
    const GrRing& R = e.module()->base();
    for (const auto& [xi, c] : e.terms()) {
        json schur = json::object();
        for (size_t i = 0; i < c.size(); ++i)
            if (c[i] != 0) schur[partition_str(R.basis()[i])] = c[i].get_str();
        out.push_back({{"xi", xi}, {"schur", schur}});
    }
    return out;
}

std::string canon_json_key(const BasisLabel& l) { return l.str(); }

int emit(bool as_json, const json& j, const std::string& text, int code) {
    if (as_json) std::cout << j.dump(2) << "\n";
    else std::cout << text;
    return code;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact computations in categorified quantum sl2"};
    app.require_subcommand(1);
    bool as_json = false;
    app.add_flag("--json", as_json, "Machine-readable output");

    // form
    auto* form_cmd = app.add_subcommand("form", "Semilinear form <x,y>");
    std::string fx, fy;
    bool check = false;
    form_cmd->add_option("x", fx)->required();
    form_cmd->add_option("y", fy)->required();
    form_cmd->add_flag("--check", check, "Compare with the second closed formula");

    // mult / canon / sym / grdim
    auto* mult_cmd = app.add_subcommand("mult", "Product in canonical form, with positivity flag");
    std::string mx, my;
    mult_cmd->add_option("x", mx)->required();
    mult_cmd->add_option("y", my)->required();
    auto* canon_cmd = app.add_subcommand("canon", "Rewrite in the canonical basis");
    std::string cx;
    canon_cmd->add_option("x", cx)->required();
    auto* sym_cmd = app.add_subcommand("sym", "Apply omega, sigma, psi, tau, tau-inv or rho");
    std::string which, sx;
    sym_cmd->add_option("which", which)->required();
    sym_cmd->add_option("x", sx)->required();
    auto* grdim_cmd = app.add_subcommand("grdim", "Graded rank of the 2-hom space between x and y");
    std::string gx, gy;
    grdim_cmd->add_option("x", gx)->required();
    grdim_cmd->add_option("y", gy)->required();

    // nilHecke
    auto* schub_cmd = app.add_subcommand("schubert", "Schubert polynomial of w (one-line notation)");
    std::string wstr;
    schub_cmd->add_option("w", wstr)->required();
    auto* nh_cmd = app.add_subcommand("nh-mul", "Product in the nilHecke ring NH_a");
    int nh_a = 2;
    std::string nx, ny;
    nh_cmd->add_option("--a", nh_a, "Rank")->required();
    nh_cmd->add_option("x", nx)->required();
    nh_cmd->add_option("y", ny)->required();

    // flag
    auto* gr_cmd = app.add_subcommand("gr", "Polynomial in x_j, y_l expanded in the Schur basis of H_k");
    int gk = 0, gN = 0;
    std::string gexpr;
    gr_cmd->add_option("--k", gk)->required();
    gr_cmd->add_option("--N", gN)->required();
    gr_cmd->add_option("expr", gexpr)->required();

    // diagrams
    auto* eval_cmd = app.add_subcommand("eval", "Evaluate a diagram (JSON file or inline JSON)");
    std::string dpath;
    std::optional<int> eN;
    bool auto_n = false;
    eval_cmd->add_option("diagram", dpath)->required();
    eval_cmd->add_option("--N", eN);
    eval_cmd->add_flag("--auto-N", auto_n, "Choose N from the diagram");
    auto* red_cmd = app.add_subcommand("reduce-closed", "Reduce a closed diagram to a polynomial in bubbles");
    std::string rpath;
    std::optional<int> rN;
    red_cmd->add_option("diagram", rpath)->required();
    red_cmd->add_option("--N", rN);
    red_cmd->add_flag("--auto-N", auto_n, "Choose N from the diagram (default)");
    auto* eq_cmd = app.add_subcommand("equal", "Compare two diagrams under the flag representation");
    std::string ea, eb;
    std::optional<int> qN;
    eq_cmd->add_option("a", ea)->required();
    eq_cmd->add_option("b", eb)->required();
    eq_cmd->add_option("--N", qN);
    eq_cmd->add_flag("--auto-N", auto_n);

    // verification
    auto* ver_cmd = app.add_subcommand("verify", "Run the relation suite");
    int vN = 4;
    std::optional<int> vNmin, vnmin, vnmax;
    std::string suite = "all";
    unsigned jobs = 1;
    ver_cmd->add_option("--N", vN, "Largest N")->required();
    ver_cmd->add_option("--Nmin", vNmin, "Smallest N (default: --N)");
    ver_cmd->add_option("--nmin", vnmin);
    ver_cmd->add_option("--nmax", vnmax);
    ver_cmd->add_option("--suite", suite)->check(CLI::IsMember(suite_names()));
    ver_cmd->add_option("--jobs", jobs, "Worker threads, 0 = all cores");
    auto* dec_cmd = app.add_subcommand("decomp", "Idempotent system of EF1_n / FE1_n");
    int dn = 0, dN = 4;
    dec_cmd->add_option("--n", dn)->required();
    dec_cmd->add_option("--N", dN)->required();
    auto* end_cmd = app.add_subcommand("endring", "Independence of the basis of End(E^a 1_n) in degree d");
    int ea_ = 1, en = 0, ed = 0;
    std::optional<int> eNopt;
    end_cmd->add_option("--a", ea_)->required();
    end_cmd->add_option("--n", en)->required();
    end_cmd->add_option("--d", ed)->required();
    end_cmd->add_option("--N", eNopt);

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*form_cmd) {
            const auto x = UdotElement::parse(fx), y = UdotElement::parse(fy);
            const RatFun v = form(x, y);
            json j{{"form", v.str()}};
            std::string text = v.str() + "\n";
            int code = 0;
            if (check) {
                const RatFun w = form_alt(x, y);
                const bool ok = v == w;
                j["alt"] = w.str();
                j["match"] = ok;
                text += ok ? "match\n" : "MISMATCH: " + w.str() + "\n";
                code = ok ? 0 : 1;
            }
            return emit(as_json, j, text, code);
        }
        if (*mult_cmd) {
            const auto p = mul(UdotElement::parse(mx), UdotElement::parse(my));
            const auto c = to_canonical(p);
            bool pos = true;
            json terms = json::object();
            for (const auto& [l, v] : c) {
                pos = pos && v.nonneg_coeffs();
                terms[canon_json_key(l)] = v.str();
            }
            return emit(as_json, {{"canonical", terms}, {"positive", pos}},
                        canon_str(c) + "\npositive: " + (pos ? "yes" : "no") + "\n", 0);
        }
        if (*canon_cmd) {
            const auto c = to_canonical(UdotElement::parse(cx));
            json terms = json::object();
            for (const auto& [l, v] : c) terms[canon_json_key(l)] = v.str();
            return emit(as_json, {{"canonical", terms}}, canon_str(c) + "\n", 0);
        }
        if (*sym_cmd) {
            const auto r = apply_symmetry(parse_sym(which), UdotElement::parse(sx));
            return emit(as_json, {{"result", r.str()}}, r.str() + "\n", 0);
        }
        if (*grdim_cmd) {
            const RatFun v = grdim(UdotElement::parse(gx), UdotElement::parse(gy));
            return emit(as_json, {{"grdim", v.str()}}, v.str() + "\n", 0);
        }
        if (*schub_cmd) {
            const IntPoly p = schubert(Perm::parse(wstr));
            return emit(as_json, {{"schubert", p.str()}}, p.str() + "\n", 0);
        }
        if (*nh_cmd) {
            const auto p = nh_mul(NHElement::parse(nh_a, nx), NHElement::parse(nh_a, ny));
            return emit(as_json, {{"product", p.str()}}, p.str() + "\n", 0);
        }
        if (*gr_cmd) {
            if (gk < 0 || gk > gN) throw InputError("need 0 <= k <= N");
            const GrElement e = gr_from_poly(gk, gN, gexpr);
            json terms = json::object();
            for (const auto& [p, c] : e.terms()) terms[partition_str(p)] = c.get_str();
            return emit(as_json, {{"schur", terms}}, e.str() + "\n", 0);
        }
        if (*eval_cmd) {
            const TwoMor a = read_diagram(dpath);
            const int N = eN && !auto_n ? *eN : auto_N(a);
            const BimMap m = eval(a, N);
            json rows = json::array();
            std::string text = "N = " + std::to_string(N) + "\n" + m.source.str() + " -> " + m.target.str() + "\n";
            if (m.generators.empty()) text += "zero object\n";
            for (size_t i = 0; i < m.generators.size(); ++i) {
                std::string g = "xi^(";
                for (size_t t = 0; t < m.generators[i].size(); ++t)
                    g += (t ? "," : "") + std::to_string(m.generators[i][t]);
                g += ")";
                text += "  " + g + " |-> " + m.images[i].str() + "\n";
                rows.push_back({{"generator", m.generators[i]}, {"image", element_json(m.images[i])}});
            }
            return emit(as_json,
                        {{"N", N}, {"source", sig_json(m.source)}, {"target", sig_json(m.target)}, {"images", rows}},
                        text, 0);
        }
        if (*red_cmd) {
            const TwoMor a = read_diagram(rpath);
            std::string orient;
            for (const auto& t : a.terms())
                for (const auto& s : t.slices)
                    if (s.op == Slice::Op::Bubble) orient = orient.empty() || orient == s.orient ? s.orient : "mixed";
            if (orient == "mixed") orient.clear();
            const int N = rN && !auto_n ? *rN : auto_N(a);
            const BubblePoly p = closed_to_bubbles(a, N, orient);
            return emit(as_json, {{"N", N}, {"bubbles", p.str()}}, p.str() + "\n", 0);
        }
        if (*eq_cmd) {
            const TwoMor a = read_diagram(ea), b = read_diagram(eb);
            const auto g = equal_under_gamma(a, b, (qN && !auto_n) ? qN : std::optional<int>{});
            return emit(as_json, {{"equal", g.equal}, {"N", g.N}, {"detail", g.detail}},
                        std::string(g.equal ? "equal" : "DIFFERENT: " + g.detail) + " (N=" + std::to_string(g.N) + ")\n",
                        g.equal ? 0 : 1);
        }
        if (*ver_cmd) {
            const int lo = vNmin ? *vNmin : vN;
            if (lo > vN) throw InputError("--Nmin exceeds --N");
            const auto rep = relation_suite(lo, vN, vnmin, vnmax, suite, jobs);
            // group x N matrix
            std::map<std::string, std::map<int, std::pair<int, int>>> mat;
            json fails = json::array();
            for (const auto& c : rep.checks) {
                auto& cell = mat[c.group][c.N];
                ++cell.first;
                if (!c.ok) {
                    ++cell.second;
                    fails.push_back({{"group", c.group}, {"relation", c.name}, {"n", c.n}, {"N", c.N}, {"detail", c.detail}});
                }
            }
            std::ostringstream os;
            os << "group        ";
            for (int N = lo; N <= vN; ++N) os << "  N=" << N << "      ";
            os << "\n";
            for (const auto& [g, row] : mat) {
                os << g << std::string(g.size() < 13 ? 13 - g.size() : 1, ' ');
                for (int N = lo; N <= vN; ++N) {
                    auto it = row.find(N);
                    std::string cell = it == row.end() ? "-"
                                       : it->second.second ? "FAIL " + std::to_string(it->second.second) + "/" +
                                                                 std::to_string(it->second.first)
                                                           : "ok " + std::to_string(it->second.first);
                    os << "  " << cell << std::string(cell.size() < 10 ? 10 - cell.size() : 1, ' ');
                }
                os << "\n";
            }
            for (const auto& f : fails)
                os << "FAIL " << f["group"].get<std::string>() << ": " << f["relation"].get<std::string>()
                   << " n=" << f["n"] << " N=" << f["N"] << ": " << f["detail"].get<std::string>() << "\n";
            os << rep.checks.size() << " checks, " << rep.failures() << " failed\n";
            return emit(as_json, {{"checks", rep.checks.size()}, {"failures", fails}, {"pass", rep.ok()}}, os.str(),
                        rep.ok() ? 0 : 1);
        }
        if (*dec_cmd) {
            if (((dn + dN) % 2 + 2) % 2) throw InputError("n and N must have the same parity");
            const auto r = decomposition_idempotents(dn, dN);
            std::ostringstream os;
            os << r.pairs.size() << " idempotents, " << (r.ok ? "complete and orthogonal" : "FAILED") << "\n";
            for (size_t s = 0; s < r.pairs.size(); ++s)
                os << "lambda_" << s << " = " << r.pairs[s].first.str() << "\nsigma_" << s << " = "
                   << r.pairs[s].second.str() << "\n";
            for (const auto& f : r.failures) os << "FAIL " << f << "\n";
            return emit(as_json, {{"pairs", r.pairs.size()}, {"ok", r.ok}, {"failures", r.failures}}, os.str(),
                        r.ok ? 0 : 1);
        }
        if (*end_cmd) {
            const auto r = endring_dim_check(ea_, en, ed, eNopt);
            std::ostringstream os;
            os << "degree " << ed << ": " << r.count << " basis elements, graded rank predicts " << r.predicted
               << ", rank " << r.rank << " at N=" << r.N << (r.ok() ? " (independent)" : " (FAILED)") << "\n";
            return emit(as_json,
                        {{"count", r.count}, {"predicted", r.predicted}, {"rank", r.rank}, {"N", r.N}, {"ok", r.ok()}},
                        os.str(), r.ok() ? 0 : 1);
        }
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const json::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "failed: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
