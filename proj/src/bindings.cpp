// SPDX-License-Identifier: Apache-2.0
#include "catsl2/diagrams.hpp"
#include "catsl2/flag.hpp"
#include "catsl2/nilhecke.hpp"
#include "catsl2/qring.hpp"
#include "catsl2/relations.hpp"
#include "catsl2/udot.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace catsl2;

namespace {

py::object fraction(const mpq_class& c) {
    static py::object F = py::module_::import("fractions").attr("Fraction");
    return F(py::str(c.get_str()));
}

py::object pyint(const mpz_class& c) { return py::module_::import("builtins").attr("int")(py::str(c.get_str())); }

py::dict coeffs(const LaurentPoly& p) {
    py::dict d;
    for (const auto& [e, c] : p.terms()) d[py::int_(e)] = pyint(c);
    return d;
}

py::tuple partition(const Partition& p) {
    py::tuple t(p.size());
    for (size_t i = 0; i < p.size(); ++i) t[i] = p[i];
    return t;
}

Sym sym_of(const std::string& s) { return parse_sym(s); }

DiagSym diag_sym_of(const std::string& s) {
    auto d = parse_diag_sym(s);
    if (!d) throw py::value_error("unknown symmetry: " + s);
    return *d;
}

py::dict label_dict(const BasisLabel& l) {
    py::dict d;
    d["order"] = l.order == Order::EF ? "EF" : "FE";
    d["a"] = l.a;
    d["b"] = l.b;
    d["n"] = l.n;
    return d;
}

py::list canon_list(const CanonMap& m) {
    py::list out;
    for (const auto& [l, c] : m) out.append(py::make_tuple(UdotElement::from_label(l).str(), l.str(), c));
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact computations for categorified quantum sl2";

    // ---- Laurent polynomials and rational functions
    py::class_<LaurentPoly>(m, "LaurentPoly")
        .def(py::init<long>(), py::arg("c") = 0)
        .def_static("parse", &LaurentPoly::parse)
        .def_static("q", &LaurentPoly::q, py::arg("exp") = 1)
        .def("coeffs", &coeffs)
        .def("bar", &LaurentPoly::bar)
        .def("is_zero", &LaurentPoly::is_zero)
        .def("nonneg_coeffs", &LaurentPoly::nonneg_coeffs)
        .def("__add__", [](const LaurentPoly& a, const LaurentPoly& b) { return a + b; })
        .def("__sub__", [](const LaurentPoly& a, const LaurentPoly& b) { return a - b; })
        .def("__mul__", [](const LaurentPoly& a, const LaurentPoly& b) { return a * b; })
        .def("__neg__", [](const LaurentPoly& a) { return -a; })
        .def("__pow__", [](const LaurentPoly& a, unsigned e) { return a.pow(e); })
        .def("__eq__", [](const LaurentPoly& a, const LaurentPoly& b) { return a == b; })
        .def("__str__", &LaurentPoly::str)
        .def("__repr__", [](const LaurentPoly& a) { return "LaurentPoly('" + a.str() + "')"; });

    py::class_<RatFun>(m, "RatFun")
        .def(py::init<long>(), py::arg("c") = 0)
        .def(py::init<const LaurentPoly&>())
        .def(py::init<const LaurentPoly&, const LaurentPoly&>())
        .def_property_readonly("num", &RatFun::num)
        .def_property_readonly("den", &RatFun::den)
        .def("bar", &RatFun::bar)
        .def("is_zero", &RatFun::is_zero)
        .def("series", [](const RatFun& r, int hi) {
            py::dict d;
            for (const auto& [e, c] : r.series(hi)) d[py::int_(e)] = pyint(c);
            return d;
        })
        .def("__add__", [](const RatFun& a, const RatFun& b) { return a + b; })
        .def("__sub__", [](const RatFun& a, const RatFun& b) { return a - b; })
        .def("__mul__", [](const RatFun& a, const RatFun& b) { return a * b; })
        .def("__truediv__", [](const RatFun& a, const RatFun& b) { return a / b; })
        .def("__eq__", [](const RatFun& a, const RatFun& b) { return a == b; })
        .def("__str__", &RatFun::str)
        .def("__repr__", [](const RatFun& a) { return "RatFun('" + a.str() + "')"; });
    py::implicitly_convertible<LaurentPoly, RatFun>();

    m.def("qint", &qint);
    m.def("qfact", &qfact);
    m.def("qbin", &qbin);
    m.def("g", &g);

    // ---- idempotented quantum sl2
    py::class_<UdotElement>(m, "UdotElement")
        .def_static("parse", &UdotElement::parse)
        .def_static("idem", &UdotElement::idem)
        .def_static("E", &UdotElement::E, py::arg("n"), py::arg("a") = 1)
        .def_static("F", &UdotElement::F, py::arg("n"), py::arg("b") = 1)
        .def_property_readonly("src", &UdotElement::src)
        .def_property_readonly("dst", &UdotElement::dst)
        .def("is_zero", &UdotElement::is_zero)
        .def("scaled", &UdotElement::scaled)
        .def("__add__", [](const UdotElement& a, const UdotElement& b) { return a + b; })
        .def("__sub__", [](const UdotElement& a, const UdotElement& b) { return a - b; })
        .def("__mul__", [](const UdotElement& a, const UdotElement& b) { return mul(a, b); })
        .def("__eq__", [](const UdotElement& a, const UdotElement& b) { return a == b; })
        .def("__str__", &UdotElement::str)
        .def("__repr__", [](const UdotElement& a) { return "UdotElement('" + a.str() + "')"; });

    m.def("canonical", [](const UdotElement& x) { return canon_list(to_canonical(x)); },
          "Expansion in the canonical basis as (element, label, coefficient) triples.");
    m.def("canonical_str", [](const UdotElement& x) { return canon_str(to_canonical(x)); });
    m.def(
        "structure_constants",
        [](const UdotElement& x, const UdotElement& y) {
            auto cx = to_canonical(x), cy = to_canonical(y);
            if (cx.size() != 1 || cy.size() != 1 || cx.begin()->second != LaurentPoly(1) ||
                cy.begin()->second != LaurentPoly(1))
                throw py::value_error("structure constants need two canonical basis elements");
            auto sc = structure_constants(cx.begin()->first, cy.begin()->first);
            return py::make_tuple(canon_list(sc.terms), sc.positive);
        },
        "Canonical expansion of x*y for canonical x, y, and whether every coefficient is in N[q, q^-1].");
    m.def("symmetry", [](const std::string& which, const UdotElement& x) { return apply_symmetry(sym_of(which), x); });
    m.def("form", &form);
    m.def("form_alt", &form_alt);
    m.def("form_bilinear", &form_bilinear);
    m.def("grdim", &grdim);
    m.def("verify_nasty", [](int a, int b, int c, int n) {
        auto s = verify_nasty(a, b, c, n);
        return py::make_tuple(s.ok(), s.lhs, s.rhs);
    });
    m.def("canonical_label", [](const UdotElement& x) {
        auto c = to_canonical(x);
        if (c.size() != 1) throw py::value_error("not a multiple of a canonical basis element");
        return label_dict(c.begin()->first);
    });

    // ---- nilHecke and Schubert polynomials
    m.def("schubert", [](const std::string& w) { return schubert(Perm::parse(w)).str(); });
    m.def("reduced_word", [](const std::string& w) { return Perm::parse(w).reduced_word(); });
    m.def("nh_mul", [](int a, const std::string& x, const std::string& y) {
        return nh_mul(NHElement::parse(a, x), NHElement::parse(a, y)).str();
    });
    m.def("e_w0", [](int a) { return e_w0(a).str(); });
    m.def("e_w0_idempotent", [](int a) { return is_idempotent(e_w0(a)); });
    m.def("graded_rank_checks", [](int a) {
        auto r = graded_rank_checks(a);
        py::dict d;
        d["ok"] = r.ok();
        d["nilhecke_rank"] = r.nilhecke_rank;
        return d;
    });

    // ---- Grassmannian cohomology
    py::class_<GrElement>(m, "GrElement")
        .def_static("one", &GrElement::one)
        .def_static("schur", [](int k, int N, const std::vector<int>& p) { return GrElement::schur(k, N, p); })
        .def_static("x", &GrElement::x)
        .def_static("y", &GrElement::y)
        .def_property_readonly("k", &GrElement::k)
        .def_property_readonly("N", &GrElement::N)
        .def("is_zero", &GrElement::is_zero)
        .def("terms", [](const GrElement& e) {
            py::dict d;
            for (const auto& [p, c] : e.terms()) d[partition(p)] = fraction(c);
            return d;
        })
        .def("__add__", [](const GrElement& a, const GrElement& b) { return a + b; })
        .def("__sub__", [](const GrElement& a, const GrElement& b) { return a - b; })
        .def("__mul__", [](const GrElement& a, const GrElement& b) { return gr_mul(a, b); })
        .def("__eq__", [](const GrElement& a, const GrElement& b) { return a == b; })
        .def("__str__", &GrElement::str);
    m.def("gr_from_poly", &gr_from_poly, py::arg("k"), py::arg("N"), py::arg("expr"));
    m.def("gr_graded_dim", &gr_graded_dim);
    m.def("gaussian_binomial_q2", &gaussian_binomial_q2);
    m.def("bubble_class", &bubble_class);

    // ---- diagrams, exchanged as JSON text
    m.def("diagram_str", [](const std::string& j) { return twomor_from_json(j).str(); });
    m.def("diagram_degrees", [](const std::string& j) { return twomor_from_json(j).degrees(); });
    m.def("diagram_roundtrip", [](const std::string& j) { return twomor_to_json(twomor_from_json(j)); });
    m.def("auto_N", [](const std::string& j) { return auto_N(twomor_from_json(j)); });
    m.def(
        "eval_is_zero", [](const std::string& j, int N) { return eval(twomor_from_json(j), N).is_zero(); },
        py::arg("diagram"), py::arg("N"));
    m.def(
        "equal_under_gamma",
        [](const std::string& a, const std::string& b, std::optional<int> N) {
            auto r = equal_under_gamma(twomor_from_json(a), twomor_from_json(b), N);
            return py::make_tuple(r.equal, r.N);
        },
        py::arg("a"), py::arg("b"), py::arg("N") = py::none());
    m.def(
        "reduce_closed",
        [](const std::string& j, std::optional<int> N, const std::string& orient) {
            return closed_to_bubbles(twomor_from_json(j), N, orient).str();
        },
        py::arg("diagram"), py::arg("N") = py::none(), py::arg("orient") = "");
    m.def("diagram_symmetry", [](const std::string& which, const std::string& j) {
        return twomor_to_json(symmetry(twomor_from_json(j), diag_sym_of(which)));
    });
    m.def("fake_bubble", [](int n, int j) { return fake_bubble_poly(n, j).str(); });

    // ---- verification
    m.def("suite_names", &suite_names);
    m.def(
        "relation_suite",
        [](int Nmin, int Nmax, std::optional<int> nmin, std::optional<int> nmax, const std::string& suite,
           unsigned threads) {
            SuiteReport r;
            {
                py::gil_scoped_release release;
                r = relation_suite(Nmin, Nmax, nmin, nmax, suite, threads);
            }
            py::list out;
            for (const auto& c : r.checks) {
                py::dict d;
                d["group"] = c.group;
                d["name"] = c.name;
                d["n"] = c.n;
                d["N"] = c.N;
                d["ok"] = c.ok;
                d["detail"] = c.detail;
                out.append(d);
            }
            return out;
        },
        py::arg("Nmin"), py::arg("Nmax"), py::arg("nmin") = py::none(), py::arg("nmax") = py::none(),
        py::arg("suite") = "all", py::arg("threads") = 1);
    m.def("decomposition_idempotents", [](int n, int N) {
        auto r = decomposition_idempotents(n, N);
        return py::make_tuple(r.ok, r.pairs.size(), r.failures);
    });
    m.def(
        "endring_dim_check",
        [](int a, int n, int d, std::optional<int> N) {
            auto r = endring_dim_check(a, n, d, N);
            py::dict out;
            out["N"] = r.N;
            out["count"] = r.count;
            out["predicted"] = r.predicted;
            out["rank"] = r.rank;
            out["ok"] = r.ok();
            return out;
        },
        py::arg("a"), py::arg("n"), py::arg("d"), py::arg("N") = py::none());
    m.def("bubble_generation_check", [](int k, int N) { return bubble_generation_check(k, N).ok(); });
}
