// Python bindings: the main operations, with exact values passed as
// strings in the same grammar the CLI uses.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "tdpoly/brackets.hpp"
#include "tdpoly/drinfeld.hpp"
#include "tdpoly/io.hpp"
#include "tdpoly/series.hpp"

namespace py = pybind11;
using namespace tdpoly;

namespace {

std::vector<std::string> render_all(std::span<const FieldElement> values) {
    std::vector<std::string> out;
    out.reserve(values.size());
    for (const FieldElement& v : values) out.push_back(v.to_string());
    return out;
}

std::vector<FieldElement> parse_all(const Field& f, const std::vector<std::string>& texts) {
    std::vector<FieldElement> out;
    out.reserve(texts.size());
    for (const std::string& t : texts) out.push_back(FieldElement::parse(f, t));
    return out;
}

std::vector<std::string> poly_coeffs(const Polynomial& p) { return render_all(p.coeffs()); }

struct PyArray {
    ParsedArray parsed;

    TypeData type_data() const {
        if (parsed.td) return *parsed.td;
        return fit_type_data(parsed.pa.theta(), parsed.pa.theta_star(), parsed.pa.type(),
                             parsed.pa.q());
    }
};

TypeData scalars_to_type_data(const std::string& type, const Field& f,
                              const std::map<std::string, std::string>& scalars) {
    TDType t = type_from_string(type);
    auto get = [&](const char* key) {
        auto it = scalars.find(key);
        if (it == scalars.end()) throw DomainError(std::string("missing scalar ") + key);
        return FieldElement::parse(f, it->second);
    };
    std::optional<FieldElement> q;
    if (auto it = scalars.find("q"); it != scalars.end()) q = FieldElement::parse(f, it->second);
    return TypeData{t,        q,         get("a"),  get("b"),
                    get("c"), get("a*"), get("b*"), get("c*")};
}

}  // namespace

PYBIND11_MODULE(tdpoly, m) {
    m.doc() = "Exact Drinfel'd polynomials of sharp tridiagonal systems";

    py::register_exception<ParseError>(m, "TdpolyParseError", PyExc_ValueError);
    py::register_exception<DomainError>(m, "TdpolyDomainError", PyExc_ValueError);

    py::class_<PyArray>(m, "Array")
        .def_static("from_text",
                    [](const std::string& text) { return PyArray{parse_array_text(text)}; })
        .def("to_text",
             [](const PyArray& a) { return render_array_text(a.parsed.pa, a.parsed.td); })
        .def_property_readonly("field",
                               [](const PyArray& a) { return a.parsed.pa.field().to_string(); })
        .def_property_readonly("d", [](const PyArray& a) { return a.parsed.pa.d(); })
        .def_property_readonly(
            "type", [](const PyArray& a) { return type_to_string(a.parsed.pa.type()); })
        .def_property_readonly("beta",
                               [](const PyArray& a) { return a.parsed.pa.beta().to_string(); })
        .def_property_readonly("theta",
                               [](const PyArray& a) { return render_all(a.parsed.pa.theta()); })
        .def_property_readonly(
            "theta_star", [](const PyArray& a) { return render_all(a.parsed.pa.theta_star()); })
        .def_property_readonly("zeta",
                               [](const PyArray& a) { return render_all(a.parsed.pa.zeta()); })
        .def("relative", [](const PyArray& a, const std::string& word) {
            ParameterArray moved = d4_apply(a.parsed.pa, word);
            std::optional<TypeData> td;
            if (a.parsed.td) td = d4_transform_type_data(*a.parsed.td, word);
            return PyArray{ParsedArray{std::move(moved), std::move(td)}};
        });

    m.def("drinfeld", [](const PyArray& a) { return poly_coeffs(drinfeld_poly(a.parsed.pa)); });

    m.def("normalized_drinfeld", [](const PyArray& a) {
        TypeData td = a.type_data();
        Polynomial hat = normalized_drinfeld(a.parsed.pa, td);
        auto [u, v] = affine_uv(td, a.parsed.pa.d());
        return py::make_tuple(poly_coeffs(hat), u.to_string(), v.to_string());
    });

    m.def("d4_check", [](const PyArray& a) {
        CheckResult r = check_d4_invariance(a.parsed.pa);
        return py::make_tuple(r.ok, r.detail);
    });

    m.def("specials", [](const PyArray& a) {
        SpecialsResult r = evaluate_specials(a.parsed.pa);
        py::dict out;
        out["p_diag"] = r.value_at_diag.to_string();
        out["zeta_d"] = r.zeta_d.to_string();
        out["p_cross"] = r.value_at_cross.to_string();
        out["zeta_down_d"] = r.zeta_down_d.to_string();
        out["ok"] = r.ok;
        return out;
    });

    m.def(
        "bracket",
        [](int r, int s, int t, const std::string& type, const std::string& field,
           const std::optional<std::string>& q) {
            Field f = Field::parse(field);
            BracketContext ctx{type_from_string(type), f, r + s + t, std::nullopt};
            if (q) ctx.q = FieldElement::parse(f, *q);
            return bracket(r, s, t, ctx).to_string();
        },
        py::arg("r"), py::arg("s"), py::arg("t"), py::arg("type"), py::arg("field") = "Q",
        py::arg("q") = std::nullopt);

    m.def("krawtchouk", [](int d, const std::vector<std::string>& zeta) {
        return poly_coeffs(krawtchouk_drinfeld(parse_all(Field::rationals(), zeta), d));
    });
    m.def("krawtchouk_check", [](int d, const std::vector<std::string>& zeta) {
        return check_krawtchouk_relation(parse_all(Field::rationals(), zeta), d).ok;
    });

    m.def("qgeometric", [](int d, const std::string& q, const std::vector<std::string>& zeta) {
        Field f = Field::rationals();
        return poly_coeffs(qgeometric_drinfeld(parse_all(f, zeta), d, FieldElement::parse(f, q)));
    });
    m.def("qgeometric_check",
          [](int d, const std::string& q, const std::vector<std::string>& zeta) {
              Field f = Field::rationals();
              return check_qgeometric_relation(parse_all(f, zeta), d, FieldElement::parse(f, q))
                  .ok;
          });

    m.def(
        "series_eval",
        [](const std::string& kind, const std::vector<std::string>& num,
           const std::vector<std::string>& den, const std::string& arg, int n,
           const std::optional<std::string>& q, const std::string& field) {
            Field f = Field::parse(field);
            SeriesSpec spec{series_kind_from_string(kind), parse_all(f, num), parse_all(f, den),
                            FieldElement::parse(f, arg),   std::nullopt,      n};
            if (q) spec.q = FieldElement::parse(f, *q);
            return evaluate_series(spec).to_string();
        },
        py::arg("kind"), py::arg("num"), py::arg("den"), py::arg("arg"), py::arg("n"),
        py::arg("q") = std::nullopt, py::arg("field") = "Q");

    m.def(
        "series_check",
        [](const std::string& identity, int n, const std::vector<std::string>& params,
           const std::optional<std::string>& q, const std::string& variant,
           const std::string& field) {
            Field f = Field::parse(field);
            std::vector<FieldElement> p = parse_all(f, params);
            auto need_q = [&] {
                if (!q) throw DomainError("basic identity needs q");
                return FieldElement::parse(f, *q);
            };
            CheckResult r;
            if (identity == "saalschutz") {
                r = check_saalschutz(n, p.at(0), p.at(1), p.at(2));
            } else if (identity == "chu-vandermonde") {
                r = check_chu_vandermonde(n, p.at(0), p.at(1));
            } else if (identity == "q-saalschutz") {
                r = check_q_saalschutz(n, p.at(0), p.at(1), p.at(2), need_q());
            } else if (identity == "q-chu-vandermonde") {
                QChuVariant v = variant == "unit" ? QChuVariant::UnitArgument
                                                  : QChuVariant::BalancedArgument;
                r = check_q_chu_vandermonde(n, p.at(0), p.at(1), need_q(), v);
            } else {
                throw DomainError("unknown identity: " + identity);
            }
            return py::make_tuple(r.ok, r.detail);
        },
        py::arg("identity"), py::arg("n"), py::arg("params"), py::arg("q") = std::nullopt,
        py::arg("variant") = "balanced", py::arg("field") = "Q");

    m.def(
        "leonard_phi",
        [](const std::string& type, const std::string& field, int d,
           const std::map<std::string, std::string>& scalars, const std::string& t,
           const std::optional<std::string>& psi) {
            Field f = Field::parse(field);
            TypeData td = scalars_to_type_data(type, f, scalars);
            std::optional<FieldElement> p;
            if (psi) p = FieldElement::parse(f, *psi);
            LeonardData ld = phi_from_params(td, d, FieldElement::parse(f, t), p);
            return py::make_tuple(render_all(ld.phi), render_all(ld.phi2));
        },
        py::arg("type"), py::arg("field"), py::arg("d"), py::arg("scalars"), py::arg("t"),
        py::arg("psi") = std::nullopt);

    m.def(
        "leonard_roots",
        [](const std::string& type, const std::string& field, int d,
           const std::map<std::string, std::string>& scalars, const std::string& t,
           const std::optional<std::string>& psi) {
            Field f = Field::parse(field);
            TypeData td = scalars_to_type_data(type, f, scalars);
            FieldElement tval = FieldElement::parse(f, t);
            std::optional<FieldElement> p;
            if (psi) p = FieldElement::parse(f, *psi);
            if (!p) {
                std::vector<FieldElement> sols = solve_psi(td, d, tval);
                if (!sols.empty()) p = sols.front();
            }
            LeonardData ld = phi_from_params(td, d, tval, p);
            return render_all(leonard_roots(ld));
        },
        py::arg("type"), py::arg("field"), py::arg("d"), py::arg("scalars"), py::arg("t"),
        py::arg("psi") = std::nullopt);

    m.def("solve_psi", [](const std::string& type, const std::string& field, int d,
                          const std::map<std::string, std::string>& scalars,
                          const std::string& t) {
        Field f = Field::parse(field);
        TypeData td = scalars_to_type_data(type, f, scalars);
        return render_all(solve_psi(td, d, FieldElement::parse(f, t)));
    });

    m.def("type_iv_roots_check", [](const std::map<std::string, std::string>& scalars,
                                    const std::string& phi) {
        Field f = Field::gf4();
        TypeData td = scalars_to_type_data("IV", f, scalars);
        CheckResult r = check_type_iv_roots(td, FieldElement::parse(f, phi));
        return py::make_tuple(r.ok, r.detail);
    });

    m.def("realize", [](const std::string& type, const std::string& field, int d,
                        const std::map<std::string, std::string>& scalars, const std::string& t) {
        Field f = Field::parse(field);
        TypeData td = scalars_to_type_data(type, f, scalars);
        LeonardData ld = phi_from_params(td, d, FieldElement::parse(f, t));
        std::vector<FieldElement> theta = eigenvalues_from(td, d, false);
        std::vector<FieldElement> theta_star = eigenvalues_from(td, d, true);
        MatrixPair mp = realize_matrices(theta, theta_star, ld.phi);
        return render_matrix_text(mp, theta, theta_star);
    });

    m.def("oracle", [](const std::string& matrix_text) {
        MatrixFile mf = parse_matrix_text(matrix_text);
        return render_all(oracle_zeta(mf.A, mf.A_star, mf.theta, mf.theta_star));
    });
}
