#include "tdpoly/cli.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <CLI11.hpp>

#include "tdpoly/brackets.hpp"
#include "tdpoly/drinfeld.hpp"
#include "tdpoly/io.hpp"
#include "tdpoly/series.hpp"

namespace tdpoly {
namespace {

struct IoError : Error {
    using Error::Error;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot read file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

TypeData array_type_data(const ParsedArray& parsed) {
    if (parsed.td) return *parsed.td;
    return fit_type_data(parsed.pa.theta(), parsed.pa.theta_star(), parsed.pa.type(),
                         parsed.pa.q());
}

// Loads an array file and applies an optional D4 word; the type-data pack
// transforms alongside the array.
ParsedArray load_array(const std::string& path, const std::string& relative) {
    ParsedArray parsed = parse_array_text(read_file(path));
    if (!relative.empty()) {
        ParameterArray moved = d4_apply(parsed.pa, relative);
        std::optional<TypeData> td;
        if (parsed.td) td = d4_transform_type_data(*parsed.td, relative);
        return ParsedArray{std::move(moved), std::move(td)};
    }
    return parsed;
}

struct LeonardArgs {
    std::string type, data_path, t_text, psi_text;
};

// Shared setup for the leonard subcommands working from a scalar file.
struct LeonardInput {
    TypeData td;
    int d;
    FieldElement t;
    std::optional<FieldElement> psi;
};

LeonardInput leonard_input(const LeonardArgs& args) {
    TDType declared = type_from_string(args.type);
    LeonardFile file = parse_leonard_text(read_file(args.data_path));
    if (file.type && *file.type != declared)
        throw DomainError("file declares type " + type_to_string(*file.type) +
                          " but --type says " + type_to_string(declared));
    TypeData td = file.type_data(declared);
    FieldElement t = FieldElement::parse(file.field, args.t_text);
    std::optional<FieldElement> psi;
    if (!args.psi_text.empty()) psi = FieldElement::parse(file.field, args.psi_text);
    return LeonardInput{std::move(td), file.d, std::move(t), std::move(psi)};
}

int run_oracle_file(const std::string& path, std::ostream& out) {
    MatrixFile mf = parse_matrix_text(read_file(path));
    std::vector<FieldElement> zeta = oracle_zeta(mf.A, mf.A_star, mf.theta, mf.theta_star);
    out << "zeta: " << render_element_list(zeta) << "\n";
    return 0;
}

}  // namespace

int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact Drinfel'd polynomials of sharp tridiagonal systems"};
    app.require_subcommand(1);
    int exit_code = 0;

    // validate
    auto* validate = app.add_subcommand("validate", "Parse and validate a parameter-array file");
    std::string validate_file, validate_rel;
    validate->add_option("file", validate_file, "array file")->required();
    validate->add_option("--relative", validate_rel, "D4 word over s, d, D");
    validate->callback([&] {
        ParsedArray parsed = load_array(validate_file, validate_rel);
        out << "field: " << parsed.pa.field().to_string() << "\n";
        out << "d: " << parsed.pa.d() << "\n";
        out << "type: " << type_to_string(parsed.pa.type()) << "\n";
        out << "beta: " << parsed.pa.beta().to_string() << "\n";
    });

    // drinfeld
    auto* drin = app.add_subcommand("drinfeld", "Drinfel'd polynomial of an array file");
    std::string drin_file, drin_rel;
    bool drin_norm = false;
    drin->add_option("file", drin_file, "array file")->required();
    drin->add_option("--relative", drin_rel, "D4 word over s, d, D");
    drin->add_flag("--normalized", drin_norm, "emit the normalized polynomial and (u, v)");
    drin->callback([&] {
        ParsedArray parsed = load_array(drin_file, drin_rel);
        if (drin_norm) {
            TypeData td = array_type_data(parsed);
            Polynomial hat = normalized_drinfeld(parsed.pa, td);
            auto [u, v] = affine_uv(td, parsed.pa.d());
            out << hat.to_string() << "\n";
            out << "u: " << u.to_string() << "\n";
            out << "v: " << v.to_string() << "\n";
        } else {
            out << drinfeld_poly(parsed.pa).to_string() << "\n";
        }
    });

    // d4-check
    auto* d4 = app.add_subcommand("d4-check", "Check D4 invariance of P and P-hat");
    std::string d4_file;
    d4->add_option("file", d4_file, "array file")->required();
    d4->callback([&] {
        ParsedArray parsed = load_array(d4_file, "");
        CheckResult result = check_d4_invariance(parsed.pa);
        if (result.ok) {
            out << "PASS\n";
        } else {
            out << "FAIL " << result.detail << "\n";
            exit_code = 1;
        }
    });

    // specials
    auto* specials = app.add_subcommand("specials", "Evaluate P at the two special points");
    std::string specials_file;
    specials->add_option("file", specials_file, "array file")->required();
    specials->callback([&] {
        ParsedArray parsed = load_array(specials_file, "");
        SpecialsResult r = evaluate_specials(parsed.pa);
        out << "P(diag): " << r.value_at_diag.to_string() << "\n";
        out << "zeta_d: " << r.zeta_d.to_string() << "\n";
        out << "P(cross): " << r.value_at_cross.to_string() << "\n";
        out << "zeta_down_d: " << r.zeta_down_d.to_string() << "\n";
        if (r.ok) {
            out << "PASS\n";
        } else {
            out << "FAIL " << r.detail << "\n";
            exit_code = 1;
        }
    });

    // bracket
    auto* br = app.add_subcommand("bracket", "Evaluate the scalar [r,s,t]");
    int br_r = 0, br_s = 0, br_t = 0;
    std::string br_type, br_q, br_field = "Q";
    br->add_option("r", br_r)->required();
    br->add_option("s", br_s)->required();
    br->add_option("t", br_t)->required();
    br->add_option("--type", br_type, "type tag I, II, III+, III-, IV")->required();
    br->add_option("--q", br_q, "q for type I");
    br->add_option("--field", br_field, "field descriptor (default Q)");
    br->callback([&] {
        Field f = Field::parse(br_field);
        BracketContext ctx{type_from_string(br_type), f, br_r + br_s + br_t, std::nullopt};
        if (!br_q.empty()) ctx.q = FieldElement::parse(f, br_q);
        out << bracket(br_r, br_s, br_t, ctx).to_string() << "\n";
    });

    // krawtchouk
    auto* kraw = app.add_subcommand("krawtchouk",
                                    "Krawtchouk-type Drinfel'd polynomial and relation check");
    int kraw_d = 0;
    std::string kraw_zeta;
    kraw->add_option("--d", kraw_d, "diameter")->required();
    kraw->add_option("--zeta", kraw_zeta, "comma-separated zeta_0..zeta_d")->required();
    kraw->callback([&] {
        Field f = Field::rationals();
        std::vector<FieldElement> zeta = parse_element_list(f, kraw_zeta);
        out << krawtchouk_drinfeld(zeta, kraw_d).to_string() << "\n";
        CheckResult result = check_krawtchouk_relation(zeta, kraw_d);
        if (result.ok) {
            out << "PASS\n";
        } else {
            out << "FAIL " << result.detail << "\n";
            exit_code = 1;
        }
    });

    // qgeometric
    auto* geom = app.add_subcommand("qgeometric",
                                    "q-geometric Drinfel'd polynomial and relation check");
    int geom_d = 0;
    std::string geom_zeta, geom_q, geom_field = "Q";
    geom->add_option("--d", geom_d, "diameter")->required();
    geom->add_option("--q", geom_q, "q (not a root of unity up to order 2d)")->required();
    geom->add_option("--zeta", geom_zeta, "comma-separated zeta_0..zeta_d")->required();
    geom->add_option("--field", geom_field, "field descriptor (default Q)");
    geom->callback([&] {
        Field f = Field::parse(geom_field);
        FieldElement q = FieldElement::parse(f, geom_q);
        std::vector<FieldElement> zeta = parse_element_list(f, geom_zeta);
        out << qgeometric_drinfeld(zeta, geom_d, q).to_string() << "\n";
        CheckResult result = check_qgeometric_relation(zeta, geom_d, q);
        if (result.ok) {
            out << "PASS\n";
        } else {
            out << "FAIL " << result.detail << "\n";
            exit_code = 1;
        }
    });

    // series eval / check
    auto* series = app.add_subcommand("series", "Terminating (q-)hypergeometric series");
    series->require_subcommand(1);
    auto* seval = series->add_subcommand("eval", "Evaluate a terminating series");
    std::string se_kind, se_num, se_den, se_arg, se_q, se_field = "Q";
    int se_n = 0;
    seval->add_option("--kind", se_kind, "3F2, 2F1, 1F0, 3phi2, 2phi1")->required();
    seval->add_option("--num", se_num, "numerator parameters")->required();
    seval->add_option("--den", se_den, "denominator parameters");
    seval->add_option("--arg", se_arg, "argument")->required();
    seval->add_option("--q", se_q, "q for basic kinds");
    seval->add_option("--n", se_n, "termination order")->required();
    seval->add_option("--field", se_field, "field descriptor (default Q)");
    seval->callback([&] {
        Field f = Field::parse(se_field);
        SeriesSpec spec{series_kind_from_string(se_kind),
                        parse_element_list(f, se_num),
                        se_den.empty() ? std::vector<FieldElement>{}
                                       : parse_element_list(f, se_den),
                        FieldElement::parse(f, se_arg),
                        std::nullopt,
                        se_n};
        if (!se_q.empty()) spec.q = FieldElement::parse(f, se_q);
        out << evaluate_series(spec).to_string() << "\n";
    });

    auto* scheck = series->add_subcommand("check", "Verify a summation identity");
    std::string sc_identity, sc_params, sc_q, sc_variant = "balanced", sc_field = "Q";
    int sc_n = 0;
    scheck->add_option("--identity", sc_identity,
                       "saalschutz, chu-vandermonde, q-saalschutz, q-chu-vandermonde")
        ->required();
    scheck->add_option("--n", sc_n, "termination order")->required();
    scheck->add_option("--params", sc_params, "comma-separated free parameters")->required();
    scheck->add_option("--q", sc_q, "q for the basic identities");
    scheck->add_option("--variant", sc_variant, "q-Chu-Vandermonde form: balanced or unit");
    scheck->add_option("--field", sc_field, "field descriptor (default Q)");
    scheck->callback([&] {
        Field f = Field::parse(sc_field);
        std::vector<FieldElement> params = parse_element_list(f, sc_params);
        auto need = [&](size_t n) {
            if (params.size() != n)
                throw DomainError("identity needs exactly " + std::to_string(n) + " parameters");
        };
        auto need_q = [&] {
            if (sc_q.empty()) throw DomainError("basic identity needs --q");
            return FieldElement::parse(f, sc_q);
        };
        CheckResult result;
        if (sc_identity == "saalschutz") {
            need(3);
            result = check_saalschutz(sc_n, params[0], params[1], params[2]);
        } else if (sc_identity == "chu-vandermonde") {
            need(2);
            result = check_chu_vandermonde(sc_n, params[0], params[1]);
        } else if (sc_identity == "q-saalschutz") {
            need(3);
            result = check_q_saalschutz(sc_n, params[0], params[1], params[2], need_q());
        } else if (sc_identity == "q-chu-vandermonde") {
            need(2);
            QChuVariant variant;
            if (sc_variant == "balanced") variant = QChuVariant::BalancedArgument;
            else if (sc_variant == "unit") variant = QChuVariant::UnitArgument;
            else throw DomainError("variant must be balanced or unit");
            result = check_q_chu_vandermonde(sc_n, params[0], params[1], need_q(), variant);
        } else {
            throw DomainError("unknown identity: " + sc_identity);
        }
        if (result.ok) {
            out << "PASS\n";
        } else {
            out << "FAIL " << result.detail << "\n";
            exit_code = 1;
        }
    });

    // leonard phi / roots / realize / oracle
    auto* leo = app.add_subcommand("leonard", "Leonard-system parameterizations and the oracle");
    leo->require_subcommand(1);
    LeonardArgs phi_args, roots_args, realize_args;

    auto add_scalar_opts = [](CLI::App* cmd, LeonardArgs& a) {
        cmd->add_option("--type", a.type, "type tag I, II, III-, IV")->required();
        cmd->add_option("--data", a.data_path, "scalar file with field, d, q?, a..c*")->required();
        cmd->add_option("--t", a.t_text, "the scalar t (for type IV: the scalar phi)")->required();
        cmd->add_option("--psi", a.psi_text, "psi, when the subcase needs it");
    };

    auto* lphi = leo->add_subcommand("phi", "First and second split sequences");
    add_scalar_opts(lphi, phi_args);
    lphi->callback([&] {
        LeonardInput in = leonard_input(phi_args);
        LeonardData ld = phi_from_params(in.td, in.d, in.t, in.psi);
        out << "phi: " << render_element_list(ld.phi) << "\n";
        out << "phi2: " << render_element_list(ld.phi2) << "\n";
    });

    auto* lroots = leo->add_subcommand("roots", "Closed-form roots of the normalized polynomial");
    add_scalar_opts(lroots, roots_args);
    lroots->callback([&] {
        LeonardInput in = leonard_input(roots_args);
        std::optional<FieldElement> psi = in.psi;
        if (!psi) {
            std::vector<FieldElement> sols = solve_psi(in.td, in.d, in.t);
            if (!sols.empty()) psi = sols.front();
        }
        LeonardData ld = phi_from_params(in.td, in.d, in.t, psi);
        std::vector<FieldElement> roots = leonard_roots(ld);
        if (psi) out << "psi: " << psi->to_string() << "\n";
        out << "roots: " << render_element_list(roots) << "\n";
    });

    auto* lreal = leo->add_subcommand("realize", "Split-basis matrix realization");
    add_scalar_opts(lreal, realize_args);
    lreal->callback([&] {
        LeonardInput in = leonard_input(realize_args);
        LeonardData ld = phi_from_params(in.td, in.d, in.t, in.psi);
        std::vector<FieldElement> theta = eigenvalues_from(in.td, in.d, false);
        std::vector<FieldElement> theta_star = eigenvalues_from(in.td, in.d, true);
        MatrixPair mp = realize_matrices(theta, theta_star, ld.phi);
        out << render_matrix_text(mp, theta, theta_star);
    });

    auto* lorc = leo->add_subcommand("oracle", "Split sequence from a matrix file");
    std::string lorc_file;
    lorc->add_option("file", lorc_file, "matrix file")->required();
    lorc->callback([&] { run_oracle_file(lorc_file, out); });

    // oracle (top-level alias)
    auto* orc = app.add_subcommand("oracle", "Split sequence from a matrix file");
    std::string orc_file;
    orc->add_option("file", orc_file, "matrix file")->required();
    orc->callback([&] { run_oracle_file(orc_file, out); });

    std::reverse(args.begin(), args.end());
    try {
        app.parse(std::move(args));
    } catch (const CLI::Success& e) {
        app.exit(e, out, err);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error[cli]: " << e.get_name() << " " << e.what() << "\n";
        return 2;
    } catch (const IoError& e) {
        err << "error[io]: " << e.what() << "\n";
        return 2;
    } catch (const tdpoly::ParseError& e) {
        err << "error[parse]: " << e.what() << "\n";
        return 2;
    } catch (const DomainError& e) {
        err << "error[invalid]: " << e.what() << "\n";
        return 2;
    }
    return exit_code;
}

}  // namespace tdpoly
