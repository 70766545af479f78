#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "support/generators.hpp"
#include "tdpoly/cli.hpp"
#include "tdpoly/io.hpp"

using namespace tdpoly;
using tdpoly::testing::Rng;
using tdpoly::testing::random_array;

namespace {

Field Q = Field::rationals();

const char* kD1Array =
    "field: Q\n"
    "d: 1\n"
    "type: II\n"
    "beta: 2\n"
    "theta: 1, -1\n"
    "theta_star: 1, -1\n"
    "zeta: 1, 2\n";

struct CliRun {
    int code;
    std::string out, err;
};

CliRun run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = run_cli(std::move(args), out, err);
    return CliRun{code, out.str(), err.str()};
}

// Writes content to a temp file and returns the path.
std::string temp_file(const std::string& name, const std::string& content) {
    std::string path = "cli_test_" + name;
    std::ofstream f(path);
    f << content;
    return path;
}

}  // namespace

TEST_CASE("array file round trip") {
    ParsedArray parsed = parse_array_text(kD1Array);
    CHECK(parsed.pa.d() == 1);
    CHECK(parsed.pa.type() == TDType::II);
    std::string rendered = render_array_text(parsed.pa, parsed.td);
    ParsedArray again = parse_array_text(rendered);
    CHECK(again.pa.theta() == parsed.pa.theta());
    CHECK(again.pa.zeta() == parsed.pa.zeta());
    CHECK(render_array_text(again.pa, again.td) == rendered);
}

TEST_CASE("random arrays survive render / parse") {
    struct Row {
        TDType type;
        Field field;
        int d;
    };
    for (const Row& row : std::initializer_list<Row>{{TDType::I, Q, 4},
                                                     {TDType::II, Field::prime(11), 5},
                                                     {TDType::IIIMinus, Q, 3},
                                                     {TDType::IV, Field::gf4(), 3}}) {
        Rng rng(7);
        ParameterArray pa = random_array(row.type, row.field, row.d, rng);
        ParsedArray again = parse_array_text(render_array_text(pa, std::nullopt));
        CHECK(again.pa.theta() == pa.theta());
        CHECK(again.pa.theta_star() == pa.theta_star());
        CHECK(again.pa.zeta() == pa.zeta());
        CHECK(again.pa.beta() == pa.beta());
    }
}

TEST_CASE("beta may be omitted for d >= 3 and is recomputed") {
    std::string text =
        "field: Q\nd: 3\ntype: II\n"
        "theta: 3, 1, -1, -3\ntheta_star: -3, -1, 1, 3\n"
        "zeta: 1, 2, 3, 4\n";
    ParsedArray parsed = parse_array_text(text);
    CHECK(parsed.pa.beta() == FieldElement::from_int(Q, 2));
    // A stored base that contradicts the ratios is rejected.
    CHECK_THROWS_AS(parse_array_text(text + "beta: 3\n"), DomainError);
}

TEST_CASE("phi records convert to zeta") {
    std::string text =
        "field: Q\nd: 2\ntype: II\nbeta: 2\n"
        "theta: 1, 0, -1\ntheta_star: 2, 0, -2\n"
        "phi: 2, 3\n";
    ParsedArray parsed = parse_array_text(text);
    CHECK(parsed.pa.zeta() == std::vector<FieldElement>{FieldElement::parse(Q, "1"),
                                                        FieldElement::parse(Q, "2"),
                                                        FieldElement::parse(Q, "6")});
}

TEST_CASE("array file rejections") {
    CHECK_THROWS_AS(parse_array_text("field: Q\nd: 1\n"), ParseError);  // missing keys
    CHECK_THROWS_AS(parse_array_text(std::string(kD1Array) + "phi: 2\n"), DomainError);
    CHECK_THROWS_AS(parse_array_text(std::string(kD1Array) + "junk: 2\n"), ParseError);
    CHECK_THROWS_AS(parse_array_text(std::string(kD1Array) + "a: 1\n"), ParseError);
    // Wrong type tag for the base.
    std::string wrong = kD1Array;
    wrong.replace(wrong.find("type: II"), 8, "type: I ");
    CHECK_THROWS_AS(parse_array_text(wrong), DomainError);
    // Bad lengths.
    CHECK_THROWS_AS(parse_array_text("field: Q\nd: 2\ntype: II\nbeta: 2\n"
                                     "theta: 1, -1\ntheta_star: 1, -1\nzeta: 1, 2\n"),
                    DomainError);
}

TEST_CASE("matrix file round trip") {
    std::vector<FieldElement> theta{FieldElement::parse(Q, "3"), FieldElement::parse(Q, "-2")};
    std::vector<FieldElement> theta_star{FieldElement::parse(Q, "1"),
                                         FieldElement::parse(Q, "4")};
    std::vector<FieldElement> phi{FieldElement::parse(Q, "7")};
    MatrixPair mp = realize_matrices(theta, theta_star, phi);
    std::string text = render_matrix_text(mp, theta, theta_star);
    MatrixFile mf = parse_matrix_text(text);
    CHECK(mf.A == mp.A);
    CHECK(mf.A_star == mp.A_star);
    CHECK(mf.theta == theta);
}

TEST_CASE("cli: validate and drinfeld on the worked example") {
    std::string path = temp_file("d1.arr", kD1Array);
    CliRun v = run({"validate", path});
    CHECK(v.code == 0);
    CHECK(v.out == "field: Q\nd: 1\ntype: II\nbeta: 2\n");

    CliRun d = run({"drinfeld", path});
    CHECK(d.code == 0);
    CHECK(d.out == "[4, -1]\n");

    CliRun n = run({"drinfeld", path, "--normalized"});
    CHECK(n.code == 0);
    // u = d^2 = 1, v = 2 a a* with a = (theta_0 + theta_1)/2 = 0.
    CHECK(n.out.find("u: 1\n") != std::string::npos);
    CHECK(n.out.find("v: 0\n") != std::string::npos);

    CliRun s = run({"specials", path});
    CHECK(s.code == 0);
    CHECK(s.out.find("P(diag): 2\n") != std::string::npos);
    CHECK(s.out.find("PASS") != std::string::npos);

    CliRun c = run({"d4-check", path});
    CHECK(c.code == 0);
    CHECK(c.out == "PASS\n");

    std::remove(path.c_str());
}

TEST_CASE("cli: relative flag transforms before computing") {
    std::string path = temp_file("rel.arr", kD1Array);
    // P is D4-invariant, so the polynomial must not change.
    CliRun base = run({"drinfeld", path});
    for (const char* word : {"s", "d", "D", "dD", "sdD"}) {
        CliRun moved = run({"drinfeld", path, "--relative", word});
        CHECK(moved.code == 0);
        CHECK(moved.out == base.out);
    }
    CliRun bad = run({"validate", path, "--relative", "x"});
    CHECK(bad.code == 2);
    CHECK(bad.err.find("error[parse]") != std::string::npos);
    std::remove(path.c_str());
}

TEST_CASE("cli: error classes and exit codes") {
    CliRun missing = run({"validate", "no_such_file.arr"});
    CHECK(missing.code == 2);
    CHECK(missing.err.find("error[io]") != std::string::npos);

    std::string bad_path = temp_file("bad.arr", "field: Q\nd: one\n");
    CliRun bad = run({"validate", bad_path});
    CHECK(bad.code == 2);
    CHECK(bad.err.find("error[parse]") != std::string::npos);
    std::remove(bad_path.c_str());

    std::string invalid_path = temp_file("inv.arr",
                                         "field: Q\nd: 1\ntype: II\nbeta: 2\n"
                                         "theta: 1, 1\ntheta_star: 1, -1\nzeta: 1, 2\n");
    CliRun invalid = run({"validate", invalid_path});
    CHECK(invalid.code == 2);
    CHECK(invalid.err.find("error[invalid]") != std::string::npos);
    std::remove(invalid_path.c_str());

    CliRun usage = run({"no-such-command"});
    CHECK(usage.code == 2);
    CHECK(usage.err.find("error[cli]") != std::string::npos);
}

TEST_CASE("cli: bracket, krawtchouk, qgeometric, series") {
    CliRun b = run({"bracket", "1", "1", "1", "--type", "II"});
    CHECK(b.code == 0);
    CHECK(b.out == "4/3\n");

    CliRun b4 = run({"bracket", "1", "1", "1", "--type", "IV", "--field", "GF4"});
    CHECK(b4.out == "0\n");

    CliRun biq = run({"bracket", "1", "1", "1", "--type", "I", "--q", "2"});
    CHECK(biq.code == 0);

    CliRun k = run({"krawtchouk", "--d", "2", "--zeta", "1,3,-5"});
    CHECK(k.code == 0);
    CHECK(k.out.find("PASS") != std::string::npos);

    CliRun g = run({"qgeometric", "--d", "2", "--q", "3", "--zeta", "1,1/2,-4"});
    CHECK(g.code == 0);
    CHECK(g.out.find("PASS") != std::string::npos);

    CliRun se = run({"series", "eval", "--kind", "2F1", "--num", "-1,3", "--den", "5",
                     "--arg", "1", "--n", "1"});
    CHECK(se.code == 0);
    CHECK(se.out == "2/5\n");

    CliRun sc = run({"series", "check", "--identity", "saalschutz", "--n", "3", "--params",
                     "2,3/2,9"});
    CHECK(sc.code == 0);
    CHECK(sc.out == "PASS\n");

    CliRun qc = run({"series", "check", "--identity", "q-chu-vandermonde", "--n", "2",
                     "--params", "3,7", "--q", "2", "--variant", "unit"});
    CHECK(qc.code == 0);
    CHECK(qc.out == "PASS\n");
}

TEST_CASE("cli: leonard pipeline") {
    std::string data = temp_file("leo.dat",
                                 "field: Q\nd: 3\ntype: I\nq: 2\n"
                                 "a: 0\nb: 1\nc: 0\na*: 0\nb*: 0\nc*: 1\n");
    CliRun phi = run({"leonard", "phi", "--type", "I", "--data", data, "--t", "3"});
    CHECK(phi.code == 0);
    CHECK(phi.out.find("phi: ") != std::string::npos);
    CHECK(phi.out.find("phi2: ") != std::string::npos);

    CliRun roots = run({"leonard", "roots", "--type", "I", "--data", data, "--t", "3"});
    CHECK(roots.code == 0);
    CHECK(roots.out.find("roots: 12, 3, 3/4\n") != std::string::npos);

    CliRun realize = run({"leonard", "realize", "--type", "I", "--data", data, "--t", "3"});
    CHECK(realize.code == 0);
    std::string mat_path = temp_file("leo.mat", realize.out);
    CliRun oracle = run({"leonard", "oracle", mat_path});
    CHECK(oracle.code == 0);
    CHECK(oracle.out.rfind("zeta: 1, ", 0) == 0);
    CliRun alias = run({"oracle", mat_path});
    CHECK(alias.out == oracle.out);

    // Type tag mismatch between file and flag.
    CliRun clash = run({"leonard", "phi", "--type", "II", "--data", data, "--t", "3"});
    CHECK(clash.code == 2);
    CHECK(clash.err.find("error[invalid]") != std::string::npos);

    std::remove(data.c_str());
    std::remove(mat_path.c_str());
}

TEST_CASE("cli output is deterministic") {
    std::string path = temp_file("det.arr", kD1Array);
    CliRun a = run({"drinfeld", path, "--normalized"});
    CliRun b = run({"drinfeld", path, "--normalized"});
    CHECK(a.out == b.out);
    CHECK(a.code == b.code);
    std::remove(path.c_str());
}

TEST_CASE("printed values re-parse to equal values") {
    Rng rng(11);
    ParameterArray pa = random_array(TDType::I, Q, 4, rng);
    std::string rendered = render_element_list(pa.zeta());
    std::vector<FieldElement> back = parse_element_list(Q, rendered);
    CHECK(back == pa.zeta());
}

TEST_CASE("shipped fixtures validate and are D4-invariant") {
    for (const char* name : {"leonard_d1.arr", "qracah_d3.arr", "gf4_type_iv.arr"}) {
        std::string path = std::string(TDPOLY_FIXTURE_DIR) + "/" + name;
        CliRun v = run({"validate", path});
        CAPTURE(name);
        CAPTURE(v.err);
        CHECK(v.code == 0);
        CliRun c = run({"d4-check", path});
        CHECK(c.code == 0);
        CHECK(c.out == "PASS\n");
        CliRun s = run({"specials", path});
        CHECK(s.code == 0);
    }
    std::string leo = std::string(TDPOLY_FIXTURE_DIR) + "/qgeom_leonard_d3.dat";
    CliRun r = run({"leonard", "roots", "--type", "I", "--data", leo, "--t", "3"});
    CHECK(r.code == 0);
    CHECK(r.out.find("roots: 12, 3, 3/4") != std::string::npos);
}
