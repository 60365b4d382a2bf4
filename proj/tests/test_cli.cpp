#include <doctest.h>

#include "lrx/cli.hpp"
#include "lrx/io.hpp"

#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>

using namespace lrx;

namespace {

struct CliResult {
    int exit_code;
    std::string out, err;
};

CliResult cli(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("check prints one row per axiom and exits by result") {
    CliResult ok = cli({"check", "demo:trivial_2x2"});
    CHECK(ok.exit_code == 0);
    for (int id : {1, 2, 3, 4, 5, 6, 9, 10, 11, 12, 13, 14, 15})
        CHECK(ok.out.find("lrc" + std::to_string(id)) != std::string::npos);
    CHECK(ok.out.find("all axioms hold") != std::string::npos);

    CliResult bad = cli({"check", "demo:broken_J"});
    CHECK(bad.exit_code == 1);
    CHECK(bad.out.find("lrc5") != std::string::npos);
    CHECK(bad.out.find("(g, g, x)") != std::string::npos);

    // deterministic across runs, witness tuples included
    CHECK(cli({"check", "demo:broken_J"}).out == bad.out);
}

TEST_CASE("json report is machine readable with stable keys") {
    CliResult r = cli({"check", "demo:broken_J", "--json-report"});
    CHECK(r.exit_code == 1);
    nlohmann::json j = nlohmann::json::parse(r.out);
    CHECK(j["format"] == "lrx-report/1");
    CHECK(j["all_hold"] == false);
    REQUIRE(j["axioms"].size() == 13);
    for (const auto& a : j["axioms"]) {
        CHECK(a.contains("id"));
        CHECK(a.contains("label"));
        CHECK(a.contains("holds"));
        CHECK(a.contains("witnesses"));
    }
    CHECK(j["axioms"][4]["label"] == "lrc5");
    CHECK(j["axioms"][4]["holds"] == false);
    CHECK(j["axioms"][4]["witnesses"][0]["inputs"] == nlohmann::json({1, 1, 1}));
}

TEST_CASE("assoc validates the forced product") {
    CliResult ok = cli({"assoc", "demo:sweedler_lr_smash"});
    CHECK(ok.exit_code == 0);
    CHECK(ok.out.find("4096 basis triples") != std::string::npos);
    CHECK(ok.out.find("associative and unital") != std::string::npos);

    CliResult bad = cli({"assoc", "demo:broken_J"});
    CHECK(bad.exit_code == 1);
    CHECK(bad.out.find("assoc FAILS") != std::string::npos);
}

TEST_CASE("build emits a loadable algebra document and honors the axiom gate") {
    CliResult built = cli({"build", "demo:complex_mirror"});
    CHECK(built.exit_code == 0);
    Document doc = parse_document(built.out);
    CHECK(std::get<Algebra>(doc.payload).dim == 2);

    CliResult gated = cli({"build", "demo:broken_J"});
    CHECK(gated.exit_code == 1);
    CHECK(gated.err.find("lrc5") != std::string::npos);

    CliResult forced = cli({"build", "demo:broken_J", "--no-require-axioms"});
    CHECK(forced.exit_code == 0);
    CHECK(forced.out.find("\"kind\": \"algebra\"") != std::string::npos);
    // the escape hatch can write a non-associative table, but the loader
    // holds the type invariant and refuses it
    CHECK_THROWS_WITH_AS(parse_document(forced.out), doctest::Contains("violates assoc"), Error);
}

TEST_CASE("table of the trivial instance is the tensor product table") {
    CliResult r = cli({"table", "demo:trivial_2x2"});
    REQUIRE(r.exit_code == 0);

    // expected grid from the independently built tensor product algebra
    Algebra c2 = builtin_algebra("cyclic:2", FieldSpec::rationals());
    Algebra expected = tensor_product_algebra(c2, c2);
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) {
            Tensor row(expected.field, {4});
            for (std::size_t k = 0; k < 4; ++k) row.set_flat(k, expected.mu.at({i, j, k}));
            std::string cell = format_element(row, expected.basis_labels);
            CHECK_MESSAGE(r.out.find(cell) != std::string::npos, "missing cell ", cell);
        }

    // row count: header + rule + one line per basis vector
    std::size_t lines = (std::size_t)std::count(r.out.begin(), r.out.end(), '\n');
    CHECK(lines == 6);
}

TEST_CASE("mul multiplies coordinate vectors") {
    CliResult r = cli({"mul", "demo:complex_mirror", "0,1", "0,1"});
    CHECK(r.exit_code == 0);
    CHECK(r.out == "-1,0\n");

    // scalars parse in the ambient field
    CliResult f7 = cli({"mul", "demo:complex_mirror", "--field", "Fp:7", "0,1", "0,1"});
    CHECK(f7.exit_code == 0);
    CHECK(f7.out == "6,0\n");

    CliResult wrong_len = cli({"mul", "demo:complex_mirror", "0,1,2", "0,1"});
    CHECK(wrong_len.exit_code == 2);

    // algebra documents multiply in the algebra itself
    CliResult built = cli({"build", "demo:complex_mirror", "-o", "/tmp/lrx_test_prod.json"});
    REQUIRE(built.exit_code == 0);
    CliResult alg = cli({"mul", "/tmp/lrx_test_prod.json", "0,1", "0,1"});
    CHECK(alg.exit_code == 0);
    CHECK(alg.out == "-1,0\n");
    std::remove("/tmp/lrx_test_prod.json");
}

TEST_CASE("demo writes documents that check clean") {
    CliResult doc = cli({"demo", "c2_smash"});
    CHECK(doc.exit_code == 0);
    const std::string path = "/tmp/lrx_test_demo.json";
    {
        std::ofstream f(path);
        f << doc.out;
    }
    CliResult check = cli({"check", path});
    CHECK(check.exit_code == 0);
    std::remove(path.c_str());

    CliResult to_file = cli({"demo", "trivial_2x2", "-o", "/tmp/lrx_test_demo2.json"});
    CHECK(to_file.exit_code == 0);
    std::ifstream f("/tmp/lrx_test_demo2.json");
    CHECK(f.good());
    std::remove("/tmp/lrx_test_demo2.json");
}

TEST_CASE("usage and parse errors exit 2") {
    CHECK(cli({}).exit_code == 2);
    CHECK(cli({"frobnicate"}).exit_code == 2);
    CHECK(cli({"check"}).exit_code == 2);
    CHECK(cli({"check", "demo:unknown_instance"}).exit_code == 2);
    CHECK(cli({"check", "/tmp/does_not_exist_lrx.json"}).exit_code == 2);
    CHECK(cli({"check", "demo:trivial_2x2", "--bogus-flag"}).exit_code == 2);
    CHECK(cli({"check", "demo:trivial_2x2", "--field", "F_nine"}).exit_code == 2);
    CHECK(cli({"demo", "sweedler_lr_smash", "--field", "Fp:2"}).exit_code == 2);
    CHECK(cli({"mul", "demo:trivial_2x2", "1,oops,0,0", "1,0,0,0"}).exit_code == 2);

    CliResult help = cli({"--help"});
    CHECK(help.exit_code == 0);
    CHECK(help.out.find("check") != std::string::npos);
}

TEST_CASE("exit codes follow the contract on every bundled instance") {
    for (const std::string& name : builtin_instance_names()) {
        const int expected = name == "broken_J" ? 1 : 0;
        CHECK(cli({"check", "demo:" + name}).exit_code == expected);
        CHECK(cli({"assoc", "demo:" + name}).exit_code == expected);
        CHECK(cli({"demo", name}).exit_code == 0);
    }
}

TEST_CASE("max-counterexamples widens the reports") {
    CliResult r = cli({"assoc", "demo:broken_J", "--json-report", "--max-counterexamples", "5"});
    CHECK(r.exit_code == 1);
    nlohmann::json j = nlohmann::json::parse(r.out);
    CHECK(j["failures"].size() > 1);
    CHECK(j["failures"].size() <= 5);

    CliResult one = cli({"assoc", "demo:broken_J", "--json-report"});
    CHECK(nlohmann::json::parse(one.out)["failures"].size() == 1);

    CHECK(cli({"check", "demo:trivial_2x2", "--max-counterexamples", "0"}).exit_code == 2);
}

TEST_CASE("field flag reaches the builtin constructors") {
    CliResult r = cli({"check", "demo:sweedler_lr_smash", "--field", "Fp:5"});
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("field: F_5") != std::string::npos);
}
