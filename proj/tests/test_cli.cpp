#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "bohr/cli.hpp"

using nlohmann::json;

namespace {

struct CliResult {
    int code;
    std::string out;
    std::string err;
};

CliResult run_cli(const std::vector<std::string>& args) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = bohr::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

// structural validation against docs/radii.schema.json: required keys,
// types, exact property set
void check_against_schema(const json& rows) {
    const std::filesystem::path here = std::filesystem::path(__FILE__).parent_path();
    std::ifstream schema_file(here / ".." / "docs" / "radii.schema.json");
    REQUIRE(schema_file.good());
    const json schema = json::parse(schema_file);
    REQUIRE(schema.at("type") == "array");
    const json& item = schema.at("items");
    const auto required = item.at("required").get<std::vector<std::string>>();
    const bool closed = !item.value("additionalProperties", true);

    REQUIRE(rows.is_array());
    for (const json& row : rows) {
        REQUIRE(row.is_object());
        for (const auto& key : required) REQUIRE(row.contains(key));
        if (closed)
            for (const auto& [key, _] : row.items())
                REQUIRE(item.at("properties").contains(key));
        CHECK(row.at("spec").is_string());
        CHECK((row.at("K").is_number() || row.at("K") == "inf"));
        CHECK(row.at("value").is_number());
        REQUIRE(row.at("bracket").is_array());
        CHECK(row.at("bracket").size() == 2);
        CHECK(row.at("residual").is_number());
    }
}

} // namespace

TEST_CASE("radii: single closed form prints with 9 significant digits") {
    const CliResult res = run_cli({"radii", "--K", "1", "--spec", "Thm1"});
    CHECK(res.code == 0);
    CHECK(res.out.find("Thm1,1,0.333333333,closed_form") != std::string::npos);
}

TEST_CASE("radii: corollary pair at the K limit") {
    const CliResult res = run_cli({"radii", "--K", "inf", "--spec", "Cor3Lower,Cor3Upper"});
    CHECK(res.code == 0);
    CHECK(res.out.find("Cor3Lower,inf,0.294265263") != std::string::npos);
    CHECK(res.out.find("Cor3Upper,inf,0.299823576") != std::string::npos);
}

TEST_CASE("radii: bloch pair") {
    const CliResult res = run_cli({"radii", "--spec", "Thm8Lower,Thm8Upper"});
    CHECK(res.code == 0);
    CHECK(res.out.find("Thm8Lower,1,0.553567022") != std::string::npos);
    CHECK(res.out.find("Thm8Upper,1,0.624161") != std::string::npos);
}

TEST_CASE("radii: json output validates against the shipped schema") {
    const CliResult res =
        run_cli({"radii", "--K", "1,2,inf", "--format", "json", "--spec",
                 "Thm1,Thm2,Thm4,Thm6Lower,Thm6Upper,Conj1"});
    REQUIRE(res.code == 0);
    const json rows = json::parse(res.out);
    check_against_schema(rows);
    // parametric specs expand over the K list, fixed ones emit once
    int thm1 = 0, thm4 = 0;
    for (const json& row : rows) {
        if (row.at("spec") == "Thm1") ++thm1;
        if (row.at("spec") == "Thm4") ++thm4;
    }
    CHECK(thm1 == 3);
    CHECK(thm4 == 1);
}

TEST_CASE("radii: full table is deterministic across runs") {
    const CliResult a = run_cli({"radii", "--K", "1,3,inf"});
    const CliResult b = run_cli({"radii", "--K", "1,3,inf"});
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
}

TEST_CASE("radii: --out writes the same bytes to a file") {
    const std::string path = "/tmp/bohrlab_test_radii.csv";
    std::remove(path.c_str());
    const CliResult direct = run_cli({"radii", "--K", "2", "--spec", "Thm1,Thm6Lower"});
    const CliResult filed =
        run_cli({"radii", "--K", "2", "--spec", "Thm1,Thm6Lower", "--out", path});
    CHECK(filed.code == 0);
    CHECK(filed.out.empty());
    std::ifstream f(path);
    std::stringstream buf;
    buf << f.rdbuf();
    CHECK(buf.str() == direct.out);
    std::remove(path.c_str());
}

TEST_CASE("sweep: T4 threshold row carries bohr_sum = 1 at sqrt(7/32)") {
    const CliResult res = run_cli({"sweep", "--family", "T4", "--a", "0.801784"});
    REQUIRE(res.code == 0);
    bool found = false;
    std::istringstream lines(res.out);
    std::string line;
    std::getline(lines, line);
    CHECK(line == "family,a,r,bohr_sum");
    while (std::getline(lines, line)) {
        std::istringstream fields(line);
        std::string family, a, r, sum;
        std::getline(fields, family, ',');
        std::getline(fields, a, ',');
        std::getline(fields, r, ',');
        std::getline(fields, sum, ',');
        if (std::abs(std::stod(r) - 0.467707) < 1e-5) {
            found = true;
            CHECK(std::abs(std::stod(sum) - 1.0) <= 1e-6);
        }
    }
    CHECK(found);
}

TEST_CASE("bloch-search prints the optimum pair") {
    const CliResult res = run_cli({"bloch-search"});
    CHECK(res.code == 0);
    CHECK(res.out.find("a_star=0.3775") != std::string::npos);
    CHECK(res.out.find("r_star=0.6241616") != std::string::npos);

    const CliResult js = run_cli({"bloch-search", "--format", "json"});
    const json rec = json::parse(js.out);
    CHECK(std::abs(rec.at("a_star").get<double>() - 0.3775) < 1e-3);
    CHECK(std::abs(rec.at("r_star").get<double>() - 0.624162) < 1e-4);
}

TEST_CASE("verify: small corpus passes and is deterministic") {
    const CliResult a = run_cli({"verify", "--seed", "7", "--count", "60"});
    CHECK(a.code == 0);
    CHECK(a.out.find("lemma1: 60/60 pass") != std::string::npos);
    CHECK(a.out.find("verify: PASS") != std::string::npos);
    CHECK(a.out.find("EVIDENCE") != std::string::npos);
    const CliResult b = run_cli({"verify", "--seed", "7", "--count", "60"});
    CHECK(a.out == b.out);
}

TEST_CASE("config and usage errors exit with code 2") {
    CHECK(run_cli({"radii", "--K", "0.5"}).code == 2);
    CHECK(run_cli({"radii", "--spec", "Thm99"}).code == 2);
    CHECK(run_cli({"radii", "--order", "4"}).code == 2);
    CHECK(run_cli({"radii", "--tol", "-1"}).code == 2);
    CHECK(run_cli({"sweep"}).code == 2);
    CHECK(run_cli({"sweep", "--family", "Q9", "--a", "0.5"}).code == 2);
    CHECK(run_cli({"nonsense"}).code == 2);
    CHECK(run_cli({}).code == 2);
}
