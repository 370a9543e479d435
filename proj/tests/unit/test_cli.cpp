#include "fixtures.hpp"

#include "tropgw_cli/cli.hpp"
#include "tropgw_cli/svg.hpp"

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace tropgw;

namespace {

const std::string golden_path = std::string(TROPGW_SCENARIO_DIR) + "/triple_degeneration.json";

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome run_cli(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::filesystem::path scratch(const std::string &name) {
    const auto dir = std::filesystem::temp_directory_path() / "tropgw_cli_tests";
    std::filesystem::create_directories(dir);
    return dir / name;
}

std::string write_scenario(const std::string &name, const Json &j) {
    const auto p = scratch(name);
    std::ofstream(p) << j.dump(2);
    return p.string();
}

Json golden_json() {
    std::ifstream in(golden_path);
    return Json::parse(in);
}

} // namespace

TEST_CASE("glue-classes on the golden scenario") {
    const auto r = run_cli({"glue-classes", "--scenario", golden_path});
    CHECK(r.code == 0);
    CHECK(r.out.find("k_gamma: 1\n") != std::string::npos);
    CHECK(r.out.find("aut_order: 1\n") != std::string::npos);
    CHECK(r.out.find("lattice_factor: 3\n") != std::string::npos);
    CHECK(r.out.find("coefficient: 3\n") != std::string::npos);
    CHECK(r.out.find("hbar_exponent: 6\n") != std::string::npos);
    CHECK(r.out.find("degree: 0\n") != std::string::npos);

    const auto j = run_cli({"glue-classes", "--scenario", golden_path, "--format", "json"});
    REQUIRE(j.code == 0);
    const Json parsed = Json::parse(j.out);
    CHECK(rational_from_json(parsed["class"]["coefficient"]) == 3);
    CHECK(parsed["class"]["hbar"] == 6);
    CHECK(parsed["class"]["degree"] == 0);
}

TEST_CASE("ledger on the golden scenario") {
    const auto r = run_cli({"ledger", "--scenario", golden_path});
    CHECK(r.code == 0);
    CHECK(r.out.find("1+2+2+1 = 6") != std::string::npos);
}

TEST_CASE("validate reports a displacement error") {
    Json j = golden_json();
    j["curves"]["gamma"]["edges"][0]["length"] = "2";
    const auto path = write_scenario("bad_length.json", j);
    const auto r = run_cli({"validate", "--scenario", path});
    CHECK(r.code == cli::exit_code(ErrorCategory::Validation));
    CHECK(r.code != 0);
    CHECK(r.err.find("error: validation") != std::string::npos);
    CHECK(r.err.find("displacement") != std::string::npos);
    CHECK(run_cli({"validate", "--scenario", golden_path}).code == 0);
}

TEST_CASE("every subcommand runs on the golden scenario") {
    for (const std::vector<std::string> &extra :
         {std::vector<std::string>{"validate"}, {"cut"}, {"glue"}, {"star", "--vertex", "v0"}, {"complete", "--point", "1/3,1/3"},
          {"rend"}, {"glue-classes"}, {"ledger"}, {"enumerate"}}) {
        for (const std::string format : {"text", "json"}) {
            auto args = extra;
            args.insert(args.end(), {"--scenario", golden_path, "--format", format});
            const auto r = run_cli(args);
            CHECK_MESSAGE(r.code == 0, extra[0] << ": " << r.err);
            if (format == "json") CHECK(Json::accept(r.out));
            // Deterministic reports.
            CHECK(run_cli(args).out == r.out);
        }
    }
}

TEST_CASE("json outputs re-parse") {
    const auto cut = run_cli({"cut", "--scenario", golden_path, "--format", "json"});
    for (const auto &k : Json::parse(cut.out)["components"]) CHECK(to_json(cut_component_from_json(k)) == k);
    const auto glue = run_cli({"glue", "--scenario", golden_path, "--format", "json"});
    const Json g = Json::parse(glue.out);
    CHECK(to_json(curve_from_json(g["curve"])) == g["curve"]);
    CHECK(g["isomorphic"] == true);
}

TEST_CASE("enumerate prints the table") {
    const auto r = run_cli({"enumerate", "--scenario", golden_path});
    CHECK(r.code == 0);
    CHECK(r.out.find("total multiplicity 12") != std::string::npos);
    CHECK(r.out.find("tropical type of gamma: 3") != std::string::npos);
    const auto b = run_cli({"enumerate", "--scenario", golden_path, "--budget", "5"});
    CHECK(b.code == cli::exit_code(ErrorCategory::Budget));
}

TEST_CASE("usage and parse errors") {
    CHECK(run_cli({}).code == cli::exit_code(ErrorCategory::Usage));
    CHECK(run_cli({"frobnicate", "--scenario", golden_path}).code == cli::exit_code(ErrorCategory::Usage));
    CHECK(run_cli({"glue-classes"}).code == cli::exit_code(ErrorCategory::Usage));
    CHECK(run_cli({"glue-classes", "--scenario", "/nonexistent.json"}).code == cli::exit_code(ErrorCategory::Usage));
    CHECK(run_cli({"star", "--scenario", golden_path, "--vertex", "nope"}).code != 0);
    CHECK(run_cli({"validate", "--scenario", golden_path, "--balancing", "sideways"}).code ==
          cli::exit_code(ErrorCategory::Usage));

    const auto p = scratch("broken.json");
    std::ofstream(p) << "{\n  \"complex\": \n";
    const auto r = run_cli({"validate", "--scenario", p.string()});
    CHECK(r.code == cli::exit_code(ErrorCategory::Parse));
    CHECK(r.err.find("line") != std::string::npos);
    CHECK(run_cli({"--help"}).code == 0);
}

TEST_CASE("exit codes are distinct per category") {
    std::set<int> codes;
    for (int c = 0; c <= static_cast<int>(ErrorCategory::Usage); ++c) codes.insert(cli::exit_code(static_cast<ErrorCategory>(c)));
    CHECK(codes.size() == static_cast<std::size_t>(ErrorCategory::Usage) + 1);
    CHECK(codes.count(0) == 0);
}

TEST_CASE("emit-diagram writes SVG") {
    const auto p = scratch("gamma.svg");
    std::filesystem::remove(p);
    const auto r = run_cli({"validate", "--scenario", golden_path, "--emit-diagram", p.string()});
    CHECK(r.code == 0);
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    const std::string svg = ss.str();
    CHECK(svg.rfind("<svg", 0) == 0);
    CHECK(svg.find("M123") != std::string::npos);
    CHECK(svg.find("v0") != std::string::npos);
    CHECK(svg.find("</svg>") != std::string::npos);

    const auto outline = cli::face_outline(fixture::example_complex().face("M123").polytope, 10);
    CHECK(outline.size() == 3);
}
