#include <catch2/catch_amalgamated.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <unistd.h>

#include "covspace/cli.hpp"

using namespace covspace;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

// scratch directory for file-based commands
struct TempDir {
    std::filesystem::path dir;
    TempDir() {
        dir = std::filesystem::temp_directory_path() /
              ("covspace_test_" + std::to_string(::getpid()));
        std::filesystem::create_directories(dir);
    }
    ~TempDir() { std::filesystem::remove_all(dir); }
    std::string write(const std::string& name, const std::string& content) {
        auto p = dir / name;
        std::ofstream(p) << content;
        return p.string();
    }
    std::string path(const std::string& name) { return (dir / name).string(); }
};

const char* kTorusFile =
    "vertices 1\nedge 0 0 0\nedge 1 0 0\nface 0 +0 +1 -0 -1\nbasepoint 0\n";
const char* kCircleFile = "vertices 1\nedge 0 0 0\nbasepoint 0\n";

} // namespace

TEST_CASE("plan parsing", "[cli]") {
    CommandPlan plan = parse_cli({"order", "<a | a^5>"});
    CHECK(plan.command == "order");
    REQUIRE(plan.inputs.size() == 1);
    CHECK(plan.inputs[0] == "<a | a^5>");
    CHECK(plan.max_cosets == kDefaultMaxCosets);

    plan = parse_cli({"lens-classify", "12", "1,1"});
    CHECK(plan.inputs == std::vector<std::string>{"12", "1,1"});

    plan = parse_cli({"subgroups", "<a b |>", "--max-index", "3", "--classes"});
    CHECK(plan.max_index == 3);
    CHECK(plan.classes);

    plan = parse_cli({"universal", "x.cx", "--max-cosets", "500", "-o", "out", "--quiet"});
    CHECK(plan.max_cosets == 500);
    CHECK(plan.output == "out");
    CHECK(plan.quiet);

    CHECK_THROWS_AS(parse_cli({}), input_error);
    CHECK_THROWS_AS(parse_cli({"frobnicate"}), input_error);
    CHECK_THROWS_AS(parse_cli({"cover"}), input_error);               // missing files
    CHECK_THROWS_AS(parse_cli({"cover", "a.cx"}), input_error);       // missing subgroup
    CHECK_THROWS_AS(parse_cli({"order"}), input_error);               // missing presentation
    CHECK_THROWS_AS(parse_cli({"order", "<a|>", "extra"}), input_error);
    CHECK_THROWS_AS(parse_cli({"subgroups", "<a|>"}), input_error);   // no max-index
    CHECK_THROWS_AS(parse_cli({"order", "<a|>", "--max-cosets"}), input_error);
    CHECK_THROWS_AS(parse_cli({"order", "<a|>", "--max-cosets", "x"}), input_error);
    CHECK_THROWS_AS(parse_cli({"order", "<a|>", "--bogus"}), input_error);
    CHECK_THROWS_AS(parse_cli({"lens-verify", "12", "4"}), input_error);
}

TEST_CASE("environment cap override", "[cli]") {
    setenv("COVER_MAX_COSETS", "123", 1);
    CommandPlan plan = parse_cli({"order", "<a | a^5>"});
    CHECK(plan.max_cosets == 123);
    // an explicit option wins over the environment
    plan = parse_cli({"order", "<a | a^5>", "--max-cosets", "77"});
    CHECK(plan.max_cosets == 77);
    unsetenv("COVER_MAX_COSETS");
    plan = parse_cli({"order", "<a | a^5>"});
    CHECK(plan.max_cosets == kDefaultMaxCosets);
}

TEST_CASE("quiet suppresses warnings", "[cli]") {
    TempDir tmp;
    std::string disconnected = tmp.write(
        "d.cx", "vertices 2\nedge 0 0 0\nedge 1 1 1\nbasepoint 0\n");
    Result loud = run({"pi1", disconnected});
    CHECK(!loud.err.empty());
    Result quiet = run({"pi1", disconnected, "--quiet"});
    CHECK(quiet.err.empty());
    CHECK(quiet.out == loud.out);
}

TEST_CASE("order and abelianize", "[cli]") {
    Result r = run({"order", "<r s t | r^2TSR, s^3TSR, t^5TSR>"});
    CHECK(r.code == 0);
    CHECK(r.out == "120\n");

    r = run({"abelianize", "<r s t | r^2TSR, s^3TSR, t^5TSR>"});
    CHECK(r.code == 0);
    CHECK(r.out == "factors\nfree_rank 0\n");

    r = run({"abelianize", "<a b | abAB>"});
    CHECK(r.out == "factors\nfree_rank 2\n");

    r = run({"abelianize", "<a | a^12>"});
    CHECK(r.out == "factors 12\nfree_rank 0\n");

    r = run({"order", "<a |>", "--max-cosets", "100"});
    CHECK(r.code == kExitResourceExhausted);

    r = run({"order", "<a | nonsense"});
    CHECK(r.code == kExitInputError);
}

TEST_CASE("pi1 and component on files", "[cli]") {
    TempDir tmp;
    std::string torus_path = tmp.write("t.cx", kTorusFile);
    Result r = run({"pi1", torus_path});
    CHECK(r.code == 0);
    CHECK(r.out == "<a b | abAB>\n");

    std::string disconnected = tmp.write(
        "d.cx", "vertices 2\nedge 0 0 0\nedge 1 1 1\nbasepoint 0\n");
    r = run({"pi1", disconnected});
    CHECK(r.code == 0);
    CHECK(r.out == "<a |>\n");
    CHECK(r.err.find("warning") != std::string::npos);

    r = run({"component", disconnected});
    CHECK(r.code == 0);
    CHECK(r.out == "vertices 1\nedge 0 0 0\nbasepoint 0\n");

    r = run({"pi1", tmp.path("missing.cx")});
    CHECK(r.code == kExitInputError);
}

TEST_CASE("cosets and subgroups output tables", "[cli]") {
    TempDir tmp;
    Result r = run({"cosets", "<a | a^5>"});
    CHECK(r.code == 0);
    CHECK(r.out.substr(0, 8) == "table 5\n");

    std::string sub = tmp.write("h.sub", "generators\na^2\n");
    r = run({"cosets", "<a | a^6>", sub});
    CHECK(r.code == 0);
    CHECK(r.out == "table 2\n1 1\n0 0\n");

    // a table file is accepted and standardized
    std::string table = tmp.write("h.tab", "table 2\n1 1\n0 0\n");
    r = run({"cosets", "<a | a^6>", table});
    CHECK(r.out == "table 2\n1 1\n0 0\n");

    r = run({"subgroups", "<a |>", "--max-index", "3"});
    CHECK(r.code == 0);
    CHECK(r.out.substr(0, 8) == "count 3\n");

    r = run({"subgroups", "<a b |>", "--max-index", "2", "--classes"});
    CHECK(r.out.find("count 4\n") == 0);
    CHECK(r.out.find("class") != std::string::npos);

    // a complex file stands in for its fundamental group
    std::string torus_path = tmp.write("t.cx", kTorusFile);
    r = run({"subgroups", torus_path, "--max-index", "2"});
    CHECK(r.code == 0);
    CHECK(r.out.find("count 4\n") == 0);
    r = run({"order", torus_path, "--max-cosets", "50"});
    CHECK(r.code == kExitResourceExhausted);
}

TEST_CASE("cover, universal and deck", "[cli]") {
    TempDir tmp;
    std::string circle_path = tmp.write("c.cx", kCircleFile);
    std::string sub = tmp.write("h.sub", "generators\na^3\n");

    Result r = run({"cover", circle_path, sub, "-o", tmp.path("c3")});
    CHECK(r.code == 0);
    CHECK(r.out == "sheets 3\ntotal 3 3 0 0\neuler 0\n");
    std::ifstream cx(tmp.path("c3") + ".cx");
    REQUIRE(cx.good());
    std::ifstream proj(tmp.path("c3") + ".proj");
    REQUIRE(proj.good());

    // without -o both files stream to stdout
    r = run({"cover", circle_path, sub});
    CHECK(r.code == 0);
    CHECK(r.out.find("vertices 3\n") != std::string::npos);
    CHECK(r.out.find("vmap 0 0\n") != std::string::npos);

    r = run({"universal", circle_path, "--max-cosets", "1000"});
    CHECK(r.code == kExitResourceExhausted);

    std::string torus_path = tmp.write("t.cx", kTorusFile);
    std::string table = tmp.write("h.tab", "table 2\n1 1 0 0\n0 0 1 1\n");
    r = run({"cover", torus_path, table, "-o", tmp.path("t2")});
    CHECK(r.code == 0);
    CHECK(r.out == "sheets 2\ntotal 2 4 2 0\neuler 0\n");

    r = run({"deck", torus_path, table});
    CHECK(r.code == 0);
    CHECK(r.out == "2\n");

    std::string cube = tmp.write("k.cx", serialize_complex(hypercubical_manifold()));
    r = run({"deck", cube});
    CHECK(r.code == 0);
    CHECK(r.out == "8\n");
}

TEST_CASE("lens commands", "[cli]") {
    Result r = run({"lens-classify", "12", "1,1"});
    CHECK(r.code == 0);
    CHECK(r.out ==
          "1 12 0,0\n"
          "2 6 1,1\n"
          "3 4 1,1\n"
          "4 3 1,1\n"
          "6 2 1,1\n"
          "12 1 1,1\n");

    r = run({"lens-classify", "6", "1"});
    CHECK(r.code == kExitInputError);

    r = run({"lens-verify", "12", "4", "5", "--window", "30"});
    CHECK(r.code == 0);
    CHECK(r.out.find("pass\n") != std::string::npos);
    CHECK(r.out.find("solution 3 1 multiplier 1\n") != std::string::npos);

    r = run({"lens-verify", "12", "4", "5", "--window", "2"});
    CHECK(r.code == kExitInputError);
    CHECK(r.out.find("inconclusive") != std::string::npos);

    r = run({"lens-verify", "12", "5", "1"});
    CHECK(r.code == kExitInputError);
}

TEST_CASE("verify-galois", "[cli]") {
    TempDir tmp;
    std::string torus_path = tmp.write("t.cx", kTorusFile);
    Result r = run({"verify-galois", torus_path, "--max-index", "4"});
    CHECK(r.code == 0);
    CHECK(r.out == "all 15 round trips passed\n");
}

TEST_CASE("outputs are byte identical across runs", "[cli][determinism]") {
    TempDir tmp;
    std::string cube = tmp.write("k.cx", serialize_complex(hypercubical_manifold()));
    std::vector<std::vector<std::string>> invocations = {
        {"order", "<r s t | r^2TSR, s^3TSR, t^5TSR>"},
        {"subgroups", "<a b |>", "--max-index", "3", "--classes"},
        {"verify-galois", cube, "--max-index", "8"},
        {"lens-classify", "30", "1,7"},
        {"universal", cube},
    };
    for (const auto& args : invocations) {
        Result a = run(args);
        Result b = run(args);
        CHECK(a.code == b.code);
        CHECK(a.out == b.out);
        CHECK(a.err == b.err);
    }
}
