#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "json.hpp"
#include "splitloci/cli.hpp"

namespace {

struct RunResult {
    int code;
    std::string out;
    std::string err;
};

RunResult run_cli(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = splitloci::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("bn-wrd table output") {
    const RunResult r =
        run_cli({"bn-wrd", "--g", "6", "--k", "3", "--d", "4", "--r", "1", "--format", "table"});
    CHECK(r.code == 0);
    CHECK(r.err.empty());
    const std::string expect =
        "ell  type         u  dim  maximal\n"
        "0    (-4, 0, 0)   6  0    yes\n"
        "1    (-3, -2, 1)  5  1    yes\n";
    CHECK(r.out == expect);
}

TEST_CASE("bn-wrd json output") {
    const RunResult r =
        run_cli({"bn-wrd", "--g", "5", "--k", "3", "--d", "4", "--r", "1", "--format", "json"});
    CHECK(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["schema"] == "splitloci/1");
    CHECK(j["g"] == 5);
    CHECK(j["k"] == 3);
    CHECK(j["d"] == 4);
    CHECK(j["r"] == 1);
    REQUIRE(j["strata"].size() == 2);
    CHECK(j["strata"][0]["type"] == nlohmann::json::array({-3, 0, 0}));
    CHECK(j["strata"][0]["ell"] == 0);
    CHECK(j["strata"][0]["u"] == 4);
    CHECK(j["strata"][0]["dim"] == 1);
    CHECK(j["strata"][0]["maximal"] == true);
    CHECK(j["strata"][1]["type"] == nlohmann::json::array({-2, -2, 1}));
    CHECK_FALSE(j.contains("whole_picard"));
    // key order is pinned for byte-stable output
    CHECK(r.out.find("\"schema\"") < r.out.find("\"g\""));
}

TEST_CASE("bn-wrd whole-Picard sentinel") {
    const RunResult t =
        run_cli({"bn-wrd", "--g", "5", "--k", "3", "--d", "9", "--r", "4", "--format", "table"});
    CHECK(t.code == 0);
    CHECK(t.out == "all of Pic (dim 5)\n");
    const RunResult j =
        run_cli({"bn-wrd", "--g", "5", "--k", "3", "--d", "9", "--r", "4", "--format", "json"});
    const auto parsed = nlohmann::json::parse(j.out);
    CHECK(parsed["whole_picard"] == true);
    CHECK(parsed["strata"].empty());
}

TEST_CASE("empty strata print no dimension") {
    const RunResult r =
        run_cli({"bn-wrd", "--g", "5", "--k", "3", "--d", "2", "--r", "2", "--format", "json"});
    CHECK(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    for (const auto& s : j["strata"]) CHECK(s["dim"].is_null());
}

TEST_CASE("strata-poset outputs") {
    const std::vector<std::string> base = {"strata-poset", "--g", "5", "--k", "3", "--d", "4"};
    {
        std::vector<std::string> args = base;
        args.insert(args.end(), {"--format", "json"});
        const RunResult r = run_cli(args);
        CHECK(r.code == 0);
        const auto j = nlohmann::json::parse(r.out);
        CHECK(j["schema"] == "splitloci/1");
        REQUIRE(j["nodes"].size() == 5);
        CHECK(j["nodes"][0]["type"] == nlohmann::json::array({-3, -1, 1}));
        CHECK(j["nodes"][0]["u"] == 5);
        CHECK(j["nodes"][0]["dim"] == 0);
        CHECK(j["covers"] ==
              nlohmann::json::array({{0, 1}, {0, 2}, {1, 3}, {2, 3}, {3, 4}}));
    }
    {
        std::vector<std::string> args = base;
        args.insert(args.end(), {"--format", "dot"});
        const RunResult r = run_cli(args);
        CHECK(r.code == 0);
        CHECK(r.out.rfind("digraph", 0) == 0);
        std::size_t edges = 0;
        for (std::size_t pos = r.out.find("->"); pos != std::string::npos;
             pos = r.out.find("->", pos + 1))
            ++edges;
        CHECK(edges == 5);
    }
    {
        const RunResult r = run_cli(base);  // table default
        CHECK(r.code == 0);
        CHECK(r.out.find("covers:") != std::string::npos);
        CHECK(r.out.find("(-1, -1, -1)") != std::string::npos);
    }
}

TEST_CASE("strata-enumerate matches the library") {
    const RunResult r = run_cli(
        {"strata-enumerate", "--k", "3", "--degree", "-3", "--r", "1", "--format", "json"});
    CHECK(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["schema"] == "splitloci/1");
    REQUIRE(j["types"].size() == 2);
    CHECK(j["types"][0]["type"] == nlohmann::json::array({-3, 0, 0}));
    CHECK(j["types"][1]["type"] == nlohmann::json::array({-2, -2, 1}));
    // explicit window override
    const RunResult w = run_cli({"strata-enumerate", "--k", "3", "--degree", "-3", "--r", "1",
                                 "--window", "9", "--format", "json"});
    CHECK(nlohmann::json::parse(w.out)["types"] == j["types"]);
}

TEST_CASE("bn-rhok output") {
    const RunResult r = run_cli({"bn-rhok", "--g", "5", "--k", "3", "--d", "4", "--r", "1"});
    CHECK(r.code == 0);
    CHECK(r.out == "rho_k(g=5, k=3, d=4, r=1) = 1\n");
    const RunResult j =
        run_cli({"bn-rhok", "--g", "5", "--k", "3", "--d", "4", "--r", "1", "--format", "json"});
    CHECK(nlohmann::json::parse(j.out)["rho_k"] == 1);
}

TEST_CASE("classes output") {
    const RunResult r =
        run_cli({"classes", "--k", "3", "--degree", "-3", "--n", "3", "--g", "5"});
    CHECK(r.code == 0);
    CHECK(r.out == "1/24 · θ^4\n");
    const RunResult pt =
        run_cli({"classes", "--k", "3", "--degree", "-3", "--n", "3", "--g", "4"});
    CHECK(pt.out == "1/24 · θ^4\npoints = 1\n");
    const RunResult j = run_cli(
        {"classes", "--k", "3", "--degree", "-3", "--n", "3", "--g", "5", "--format", "json"});
    const auto parsed = nlohmann::json::parse(j.out);
    CHECK(parsed["a"] == nlohmann::json::array({1, 24}));
    CHECK(parsed["u"] == 4);
    CHECK(parsed["points"].is_null());
    const RunResult jp = run_cli(
        {"classes", "--k", "3", "--degree", "-3", "--n", "3", "--g", "4", "--format", "json"});
    CHECK(nlohmann::json::parse(jp.out)["points"] == 1);
}

TEST_CASE("degen-verify") {
    const RunResult r = run_cli({"degen-verify", "--kmax", "3"});
    CHECK(r.code == 0);
    CHECK(r.out.find("FAIL") == std::string::npos);
    CHECK(r.out.find("configurations pass") != std::string::npos);
    const RunResult j = run_cli({"degen-verify", "--kmax", "3", "--format", "json"});
    const auto parsed = nlohmann::json::parse(j.out);
    CHECK(parsed["all_pass"] == true);
    for (const auto& c : parsed["cases"]) CHECK(c["pass"] == true);
}

TEST_CASE("fixtures all pass") {
    const RunResult r = run_cli({"fixtures"});
    CHECK(r.code == 0);
    CHECK(r.out.find("FAIL") == std::string::npos);
    CHECK(r.out.find("fixtures pass") != std::string::npos);
}

TEST_CASE("usage errors exit 2") {
    CHECK(run_cli({}).code == 2);
    CHECK(run_cli({"no-such-command"}).code == 2);
    CHECK(run_cli({"bn-wrd", "--g", "5"}).code == 2);  // missing required flags
    CHECK(run_cli({"bn-wrd", "--g", "5", "--k", "3", "--d", "4", "--r", "1", "--format",
                   "yaml"})
              .code == 2);
    CHECK(run_cli({"bn-wrd", "--g", "5000000", "--k", "3", "--d", "4", "--r", "1"}).code == 2);
    CHECK(run_cli({"bn-wrd", "--g", "5", "--k", "3", "--d", "4", "--r", "1", "--bogus"}).code ==
          2);
    const RunResult help = run_cli({"--help"});
    CHECK(help.code == 0);
    CHECK(help.out.find("strata-poset") != std::string::npos);
}

TEST_CASE("domain errors exit 1 with the module message") {
    const RunResult r = run_cli({"bn-wrd", "--g", "5", "--k", "1", "--d", "4", "--r", "1"});
    CHECK(r.code == 1);
    CHECK(r.err == "error: cover degree must be at least 2\n");
    const RunResult c =
        run_cli({"classes", "--k", "3", "--degree", "-3", "--n", "1", "--g", "5"});
    CHECK(c.code == 1);
    CHECK(c.err == "error: not an extreme-summand type\n");
    const RunResult g = run_cli({"strata-poset", "--g", "-2", "--k", "3", "--d", "4"});
    CHECK(g.code == 1);
    CHECK(g.err == "error: genus must be non-negative\n");
}

TEST_CASE("identical flags give identical bytes") {
    const std::vector<std::string> args = {"strata-poset", "--g", "7", "--k", "3",
                                           "--d",          "5",  "--format", "json"};
    const RunResult a = run_cli(args);
    const RunResult b = run_cli(args);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
}

TEST_CASE("--out writes the file instead of stdout") {
    const std::string path = "cli_test_out.json";
    std::remove(path.c_str());
    const RunResult r = run_cli({"bn-wrd", "--g", "5", "--k", "3", "--d", "4", "--r", "1",
                                 "--format", "json", "--out", path});
    CHECK(r.code == 0);
    CHECK(r.out.empty());
    std::ifstream f(path);
    REQUIRE(f.good());
    std::stringstream buf;
    buf << f.rdbuf();
    CHECK(nlohmann::json::parse(buf.str())["strata"].size() == 2);
    std::remove(path.c_str());
    const RunResult bad = run_cli({"bn-wrd", "--g", "5", "--k", "3", "--d", "4", "--r", "1",
                                   "--out", "no/such/dir/file.txt"});
    CHECK(bad.code == 1);
    CHECK(bad.err.find("cannot open output file") != std::string::npos);
}

TEST_CASE("node cap flag and environment variable") {
    const std::vector<std::string> big = {"strata-poset", "--g", "12", "--k", "4", "--d", "9"};
    {
        std::vector<std::string> args = big;
        args.insert(args.end(), {"--node-cap", "3"});
        const RunResult r = run_cli(args);
        CHECK(r.code == 1);
        CHECK(r.err == "error: poset too large\n");
    }
    setenv("SPLITLOCI_NODE_CAP", "3", 1);
    CHECK(run_cli(big).code == 1);
    {
        // explicit flag wins over the environment
        std::vector<std::string> args = big;
        args.insert(args.end(), {"--node-cap", "100000"});
        CHECK(run_cli(args).code == 0);
    }
    setenv("SPLITLOCI_NODE_CAP", "zebra", 1);
    const RunResult bad = run_cli(big);
    CHECK(bad.code == 1);
    CHECK(bad.err.find("invalid SPLITLOCI_NODE_CAP") != std::string::npos);
    unsetenv("SPLITLOCI_NODE_CAP");
    CHECK(run_cli(big).code == 0);
}
