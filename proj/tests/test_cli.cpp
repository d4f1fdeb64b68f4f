#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "sidonkit/cli.hpp"
#include "sidonkit/report.hpp"

using namespace sidonkit;

namespace {

struct Run {
    int code;
    std::string out, err;
};

Run run(std::vector<std::string> args)
{
    std::ostringstream out, err;
    const int code = dispatch(args, out, err);
    return {code, out.str(), err.str()};
}

std::vector<std::string> data_lines(const std::string& csv)
{
    std::vector<std::string> lines;
    std::istringstream in(csv);
    std::string line;
    while (std::getline(in, line))
        if (!line.empty() && line[0] != '#') lines.push_back(line);
    return lines;
}

} // namespace

TEST_CASE("verify reports holds and multiplicity")
{
    const auto r = run({"verify", "--group", "S:3", "--set", "(1 2 3),(1 2)", "--prop", "sk", "--k", "2"});
    REQUIRE(r.code == kExitOk);
    const auto j = Json::parse(r.out);
    CHECK(j["result"]["holds"] == true);
    CHECK(j["result"]["multiplicity"] == 1);
    CHECK(j["version"] == version());
    CHECK(j["seed"].is_null());
    CHECK(j["inputs"]["group"] == "S:3");
    CHECK(recheck_report(j).empty());
}

TEST_CASE("verify failures exit 1 and re-verify")
{
    const auto r = run({"verify", "--group", "Z:5", "--set", "0,1", "--k", "2"});
    CHECK(r.code == kExitViolation);
    const auto j = Json::parse(r.out);
    CHECK(j["result"]["holds"] == false);
    CHECK(j["result"]["witness"]["words"][0] == Json::array({0, 1}));
    CHECK(j["result"]["witness"]["rendered"] == Json::array({Json::array({"0", "1"}), Json::array({"1", "0"})}));
    CHECK(recheck_report(j).empty());
    // tampered witness is caught
    auto bad = j;
    bad["result"]["witness"]["words"][1] = Json::array({0, 1});
    CHECK(!recheck_report(bad).empty());
    auto flipped = j;
    flipped["result"]["holds"] = true;
    CHECK(!recheck_report(flipped).empty());

    const auto p = run({"verify", "--group", "prod(Z:2,Z:2)", "--set", "<0;0>,<1;0>", "--prop", "skprime"});
    CHECK(p.code == kExitViolation);
    CHECK(recheck_report(Json::parse(p.out)).empty());
    const auto g = run({"verify", "--group", "Z:4", "--set", "0,1,2,3", "--k", "2", "--g", "4"});
    CHECK(g.code == kExitOk);
    CHECK(recheck_report(Json::parse(g.out)).empty());
}

TEST_CASE("search reports re-verify")
{
    for (const char* prop : {"sk", "skprime"}) {
        const auto r = run({"search", "--group", "S:4", "--k", "2", "--prop", prop, "--bounds"});
        REQUIRE(r.code == kExitOk);
        const auto j = Json::parse(r.out);
        CHECK(recheck_report(j).empty());
        CHECK(j["result"].contains("bounds"));
    }
    const auto b = run({"search", "--group", "Z:41", "--k", "2", "--prop", "skprime", "--max-nodes", "10"});
    CHECK(b.code == kExitBudget);
    CHECK(Json::parse(b.out)["result"]["search"]["exact"] == false);
}

TEST_CASE("usage errors exit 2")
{
    CHECK(run({"verify", "--group", "S:3", "--set", "(1 2)", "--bogus"}).code == kExitUsage);
    CHECK(run({"frobnicate"}).code == kExitUsage);
    CHECK(run({}).code == kExitUsage);
    CHECK(run({"verify", "--group", "S:3", "--set", "(1 5)"}).code == kExitUsage);
    CHECK(run({"group", "info", "--group", "Q:8"}).code == kExitUsage);
    CHECK(run({"verify", "--group", "S:3", "--set", "e", "--format", "xml"}).code == kExitUsage);
}

TEST_CASE("caps exit 3")
{
    CHECK(run({"group", "info", "--group", "S:10"}).code == kExitBudget);
    CHECK(run({"verify", "--group", "S:5", "--set", "(1 2),(1 2 3),(1 4),(2 5),(3 4 5)", "--k", "6", "--max-words", "100"}).code == kExitBudget);
}

TEST_CASE("sn-cross csv")
{
    const auto r = run({"construct", "sn-cross", "--n", "4", "--full", "--format", "csv"});
    REQUIRE(r.code == kExitOk);
    const auto lines = data_lines(r.out);
    REQUIRE(lines.size() == 25);
    CHECK(lines[0] == "index,alpha,alpha_pi");
    const auto j = Json::parse(run({"construct", "sn-cross", "--n", "4", "--full"}).out);
    CHECK(j["result"]["claimed_g"].get<int>() <= 3);
    CHECK(j["result"]["measured_g"].get<int>() <= 3);
}

TEST_CASE("count hamilton text")
{
    const auto r = run({"count", "hamilton", "--glm", "2,2", "--format", "text"});
    CHECK(r.code == kExitOk);
    CHECK(r.out == "4\n");
    CHECK(run({"count", "eulerian", "--kmm", "3", "--format", "text"}).out == "5184\n");
    CHECK(run({"count", "sigma", "--n", "10", "--r", "2", "--format", "text"}).out == "32\n");
    CHECK(run({"construct", "hash-bound", "--t", "4", "--v", "3", "--q", "2", "--n", "6", "--format", "text"}).out == "96\n");
}

TEST_CASE("seeded commands are reproducible")
{
    const std::vector<std::string> cmd = {"construct", "probabilistic", "--group", "Z:31", "--kind", "second", "--seed", "42"};
    const auto a = run(cmd), b = run(cmd);
    CHECK(a.code == kExitOk);
    CHECK(a.out == b.out);
    CHECK(Json::parse(a.out)["seed"] == 42);
    const auto h1 = run({"construct", "hamilton-lift", "--named", "dodecahedron", "--seed", "9"});
    const auto h2 = run({"construct", "hamilton-lift", "--named", "dodecahedron", "--seed", "9"});
    CHECK(h1.out == h2.out);
    CHECK(h1.code == kExitOk);
}

TEST_CASE("digraph verbs")
{
    auto r = run({"digraph", "cll", "--glm", "3,2", "--l", "3"});
    CHECK(r.code == kExitOk);
    CHECK(Json::parse(r.out)["result"]["found"] == false);
    r = run({"digraph", "walk-type", "--glm", "2,2", "--walk", "1>5>1", "--format", "text"});
    CHECK(r.code == kExitOk);
    r = run({"digraph", "fk", "--group", "S:3", "--set", "(1 2 3),(1 2)", "--k", "2"});
    CHECK(r.code == kExitOk);
    r = run({"digraph", "girth", "--group", "Z:7", "--set", "0,1,3", "--format", "text"});
    CHECK(r.out == "6\n");
}

TEST_CASE("table over a corpus")
{
    const auto dir = std::filesystem::temp_directory_path() / "sidonkit_cli_corpus";
    std::filesystem::remove_all(dir);
    std::filesystem::create_directories(dir);
    // empty corpus: header only
    auto r = run({"table", "--corpus", dir.string(), "--format", "csv"});
    CHECK(r.code == kExitOk);
    CHECK(data_lines(r.out).size() == 1);

    for (const char* spec : {"Z:2", "Z:3", "Z:4", "prod(Z:2,Z:2)", "Z:5", "Z:6", "Z:7", "Z:8", "prod(Z:2,Z:4)",
                             "prod(Z:2,prod(Z:2,Z:2))", "Z:9", "prod(Z:3,Z:3)", "Z:10", "Z:11", "Z:12", "prod(Z:2,Z:6)"}) {
        std::ofstream(dir / (std::string(spec) + ".spec")) << spec << "\n";
    }
    std::ofstream(dir / "broken.tbl") << "3\n0 1\n";
    r = run({"table", "--corpus", dir.string(), "--k", "2"});
    CHECK(r.code == kExitOk);
    const auto j = Json::parse(r.out);
    std::size_t groups = 0, warnings = 0;
    std::uint64_t last = 0;
    for (const auto& row : j["result"]["rows"]) {
        if (row.contains("warning")) {
            ++warnings;
            continue;
        }
        ++groups;
        CHECK(row["M_k"] == 1);
        CHECK(row["order"].get<std::uint64_t>() >= last);
        last = row["order"];
    }
    CHECK(groups == 16);
    CHECK(warnings == 1);

    r = run({"table", "--specs", "S:3;prod(S:3,S:3)", "--k", "2"});
    const auto t = Json::parse(r.out)["result"]["rows"];
    CHECK(t[0]["M_k"] == 2);
    CHECK(t[1]["M_k"].get<int>() >= 2);
}

TEST_CASE("output file option")
{
    const auto path = (std::filesystem::temp_directory_path() / "sidonkit_out.json").string();
    const auto r = run({"group", "info", "--group", "A:4", "--output", path});
    CHECK(r.code == kExitOk);
    CHECK(r.out.empty());
    std::ifstream in(path);
    const auto j = Json::parse(in);
    CHECK(j["result"]["order"] == 12);
}
