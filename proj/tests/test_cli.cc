/* vim: set sw=4 sts=4 et : */

#include <polychi/bignat.hh>
#include <polychi/cli.hh>
#include <polychi/generators.hh>
#include <polychi/graph_io.hh>

#include <doctest.h>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace polychi;

namespace
{
    struct Run
    {
        int code;
        std::string out, err;
    };

    auto run(std::vector<std::string> args) -> Run
    {
        std::ostringstream out, err;
        int code = run_cli(args, out, err);
        return { code, out.str(), err.str() };
    }
}

TEST_CASE("analyze")
{
    auto r = run({ "analyze", "cycle:5" });
    CHECK(r.code == 0);
    CHECK(r.out == "chi=3 omega=2 degeneracy=2 tau_2=1\n");
    CHECK(run({ "analyze", "D?{", "--max-d", "3" }).out == "chi=2 omega=2 degeneracy=1 tau_2=1 tau_3=0\n");
}

TEST_CASE("graph arguments from files")
{
    auto dir = std::filesystem::temp_directory_path();
    auto edges = dir / "polychi_cli_test.edges", g6 = dir / "polychi_cli_test.g6";
    std::ofstream(edges) << serialize_edge_list(cycle_graph(5));
    std::ofstream(g6) << serialize_graph6(complete_graph(4)) << "\n";
    CHECK(run({ "analyze", edges.string() }).out == "chi=3 omega=2 degeneracy=2 tau_2=1\n");
    CHECK(run({ "analyze", g6.string() }).out == "chi=4 omega=4 degeneracy=3 tau_2=2\n");
    std::filesystem::remove(edges);
    std::filesystem::remove(g6);
}

TEST_CASE("detect")
{
    auto none = run({ "detect", "complete:4", "--pattern", "paw" });
    CHECK(none.code == 0);
    CHECK(none.out == "not found\n");
    auto found = run({ "detect", "grotzsch", "--pattern", "e" });
    CHECK(found.code == 0);
    CHECK(found.out.rfind("found: ", 0) == 0);
}

TEST_CASE("bounds")
{
    CHECK(run({ "bounds", "lemma1", "-p", "1", "-q", "1", "-s", "1", "-t", "1" }).out == "13\n");
    CHECK(run({ "bounds", "thm8", "-d", "2", "-p", "4", "-t", "2" }).out == "1060\n");
    CHECK(run({ "bounds", "thm10", "-d", "2", "-p", "4", "-t", "1" }).out == "49\n");
    CHECK(run({ "bounds", "scott", "--size", "2", "-s", "2", "-p", "1", "-t", "1" }).out
            == BigNat(4).pow(48).to_decimal() + "\n");

    auto j = nlohmann::json::parse(run({ "bounds", "beta_t", "--tree", "h:3,1", "-t", "1", "--json" }).out);
    CHECK(j["formula"] == "beta_t");
    CHECK(j["params"]["s"] == 3);
    CHECK(j["params"]["p"] == 1);
    CHECK(j["value_decimal"] == (BigNat(12).pow(96) + BigNat(1)).to_decimal());
    CHECK(j["digits"] == 104);

    auto truncated = run({ "bounds", "beta_h", "-s", "1", "-p", "1", "-t", "1", "--truncate", "5" });
    CHECK(truncated.out == "2.8147e+14 (digits=15)\n");

    auto missing = run({ "bounds", "lemma1", "-p", "1" });
    CHECK(missing.code == 2);
    CHECK(! missing.err.empty());
    CHECK(run({ "bounds", "nope" }).code == 2);
}

TEST_CASE("certificate searches")
{
    auto b = run({ "find-biclique", "complete:5", "-t", "2" });
    CHECK(b.code == 0);
    CHECK(b.out.rfind("value=3\n", 0) == 0);
    auto cert = nlohmann::json::parse(b.out.substr(b.out.find('\n') + 1));
    CHECK(cert["kind"] == "biclique");

    auto balloon = run({ "find-balloon", "path:2", "-p", "2", "-t", "1" });
    CHECK(balloon.out.rfind("value=1\n", 0) == 0);
}

TEST_CASE("classify")
{
    auto r = run({ "classify", "multipartite:2,2", "-t", "2", "--b", "2" });
    CHECK(r.code == 0);
    CHECK(r.out == "M=yes L=yes F1=no F2=no FT=yes\n");
    CHECK(run({ "classify", "cycle:5", "--tree", "cycle:5" }).code == 2);
}

TEST_CASE("gen")
{
    CHECK(run({ "gen", "complete:4" }).out == "C~\n");
    CHECK(run({ "gen", "path:3", "--format", "edges" }).out == serialize_edge_list(path_graph(3)));
    CHECK(run({ "gen", "nonsense" }).code == 2);
}

TEST_CASE("verify")
{
    auto ok = run({ "verify", "randerath", "--corpus", "exhaustive:5", "--no-timing" });
    CHECK(ok.code == 0);
    auto j = nlohmann::json::parse(ok.out);
    CHECK(j["check_name"] == "randerath");
    CHECK(j["wall_time_ms"] == 0);
    CHECK(run({ "verify", "randerath", "--corpus", "exhaustive:5", "--no-timing" }).out == ok.out);

    auto path = std::filesystem::temp_directory_path() / "polychi_cli_report.json";
    CHECK(run({ "verify", "lemma1", "--corpus", "exhaustive:4", "--grid", "1:1,3:2", "--out", path.string() }).code == 0);
    std::ifstream in(path);
    CHECK(nlohmann::json::parse(in)["corpus_size"] == 19);
    std::filesystem::remove(path);

    CHECK(run({ "verify", "nope" }).code == 2);
    CHECK(run({ "verify", "lemma1", "--corpus", "exhaustive:99" }).code == 2);
    CHECK(run({ "verify", "lemma1", "--grid", "1" }).code == 2);
}

TEST_CASE("usage errors")
{
    CHECK(run({}).code == 2);
    CHECK(run({ "frobnicate" }).code == 2);
    CHECK(run({ "analyze" }).code == 2);
    CHECK(run({ "analyze", "not-a-graph!!" }).code == 2);
    CHECK(run({ "--help" }).code == 0);
}
