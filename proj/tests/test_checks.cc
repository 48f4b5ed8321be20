/* vim: set sw=4 sts=4 et : */

#include <polychi/checks.hh>
#include <polychi/corpus.hh>
#include <polychi/generators.hh>
#include <polychi/graph_io.hh>
#include <polychi/patterns.hh>

#include <doctest.h>
#include <json.hpp>

#include <filesystem>
#include <fstream>

using namespace polychi;

namespace
{
    auto corpus(const std::string & spec) -> std::vector<Graph>
    {
        return load_corpus(parse_corpus_spec(spec));
    }
}

TEST_CASE("corpus specifications")
{
    CHECK(corpus("exhaustive:4").size() == 1 + 1 + 2 + 4 + 11);
    CHECK(corpus("labelled:3").size() == 1 + 1 + 2 + 8);
    // the null graph counts as connected
    CHECK(corpus("exhaustive:5|connected").size() == 1 + 1 + 1 + 2 + 6 + 21);
    CHECK(corpus("random:8,0.5,5,42") == corpus("random:8,0.5,5,42"));
    CHECK(corpus("random:8,0.5,5,42").size() == 5);
    CHECK(corpus("named:grotzsch;cycle:5;paw").size() == 3);
    CHECK_THROWS_AS(parse_corpus_spec("exhaustive:x"), std::invalid_argument);
    CHECK_THROWS_AS(parse_corpus_spec("random:8,0.5,5"), std::invalid_argument);
    CHECK_THROWS_AS(parse_corpus_spec("bogus:1"), std::invalid_argument);
    CHECK_THROWS_AS(parse_corpus_spec("exhaustive:3|bogus"), std::invalid_argument);
    CHECK_THROWS_AS(corpus("exhaustive:9"), std::invalid_argument);
    CHECK_THROWS(corpus("file:/nonexistent/graphs.g6"));
    auto paw_free = corpus("exhaustive:6|paw_free");
    CHECK(! paw_free.empty());
    for (auto & g : paw_free)
        CHECK(is_paw_free(g) == Verdict::yes);
}

TEST_CASE("graph6 corpus files")
{
    auto path = std::filesystem::temp_directory_path() / "polychi_test_corpus.g6";
    {
        std::ofstream out(path);
        out << serialize_graph6(cycle_graph(5)) << "\n" << serialize_graph6(complete_graph(4)) << "\n\n";
    }
    auto graphs = corpus("file:" + path.string());
    REQUIRE(graphs.size() == 2);
    CHECK(graphs[0] == cycle_graph(5));
    CHECK(graphs[1] == complete_graph(4));
    std::filesystem::remove(path);
}

TEST_CASE("every check runs clean on the six-vertex corpus")
{
    auto graphs = corpus("exhaustive:6");
    for (auto & name : check_names()) {
        INFO(name);
        auto report = run_check(name, graphs);
        CHECK(report.check_name == name);
        CHECK(report.corpus_size == graphs.size());
        CHECK(report.violations.empty());
        CHECK(report.checked + report.skipped_unknown <= report.corpus_size);
    }
}

TEST_CASE("check counts on known corpora")
{
    CHECK(run_check("randerath", corpus("exhaustive:6")).checked > 0);
    CHECK(run_check("lemma1", corpus("exhaustive:6")).checked == corpus("exhaustive:6").size());

    auto contrapositive = run_check("randerath_contrapositive", corpus("named:grotzsch"));
    CHECK(contrapositive.checked == 1);
    CHECK(contrapositive.violations.empty());

    auto t1 = run_check("extraction_t1", corpus("named:grotzsch"));
    CHECK(t1.checked == 1);
    CHECK(t1.violations.empty());

    auto t2 = run_check("extraction_t2", corpus("named:h:3,2"));
    CHECK(t2.checked == 1);
    CHECK(t2.violations.empty());

    CHECK(run_check("thm9", corpus("exhaustive:3")).notes.size() == 1);
    CheckParams out_of_range;
    out_of_range.d = 2;
    out_of_range.t = 2;
    CHECK(run_check("thm10", corpus("exhaustive:3"), out_of_range).notes.size() == 1);
}

TEST_CASE("a starved solver budget shows up as skipped, never as checked")
{
    CheckParams starved;
    starved.limits.node_budget = 1;
    auto graphs = corpus("named:mycielski:grotzsch");
    auto report = run_check("degeneracy_greedy", graphs, starved);
    CHECK(report.skipped_unknown + report.checked == 1);
    CHECK(report.violations.empty());
}

TEST_CASE("reports are deterministic and independent of the worker count")
{
    auto graphs = corpus("exhaustive:6");
    CheckParams one, many;
    one.jobs = 1;
    many.jobs = 4;
    for (auto name : { "lemma1", "randerath", "degeneracy_greedy" }) {
        auto a = to_json_string(run_check(name, graphs, one), false);
        auto b = to_json_string(run_check(name, graphs, many), false);
        auto c = to_json_string(run_check(name, graphs, many), false);
        CHECK(a == b);
        CHECK(b == c);
    }
}

TEST_CASE("report JSON schema")
{
    auto report = run_check("degeneracy_greedy", corpus("exhaustive:3"));
    auto j = nlohmann::json::parse(to_json_string(report));
    for (auto key : { "check_name", "corpus_size", "checked", "skipped_unknown", "violations", "wall_time_ms" })
        CHECK(j.contains(key));
    CHECK(! j.contains("notes"));
    CHECK(j["violations"].is_array());

    CheckReport fake;
    fake.check_name = "x";
    fake.violations = { { "D?{", "b" }, { "@", "a" } };
    auto k = nlohmann::json::parse(to_json_string(fake));
    CHECK(k["violations"][0]["graph6"] == "D?{");
    CHECK(k["violations"][1]["details"] == "a");
}

TEST_CASE("unknown checks and bad parameters are rejected")
{
    CHECK_THROWS_AS(run_check("nope", {}), std::invalid_argument);
    CheckParams bad;
    bad.p = 3;
    CHECK_THROWS_AS(run_check("thm8", {}, bad), std::invalid_argument);
    CheckParams bad_t;
    bad_t.t = 0;
    CHECK_THROWS_AS(run_check("lemma1", {}, bad_t), std::invalid_argument);
}
