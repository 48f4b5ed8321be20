/* vim: set sw=4 sts=4 et : */

#include <polychi/corpus.hh>
#include <polychi/generators.hh>
#include <polychi/graph_io.hh>
#include <polychi/patterns.hh>
#include <polychi/structures.hh>

#include "oracles.hh"

#include <doctest.h>
#include <json.hpp>

using namespace polychi;

namespace
{
    // v1 = 0, v2 = 1, v3 = 2, a = 3, b = 4
    auto small_balloon_graph() -> Graph
    {
        return GraphBuilder(5).add_edge(0, 1).add_edge(1, 2).add_edge(2, 3).add_edge(2, 4).add_edge(3, 4).build();
    }

    // A path of p - 1 vertices hanging off vertex 0 of the core, read as a
    // (p, 1)-balloon with Y the whole core.
    auto pendant_balloon(const Graph & core, int p, Graph & host) -> BalloonCert
    {
        host = attach_pendant_path(core, 0, p - 1);
        BalloonCert cert;
        for (int i = 0 ; i < p - 1 ; ++i)
            cert.path.push_back(core.size() + i);
        cert.path.push_back(0);
        for (int v = 0 ; v < core.size() ; ++v) {
            cert.y.push_back(v);
            if (! host.adjacent(0, v))
                cert.z.push_back(v);
        }
        cert.value = oracle::chromatic_within(host, [&] {
                oracle::Mask m = 0;
                for (int v : cert.z)
                    m |= oracle::Mask(1) << v;
                return m;
            }());
        return cert;
    }
}

TEST_CASE("biclique validation")
{
    auto k23 = complete_multipartite(std::vector<int>{ 2, 3 });
    BicliqueCert good{ { 0, 1 }, { 2, 3, 4 }, 1 };
    CHECK(validate_biclique(k23, good).ok());
    BicliqueCert wrong_value{ { 0, 1 }, { 2, 3, 4 }, 2 };
    CHECK(validate_biclique(k23, wrong_value).defect == CertDefect::value_mismatch);
    BicliqueCert overlapping{ { 0, 1 }, { 1, 2 }, 1 };
    CHECK(! validate_biclique(k23, overlapping).ok());
    BicliqueCert not_complete{ { 0, 2 }, { 3 }, 1 };
    CHECK(validate_biclique(k23, not_complete).defect == CertDefect::not_complete);
}

TEST_CASE("balloon validation")
{
    auto g = small_balloon_graph();
    BalloonCert good{ { 0, 1, 2 }, { 2, 3, 4 }, { 2 }, 1, 2 };
    CHECK(validate_balloon(g, good, 3, 2).ok());
    BalloonCert entry_missing{ { 0, 1, 2 }, { 3, 4 }, {}, 0, 2 };
    CHECK(! validate_balloon(g, entry_missing, 3, 2).ok());
    BalloonCert wrong_z{ { 0, 1, 2 }, { 2, 3, 4 }, { 2, 3 }, 1, 2 };
    CHECK(validate_balloon(g, wrong_z, 3, 2).defect == CertDefect::z_mismatch);
    auto three = good;
    three.t = 3;
    CHECK(validate_balloon(g, three, 3, 3).defect == CertDefect::not_t_connected);
}

TEST_CASE("maximum biclique values")
{
    CHECK(max_biclique_value(cycle_graph(5), 1).value == 1);
    CHECK(max_biclique_value(complete_graph(5), 2).value == 3);
    CHECK(max_biclique_value(edgeless_graph(4), 1).value == 0);

    auto r = max_biclique_value(mycielskian(cycle_graph(5)), 1);
    REQUIRE(r.cert);
    CHECK(validate_biclique(mycielskian(cycle_graph(5)), *r.cert).ok());
}

TEST_CASE("maximum balloon values")
{
    CHECK(max_balloon_value(small_balloon_graph(), 3, 2).value == 1);
    CHECK(max_balloon_value(complete_graph(5), 1, 1).value == 1);
    CHECK(max_balloon_value(path_graph(2), 2, 1).value == 1);
    CHECK(max_balloon_value(edgeless_graph(3), 2, 1).value == 0);

    auto g = attach_pendant_path(mycielskian(cycle_graph(5)), 0, 3);
    auto r = max_balloon_value(g, 4, 1);
    REQUIRE(r.complete);
    REQUIRE(r.cert);
    CHECK(validate_balloon(g, *r.cert, 4, 1).ok());
    CHECK(r.value >= 3);
}

TEST_CASE("certificate searches agree with brute force on all graphs up to six vertices")
{
    for (int n = 0 ; n <= 6 ; ++n)
        for (auto & g : nonisomorphic_graphs(n))
            for (int p = 1 ; p <= 2 ; ++p)
                for (int t = 1 ; t <= 2 ; ++t) {
                    INFO(serialize_graph6(g), " p=", p, " t=", t);
                    auto balloon = max_balloon_value(g, p, t);
                    REQUIRE(balloon.complete);
                    REQUIRE(balloon.value == oracle::max_balloon_value(g, p, t));
                    if (balloon.cert)
                        REQUIRE(validate_balloon(g, *balloon.cert, p, t).ok());
                    auto biclique = max_biclique_value(g, t);
                    REQUIRE(biclique.complete);
                    REQUIRE(biclique.value == oracle::max_biclique_value(g, t));
                    if (biclique.cert)
                        REQUIRE(validate_biclique(g, *biclique.cert).ok());
                }
}

TEST_CASE("longer balloon paths agree with brute force")
{
    for (auto & g : nonisomorphic_graphs(6))
        for (int p = 3 ; p <= 4 ; ++p) {
            INFO(serialize_graph6(g), " p=", p);
            REQUIRE(max_balloon_value(g, p, 1).value == oracle::max_balloon_value(g, p, 1));
        }
}

TEST_CASE("T1 extraction from a pendant path on the Groetzsch graph")
{
    auto core = mycielskian(cycle_graph(5));
    for (int p : { 4, 5, 6 }) {
        Graph host;
        auto cert = pendant_balloon(core, p, host);
        REQUIRE(validate_balloon(host, cert, p, 1).ok());
        auto r = extract_t1(host, cert);
        INFO("p=", p, " ", r.reason);
        REQUIRE(r.status == ExtractionStatus::found);
        CHECK(r.pattern_p >= 4);
        auto t1 = realize(PatternSpec::t1(r.pattern_p));
        CHECK(is_induced_embedding(host, t1, r.mapping));
        CHECK(oracle::is_induced_map(host, t1, r.mapping));
        CHECK(oracle::induced_embedding(induced_subgraph(core, r.core), realize(parse_pattern("e"))));
    }
}

TEST_CASE("T1 extraction preconditions")
{
    // chi(Y) = omega + 1 for an odd cycle core
    Graph host;
    auto cert = pendant_balloon(cycle_graph(5), 4, host);
    CHECK(extract_t1(host, cert).status == ExtractionStatus::precondition_failed);

    // a triangle core makes the pendant attachment a paw
    auto with_paw = pendant_balloon(complete_graph(4), 4, host);
    CHECK(extract_t1(host, with_paw).status == ExtractionStatus::precondition_failed);

    auto broken = pendant_balloon(mycielskian(cycle_graph(5)), 4, host);
    broken.value += 1;
    CHECK(extract_t1(host, broken).status == ExtractionStatus::precondition_failed);
}

TEST_CASE("T2 extraction from a pendant path on H(3,2)")
{
    auto core = realize(PatternSpec::h_tree(3, 2));
    for (int p : { 4, 5 }) {
        Graph host;
        auto cert = pendant_balloon(core, p, host);
        REQUIRE(validate_balloon(host, cert, p, 1).ok());
        auto r = extract_t2(host, cert, 1);
        INFO("p=", p, " ", r.reason);
        REQUIRE(r.status == ExtractionStatus::found);
        auto t2 = realize(PatternSpec::t2(r.pattern_p));
        CHECK(is_induced_embedding(host, t2, r.mapping));
        CHECK(oracle::is_induced_map(host, t2, r.mapping));
    }

    Graph host;
    auto cert = pendant_balloon(realize(parse_pattern("sub_dart")), 4, host);
    CHECK(extract_t2(host, cert, 1).status == ExtractionStatus::precondition_failed);
    auto tree_cert = pendant_balloon(core, 4, host);
    CHECK(extract_t2(host, tree_cert, tree_cert.value + 1).status == ExtractionStatus::precondition_failed);
}

TEST_CASE("certificate JSON")
{
    auto j = nlohmann::json::parse(to_json_string(BalloonCert{ { 0, 1, 2 }, { 2, 3, 4 }, { 2 }, 1, 2 }));
    CHECK(j["kind"] == "balloon");
    CHECK(j["path"] == nlohmann::json::array({ 0, 1, 2 }));
    CHECK(j["Z"] == nlohmann::json::array({ 2 }));
    CHECK(j["value"] == 1);
    CHECK(j["p"] == 3);
    auto k = nlohmann::json::parse(to_json_string(BicliqueCert{ { 0 }, { 1, 2 }, 1 }));
    CHECK(k["kind"] == "biclique");
    CHECK(k["X"] == nlohmann::json::array({ 0 }));
}
