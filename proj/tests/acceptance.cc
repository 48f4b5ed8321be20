/* vim: set sw=4 sts=4 et : */

// Runs the eight acceptance criteria and prints one PASS / FAIL line each.
// Exit status is zero only if every criterion passes.

#include <polychi/bignat.hh>
#include <polychi/bounds.hh>
#include <polychi/checks.hh>
#include <polychi/corpus.hh>
#include <polychi/generators.hh>
#include <polychi/graph_io.hh>
#include <polychi/patterns.hh>
#include <polychi/solvers.hh>
#include <polychi/structures.hh>

#include "oracles.hh"

#include <json.hpp>

#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

using namespace polychi;

namespace
{
    struct Outcome
    {
        bool pass = true;
        std::string summary;
        std::vector<std::string> failures;

        auto fail(std::string why) -> void
        {
            pass = false;
            if (failures.size() < 10)
                failures.push_back(std::move(why));
        }
    };

    auto corpus_up_to(int n) -> std::vector<Graph>
    {
        std::vector<Graph> all;
        for (int i = 0 ; i <= n ; ++i) {
            auto layer = nonisomorphic_graphs(i);
            all.insert(all.end(), layer.begin(), layer.end());
        }
        return all;
    }

    const auto & small_corpus()
    {
        static const auto graphs = corpus_up_to(7);
        return graphs;
    }

    auto n(std::uint64_t v) -> BigNat { return BigNat(v); }

    auto solver_equivalence() -> Outcome
    {
        Outcome o;
        long compared = 0;
        for (auto & g : small_corpus()) {
            auto g6 = serialize_graph6(g);
            auto chi = chromatic_number(g).value();
            if (chi != oracle::chromatic_number(g))
                o.fail(g6 + ": chi");
            auto omega = clique_number(g).value();
            if (omega != oracle::clique_number(g))
                o.fail(g6 + ": omega");
            for (int d = 1 ; d <= 3 ; ++d) {
                auto r = tau(g, d);
                if (! r.complete || r.t != oracle::tau(g, d))
                    o.fail(g6 + ": tau_" + std::to_string(d));
            }
            compared += 5;
        }
        o.summary = std::to_string(small_corpus().size()) + " graphs, " + std::to_string(compared) + " values compared";
        return o;
    }

    auto lemma1_law() -> Outcome
    {
        Outcome o;
        long instances = 0;
        for (auto & g : small_corpus()) {
            auto g6 = serialize_graph6(g);
            int chi = oracle::chromatic_number(g);
            for (int p = 1 ; p <= 2 ; ++p)
                for (int t = 1 ; t <= 2 ; ++t) {
                    auto balloon = max_balloon_value(g, p, t);
                    auto biclique = max_biclique_value(g, t);
                    if (! balloon.complete || ! biclique.complete) {
                        o.fail(g6 + ": search incomplete");
                        continue;
                    }
                    if (balloon.cert && ! validate_balloon(g, *balloon.cert, p, t).ok())
                        o.fail(g6 + ": invalid balloon certificate");
                    if (biclique.cert && ! validate_biclique(g, *biclique.cert).ok())
                        o.fail(g6 + ": invalid biclique certificate");
                    if (balloon.value != oracle::max_balloon_value(g, p, t))
                        o.fail(g6 + ": q* differs from brute force");
                    if (biclique.value != oracle::max_biclique_value(g, t))
                        o.fail(g6 + ": s* differs from brute force");
                    auto rhs = lemma1_rhs(std::uint64_t(p), n(std::uint64_t(balloon.value) + 1),
                            n(std::uint64_t(biclique.value) + 1), n(std::uint64_t(t)));
                    if (n(std::uint64_t(chi)) > rhs)
                        o.fail(g6 + ": chi exceeds the bound at p=" + std::to_string(p) + " t=" + std::to_string(t));
                    ++instances;
                }
        }

        CheckParams params;
        params.pt_grid = { { 1, 1 }, { 1, 2 }, { 2, 1 }, { 2, 2 } };
        auto report = run_check("lemma1", small_corpus(), params);
        if (! report.violations.empty() || report.skipped_unknown != 0 || report.checked != small_corpus().size())
            o.fail("harness lemma1 report: " + to_json_string(report, false));
        o.summary = std::to_string(instances) + " (graph, p, t) instances, 0 violations required";
        return o;
    }

    auto randerath_law() -> Outcome
    {
        Outcome o;
        const std::vector<std::pair<std::string, Graph>> patterns{
            { "E", realize(parse_pattern("e")) },
            { "H-letter", realize(parse_pattern("h_letter")) },
            { "cross", realize(parse_pattern("cross")) } };
        auto paw = realize(parse_pattern("paw"));
        std::vector<long> hypothesis(patterns.size(), 0);
        for (auto & g : small_corpus()) {
            if (oracle::induced_embedding(g, paw))
                continue;
            int chi = oracle::chromatic_number(g), omega = oracle::clique_number(g);
            for (std::size_t i = 0 ; i < patterns.size() ; ++i)
                if (! oracle::induced_embedding(g, patterns[i].second)) {
                    ++hypothesis[i];
                    if (chi > omega + 1)
                        o.fail(serialize_graph6(g) + ": " + patterns[i].first + "-free with chi > omega + 1");
                }
        }
        auto report = run_check("randerath", small_corpus());
        if (! report.violations.empty() || report.skipped_unknown != 0)
            o.fail("harness randerath report: " + to_json_string(report, false));
        o.summary = "paw-free and E-free: " + std::to_string(hypothesis[0]) + ", H-letter-free: "
            + std::to_string(hypothesis[1]) + ", cross-free: " + std::to_string(hypothesis[2]) + " graphs";
        return o;
    }

    auto contrapositive_witnesses() -> Outcome
    {
        Outcome o;
        auto g = mycielskian(cycle_graph(5));
        if (oracle::induced_embedding(g, realize(parse_pattern("paw"))))
            o.fail("not paw-free");
        if (oracle::chromatic_number(g) != 4)
            o.fail("chi != 4");
        if (oracle::clique_number(g) != 2)
            o.fail("omega != 2");
        for (auto name : { "e", "h_letter", "cross" }) {
            auto h = realize(parse_pattern(name));
            auto r = induced_contains(g, h);
            if (r.found != Verdict::yes)
                o.fail(std::string("no ") + name + " witness");
            else if (! oracle::is_induced_map(g, h, *r.mapping))
                o.fail(std::string(name) + " witness rejected by brute-force check");
            if (! oracle::induced_embedding(g, h))
                o.fail(std::string("brute force finds no ") + name);
        }
        auto report = run_check("randerath_contrapositive", { g });
        if (report.checked != 1 || ! report.violations.empty())
            o.fail("harness report: " + to_json_string(report, false));
        o.summary = "paw-free, chi=4, omega=2; E, H-letter and cross witnesses validated";
        return o;
    }

    auto extraction() -> Outcome
    {
        Outcome o;
        auto core = mycielskian(cycle_graph(5));
        std::string found;
        for (int p : { 4, 5, 6 }) {
            auto host = attach_pendant_path(core, 0, p - 1);
            BalloonCert cert;
            for (int i = 0 ; i < p - 1 ; ++i)
                cert.path.push_back(core.size() + i);
            cert.path.push_back(0);
            for (int v = 0 ; v < core.size() ; ++v) {
                cert.y.push_back(v);
                if (! host.adjacent(0, v))
                    cert.z.push_back(v);
            }
            oracle::Mask z = 0;
            for (int v : cert.z)
                z |= oracle::Mask(1) << v;
            cert.value = oracle::chromatic_within(host, z);

            auto r = extract_t1(host, cert);
            if (r.status != ExtractionStatus::found) {
                o.fail("p=" + std::to_string(p) + ": " + to_string(r.status) + " " + r.reason);
                continue;
            }
            auto t1 = realize(PatternSpec::t1(r.pattern_p));
            if (! oracle::is_induced_map(host, t1, r.mapping))
                o.fail("p=" + std::to_string(p) + ": witness rejected by brute-force check");
            auto again = induced_contains(host, t1);
            if (again.found != Verdict::yes || ! oracle::is_induced_map(host, t1, *again.mapping))
                o.fail("p=" + std::to_string(p) + ": independent search finds no t1:" + std::to_string(r.pattern_p));
            found += (found.empty() ? "" : ", ") + std::string("p=") + std::to_string(p) + " -> t1:" + std::to_string(r.pattern_p);
        }
        o.summary = found;
        return o;
    }

    auto golden_values() -> Outcome
    {
        Outcome o;
        auto expect = [&] (const std::string & what, const BigNat & got, const BigNat & want) {
            if (got != want)
                o.fail(what + " = " + got.to_scientific(30));
        };
        expect("lemma1_rhs(1,1,1,1)", lemma1_rhs(1, n(1), n(1), n(1)), n(13));
        expect("lemma1_rhs(2,2,3,2)", lemma1_rhs(2, n(2), n(3), n(2)), n(95));
        expect("thm8_f(2,4,1)", thm8_f(2, 4, n(1)), n(64));
        expect("thm8_f(2,4,2)", thm8_f(2, 4, n(2)), n(1060));
        expect("thm10_f(2,4,1)", thm10_f(2, 4, n(1)), n(49));
        for (std::uint64_t t = 1 ; t <= 5 ; ++t)
            expect("beta_H(1,1," + std::to_string(t) + ")", beta_h(1, 1, n(t)), n(2 * t).pow(48) + n(1));

        std::ifstream in(POLYCHI_GOLDEN_DIR "/bounds.json");
        if (! in) {
            o.fail("golden file missing");
            return o;
        }
        auto golden = nlohmann::json::parse(in);
        auto pinned = [&] (const std::string & key) { return BigNat::from_decimal(golden.at(key).get<std::string>()); };
        int count = 6;
        for (auto [key, s, d, t] : { std::tuple{ "cascade_s1_d1_t1", 1, 1, 1 }, std::tuple{ "cascade_s3_d2_t1", 3, 2, 1 },
                std::tuple{ "cascade_s2_d2_t2", 2, 2, 2 } }) {
            auto c = cascade(s, d, n(t));
            for (auto [field, value] : { std::pair{ "w", c.w }, std::pair{ "f8", c.f8 }, std::pair{ "f5", c.f5 },
                    std::pair{ "f3", c.f3 }, std::pair{ "f2", c.f2 }, std::pair{ "f1", c.f1 } }) {
                expect(std::string(key) + "." + field, value, BigNat::from_decimal(golden.at(key).at(field).get<std::string>()));
                ++count;
            }
        }
        auto star = complete_multipartite(std::vector<int>{ 1, 3 });
        expect("thm9_f(2,4,1)", thm9_f(2, 4, n(1)), pinned("thm9_d2_p4_t1"));
        expect("thm9_f(3,4,1)", thm9_f(3, 4, n(1)), pinned("thm9_d3_p4_t1"));
        expect("thm10_f(3,4,2)", thm10_f(3, 4, n(2)), pinned("thm10_d3_p4_t2"));
        expect("thm11_f(2,K13,1)", thm11_f(2, star, n(1)), pinned("thm11_d2_star3_t1"));
        expect("thm11_f(2,K13,2)", thm11_f(2, star, n(2)), pinned("thm11_d2_star3_t2"));
        expect("thm11_f(3,P3,1)", thm11_f(3, path_graph(3), n(1)), pinned("thm11_d3_path3_t1"));
        count += 6;
        o.summary = std::to_string(count) + " exact values";
        return o;
    }

    auto structural_identity() -> Outcome
    {
        Outcome o;
        int count = 0;
        for (std::uint64_t d : { 2, 3 })
            for (std::uint64_t p : { 4, 5 })
                for (std::uint64_t t : { 1, 2, 3 }) {
                    auto lhs = thm8_f(d, p, n(t));
                    auto rhs = lemma1_rhs(p + 1, n(d * t + 2), thm8_f(d - 1, p, n(t)) + n(1), n(t));
                    if (lhs != rhs)
                        o.fail("d=" + std::to_string(d) + " p=" + std::to_string(p) + " t=" + std::to_string(t));
                    ++count;
                }
        o.summary = std::to_string(count) + " parameter tuples, exact equality";
        return o;
    }

    auto detectors_and_round_trip() -> Outcome
    {
        Outcome o;
        long comparisons = 0;
        auto catalog = catalog_patterns();
        for (auto & g : small_corpus())
            for (auto & spec : catalog) {
                auto h = realize(spec);
                auto got = induced_contains(g, h);
                auto want = oracle::induced_embedding(g, h);
                if (got.found != to_verdict(want.has_value()))
                    o.fail(serialize_graph6(g) + ": " + spec.name());
                else if (want && ! oracle::is_induced_map(g, h, *got.mapping))
                    o.fail(serialize_graph6(g) + ": bad " + spec.name() + " witness");
                ++comparisons;
            }

        long round_trips = 0;
        for (auto & g : small_corpus()) {
            if (parse_graph6(serialize_graph6(g)) != g)
                o.fail("round trip: " + serialize_graph6(g));
            ++round_trips;
        }
        for (int k = 0 ; k <= 7 ; ++k)
            for_each_labelled_graph(k, [&] (const Graph & g) {
                if (parse_graph6(serialize_graph6(g)) != g)
                    o.fail("round trip: " + serialize_graph6(g));
                ++round_trips;
            });
        o.summary = std::to_string(catalog.size()) + " patterns, " + std::to_string(comparisons) + " detections, "
            + std::to_string(round_trips) + " graph6 round trips";
        return o;
    }
}

auto main() -> int
{
    const std::vector<std::pair<std::string, std::function<Outcome ()>>> criteria{
        { "solver oracle equivalence (chi, omega, tau_1..3 on all graphs n <= 7)", solver_equivalence },
        { "lemma1 law (n <= 7, (p,t) in {1,2}^2)", lemma1_law },
        { "chi <= omega+1 for paw-free graphs that are E-free, H-letter-free or cross-free (n <= 7)", randerath_law },
        { "contrapositive witnesses in mycielskian(C5)", contrapositive_witnesses },
        { "T1 extraction from pendant path + mycielskian(C5), p in {4,5,6}", extraction },
        { "bound golden values", golden_values },
        { "thm8 equals lemma1_rhs at (p+1, dt+2, g+1, t)", structural_identity },
        { "pattern detectors vs brute force, graph6 round trip", detectors_and_round_trip },
    };

    int failed = 0;
    for (std::size_t i = 0 ; i < criteria.size() ; ++i) {
        auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = criteria[i].second();
        }
        catch (const std::exception & e) {
            o.fail(std::string("exception: ") + e.what());
        }
        auto seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::ostringstream line;
        line.precision(2);
        line << std::fixed << (o.pass ? "PASS" : "FAIL") << " [" << i + 1 << "] " << criteria[i].first
            << " -- " << o.summary << " (" << seconds << "s)";
        std::cout << line.str() << std::endl;
        for (auto & f : o.failures)
            std::cout << "       " << f << std::endl;
        failed += ! o.pass;
    }
    std::cout << (criteria.size() - std::size_t(failed)) << "/" << criteria.size() << " acceptance criteria passed" << std::endl;
    return failed ? 1 : 0;
}
