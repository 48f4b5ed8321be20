/* vim: set sw=4 sts=4 et : */

#ifndef POLYCHI_GUARD_CORPUS_HH
#define POLYCHI_GUARD_CORPUS_HH 1

#include <polychi/graph.hh>

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace polychi
{
    enum class CorpusSource
    {
        graph6_file,
        /// One representative per isomorphism class, every order 0..max_n.
        exhaustive,
        /// Every labelled graph on 0..max_n vertices.
        exhaustive_labelled,
        random,
        named
    };

    struct CorpusSpec
    {
        CorpusSource source = CorpusSource::exhaustive;
        std::string path;
        int max_n = 6;
        int n = 0;
        double edge_probability = 0.5;
        int count = 0;
        std::uint64_t seed = 0;
        std::vector<std::string> generators;
        /// Any of "connected", "paw_free", "l_class", "triangle_free".
        std::vector<std::string> filters;
        /// Exhaustive corpora above this order are refused.
        int exhaustive_limit = 8;
    };

    /// "file:PATH", "exhaustive:N", "labelled:N", "random:n,p,count,seed" or
    /// "named:SPEC;SPEC;..." where each SPEC is a generator or pattern name,
    /// optionally followed by "|filter,filter" (connected, paw_free, l_class,
    /// triangle_free). Throws std::invalid_argument.
    auto parse_corpus_spec(std::string_view text) -> CorpusSpec;

    /// Materialises the corpus and applies its filters.
    auto load_corpus(const CorpusSpec & spec) -> std::vector<Graph>;

    /// Representatives of the isomorphism classes of graphs on exactly n
    /// vertices, in a fixed deterministic order.
    auto nonisomorphic_graphs(int n) -> std::vector<Graph>;

    /// Calls visit on each of the 2^(n choose 2) labelled graphs on n vertices.
    auto for_each_labelled_graph(int n, const std::function<void (const Graph &)> & visit) -> void;

    auto are_isomorphic(const Graph & a, const Graph & b) -> bool;

    /// Resolves a generator spec ("cycle:5", "grotzsch", ...) or a pattern
    /// spec ("paw", "t1:4", ...). Throws std::invalid_argument.
    auto graph_from_spec(std::string_view spec) -> Graph;
}

#endif
