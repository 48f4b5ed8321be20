/* vim: set sw=4 sts=4 et : */

#ifndef POLYCHI_GUARD_GENERATORS_HH
#define POLYCHI_GUARD_GENERATORS_HH 1

#include <polychi/graph.hh>

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>

namespace polychi
{
    /// P_k on vertices 0..k-1 in path order.
    auto path_graph(int k) -> Graph;
    /// C_k, k >= 3.
    auto cycle_graph(int k) -> Graph;
    auto complete_graph(int n) -> Graph;
    auto edgeless_graph(int n) -> Graph;

    /// Complete multipartite graph with the given part sizes; parts occupy
    /// consecutive vertex ranges. Throws on zero parts or zero sizes.
    auto complete_multipartite(std::span<const int> part_sizes) -> Graph;

    /// K_d(t): d parts of t vertices each.
    auto complete_multipartite(int d, int t) -> Graph;

    /// Mycielski construction: vertices 0..n-1 are g, n..2n-1 the shadows
    /// (shadow of v adjacent to N(v)), 2n the apex adjacent to all shadows.
    auto mycielskian(const Graph & g) -> Graph;

    /// G(n, p) with every pair kept independently with probability p. The
    /// same seed always gives the same graph.
    auto random_graph(int n, double edge_probability, std::uint64_t seed) -> Graph;

    /// Disjoint union of g with a path v_1..v_len (new ids n..n+len-1), then
    /// the edge v_len - attach_to. Returns the new graph.
    auto attach_pendant_path(const Graph & g, int attach_to, int len) -> Graph;

    /// Builds a graph from a textual generator spec such as "cycle:5",
    /// "kdt:3,2", "multipartite:1,2,3", "mycielski:cycle:5", "grotzsch",
    /// "empty:4", "random:10,0.5,42". Returns nullopt for an unknown kind;
    /// throws std::invalid_argument for bad parameters.
    auto generate_from_spec(std::string_view spec) -> std::optional<Graph>;
}

#endif
