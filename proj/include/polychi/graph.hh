/* vim: set sw=4 sts=4 et : */

#ifndef POLYCHI_GUARD_GRAPH_HH
#define POLYCHI_GUARD_GRAPH_HH 1

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace polychi
{
    /// A sorted list of distinct vertex ids of some graph.
    using VertexSet = std::vector<int>;

    using Edge = std::pair<int, int>;

    /// Immutable simple undirected graph on the vertices 0..n-1, stored as a
    /// dense bit matrix so adjacency queries are O(1).
    class Graph
    {
        public:
            Graph() = default;

            /// Throws std::invalid_argument on self-loops or out-of-range ends.
            /// Repeated edges are merged.
            Graph(int n, std::span<const Edge> edges);

            auto size() const -> int { return _n; }
            auto empty() const -> bool { return _n == 0; }

            auto adjacent(int u, int v) const -> bool
            {
                return (_bits[row_offset(u) + (v >> 6)] >> (v & 63)) & 1;
            }

            auto degree(int v) const -> int;
            auto neighbours(int v) const -> std::vector<int>;
            auto edge_count() const -> long;
            /// Edges as (u, v) with u < v, in lexicographic order.
            auto edges() const -> std::vector<Edge>;

            /// Words of the adjacency row of v; bit w of the row is set iff v ~ w.
            auto row(int v) const -> std::span<const std::uint64_t>
            {
                return { _bits.data() + row_offset(v), static_cast<std::size_t>(_words) };
            }

            auto words_per_row() const -> int { return _words; }

            auto operator== (const Graph &) const -> bool = default;

        private:
            auto row_offset(int v) const -> std::size_t { return static_cast<std::size_t>(v) * _words; }

            int _n = 0;
            int _words = 0;
            std::vector<std::uint64_t> _bits;
    };

    /// Mutable accumulator for edges; the only way to grow a graph.
    class GraphBuilder
    {
        public:
            explicit GraphBuilder(int n) : _n(n) { }

            auto add_edge(int u, int v) -> GraphBuilder &;
            auto size() const -> int { return _n; }
            auto build() const -> Graph { return Graph(_n, _edges); }

        private:
            int _n;
            std::vector<Edge> _edges;
    };

    /// Checks that s is sorted, duplicate free and inside g's vertex range.
    auto valid_vertex_set(const Graph & g, const VertexSet & s) -> bool;

    /// The graph induced on s, relabelled so that s[i] becomes vertex i.
    /// Members need not be sorted but must be distinct; throws
    /// std::out_of_range for a member outside g.
    auto induced_subgraph(const Graph & g, std::span<const int> s) -> Graph;

    auto is_connected(const Graph & g) -> bool;

    /// Connected components, each sorted, ordered by smallest member.
    auto connected_components(const Graph & g) -> std::vector<VertexSet>;

    /// Minimum number of vertices whose removal disconnects g or leaves a
    /// single vertex: K_n gives n-1, disconnected graphs and n <= 1 give 0.
    auto vertex_connectivity(const Graph & g) -> int;

    /// kappa >= t and n >= t + 1. With allow_singleton, a single vertex also
    /// counts as 1-connected.
    auto is_t_connected(const Graph & g, int t, bool allow_singleton = false) -> bool;

    struct Degeneracy
    {
        int value = 0;
        /// Vertices in the order they were removed (minimum degree first).
        std::vector<int> order;
    };

    /// Throws std::invalid_argument on the null graph.
    auto degeneracy(const Graph & g) -> Degeneracy;

    /// Greedy first-fit colouring visiting vertices in the given order.
    /// Colours are 0-based.
    auto greedy_colouring(const Graph & g, std::span<const int> order) -> std::vector<int>;

    /// Greedy colouring along the reverse elimination order; uses at most
    /// degeneracy + 1 colours.
    auto degeneracy_colouring(const Graph & g) -> std::vector<int>;

    auto is_proper_colouring(const Graph & g, std::span<const int> colour) -> bool;

    auto is_tree(const Graph & g) -> bool;

    /// BFS distances from source; -1 for unreachable vertices.
    auto distances_from(const Graph & g, int source) -> std::vector<int>;
}

#endif
