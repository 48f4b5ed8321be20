/* vim: set sw=4 sts=4 et : */

#ifndef POLYCHI_GUARD_PATTERNS_HH
#define POLYCHI_GUARD_PATTERNS_HH 1

#include <polychi/graph.hh>
#include <polychi/limits.hh>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace polychi
{
    enum class PatternKind
    {
        paw,
        e_graph,
        sub_dart,
        dart,
        cross,
        h_letter,
        path,
        broom,
        h_tree,
        t1,
        t2,
        custom
    };

    /// A named or parameterised forbidden structure. Construct through the
    /// factories or parse_pattern so parameter constraints are enforced.
    struct PatternSpec
    {
        PatternKind kind = PatternKind::paw;
        std::vector<int> params;
        /// Only for PatternKind::custom.
        std::optional<Graph> graph;

        static auto simple(PatternKind kind) -> PatternSpec;
        static auto path(int k) -> PatternSpec;
        /// A path of `handle` vertices whose last vertex carries `leaves` extra leaves.
        static auto broom(int handle, int leaves) -> PatternSpec;
        /// Perfect s-ary rooted tree of height p: s >= 1, p >= 0.
        static auto h_tree(int s, int p) -> PatternSpec;
        /// p >= 4.
        static auto t1(int p) -> PatternSpec;
        /// p >= 4.
        static auto t2(int p) -> PatternSpec;
        static auto custom(Graph g) -> PatternSpec;

        /// Round-trips through parse_pattern, except custom graphs which
        /// print as "custom".
        auto name() const -> std::string;
    };

    /// Parses "paw", "e", "sub_dart", "dart", "cross", "h_letter",
    /// "path:k", "broom:h,l", "h:s,p", "t1:p", "t2:p", "custom:@file" or
    /// "custom:0-1,1-2,...". Throws std::invalid_argument.
    auto parse_pattern(std::string_view text) -> PatternSpec;

    /// Fixed labelled realisation. Labels:
    ///  - paw: triangle 0,1,2 plus pendant 3 on 0.
    ///  - e_graph: spine 0-1-2 with pendants 3,4,5 on 0,1,2.
    ///  - sub_dart: 0..4 = l1,l2,l3,l4,l5 and 5 = m; 4-cycle l1 l2 l5 l4,
    ///    m adjacent to l2 and l4, pendant l3 on l2.
    ///  - dart: K_4 - {2,3} on 0..3 plus pendant 4 on 0.
    ///  - cross: star with centre 0 and leaves 1..4, edge 0-4 extended by 4-5.
    ///  - h_letter: centres 0,1 adjacent, leaves 2,3 on 0 and 4,5 on 1.
    ///  - t1(p): path 0..p-1, then x=p, z=p+1, y=p+2 with a_p-x, x-z, a_p-y.
    ///  - t2(p): as t1 plus w=p+3 with y-w.
    ///  - h_tree: breadth-first labelling from the root 0.
    auto realize(const PatternSpec & spec) -> Graph;

    /// The patterns the detectors are checked against.
    auto catalog_patterns() -> std::vector<PatternSpec>;

    struct InducedResult
    {
        Verdict found = Verdict::unknown;
        /// mapping[u] is the image of pattern vertex u.
        std::optional<std::vector<int>> mapping;
    };

    /// Searches for an induced copy of h in g. When h's natural vertex order
    /// has every vertex adjacent to an earlier one (or first in its
    /// component), the mapping returned is the lexicographically smallest.
    auto induced_contains(const Graph & g, const Graph & h, const SolverLimits & limits = {}) -> InducedResult;

    /// Checks that mapping is an injective map with uv in E(h) <=> f(u)f(v) in E(g).
    auto is_induced_embedding(const Graph & g, const Graph & h, const std::vector<int> & mapping) -> bool;

    struct RootedTreeParams
    {
        /// Maximum degree of the tree.
        int spread = 0;
        /// Minimum height over roots of maximum degree.
        int height = 0;
        /// 1 + s + ... + s^p, the order of H(s, p).
        std::uint64_t size = 1;
        /// A maximum-degree vertex attaining `height`.
        int root = 0;
    };

    /// (s, p) with the tree embedded in H(s, p). Throws std::invalid_argument
    /// when t is not a tree.
    auto embed_params(const Graph & t) -> RootedTreeParams;

    /// Verdict::yes means the graph is free of the pattern.
    auto is_free_of(const Graph & g, const PatternSpec & pattern, const SolverLimits & limits = {}) -> Verdict;

    auto is_paw_free(const Graph & g, const SolverLimits & limits = {}) -> Verdict;
    auto is_subdart_free(const Graph & g, const SolverLimits & limits = {}) -> Verdict;
    auto is_e_free(const Graph & g, const SolverLimits & limits = {}) -> Verdict;
    auto is_h_letter_free(const Graph & g, const SolverLimits & limits = {}) -> Verdict;
    auto is_cross_free(const Graph & g, const SolverLimits & limits = {}) -> Verdict;

    /// Paw-free graphs.
    auto in_m(const Graph & g, const SolverLimits & limits = {}) -> Verdict;
    /// Paw-free and sub-dart-free graphs.
    auto in_l(const Graph & g, const SolverLimits & limits = {}) -> Verdict;

    /// tau_2(g) < t.
    auto in_f1(const Graph & g, int t, const SolverLimits & limits = {}) -> Verdict;

    /// tau_2(g) >= t, and for every K_2(b) subgraph (X, Y) one of g[X], g[Y]
    /// contains K_2(t). A b too large for g (2b > n) makes the condition vacuous.
    auto in_f2(const Graph & g, int t, std::uint64_t b, const SolverLimits & limits = {}) -> Verdict;

    /// in_f1 or in_f2 with b = beta_T(t) for the given tree.
    auto in_ft(const Graph & g, const Graph & tree, int t, const SolverLimits & limits = {}) -> Verdict;
}

#endif
