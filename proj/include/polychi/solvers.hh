/* vim: set sw=4 sts=4 et : */

#ifndef POLYCHI_GUARD_SOLVERS_HH
#define POLYCHI_GUARD_SOLVERS_HH 1

#include <polychi/graph.hh>
#include <polychi/limits.hh>

#include <optional>
#include <vector>

namespace polychi
{
    struct ChromaticResult
    {
        bool complete = false;
        int lower = 0;
        int upper = 0;
        /// A proper colouring with `upper` colours (0-based).
        std::vector<int> colouring;

        auto value() const -> std::optional<int>
        {
            return complete ? std::optional<int>(upper) : std::nullopt;
        }
    };

    struct CliqueResult
    {
        bool complete = false;
        int lower = 0;
        int upper = 0;
        /// A clique of size `lower`.
        VertexSet clique;

        auto value() const -> std::optional<int>
        {
            return complete ? std::optional<int>(lower) : std::nullopt;
        }
    };

    /// d pairwise disjoint parts of equal size with every cross-part pair
    /// adjacent: a (not necessarily induced) copy of K_d(t).
    struct MultipartiteWitness
    {
        std::vector<VertexSet> parts;
    };

    struct KdtResult
    {
        Verdict found = Verdict::unknown;
        std::optional<MultipartiteWitness> witness;
    };

    struct TauResult
    {
        bool complete = false;
        /// Exact tau_d when complete, otherwise a certified lower bound.
        int t = 0;
        MultipartiteWitness witness;
    };

    /// Exact chi by DSATUR branch and bound seeded with a clique bound.
    auto chromatic_number(const Graph & g, const SolverLimits & limits = {}) -> ChromaticResult;

    /// Exact omega by branch and bound with a greedy colouring bound.
    auto clique_number(const Graph & g, const SolverLimits & limits = {}) -> CliqueResult;

    /// Chromatic number of g[s].
    auto chromatic_number_of(const Graph & g, const VertexSet & s, const SolverLimits & limits = {}) -> ChromaticResult;

    /// Looks for K_d(t) as a subgraph, d, t >= 1.
    auto contains_kdt(const Graph & g, int d, int t, const SolverLimits & limits = {}) -> KdtResult;

    /// Largest t with K_d(t) a subgraph of g (tau_1 = n; 0 when K_d itself is absent).
    auto tau(const Graph & g, int d, const SolverLimits & limits = {}) -> TauResult;

    /// Checks disjointness, equal part sizes t and cross-part adjacency.
    auto is_valid_multipartite_witness(const Graph & g, const MultipartiteWitness & w, int d, int t) -> bool;
}

#endif
