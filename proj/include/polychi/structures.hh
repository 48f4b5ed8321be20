/* vim: set sw=4 sts=4 et : */

#ifndef POLYCHI_GUARD_STRUCTURES_HH
#define POLYCHI_GUARD_STRUCTURES_HH 1

#include <polychi/graph.hh>
#include <polychi/limits.hh>

#include <optional>
#include <string>
#include <vector>

namespace polychi
{
    /// |X| = t, Y disjoint from X and complete to X; value is chi(G[Y]).
    struct BicliqueCert
    {
        VertexSet x;
        VertexSet y;
        int value = 0;
    };

    /// An induced path v_1..v_p entering Y at v_p, with Y t-connected.
    /// Z is the part of Y nonadjacent to v_p (including v_p), and the value
    /// is chi(G[Z]).
    struct BalloonCert
    {
        std::vector<int> path;
        VertexSet y;
        VertexSet z;
        int value = 0;
        int t = 1;

        auto p() const -> int { return int(path.size()); }
        auto entry() const -> int { return path.back(); }
    };

    enum class CertDefect
    {
        none,
        out_of_range,
        bad_size,
        not_disjoint,
        not_complete,
        path_not_induced,
        path_meets_y,
        entry_not_in_y,
        path_touches_y,
        entry_not_unique,
        not_t_connected,
        z_mismatch,
        value_mismatch,
        value_unknown
    };

    auto to_string(CertDefect d) -> const char *;

    struct Validation
    {
        CertDefect defect = CertDefect::none;

        auto ok() const -> bool { return defect == CertDefect::none; }
        explicit operator bool () const { return ok(); }
    };

    auto validate_biclique(const Graph & g, const BicliqueCert & cert, const SolverLimits & limits = {}) -> Validation;

    /// Also checks cert.p() == p and cert.t == t. A singleton Y counts as
    /// 1-connected.
    auto validate_balloon(const Graph & g, const BalloonCert & cert, int p, int t,
            const SolverLimits & limits = {}) -> Validation;

    template <typename Cert_>
    struct CertSearchResult
    {
        bool complete = false;
        /// Exact maximum when complete, otherwise a certified lower bound.
        int value = 0;
        std::optional<Cert_> cert;
    };

    using BicliqueSearchResult = CertSearchResult<BicliqueCert>;
    using BalloonSearchResult = CertSearchResult<BalloonCert>;

    /// Maximum value over all t-bicliques (0 when there is none), with the
    /// first witness in lexicographic order of X attaining it.
    auto max_biclique_value(const Graph & g, int t, const SolverLimits & limits = {}) -> BicliqueSearchResult;

    /// Maximum value over all (p, t)-balloons (0 when there is none).
    auto max_balloon_value(const Graph & g, int p, int t, const SolverLimits & limits = {}) -> BalloonSearchResult;

    enum class ExtractionStatus
    {
        found,
        precondition_failed,
        not_found,
        unknown
    };

    auto to_string(ExtractionStatus s) -> const char *;

    struct ExtractionResult
    {
        ExtractionStatus status = ExtractionStatus::unknown;
        std::string reason;
        /// Parameter of the T1 / T2 found.
        int pattern_p = 0;
        /// Image of each vertex of realize(t1(pattern_p)) / realize(t2(pattern_p)).
        std::vector<int> mapping;
        /// Image of the E-graph or H(3,2) located inside Y.
        std::vector<int> core;
        /// Shortest path from the balloon entry to the core, inside Y.
        std::vector<int> connector;
    };

    /// For a paw-free g and a valid balloon with chi(G[Y]) >= omega(G) + 2:
    /// locates an induced E-graph in Y, joins it to the path by a shortest
    /// path Q, and searches P + Q + E for the longest induced T1(p'), p' >= 4.
    auto extract_t1(const Graph & g, const BalloonCert & balloon, const SolverLimits & limits = {}) -> ExtractionResult;

    /// For g paw-free and sub-dart-free and a valid balloon of value at least
    /// `threshold`: locates an induced H(3,2) in Y and assembles the longest
    /// induced T2(p') from P, the connecting path and H(3,2).
    auto extract_t2(const Graph & g, const BalloonCert & balloon, int threshold,
            const SolverLimits & limits = {}) -> ExtractionResult;

    /// {kind, path, X, Y, Z, value, p, t}
    auto to_json_string(const BicliqueCert & cert) -> std::string;
    auto to_json_string(const BalloonCert & cert) -> std::string;
}

#endif
