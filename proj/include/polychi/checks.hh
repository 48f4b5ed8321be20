/* vim: set sw=4 sts=4 et : */

#ifndef POLYCHI_GUARD_CHECKS_HH
#define POLYCHI_GUARD_CHECKS_HH 1

#include <polychi/graph.hh>
#include <polychi/limits.hh>

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace polychi
{
    struct CheckParams
    {
        /// (p, t) pairs for the lemma1 check.
        std::vector<std::pair<int, int>> pt_grid{ { 1, 1 }, { 1, 2 }, { 2, 1 }, { 2, 2 } };
        int d = 2;
        int p = 4;
        int t = 1;
        /// Spread of the H(s, 2) core for thm9.
        int s = 3;
        /// Forbidden tree for thm10 / thm11, as a pattern spec.
        std::string tree = "path:4";
        /// Pendant path lengths (the balloon's p) for the extraction checks.
        std::vector<int> extraction_p{ 4, 5, 6 };
        /// Core vertex the pendant path is attached to.
        int attach = 0;
        /// Balloon value threshold handed to extract_t2.
        int threshold = 1;
        SolverLimits limits;
        /// Worker threads; 0 picks the hardware concurrency.
        unsigned jobs = 0;
    };

    struct Violation
    {
        std::string graph6;
        std::string details;

        auto operator<=> (const Violation &) const = default;
    };

    struct CheckReport
    {
        std::string check_name;
        std::size_t corpus_size = 0;
        std::size_t checked = 0;
        std::size_t skipped_unknown = 0;
        std::vector<Violation> violations;
        long wall_time_ms = 0;
        /// Caveats such as the f0 a bound was evaluated relative to.
        std::vector<std::string> notes;
    };

    /// lemma1, randerath, randerath_contrapositive, degeneracy_greedy,
    /// thm8, thm9, thm10, thm11, extraction_t1, extraction_t2.
    auto check_names() -> std::vector<std::string>;

    /// Runs one named check over the corpus. Graphs outside the check's
    /// hypothesis class count towards neither checked nor skipped_unknown;
    /// graphs where a solver gave up count as skipped_unknown. Violations
    /// are sorted by graph6. Throws std::invalid_argument for unknown names.
    auto run_check(std::string_view name, const std::vector<Graph> & corpus, const CheckParams & params = {}) -> CheckReport;

    /// {check_name, corpus_size, checked, skipped_unknown, violations:
    /// [{graph6, details}], wall_time_ms} plus "notes" when non-empty.
    auto to_json_string(const CheckReport & report, bool include_timing = true) -> std::string;
}

#endif
