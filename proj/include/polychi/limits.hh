/* vim: set sw=4 sts=4 et : */

#ifndef POLYCHI_GUARD_LIMITS_HH
#define POLYCHI_GUARD_LIMITS_HH 1

#include <chrono>
#include <cstdint>
#include <optional>
#include <stdexcept>

namespace polychi
{
    /// Caps on an exact search. Exceeding either one yields an "unknown"
    /// result carrying whatever bounds were established, never a wrong answer.
    struct SolverLimits
    {
        std::uint64_t node_budget = 200'000'000;
        std::optional<std::chrono::milliseconds> time_budget = std::nullopt;
    };

    /// Three-valued answer for decision searches.
    enum class Verdict
    {
        no,
        yes,
        unknown
    };

    inline auto to_verdict(bool b) -> Verdict { return b ? Verdict::yes : Verdict::no; }

    inline auto operator! (Verdict v) -> Verdict
    {
        return v == Verdict::unknown ? v : (v == Verdict::yes ? Verdict::no : Verdict::yes);
    }

    inline auto to_string(Verdict v) -> const char *
    {
        switch (v) {
            case Verdict::no: return "no";
            case Verdict::yes: return "yes";
            case Verdict::unknown: return "unknown";
        }
        return "unknown";
    }

    /// Node and wall-clock accounting for one search. Not thread safe; each
    /// search owns its own budget.
    class SearchBudget
    {
        public:
            explicit SearchBudget(const SolverLimits & limits) :
                _remaining(limits.node_budget)
            {
                if (limits.node_budget == 0)
                    throw std::invalid_argument("node budget must be positive");
                if (limits.time_budget) {
                    if (limits.time_budget->count() <= 0)
                        throw std::invalid_argument("time budget must be positive");
                    _deadline = std::chrono::steady_clock::now() + *limits.time_budget;
                }
            }

            /// Accounts for one search node; false once the budget is spent.
            auto tick() -> bool
            {
                if (_exhausted)
                    return false;
                if (_remaining == 0) {
                    _exhausted = true;
                    return false;
                }
                --_remaining;
                if (_deadline && (++_since_clock & 1023) == 0 && std::chrono::steady_clock::now() > *_deadline)
                    _exhausted = true;
                return ! _exhausted;
            }

            auto exhausted() const -> bool { return _exhausted; }

        private:
            std::uint64_t _remaining;
            std::uint64_t _since_clock = 0;
            std::optional<std::chrono::steady_clock::time_point> _deadline;
            bool _exhausted = false;
    };
}

#endif
