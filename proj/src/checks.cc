/* vim: set sw=4 sts=4 et : */

#include <polychi/checks.hh>
#include <polychi/bounds.hh>
#include <polychi/corpus.hh>
#include <polychi/generators.hh>
#include <polychi/graph_io.hh>
#include <polychi/patterns.hh>
#include <polychi/solvers.hh>
#include <polychi/structures.hh>

#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <functional>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <thread>

namespace polychi
{
    namespace
    {
        enum class OutcomeKind
        {
            outside,
            ok,
            violation,
            unknown
        };

        struct Outcome
        {
            OutcomeKind kind = OutcomeKind::outside;
            std::string details;
        };

        auto outside() -> Outcome { return { OutcomeKind::outside, {} }; }
        auto ok() -> Outcome { return { OutcomeKind::ok, {} }; }
        auto unknown(std::string why) -> Outcome { return { OutcomeKind::unknown, std::move(why) }; }
        auto violation(std::string why) -> Outcome { return { OutcomeKind::violation, std::move(why) }; }

        // Everything a per-graph check needs that does not depend on the graph.
        struct Context
        {
            CheckParams params;
            std::optional<BigNat> bound;
            std::optional<Graph> forbidden;
            std::vector<std::string> notes;
        };

        using CheckFn = std::function<Outcome (const Graph &, const Context &)>;

        struct ChiOmega
        {
            int chi, omega;
        };

        auto chi_and_omega(const Graph & g, const SolverLimits & limits) -> std::optional<ChiOmega>
        {
            auto chi = chromatic_number(g, limits);
            auto omega = clique_number(g, limits);
            if (! chi.complete || ! omega.complete)
                return std::nullopt;
            return ChiOmega{ chi.upper, omega.lower };
        }

        auto check_lemma1(const Graph & g, const Context & ctx) -> Outcome
        {
            const auto & limits = ctx.params.limits;
            auto chi = chromatic_number(g, limits);
            if (! chi.complete)
                return unknown("chi");

            for (auto [p, t] : ctx.params.pt_grid) {
                auto balloon = max_balloon_value(g, p, t, limits);
                auto biclique = max_biclique_value(g, t, limits);
                if (! balloon.complete || ! biclique.complete)
                    return unknown("certificate search");
                const auto q = std::uint64_t(balloon.value) + 1, s = std::uint64_t(biclique.value) + 1;
                auto rhs = lemma1_rhs(std::uint64_t(p), BigNat(q), BigNat(s), BigNat(std::uint64_t(t)));
                if (BigNat(std::uint64_t(chi.upper)) > rhs)
                    return violation("p=" + std::to_string(p) + " t=" + std::to_string(t) + " q=" + std::to_string(q)
                            + " s=" + std::to_string(s) + " chi=" + std::to_string(chi.upper) + " rhs=" + rhs.to_decimal());
            }
            return ok();
        }

        auto check_randerath(const Graph & g, const Context & ctx) -> Outcome
        {
            const auto & limits = ctx.params.limits;
            auto paw = is_paw_free(g, limits);
            if (paw == Verdict::unknown)
                return unknown("paw");
            if (paw == Verdict::no)
                return outside();
            auto co = chi_and_omega(g, limits);
            if (! co)
                return unknown("chi/omega");

            std::string broken;
            for (auto kind : { PatternKind::e_graph, PatternKind::h_letter, PatternKind::cross }) {
                auto spec = PatternSpec::simple(kind);
                auto free = is_free_of(g, spec, limits);
                if (free == Verdict::unknown)
                    return unknown(spec.name());
                if (free == Verdict::yes && co->chi > randerath_bound(co->omega))
                    broken += (broken.empty() ? "" : ",") + spec.name();
            }
            if (! broken.empty())
                return violation(broken + "-free but chi=" + std::to_string(co->chi) + " > omega+1="
                        + std::to_string(co->omega + 1));
            return ok();
        }

        auto check_contrapositive(const Graph & g, const Context & ctx) -> Outcome
        {
            const auto & limits = ctx.params.limits;
            auto paw = is_paw_free(g, limits);
            if (paw == Verdict::unknown)
                return unknown("paw");
            if (paw == Verdict::no)
                return outside();
            auto co = chi_and_omega(g, limits);
            if (! co)
                return unknown("chi/omega");
            if (co->chi < co->omega + 2)
                return outside();

            std::string missing;
            for (auto kind : { PatternKind::e_graph, PatternKind::h_letter, PatternKind::cross }) {
                auto spec = PatternSpec::simple(kind);
                auto h = realize(spec);
                auto found = induced_contains(g, h, limits);
                if (found.found == Verdict::unknown)
                    return unknown(spec.name());
                if (found.found == Verdict::no || ! is_induced_embedding(g, h, *found.mapping))
                    missing += (missing.empty() ? "" : ",") + spec.name();
            }
            if (! missing.empty())
                return violation("paw-free with chi=" + std::to_string(co->chi) + " omega=" + std::to_string(co->omega)
                        + " but no induced " + missing);
            return ok();
        }

        auto check_degeneracy(const Graph & g, const Context & ctx) -> Outcome
        {
            if (g.empty())
                return outside();
            auto chi = chromatic_number(g, ctx.params.limits);
            if (! chi.complete)
                return unknown("chi");
            auto deg = degeneracy(g);
            auto colouring = degeneracy_colouring(g);
            int used = colouring.empty() ? 0 : *std::max_element(colouring.begin(), colouring.end()) + 1;
            if (! is_proper_colouring(g, colouring))
                return violation("greedy colouring along the degeneracy order is not proper");
            if (used > deg.value + 1)
                return violation("greedy used " + std::to_string(used) + " colours, degeneracy " + std::to_string(deg.value));
            if (chi.upper > deg.value + 1)
                return violation("chi=" + std::to_string(chi.upper) + " > degeneracy+1=" + std::to_string(deg.value + 1));
            return ok();
        }

        // Shared tail of the thm8..thm11 checks: g is already known to be in the
        // class and forbidden-structure free; test the K_d(t) clause and compare.
        auto compare_with_bound(const Graph & g, const Context & ctx, int extra_t_parts) -> Outcome
        {
            const auto & limits = ctx.params.limits;
            auto kdt = contains_kdt(g, ctx.params.d, ctx.params.t, limits).found;
            if (kdt == Verdict::unknown)
                return unknown("K_d(t)");
            if (kdt == Verdict::yes)
                return outside();
            if (extra_t_parts > 0) {
                auto ktt = contains_kdt(g, extra_t_parts, ctx.params.t, limits).found;
                if (ktt == Verdict::unknown)
                    return unknown("K_t(t)");
                if (ktt == Verdict::yes)
                    return outside();
            }
            auto chi = chromatic_number(g, limits);
            if (! chi.complete)
                return unknown("chi");
            if (BigNat(std::uint64_t(chi.upper)) > *ctx.bound)
                return violation("chi=" + std::to_string(chi.upper) + " exceeds bound " + ctx.bound->to_scientific(40));
            return ok();
        }

        auto free_of(const Graph & g, const Graph & h, const SolverLimits & limits) -> Verdict
        {
            return ! induced_contains(g, h, limits).found;
        }

        auto gate(Verdict v, const char * what) -> std::optional<Outcome>
        {
            if (v == Verdict::unknown)
                return unknown(what);
            if (v == Verdict::no)
                return outside();
            return std::nullopt;
        }

        auto check_thm8(const Graph & g, const Context & ctx) -> Outcome
        {
            if (auto o = gate(in_m(g, ctx.params.limits), "paw"))
                return *o;
            if (auto o = gate(free_of(g, *ctx.forbidden, ctx.params.limits), "T1"))
                return *o;
            return compare_with_bound(g, ctx, 0);
        }

        auto check_thm9(const Graph & g, const Context & ctx) -> Outcome
        {
            if (auto o = gate(in_l(g, ctx.params.limits), "paw/sub-dart"))
                return *o;
            if (auto o = gate(free_of(g, *ctx.forbidden, ctx.params.limits), "T2"))
                return *o;
            return compare_with_bound(g, ctx, 0);
        }

        auto check_thm10(const Graph & g, const Context & ctx) -> Outcome
        {
            if (auto o = gate(free_of(g, *ctx.forbidden, ctx.params.limits), "tree"))
                return *o;
            return compare_with_bound(g, ctx, ctx.params.t);
        }

        auto check_thm11(const Graph & g, const Context & ctx) -> Outcome
        {
            if (auto o = gate(in_ft(g, *ctx.forbidden, ctx.params.t, ctx.params.limits), "F_T"))
                return *o;
            if (auto o = gate(free_of(g, *ctx.forbidden, ctx.params.limits), "tree"))
                return *o;
            return compare_with_bound(g, ctx, 0);
        }

        // The pendant-path family: a path v_1..v_{p-1} hanging off `attach`,
        // read as a (p, 1)-balloon whose Y is the whole core.
        auto family_balloon(const Graph & core, int attach, int p, const SolverLimits & limits,
                Graph & host) -> std::optional<BalloonCert>
        {
            host = attach_pendant_path(core, attach, p - 1);
            BalloonCert cert;
            for (int i = 0 ; i < p - 1 ; ++i)
                cert.path.push_back(core.size() + i);
            cert.path.push_back(attach);
            for (int v = 0 ; v < core.size() ; ++v) {
                cert.y.push_back(v);
                if (! host.adjacent(attach, v))
                    cert.z.push_back(v);
            }
            cert.t = 1;
            auto chi = chromatic_number_of(host, cert.z, limits);
            if (! chi.complete)
                return std::nullopt;
            cert.value = chi.upper;
            return cert;
        }

        auto check_extraction(const Graph & core, const Context & ctx, bool second) -> Outcome
        {
            const auto & limits = ctx.params.limits;
            if (core.empty() || ! is_connected(core))
                return outside();

            if (second) {
                auto h = induced_contains(core, realize(PatternSpec::h_tree(3, 2)), limits).found;
                if (auto o = gate(h, "H(3,2)"))
                    return *o;
            }
            else {
                if (auto o = gate(in_m(core, limits), "paw"))
                    return *o;
                auto co = chi_and_omega(core, limits);
                if (! co)
                    return unknown("chi/omega");
                if (co->chi < std::max(co->omega, 2) + 2)
                    return outside();
            }

            const int attach = ctx.params.attach < core.size() ? ctx.params.attach : 0;
            bool any = false;
            for (int p : ctx.params.extraction_p) {
                Graph host;
                auto balloon = family_balloon(core, attach, p, limits, host);
                if (! balloon)
                    return unknown("balloon value");

                // The pendant path can create a paw or sub-dart at the attachment
                // vertex, in which case this member of the family is out of scope.
                auto in_class = second ? in_l(host, limits) : in_m(host, limits);
                if (in_class == Verdict::unknown)
                    return unknown("host class");
                if (in_class == Verdict::no || (second && balloon->value < ctx.params.threshold))
                    continue;
                any = true;

                auto result = second ? extract_t2(host, *balloon, ctx.params.threshold, limits)
                    : extract_t1(host, *balloon, limits);
                if (result.status == ExtractionStatus::unknown)
                    return unknown(result.reason);
                if (result.status != ExtractionStatus::found)
                    return violation("p=" + std::to_string(p) + ": " + to_string(result.status) + ": " + result.reason);
                auto spec = second ? PatternSpec::t2(result.pattern_p) : PatternSpec::t1(result.pattern_p);
                if (! is_induced_embedding(host, realize(spec), result.mapping))
                    return violation("p=" + std::to_string(p) + ": returned " + spec.name() + " witness does not validate");
            }
            return any ? ok() : outside();
        }

        auto make_check(std::string_view name, Context & ctx) -> CheckFn
        {
            const auto & params = ctx.params;
            const BigNat t(std::uint64_t(params.t < 1 ? 1 : params.t));
            auto positive = [] (int v, const char * what) {
                if (v < 1)
                    throw std::invalid_argument(std::string(what) + " must be >= 1");
                return std::uint64_t(v);
            };

            if (name == "lemma1") {
                for (auto [p, t_] : params.pt_grid)
                    if (p < 1 || t_ < 1)
                        throw std::invalid_argument("lemma1 grid needs p, t >= 1");
                return check_lemma1;
            }
            if (name == "randerath")
                return check_randerath;
            if (name == "randerath_contrapositive")
                return check_contrapositive;
            if (name == "degeneracy_greedy")
                return check_degeneracy;
            if (name == "thm8") {
                ctx.bound = thm8_f(positive(params.d, "d"), positive(params.p, "p"), t);
                ctx.forbidden = realize(PatternSpec::t1(params.p));
                return check_thm8;
            }
            if (name == "thm9") {
                ctx.bound = thm9_f(positive(params.d, "d"), positive(params.p, "p"), t, positive(params.s, "s"));
                ctx.forbidden = realize(PatternSpec::t2(params.p));
                ctx.notes.push_back("bound evaluated relative to the supplied f0 (identity)");
                return check_thm9;
            }
            if (name == "thm10" || name == "thm11") {
                ctx.forbidden = realize(parse_pattern(params.tree));
                auto tree_params = embed_params(*ctx.forbidden);
                const auto d = positive(params.d, "d");
                if (name == "thm10") {
                    ctx.bound = thm10_f(d, std::uint64_t(tree_params.height), t);
                    if (! thm10_in_range(d, t))
                        ctx.notes.push_back("t outside 1..d-1: the bound is not claimed for this t");
                    return check_thm10;
                }
                ctx.bound = thm11_f(d, *ctx.forbidden, t);
                return check_thm11;
            }
            if (name == "extraction_t1")
                return [] (const Graph & g, const Context & c) { return check_extraction(g, c, false); };
            if (name == "extraction_t2")
                return [] (const Graph & g, const Context & c) { return check_extraction(g, c, true); };
            throw std::invalid_argument("unknown check '" + std::string(name) + "'");
        }
    }

    auto check_names() -> std::vector<std::string>
    {
        return { "lemma1", "randerath", "randerath_contrapositive", "degeneracy_greedy", "thm8", "thm9", "thm10",
            "thm11", "extraction_t1", "extraction_t2" };
    }

    auto run_check(std::string_view name, const std::vector<Graph> & corpus, const CheckParams & params) -> CheckReport
    {
        auto start = std::chrono::steady_clock::now();

        Context ctx{ params, std::nullopt, std::nullopt, {} };
        if (params.t < 1)
            throw std::invalid_argument("t must be >= 1");
        auto check = make_check(name, ctx);

        std::vector<Outcome> outcomes(corpus.size());
        std::atomic<std::size_t> next{ 0 };
        std::exception_ptr failure;
        std::mutex failure_mutex;

        auto worker = [&] {
            while (true) {
                std::size_t i = next++;
                if (i >= corpus.size())
                    return;
                try {
                    outcomes[i] = check(corpus[i], ctx);
                }
                catch (...) {
                    std::lock_guard lock(failure_mutex);
                    if (! failure)
                        failure = std::current_exception();
                    next = corpus.size();
                    return;
                }
            }
        };

        unsigned jobs = params.jobs ? params.jobs : std::max(1u, std::thread::hardware_concurrency());
        jobs = unsigned(std::min<std::size_t>(jobs, std::max<std::size_t>(1, corpus.size())));
        {
            std::vector<std::jthread> pool;
            for (unsigned j = 1 ; j < jobs ; ++j)
                pool.emplace_back(worker);
            worker();
        }
        if (failure)
            std::rethrow_exception(failure);

        CheckReport report;
        report.check_name = std::string(name);
        report.corpus_size = corpus.size();
        report.notes = ctx.notes;
        for (std::size_t i = 0 ; i < corpus.size() ; ++i)
            switch (outcomes[i].kind) {
                case OutcomeKind::outside: break;
                case OutcomeKind::ok: ++report.checked; break;
                case OutcomeKind::unknown: ++report.skipped_unknown; break;
                case OutcomeKind::violation:
                    ++report.checked;
                    report.violations.push_back({ serialize_graph6(corpus[i]), outcomes[i].details });
                    break;
            }
        std::sort(report.violations.begin(), report.violations.end());

        report.wall_time_ms = long(std::chrono::duration_cast<std::chrono::milliseconds>(
                    std::chrono::steady_clock::now() - start).count());
        return report;
    }

    auto to_json_string(const CheckReport & report, bool include_timing) -> std::string
    {
        nlohmann::ordered_json j;
        j["check_name"] = report.check_name;
        j["corpus_size"] = report.corpus_size;
        j["checked"] = report.checked;
        j["skipped_unknown"] = report.skipped_unknown;
        j["violations"] = nlohmann::json::array();
        for (auto & v : report.violations)
            j["violations"].push_back(nlohmann::ordered_json{ { "graph6", v.graph6 }, { "details", v.details } });
        j["wall_time_ms"] = include_timing ? report.wall_time_ms : 0;
        if (! report.notes.empty())
            j["notes"] = report.notes;
        return j.dump(2);
    }
}
