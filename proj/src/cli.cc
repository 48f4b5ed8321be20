/* vim: set sw=4 sts=4 et : */

#include <polychi/cli.hh>
#include <polychi/bounds.hh>
#include <polychi/checks.hh>
#include <polychi/corpus.hh>
#include <polychi/generators.hh>
#include <polychi/graph_io.hh>
#include <polychi/patterns.hh>
#include <polychi/solvers.hh>
#include <polychi/structures.hh>

#include "text.hh"

#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <limits>
#include <optional>
#include <sstream>
#include <stdexcept>

namespace polychi
{
    namespace
    {
        struct UsageError : std::invalid_argument
        {
            using std::invalid_argument::invalid_argument;
        };

        // A graph argument is a file, then a generator or pattern spec, then
        // inline graph6.
        auto resolve_graph(const std::string & arg) -> Graph
        {
            std::error_code ec;
            if (std::filesystem::is_regular_file(arg, ec))
                return read_graph_file(arg);
            try {
                return graph_from_spec(arg);
            }
            catch (const std::invalid_argument &) {
            }
            try {
                return parse_graph6(arg);
            }
            catch (const ParseError & e) {
                throw UsageError("'" + arg + "' is not a file, a generator or pattern spec, or valid graph6 ("
                        + e.what() + ")");
            }
        }

        auto verdict_text(Verdict v) -> std::string
        {
            return to_string(v);
        }

        auto join(const std::vector<int> & v, const char * sep = " ") -> std::string
        {
            std::string result;
            for (auto x : v) {
                if (! result.empty())
                    result += sep;
                result += std::to_string(x);
            }
            return result;
        }

        struct LimitOptions
        {
            long node_budget = 200'000'000;
            long time_ms = 0;

            auto add_to(CLI::App & app) -> void
            {
                app.add_option("--node-budget", node_budget, "Search nodes per solver call before giving up")
                    ->check(CLI::PositiveNumber);
                app.add_option("--time-ms", time_ms, "Wall-clock budget per solver call in ms (0 = none)")
                    ->check(CLI::NonNegativeNumber);
            }

            auto limits() const -> SolverLimits
            {
                SolverLimits result;
                result.node_budget = node_budget;
                if (time_ms > 0)
                    result.time_budget = std::chrono::milliseconds(time_ms);
                return result;
            }
        };

        auto pt_grid_from(const std::string & text) -> std::vector<std::pair<int, int>>
        {
            std::vector<std::pair<int, int>> grid;
            for (auto item : split_list(text)) {
                auto fields = split_list(item, ':');
                if (fields.size() != 2)
                    throw UsageError("grid entries look like p:t, got '" + std::string(item) + "'");
                grid.emplace_back(parse_int(fields[0]), parse_int(fields[1]));
            }
            return grid;
        }

        struct BoundArgs
        {
            std::string formula;
            std::optional<std::uint64_t> p, q, s, t, d, size;
            std::string tree, field = "f1";
            std::optional<std::size_t> truncate;
            bool json = false;
        };

        auto need(const std::optional<std::uint64_t> & v, const char * name, const std::string & formula) -> std::uint64_t
        {
            if (! v)
                throw UsageError(formula + " needs -" + std::string(name));
            return *v;
        }

        auto evaluate_bound(const BoundArgs & a, nlohmann::ordered_json & params,
                std::vector<std::string> & notes) -> BigNat
        {
            const auto & f = a.formula;
            auto get = [&] (const std::optional<std::uint64_t> & v, const char * name) {
                auto value = need(v, name, f);
                params[name] = value;
                return value;
            };

            // Trees give (spread, height) and size; explicit -s / -p stand in otherwise.
            auto tree_shape = [&] () -> std::pair<std::uint64_t, std::uint64_t> {
                if (! a.tree.empty()) {
                    auto tree = realize(parse_pattern(a.tree));
                    auto rp = embed_params(tree);
                    params["tree"] = a.tree;
                    params["s"] = rp.spread;
                    params["p"] = rp.height;
                    return { std::uint64_t(rp.spread), std::uint64_t(rp.height) };
                }
                return { get(a.s, "s"), get(a.p, "p") };
            };

            if (f == "lemma1") {
                auto p = get(a.p, "p");
                auto q = get(a.q, "q"), s = get(a.s, "s"), t = get(a.t, "t");
                return lemma1_rhs(p, BigNat(q), BigNat(s), BigNat(t));
            }
            if (f == "thm8") {
                auto d = get(a.d, "d"), p = get(a.p, "p"), t = get(a.t, "t");
                return thm8_f(d, p, BigNat(t));
            }
            if (f == "thm9") {
                auto d = get(a.d, "d"), p = get(a.p, "p"), t = get(a.t, "t");
                auto s = a.s.value_or(3);
                params["s"] = s;
                notes.push_back("relative to the supplied f0 (identity)");
                return thm9_f(d, p, BigNat(t), s);
            }
            if (f == "thm10") {
                auto d = get(a.d, "d");
                std::uint64_t p;
                if (! a.tree.empty())
                    p = tree_shape().second;
                else
                    p = get(a.p, "p");
                auto t = get(a.t, "t");
                if (! thm10_in_range(d, BigNat(t)))
                    notes.push_back("t outside 1..d-1");
                return thm10_f(d, p, BigNat(t));
            }
            if (f == "thm11") {
                auto d = get(a.d, "d");
                auto [s, p] = tree_shape();
                auto t = get(a.t, "t");
                return thm11_f(d, s, p, BigNat(t));
            }
            if (f == "beta_h") {
                auto s = get(a.s, "s"), p = get(a.p, "p"), t = get(a.t, "t");
                return beta_h(s, p, BigNat(t));
            }
            if (f == "beta_t") {
                auto [s, p] = tree_shape();
                auto t = get(a.t, "t");
                return beta_t(s, p, BigNat(t));
            }
            if (f == "scott") {
                std::uint64_t size;
                if (! a.tree.empty()) {
                    size = std::uint64_t(realize(parse_pattern(a.tree)).size());
                    params["size"] = size;
                }
                else
                    size = get(a.size, "size");
                auto [s, p] = tree_shape();
                auto t = get(a.t, "t");
                return scott_degeneracy_bound(size, s, p, BigNat(t));
            }
            if (f == "cascade") {
                auto s = get(a.s, "s"), d = get(a.d, "d"), t = get(a.t, "t");
                params["field"] = a.field;
                notes.push_back("relative to the supplied f0 (identity)");
                auto c = cascade(s, d, BigNat(t));
                if (a.field == "w") return c.w;
                if (a.field == "f8") return c.f8;
                if (a.field == "f5") return c.f5;
                if (a.field == "f3") return c.f3;
                if (a.field == "f2") return c.f2;
                if (a.field == "f1") return c.f1;
                throw UsageError("cascade field must be one of w, f8, f5, f3, f2, f1");
            }
            throw UsageError("unknown formula '" + f + "' (lemma1, thm8, thm9, thm10, thm11, beta_h, beta_t, scott, cascade)");
        }
    }

    auto run_cli(int argc, const char * const * argv, std::ostream & out, std::ostream & err) -> int
    {
        CLI::App app{ "Chromatic bound and forbidden-structure toolkit", "polychi" };
        app.require_subcommand(1);
        app.set_help_all_flag("--help-all", "Show help for every subcommand");

        int exit_code = 0;
        LimitOptions limit_options;

        // gen
        std::string gen_spec, gen_format = "graph6";
        auto gen = app.add_subcommand("gen", "Print a generated or pattern graph");
        gen->add_option("spec", gen_spec, "e.g. grotzsch, mycielski:cycle:5, random:10,0.3,1, t1:4")->required();
        gen->add_option("--format", gen_format, "graph6 or edges")->check(CLI::IsMember({ "graph6", "edges" }));
        gen->callback([&] {
            auto g = graph_from_spec(gen_spec);
            out << (gen_format == "graph6" ? serialize_graph6(g) + "\n" : serialize_edge_list(g));
        });

        // analyze
        std::string graph_arg;
        int max_d = 2;
        auto analyze = app.add_subcommand("analyze", "Print chi, omega, degeneracy and tau_d");
        analyze->add_option("graph", graph_arg, "File, generator spec or graph6")->required();
        analyze->add_option("--max-d", max_d, "Report tau_d for 2 <= d <= this")->check(CLI::Range(1, 16));
        limit_options.add_to(*analyze);
        analyze->callback([&] {
            auto g = resolve_graph(graph_arg);
            auto limits = limit_options.limits();
            auto chi = chromatic_number(g, limits).value();
            auto omega = clique_number(g, limits).value();
            auto show = [] (std::optional<int> v) { return v ? std::to_string(*v) : std::string("unknown"); };
            out << "chi=" << show(chi) << " omega=" << show(omega)
                << " degeneracy=" << (g.empty() ? 0 : degeneracy(g).value);
            for (int d = 2 ; d <= max_d ; ++d) {
                auto r = tau(g, d, limits);
                out << " tau_" << d << "=" << (r.complete ? std::to_string(r.t) : "unknown");
            }
            out << "\n";
        });

        // detect
        std::string pattern_arg;
        auto detect = app.add_subcommand("detect", "Look for an induced copy of a pattern");
        detect->add_option("graph", graph_arg, "File, generator spec or graph6")->required();
        detect->add_option("--pattern", pattern_arg, "e.g. paw, e, sub_dart, h:3,2, t1:4, custom:@file")->required();
        limit_options.add_to(*detect);
        detect->callback([&] {
            auto g = resolve_graph(graph_arg);
            auto h = realize(parse_pattern(pattern_arg));
            auto r = induced_contains(g, h, limit_options.limits());
            if (r.found == Verdict::yes)
                out << "found: " << join(*r.mapping) << "\n";
            else if (r.found == Verdict::no)
                out << "not found\n";
            else
                out << "unknown\n";
        });

        // find-balloon / find-biclique
        int cert_p = 1, cert_t = 1;
        auto print_search = [&] (const auto & r) {
            out << "value=" << r.value << (r.complete ? "" : " (search incomplete)") << "\n";
            if (r.cert)
                out << to_json_string(*r.cert) << "\n";
        };
        auto find_balloon = app.add_subcommand("find-balloon", "Maximum (p,t)-balloon value with a witness");
        find_balloon->add_option("graph", graph_arg, "File, generator spec or graph6")->required();
        find_balloon->add_option("-p", cert_p, "Path length")->check(CLI::PositiveNumber);
        find_balloon->add_option("-t", cert_t, "Connectivity")->check(CLI::PositiveNumber);
        limit_options.add_to(*find_balloon);
        find_balloon->callback([&] {
            print_search(max_balloon_value(resolve_graph(graph_arg), cert_p, cert_t, limit_options.limits()));
        });

        auto find_biclique = app.add_subcommand("find-biclique", "Maximum t-biclique value with a witness");
        find_biclique->add_option("graph", graph_arg, "File, generator spec or graph6")->required();
        find_biclique->add_option("-t", cert_t, "Size of X")->check(CLI::PositiveNumber);
        limit_options.add_to(*find_biclique);
        find_biclique->callback([&] {
            print_search(max_biclique_value(resolve_graph(graph_arg), cert_t, limit_options.limits()));
        });

        // classify
        std::string tree_arg = "path:4";
        std::optional<std::uint64_t> b_override;
        auto classify = app.add_subcommand("classify", "Membership in the paw-free, paw/sub-dart-free, F1, F2 and F_T classes");
        classify->add_option("graph", graph_arg, "File, generator spec or graph6")->required();
        classify->add_option("-t,--t", cert_t, "Parameter t")->check(CLI::PositiveNumber);
        classify->add_option("--tree", tree_arg, "Forbidden tree as a pattern spec");
        classify->add_option("--b", b_override, "Override b for F2 (default beta_T(t))");
        limit_options.add_to(*classify);
        classify->callback([&] {
            auto g = resolve_graph(graph_arg);
            auto tree = realize(parse_pattern(tree_arg));
            if (! is_tree(tree))
                throw UsageError("--tree must name a tree");
            auto limits = limit_options.limits();
            std::uint64_t b;
            if (b_override)
                b = *b_override;
            else {
                auto beta = beta_t(tree, BigNat(std::uint64_t(cert_t)));
                b = beta.fits_u64() ? beta.to_u64() : std::numeric_limits<std::uint64_t>::max();
            }
            out << "M=" << verdict_text(in_m(g, limits))
                << " L=" << verdict_text(in_l(g, limits))
                << " F1=" << verdict_text(in_f1(g, cert_t, limits))
                << " F2=" << verdict_text(in_f2(g, cert_t, b, limits))
                << " FT=" << verdict_text(in_ft(g, tree, cert_t, limits)) << "\n";
        });

        // bounds
        BoundArgs bound_args;
        auto bounds = app.add_subcommand("bounds", "Evaluate a bound formula exactly");
        bounds->add_option("formula", bound_args.formula,
                "lemma1, thm8, thm9, thm10, thm11, beta_h, beta_t, scott, cascade")->required();
        bounds->add_option("-p", bound_args.p)->check(CLI::PositiveNumber);
        bounds->add_option("-q", bound_args.q)->check(CLI::PositiveNumber);
        bounds->add_option("-s", bound_args.s)->check(CLI::PositiveNumber);
        bounds->add_option("-t", bound_args.t)->check(CLI::PositiveNumber);
        bounds->add_option("-d", bound_args.d)->check(CLI::PositiveNumber);
        bounds->add_option("--size", bound_args.size, "|H| for scott")->check(CLI::PositiveNumber);
        bounds->add_option("--tree", bound_args.tree, "Tree pattern supplying s, p (and |H|)");
        bounds->add_option("--field", bound_args.field, "Cascade field: w, f8, f5, f3, f2, f1");
        bounds->add_option("--truncate", bound_args.truncate, "Print leading digits in scientific form");
        bounds->add_flag("--json", bound_args.json, "Emit {formula, params, value_decimal, digits}");
        bounds->callback([&] {
            nlohmann::ordered_json params = nlohmann::ordered_json::object();
            std::vector<std::string> notes;
            auto value = evaluate_bound(bound_args, params, notes);
            if (bound_args.json) {
                nlohmann::ordered_json j;
                j["formula"] = bound_args.formula;
                j["params"] = params;
                j["value_decimal"] = value.to_decimal();
                j["digits"] = value.digit_count();
                if (! notes.empty())
                    j["notes"] = notes;
                out << j.dump() << "\n";
            }
            else if (bound_args.truncate)
                out << value.to_scientific(*bound_args.truncate) << " (digits=" << value.digit_count() << ")\n";
            else
                out << value.to_decimal() << "\n";
        });

        // verify
        std::string check_name, corpus_arg = "exhaustive:6", out_path, grid_arg, extraction_arg;
        CheckParams check_params;
        bool no_timing = false;
        auto verify = app.add_subcommand("verify", "Run a named check over a corpus and write a JSON report");
        verify->add_option("check", check_name, "Check name")->required()->check(CLI::IsMember(check_names()));
        verify->add_option("--corpus", corpus_arg, "exhaustive:N, labelled:N, random:n,p,count,seed, file:PATH, named:a;b");
        verify->add_option("--out", out_path, "Report path (default stdout)");
        verify->add_option("--grid", grid_arg, "lemma1 (p,t) grid as p:t,p:t,...");
        verify->add_option("-d", check_params.d)->check(CLI::PositiveNumber);
        verify->add_option("-p", check_params.p)->check(CLI::PositiveNumber);
        verify->add_option("-t", check_params.t)->check(CLI::PositiveNumber);
        verify->add_option("-s", check_params.s)->check(CLI::PositiveNumber);
        verify->add_option("--tree", check_params.tree);
        verify->add_option("--extraction-p", extraction_arg, "Pendant path lengths, e.g. 4,5,6");
        verify->add_option("--attach", check_params.attach)->check(CLI::NonNegativeNumber);
        verify->add_option("--threshold", check_params.threshold);
        verify->add_option("--jobs", check_params.jobs, "Worker threads (0 = hardware concurrency)");
        verify->add_flag("--no-timing", no_timing, "Write wall_time_ms as 0 for byte-identical reruns");
        limit_options.add_to(*verify);
        verify->callback([&] {
            if (! grid_arg.empty())
                check_params.pt_grid = pt_grid_from(grid_arg);
            if (! extraction_arg.empty())
                check_params.extraction_p = parse_int_list(extraction_arg);
            check_params.limits = limit_options.limits();
            auto corpus = load_corpus(parse_corpus_spec(corpus_arg));
            auto report = run_check(check_name, corpus, check_params);
            auto json = to_json_string(report, ! no_timing) + "\n";
            if (out_path.empty())
                out << json;
            else {
                std::ofstream file(out_path);
                if (! (file << json))
                    throw std::runtime_error("cannot write " + out_path);
            }
            if (! report.violations.empty())
                exit_code = 1;
        });

        try {
            app.parse(argc, argv);
        }
        catch (const CLI::CallForHelp & e) {
            app.exit(e, out, err);
            return 0;
        }
        catch (const CLI::CallForAllHelp & e) {
            app.exit(e, out, err);
            return 0;
        }
        catch (const CLI::ParseError & e) {
            app.exit(e, out, err);
            return 2;
        }
        catch (const std::exception & e) {
            err << "polychi: " << e.what() << "\n";
            return 2;
        }
        return exit_code;
    }

    auto run_cli(const std::vector<std::string> & args, std::ostream & out, std::ostream & err) -> int
    {
        std::vector<const char *> argv{ "polychi" };
        for (auto & a : args)
            argv.push_back(a.c_str());
        return run_cli(int(argv.size()), argv.data(), out, err);
    }
}
