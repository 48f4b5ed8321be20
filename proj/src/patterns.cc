/* vim: set sw=4 sts=4 et : */

#include <polychi/patterns.hh>
#include <polychi/bounds.hh>
#include <polychi/graph_io.hh>
#include <polychi/generators.hh>
#include <polychi/solvers.hh>

#include "text.hh"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

namespace polychi
{
    auto PatternSpec::simple(PatternKind kind) -> PatternSpec
    {
        switch (kind) {
            case PatternKind::paw:
            case PatternKind::e_graph:
            case PatternKind::sub_dart:
            case PatternKind::dart:
            case PatternKind::cross:
            case PatternKind::h_letter:
                return PatternSpec{ kind, {}, std::nullopt };
            default:
                throw std::invalid_argument("pattern kind takes parameters");
        }
    }

    auto PatternSpec::path(int k) -> PatternSpec
    {
        if (k < 1)
            throw std::invalid_argument("path pattern needs k >= 1");
        return PatternSpec{ PatternKind::path, { k }, std::nullopt };
    }

    auto PatternSpec::broom(int handle, int leaves) -> PatternSpec
    {
        if (handle < 1 || leaves < 0)
            throw std::invalid_argument("broom needs handle >= 1 and leaves >= 0");
        return PatternSpec{ PatternKind::broom, { handle, leaves }, std::nullopt };
    }

    auto PatternSpec::h_tree(int s, int p) -> PatternSpec
    {
        if (s < 1 || p < 0)
            throw std::invalid_argument("H(s,p) needs s >= 1 and p >= 0");
        return PatternSpec{ PatternKind::h_tree, { s, p }, std::nullopt };
    }

    auto PatternSpec::t1(int p) -> PatternSpec
    {
        if (p < 4)
            throw std::invalid_argument("T1(p) is defined for p >= 4");
        return PatternSpec{ PatternKind::t1, { p }, std::nullopt };
    }

    auto PatternSpec::t2(int p) -> PatternSpec
    {
        if (p < 4)
            throw std::invalid_argument("T2(p) is defined for p >= 4");
        return PatternSpec{ PatternKind::t2, { p }, std::nullopt };
    }

    auto PatternSpec::custom(Graph g) -> PatternSpec
    {
        return PatternSpec{ PatternKind::custom, {}, std::move(g) };
    }

    auto PatternSpec::name() const -> std::string
    {
        auto join = [&] (const std::string & prefix) {
            std::string out = prefix + ":";
            for (std::size_t i = 0 ; i < params.size() ; ++i)
                out += (i ? "," : "") + std::to_string(params[i]);
            return out;
        };

        switch (kind) {
            case PatternKind::paw: return "paw";
            case PatternKind::e_graph: return "e";
            case PatternKind::sub_dart: return "sub_dart";
            case PatternKind::dart: return "dart";
            case PatternKind::cross: return "cross";
            case PatternKind::h_letter: return "h_letter";
            case PatternKind::path: return join("path");
            case PatternKind::broom: return join("broom");
            case PatternKind::h_tree: return join("h");
            case PatternKind::t1: return join("t1");
            case PatternKind::t2: return join("t2");
            case PatternKind::custom: return "custom";
        }
        return "custom";
    }

    namespace
    {
        auto expect_params(std::string_view kind, std::string_view args, std::size_t count) -> std::vector<int>
        {
            auto v = parse_int_list(args);
            if (v.size() != count)
                throw std::invalid_argument("pattern '" + std::string(kind) + "' takes " + std::to_string(count) + " parameter(s)");
            return v;
        }

        auto parse_inline_edges(std::string_view args) -> Graph
        {
            std::vector<Edge> edges;
            int n = 0;
            for (auto field : split_list(args)) {
                auto dash = field.find('-');
                if (dash == std::string_view::npos)
                    throw std::invalid_argument("custom edge '" + std::string(field) + "' is not u-v");
                int u = parse_int(field.substr(0, dash)), v = parse_int(field.substr(dash + 1));
                edges.emplace_back(u, v);
                n = std::max({ n, u + 1, v + 1 });
            }
            return Graph(n, edges);
        }
    }

    auto parse_pattern(std::string_view text) -> PatternSpec
    {
        auto [kind, args] = split_kind(text);

        static const std::map<std::string_view, PatternKind, std::less<>> simple_names = {
            { "paw", PatternKind::paw },
            { "e", PatternKind::e_graph },
            { "e_graph", PatternKind::e_graph },
            { "sub_dart", PatternKind::sub_dart },
            { "subdart", PatternKind::sub_dart },
            { "dart", PatternKind::dart },
            { "cross", PatternKind::cross },
            { "h_letter", PatternKind::h_letter },
        };
        if (auto it = simple_names.find(kind) ; it != simple_names.end()) {
            if (! args.empty())
                throw std::invalid_argument("pattern '" + std::string(kind) + "' takes no parameters");
            return PatternSpec::simple(it->second);
        }

        if (kind == "path")
            return PatternSpec::path(expect_params(kind, args, 1)[0]);
        if (kind == "broom") {
            auto v = expect_params(kind, args, 2);
            return PatternSpec::broom(v[0], v[1]);
        }
        if (kind == "h") {
            auto v = expect_params(kind, args, 2);
            return PatternSpec::h_tree(v[0], v[1]);
        }
        if (kind == "t1")
            return PatternSpec::t1(expect_params(kind, args, 1)[0]);
        if (kind == "t2")
            return PatternSpec::t2(expect_params(kind, args, 1)[0]);
        if (kind == "custom") {
            if (args.starts_with("@"))
                return PatternSpec::custom(read_graph_file(std::string(args.substr(1))));
            return PatternSpec::custom(parse_inline_edges(args));
        }
        throw std::invalid_argument("unknown pattern '" + std::string(text) + "'");
    }

    auto realize(const PatternSpec & spec) -> Graph
    {
        auto from = [] (int n, std::vector<Edge> edges) { return Graph(n, edges); };

        switch (spec.kind) {
            case PatternKind::paw:
                return from(4, { { 0, 1 }, { 1, 2 }, { 0, 2 }, { 0, 3 } });
            case PatternKind::e_graph:
                return from(6, { { 0, 1 }, { 1, 2 }, { 0, 3 }, { 1, 4 }, { 2, 5 } });
            case PatternKind::sub_dart:
                return from(6, { { 0, 1 }, { 1, 4 }, { 4, 3 }, { 3, 0 }, { 5, 1 }, { 5, 3 }, { 1, 2 } });
            case PatternKind::dart:
                return from(5, { { 0, 1 }, { 0, 2 }, { 0, 3 }, { 1, 2 }, { 1, 3 }, { 0, 4 } });
            case PatternKind::cross:
                return from(6, { { 0, 1 }, { 0, 2 }, { 0, 3 }, { 0, 4 }, { 4, 5 } });
            case PatternKind::h_letter:
                return from(6, { { 0, 1 }, { 0, 2 }, { 0, 3 }, { 1, 4 }, { 1, 5 } });

            case PatternKind::path:
                return path_graph(spec.params.at(0));

            case PatternKind::broom: {
                int handle = spec.params.at(0), leaves = spec.params.at(1);
                GraphBuilder b(handle + leaves);
                for (int i = 0 ; i + 1 < handle ; ++i)
                    b.add_edge(i, i + 1);
                for (int i = 0 ; i < leaves ; ++i)
                    b.add_edge(handle - 1, handle + i);
                return b.build();
            }

            case PatternKind::h_tree: {
                int s = spec.params.at(0), p = spec.params.at(1);
                std::vector<int> level{ 0 };
                int next = 1;
                std::vector<Edge> edges;
                for (int depth = 0 ; depth < p ; ++depth) {
                    std::vector<int> children;
                    for (int parent : level)
                        for (int i = 0 ; i < s ; ++i) {
                            edges.emplace_back(parent, next);
                            children.push_back(next++);
                        }
                    level = std::move(children);
                }
                return Graph(next, edges);
            }

            case PatternKind::t1:
            case PatternKind::t2: {
                int p = spec.params.at(0);
                bool second = spec.kind == PatternKind::t2;
                GraphBuilder b(p + (second ? 4 : 3));
                for (int i = 0 ; i + 1 < p ; ++i)
                    b.add_edge(i, i + 1);
                int end = p - 1, x = p, z = p + 1, y = p + 2;
                b.add_edge(end, x).add_edge(x, z).add_edge(end, y);
                if (second)
                    b.add_edge(y, p + 3);
                return b.build();
            }

            case PatternKind::custom:
                if (! spec.graph)
                    throw std::invalid_argument("custom pattern without a graph");
                return *spec.graph;
        }
        throw std::invalid_argument("unknown pattern kind");
    }

    auto catalog_patterns() -> std::vector<PatternSpec>
    {
        return {
            PatternSpec::simple(PatternKind::paw),
            PatternSpec::simple(PatternKind::e_graph),
            PatternSpec::simple(PatternKind::sub_dart),
            PatternSpec::simple(PatternKind::dart),
            PatternSpec::simple(PatternKind::cross),
            PatternSpec::simple(PatternKind::h_letter),
            PatternSpec::path(4),
            PatternSpec::path(5),
            PatternSpec::broom(3, 2),
            PatternSpec::h_tree(3, 1),
            PatternSpec::h_tree(2, 2),
            PatternSpec::t1(4),
            PatternSpec::t2(4),
        };
    }

    namespace
    {
        struct InducedSearch
        {
            const Graph & g;
            const Graph & h;
            SearchBudget & budget;
            std::vector<int> order;
            std::vector<int> anchor;       // position of an earlier neighbour, or -1
            std::vector<int> h_degree, g_degree;
            std::vector<std::vector<int>> g_nbrs;
            std::vector<int> image;
            std::vector<char> used;
            bool aborted = false;

            auto search(std::size_t pos) -> bool
            {
                if (pos == order.size())
                    return true;
                if (! budget.tick()) {
                    aborted = true;
                    return false;
                }

                int u = order[pos];
                auto try_candidate = [&] (int c) -> bool {
                    if (used[c] || g_degree[c] < h_degree[u])
                        return false;
                    for (std::size_t q = 0 ; q < pos ; ++q)
                        if (h.adjacent(u, order[q]) != g.adjacent(c, image[order[q]]))
                            return false;
                    image[u] = c;
                    used[c] = 1;
                    if (search(pos + 1))
                        return true;
                    used[c] = 0;
                    image[u] = -1;
                    return false;
                };

                if (anchor[pos] >= 0) {
                    for (int c : g_nbrs[image[order[anchor[pos]]]])
                        if (try_candidate(c) || aborted)
                            return ! aborted;
                }
                else
                    for (int c = 0 ; c < g.size() ; ++c)
                        if (try_candidate(c) || aborted)
                            return ! aborted;
                return false;
            }
        };

        // Natural order when it already grows components one neighbour at a
        // time, otherwise a greedy connectivity-first order.
        auto search_order(const Graph & h) -> std::vector<int>
        {
            const int k = h.size();
            std::vector<int> component(k, -1);
            auto comps = connected_components(h);
            for (std::size_t c = 0 ; c < comps.size() ; ++c)
                for (int v : comps[c])
                    component[v] = int(c);

            bool natural = true;
            for (int v = 0 ; v < k && natural ; ++v) {
                bool has_earlier = false;
                for (int w = 0 ; w < v ; ++w)
                    if (h.adjacent(v, w))
                        has_earlier = true;
                bool first_of_component = comps[component[v]].front() == v;
                natural = has_earlier || first_of_component;
            }
            std::vector<int> order;
            if (natural) {
                for (int v = 0 ; v < k ; ++v)
                    order.push_back(v);
                return order;
            }

            std::vector<char> placed(k, 0);
            std::vector<int> links(k, 0);
            for (int step = 0 ; step < k ; ++step) {
                int pick = -1;
                for (int v = 0 ; v < k ; ++v) {
                    if (placed[v])
                        continue;
                    if (pick == -1 || links[v] > links[pick] || (links[v] == links[pick] && h.degree(v) > h.degree(pick)))
                        pick = v;
                }
                placed[pick] = 1;
                order.push_back(pick);
                for (int w : h.neighbours(pick))
                    ++links[w];
            }
            return order;
        }
    }

    auto induced_contains(const Graph & g, const Graph & h, const SolverLimits & limits) -> InducedResult
    {
        InducedResult result;
        if (h.size() > g.size()) {
            result.found = Verdict::no;
            return result;
        }

        SearchBudget budget(limits);
        InducedSearch search{ g, h, budget, search_order(h), {}, {}, {}, {}, std::vector<int>(h.size(), -1),
            std::vector<char>(g.size(), 0) };

        std::vector<int> position(h.size());
        for (std::size_t i = 0 ; i < search.order.size() ; ++i)
            position[search.order[i]] = int(i);
        for (std::size_t i = 0 ; i < search.order.size() ; ++i) {
            int a = -1;
            for (int w : h.neighbours(search.order[i]))
                if (position[w] < int(i) && (a == -1 || position[w] < a))
                    a = position[w];
            search.anchor.push_back(a);
        }
        for (int v = 0 ; v < h.size() ; ++v)
            search.h_degree.push_back(h.degree(v));
        for (int v = 0 ; v < g.size() ; ++v) {
            search.g_degree.push_back(g.degree(v));
            search.g_nbrs.push_back(g.neighbours(v));
        }

        if (search.search(0)) {
            result.found = Verdict::yes;
            result.mapping = search.image;
        }
        else
            result.found = search.aborted ? Verdict::unknown : Verdict::no;
        return result;
    }

    auto is_induced_embedding(const Graph & g, const Graph & h, const std::vector<int> & mapping) -> bool
    {
        if (int(mapping.size()) != h.size())
            return false;
        std::vector<char> used(g.size(), 0);
        for (int v : mapping) {
            if (v < 0 || v >= g.size() || used[v])
                return false;
            used[v] = 1;
        }
        for (int u = 0 ; u < h.size() ; ++u)
            for (int v = u + 1 ; v < h.size() ; ++v)
                if (h.adjacent(u, v) != g.adjacent(mapping[u], mapping[v]))
                    return false;
        return true;
    }

    auto embed_params(const Graph & t) -> RootedTreeParams
    {
        if (! is_tree(t))
            throw std::invalid_argument("embed_params needs a tree");

        RootedTreeParams result;
        for (int v = 0 ; v < t.size() ; ++v)
            result.spread = std::max(result.spread, t.degree(v));

        int best = -1;
        for (int v = 0 ; v < t.size() ; ++v) {
            if (t.degree(v) != result.spread)
                continue;
            auto dist = distances_from(t, v);
            int height = *std::max_element(dist.begin(), dist.end());
            if (best == -1 || height < best) {
                best = height;
                result.root = v;
            }
        }
        result.height = best;

        std::uint64_t size = 0, power = 1;
        for (int i = 0 ; i <= result.height ; ++i) {
            if (size > UINT64_MAX - power)
                throw std::overflow_error("H(s,p) order does not fit in 64 bits");
            size += power;
            if (i < result.height) {
                if (result.spread != 0 && power > UINT64_MAX / std::uint64_t(result.spread))
                    throw std::overflow_error("H(s,p) order does not fit in 64 bits");
                power *= std::uint64_t(result.spread);
            }
        }
        result.size = size;
        return result;
    }

    auto is_free_of(const Graph & g, const PatternSpec & pattern, const SolverLimits & limits) -> Verdict
    {
        return ! induced_contains(g, realize(pattern), limits).found;
    }

    auto is_paw_free(const Graph & g, const SolverLimits & limits) -> Verdict
    {
        return is_free_of(g, PatternSpec::simple(PatternKind::paw), limits);
    }

    auto is_subdart_free(const Graph & g, const SolverLimits & limits) -> Verdict
    {
        return is_free_of(g, PatternSpec::simple(PatternKind::sub_dart), limits);
    }

    auto is_e_free(const Graph & g, const SolverLimits & limits) -> Verdict
    {
        return is_free_of(g, PatternSpec::simple(PatternKind::e_graph), limits);
    }

    auto is_h_letter_free(const Graph & g, const SolverLimits & limits) -> Verdict
    {
        return is_free_of(g, PatternSpec::simple(PatternKind::h_letter), limits);
    }

    auto is_cross_free(const Graph & g, const SolverLimits & limits) -> Verdict
    {
        return is_free_of(g, PatternSpec::simple(PatternKind::cross), limits);
    }

    auto in_m(const Graph & g, const SolverLimits & limits) -> Verdict
    {
        return is_paw_free(g, limits);
    }

    auto in_l(const Graph & g, const SolverLimits & limits) -> Verdict
    {
        auto paw = is_paw_free(g, limits);
        if (paw == Verdict::no)
            return Verdict::no;
        auto dart = is_subdart_free(g, limits);
        if (dart == Verdict::no)
            return Verdict::no;
        return (paw == Verdict::yes && dart == Verdict::yes) ? Verdict::yes : Verdict::unknown;
    }

    auto in_f1(const Graph & g, int t, const SolverLimits & limits) -> Verdict
    {
        if (t < 1)
            throw std::invalid_argument("in_f1 needs t >= 1");
        auto found = contains_kdt(g, 2, t, limits).found;
        return ! found;
    }

    namespace
    {
        auto subsets_of_size(const std::vector<int> & pool, std::size_t k, std::vector<int> & current, std::size_t start,
                const std::function<bool (const std::vector<int> &)> & visit) -> bool
        {
            if (current.size() == k)
                return visit(current);
            for (std::size_t i = start ; i + (k - current.size()) <= pool.size() ; ++i) {
                current.push_back(pool[i]);
                bool keep_going = subsets_of_size(pool, k, current, i + 1, visit);
                current.pop_back();
                if (! keep_going)
                    return false;
            }
            return true;
        }
    }

    auto in_f2(const Graph & g, int t, std::uint64_t b, const SolverLimits & limits) -> Verdict
    {
        if (t < 1 || b < 1)
            throw std::invalid_argument("in_f2 needs t, b >= 1");

        auto at_least_t = contains_kdt(g, 2, t, limits).found;
        if (at_least_t != Verdict::yes)
            return at_least_t == Verdict::no ? Verdict::no : Verdict::unknown;
        if (b > std::uint64_t(g.size()) / 2)
            return Verdict::yes;

        SearchBudget budget(limits);
        std::map<std::vector<int>, Verdict> memo;
        bool unknown = false;
        auto side_has_k2t = [&] (const std::vector<int> & side) -> Verdict {
            auto it = memo.find(side);
            if (it != memo.end())
                return it->second;
            auto v = contains_kdt(induced_subgraph(g, side), 2, t, limits).found;
            memo.emplace(side, v);
            return v;
        };

        std::vector<int> all(g.size());
        for (int v = 0 ; v < g.size() ; ++v)
            all[v] = v;

        bool violated = false;
        std::vector<int> x_current;
        subsets_of_size(all, b, x_current, 0, [&] (const std::vector<int> & x) {
            std::vector<int> common;
            for (int v = x.front() + 1 ; v < g.size() ; ++v)
                if (std::all_of(x.begin(), x.end(), [&] (int u) { return g.adjacent(u, v); }))
                    common.push_back(v);
            std::vector<int> y_current;
            return subsets_of_size(common, b, y_current, 0, [&] (const std::vector<int> & y) {
                if (! budget.tick()) {
                    unknown = true;
                    return false;
                }
                auto in_x = side_has_k2t(x);
                if (in_x == Verdict::yes)
                    return true;
                auto in_y = side_has_k2t(y);
                if (in_y == Verdict::yes)
                    return true;
                if (in_x == Verdict::unknown || in_y == Verdict::unknown) {
                    unknown = true;
                    return true;
                }
                violated = true;
                return false;
            });
        });

        if (violated)
            return Verdict::no;
        return unknown ? Verdict::unknown : Verdict::yes;
    }

    auto in_ft(const Graph & g, const Graph & tree, int t, const SolverLimits & limits) -> Verdict
    {
        auto f1 = in_f1(g, t, limits);
        if (f1 == Verdict::yes)
            return Verdict::yes;

        auto b = beta_t(tree, BigNat(std::uint64_t(t)));
        if (b > BigNat(std::uint64_t(g.size()) / 2)) {
            // no K_2(b) fits in g, so F2 reduces to tau_2 >= t
            return f1 == Verdict::no ? Verdict::yes : Verdict::unknown;
        }
        auto f2 = in_f2(g, t, b.to_u64(), limits);
        if (f2 == Verdict::yes)
            return Verdict::yes;
        return (f1 == Verdict::unknown || f2 == Verdict::unknown) ? Verdict::unknown : Verdict::no;
    }
}
