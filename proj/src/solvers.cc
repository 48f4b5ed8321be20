/* vim: set sw=4 sts=4 et : */

#include <polychi/solvers.hh>

#include <algorithm>
#include <stdexcept>

namespace polychi
{
    namespace
    {
        struct CliqueSearch
        {
            const Graph & g;
            SearchBudget & budget;
            std::vector<int> best;
            std::vector<int> current;
            bool aborted = false;

            // Greedy colour classes over cand; order lists the vertices class
            // by class, bound[i] is the class number of order[i].
            auto colour_sort(const std::vector<int> & cand, std::vector<int> & order, std::vector<int> & bound) -> void
            {
                std::vector<int> uncoloured = cand;
                int colour = 0;
                while (! uncoloured.empty()) {
                    ++colour;
                    std::vector<int> q = uncoloured, left;
                    while (! q.empty()) {
                        int v = q.front();
                        order.push_back(v);
                        bound.push_back(colour);
                        std::erase(uncoloured, v);
                        std::vector<int> next;
                        for (std::size_t i = 1 ; i < q.size() ; ++i)
                            if (! g.adjacent(v, q[i]))
                                next.push_back(q[i]);
                        q = std::move(next);
                    }
                }
            }

            auto expand(const std::vector<int> & cand) -> void
            {
                if (! budget.tick()) {
                    aborted = true;
                    return;
                }

                std::vector<int> order, bound;
                colour_sort(cand, order, bound);

                for (int i = int(order.size()) - 1 ; i >= 0 ; --i) {
                    if (current.size() + bound[i] <= best.size())
                        return;
                    int v = order[i];
                    current.push_back(v);
                    std::vector<int> next;
                    for (int j = 0 ; j < i ; ++j)
                        if (g.adjacent(v, order[j]))
                            next.push_back(order[j]);
                    if (next.empty()) {
                        if (current.size() > best.size())
                            best = current;
                    }
                    else
                        expand(next);
                    current.pop_back();
                    if (aborted)
                        return;
                }
            }
        };

        struct ColouringSearch
        {
            const Graph & g;
            SearchBudget & budget;
            int n;
            std::vector<std::vector<int>> nbrs;
            std::vector<int> colour;
            std::vector<std::vector<int>> count;
            std::vector<int> saturation;
            int lower = 0;
            int best = 0;
            std::vector<int> best_colouring;
            bool aborted = false;

            ColouringSearch(const Graph & graph, SearchBudget & b) :
                g(graph), budget(b), n(graph.size()), colour(n, -1),
                count(n, std::vector<int>(n + 1, 0)), saturation(n, 0)
            {
                for (int v = 0 ; v < n ; ++v)
                    nbrs.push_back(g.neighbours(v));
            }

            auto assign(int v, int c) -> void
            {
                colour[v] = c;
                for (int w : nbrs[v])
                    if (count[w][c]++ == 0)
                        ++saturation[w];
            }

            auto unassign(int v) -> void
            {
                int c = colour[v];
                for (int w : nbrs[v])
                    if (--count[w][c] == 0)
                        --saturation[w];
                colour[v] = -1;
            }

            auto pick() const -> int
            {
                int pick = -1;
                for (int v = 0 ; v < n ; ++v) {
                    if (colour[v] != -1)
                        continue;
                    if (pick == -1 || saturation[v] > saturation[pick]
                            || (saturation[v] == saturation[pick] && nbrs[v].size() > nbrs[pick].size()))
                        pick = v;
                }
                return pick;
            }

            auto greedy() -> void
            {
                int used = 0;
                for (int step = 0 ; step < n ; ++step) {
                    int v = pick();
                    int c = 0;
                    while (count[v][c] != 0)
                        ++c;
                    assign(v, c);
                    used = std::max(used, c + 1);
                }
                best = used;
                best_colouring = colour;
                for (int v = 0 ; v < n ; ++v)
                    unassign(v);
            }

            auto search(int used, int coloured) -> void
            {
                if (used >= best)
                    return;
                if (! budget.tick()) {
                    aborted = true;
                    return;
                }
                if (coloured == n) {
                    best = used;
                    best_colouring = colour;
                    return;
                }

                int v = pick();
                for (int c = 0 ; c < used ; ++c) {
                    if (count[v][c] != 0)
                        continue;
                    assign(v, c);
                    search(used, coloured + 1);
                    unassign(v);
                    if (aborted || best <= lower)
                        return;
                }
                if (used + 1 < best) {
                    assign(v, used);
                    search(used + 1, coloured + 1);
                    unassign(v);
                }
            }
        };

        struct KdtSearch
        {
            const Graph & g;
            int d, t;
            SearchBudget & budget;
            std::vector<VertexSet> parts;
            bool aborted = false;

            // Fills part j with t members of pool (ascending), keeping future
            // as the pool vertices adjacent to every member chosen so far.
            auto build(int j, const std::vector<int> & pool, int prev_min, std::vector<int> & members,
                    std::size_t start, const std::vector<int> & future) -> bool
            {
                if (! budget.tick()) {
                    aborted = true;
                    return false;
                }

                const std::size_t needed_later = std::size_t(d - j - 1) * t;
                if (int(members.size()) == t) {
                    parts.push_back(members);
                    if (j + 1 == d)
                        return true;
                    std::vector<int> next_members;
                    if (future.size() >= needed_later && build(j + 1, future, members.front(), next_members, 0, future))
                        return true;
                    parts.pop_back();
                    return false;
                }

                for (std::size_t idx = start ; idx < pool.size() ; ++idx) {
                    int v = pool[idx];
                    if (members.empty() && v <= prev_min)
                        continue;
                    if (pool.size() - idx < t - members.size())
                        break;
                    std::vector<int> next_future;
                    for (int w : future)
                        if (w != v && g.adjacent(v, w))
                            next_future.push_back(w);
                    if (next_future.size() < needed_later)
                        continue;
                    members.push_back(v);
                    if (build(j, pool, prev_min, members, idx + 1, next_future))
                        return true;
                    members.pop_back();
                    if (aborted)
                        return false;
                }
                return false;
            }
        };

        auto all_vertices(const Graph & g) -> std::vector<int>
        {
            std::vector<int> v(g.size());
            for (int i = 0 ; i < g.size() ; ++i)
                v[i] = i;
            return v;
        }

        auto kdt_search(const Graph & g, int d, int t, SearchBudget & budget) -> KdtResult
        {
            if (d < 1 || t < 1)
                throw std::invalid_argument("contains_kdt needs d, t >= 1");

            KdtResult result;
            if (d == 1) {
                if (t > g.size()) {
                    result.found = Verdict::no;
                    return result;
                }
                VertexSet part(t);
                for (int i = 0 ; i < t ; ++i)
                    part[i] = i;
                result.found = Verdict::yes;
                result.witness = MultipartiteWitness{ { part } };
                return result;
            }
            if (d * t > g.size()) {
                result.found = Verdict::no;
                return result;
            }

            KdtSearch search{ g, d, t, budget, {} };
            auto pool = all_vertices(g);
            std::vector<int> members;
            if (search.build(0, pool, -1, members, 0, pool)) {
                result.found = Verdict::yes;
                result.witness = MultipartiteWitness{ search.parts };
            }
            else
                result.found = search.aborted ? Verdict::unknown : Verdict::no;
            return result;
        }
    }

    auto clique_number(const Graph & g, const SolverLimits & limits) -> CliqueResult
    {
        SearchBudget budget(limits);
        CliqueSearch search{ g, budget, {}, {} };
        CliqueResult result;

        if (g.empty()) {
            result.complete = true;
            return result;
        }

        auto cand = all_vertices(g);
        // vertices in decreasing degree order give a better first incumbent
        std::stable_sort(cand.begin(), cand.end(), [&] (int a, int b) { return g.degree(a) > g.degree(b); });
        std::vector<int> order, bound;
        search.colour_sort(cand, order, bound);
        search.expand(cand);

        result.clique = search.best;
        std::sort(result.clique.begin(), result.clique.end());
        result.lower = int(result.clique.size());
        result.complete = ! search.aborted;
        result.upper = result.complete ? result.lower : (bound.empty() ? 0 : bound.back());
        return result;
    }

    auto chromatic_number(const Graph & g, const SolverLimits & limits) -> ChromaticResult
    {
        ChromaticResult result;
        if (g.empty()) {
            result.complete = true;
            return result;
        }

        auto clique = clique_number(g, limits);

        SearchBudget budget(limits);
        ColouringSearch search(g, budget);
        search.lower = clique.lower;
        search.greedy();
        if (search.best > search.lower)
            search.search(0, 0);

        result.upper = search.best;
        result.colouring = search.best_colouring;
        result.complete = ! search.aborted;
        result.lower = result.complete ? result.upper : search.lower;
        return result;
    }

    auto chromatic_number_of(const Graph & g, const VertexSet & s, const SolverLimits & limits) -> ChromaticResult
    {
        return chromatic_number(induced_subgraph(g, s), limits);
    }

    auto contains_kdt(const Graph & g, int d, int t, const SolverLimits & limits) -> KdtResult
    {
        SearchBudget budget(limits);
        return kdt_search(g, d, t, budget);
    }

    auto tau(const Graph & g, int d, const SolverLimits & limits) -> TauResult
    {
        if (d < 1)
            throw std::invalid_argument("tau_d needs d >= 1");

        TauResult result;
        if (d == 1) {
            result.complete = true;
            result.t = g.size();
            result.witness.parts = { all_vertices(g) };
            return result;
        }

        SearchBudget budget(limits);
        for (int t = 1 ; d * t <= g.size() ; ++t) {
            auto found = kdt_search(g, d, t, budget);
            if (found.found == Verdict::unknown)
                return result;
            if (found.found == Verdict::no)
                break;
            result.t = t;
            result.witness = *found.witness;
        }
        result.complete = true;
        return result;
    }

    auto is_valid_multipartite_witness(const Graph & g, const MultipartiteWitness & w, int d, int t) -> bool
    {
        if (int(w.parts.size()) != d)
            return false;
        std::vector<int> part_of(g.size(), -1);
        for (int p = 0 ; p < d ; ++p) {
            if (int(w.parts[p].size()) != t)
                return false;
            for (int v : w.parts[p]) {
                if (v < 0 || v >= g.size() || part_of[v] != -1)
                    return false;
                part_of[v] = p;
            }
        }
        for (int p = 0 ; p < d ; ++p)
            for (int q = p + 1 ; q < d ; ++q)
                for (int u : w.parts[p])
                    for (int v : w.parts[q])
                        if (! g.adjacent(u, v))
                            return false;
        return true;
    }
}
