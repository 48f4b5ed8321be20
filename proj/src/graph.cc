/* vim: set sw=4 sts=4 et : */

#include <polychi/graph.hh>

#include <algorithm>
#include <bit>
#include <limits>
#include <queue>
#include <stdexcept>
#include <string>

namespace polychi
{
    Graph::Graph(int n, std::span<const Edge> edges) :
        _n(n),
        _words((n + 63) / 64),
        _bits(static_cast<std::size_t>(n) * ((n + 63) / 64), 0)
    {
        if (n < 0)
            throw std::invalid_argument("negative vertex count");

        for (auto [u, v] : edges) {
            if (u < 0 || v < 0 || u >= n || v >= n)
                throw std::invalid_argument("edge " + std::to_string(u) + "-" + std::to_string(v)
                        + " outside vertex range 0.." + std::to_string(n - 1));
            if (u == v)
                throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
            _bits[row_offset(u) + (v >> 6)] |= std::uint64_t{1} << (v & 63);
            _bits[row_offset(v) + (u >> 6)] |= std::uint64_t{1} << (u & 63);
        }
    }

    auto Graph::degree(int v) const -> int
    {
        int result = 0;
        for (auto w : row(v))
            result += std::popcount(w);
        return result;
    }

    auto Graph::neighbours(int v) const -> std::vector<int>
    {
        std::vector<int> result;
        auto r = row(v);
        for (int i = 0 ; i < _words ; ++i)
            for (auto w = r[i] ; w ; w &= w - 1)
                result.push_back(i * 64 + std::countr_zero(w));
        return result;
    }

    auto Graph::edge_count() const -> long
    {
        long twice = 0;
        for (auto w : _bits)
            twice += std::popcount(w);
        return twice / 2;
    }

    auto Graph::edges() const -> std::vector<Edge>
    {
        std::vector<Edge> result;
        for (int u = 0 ; u < _n ; ++u)
            for (int v : neighbours(u))
                if (u < v)
                    result.emplace_back(u, v);
        return result;
    }

    auto GraphBuilder::add_edge(int u, int v) -> GraphBuilder &
    {
        _edges.emplace_back(u, v);
        return *this;
    }

    auto valid_vertex_set(const Graph & g, const VertexSet & s) -> bool
    {
        for (std::size_t i = 0 ; i < s.size() ; ++i) {
            if (s[i] < 0 || s[i] >= g.size())
                return false;
            if (i > 0 && s[i - 1] >= s[i])
                return false;
        }
        return true;
    }

    auto induced_subgraph(const Graph & g, std::span<const int> s) -> Graph
    {
        std::vector<char> seen(g.size(), 0);
        for (int v : s) {
            if (v < 0 || v >= g.size())
                throw std::out_of_range("vertex " + std::to_string(v) + " not in graph of order " + std::to_string(g.size()));
            if (seen[v])
                throw std::invalid_argument("vertex " + std::to_string(v) + " repeated");
            seen[v] = 1;
        }

        std::vector<Edge> edges;
        for (std::size_t i = 0 ; i < s.size() ; ++i)
            for (std::size_t j = i + 1 ; j < s.size() ; ++j)
                if (g.adjacent(s[i], s[j]))
                    edges.emplace_back(int(i), int(j));
        return Graph(int(s.size()), edges);
    }

    auto distances_from(const Graph & g, int source) -> std::vector<int>
    {
        std::vector<int> dist(g.size(), -1);
        std::queue<int> queue;
        dist[source] = 0;
        queue.push(source);
        while (! queue.empty()) {
            int v = queue.front();
            queue.pop();
            for (int w : g.neighbours(v))
                if (dist[w] == -1) {
                    dist[w] = dist[v] + 1;
                    queue.push(w);
                }
        }
        return dist;
    }

    auto connected_components(const Graph & g) -> std::vector<VertexSet>
    {
        std::vector<VertexSet> result;
        std::vector<char> done(g.size(), 0);
        for (int v = 0 ; v < g.size() ; ++v) {
            if (done[v])
                continue;
            auto dist = distances_from(g, v);
            VertexSet component;
            for (int w = 0 ; w < g.size() ; ++w)
                if (dist[w] != -1) {
                    component.push_back(w);
                    done[w] = 1;
                }
            result.push_back(std::move(component));
        }
        return result;
    }

    auto is_connected(const Graph & g) -> bool
    {
        if (g.size() <= 1)
            return true;
        auto dist = distances_from(g, 0);
        return std::none_of(dist.begin(), dist.end(), [] (int d) { return d == -1; });
    }

    namespace
    {
        // Maximum number of internally vertex-disjoint s-t paths for a
        // nonadjacent pair, by unit augmenting paths on the split graph.
        // Node 2v is v_in, 2v+1 is v_out.
        auto local_connectivity(const Graph & g, int s, int t, int stop_at) -> int
        {
            const int nodes = 2 * g.size();
            const int inf = std::numeric_limits<int>::max() / 2;
            std::vector<int> cap(static_cast<std::size_t>(nodes) * nodes, 0);
            auto at = [&] (int a, int b) -> int & { return cap[static_cast<std::size_t>(a) * nodes + b]; };

            for (int v = 0 ; v < g.size() ; ++v) {
                at(2 * v, 2 * v + 1) = (v == s || v == t) ? inf : 1;
                for (int w : g.neighbours(v))
                    at(2 * v + 1, 2 * w) = inf;
            }

            const int source = 2 * s + 1, sink = 2 * t;
            int flow = 0;
            std::vector<int> parent(nodes);
            while (flow < stop_at) {
                std::fill(parent.begin(), parent.end(), -1);
                parent[source] = source;
                std::queue<int> queue;
                queue.push(source);
                while (! queue.empty() && parent[sink] == -1) {
                    int a = queue.front();
                    queue.pop();
                    for (int b = 0 ; b < nodes ; ++b)
                        if (parent[b] == -1 && at(a, b) > 0) {
                            parent[b] = a;
                            queue.push(b);
                        }
                }
                if (parent[sink] == -1)
                    break;
                for (int b = sink ; b != source ; b = parent[b]) {
                    at(parent[b], b) -= 1;
                    at(b, parent[b]) += 1;
                }
                ++flow;
            }
            return flow;
        }

        auto has_articulation_point(const Graph & g) -> bool
        {
            for (int v = 0 ; v < g.size() ; ++v) {
                std::vector<int> rest;
                for (int w = 0 ; w < g.size() ; ++w)
                    if (w != v)
                        rest.push_back(w);
                if (! is_connected(induced_subgraph(g, rest)))
                    return true;
            }
            return false;
        }
    }

    auto vertex_connectivity(const Graph & g) -> int
    {
        const int n = g.size();
        if (n <= 1 || ! is_connected(g))
            return 0;

        int best = n - 1;
        for (int v = 0 ; v < n ; ++v)
            best = std::min(best, g.degree(v));

        for (int s = 0 ; s < n && best > 0 ; ++s)
            for (int t = s + 1 ; t < n ; ++t)
                if (! g.adjacent(s, t))
                    best = std::min(best, local_connectivity(g, s, t, best));
        return best;
    }

    auto is_t_connected(const Graph & g, int t, bool allow_singleton) -> bool
    {
        if (allow_singleton && t == 1 && g.size() == 1)
            return true;
        if (t <= 0)
            return true;
        if (g.size() < t + 1)
            return false;
        if (! is_connected(g))
            return false;
        if (t == 1)
            return true;
        if (t == 2)
            return ! has_articulation_point(g);
        return vertex_connectivity(g) >= t;
    }

    auto degeneracy(const Graph & g) -> Degeneracy
    {
        const int n = g.size();
        if (n == 0)
            throw std::invalid_argument("degeneracy of the null graph is undefined");

        std::vector<int> deg(n);
        for (int v = 0 ; v < n ; ++v)
            deg[v] = g.degree(v);
        std::vector<char> removed(n, 0);

        Degeneracy result;
        for (int step = 0 ; step < n ; ++step) {
            int pick = -1;
            for (int v = 0 ; v < n ; ++v)
                if (! removed[v] && (pick == -1 || deg[v] < deg[pick]))
                    pick = v;
            result.value = std::max(result.value, deg[pick]);
            result.order.push_back(pick);
            removed[pick] = 1;
            for (int w : g.neighbours(pick))
                if (! removed[w])
                    --deg[w];
        }
        return result;
    }

    auto greedy_colouring(const Graph & g, std::span<const int> order) -> std::vector<int>
    {
        std::vector<int> colour(g.size(), -1);
        for (int v : order) {
            std::vector<char> used(g.size() + 1, 0);
            for (int w : g.neighbours(v))
                if (colour[w] >= 0)
                    used[colour[w]] = 1;
            int c = 0;
            while (used[c])
                ++c;
            colour[v] = c;
        }
        return colour;
    }

    auto degeneracy_colouring(const Graph & g) -> std::vector<int>
    {
        if (g.empty())
            return {};
        auto order = degeneracy(g).order;
        std::reverse(order.begin(), order.end());
        return greedy_colouring(g, order);
    }

    auto is_proper_colouring(const Graph & g, std::span<const int> colour) -> bool
    {
        if (colour.size() != static_cast<std::size_t>(g.size()))
            return false;
        for (auto [u, v] : g.edges())
            if (colour[u] == colour[v])
                return false;
        return std::all_of(colour.begin(), colour.end(), [] (int c) { return c >= 0; });
    }

    auto is_tree(const Graph & g) -> bool
    {
        return g.size() >= 1 && g.edge_count() == g.size() - 1 && is_connected(g);
    }
}
