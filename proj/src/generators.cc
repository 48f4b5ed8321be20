/* vim: set sw=4 sts=4 et : */

#include <polychi/generators.hh>
#include "text.hh"

#include <cmath>
#include <random>
#include <stdexcept>
#include <string>

namespace polychi
{
    auto path_graph(int k) -> Graph
    {
        if (k < 1)
            throw std::invalid_argument("path needs at least one vertex");
        GraphBuilder b(k);
        for (int i = 0 ; i + 1 < k ; ++i)
            b.add_edge(i, i + 1);
        return b.build();
    }

    auto cycle_graph(int k) -> Graph
    {
        if (k < 3)
            throw std::invalid_argument("cycle needs at least three vertices");
        GraphBuilder b(k);
        for (int i = 0 ; i < k ; ++i)
            b.add_edge(i, (i + 1) % k);
        return b.build();
    }

    auto complete_graph(int n) -> Graph
    {
        if (n < 0)
            throw std::invalid_argument("negative vertex count");
        GraphBuilder b(n);
        for (int u = 0 ; u < n ; ++u)
            for (int v = u + 1 ; v < n ; ++v)
                b.add_edge(u, v);
        return b.build();
    }

    auto edgeless_graph(int n) -> Graph
    {
        if (n < 0)
            throw std::invalid_argument("negative vertex count");
        return GraphBuilder(n).build();
    }

    auto complete_multipartite(std::span<const int> part_sizes) -> Graph
    {
        if (part_sizes.empty())
            throw std::invalid_argument("complete multipartite graph needs at least one part");
        std::vector<int> part_of;
        for (std::size_t p = 0 ; p < part_sizes.size() ; ++p) {
            if (part_sizes[p] <= 0)
                throw std::invalid_argument("part sizes must be positive");
            part_of.insert(part_of.end(), part_sizes[p], int(p));
        }
        GraphBuilder b(int(part_of.size()));
        for (std::size_t u = 0 ; u < part_of.size() ; ++u)
            for (std::size_t v = u + 1 ; v < part_of.size() ; ++v)
                if (part_of[u] != part_of[v])
                    b.add_edge(int(u), int(v));
        return b.build();
    }

    auto complete_multipartite(int d, int t) -> Graph
    {
        if (d <= 0 || t <= 0)
            throw std::invalid_argument("K_d(t) needs d, t >= 1");
        std::vector<int> sizes(d, t);
        return complete_multipartite(sizes);
    }

    auto mycielskian(const Graph & g) -> Graph
    {
        const int n = g.size();
        GraphBuilder b(2 * n + 1);
        for (auto [u, v] : g.edges()) {
            b.add_edge(u, v);
            b.add_edge(u, n + v);
            b.add_edge(v, n + u);
        }
        for (int i = 0 ; i < n ; ++i)
            b.add_edge(n + i, 2 * n);
        return b.build();
    }

    auto random_graph(int n, double edge_probability, std::uint64_t seed) -> Graph
    {
        if (n < 0)
            throw std::invalid_argument("negative vertex count");
        if (! (edge_probability >= 0.0 && edge_probability <= 1.0))
            throw std::invalid_argument("edge probability must lie in [0, 1]");

        // compare 53-bit draws against a fixed threshold so the outcome does
        // not depend on the standard library's distribution implementation
        std::mt19937_64 engine(seed);
        const double threshold = std::ldexp(edge_probability, 53);
        GraphBuilder b(n);
        for (int u = 0 ; u < n ; ++u)
            for (int v = u + 1 ; v < n ; ++v)
                if (double(engine() >> 11) < threshold)
                    b.add_edge(u, v);
        return b.build();
    }

    auto attach_pendant_path(const Graph & g, int attach_to, int len) -> Graph
    {
        if (attach_to < 0 || attach_to >= g.size())
            throw std::out_of_range("attachment vertex outside graph");
        if (len < 0)
            throw std::invalid_argument("negative path length");
        const int n = g.size();
        GraphBuilder b(n + len);
        for (auto [u, v] : g.edges())
            b.add_edge(u, v);
        for (int i = 0 ; i + 1 < len ; ++i)
            b.add_edge(n + i, n + i + 1);
        if (len > 0)
            b.add_edge(n + len - 1, attach_to);
        return b.build();
    }

    auto generate_from_spec(std::string_view spec) -> std::optional<Graph>
    {
        auto [kind, args] = split_kind(spec);

        if (kind == "grotzsch")
            return mycielskian(cycle_graph(5));
        if (kind == "mycielski") {
            auto inner = generate_from_spec(args);
            if (! inner)
                throw std::invalid_argument("unknown inner generator '" + std::string(args) + "'");
            return mycielskian(*inner);
        }
        if (kind == "random") {
            auto fields = split_list(args);
            if (fields.size() != 3)
                throw std::invalid_argument("random needs n,probability,seed");
            return random_graph(parse_int(fields[0]), parse_double(fields[1]), parse_u64(fields[2]));
        }

        auto numbers = [&] { return parse_int_list(args); };
        auto one = [&] {
            auto v = numbers();
            if (v.size() != 1)
                throw std::invalid_argument(std::string(kind) + " takes one integer");
            return v[0];
        };

        if (kind == "path")
            return path_graph(one());
        if (kind == "cycle")
            return cycle_graph(one());
        if (kind == "complete")
            return complete_graph(one());
        if (kind == "empty")
            return edgeless_graph(one());
        if (kind == "kdt") {
            auto v = numbers();
            if (v.size() != 2)
                throw std::invalid_argument("kdt takes d,t");
            return complete_multipartite(v[0], v[1]);
        }
        if (kind == "multipartite")
            return complete_multipartite(numbers());
        return std::nullopt;
    }
}
