/* vim: set sw=4 sts=4 et : */

#include <polychi/corpus.hh>
#include <polychi/generators.hh>
#include <polychi/graph_io.hh>
#include <polychi/patterns.hh>
#include <polychi/solvers.hh>

#include "text.hh"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace polychi
{
    auto graph_from_spec(std::string_view spec) -> Graph
    {
        if (auto g = generate_from_spec(spec))
            return *g;
        return realize(parse_pattern(spec));
    }

    auto parse_corpus_spec(std::string_view full_text) -> CorpusSpec
    {
        CorpusSpec spec;
        auto text = full_text;
        if (auto bar = full_text.find('|') ; bar != std::string_view::npos) {
            text = full_text.substr(0, bar);
            for (auto f : split_list(full_text.substr(bar + 1)))
                spec.filters.emplace_back(f);
            for (auto & f : spec.filters)
                if (f != "connected" && f != "paw_free" && f != "l_class" && f != "triangle_free")
                    throw std::invalid_argument("unknown corpus filter '" + f + "'");
        }
        auto [kind, args] = split_kind(text);
        if (kind == "file") {
            spec.source = CorpusSource::graph6_file;
            spec.path = std::string(args);
        }
        else if (kind == "exhaustive" || kind == "labelled") {
            spec.source = kind == "exhaustive" ? CorpusSource::exhaustive : CorpusSource::exhaustive_labelled;
            spec.max_n = parse_int(args);
            if (spec.max_n < 0)
                throw std::invalid_argument("exhaustive corpus needs N >= 0");
        }
        else if (kind == "random") {
            auto fields = split_list(args);
            if (fields.size() != 4)
                throw std::invalid_argument("random corpus needs n,probability,count,seed");
            spec.source = CorpusSource::random;
            spec.n = parse_int(fields[0]);
            spec.edge_probability = parse_double(fields[1]);
            spec.count = parse_int(fields[2]);
            spec.seed = parse_u64(fields[3]);
        }
        else if (kind == "named") {
            spec.source = CorpusSource::named;
            for (auto g : split_list(args, ';'))
                spec.generators.emplace_back(g);
            if (spec.generators.empty())
                throw std::invalid_argument("named corpus needs at least one generator");
        }
        else
            throw std::invalid_argument("unknown corpus '" + std::string(text) + "'");
        return spec;
    }

    namespace
    {
        // Degree and neighbourhood statistics that are invariant under
        // relabelling; only graphs with equal keys need an isomorphism test.
        auto invariant_key(const Graph & g) -> std::vector<long>
        {
            const int n = g.size();
            std::vector<std::vector<long>> per_vertex;
            for (int v = 0 ; v < n ; ++v) {
                auto nbrs = g.neighbours(v);
                long triangles = 0;
                std::vector<long> sig{ long(nbrs.size()) };
                for (std::size_t i = 0 ; i < nbrs.size() ; ++i)
                    for (std::size_t j = i + 1 ; j < nbrs.size() ; ++j)
                        if (g.adjacent(nbrs[i], nbrs[j]))
                            ++triangles;
                sig.push_back(triangles);
                std::vector<long> nd;
                for (int w : nbrs)
                    nd.push_back(g.degree(w));
                std::sort(nd.begin(), nd.end());
                sig.insert(sig.end(), nd.begin(), nd.end());
                per_vertex.push_back(std::move(sig));
            }
            std::sort(per_vertex.begin(), per_vertex.end());
            std::vector<long> key{ n, g.edge_count() };
            for (auto & s : per_vertex) {
                key.push_back(-1);
                key.insert(key.end(), s.begin(), s.end());
            }
            return key;
        }
    }

    auto are_isomorphic(const Graph & a, const Graph & b) -> bool
    {
        if (a.size() != b.size() || a.edge_count() != b.edge_count())
            return false;
        if (invariant_key(a) != invariant_key(b))
            return false;
        return induced_contains(a, b).found == Verdict::yes;
    }

    namespace
    {
        // Every order-n graph arises from an order-(n-1) representative plus
        // a new vertex, so extending each class by all neighbourhoods and
        // rejecting isomorphic duplicates gives one graph per class.
        auto extend_layer(const std::vector<Graph> & smaller, int n) -> std::vector<Graph>
        {
            std::vector<Graph> result;
            std::map<std::vector<long>, std::vector<std::size_t>> buckets;

            for (auto & base : smaller) {
                auto base_edges = base.edges();
                for (std::uint64_t mask = 0 ; mask < (std::uint64_t{1} << (n - 1)) ; ++mask) {
                    auto edges = base_edges;
                    for (int v = 0 ; v < n - 1 ; ++v)
                        if (mask >> v & 1)
                            edges.emplace_back(v, n - 1);
                    Graph candidate(n, edges);
                    auto & bucket = buckets[invariant_key(candidate)];
                    bool seen = std::any_of(bucket.begin(), bucket.end(), [&] (std::size_t i) {
                            return induced_contains(result[i], candidate).found == Verdict::yes;
                            });
                    if (! seen) {
                        bucket.push_back(result.size());
                        result.push_back(std::move(candidate));
                    }
                }
            }
            return result;
        }

        auto layers_up_to(int max_n) -> std::vector<std::vector<Graph>>
        {
            std::vector<std::vector<Graph>> layers{ { Graph(0, {}) } };
            for (int n = 1 ; n <= max_n ; ++n)
                layers.push_back(extend_layer(layers.back(), n));
            return layers;
        }
    }

    auto nonisomorphic_graphs(int n) -> std::vector<Graph>
    {
        if (n < 0)
            throw std::invalid_argument("negative order");
        return layers_up_to(n).back();
    }

    auto for_each_labelled_graph(int n, const std::function<void (const Graph &)> & visit) -> void
    {
        if (n < 0)
            throw std::invalid_argument("negative order");
        std::vector<Edge> pairs;
        for (int v = 1 ; v < n ; ++v)
            for (int u = 0 ; u < v ; ++u)
                pairs.emplace_back(u, v);
        if (pairs.size() >= 63)
            throw std::invalid_argument("too many labelled graphs to enumerate");

        std::vector<Edge> edges;
        for (std::uint64_t mask = 0 ; mask < (std::uint64_t{1} << pairs.size()) ; ++mask) {
            edges.clear();
            for (std::size_t i = 0 ; i < pairs.size() ; ++i)
                if (mask >> i & 1)
                    edges.push_back(pairs[i]);
            visit(Graph(n, edges));
        }
    }

    namespace
    {
        auto passes(const Graph & g, const std::string & filter) -> bool
        {
            if (filter == "connected")
                return is_connected(g);
            if (filter == "paw_free")
                return is_paw_free(g) == Verdict::yes;
            if (filter == "l_class")
                return in_l(g) == Verdict::yes;
            if (filter == "triangle_free")
                return clique_number(g).upper <= 2;
            throw std::invalid_argument("unknown corpus filter '" + filter + "'");
        }
    }

    auto load_corpus(const CorpusSpec & spec) -> std::vector<Graph>
    {
        std::vector<Graph> graphs;
        switch (spec.source) {
            case CorpusSource::graph6_file:
                graphs = read_graph6_file(spec.path);
                break;

            case CorpusSource::exhaustive:
            case CorpusSource::exhaustive_labelled:
                if (spec.max_n > spec.exhaustive_limit)
                    throw std::invalid_argument("exhaustive corpus order " + std::to_string(spec.max_n)
                            + " above limit " + std::to_string(spec.exhaustive_limit));
                if (spec.source == CorpusSource::exhaustive)
                    for (auto & layer : layers_up_to(spec.max_n))
                        graphs.insert(graphs.end(), layer.begin(), layer.end());
                else
                    for (int n = 0 ; n <= spec.max_n ; ++n)
                        for_each_labelled_graph(n, [&] (const Graph & g) { graphs.push_back(g); });
                break;

            case CorpusSource::random:
                if (spec.count < 0)
                    throw std::invalid_argument("negative corpus size");
                for (int i = 0 ; i < spec.count ; ++i)
                    graphs.push_back(random_graph(spec.n, spec.edge_probability, spec.seed + std::uint64_t(i)));
                break;

            case CorpusSource::named:
                for (auto & g : spec.generators)
                    graphs.push_back(graph_from_spec(g));
                break;
        }

        if (! spec.filters.empty())
            std::erase_if(graphs, [&] (const Graph & g) {
                    return ! std::all_of(spec.filters.begin(), spec.filters.end(), [&] (auto & f) { return passes(g, f); });
                    });
        return graphs;
    }
}
