/* vim: set sw=4 sts=4 et : */

#include <polychi/structures.hh>
#include <polychi/patterns.hh>
#include <polychi/solvers.hh>

#include <json.hpp>

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <map>
#include <queue>
#include <stdexcept>

namespace polychi
{
    auto to_string(CertDefect d) -> const char *
    {
        switch (d) {
            case CertDefect::none: return "none";
            case CertDefect::out_of_range: return "out_of_range";
            case CertDefect::bad_size: return "bad_size";
            case CertDefect::not_disjoint: return "not_disjoint";
            case CertDefect::not_complete: return "not_complete";
            case CertDefect::path_not_induced: return "path_not_induced";
            case CertDefect::path_meets_y: return "path_meets_y";
            case CertDefect::entry_not_in_y: return "entry_not_in_y";
            case CertDefect::path_touches_y: return "path_touches_y";
            case CertDefect::entry_not_unique: return "entry_not_unique";
            case CertDefect::not_t_connected: return "not_t_connected";
            case CertDefect::z_mismatch: return "z_mismatch";
            case CertDefect::value_mismatch: return "value_mismatch";
            case CertDefect::value_unknown: return "value_unknown";
        }
        return "unknown";
    }

    auto to_string(ExtractionStatus s) -> const char *
    {
        switch (s) {
            case ExtractionStatus::found: return "found";
            case ExtractionStatus::precondition_failed: return "precondition_failed";
            case ExtractionStatus::not_found: return "not_found";
            case ExtractionStatus::unknown: return "unknown";
        }
        return "unknown";
    }

    namespace
    {
        auto fail(CertDefect d) -> Validation { return Validation{ d }; }

        auto check_value(const Graph & g, const VertexSet & s, int claimed, const SolverLimits & limits) -> Validation
        {
            auto chi = chromatic_number_of(g, s, limits);
            if (! chi.complete)
                return fail(CertDefect::value_unknown);
            return chi.upper == claimed ? Validation{} : fail(CertDefect::value_mismatch);
        }

        auto in_range(const Graph & g, const std::vector<int> & vs) -> bool
        {
            return std::all_of(vs.begin(), vs.end(), [&] (int v) { return v >= 0 && v < g.size(); });
        }

        auto is_induced_path(const Graph & g, const std::vector<int> & path) -> bool
        {
            for (std::size_t i = 0 ; i < path.size() ; ++i)
                for (std::size_t j = i + 1 ; j < path.size() ; ++j) {
                    if (path[i] == path[j])
                        return false;
                    if (g.adjacent(path[i], path[j]) != (j == i + 1))
                        return false;
                }
            return true;
        }

        auto sorted_vertices(std::vector<int> v) -> VertexSet
        {
            std::sort(v.begin(), v.end());
            return v;
        }
    }

    auto validate_biclique(const Graph & g, const BicliqueCert & cert, const SolverLimits & limits) -> Validation
    {
        if (! valid_vertex_set(g, cert.x) || ! valid_vertex_set(g, cert.y))
            return fail(CertDefect::out_of_range);
        if (cert.x.empty())
            return fail(CertDefect::bad_size);
        for (int v : cert.y)
            if (std::binary_search(cert.x.begin(), cert.x.end(), v))
                return fail(CertDefect::not_disjoint);
        for (int u : cert.x)
            for (int v : cert.y)
                if (! g.adjacent(u, v))
                    return fail(CertDefect::not_complete);
        return check_value(g, cert.y, cert.value, limits);
    }

    auto validate_balloon(const Graph & g, const BalloonCert & cert, int p, int t, const SolverLimits & limits) -> Validation
    {
        if (! in_range(g, cert.path) || ! valid_vertex_set(g, cert.y) || ! valid_vertex_set(g, cert.z))
            return fail(CertDefect::out_of_range);
        if (p < 1 || t < 1 || cert.p() != p || cert.t != t)
            return fail(CertDefect::bad_size);
        if (! is_induced_path(g, cert.path))
            return fail(CertDefect::path_not_induced);

        auto in_y = [&] (int v) { return std::binary_search(cert.y.begin(), cert.y.end(), v); };
        for (int i = 0 ; i + 1 < p ; ++i)
            if (in_y(cert.path[i]))
                return fail(CertDefect::path_meets_y);
        const int entry = cert.entry();
        if (! in_y(entry))
            return fail(CertDefect::entry_not_in_y);
        for (int i = 0 ; i + 2 < p ; ++i)
            for (int y : cert.y)
                if (g.adjacent(cert.path[i], y))
                    return fail(CertDefect::path_touches_y);
        if (p >= 2)
            for (int y : cert.y)
                if (y != entry && g.adjacent(cert.path[p - 2], y))
                    return fail(CertDefect::entry_not_unique);

        if (! is_t_connected(induced_subgraph(g, cert.y), t, true))
            return fail(CertDefect::not_t_connected);

        VertexSet z;
        for (int y : cert.y)
            if (! g.adjacent(entry, y))
                z.push_back(y);
        if (z != cert.z)
            return fail(CertDefect::z_mismatch);
        return check_value(g, cert.z, cert.value, limits);
    }

    auto max_biclique_value(const Graph & g, int t, const SolverLimits & limits) -> BicliqueSearchResult
    {
        if (t < 1)
            throw std::invalid_argument("t must be >= 1");

        BicliqueSearchResult result;
        result.complete = true;
        SearchBudget budget(limits);

        // chi is monotone under taking supersets, so for each X the whole
        // common neighbourhood is the best Y
        std::vector<int> x;
        std::function<bool (int)> choose = [&] (int start) -> bool {
            if (int(x.size()) == t) {
                if (! budget.tick())
                    return false;
                VertexSet y;
                for (int v = 0 ; v < g.size() ; ++v)
                    if (std::all_of(x.begin(), x.end(), [&] (int u) { return g.adjacent(u, v); }))
                        y.push_back(v);
                if (result.cert && int(y.size()) <= result.value)
                    return true;
                auto chi = chromatic_number_of(g, y, limits);
                if (! chi.complete)
                    result.complete = false;
                if (! result.cert || chi.lower > result.value) {
                    result.value = chi.lower;
                    result.cert = BicliqueCert{ x, y, chi.lower };
                }
                return true;
            }
            for (int v = start ; v + (t - int(x.size())) <= g.size() ; ++v) {
                x.push_back(v);
                bool go_on = choose(v + 1);
                x.pop_back();
                if (! go_on)
                    return false;
            }
            return true;
        };
        if (! choose(0))
            result.complete = false;
        if (result.cert && ! result.complete) {
            // a lower bound only: make the certificate honest about its value
            result.cert->value = result.value;
        }
        return result;
    }

    namespace
    {
        struct BalloonSearch
        {
            const Graph & g;
            int p, t;
            const SolverLimits & limits;
            SearchBudget & budget;
            BalloonSearchResult result;
            std::vector<int> path;
            bool aborted = false;

            auto evaluate_path() -> void
            {
                const int entry = path.back();
                std::vector<char> on_path(g.size(), 0);
                for (int v : path)
                    on_path[v] = 1;

                // vertices allowed in Y besides the entry
                std::vector<int> allowed;
                for (int u = 0 ; u < g.size() ; ++u) {
                    if (on_path[u])
                        continue;
                    bool ok = true;
                    for (int i = 0 ; i + 1 < p && ok ; ++i)
                        if (g.adjacent(path[i], u))
                            ok = false;
                    if (ok)
                        allowed.push_back(u);
                }

                // only the component of the entry matters, since Y is connected
                std::vector<int> pool{ entry };
                pool.insert(pool.end(), allowed.begin(), allowed.end());
                std::sort(pool.begin(), pool.end());
                auto pool_graph = induced_subgraph(g, pool);
                int entry_index = int(std::lower_bound(pool.begin(), pool.end(), entry) - pool.begin());
                auto dist = distances_from(pool_graph, entry_index);
                std::vector<int> others;
                for (std::size_t i = 0 ; i < pool.size() ; ++i)
                    if (int(i) != entry_index && dist[i] != -1)
                        others.push_back(pool[i]);

                // chi of Z is at most chi of the largest possible Z
                VertexSet z_max{ entry };
                for (int u : others)
                    if (! g.adjacent(entry, u))
                        z_max.push_back(u);
                z_max = sorted_vertices(z_max);
                if (result.cert && int(z_max.size()) <= result.value)
                    return;
                auto chi_max = chromatic_number_of(g, z_max, limits);
                if (! chi_max.complete) {
                    aborted = true;
                    return;
                }
                if (result.cert && chi_max.upper <= result.value)
                    return;

                if (others.size() > 40) {
                    aborted = true;
                    return;
                }

                std::map<std::uint64_t, int> chi_of_z;
                const std::uint64_t full = others.empty() ? 0 : (~std::uint64_t{0} >> (64 - others.size()));
                std::uint64_t z_bits = 0;
                for (std::size_t i = 0 ; i < others.size() ; ++i)
                    if (! g.adjacent(entry, others[i]))
                        z_bits |= std::uint64_t{1} << i;

                for (std::uint64_t mask = full ; ; --mask) {
                    if (! budget.tick()) {
                        aborted = true;
                        return;
                    }
                    int z_size = 1 + std::popcount(mask & z_bits);
                    if (! result.cert || z_size > result.value) {
                        VertexSet y{ entry };
                        for (std::size_t i = 0 ; i < others.size() ; ++i)
                            if (mask >> i & 1)
                                y.push_back(others[i]);
                        y = sorted_vertices(y);
                        if (is_t_connected(induced_subgraph(g, y), t, true)) {
                            auto key = mask & z_bits;
                            auto it = chi_of_z.find(key);
                            VertexSet z;
                            for (int v : y)
                                if (! g.adjacent(entry, v))
                                    z.push_back(v);
                            if (it == chi_of_z.end()) {
                                auto chi = chromatic_number_of(g, z, limits);
                                if (! chi.complete) {
                                    aborted = true;
                                    return;
                                }
                                it = chi_of_z.emplace(key, chi.upper).first;
                            }
                            if (! result.cert || it->second > result.value) {
                                result.value = it->second;
                                result.cert = BalloonCert{ path, y, z, it->second, t };
                                if (result.value >= chi_max.upper)
                                    return;
                            }
                        }
                    }
                    if (mask == 0)
                        break;
                }
            }

            auto extend() -> void
            {
                if (aborted)
                    return;
                if (int(path.size()) == p) {
                    evaluate_path();
                    return;
                }
                if (! budget.tick()) {
                    aborted = true;
                    return;
                }
                auto extend_with = [&] (int v) {
                    for (std::size_t i = 0 ; i < path.size() ; ++i) {
                        if (path[i] == v)
                            return;
                        if (g.adjacent(path[i], v) != (i + 1 == path.size()))
                            return;
                    }
                    path.push_back(v);
                    extend();
                    path.pop_back();
                };
                if (path.empty())
                    for (int v = 0 ; v < g.size() && ! aborted ; ++v)
                        extend_with(v);
                else
                    for (int v : g.neighbours(path.back())) {
                        if (aborted)
                            break;
                        extend_with(v);
                    }
            }
        };
    }

    auto max_balloon_value(const Graph & g, int p, int t, const SolverLimits & limits) -> BalloonSearchResult
    {
        if (p < 1 || t < 1)
            throw std::invalid_argument("p and t must be >= 1");
        SearchBudget budget(limits);
        BalloonSearch search{ g, p, t, limits, budget, {}, {} };
        search.extend();
        search.result.complete = ! search.aborted;
        return search.result;
    }

    namespace
    {
        // BFS inside Y from the entry to the nearest core vertex; neighbours
        // are scanned in increasing order so the path is deterministic.
        auto connector_path(const Graph & g, const VertexSet & y, int entry, const std::vector<int> & core) -> std::vector<int>
        {
            std::vector<char> allowed(g.size(), 0), target(g.size(), 0);
            for (int v : y)
                allowed[v] = 1;
            for (int v : core)
                target[v] = 1;

            std::vector<int> parent(g.size(), -2);
            std::queue<int> queue;
            parent[entry] = -1;
            queue.push(entry);
            while (! queue.empty()) {
                int v = queue.front();
                queue.pop();
                if (target[v]) {
                    std::vector<int> result;
                    for (int w = v ; w != -1 ; w = parent[w])
                        result.push_back(w);
                    std::reverse(result.begin(), result.end());
                    return result;
                }
                for (int w : g.neighbours(v))
                    if (allowed[w] && parent[w] == -2) {
                        parent[w] = v;
                        queue.push(w);
                    }
            }
            return {};
        }

        auto extract_tree(const Graph & g, const BalloonCert & balloon, const PatternSpec & core_pattern,
                bool second, const SolverLimits & limits) -> ExtractionResult
        {
            ExtractionResult result;

            auto y_graph = induced_subgraph(g, balloon.y);
            auto core_found = induced_contains(y_graph, realize(core_pattern), limits);
            if (core_found.found == Verdict::unknown) {
                result.status = ExtractionStatus::unknown;
                result.reason = "budget exhausted locating " + core_pattern.name();
                return result;
            }
            if (core_found.found == Verdict::no) {
                result.status = ExtractionStatus::not_found;
                result.reason = "no induced " + core_pattern.name() + " inside Y";
                return result;
            }
            for (int v : *core_found.mapping)
                result.core.push_back(balloon.y[v]);

            result.connector = connector_path(g, balloon.y, balloon.entry(), result.core);
            if (result.connector.empty()) {
                result.status = ExtractionStatus::not_found;
                result.reason = "core not reachable from the entry inside Y";
                return result;
            }

            std::vector<int> host = balloon.path;
            host.insert(host.end(), result.connector.begin(), result.connector.end());
            host.insert(host.end(), result.core.begin(), result.core.end());
            host = sorted_vertices(host);
            host.erase(std::unique(host.begin(), host.end()), host.end());
            auto host_graph = induced_subgraph(g, host);

            const int extra = second ? 4 : 3;
            for (int q = int(host.size()) - extra ; q >= 4 ; --q) {
                auto spec = second ? PatternSpec::t2(q) : PatternSpec::t1(q);
                auto found = induced_contains(host_graph, realize(spec), limits);
                if (found.found == Verdict::unknown) {
                    result.status = ExtractionStatus::unknown;
                    result.reason = "budget exhausted searching " + spec.name();
                    return result;
                }
                if (found.found == Verdict::yes) {
                    result.status = ExtractionStatus::found;
                    result.pattern_p = q;
                    for (int v : *found.mapping)
                        result.mapping.push_back(host[v]);
                    return result;
                }
            }
            result.status = ExtractionStatus::not_found;
            result.reason = std::string("no induced ") + (second ? "T2" : "T1") + " on path + connector + core";
            return result;
        }

        auto precondition(std::string reason) -> ExtractionResult
        {
            ExtractionResult r;
            r.status = ExtractionStatus::precondition_failed;
            r.reason = std::move(reason);
            return r;
        }

        auto unknown(std::string reason) -> ExtractionResult
        {
            ExtractionResult r;
            r.status = ExtractionStatus::unknown;
            r.reason = std::move(reason);
            return r;
        }
    }

    auto extract_t1(const Graph & g, const BalloonCert & balloon, const SolverLimits & limits) -> ExtractionResult
    {
        auto paw_free = is_paw_free(g, limits);
        if (paw_free == Verdict::unknown)
            return unknown("budget exhausted testing paw-freeness");
        if (paw_free == Verdict::no)
            return precondition("graph contains an induced paw");

        auto valid = validate_balloon(g, balloon, balloon.p(), balloon.t, limits);
        if (! valid)
            return precondition(std::string("invalid balloon: ") + to_string(valid.defect));

        auto chi_y = chromatic_number_of(g, balloon.y, limits);
        auto omega = clique_number(g, limits);
        if (! chi_y.complete || ! omega.complete)
            return unknown("budget exhausted computing chi(Y) or omega(G)");
        if (chi_y.upper < omega.lower + 2)
            return precondition("chi(Y) = " + std::to_string(chi_y.upper) + " is below omega(G) + 2 = "
                    + std::to_string(omega.lower + 2));

        return extract_tree(g, balloon, PatternSpec::simple(PatternKind::e_graph), false, limits);
    }

    auto extract_t2(const Graph & g, const BalloonCert & balloon, int threshold, const SolverLimits & limits) -> ExtractionResult
    {
        auto in_class = in_l(g, limits);
        if (in_class == Verdict::unknown)
            return unknown("budget exhausted testing paw- and sub-dart-freeness");
        if (in_class == Verdict::no)
            return precondition("graph contains an induced paw or sub-dart");

        auto valid = validate_balloon(g, balloon, balloon.p(), balloon.t, limits);
        if (! valid)
            return precondition(std::string("invalid balloon: ") + to_string(valid.defect));
        if (balloon.value < threshold)
            return precondition("balloon value " + std::to_string(balloon.value) + " below threshold "
                    + std::to_string(threshold));

        return extract_tree(g, balloon, PatternSpec::h_tree(3, 2), true, limits);
    }

    auto to_json_string(const BicliqueCert & cert) -> std::string
    {
        nlohmann::ordered_json j;
        j["kind"] = "biclique";
        j["path"] = nlohmann::json::array();
        j["X"] = cert.x;
        j["Y"] = cert.y;
        j["Z"] = nlohmann::json::array();
        j["value"] = cert.value;
        j["p"] = 0;
        j["t"] = cert.x.size();
        return j.dump();
    }

    auto to_json_string(const BalloonCert & cert) -> std::string
    {
        nlohmann::ordered_json j;
        j["kind"] = "balloon";
        j["path"] = cert.path;
        j["X"] = nlohmann::json::array();
        j["Y"] = cert.y;
        j["Z"] = cert.z;
        j["value"] = cert.value;
        j["p"] = cert.p();
        j["t"] = cert.t;
        return j.dump();
    }
}
