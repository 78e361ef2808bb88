#include "indcover/factorize.hpp"

#include <algorithm>
#include <limits>
#include <string>

namespace indcover {

namespace {

constexpr std::uint32_t kNone = std::numeric_limits<std::uint32_t>::max();

std::string at_vertex(VertexId v, std::size_t j) {
    return " at vertex " + std::to_string(v) + " in class " + std::to_string(j);
}

}  // namespace

std::string factorization_violation(const GeneralizedGraph& g, const Factorization& f) {
    const std::size_t m = g.num_darts();
    const std::size_t classes = f.num_classes();
    if (f.color.size() != m || f.forward.size() != m) {
        return "colour/forward arrays do not cover every dart";
    }
    for (DartId x = 0; x < m; ++x) {
        const auto c = f.color[x];
        if (c >= classes) {
            return "dart " + std::to_string(x) + " has colour out of range";
        }
        if (f.color[g.mate(x)] != c) {
            return "paired darts " + std::to_string(x) + " and " + std::to_string(g.mate(x)) +
                   " have different colours";
        }
        if (g.is_semi_edge(x) && c >= f.a) {
            return "semi-edge dart " + std::to_string(x) + " lies in a 2-factor class";
        }
        if (c >= f.a && f.forward[x] == f.forward[g.mate(x)]) {
            return "edge at dart " + std::to_string(x) + " is not oriented exactly once";
        }
    }
    std::vector<std::uint32_t> count(classes);
    std::vector<std::uint32_t> forward(classes);
    for (VertexId v = 0; v < g.num_vertices(); ++v) {
        std::fill(count.begin(), count.end(), 0);
        std::fill(forward.begin(), forward.end(), 0);
        for (DartId x : g.darts_at(v)) {
            ++count[f.color[x]];
            forward[f.color[x]] += f.forward[x] ? 1 : 0;
        }
        for (std::size_t j = 0; j < classes; ++j) {
            if (j < f.a && count[j] != 1) {
                return "1-factor has " + std::to_string(count[j]) + " darts" + at_vertex(v, j);
            }
            if (j >= f.a && (count[j] != 2 || forward[j] != 1)) {
                return "2-factor is not one-in one-out" + at_vertex(v, j);
            }
        }
    }
    return {};
}

Orientation orient(const GeneralizedGraph& g, const Factorization& f) {
    if (auto why = factorization_violation(g, f); !why.empty()) {
        throw GraphError("invalid factorization: " + why);
    }
    const std::size_t n = g.num_vertices();
    const std::size_t classes = f.num_classes();
    Orientation o;
    o.step.assign(classes, std::vector<VertexId>(n));
    o.back.assign(classes, std::vector<VertexId>(n));
    o.out_dart.assign(classes, std::vector<DartId>(n));
    o.in_dart.assign(classes, std::vector<DartId>(n));
    for (DartId x = 0; x < g.num_darts(); ++x) {
        const auto j = f.color[x];
        const VertexId v = g.incidence(x);
        const VertexId w = g.incidence(g.mate(x));
        if (j < f.a) {
            o.step[j][v] = o.back[j][v] = w;
            o.out_dart[j][v] = o.in_dart[j][v] = x;
        } else if (f.forward[x]) {
            o.step[j][v] = w;
            o.out_dart[j][v] = x;
        } else {
            o.back[j][v] = w;
            o.in_dart[j][v] = x;
        }
    }
    return o;
}

std::vector<std::vector<DartId>> euler_orientation(const GeneralizedGraph& g) {
    for (VertexId v = 0; v < g.num_vertices(); ++v) {
        if (g.degree(v) % 2 != 0) {
            throw GraphError("vertex " + std::to_string(v) + " has odd degree");
        }
    }
    for (DartId x = 0; x < g.num_darts(); ++x) {
        if (g.is_semi_edge(x)) {
            throw GraphError("Euler orientation needs a graph without semi-edges");
        }
    }

    std::vector<bool> used(g.num_darts(), false);
    std::vector<std::size_t> cursor(g.num_vertices(), 0);
    auto next_unused = [&](VertexId v) -> std::uint32_t {
        const auto darts = g.darts_at(v);
        auto& i = cursor[v];
        while (i < darts.size() && used[darts[i]]) {
            ++i;
        }
        return i < darts.size() ? darts[i] : kNone;
    };

    std::vector<std::vector<DartId>> trails;
    for (VertexId start = 0; start < g.num_vertices(); ++start) {
        if (next_unused(start) == kNone) {
            continue;
        }
        // Hierholzer: stack of (vertex reached, dart used to get there)
        std::vector<std::pair<VertexId, std::uint32_t>> stack{{start, kNone}};
        std::vector<DartId> reversed;
        while (!stack.empty()) {
            const VertexId v = stack.back().first;
            const std::uint32_t x = next_unused(v);
            if (x == kNone) {
                if (stack.back().second != kNone) {
                    reversed.push_back(stack.back().second);
                }
                stack.pop_back();
                continue;
            }
            used[x] = true;
            used[g.mate(x)] = true;
            stack.emplace_back(g.incidence(g.mate(x)), x);
        }
        trails.emplace_back(reversed.rbegin(), reversed.rend());
    }
    return trails;
}

std::vector<std::vector<std::size_t>> bipartite_matching_decomposition(const BipartiteMultigraph& b) {
    const std::size_t n = b.n_left;
    if (b.n_right != n) {
        throw GraphError("bipartite classes differ in size");
    }
    std::vector<std::vector<std::size_t>> adj(n);
    std::vector<std::size_t> right_degree(n, 0);
    for (std::size_t e = 0; e < b.edges.size(); ++e) {
        const auto [l, r] = b.edges[e];
        if (l >= n || r >= n) {
            throw GraphError("bipartite edge endpoint out of range");
        }
        adj[l].push_back(e);
        ++right_degree[r];
    }
    const std::size_t k = n == 0 ? 0 : adj[0].size();
    for (std::size_t v = 0; v < n; ++v) {
        if (adj[v].size() != k || right_degree[v] != k) {
            throw GraphError("bipartite multigraph is not regular");
        }
    }

    std::vector<bool> removed(b.edges.size(), false);
    std::vector<std::vector<std::size_t>> matchings;
    for (std::size_t round = 0; round < k; ++round) {
        std::vector<std::size_t> match_left(n, kNone);
        std::vector<std::size_t> match_right(n, kNone);
        for (std::uint32_t root = 0; root < n; ++root) {
            // iterative augmenting-path search from `root`
            std::vector<bool> seen(n, false);
            std::vector<std::pair<std::uint32_t, std::size_t>> stack{{root, 0}};
            std::vector<std::size_t> path;
            bool augmented = false;
            while (!stack.empty() && !augmented) {
                auto& [l, it] = stack.back();
                if (it == adj[l].size()) {
                    stack.pop_back();
                    if (!path.empty()) {
                        path.pop_back();
                    }
                    continue;
                }
                const std::size_t e = adj[l][it++];
                const auto r = b.edges[e].second;
                if (removed[e] || seen[r]) {
                    continue;
                }
                seen[r] = true;
                path.push_back(e);
                if (match_right[r] == kNone) {
                    for (std::size_t pe : path) {
                        match_left[b.edges[pe].first] = pe;
                        match_right[b.edges[pe].second] = pe;
                    }
                    augmented = true;
                } else {
                    stack.emplace_back(b.edges[match_right[r]].first, 0);
                }
            }
            if (!augmented) {
                throw GraphError("no perfect matching found; input is not regular bipartite");
            }
        }
        for (std::size_t e : match_left) {
            removed[e] = true;
        }
        std::vector<std::size_t> matching(match_left.begin(), match_left.end());
        std::sort(matching.begin(), matching.end());
        matchings.push_back(std::move(matching));
    }
    return matchings;
}

Factorization two_factorize(const GeneralizedGraph& g) {
    const std::size_t d = regular_degree_or_throw(g);
    if (d % 2 != 0) {
        throw GraphError("2-factorization needs even degree");
    }
    const auto trails = euler_orientation(g);

    // each traversed orbit becomes an out -> in edge of the split graph
    BipartiteMultigraph split{g.num_vertices(), g.num_vertices(), {}};
    std::vector<DartId> leaving;
    for (const auto& trail : trails) {
        for (DartId x : trail) {
            split.edges.emplace_back(g.incidence(x), g.incidence(g.mate(x)));
            leaving.push_back(x);
        }
    }

    Factorization f;
    f.a = 0;
    f.b = d / 2;
    f.color.assign(g.num_darts(), 0);
    f.forward.assign(g.num_darts(), 0);
    const auto matchings = bipartite_matching_decomposition(split);
    for (std::size_t j = 0; j < matchings.size(); ++j) {
        for (std::size_t e : matchings[j]) {
            const DartId x = leaving[e];
            f.color[x] = f.color[g.mate(x)] = static_cast<std::uint32_t>(j);
            f.forward[x] = 1;
            f.forward[g.mate(x)] = 0;
        }
    }
    return f;
}

std::string one_factor_violation(const GeneralizedGraph& g, const std::vector<DartId>& matching) {
    std::vector<bool> in(g.num_darts(), false);
    for (DartId x : matching) {
        if (x >= g.num_darts()) {
            return "matching dart " + std::to_string(x) + " out of range";
        }
        if (in[x]) {
            return "matching lists dart " + std::to_string(x) + " twice";
        }
        in[x] = true;
    }
    for (DartId x = 0; x < g.num_darts(); ++x) {
        if (in[x] && !in[g.mate(x)]) {
            return "matching is not closed under pairing at dart " + std::to_string(x);
        }
        if (g.is_semi_edge(x) && !in[x]) {
            return "matching misses semi-edge dart " + std::to_string(x);
        }
    }
    for (VertexId v = 0; v < g.num_vertices(); ++v) {
        const auto darts = g.darts_at(v);
        const auto hits = std::count_if(darts.begin(), darts.end(), [&](DartId x) { return in[x]; });
        if (hits != 1) {
            return "matching has " + std::to_string(hits) + " darts at vertex " + std::to_string(v);
        }
    }
    return {};
}

Factorization factorize_with_matching(const GeneralizedGraph& g, const std::vector<DartId>& matching) {
    const std::size_t d = regular_degree_or_throw(g);
    if (d % 2 == 0) {
        throw GraphError("factorization with a matching needs odd degree");
    }
    if (auto why = one_factor_violation(g, matching); !why.empty()) {
        throw GraphError(why);
    }
    std::vector<bool> keep(g.num_darts(), true);
    for (DartId x : matching) {
        keep[x] = false;
    }
    const auto [rest, to_old] = dart_subgraph(g, keep);
    const Factorization inner = two_factorize(rest);

    Factorization f;
    f.a = 1;
    f.b = inner.b;
    f.color.assign(g.num_darts(), 0);
    f.forward.assign(g.num_darts(), 0);
    for (std::size_t i = 0; i < to_old.size(); ++i) {
        f.color[to_old[i]] = inner.color[i] + 1;
        f.forward[to_old[i]] = inner.forward[i];
    }
    return f;
}

}  // namespace indcover
