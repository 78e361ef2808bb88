#pragma once

// Independent reference implementations used as test oracles. Nothing here
// calls into the library's verifiers.

#include "indcover/ggraph.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <vector>

namespace oracle {

using indcover::DartId;
using indcover::GeneralizedGraph;
using indcover::VertexId;

inline GeneralizedGraph cycle(std::size_t n) {
    std::vector<indcover::VertexPair> edges;
    for (VertexId i = 0; i < n; ++i) {
        edges.emplace_back(i, static_cast<VertexId>((i + 1) % n));
    }
    return indcover::from_edges(n, edges);
}

/// Definition-level check: no loop, semi-edge or edge inside S, every outside
/// vertex has exactly r darts whose mate sits on S.
inline bool is_exact_cover(const GeneralizedGraph& g, const std::vector<bool>& in_s, std::size_t r) {
    std::vector<std::size_t> hits(g.num_vertices(), 0);
    for (DartId x = 0; x < g.num_darts(); ++x) {
        const VertexId v = g.incidence(x);
        const DartId y = g.pairing_map()[x];
        const VertexId w = g.incidence(y);
        if (in_s[v] && (y == x || in_s[w])) {
            return false;
        }
        if (!in_s[v] && y != x && in_s[w]) {
            ++hits[v];
        }
    }
    for (VertexId v = 0; v < g.num_vertices(); ++v) {
        if (!in_s[v] && hits[v] != r) {
            return false;
        }
    }
    return true;
}

/// Every subset of V, no size pruning, lexicographic as sorted vertex lists.
inline std::vector<std::vector<VertexId>> all_exact_covers(const GeneralizedGraph& g, std::size_t r) {
    const std::size_t n = g.num_vertices();
    std::vector<std::vector<VertexId>> out;
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
        std::vector<bool> in_s(n);
        std::vector<VertexId> subset;
        for (VertexId v = 0; v < n; ++v) {
            if (mask >> v & 1) {
                in_s[v] = true;
                subset.push_back(v);
            }
        }
        if (is_exact_cover(g, in_s, r)) {
            out.push_back(std::move(subset));
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

/// Smallest m >= 1 with c * m = 0 mod modulus, by scanning.
inline std::optional<std::uint64_t> scan_multiplier(std::uint64_t c, std::uint64_t modulus,
                                                   std::uint64_t limit) {
    for (std::uint64_t m = 1; m <= limit; ++m) {
        if ((c % modulus) * (m % modulus) % modulus == 0) {
            return m;
        }
    }
    return std::nullopt;
}

// ---- small simple regular graphs, up to isomorphism

using Adjacency = std::vector<std::vector<bool>>;

inline Adjacency adjacency(const GeneralizedGraph& g) {
    Adjacency a(g.num_vertices(), std::vector<bool>(g.num_vertices(), false));
    for (DartId x = 0; x < g.num_darts(); ++x) {
        a[g.incidence(x)][g.incidence(g.mate(x))] = true;
    }
    return a;
}

inline bool isomorphic(const Adjacency& a, const Adjacency& b) {
    const std::size_t n = a.size();
    if (b.size() != n) {
        return false;
    }
    std::vector<int> map(n, -1);
    std::vector<bool> used(n, false);
    auto extend = [&](auto&& self, std::size_t v) -> bool {
        if (v == n) {
            return true;
        }
        for (std::size_t w = 0; w < n; ++w) {
            if (used[w]) {
                continue;
            }
            bool fits = true;
            for (std::size_t u = 0; u < v && fits; ++u) {
                fits = a[u][v] == b[static_cast<std::size_t>(map[u])][w];
            }
            if (!fits) {
                continue;
            }
            map[v] = static_cast<int>(w);
            used[w] = true;
            if (self(self, v + 1)) {
                return true;
            }
            used[w] = false;
        }
        return false;
    };
    return extend(extend, 0);
}

/// All simple d-regular graphs on n vertices, one per isomorphism class.
inline std::vector<GeneralizedGraph> regular_graphs(std::size_t n, std::size_t d) {
    std::vector<std::pair<std::uint32_t, std::uint32_t>> slots;
    for (std::uint32_t i = 0; i < n; ++i) {
        for (std::uint32_t j = i + 1; j < n; ++j) {
            slots.emplace_back(i, j);
        }
    }
    std::vector<std::size_t> deg(n, 0);
    std::vector<indcover::VertexPair> chosen;
    std::vector<GeneralizedGraph> reps;
    std::vector<Adjacency> rep_adj;
    auto rec = [&](auto&& self, std::size_t k) -> void {
        if (k == slots.size()) {
            if (std::all_of(deg.begin(), deg.end(), [&](std::size_t x) { return x == d; })) {
                auto g = indcover::from_edges(n, chosen);
                auto a = adjacency(g);
                for (const auto& other : rep_adj) {
                    if (isomorphic(a, other)) {
                        return;
                    }
                }
                rep_adj.push_back(std::move(a));
                reps.push_back(std::move(g));
            }
            return;
        }
        const auto [u, v] = slots[k];
        // vertex u has no slots left after its last partner n - 1
        if (v == n - 1 && deg[u] + 1 < d) {
            return;
        }
        if (deg[u] < d && deg[v] < d) {
            ++deg[u];
            ++deg[v];
            chosen.emplace_back(u, v);
            self(self, k + 1);
            chosen.pop_back();
            --deg[u];
            --deg[v];
        }
        if (v == n - 1 && deg[u] < d) {
            return;
        }
        self(self, k + 1);
    };
    rec(rec, 0);
    return reps;
}

/// All size-k subsets of [0, n) in lexicographic order.
inline std::vector<std::vector<VertexId>> subsets_of_size(std::size_t n, std::size_t k) {
    std::vector<std::vector<VertexId>> out;
    std::vector<VertexId> cur(k);
    std::iota(cur.begin(), cur.end(), 0);
    if (k > n) {
        return out;
    }
    while (true) {
        out.push_back(cur);
        std::size_t i = k;
        while (i > 0 && cur[i - 1] == n - k + i - 1) {
            --i;
        }
        if (i == 0) {
            return out;
        }
        ++cur[i - 1];
        for (std::size_t j = i; j < k; ++j) {
            cur[j] = cur[j - 1] + 1;
        }
    }
}

}  // namespace oracle
