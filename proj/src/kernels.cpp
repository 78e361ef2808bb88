#include "indcover/kernels.hpp"

#include <algorithm>
#include <cstdint>

namespace indcover::kernels {

namespace {

// Images of darts at v must all sit at one target vertex and hit each of
// its darts exactly once. `scratch` is reused across calls.
bool neighbourhood_ok(const GeneralizedGraph& source, const GeneralizedGraph& target,
                      std::span<const DartId> dart_map, VertexId v, std::vector<DartId>& scratch) {
    const auto darts = source.darts_at(v);
    if (darts.empty()) {
        return true;
    }
    const VertexId w = target.incidence(dart_map[darts.front()]);
    if (target.darts_at(w).size() != darts.size()) {
        return false;
    }
    scratch.clear();
    for (DartId x : darts) {
        const DartId image = dart_map[x];
        if (target.incidence(image) != w) {
            return false;
        }
        scratch.push_back(image);
    }
    std::sort(scratch.begin(), scratch.end());
    return std::adjacent_find(scratch.begin(), scratch.end()) == scratch.end();
}

bool dart_map_in_range(const GeneralizedGraph& target, std::span<const DartId> dart_map) {
    return std::all_of(dart_map.begin(), dart_map.end(),
                       [&](DartId t) { return t < target.num_darts(); });
}

}  // namespace

std::vector<CoverTally> tally_cover(const GeneralizedGraph& g, std::span<const std::uint8_t> in_set) {
    const auto n = static_cast<std::int64_t>(g.num_vertices());
    std::vector<CoverTally> out(g.num_vertices());
#pragma omp parallel for schedule(static)
    for (std::int64_t v = 0; v < n; ++v) {
        CoverTally t;
        for (DartId x : g.darts_at(static_cast<VertexId>(v))) {
            const DartId y = g.mate(x);
            if (y == x) {
                ++t.semis;
            } else if (in_set[g.incidence(y)]) {
                ++t.to_set;
            }
        }
        out[v] = t;
    }
    return out;
}

std::size_t first_bad_neighbourhood(const GeneralizedGraph& source, const GeneralizedGraph& target,
                                    std::span<const DartId> dart_map) {
    if (!dart_map_in_range(target, dart_map)) {
        return 0;
    }
    const auto n = static_cast<std::int64_t>(source.num_vertices());
    std::int64_t first = n;
#pragma omp parallel
    {
        std::vector<DartId> scratch;
#pragma omp for schedule(static) reduction(min : first)
        for (std::int64_t v = 0; v < n; ++v) {
            if (v < first &&
                !neighbourhood_ok(source, target, dart_map, static_cast<VertexId>(v), scratch)) {
                first = v;
            }
        }
    }
    return static_cast<std::size_t>(first);
}

std::size_t first_bad_pairing(const GeneralizedGraph& source, const GeneralizedGraph& target,
                              std::span<const DartId> dart_map) {
    const auto m = static_cast<std::int64_t>(source.num_darts());
    std::int64_t first = m;
#pragma omp parallel for schedule(static) reduction(min : first)
    for (std::int64_t x = 0; x < m; ++x) {
        if (x < first && !pairing_compatible(source, target, dart_map, static_cast<DartId>(x))) {
            first = x;
        }
    }
    return static_cast<std::size_t>(first);
}

std::size_t first_unhit_dart(std::size_t target_darts, std::span<const DartId> dart_map) {
    std::vector<std::uint8_t> hit(target_darts, 0);
    const auto m = static_cast<std::int64_t>(dart_map.size());
#pragma omp parallel for schedule(static)
    for (std::int64_t x = 0; x < m; ++x) {
        const DartId t = dart_map[x];
        if (t < target_darts) {
#pragma omp atomic write
            hit[t] = 1;
        }
    }
    return static_cast<std::size_t>(std::find(hit.begin(), hit.end(), 0) - hit.begin());
}

std::vector<std::uint32_t> neighbours_in_set(const GeneralizedGraph& g,
                                             std::span<const std::uint8_t> in_set) {
    const auto n = static_cast<std::int64_t>(g.num_vertices());
    std::vector<std::uint32_t> out(g.num_vertices(), 0);
#pragma omp parallel for schedule(static)
    for (std::int64_t v = 0; v < n; ++v) {
        std::uint32_t count = 0;
        for (DartId x : g.darts_at(static_cast<VertexId>(v))) {
            count += in_set[g.incidence(g.mate(x))];
        }
        out[v] = count;
    }
    return out;
}

std::uint64_t two_step_walks_within(const GeneralizedGraph& g, std::span<const std::uint8_t> in_set) {
    // Every v1 in R is entered from |N(v1) ∩ R| starting points and left
    // towards |N(v1) ∩ R| endpoints, so the count is a sum of squares.
    const auto counts = neighbours_in_set(g, in_set);
    const auto n = static_cast<std::int64_t>(g.num_vertices());
    std::uint64_t total = 0;
#pragma omp parallel for schedule(static) reduction(+ : total)
    for (std::int64_t v = 0; v < n; ++v) {
        if (in_set[v]) {
            total += static_cast<std::uint64_t>(counts[v]) * counts[v];
        }
    }
    return total;
}

namespace serial {

std::vector<CoverTally> tally_cover(const GeneralizedGraph& g, std::span<const std::uint8_t> in_set) {
    std::vector<CoverTally> out(g.num_vertices());
    for (DartId x = 0; x < g.num_darts(); ++x) {
        auto& t = out[g.incidence(x)];
        if (g.is_semi_edge(x)) {
            ++t.semis;
        } else if (in_set[g.incidence(g.mate(x))]) {
            ++t.to_set;
        }
    }
    return out;
}

std::size_t first_bad_neighbourhood(const GeneralizedGraph& source, const GeneralizedGraph& target,
                                    std::span<const DartId> dart_map) {
    if (!dart_map_in_range(target, dart_map)) {
        return 0;
    }
    std::vector<DartId> scratch;
    for (VertexId v = 0; v < source.num_vertices(); ++v) {
        if (!neighbourhood_ok(source, target, dart_map, v, scratch)) {
            return v;
        }
    }
    return source.num_vertices();
}

std::size_t first_bad_pairing(const GeneralizedGraph& source, const GeneralizedGraph& target,
                              std::span<const DartId> dart_map) {
    for (DartId x = 0; x < source.num_darts(); ++x) {
        if (!pairing_compatible(source, target, dart_map, x)) {
            return x;
        }
    }
    return source.num_darts();
}

std::size_t first_unhit_dart(std::size_t target_darts, std::span<const DartId> dart_map) {
    std::vector<bool> hit(target_darts, false);
    for (DartId t : dart_map) {
        if (t < target_darts) {
            hit[t] = true;
        }
    }
    for (std::size_t t = 0; t < target_darts; ++t) {
        if (!hit[t]) {
            return t;
        }
    }
    return target_darts;
}

std::vector<std::uint32_t> neighbours_in_set(const GeneralizedGraph& g,
                                             std::span<const std::uint8_t> in_set) {
    std::vector<std::uint32_t> out(g.num_vertices(), 0);
    for (DartId x = 0; x < g.num_darts(); ++x) {
        if (in_set[g.incidence(g.mate(x))]) {
            ++out[g.incidence(x)];
        }
    }
    return out;
}

std::uint64_t two_step_walks_within(const GeneralizedGraph& g, std::span<const std::uint8_t> in_set) {
    // literal walk enumeration
    std::uint64_t total = 0;
    for (VertexId v0 = 0; v0 < g.num_vertices(); ++v0) {
        if (!in_set[v0]) {
            continue;
        }
        for (DartId x : g.darts_at(v0)) {
            const VertexId v1 = g.incidence(g.mate(x));
            if (!in_set[v1]) {
                continue;
            }
            for (DartId y : g.darts_at(v1)) {
                total += in_set[g.incidence(g.mate(y))];
            }
        }
    }
    return total;
}

}  // namespace serial

}  // namespace indcover::kernels
