#include "indcover/cover.hpp"

#include "indcover/kernels.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace indcover {

namespace {

constexpr std::size_t kMaxReportedFailures = 10;

void check_certificate(const GeneralizedGraph& g, const CoverCertificate& c) {
    if (c.r < 1 || c.r > c.d) {
        throw GraphError("cover parameter r = " + std::to_string(c.r) + " outside [1, d]");
    }
    for (std::size_t i = 0; i < c.subset.size(); ++i) {
        if (c.subset[i] >= g.num_vertices()) {
            throw GraphError("cover vertex " + std::to_string(c.subset[i]) + " out of range");
        }
        if (i > 0 && c.subset[i] <= c.subset[i - 1]) {
            throw GraphError("cover subset is not strictly increasing");
        }
    }
    const auto deg = classify(g).regular_degree;
    if (!deg || *deg != c.d) {
        throw GraphError("graph is not regular of claimed degree " + std::to_string(c.d));
    }
}

std::string describe_inside(const GeneralizedGraph& g, VertexId v,
                            const std::vector<std::uint8_t>& mask) {
    for (DartId x : g.darts_at(v)) {
        if (g.is_semi_edge(x)) {
            return "semi-edge at cover vertex";
        }
        if (g.is_loop_dart(x)) {
            return "loop at cover vertex";
        }
        if (mask[g.incidence(g.mate(x))]) {
            return "edge to cover vertex " + std::to_string(g.incidence(g.mate(x)));
        }
    }
    return "unknown";
}

CoverReport report_from_tallies(const GeneralizedGraph& g, const CoverCertificate& c,
                                const std::vector<std::uint8_t>& mask,
                                const std::vector<kernels::CoverTally>& tallies) {
    CoverReport report;
    for (VertexId v = 0; v < g.num_vertices(); ++v) {
        const auto& t = tallies[v];
        std::string reason;
        if (mask[v]) {
            if (t.to_set != 0 || t.semis != 0) {
                reason = describe_inside(g, v, mask);
            }
        } else if (t.to_set != c.r) {
            reason = "sends " + std::to_string(t.to_set) + " edges into the cover, expected " +
                     std::to_string(c.r);
        }
        if (!reason.empty()) {
            report.ok = false;
            if (report.failures.size() < kMaxReportedFailures) {
                report.failures.push_back({v, std::move(reason)});
            }
        }
    }
    return report;
}

}  // namespace

std::vector<std::uint8_t> membership_mask(std::size_t n, const std::vector<VertexId>& subset) {
    std::vector<std::uint8_t> mask(n, 0);
    for (VertexId v : subset) {
        if (v >= n) {
            throw GraphError("vertex " + std::to_string(v) + " out of range");
        }
        mask[v] = 1;
    }
    return mask;
}

CoverReport verify_cover(const GeneralizedGraph& g, const CoverCertificate& c) {
    check_certificate(g, c);
    const auto mask = membership_mask(g.num_vertices(), c.subset);
    return report_from_tallies(g, c, mask, kernels::tally_cover(g, mask));
}

CoverReport verify_cover_serial(const GeneralizedGraph& g, const CoverCertificate& c) {
    check_certificate(g, c);
    const auto mask = membership_mask(g.num_vertices(), c.subset);
    return report_from_tallies(g, c, mask, kernels::serial::tally_cover(g, mask));
}

std::optional<std::size_t> exact_cover_size(std::size_t n, std::size_t d, std::size_t r) {
    if ((r * n) % (d + r) != 0) {
        return std::nullopt;
    }
    return r * n / (d + r);
}

std::vector<CoverCertificate> enumerate_covers(const GeneralizedGraph& g, std::size_t r) {
    const std::size_t n = g.num_vertices();
    if (n > kMaxEnumerationVertices) {
        throw GraphError("graph too large for exhaustive cover enumeration");
    }
    const std::size_t d = regular_degree_or_throw(g);
    if (r < 1 || r > d) {
        throw GraphError("cover parameter r outside [1, d]");
    }
    const auto size = exact_cover_size(n, d, r);
    std::vector<CoverCertificate> found;
    if (!size || *size == 0 || *size > n) {
        return found;
    }

    // neighbour lists with multiplicity; a vertex carrying a loop or a
    // semi-edge can never belong to an independent set
    std::vector<std::vector<VertexId>> nbrs(n);
    std::vector<bool> blocked(n, false);
    for (DartId x = 0; x < g.num_darts(); ++x) {
        if (g.is_ordinary_dart(x)) {
            nbrs[g.incidence(x)].push_back(g.incidence(g.mate(x)));
        } else {
            blocked[g.incidence(x)] = true;
        }
    }

    const std::size_t k = *size;
    std::vector<VertexId> pick(k);
    std::iota(pick.begin(), pick.end(), VertexId{0});
    std::uint32_t mask = 0;
    while (true) {
        mask = 0;
        for (VertexId v : pick) {
            mask |= 1u << v;
        }
        bool ok = true;
        for (VertexId v = 0; v < n && ok; ++v) {
            std::size_t into = 0;
            for (VertexId w : nbrs[v]) {
                into += (mask >> w) & 1u;
            }
            ok = ((mask >> v) & 1u) ? (!blocked[v] && into == 0) : into == r;
        }
        if (ok) {
            found.push_back({pick, r, d});
        }

        // next k-combination of [0, n) in lexicographic order
        std::size_t i = k;
        while (i > 0 && pick[i - 1] == n - k + i - 1) {
            --i;
        }
        if (i == 0) {
            break;
        }
        ++pick[i - 1];
        for (std::size_t j = i; j < k; ++j) {
            pick[j] = pick[j - 1] + 1;
        }
    }
    return found;
}

}  // namespace indcover
