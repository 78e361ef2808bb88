#include "indcover/transit.hpp"

#include "indcover/kernels.hpp"

#include <algorithm>
#include <string>

namespace indcover {

namespace {

using KernelWalks = std::uint64_t (*)(const GeneralizedGraph&, std::span<const std::uint8_t>);

RatPoint transit_with(const GeneralizedGraph& g, const std::vector<VertexId>& red, KernelWalks walks) {
    const auto cls = classify(g);
    if (!cls.simple()) {
        throw GraphError("transit probabilities are defined on simple graphs only");
    }
    if (!cls.regular_degree || *cls.regular_degree == 0) {
        throw GraphError("transit probabilities need a regular graph of positive degree");
    }
    const std::size_t n = g.num_vertices();
    auto mask = membership_mask(n, red);
    const auto red_count = static_cast<std::size_t>(std::count(mask.begin(), mask.end(), 1));
    if (n % 2 != 0 || red_count != red.size() || 2 * red_count != n) {
        throw GraphError("colouring is not balanced");
    }
    std::vector<std::uint8_t> blue(n);
    for (std::size_t v = 0; v < n; ++v) {
        blue[v] = mask[v] ? 0 : 1;
    }
    const unsigned long d = *cls.regular_degree;
    const BigInt denominator = BigInt(static_cast<unsigned long>(red_count)) * d * d;
    auto as_big = [](std::uint64_t x) {
        BigInt out;
        mpz_import(out.get_mpz_t(), 1, 1, sizeof x, 0, 0, &x);
        return out;
    };
    return {make_rat(as_big(walks(g, mask)), denominator), make_rat(as_big(walks(g, blue)), denominator)};
}

Rat cross(const RatPoint& o, const RatPoint& a, const RatPoint& b) {
    return (a.first - o.first) * (b.second - o.second) - (a.second - o.second) * (b.first - o.first);
}

}  // namespace

RatPoint transit_probabilities(const GeneralizedGraph& g, const std::vector<VertexId>& red) {
    return transit_with(g, red, kernels::two_step_walks_within);
}

RatPoint transit_probabilities_serial(const GeneralizedGraph& g, const std::vector<VertexId>& red) {
    return transit_with(g, red, kernels::serial::two_step_walks_within);
}

ExtremePointInstance extreme_point_construction(const GeneralizedGraph& g, const CoverCertificate& c) {
    const auto report = verify_cover(g, c);
    if (!report.ok) {
        throw GraphError("certificate does not verify at vertex " +
                         std::to_string(report.failures.front().vertex));
    }
    const std::size_t n = g.num_vertices();
    ExtremePointInstance out{disjoint_copies(g, 2 * c.d), {}};
    for (std::size_t k = 0; k < 2 * c.d; ++k) {
        const auto offset = static_cast<VertexId>(k * n);
        if (k < c.d - c.r) {
            for (VertexId v = 0; v < n; ++v) {
                out.red.push_back(offset + v);
            }
        } else {
            for (VertexId v : c.subset) {
                out.red.push_back(offset + v);
            }
        }
    }
    return out;
}

RegionDd region(std::size_t d) {
    if (d < 1) {
        throw GraphError("degree must be at least 1");
    }
    std::vector<RatPoint> pts{{Rat(0), Rat(0)}, {Rat(1), Rat(1)}};
    for (std::size_t l = 1; l < d; ++l) {
        const Rat x = make_rat(static_cast<unsigned long>(l), static_cast<unsigned long>(d));
        pts.push_back({x, x * x});
        pts.push_back({x * x, x});
    }
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

    RatPoint centroid{Rat(0), Rat(0)};
    for (const auto& p : pts) {
        centroid.first += p.first;
        centroid.second += p.second;
    }
    centroid.first /= static_cast<long>(pts.size());
    centroid.second /= static_cast<long>(pts.size());

    // angular order around the centroid, exact: half-plane, then cross sign
    auto half = [&](const RatPoint& p) {
        const Rat dy = p.second - centroid.second;
        const Rat dx = p.first - centroid.first;
        return dy < 0 || (dy == 0 && dx < 0);
    };
    std::sort(pts.begin(), pts.end(), [&](const RatPoint& a, const RatPoint& b) {
        const bool ha = half(a);
        const bool hb = half(b);
        if (ha != hb) {
            return !ha;
        }
        return cross(centroid, a, b) > 0;
    });
    // rotate so the hull starts at the origin
    const auto origin = std::find(pts.begin(), pts.end(), RatPoint{Rat(0), Rat(0)});
    std::rotate(pts.begin(), origin, pts.end());

    bool changed = pts.size() > 2;
    while (changed && pts.size() > 2) {
        changed = false;
        for (std::size_t i = 0; i < pts.size(); ++i) {
            const auto& prev = pts[(i + pts.size() - 1) % pts.size()];
            const auto& next = pts[(i + 1) % pts.size()];
            if (cross(prev, pts[i], next) <= 0) {
                pts.erase(pts.begin() + static_cast<std::ptrdiff_t>(i));
                changed = true;
                break;
            }
        }
    }
    return {d, std::move(pts)};
}

bool in_region(const RatPoint& p, const RegionDd& reg) {
    const auto& h = reg.hull_vertices;
    if (h.size() == 2) {
        // degenerate hull: the segment between the two vertices
        if (cross(h[0], h[1], p) != 0) {
            return false;
        }
        const auto [xlo, xhi] = std::minmax(h[0].first, h[1].first);
        const auto [ylo, yhi] = std::minmax(h[0].second, h[1].second);
        return xlo <= p.first && p.first <= xhi && ylo <= p.second && p.second <= yhi;
    }
    for (std::size_t i = 0; i < h.size(); ++i) {
        if (cross(h[i], h[(i + 1) % h.size()], p) < 0) {
            return false;
        }
    }
    return true;
}

bool in_region(const RatPoint& p, std::size_t d) { return in_region(p, region(d)); }

}  // namespace indcover
