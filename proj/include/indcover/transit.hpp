#pragma once

// Exact 2-step transit probabilities of a uniform random walk on a
// 2-coloured regular simple graph, and the convex region D_d that contains
// every attainable pair.

#include "indcover/cover.hpp"
#include "indcover/exact.hpp"
#include "indcover/ggraph.hpp"

#include <utility>
#include <vector>

namespace indcover {

using RatPoint = std::pair<Rat, Rat>;

/// (P2(R), P2(B)): the walk starts at a uniform vertex of R (resp. B = V \ R)
/// and both following steps must stay in the starting colour. Requires a
/// simple regular graph with |R| = n / 2.
RatPoint transit_probabilities(const GeneralizedGraph& g, const std::vector<VertexId>& red);

/// Same quantities through the serial reference kernels.
RatPoint transit_probabilities_serial(const GeneralizedGraph& g, const std::vector<VertexId>& red);

struct ExtremePointInstance {
    GeneralizedGraph graph;     // 2d disjoint copies
    std::vector<VertexId> red;  // d - r whole copies, then the cover in the other d + r
};

ExtremePointInstance extreme_point_construction(const GeneralizedGraph& g, const CoverCertificate& c);

struct RegionDd {
    std::size_t d = 0;
    std::vector<RatPoint> hull_vertices;  // counterclockwise, starting at (0, 0)
};

RegionDd region(std::size_t d);

/// Closed convex hull membership, exact.
bool in_region(const RatPoint& p, std::size_t d);
bool in_region(const RatPoint& p, const RegionDd& region);

}  // namespace indcover
