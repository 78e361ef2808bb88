#pragma once

// Splitting a regular generalized graph into a 1-factors and b oriented
// 2-factors, the input shape required by the common-covering product.

#include "indcover/ggraph.hpp"

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace indcover {

/// Colour classes [0, a) are 1-factors (one dart per vertex, semi-edges
/// allowed); classes [a, a + b) are 2-factors with one forward and one
/// backward dart at every vertex.
struct Factorization {
    std::size_t a = 0;
    std::size_t b = 0;
    std::vector<std::uint32_t> color;
    std::vector<std::uint8_t> forward;  // meaningful only where color >= a

    std::size_t num_classes() const { return a + b; }
    bool operator==(const Factorization&) const = default;
};

/// Per-vertex successor tables derived from a valid factorization.
/// step[j][v] is the neighbour reached along class j (v itself across a
/// semi-edge); for 2-factor classes back[j][v] is the inverse step.
/// out_dart[j][v] is the class-j dart leaving v (the forward one for 2-factors)
/// and in_dart[j][v] the backward one.
struct Orientation {
    std::vector<std::vector<VertexId>> step;
    std::vector<std::vector<VertexId>> back;
    std::vector<std::vector<DartId>> out_dart;
    std::vector<std::vector<DartId>> in_dart;
};

/// Empty string when f satisfies every factorization invariant on g,
/// otherwise a description of the first violation.
std::string factorization_violation(const GeneralizedGraph& g, const Factorization& f);

/// Throws GraphError on an invalid factorization.
Orientation orient(const GeneralizedGraph& g, const Factorization& f);

/// Closed trails covering every pairing orbit once, one per component with
/// edges. Each entry is the dart used to leave the current vertex.
std::vector<std::vector<DartId>> euler_orientation(const GeneralizedGraph& g);

struct BipartiteMultigraph {
    std::size_t n_left = 0;
    std::size_t n_right = 0;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;  // (left, right)
};

/// k edge-disjoint perfect matchings (lists of edge indices) partitioning a
/// k-regular bipartite multigraph.
std::vector<std::vector<std::size_t>> bipartite_matching_decomposition(const BipartiteMultigraph& b);

/// a = 0, b = d / 2. Requires even degree and no semi-edges.
Factorization two_factorize(const GeneralizedGraph& g);

/// a = 1 with `matching` as class 0, b = (d - 1) / 2. The matching must be a
/// 1-factor closed under pairing that contains every semi-edge.
Factorization factorize_with_matching(const GeneralizedGraph& g, const std::vector<DartId>& matching);

/// Empty when `matching` is a 1-factor of g containing every semi-edge.
std::string one_factor_violation(const GeneralizedGraph& g, const std::vector<DartId>& matching);

}  // namespace indcover
