#pragma once

// Small regular graphs that each carry one independent exact r-cover, the
// standard generators used to build them, and the 2184-vertex graph whose
// three covers intersect non-independently.

#include "indcover/cover.hpp"
#include "indcover/covering.hpp"
#include "indcover/ggraph.hpp"

#include <array>
#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

namespace indcover {

enum class ConstructionCase {
    simple1,
    simple2,
    simple3,
    compress1,
    compress2,
    compress3,
    dipole,
    complete,
};

std::string_view to_string(ConstructionCase c);

struct AtlasEntry {
    GraphPtr graph;
    CoverCertificate cover;
    std::optional<std::vector<DartId>> matching;  // present iff d is odd
    ConstructionCase construction_case = ConstructionCase::complete;
};

GeneralizedGraph complete_graph(std::size_t k);

/// Cayley graph of Z/n with the connection set closed under negation.
GeneralizedGraph circulant(std::size_t n, const std::vector<long>& generators);

/// Each ordinary edge replaced by k consecutive parallel copies.
GeneralizedGraph multiply_edges(const GeneralizedGraph& g, std::size_t k);

GeneralizedGraph dipole(std::size_t d);

/// d + r vertices: A = [0, d) joined completely to S = [d, d + r), plus a
/// (d - r)-regular circulant-based structure on A. No loops, no multiple
/// edges; at most one semi-edge (d odd, r even).
AtlasEntry small_graph(std::size_t d, std::size_t r);

/// (d + r) / gcd(d, r) vertices: the same shape built at degree d / k with
/// every edge k-fold, keeping the single semi-edge unduplicated.
AtlasEntry compressed_graph(std::size_t d, std::size_t r);

/// K_{d+1} with S = {d} at r = 1, and a perfect matching when d is odd.
AtlasEntry complete_entry(std::size_t d);

/// Dipole D_d with S = {1} at r = d.
AtlasEntry dipole_entry(std::size_t d);

/// Edges (left, right) of a greedy biregular bipartite realization; left
/// vertex i takes the dL right vertices of largest remaining capacity.
std::vector<std::pair<std::uint32_t, std::uint32_t>> biregular_edges(std::size_t n_left,
                                                                    std::size_t n_right,
                                                                    std::size_t d_left,
                                                                    std::size_t d_right);

/// Simple bipartite graph on n_left + n_right vertices (left first).
GeneralizedGraph biregular_bipartite(std::size_t n_left, std::size_t n_right, std::size_t d_left,
                                     std::size_t d_right);

struct ThreeCoverExample {
    GraphPtr graph;
    std::array<CoverCertificate, 3> covers;  // r = 77, 21, 35
    std::array<std::size_t, 8> class_sizes;
    std::array<std::size_t, 8> class_offsets;
};

/// 105-regular graph on 2184 vertices with S2 ∩ S3 contained in S1.
ThreeCoverExample example_three_cover();

}  // namespace indcover
