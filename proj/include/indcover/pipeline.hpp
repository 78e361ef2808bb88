#pragma once

// d-regular simple graphs carrying an independent exact r-cover for every
// r in [1, d], assembled as common coverings of one small factor per r.

#include "indcover/atlas.hpp"
#include "indcover/covering.hpp"
#include "indcover/exact.hpp"

#include <string_view>
#include <vector>

namespace indcover {

enum class Strategy {
    minimal,         // (d + r) / gcd(d, r) vertices per factor
    simple_factors,  // d + r vertices per factor, all loop- and multi-edge-free
};

std::string_view to_string(Strategy s);
Strategy parse_strategy(std::string_view name);

struct BuildResult {
    GraphPtr graph;
    std::vector<CoverCertificate> covers;  // covers[r - 1] has parameter r
    std::vector<CoveringMap> projections;  // onto factor_list, same order
    std::vector<AtlasEntry> factor_list;
};

/// Degrees at or above this need allow_large.
inline constexpr std::size_t kLargeDegree = 7;

/// One factor per r = 1..d, the simple K_{d+1} first. Minimal picks the
/// smallest known factor for each r: the dipole for r = d, the compressed
/// graph when gcd(d, r) > 1, the d + r vertex graph otherwise.
std::vector<AtlasEntry> factor_list(std::size_t d, Strategy strategy);

/// Common covering of the factors with every factor cover lifted onto it.
/// Factors must share one degree and jointly supply r = 1..d exactly once.
BuildResult build_from_factors(std::vector<AtlasEntry> factors);

BuildResult build_all_covers(std::size_t d, Strategy strategy, bool allow_large = false);

/// Product of the factor orders.
BigInt vertex_count(std::size_t d, Strategy strategy);

struct BuildCheck {
    bool ok = true;
    std::vector<std::string> problems;
};

/// Simple, d-regular, every cover and every projection verifies.
BuildCheck check_build(const BuildResult& result);

}  // namespace indcover
