#pragma once

// Lower bounds on the order n of a d-regular graph with an independent
// exact r-cover for every r in [1, d], from the divisibility forced by
// cover sizes and by pairwise and triple intersections, and the exact
// upper bounds of the product construction.

#include "indcover/cover.hpp"
#include "indcover/exact.hpp"
#include "indcover/ggraph.hpp"

#include <string>
#include <vector>

namespace indcover {

struct ForcedDivisor {
    std::size_t r1 = 0;
    std::size_t r2 = 0;
    BigInt divisor;
};

struct BoundReport {
    std::size_t d = 0;
    BigInt star_lcm;                               // lcm over r of (d + r) / gcd(d, r)
    std::vector<ForcedDivisor> single_constraints; // r2 = 0
    std::vector<ForcedDivisor> pair_constraints;
    std::vector<ForcedDivisor> triple_constraints; // third cover has r = d
    BigInt combined_lb;
    Rat diamond_lb;
    BigInt construction_ub_simple;
    BigInt construction_ub_minimal;
};

/// Smallest m >= 1 with (coefficient * m) divisible by modulus.
BigInt smallest_multiplier(const BigInt& coefficient, const BigInt& modulus);

BoundReport divisibility_lower_bound(std::size_t d);

/// 2 L / d^2 with L = lcm{(d + r1)(d + r2) : 0 <= r1 < r2 <= d}.
Rat diamond_bound(std::size_t d);

struct ExactBounds {
    Rat diamond_lb;
    BigInt ub_simple;
    BigInt ub_minimal;
    // (log N) / d for each bound, display only
    std::string log_ratio_diamond;
    std::string log_ratio_simple;
    std::string log_ratio_minimal;
};

ExactBounds exact_bound_values(std::size_t d);

enum class IntersectionKind { pair, triple_with_d, triple_independence };

struct IntersectionLine {
    IntersectionKind kind;
    std::vector<std::size_t> rs;
    BigInt actual;
    Rat expected;
    bool holds = false;
    bool asserted = false;  // informational lines never fail the report
};

struct IntersectionReport {
    bool ok = true;
    std::vector<IntersectionLine> lines;
};

/// Pairwise law for every r1 != r2, the triple law whenever an exact d-cover
/// is present, and (informational) the naive independence product for
/// every triple that does not involve d. Throws GraphError on a certificate
/// that does not verify.
IntersectionReport check_intersections(const GeneralizedGraph& g,
                                       const std::vector<CoverCertificate>& covers);

std::string to_json(const BoundReport& report);

}  // namespace indcover
