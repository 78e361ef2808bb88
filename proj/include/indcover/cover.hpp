#pragma once

// Independent exact r-covers: a vertex set S with no loop, semi-edge or
// ordinary edge inside it, such that every vertex outside S sends exactly
// r ordinary edges into S. In a d-regular graph |S| = r n / (d + r).

#include "indcover/ggraph.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace indcover {

struct CoverCertificate {
    std::vector<VertexId> subset;  // strictly increasing
    std::size_t r = 0;
    std::size_t d = 0;

    bool operator==(const CoverCertificate&) const = default;
};

struct CoverFailure {
    VertexId vertex;
    std::string reason;
};

struct CoverReport {
    bool ok = true;
    std::vector<CoverFailure> failures;  // first offenders, ascending vertex order
};

/// Throws GraphError if the certificate is malformed or g is not regular of degree c.d.
CoverReport verify_cover(const GeneralizedGraph& g, const CoverCertificate& c);

/// Serial reference path (same contract as verify_cover).
CoverReport verify_cover_serial(const GeneralizedGraph& g, const CoverCertificate& c);

/// r n / (d + r) when it is an integer.
std::optional<std::size_t> exact_cover_size(std::size_t n, std::size_t d, std::size_t r);

inline constexpr std::size_t kMaxEnumerationVertices = 24;

/// All independent exact r-covers, lexicographic. Only subsets of the size
/// forced by the double count are examined.
std::vector<CoverCertificate> enumerate_covers(const GeneralizedGraph& g, std::size_t r);

/// Byte mask of length n with 1 on the subset.
std::vector<std::uint8_t> membership_mask(std::size_t n, const std::vector<VertexId>& subset);

}  // namespace indcover
