#pragma once

// Data-parallel inner loops shared by the verifiers. Each kernel has an
// OpenMP implementation (used by the library) and a plain serial reference
// in `serial::` kept for differential tests and the benchmark.
//
// Vertex sets are passed as byte masks of length |V|.

#include "indcover/ggraph.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace indcover::kernels {

struct CoverTally {
    /// Darts at v whose mate is a different dart incident to the set.
    std::uint32_t to_set = 0;
    std::uint32_t semis = 0;

    bool operator==(const CoverTally&) const = default;
};

std::vector<CoverTally> tally_cover(const GeneralizedGraph& g, std::span<const std::uint8_t> in_set);

/// Smallest source vertex whose dart images are not a bijection onto the
/// dart neighbourhood of a single target vertex; |V(source)| when none.
std::size_t first_bad_neighbourhood(const GeneralizedGraph& source, const GeneralizedGraph& target,
                                    std::span<const DartId> dart_map);

/// Smallest source dart breaking pairing compatibility; |D(source)| when none.
std::size_t first_bad_pairing(const GeneralizedGraph& source, const GeneralizedGraph& target,
                              std::span<const DartId> dart_map);

/// Smallest target dart not in the image; |D(target)| when none.
std::size_t first_unhit_dart(std::size_t target_darts, std::span<const DartId> dart_map);

/// |N(v) ∩ R| for every v (simple graphs, so darts and neighbours coincide).
std::vector<std::uint32_t> neighbours_in_set(const GeneralizedGraph& g,
                                             std::span<const std::uint8_t> in_set);

/// Number of two-step walks v0 -> v1 -> v2 with all three vertices in R.
std::uint64_t two_step_walks_within(const GeneralizedGraph& g, std::span<const std::uint8_t> in_set);

namespace serial {

std::vector<CoverTally> tally_cover(const GeneralizedGraph& g, std::span<const std::uint8_t> in_set);
std::size_t first_bad_neighbourhood(const GeneralizedGraph& source, const GeneralizedGraph& target,
                                    std::span<const DartId> dart_map);
std::size_t first_bad_pairing(const GeneralizedGraph& source, const GeneralizedGraph& target,
                              std::span<const DartId> dart_map);
std::size_t first_unhit_dart(std::size_t target_darts, std::span<const DartId> dart_map);
std::vector<std::uint32_t> neighbours_in_set(const GeneralizedGraph& g,
                                             std::span<const std::uint8_t> in_set);
std::uint64_t two_step_walks_within(const GeneralizedGraph& g, std::span<const std::uint8_t> in_set);

}  // namespace serial

/// Pairing compatibility for one dart: paired darts map to paired darts,
/// or both onto one semi-edge; semi-edges map to semi-edges.
inline bool pairing_compatible(const GeneralizedGraph& source, const GeneralizedGraph& target,
                               std::span<const DartId> dart_map, DartId x) {
    const DartId image = dart_map[x];
    const DartId mate_image = dart_map[source.mate(x)];
    if (source.is_semi_edge(x)) {
        return target.is_semi_edge(image);
    }
    if (mate_image == image) {
        return target.is_semi_edge(image);
    }
    return target.mate(image) == mate_image;
}

}  // namespace indcover::kernels
