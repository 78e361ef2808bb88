#pragma once

// Covering maps between generalized graphs, the diagonal common covering
// of two factorized graphs, its iteration over a list, and lifting of
// independent exact covers along a covering.

#include "indcover/cover.hpp"
#include "indcover/factorize.hpp"
#include "indcover/ggraph.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace indcover {

using GraphPtr = std::shared_ptr<const GeneralizedGraph>;

/// A dart-level map source -> target. The vertex map is derived from the
/// darts (first dart at each source vertex decides).
struct CoveringMap {
    GraphPtr source;
    GraphPtr target;
    std::vector<DartId> dart_map;
    std::vector<VertexId> vertex_map;
};

/// Derives vertex_map; throws GraphError on size mismatch, out-of-range images
/// or an isolated source vertex.
CoveringMap make_covering_map(GraphPtr source, GraphPtr target, std::vector<DartId> dart_map);

CoveringMap identity_covering(GraphPtr g);

/// `outer` after `inner`: source(inner) -> target(outer).
CoveringMap compose(const CoveringMap& outer, const CoveringMap& inner);

struct CoveringViolation {
    int item = 0;  // 1 surjective, 2 vertex-consistent, 3 pairing, 4 local bijection; 0 shape
    std::string message;
    std::vector<DartId> witness;
};

struct CoveringReport {
    bool ok = true;
    std::optional<CoveringViolation> first_violation;
};

CoveringReport verify_covering(const CoveringMap& cm);
CoveringReport verify_covering_serial(const CoveringMap& cm);

struct StructureReport {
    bool ok = true;
    std::string violation;
    std::size_t edge_orbits = 0;   // target ordinary edges checked
    std::size_t loop_orbits = 0;
    std::size_t semi_orbits = 0;
    std::size_t loop_preimage_cycles = 0;
};

/// Preimage shape of every target orbit, and image shape of every source
/// loop and semi-edge. Throws GraphError if cm is not a covering.
StructureReport structure_check(const CoveringMap& cm);

struct CommonCovering {
    GraphPtr graph;
    Factorization factorization;  // inherited (a, b) signature
    CoveringMap to_first;
    CoveringMap to_second;
};

/// Diagonal subgraph of the tensor product driven by the two factorizations.
/// Vertices are row-major; at each vertex darts follow colour order, with
/// the forward dart before the backward dart inside a 2-factor colour.
CommonCovering common_covering(const GraphPtr& g1, const Factorization& f1, const GraphPtr& g2,
                               const Factorization& f2);

struct CoveringFactor {
    GraphPtr graph;
    std::optional<std::vector<DartId>> matching;  // required for odd degree
};

struct IteratedCovering {
    GraphPtr graph;
    Factorization factorization;
    std::vector<CoveringMap> projections;  // one per input, same order
};

/// Left fold of common_covering over the list.
IteratedCovering iterated_common_covering(const std::vector<CoveringFactor>& factors);

/// Preimage of a verified target cover; throws GraphError if either the
/// covering or the certificate fails verification.
CoverCertificate lift_cover(const CoveringMap& cm, const CoverCertificate& c);

}  // namespace indcover
