#pragma once

// Dart-based generalized graphs: multiple edges, loops and semi-edges are
// all first-class. A graph is a vertex count, an incidence map from darts
// to vertices, and a pairing involution on darts whose fixed points are
// the semi-edges.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

namespace indcover {

using VertexId = std::uint32_t;
using DartId = std::uint32_t;

/// Raised when a graph-level precondition does not hold.
class GraphError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

class GeneralizedGraph {
  public:
    GeneralizedGraph() = default;

    /// Validates that `pairing` is an involution and every incidence is in range.
    GeneralizedGraph(std::size_t n_vertices, std::vector<VertexId> incidence,
                     std::vector<DartId> pairing);

    std::size_t num_vertices() const { return n_vertices_; }
    std::size_t num_darts() const { return incidence_.size(); }

    VertexId incidence(DartId x) const { return incidence_[x]; }
    DartId mate(DartId x) const { return pairing_[x]; }

    bool is_semi_edge(DartId x) const { return pairing_[x] == x; }
    bool is_loop_dart(DartId x) const {
        return pairing_[x] != x && incidence_[pairing_[x]] == incidence_[x];
    }
    bool is_ordinary_dart(DartId x) const {
        return incidence_[pairing_[x]] != incidence_[x];
    }

    /// Darts incident to v, ascending by id.
    std::span<const DartId> darts_at(VertexId v) const {
        return {by_vertex_.data() + offsets_[v], by_vertex_.data() + offsets_[v + 1]};
    }

    std::size_t degree(VertexId v) const;

    std::span<const VertexId> incidence_map() const { return incidence_; }
    std::span<const DartId> pairing_map() const { return pairing_; }

    bool operator==(const GeneralizedGraph& other) const {
        return n_vertices_ == other.n_vertices_ && incidence_ == other.incidence_ &&
               pairing_ == other.pairing_;
    }

  private:
    std::size_t n_vertices_ = 0;
    std::vector<VertexId> incidence_;
    std::vector<DartId> pairing_;
    std::vector<std::size_t> offsets_{0};
    std::vector<DartId> by_vertex_;
};

/// Accumulates darts in creation order and freezes them into a graph.
class GraphBuilder {
  public:
    explicit GraphBuilder(std::size_t n_vertices) : n_vertices_(n_vertices) {}

    /// Ordinary edge u != v; the dart at min(u, v) is created first. Returns that dart.
    DartId add_edge(VertexId u, VertexId v);
    DartId add_loop(VertexId v);
    DartId add_semi_edge(VertexId v);

    std::size_t num_darts() const { return incidence_.size(); }

    GeneralizedGraph build() &&;

  private:
    void check_vertex(VertexId v) const;

    std::size_t n_vertices_;
    std::vector<VertexId> incidence_;
    std::vector<DartId> pairing_;
};

struct GraphClass {
    bool has_semi_edge = false;
    bool has_loop = false;
    bool has_parallel_edge = false;
    std::optional<std::size_t> regular_degree;

    bool simple() const { return !has_semi_edge && !has_loop && !has_parallel_edge; }
    bool multigraph() const { return !has_semi_edge; }
};

using VertexPair = std::pair<VertexId, VertexId>;

/// Edges first (input order), then loops, then semi-edges.
GeneralizedGraph from_edges(std::size_t n, std::span<const VertexPair> edges,
                            std::span<const VertexId> loops = {},
                            std::span<const VertexId> semis = {});

std::size_t degree(const GeneralizedGraph& g, VertexId v);

GraphClass classify(const GeneralizedGraph& g);

/// Degree shared by all vertices; throws GraphError when g is not regular.
std::size_t regular_degree_or_throw(const GeneralizedGraph& g);

/// Categorical product. Vertex (u, v) is u * |V(h)| + v and dart (x, y) is
/// x * |D(h)| + y; (x, y) is paired with (mate(x), mate(y)).
GeneralizedGraph tensor_product(const GeneralizedGraph& g, const GeneralizedGraph& h);

/// `copies` disjoint copies of g; copy k occupies vertices [k n, (k+1) n) and darts [k m, (k+1) m).
GeneralizedGraph disjoint_copies(const GeneralizedGraph& g, std::size_t copies);

/// Subgraph on all vertices keeping only darts with keep[x]; the kept set
/// must be closed under pairing. Returns the graph and new-dart -> old-dart.
std::pair<GeneralizedGraph, std::vector<DartId>> dart_subgraph(const GeneralizedGraph& g,
                                                               const std::vector<bool>& keep);

/// Ordinary edges as (u, v) with u < v, sorted, with multiplicity.
std::vector<VertexPair> ordinary_edges(const GeneralizedGraph& g);

}  // namespace indcover
