#include "indcover/ggraph.hpp"

#include <algorithm>
#include <string>

namespace indcover {

GeneralizedGraph::GeneralizedGraph(std::size_t n_vertices, std::vector<VertexId> incidence,
                                   std::vector<DartId> pairing)
    : n_vertices_(n_vertices), incidence_(std::move(incidence)), pairing_(std::move(pairing)) {
    const std::size_t m = incidence_.size();
    if (pairing_.size() != m) {
        throw GraphError("incidence and pairing sizes differ");
    }
    for (std::size_t x = 0; x < m; ++x) {
        if (incidence_[x] >= n_vertices_) {
            throw GraphError("dart " + std::to_string(x) + " incident to out-of-range vertex");
        }
        if (pairing_[x] >= m) {
            throw GraphError("dart " + std::to_string(x) + " paired out of range");
        }
        if (pairing_[pairing_[x]] != x) {
            throw GraphError("pairing is not an involution at dart " + std::to_string(x));
        }
    }

    // counting sort keeps darts ascending within each vertex
    offsets_.assign(n_vertices_ + 1, 0);
    for (VertexId v : incidence_) {
        ++offsets_[v + 1];
    }
    for (std::size_t v = 0; v < n_vertices_; ++v) {
        offsets_[v + 1] += offsets_[v];
    }
    by_vertex_.resize(m);
    std::vector<std::size_t> cursor(offsets_.begin(), offsets_.end() - 1);
    for (std::size_t x = 0; x < m; ++x) {
        by_vertex_[cursor[incidence_[x]]++] = static_cast<DartId>(x);
    }
}

std::size_t GeneralizedGraph::degree(VertexId v) const {
    if (v >= n_vertices_) {
        throw GraphError("vertex " + std::to_string(v) + " out of range");
    }
    return offsets_[v + 1] - offsets_[v];
}

void GraphBuilder::check_vertex(VertexId v) const {
    if (v >= n_vertices_) {
        throw GraphError("vertex " + std::to_string(v) + " out of range (n = " +
                         std::to_string(n_vertices_) + ")");
    }
}

DartId GraphBuilder::add_edge(VertexId u, VertexId v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) {
        throw GraphError("ordinary edge needs distinct endpoints; use add_loop");
    }
    const auto first = static_cast<DartId>(incidence_.size());
    incidence_.push_back(std::min(u, v));
    incidence_.push_back(std::max(u, v));
    pairing_.push_back(first + 1);
    pairing_.push_back(first);
    return first;
}

DartId GraphBuilder::add_loop(VertexId v) {
    check_vertex(v);
    const auto first = static_cast<DartId>(incidence_.size());
    incidence_.push_back(v);
    incidence_.push_back(v);
    pairing_.push_back(first + 1);
    pairing_.push_back(first);
    return first;
}

DartId GraphBuilder::add_semi_edge(VertexId v) {
    check_vertex(v);
    const auto x = static_cast<DartId>(incidence_.size());
    incidence_.push_back(v);
    pairing_.push_back(x);
    return x;
}

GeneralizedGraph GraphBuilder::build() && {
    return GeneralizedGraph(n_vertices_, std::move(incidence_), std::move(pairing_));
}

GeneralizedGraph from_edges(std::size_t n, std::span<const VertexPair> edges,
                            std::span<const VertexId> loops, std::span<const VertexId> semis) {
    GraphBuilder b(n);
    for (auto [u, v] : edges) {
        b.add_edge(u, v);
    }
    for (VertexId v : loops) {
        b.add_loop(v);
    }
    for (VertexId v : semis) {
        b.add_semi_edge(v);
    }
    return std::move(b).build();
}

std::size_t degree(const GeneralizedGraph& g, VertexId v) { return g.degree(v); }

GraphClass classify(const GeneralizedGraph& g) {
    GraphClass c;
    for (DartId x = 0; x < g.num_darts(); ++x) {
        if (g.is_semi_edge(x)) {
            c.has_semi_edge = true;
        } else if (g.is_loop_dart(x)) {
            c.has_loop = true;
        }
    }
    const auto edges = ordinary_edges(g);
    c.has_parallel_edge = std::adjacent_find(edges.begin(), edges.end()) != edges.end();

    if (g.num_vertices() > 0) {
        const std::size_t d0 = g.degree(0);
        bool regular = true;
        for (VertexId v = 1; v < g.num_vertices() && regular; ++v) {
            regular = g.degree(v) == d0;
        }
        if (regular) {
            c.regular_degree = d0;
        }
    } else {
        c.regular_degree = 0;
    }
    return c;
}

std::size_t regular_degree_or_throw(const GeneralizedGraph& g) {
    const auto c = classify(g);
    if (!c.regular_degree) {
        throw GraphError("graph is not regular");
    }
    return *c.regular_degree;
}

GeneralizedGraph tensor_product(const GeneralizedGraph& g, const GeneralizedGraph& h) {
    const std::size_t nh = h.num_vertices();
    const std::size_t mg = g.num_darts();
    const std::size_t mh = h.num_darts();
    std::vector<VertexId> incidence(mg * mh);
    std::vector<DartId> pairing(mg * mh);
    for (std::size_t x = 0; x < mg; ++x) {
        for (std::size_t y = 0; y < mh; ++y) {
            const std::size_t dart = x * mh + y;
            incidence[dart] = static_cast<VertexId>(g.incidence(x) * nh + h.incidence(y));
            pairing[dart] = static_cast<DartId>(g.mate(x) * mh + h.mate(y));
        }
    }
    return GeneralizedGraph(g.num_vertices() * nh, std::move(incidence), std::move(pairing));
}

GeneralizedGraph disjoint_copies(const GeneralizedGraph& g, std::size_t copies) {
    const std::size_t n = g.num_vertices();
    const std::size_t m = g.num_darts();
    std::vector<VertexId> incidence(m * copies);
    std::vector<DartId> pairing(m * copies);
    for (std::size_t k = 0; k < copies; ++k) {
        for (std::size_t x = 0; x < m; ++x) {
            incidence[k * m + x] = static_cast<VertexId>(k * n + g.incidence(x));
            pairing[k * m + x] = static_cast<DartId>(k * m + g.mate(x));
        }
    }
    return GeneralizedGraph(n * copies, std::move(incidence), std::move(pairing));
}

std::pair<GeneralizedGraph, std::vector<DartId>> dart_subgraph(const GeneralizedGraph& g,
                                                               const std::vector<bool>& keep) {
    if (keep.size() != g.num_darts()) {
        throw GraphError("dart mask has wrong size");
    }
    std::vector<DartId> new_to_old;
    std::vector<DartId> old_to_new(g.num_darts(), 0);
    for (DartId x = 0; x < g.num_darts(); ++x) {
        if (keep[x]) {
            if (!keep[g.mate(x)]) {
                throw GraphError("dart mask is not closed under pairing");
            }
            old_to_new[x] = static_cast<DartId>(new_to_old.size());
            new_to_old.push_back(x);
        }
    }
    std::vector<VertexId> incidence(new_to_old.size());
    std::vector<DartId> pairing(new_to_old.size());
    for (std::size_t i = 0; i < new_to_old.size(); ++i) {
        incidence[i] = g.incidence(new_to_old[i]);
        pairing[i] = old_to_new[g.mate(new_to_old[i])];
    }
    return {GeneralizedGraph(g.num_vertices(), std::move(incidence), std::move(pairing)),
            std::move(new_to_old)};
}

std::vector<VertexPair> ordinary_edges(const GeneralizedGraph& g) {
    std::vector<VertexPair> edges;
    for (DartId x = 0; x < g.num_darts(); ++x) {
        const DartId y = g.mate(x);
        if (x < y && g.incidence(x) != g.incidence(y)) {
            edges.emplace_back(std::min(g.incidence(x), g.incidence(y)),
                               std::max(g.incidence(x), g.incidence(y)));
        }
    }
    std::sort(edges.begin(), edges.end());
    return edges;
}

}  // namespace indcover
