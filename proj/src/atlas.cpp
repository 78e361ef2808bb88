#include "indcover/atlas.hpp"

#include "indcover/exact.hpp"
#include "indcover/factorize.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

namespace indcover {

namespace {

using Edge = std::pair<VertexId, VertexId>;

void check_range(std::size_t d, std::size_t r) {
    if (d < 1 || r < 1 || r > d) {
        throw GraphError("need 1 <= r <= d, got d = " + std::to_string(d) + ", r = " + std::to_string(r));
    }
}

// Collects the edges of a 1-factor by endpoints and resolves them to darts
// once the graph exists. Among parallel copies the smallest unused dart wins.
class MatchingSpec {
  public:
    void edge(VertexId u, VertexId v) { edges_.emplace_back(u, v); }
    void semi(VertexId v) { semis_.push_back(v); }

    std::vector<DartId> resolve(const GeneralizedGraph& g) const {
        std::vector<bool> taken(g.num_darts(), false);
        std::vector<DartId> out;
        for (auto [u, v] : edges_) {
            bool found = false;
            for (DartId x : g.darts_at(u)) {
                if (!taken[x] && !g.is_semi_edge(x) && g.incidence(g.mate(x)) == v) {
                    taken[x] = taken[g.mate(x)] = true;
                    out.push_back(x);
                    out.push_back(g.mate(x));
                    found = true;
                    break;
                }
            }
            if (!found) {
                throw std::logic_error("matching edge {" + std::to_string(u) + ", " +
                                       std::to_string(v) + "} is not in the graph");
            }
        }
        for (VertexId v : semis_) {
            const auto darts = g.darts_at(v);
            const auto it = std::find_if(darts.begin(), darts.end(),
                                         [&](DartId x) { return g.is_semi_edge(x); });
            if (it == darts.end()) {
                throw std::logic_error("matching semi-edge missing at " + std::to_string(v));
            }
            out.push_back(*it);
        }
        std::sort(out.begin(), out.end());
        return out;
    }

  private:
    std::vector<Edge> edges_;
    std::vector<VertexId> semis_;
};

void add_circulant_edges(GraphBuilder& b, std::size_t n, const std::vector<long>& generators,
                         std::size_t multiplicity = 1) {
    std::set<std::size_t> residues;
    const auto sn = static_cast<long>(n);
    for (long g : generators) {
        const long s = ((g % sn) + sn) % sn;
        if (s == 0) {
            throw GraphError("circulant generator " + std::to_string(g) + " is zero mod " +
                             std::to_string(n));
        }
        residues.insert(static_cast<std::size_t>(s));
        residues.insert(n - static_cast<std::size_t>(s));
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t s : residues) {
            const std::size_t j = (i + s) % n;
            if (i < j) {
                for (std::size_t k = 0; k < multiplicity; ++k) {
                    b.add_edge(static_cast<VertexId>(i), static_cast<VertexId>(j));
                }
            }
        }
    }
}

std::vector<long> generators_up_to(std::size_t top) {
    std::vector<long> gens(top);
    std::iota(gens.begin(), gens.end(), 1L);
    return gens;
}

CoverCertificate range_cover(std::size_t first, std::size_t count, std::size_t r, std::size_t d) {
    CoverCertificate c{std::vector<VertexId>(count), r, d};
    std::iota(c.subset.begin(), c.subset.end(), static_cast<VertexId>(first));
    return c;
}

// 1-factor edges shared by every odd-degree construction: A_i -- S_i for
// i < |S|, then consecutive pairs inside A from `from` up to `stop` (exclusive).
void bipartite_prefix_matching(MatchingSpec& m, std::size_t a_size, std::size_t s_size,
                               std::size_t from, std::size_t stop) {
    for (std::size_t i = 0; i < s_size; ++i) {
        m.edge(static_cast<VertexId>(i), static_cast<VertexId>(a_size + i));
    }
    for (std::size_t j = from; j + 1 < stop; j += 2) {
        m.edge(static_cast<VertexId>(j), static_cast<VertexId>(j + 1));
    }
}

}  // namespace

std::string_view to_string(ConstructionCase c) {
    switch (c) {
        case ConstructionCase::simple1: return "simple-1";
        case ConstructionCase::simple2: return "simple-2";
        case ConstructionCase::simple3: return "simple-3";
        case ConstructionCase::compress1: return "compress-1";
        case ConstructionCase::compress2: return "compress-2";
        case ConstructionCase::compress3: return "compress-3";
        case ConstructionCase::dipole: return "dipole";
        case ConstructionCase::complete: return "complete";
    }
    return "unknown";
}

GeneralizedGraph complete_graph(std::size_t k) {
    GraphBuilder b(k);
    for (VertexId i = 0; i < k; ++i) {
        for (VertexId j = i + 1; j < k; ++j) {
            b.add_edge(i, j);
        }
    }
    return std::move(b).build();
}

GeneralizedGraph circulant(std::size_t n, const std::vector<long>& generators) {
    if (n == 0) {
        throw GraphError("circulant needs at least one vertex");
    }
    GraphBuilder b(n);
    add_circulant_edges(b, n, generators);
    return std::move(b).build();
}

GeneralizedGraph multiply_edges(const GeneralizedGraph& g, std::size_t k) {
    GraphBuilder b(g.num_vertices());
    for (DartId x = 0; x < g.num_darts(); ++x) {
        if (!g.is_ordinary_dart(x)) {
            throw GraphError("multiply_edges needs a graph without loops or semi-edges");
        }
        if (x < g.mate(x)) {
            for (std::size_t i = 0; i < k; ++i) {
                b.add_edge(g.incidence(x), g.incidence(g.mate(x)));
            }
        }
    }
    return std::move(b).build();
}

GeneralizedGraph dipole(std::size_t d) {
    GraphBuilder b(2);
    for (std::size_t i = 0; i < d; ++i) {
        b.add_edge(0, 1);
    }
    return std::move(b).build();
}

AtlasEntry small_graph(std::size_t d, std::size_t r) {
    check_range(d, r);
    GraphBuilder b(d + r);
    for (VertexId i = 0; i < d; ++i) {
        for (std::size_t s = d; s < d + r; ++s) {
            b.add_edge(i, static_cast<VertexId>(s));
        }
    }

    AtlasEntry entry;
    MatchingSpec m;
    bool has_matching = d % 2 == 1;
    if ((d - r) % 2 == 0) {
        entry.construction_case = ConstructionCase::simple1;
        if (d > r) {
            add_circulant_edges(b, d, generators_up_to((d - r) / 2));
        }
        if (has_matching) {
            bipartite_prefix_matching(m, d, r, r, d);
        }
    } else if (d % 2 == 0) {
        entry.construction_case = ConstructionCase::simple2;
        auto gens = generators_up_to((d - r - 1) / 2);
        gens.push_back(static_cast<long>(d / 2));
        add_circulant_edges(b, d, gens);
    } else {
        entry.construction_case = ConstructionCase::simple3;
        if (d - r > 1) {
            add_circulant_edges(b, d, generators_up_to((d - r - 1) / 2));
        }
        const std::size_t half = (d - 1) / 2;
        for (std::size_t i = 0; i < half; ++i) {
            b.add_edge(static_cast<VertexId>(i), static_cast<VertexId>(i + half));
        }
        b.add_semi_edge(static_cast<VertexId>(d - 1));
        bipartite_prefix_matching(m, d, r, r, d - 1);
        m.semi(static_cast<VertexId>(d - 1));
    }

    entry.graph = std::make_shared<const GeneralizedGraph>(std::move(b).build());
    entry.cover = range_cover(d, r, r, d);
    if (has_matching) {
        entry.matching = m.resolve(*entry.graph);
    }
    return entry;
}

AtlasEntry compressed_graph(std::size_t d, std::size_t r) {
    check_range(d, r);
    const std::size_t k = std::gcd(d, r);
    const std::size_t da = d / k;  // |A|
    const std::size_t ds = r / k;  // |S|
    GraphBuilder b(da + ds);
    for (VertexId i = 0; i < da; ++i) {
        for (std::size_t s = da; s < da + ds; ++s) {
            for (std::size_t c = 0; c < k; ++c) {
                b.add_edge(i, static_cast<VertexId>(s));
            }
        }
    }

    // d/k-cycle on A with every edge `fold`-fold; two vertices read the
    // cycle as two parallel edges, one vertex has no cycle at all
    auto add_cycle = [&](std::size_t fold) {
        if (da == 2) {
            for (std::size_t c = 0; c < 2 * fold; ++c) {
                b.add_edge(0, 1);
            }
        } else if (da >= 3) {
            for (std::size_t i = 0; i < da; ++i) {
                const auto u = static_cast<VertexId>(i);
                const auto v = static_cast<VertexId>((i + 1) % da);
                for (std::size_t c = 0; c < fold; ++c) {
                    b.add_edge(u, v);
                }
            }
        }
    };

    AtlasEntry entry;
    MatchingSpec m;
    const bool has_matching = d % 2 == 1;
    if ((d - r) % 2 == 0) {
        entry.construction_case = da == 1 ? ConstructionCase::dipole : ConstructionCase::compress1;
        add_cycle((d - r) / 2);
        if (has_matching) {
            bipartite_prefix_matching(m, da, ds, ds, da);
        }
    } else if (d % 2 == 0) {
        entry.construction_case = ConstructionCase::compress2;
        for (std::size_t i = 0; i + 1 < da; i += 2) {
            for (std::size_t c = 0; c < d - r; ++c) {
                b.add_edge(static_cast<VertexId>(i), static_cast<VertexId>(i + 1));
            }
        }
    } else {
        entry.construction_case = ConstructionCase::compress3;
        add_cycle((d - r - 1) / 2);
        for (std::size_t i = 0; i + 2 < da; i += 2) {
            b.add_edge(static_cast<VertexId>(i), static_cast<VertexId>(i + 1));
        }
        b.add_semi_edge(static_cast<VertexId>(da - 1));
        bipartite_prefix_matching(m, da, ds, ds, da - 1);
        m.semi(static_cast<VertexId>(da - 1));
    }

    entry.graph = std::make_shared<const GeneralizedGraph>(std::move(b).build());
    entry.cover = range_cover(da, ds, r, d);
    if (has_matching) {
        entry.matching = m.resolve(*entry.graph);
    }
    return entry;
}

AtlasEntry complete_entry(std::size_t d) {
    check_range(d, 1);
    AtlasEntry entry;
    entry.construction_case = ConstructionCase::complete;
    entry.graph = std::make_shared<const GeneralizedGraph>(complete_graph(d + 1));
    entry.cover = range_cover(d, 1, 1, d);
    if (d % 2 == 1) {
        MatchingSpec m;
        bipartite_prefix_matching(m, d, 1, 1, d);
        entry.matching = m.resolve(*entry.graph);
    }
    return entry;
}

AtlasEntry dipole_entry(std::size_t d) {
    check_range(d, d);
    AtlasEntry entry = compressed_graph(d, d);
    entry.construction_case = ConstructionCase::dipole;
    return entry;
}

std::vector<std::pair<std::uint32_t, std::uint32_t>> biregular_edges(std::size_t n_left,
                                                                    std::size_t n_right,
                                                                    std::size_t d_left,
                                                                    std::size_t d_right) {
    if (n_left * d_left != n_right * d_right || d_left > n_right || d_right > n_left) {
        throw GraphError("infeasible biregular parameters");
    }
    std::vector<std::size_t> capacity(n_right, d_right);
    std::vector<std::uint32_t> order(n_right);
    std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
    edges.reserve(n_left * d_left);
    for (std::uint32_t i = 0; i < n_left; ++i) {
        std::iota(order.begin(), order.end(), 0u);
        std::partial_sort(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(d_left), order.end(),
                          [&](std::uint32_t x, std::uint32_t y) {
                              return capacity[x] != capacity[y] ? capacity[x] > capacity[y] : x < y;
                          });
        std::sort(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(d_left));
        for (std::size_t k = 0; k < d_left; ++k) {
            const auto j = order[k];
            if (capacity[j] == 0) {
                throw std::logic_error("greedy biregular realization ran out of capacity");
            }
            --capacity[j];
            edges.emplace_back(i, j);
        }
    }
    return edges;
}

GeneralizedGraph biregular_bipartite(std::size_t n_left, std::size_t n_right, std::size_t d_left,
                                     std::size_t d_right) {
    GraphBuilder b(n_left + n_right);
    for (auto [i, j] : biregular_edges(n_left, n_right, d_left, d_right)) {
        b.add_edge(i, static_cast<VertexId>(n_left + j));
    }
    auto g = std::move(b).build();
    const auto cls = classify(g);
    if (!cls.simple()) {
        throw std::logic_error("biregular realization is not simple");
    }
    for (VertexId v = 0; v < g.num_vertices(); ++v) {
        if (g.degree(v) != (v < n_left ? d_left : d_right)) {
            throw std::logic_error("biregular realization has a wrong degree");
        }
    }
    return g;
}

ThreeCoverExample example_three_cover() {
    constexpr std::size_t kDegree = 105;
    constexpr std::array<std::size_t, 8> sizes{735, 630, 210, 63, 315, 140, 0, 91};
    // bipartite densities between classes V_000 .. V_111; zero = no edges
    const std::array<std::array<Rat, 8>, 8> density{{
        {Rat(4, 147), Rat(1, 15), Rat(1, 105), Rat(2, 21), Rat(2, 105), Rat(4, 35), 0, Rat(1, 7)},
        {Rat(1, 15), 0, Rat(1, 10), 0, Rat(1, 9), 0, 0, 0},
        {Rat(1, 105), Rat(1, 10), 0, 0, Rat(1, 15), Rat(1, 10), 0, 0},
        {Rat(2, 21), 0, 0, 0, Rat(1, 9), 0, 0, 0},
        {Rat(2, 105), Rat(1, 9), Rat(1, 15), Rat(1, 9), 0, 0, 0, 0},
        {Rat(4, 35), 0, Rat(1, 10), 0, 0, 0, 0, 0},
        {0, 0, 0, 0, 0, 0, 0, 0},
        {Rat(1, 7), 0, 0, 0, 0, 0, 0, 0},
    }};
    constexpr std::array<std::size_t, 3> radius{77, 21, 35};

    ThreeCoverExample ex;
    ex.class_sizes = sizes;
    std::size_t n = 0;
    for (std::size_t c = 0; c < 8; ++c) {
        ex.class_offsets[c] = n;
        n += sizes[c];
    }

    auto degree_into = [&](std::size_t from, std::size_t to) {
        const Rat deg = density[from][to] * static_cast<unsigned long>(sizes[to]);
        if (deg.get_den() != 1) {
            throw std::logic_error("table density gives a fractional degree");
        }
        return static_cast<std::size_t>(deg.get_num().get_ui());
    };

    GraphBuilder b(n);
    // V_000 carries a 20-regular circulant
    add_circulant_edges(b, sizes[0], generators_up_to(degree_into(0, 0) / 2));
    for (std::size_t x = 0; x < 8; ++x) {
        for (std::size_t y = x + 1; y < 8; ++y) {
            if (density[x][y] == 0 || sizes[x] == 0 || sizes[y] == 0) {
                continue;
            }
            for (auto [i, j] : biregular_edges(sizes[x], sizes[y], degree_into(x, y), degree_into(y, x))) {
                b.add_edge(static_cast<VertexId>(ex.class_offsets[x] + i),
                           static_cast<VertexId>(ex.class_offsets[y] + j));
            }
        }
    }
    ex.graph = std::make_shared<const GeneralizedGraph>(std::move(b).build());

    // S_i collects the classes whose i-th bit (lowest first) is set
    for (std::size_t i = 0; i < 3; ++i) {
        CoverCertificate c{{}, radius[i], kDegree};
        for (std::size_t cls = 0; cls < 8; ++cls) {
            if ((cls >> i) & 1u) {
                for (std::size_t v = 0; v < sizes[cls]; ++v) {
                    c.subset.push_back(static_cast<VertexId>(ex.class_offsets[cls] + v));
                }
            }
        }
        if (!verify_cover(*ex.graph, c).ok) {
            throw std::logic_error("three-cover example failed its own cover check");
        }
        ex.covers[i] = std::move(c);
    }
    return ex;
}

}  // namespace indcover
