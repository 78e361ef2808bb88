#include "indcover/covering.hpp"

#include "indcover/kernels.hpp"

#include <algorithm>
#include <string>

namespace indcover {

namespace {

std::string dart_str(DartId x) { return std::to_string(x); }

// preimage lists for every target dart, as CSR
struct Preimages {
    std::vector<std::size_t> offsets;
    std::vector<DartId> darts;

    std::span<const DartId> of(DartId t) const {
        return {darts.data() + offsets[t], darts.data() + offsets[t + 1]};
    }
};

Preimages preimages(const CoveringMap& cm) {
    Preimages p;
    p.offsets.assign(cm.target->num_darts() + 1, 0);
    for (DartId t : cm.dart_map) {
        ++p.offsets[t + 1];
    }
    for (std::size_t t = 0; t < cm.target->num_darts(); ++t) {
        p.offsets[t + 1] += p.offsets[t];
    }
    p.darts.resize(cm.dart_map.size());
    std::vector<std::size_t> cursor(p.offsets.begin(), p.offsets.end() - 1);
    for (DartId x = 0; x < cm.dart_map.size(); ++x) {
        p.darts[cursor[cm.dart_map[x]]++] = x;
    }
    return p;
}

using FirstBadNeighbourhood = std::size_t (*)(const GeneralizedGraph&, const GeneralizedGraph&,
                                              std::span<const DartId>);
using FirstBadPairing = std::size_t (*)(const GeneralizedGraph&, const GeneralizedGraph&,
                                        std::span<const DartId>);
using FirstUnhit = std::size_t (*)(std::size_t, std::span<const DartId>);

CoveringReport verify_with(const CoveringMap& cm, FirstUnhit unhit, FirstBadNeighbourhood neighbourhood,
                           FirstBadPairing pairing) {
    CoveringReport report;
    auto fail = [&](int item, std::string message, std::vector<DartId> witness) {
        report.ok = false;
        report.first_violation = CoveringViolation{item, std::move(message), std::move(witness)};
        return report;
    };
    if (!cm.source || !cm.target) {
        return fail(0, "covering map without source or target", {});
    }
    const auto& src = *cm.source;
    const auto& tgt = *cm.target;
    if (cm.dart_map.size() != src.num_darts() || cm.vertex_map.size() != src.num_vertices()) {
        return fail(0, "map sizes do not match the source graph", {});
    }
    for (DartId x = 0; x < src.num_darts(); ++x) {
        if (cm.dart_map[x] >= tgt.num_darts()) {
            return fail(0, "dart " + dart_str(x) + " maps out of range", {x});
        }
    }

    if (const auto t = unhit(tgt.num_darts(), cm.dart_map); t < tgt.num_darts()) {
        return fail(1, "target dart " + std::to_string(t) + " is not in the image",
                    {static_cast<DartId>(t)});
    }

    for (VertexId v = 0; v < src.num_vertices(); ++v) {
        const auto darts = src.darts_at(v);
        if (!darts.empty() && tgt.incidence(cm.dart_map[darts.front()]) != cm.vertex_map[v]) {
            return fail(2, "vertex map disagrees with dart images at vertex " + std::to_string(v),
                        {darts.front()});
        }
    }
    const auto bad_vertex = neighbourhood(src, tgt, cm.dart_map);
    if (bad_vertex < src.num_vertices()) {
        const auto v = static_cast<VertexId>(bad_vertex);
        const auto darts = src.darts_at(v);
        for (DartId x : darts) {
            if (tgt.incidence(cm.dart_map[x]) != cm.vertex_map[v]) {
                return fail(2,
                            "darts at vertex " + std::to_string(v) +
                                " map to different target vertices",
                            {darts.front(), x});
            }
        }
    }

    if (const auto x = pairing(src, tgt, cm.dart_map); x < src.num_darts()) {
        const auto dx = static_cast<DartId>(x);
        return fail(3, "pairing not preserved at dart " + dart_str(dx), {dx, src.mate(dx)});
    }

    if (bad_vertex < src.num_vertices()) {
        const auto v = static_cast<VertexId>(bad_vertex);
        std::vector<DartId> witness(src.darts_at(v).begin(), src.darts_at(v).end());
        return fail(4,
                    "darts at vertex " + std::to_string(v) + " are not a bijection onto vertex " +
                        std::to_string(cm.vertex_map[v]),
                    std::move(witness));
    }
    return report;
}

}  // namespace

CoveringMap make_covering_map(GraphPtr source, GraphPtr target, std::vector<DartId> dart_map) {
    if (!source || !target) {
        throw GraphError("covering map needs a source and a target");
    }
    if (dart_map.size() != source->num_darts()) {
        throw GraphError("dart map size does not match the source");
    }
    for (DartId x = 0; x < dart_map.size(); ++x) {
        if (dart_map[x] >= target->num_darts()) {
            throw GraphError("image of dart " + std::to_string(x) + " is out of range");
        }
    }
    std::vector<VertexId> vertex_map(source->num_vertices());
    for (VertexId v = 0; v < source->num_vertices(); ++v) {
        const auto darts = source->darts_at(v);
        if (darts.empty()) {
            throw GraphError("isolated vertex " + std::to_string(v) + " has no image");
        }
        vertex_map[v] = target->incidence(dart_map[darts.front()]);
    }
    return {std::move(source), std::move(target), std::move(dart_map), std::move(vertex_map)};
}

CoveringMap identity_covering(GraphPtr g) {
    std::vector<DartId> darts(g->num_darts());
    for (DartId x = 0; x < darts.size(); ++x) {
        darts[x] = x;
    }
    std::vector<VertexId> vertices(g->num_vertices());
    for (VertexId v = 0; v < vertices.size(); ++v) {
        vertices[v] = v;
    }
    return {g, g, std::move(darts), std::move(vertices)};
}

CoveringMap compose(const CoveringMap& outer, const CoveringMap& inner) {
    if (inner.target != outer.source) {
        throw GraphError("cannot compose: inner target is not outer source");
    }
    CoveringMap out{inner.source, outer.target, {}, {}};
    out.dart_map.resize(inner.dart_map.size());
    for (std::size_t x = 0; x < inner.dart_map.size(); ++x) {
        out.dart_map[x] = outer.dart_map[inner.dart_map[x]];
    }
    out.vertex_map.resize(inner.vertex_map.size());
    for (std::size_t v = 0; v < inner.vertex_map.size(); ++v) {
        out.vertex_map[v] = outer.vertex_map[inner.vertex_map[v]];
    }
    return out;
}

CoveringReport verify_covering(const CoveringMap& cm) {
    return verify_with(cm, kernels::first_unhit_dart, kernels::first_bad_neighbourhood,
                       kernels::first_bad_pairing);
}

CoveringReport verify_covering_serial(const CoveringMap& cm) {
    return verify_with(cm, kernels::serial::first_unhit_dart, kernels::serial::first_bad_neighbourhood,
                       kernels::serial::first_bad_pairing);
}

StructureReport structure_check(const CoveringMap& cm) {
    if (const auto r = verify_covering(cm); !r.ok) {
        throw GraphError("not a covering map: " + r.first_violation->message);
    }
    const auto& src = *cm.source;
    const auto& tgt = *cm.target;
    const auto pre = preimages(cm);
    std::vector<std::size_t> fiber(tgt.num_vertices(), 0);
    for (VertexId w : cm.vertex_map) {
        ++fiber[w];
    }

    StructureReport report;
    auto fail = [&](std::string why) {
        report.ok = false;
        report.violation = std::move(why);
        return report;
    };

    for (DartId t = 0; t < tgt.num_darts(); ++t) {
        const DartId t2 = tgt.mate(t);
        const VertexId u = tgt.incidence(t);
        const auto over = pre.of(t);
        if (over.size() != fiber[u]) {
            return fail("target dart " + dart_str(t) + " is not covered once per fiber vertex");
        }
        if (t2 == t) {
            // semi-edge: the preimage is a 1-factor of the fiber
            ++report.semi_orbits;
            for (DartId x : over) {
                const DartId y = src.mate(x);
                if (y != x && (cm.dart_map[y] != t || src.incidence(y) == src.incidence(x))) {
                    return fail("preimage of semi-edge " + dart_str(t) + " is not a 1-factor");
                }
            }
            continue;
        }
        if (t2 < t) {
            continue;  // orbit handled from its smaller dart
        }
        for (DartId x : over) {
            if (src.is_semi_edge(x) || cm.dart_map[src.mate(x)] != t2) {
                return fail("preimage of orbit " + dart_str(t) + "/" + dart_str(t2) +
                            " is not closed under pairing");
            }
        }
        if (u != tgt.incidence(t2)) {
            // ordinary edge: a perfect matching between the two fibers
            ++report.edge_orbits;
            if (fiber[u] != fiber[tgt.incidence(t2)]) {
                return fail("fibers of edge " + dart_str(t) + " differ in size");
            }
            continue;
        }
        // loop: disjoint cycles spanning the fiber, one t-dart and one
        // t2-dart per vertex, so following t-darts is a permutation
        ++report.loop_orbits;
        std::vector<DartId> t_dart_at(src.num_vertices(), 0);
        std::vector<bool> in_fiber(src.num_vertices(), false);
        for (DartId x : over) {
            t_dart_at[src.incidence(x)] = x;
            in_fiber[src.incidence(x)] = true;
        }
        std::vector<bool> seen(src.num_vertices(), false);
        for (DartId x : over) {
            VertexId y = src.incidence(x);
            if (seen[y]) {
                continue;
            }
            ++report.loop_preimage_cycles;
            while (!seen[y]) {
                seen[y] = true;
                y = src.incidence(src.mate(t_dart_at[y]));
                if (!in_fiber[y]) {
                    return fail("preimage of loop " + dart_str(t) + " leaves the fiber");
                }
            }
        }
    }

    // images of loops are loops, images of semi-edges are semi-edges
    for (DartId x = 0; x < src.num_darts(); ++x) {
        const DartId image = cm.dart_map[x];
        if (src.is_semi_edge(x) && !tgt.is_semi_edge(image)) {
            return fail("semi-edge " + dart_str(x) + " maps to a non-semi-edge");
        }
        if (src.is_loop_dart(x) && !tgt.is_loop_dart(image)) {
            return fail("loop at dart " + dart_str(x) + " maps to a non-loop");
        }
    }
    return report;
}

CommonCovering common_covering(const GraphPtr& g1, const Factorization& f1, const GraphPtr& g2,
                               const Factorization& f2) {
    const std::size_t d = regular_degree_or_throw(*g1);
    if (regular_degree_or_throw(*g2) != d) {
        throw GraphError("common covering needs graphs of equal degree");
    }
    if (f1.a != f2.a || f1.b != f2.b) {
        throw GraphError("factorizations have different (a, b) signatures");
    }
    const std::size_t a = f1.a;
    if (a + 2 * f1.b != d) {
        throw GraphError("factorization signature does not match the degree");
    }
    const Orientation o1 = orient(*g1, f1);
    const Orientation o2 = orient(*g2, f2);

    const std::size_t n2 = g2->num_vertices();
    const std::size_t n = g1->num_vertices() * n2;
    std::vector<VertexId> incidence(n * d);
    std::vector<DartId> pairing(n * d);
    std::vector<DartId> proj1(n * d);
    std::vector<DartId> proj2(n * d);
    std::vector<VertexId> vmap1(n);
    std::vector<VertexId> vmap2(n);
    Factorization f;
    f.a = a;
    f.b = f1.b;
    f.color.resize(n * d);
    f.forward.resize(n * d);

    for (std::size_t p = 0; p < n; ++p) {
        const auto u = static_cast<VertexId>(p / n2);
        const auto v = static_cast<VertexId>(p % n2);
        vmap1[p] = u;
        vmap2[p] = v;
        for (std::size_t s = 0; s < d; ++s) {
            const std::size_t dart = p * d + s;
            incidence[dart] = static_cast<VertexId>(p);
            if (s < a) {
                const std::size_t q = std::size_t{o1.step[s][u]} * n2 + o2.step[s][v];
                pairing[dart] = static_cast<DartId>(q == p ? dart : q * d + s);
                proj1[dart] = o1.out_dart[s][u];
                proj2[dart] = o2.out_dart[s][v];
                f.color[dart] = static_cast<std::uint32_t>(s);
                f.forward[dart] = 0;
                continue;
            }
            const std::size_t j = a + (s - a) / 2;
            const bool fwd = (s - a) % 2 == 0;
            f.color[dart] = static_cast<std::uint32_t>(j);
            f.forward[dart] = fwd ? 1 : 0;
            if (fwd) {
                const std::size_t q = std::size_t{o1.step[j][u]} * n2 + o2.step[j][v];
                pairing[dart] = static_cast<DartId>(q * d + s + 1);
                proj1[dart] = o1.out_dart[j][u];
                proj2[dart] = o2.out_dart[j][v];
            } else {
                const std::size_t q = std::size_t{o1.back[j][u]} * n2 + o2.back[j][v];
                pairing[dart] = static_cast<DartId>(q * d + s - 1);
                proj1[dart] = o1.in_dart[j][u];
                proj2[dart] = o2.in_dart[j][v];
            }
        }
    }

    auto graph = std::make_shared<const GeneralizedGraph>(n, std::move(incidence), std::move(pairing));
    CommonCovering out{graph, std::move(f), {graph, g1, std::move(proj1), std::move(vmap1)},
                       {graph, g2, std::move(proj2), std::move(vmap2)}};
    return out;
}

IteratedCovering iterated_common_covering(const std::vector<CoveringFactor>& factors) {
    if (factors.empty()) {
        throw GraphError("iterated common covering needs at least one graph");
    }
    const std::size_t d = regular_degree_or_throw(*factors.front().graph);
    std::vector<Factorization> fs;
    fs.reserve(factors.size());
    for (std::size_t i = 0; i < factors.size(); ++i) {
        const auto& factor = factors[i];
        if (!factor.graph || regular_degree_or_throw(*factor.graph) != d) {
            throw GraphError("factor " + std::to_string(i) + " is not " + std::to_string(d) +
                             "-regular");
        }
        if (d % 2 == 0) {
            if (classify(*factor.graph).has_semi_edge) {
                throw GraphError("factor " + std::to_string(i) + " has a semi-edge at even degree");
            }
            fs.push_back(two_factorize(*factor.graph));
        } else {
            if (!factor.matching) {
                throw GraphError("factor " + std::to_string(i) + " needs a 1-factor at odd degree");
            }
            fs.push_back(factorize_with_matching(*factor.graph, *factor.matching));
        }
    }

    IteratedCovering acc{factors.front().graph, fs.front(), {identity_covering(factors.front().graph)}};
    for (std::size_t i = 1; i < factors.size(); ++i) {
        auto cc = common_covering(acc.graph, acc.factorization, factors[i].graph, fs[i]);
        std::vector<CoveringMap> projections;
        projections.reserve(i + 1);
        for (const auto& p : acc.projections) {
            projections.push_back(compose(p, cc.to_first));
        }
        projections.push_back(std::move(cc.to_second));
        acc = IteratedCovering{std::move(cc.graph), std::move(cc.factorization), std::move(projections)};
    }
    return acc;
}

CoverCertificate lift_cover(const CoveringMap& cm, const CoverCertificate& c) {
    if (const auto r = verify_covering(cm); !r.ok) {
        throw GraphError("cannot lift along a non-covering: " + r.first_violation->message);
    }
    if (const auto r = verify_cover(*cm.target, c); !r.ok) {
        throw GraphError("target certificate is invalid at vertex " +
                         std::to_string(r.failures.front().vertex));
    }
    const auto in_target = membership_mask(cm.target->num_vertices(), c.subset);
    CoverCertificate lifted{{}, c.r, c.d};
    for (VertexId v = 0; v < cm.source->num_vertices(); ++v) {
        if (in_target[cm.vertex_map[v]]) {
            lifted.subset.push_back(v);
        }
    }
    return lifted;
}

}  // namespace indcover
