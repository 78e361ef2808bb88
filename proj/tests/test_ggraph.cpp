#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "indcover/atlas.hpp"
#include "indcover/cover.hpp"
#include "indcover/ggraph.hpp"
#include "support.hpp"

#include <numeric>
#include <random>

using namespace indcover;

namespace {

void check_core_invariants(const GeneralizedGraph& g) {
    std::size_t total = 0;
    for (VertexId v = 0; v < g.num_vertices(); ++v) {
        total += degree(g, v);
        for (DartId x : g.darts_at(v)) {
            CHECK(g.incidence(x) == v);
        }
    }
    CHECK(total == g.num_darts());
    for (DartId x = 0; x < g.num_darts(); ++x) {
        CHECK(g.mate(g.mate(x)) == x);
    }
}

}  // namespace

TEST_CASE("from_edges numbering") {
    const std::vector<VertexPair> one{{0, 1}};
    auto g = from_edges(2, one);
    CHECK(g.num_vertices() == 2);
    CHECK(g.num_darts() == 2);
    CHECK(g.mate(0) == 1);
    CHECK(g.is_ordinary_dart(0));

    const std::vector<VertexId> v0{0};
    auto loop = from_edges(1, {}, v0);
    CHECK(loop.num_darts() == 2);
    CHECK(degree(loop, 0) == 2);
    CHECK(loop.is_loop_dart(0));
    CHECK(classify(loop).has_loop);

    auto semi = from_edges(1, {}, {}, v0);
    CHECK(semi.num_darts() == 1);
    CHECK(degree(semi, 0) == 1);
    CHECK(semi.is_semi_edge(0));
    CHECK(classify(semi).has_semi_edge);
    CHECK_FALSE(classify(semi).multigraph());

    // lower endpoint first, then loops, then semi-edges
    const std::vector<VertexPair> rev{{2, 0}};
    const std::vector<VertexId> l{1};
    const std::vector<VertexId> s{2};
    auto mixed = from_edges(3, rev, l, s);
    CHECK(std::vector<VertexId>(mixed.incidence_map().begin(), mixed.incidence_map().end()) ==
          std::vector<VertexId>{0, 2, 1, 1, 2});

    const std::vector<VertexPair> bad{{0, 3}};
    CHECK_THROWS_AS(from_edges(3, bad), GraphError);
    CHECK_THROWS_AS(from_edges(3, {}, {}, std::vector<VertexId>{5}), GraphError);
}

TEST_CASE("constructor rejects broken pairings") {
    CHECK_THROWS_AS(GeneralizedGraph(2, {0, 1}, {1, 1}), GraphError);
    CHECK_THROWS_AS(GeneralizedGraph(2, {0, 1}, {2, 0}), GraphError);
    CHECK_THROWS_AS(GeneralizedGraph(1, {0, 1}, {1, 0}), GraphError);
    CHECK_THROWS_AS(GeneralizedGraph(1, {0}, {0, 0}), GraphError);
    CHECK_NOTHROW(GeneralizedGraph(3, {}, {}));
}

TEST_CASE("degree examples") {
    auto k4 = complete_graph(4);
    for (VertexId v = 0; v < 4; ++v) {
        CHECK(degree(k4, v) == 3);
    }
    auto d4 = dipole(4);
    CHECK(degree(d4, 0) == 4);
    CHECK(degree(d4, 1) == 4);
    CHECK_THROWS_AS(degree(d4, 2), GraphError);

    const auto fig3 = small_graph(7, 4);
    CHECK(degree(*fig3.graph, 6) == 7);
    std::size_t semis_at_6 = 0;
    for (DartId x : fig3.graph->darts_at(6)) {
        semis_at_6 += fig3.graph->is_semi_edge(x) ? 1 : 0;
    }
    CHECK(semis_at_6 == 1);
}

TEST_CASE("classify examples") {
    auto k5 = classify(complete_graph(5));
    CHECK(k5.simple());
    CHECK(k5.regular_degree == 4);

    auto d6 = classify(dipole(6));
    CHECK(d6.has_parallel_edge);
    CHECK_FALSE(d6.has_loop);
    CHECK_FALSE(d6.has_semi_edge);
    CHECK(d6.regular_degree == 6);

    auto fig3 = classify(*small_graph(7, 4).graph);
    CHECK(fig3.has_semi_edge);
    CHECK(fig3.regular_degree == 7);

    const std::vector<VertexPair> path{{0, 1}, {1, 2}};
    CHECK_FALSE(classify(from_edges(3, path)).regular_degree.has_value());
    CHECK_THROWS_AS(regular_degree_or_throw(from_edges(3, path)), GraphError);
}

TEST_CASE("tensor product") {
    SUBCASE("K5 x K2") {
        auto p = tensor_product(complete_graph(5), complete_graph(2));
        CHECK(p.num_vertices() == 10);
        auto cls = classify(p);
        CHECK(cls.simple());
        CHECK(cls.regular_degree == 4);
        check_core_invariants(p);
    }
    SUBCASE("semi-edge unit") {
        const std::vector<VertexId> v0{0};
        auto unit = from_edges(1, {}, {}, v0);
        auto g = complete_graph(4);
        auto p = tensor_product(g, unit);
        CHECK(p.num_vertices() == 4);
        CHECK(p.num_darts() == g.num_darts());
        CHECK(p.pairing_map().size() == g.pairing_map().size());
        for (DartId x = 0; x < g.num_darts(); ++x) {
            CHECK(p.incidence(x) == g.incidence(x));
            CHECK(p.mate(x) == g.mate(x));
        }
    }
    SUBCASE("loop x loop") {
        const std::vector<VertexId> v0{0};
        auto loop = from_edges(1, {}, v0);
        auto p = tensor_product(loop, loop);
        CHECK(p.num_vertices() == 1);
        CHECK(degree(p, 0) == 4);
        // (0,0)<->(1,1) and (0,1)<->(1,0)
        CHECK(p.mate(0) == 3);
        CHECK(p.mate(1) == 2);
        check_core_invariants(p);
    }
    SUBCASE("degree law on mixed factors") {
        const std::vector<VertexPair> e{{0, 1}, {1, 2}};
        const std::vector<VertexId> l{0};
        const std::vector<VertexId> s{2};
        auto g = from_edges(3, e, l, s);
        auto h = dipole(3);
        auto p = tensor_product(g, h);
        for (VertexId u = 0; u < 3; ++u) {
            for (VertexId v = 0; v < 2; ++v) {
                CHECK(degree(p, u * 2 + v) == degree(g, u) * degree(h, v));
            }
        }
        check_core_invariants(p);
    }
}

TEST_CASE("verify_cover examples") {
    auto k4 = complete_graph(4);
    CHECK(verify_cover(k4, {{0}, 1, 3}).ok);

    auto c6 = oracle::cycle(6);
    CHECK(verify_cover(c6, {{0, 2, 4}, 2, 2}).ok);

    auto p = tensor_product(complete_graph(5), complete_graph(2));
    CHECK(verify_cover(p, {{0, 1}, 1, 4}).ok);
}

TEST_CASE("verify_cover failures") {
    auto c6 = oracle::cycle(6);
    SUBCASE("edge inside S") {
        auto rep = verify_cover(c6, {{0, 1}, 1, 2});
        CHECK_FALSE(rep.ok);
        CHECK(rep.failures.front().vertex == 0);
    }
    SUBCASE("wrong count") {
        auto rep = verify_cover(c6, {{0, 3}, 2, 2});
        CHECK_FALSE(rep.ok);
        CHECK(rep.failures.front().vertex == 1);
    }
    SUBCASE("loop inside S") {
        const std::vector<VertexId> l{0};
        auto g = from_edges(1, {}, l);
        CHECK_FALSE(verify_cover(g, {{0}, 1, 2}).ok);
    }
    SUBCASE("semi-edge inside S") {
        auto g = *small_graph(7, 4).graph;
        CHECK_FALSE(verify_cover(g, {{6}, 1, 7}).ok);
    }
    SUBCASE("parallel edges count with multiplicity") {
        auto d2 = dipole(2);
        CHECK(verify_cover(d2, {{1}, 2, 2}).ok);
        CHECK_FALSE(verify_cover(d2, {{1}, 1, 2}).ok);
    }
    SUBCASE("preconditions") {
        CHECK_THROWS_AS(verify_cover(c6, {{0, 2, 4}, 2, 3}), GraphError);
        CHECK_THROWS_AS(verify_cover(c6, {{2, 0}, 1, 2}), GraphError);
        CHECK_THROWS_AS(verify_cover(c6, {{9}, 1, 2}), GraphError);
        CHECK_THROWS_AS(verify_cover(c6, {{0}, 0, 2}), GraphError);
        CHECK_THROWS_AS(verify_cover(c6, {{0}, 3, 2}), GraphError);
        const std::vector<VertexPair> path{{0, 1}, {1, 2}};
        CHECK_THROWS_AS(verify_cover(from_edges(3, path), {{0}, 1, 1}), GraphError);
    }
}

TEST_CASE("enumerate_covers examples") {
    auto k4 = complete_graph(4);
    auto k4c = enumerate_covers(k4, 1);
    REQUIRE(k4c.size() == 4);
    for (VertexId v = 0; v < 4; ++v) {
        CHECK(k4c[v].subset == std::vector<VertexId>{v});
        CHECK(k4c[v].r == 1);
        CHECK(k4c[v].d == 3);
    }
    auto c6 = enumerate_covers(oracle::cycle(6), 2);
    REQUIRE(c6.size() == 2);
    CHECK(c6[0].subset == std::vector<VertexId>{0, 2, 4});
    CHECK(c6[1].subset == std::vector<VertexId>{1, 3, 5});
    CHECK(enumerate_covers(k4, 2).empty());
    CHECK_THROWS_AS(enumerate_covers(oracle::cycle(kMaxEnumerationVertices + 1), 1), GraphError);
}

TEST_CASE("exact_cover_size") {
    CHECK(exact_cover_size(40, 3, 1) == 10u);
    CHECK(exact_cover_size(40, 3, 3) == 20u);
    CHECK_FALSE(exact_cover_size(4, 3, 2).has_value());
}

TEST_CASE("cover size consequence on random circulants") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t n = 4 + rng() % 9;
        std::vector<long> gens;
        for (long s = 1; s <= static_cast<long>(n / 2); ++s) {
            if (rng() % 2) {
                gens.push_back(s);
            }
        }
        if (gens.empty()) {
            continue;
        }
        auto g = circulant(n, gens);
        const std::size_t d = regular_degree_or_throw(g);
        for (std::size_t r = 1; r <= d; ++r) {
            for (const auto& c : enumerate_covers(g, r)) {
                CHECK(verify_cover(g, c).ok);
                CHECK(c.subset.size() * (d + r) == r * n);
            }
        }
    }
}

TEST_CASE("disjoint copies and dart subgraphs") {
    auto k3 = complete_graph(3);
    auto two = disjoint_copies(k3, 2);
    CHECK(two.num_vertices() == 6);
    CHECK(two.num_darts() == 12);
    CHECK(two.incidence(6) == k3.incidence(0) + 3);
    CHECK(two.mate(6) == k3.mate(0) + 6);
    check_core_invariants(two);

    std::vector<bool> keep(k3.num_darts(), false);
    keep[0] = keep[k3.mate(0)] = true;
    auto [sub, back] = dart_subgraph(k3, keep);
    CHECK(sub.num_vertices() == 3);
    CHECK(sub.num_darts() == 2);
    CHECK(back == std::vector<DartId>{0, k3.mate(0)});

    std::vector<bool> open(k3.num_darts(), false);
    open[0] = true;
    CHECK_THROWS_AS(dart_subgraph(k3, open), GraphError);
}

TEST_CASE("ordinary_edges lists multiplicity") {
    auto e = ordinary_edges(dipole(3));
    CHECK(e.size() == 3);
    for (auto [u, v] : e) {
        CHECK(u == 0);
        CHECK(v == 1);
    }
}

TEST_CASE("builder") {
    GraphBuilder b(3);
    CHECK(b.add_edge(2, 0) == 0);
    CHECK(b.add_loop(1) == 2);
    CHECK(b.add_semi_edge(1) == 4);
    CHECK_THROWS_AS(b.add_edge(1, 1), GraphError);
    CHECK_THROWS_AS(b.add_semi_edge(3), GraphError);
    auto g = std::move(b).build();
    CHECK(g.num_darts() == 5);
    CHECK(g.incidence(0) == 0);
    CHECK(g.incidence(1) == 2);
    check_core_invariants(g);
}
