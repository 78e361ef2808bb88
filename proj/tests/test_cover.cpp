#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "indcover/atlas.hpp"
#include "indcover/cover.hpp"
#include "support.hpp"

#include <random>

using namespace indcover;

namespace {

std::vector<GeneralizedGraph> atlas_graphs_up_to(std::size_t max_vertices) {
    std::vector<GeneralizedGraph> out;
    for (std::size_t d = 1; d <= max_vertices; ++d) {
        if (d + 1 <= max_vertices) {
            out.push_back(*complete_entry(d).graph);
        }
        out.push_back(*dipole_entry(d).graph);
        for (std::size_t r = 1; r <= d; ++r) {
            if (d + r <= max_vertices) {
                out.push_back(*small_graph(d, r).graph);
            }
            auto c = compressed_graph(d, r);
            if (c.graph->num_vertices() <= max_vertices) {
                out.push_back(*c.graph);
            }
        }
    }
    return out;
}

}  // namespace

TEST_CASE("enumerate_covers agrees with unpruned search on atlas graphs") {
    const auto graphs = atlas_graphs_up_to(12);
    CHECK(graphs.size() > 50);
    for (const auto& g : graphs) {
        const std::size_t d = regular_degree_or_throw(g);
        for (std::size_t r = 1; r <= d; ++r) {
            std::vector<std::vector<VertexId>> fast;
            for (const auto& c : enumerate_covers(g, r)) {
                fast.push_back(c.subset);
            }
            CHECK(fast == oracle::all_exact_covers(g, r));
        }
    }
}

TEST_CASE("serial and parallel cover verification agree") {
    std::mt19937 rng(11);
    const auto graphs = atlas_graphs_up_to(14);
    for (const auto& g : graphs) {
        const std::size_t n = g.num_vertices();
        const std::size_t d = regular_degree_or_throw(g);
        for (int trial = 0; trial < 20; ++trial) {
            CoverCertificate c{{}, 1 + rng() % d, d};
            for (VertexId v = 0; v < n; ++v) {
                if (rng() % 3 == 0) {
                    c.subset.push_back(v);
                }
            }
            const auto a = verify_cover(g, c);
            const auto b = verify_cover_serial(g, c);
            CHECK(a.ok == b.ok);
            REQUIRE(a.failures.size() == b.failures.size());
            for (std::size_t i = 0; i < a.failures.size(); ++i) {
                CHECK(a.failures[i].vertex == b.failures[i].vertex);
                CHECK(a.failures[i].reason == b.failures[i].reason);
            }
            std::vector<bool> in_s(n, false);
            for (VertexId v : c.subset) {
                in_s[v] = true;
            }
            CHECK(a.ok == oracle::is_exact_cover(g, in_s, c.r));
        }
    }
}

TEST_CASE("failure list is capped and ascending") {
    const auto g = oracle::cycle(40);
    const auto rep = verify_cover(g, {{0}, 1, 2});
    CHECK_FALSE(rep.ok);
    CHECK(rep.failures.size() <= 10);
    for (std::size_t i = 1; i < rep.failures.size(); ++i) {
        CHECK(rep.failures[i - 1].vertex < rep.failures[i].vertex);
    }
}

TEST_CASE("membership mask") {
    CHECK(membership_mask(4, {1, 3}) == std::vector<std::uint8_t>{0, 1, 0, 1});
}
