#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "indcover/atlas.hpp"
#include "indcover/io.hpp"
#include "indcover/pipeline.hpp"
#include "support.hpp"

#include <filesystem>
#include <random>

using namespace indcover;

TEST_CASE("GGF layout") {
    const std::vector<VertexPair> e{{0, 1}};
    const std::vector<VertexId> l{1};
    const std::vector<VertexId> s{0};
    const auto g = from_edges(2, e, l, s);
    CHECK(write_ggf(g) ==
          "ggf 1\nvertices 2\ndarts 5\nincidence 0 1 1 1 0\npair 0 1\npair 2 3\nsemi 4\n");
    CHECK(read_ggf(write_ggf(g)) == g);
    CHECK(write_ggf(GeneralizedGraph(0, {}, {})) == "ggf 1\nvertices 0\ndarts 0\nincidence\n");
}

TEST_CASE("GGF round trip") {
    std::vector<GeneralizedGraph> graphs{complete_graph(5), dipole(4), *small_graph(7, 4).graph,
                                         *compressed_graph(6, 4).graph,
                                         *build_all_covers(3, Strategy::minimal).graph};
    const std::vector<VertexId> l{0, 0};
    graphs.push_back(from_edges(1, {}, l));
    std::mt19937 rng(9);
    for (int t = 0; t < 50; ++t) {
        const std::size_t n = 1 + rng() % 8;
        GraphBuilder b(n);
        for (int k = 0; k < 12; ++k) {
            const VertexId u = rng() % n;
            const VertexId v = rng() % n;
            switch (rng() % 3) {
            case 0:
                if (u != v) {
                    b.add_edge(u, v);
                }
                break;
            case 1:
                b.add_loop(u);
                break;
            default:
                b.add_semi_edge(u);
            }
        }
        graphs.push_back(std::move(b).build());
    }
    for (const auto& g : graphs) {
        const auto text = write_ggf(g);
        const auto back = read_ggf(text);
        CHECK(back == g);
        CHECK(write_ggf(back) == text);
    }
}

TEST_CASE("GGF parser is strict") {
    const std::string head = "ggf 1\nvertices 2\ndarts 4\nincidence 0 1 0 1\n";
    CHECK_NOTHROW(read_ggf(head + "pair 0 1\npair 2 3\n"));
    CHECK_NOTHROW(read_ggf(head + "pair 0 1\npair 2 3"));
    CHECK_THROWS_AS(read_ggf(head + "pair 0 1\n"), ParseError);                     // gap
    CHECK_THROWS_AS(read_ggf(head + "pair 0 1\npair 1 2\npair 2 3\n"), ParseError);  // duplicate
    CHECK_THROWS_AS(read_ggf(head + "pair 0 1\npair 0 1\npair 2 3\n"), ParseError);
    CHECK_THROWS_AS(read_ggf(head + "pair 2 3\npair 0 1\n"), ParseError);            // order
    CHECK_THROWS_AS(read_ggf(head + "pair 1 0\npair 2 3\n"), ParseError);            // i > j
    CHECK_THROWS_AS(read_ggf(head + "pair 0 0\npair 2 3\n"), ParseError);
    CHECK_THROWS_AS(read_ggf(head + "pair 0 1\npair 2 4\n"), ParseError);            // range
    CHECK_THROWS_AS(read_ggf(head + "pair 0 1\npair 2 3\nsemi 3\n"), ParseError);
    CHECK_THROWS_AS(read_ggf(head + "pair 0 1\nedge 2 3\n"), ParseError);
    CHECK_THROWS_AS(read_ggf(head + "pair 0 1\npair 2 x\n"), ParseError);
    CHECK_THROWS_AS(read_ggf(head + "pair 0 1\npair 2 -3\n"), ParseError);
    CHECK_THROWS_AS(read_ggf("ggf 2\nvertices 1\ndarts 0\nincidence\n"), ParseError);
    CHECK_THROWS_AS(read_ggf("ggf 1\nvertices 1\ndarts 2\nincidence 0\n"), ParseError);
    CHECK_THROWS_AS(read_ggf("ggf 1\nvertices 1\ndarts 1\nincidence 3\nsemi 0\n"), ParseError);
    CHECK_THROWS_AS(read_ggf("ggf 1\ndarts 1\nvertices 1\nincidence 0\nsemi 0\n"), ParseError);
    CHECK_THROWS_AS(read_ggf(""), ParseError);
    CHECK_NOTHROW(read_ggf("ggf 1\nvertices 1\ndarts 1\nincidence 0\nsemi 0\n"));
}

TEST_CASE("cover files") {
    const CoverCertificate c{{7, 8, 9}, 3, 7};
    CHECK(write_cover(c) == "cover d=7 r=3\n7 8 9\n");
    CHECK(read_cover(write_cover(c)) == c);
    CHECK(read_cover("cover d=2 r=1\n\n").subset.empty());
    CHECK_THROWS_AS(read_cover("cover d=7 r=3\n9 8 7\n"), ParseError);
    CHECK_THROWS_AS(read_cover("cover d=7 r=3\n7 7\n"), ParseError);
    CHECK_THROWS_AS(read_cover("cover r=3 d=7\n7\n"), ParseError);
    CHECK_THROWS_AS(read_cover("cover d=7\n7\n"), ParseError);
    CHECK_THROWS_AS(read_cover("cover d= r=3\n7\n"), ParseError);
    CHECK_THROWS_AS(read_cover("cov d=7 r=3\n7\n"), ParseError);
}

TEST_CASE("edges files") {
    const auto g = oracle::cycle(4);
    CHECK(write_edges(g) == "0 1\n0 3\n1 2\n2 3\n");
    const auto back = read_edges(write_edges(g));
    CHECK(ordinary_edges(back) == ordinary_edges(g));
    CHECK(read_edges("0 1\n", 5).num_vertices() == 5);
    CHECK_THROWS_AS(read_edges("0 1\n", 1), ParseError);
    CHECK_THROWS_AS(read_edges("0 0\n"), ParseError);
    CHECK_THROWS_AS(read_edges("0 1 2\n"), ParseError);
    CHECK_THROWS_AS(write_edges(dipole(2)), GraphError);
}

TEST_CASE("covering map files") {
    const auto b = build_all_covers(3, Strategy::minimal);
    for (const auto& p : b.projections) {
        CHECK(read_covmap(write_covmap(p)) == p.dart_map);
    }
    CHECK_THROWS_AS(read_covmap("covmap 3\ndartmap 0 1\n"), ParseError);
    CHECK_THROWS_AS(read_covmap("covmap 1\n"), ParseError);
}

TEST_CASE("factorization dumps") {
    const auto k4 = complete_entry(3);
    const auto f = factorize_with_matching(*k4.graph, *k4.matching);
    const auto text = write_factorization(f);
    CHECK(text.rfind("factor a=1 b=1\ncolor ", 0) == 0);
    CHECK(read_factorization(text) == f);
    const auto c5 = two_factorize(oracle::cycle(5));
    CHECK(read_factorization(write_factorization(c5)) == c5);
    const auto d1 = factorize_with_matching(dipole(1), {0, 1});
    CHECK(write_factorization(d1) == "factor a=1 b=0\ncolor 0 0\nforward\n");
    CHECK(read_factorization(write_factorization(d1)) == d1);
    CHECK_THROWS_AS(read_factorization("factor a=0 b=1\ncolor 0 0\nforward 1\n"), ParseError);
    CHECK_THROWS_AS(read_factorization("factor a=0 b=1\ncolor 0 0\nforward 102\n"), ParseError);
}

TEST_CASE("vertex lists and files") {
    CHECK(read_vertex_list("3 1\n  2\n\n") == std::vector<VertexId>{3, 1, 2});
    CHECK_THROWS_AS(read_vertex_list("1 a\n"), ParseError);

    const auto dir = std::filesystem::temp_directory_path() / "indcover_io_test";
    std::filesystem::create_directories(dir);
    write_file(dir / "x.txt", "hello\n");
    CHECK(read_file(dir / "x.txt") == "hello\n");
    CHECK_THROWS(read_file(dir / "missing.txt"));
    CHECK_THROWS(write_file(dir / "no" / "such" / "dir.txt", "x"));
    std::filesystem::remove_all(dir);
}
