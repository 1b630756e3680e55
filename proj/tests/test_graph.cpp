#include <catch2/catch_amalgamated.hpp>

#include "pab/graph.hpp"
#include "pab/generators.hpp"
#include "pab/rng.hpp"
#include "pab/trace.hpp"

using namespace pab;

TEST_CASE("build_graph basics") {
    Graph empty = build_graph(0, {});
    CHECK(empty.vertex_count() == 0);
    CHECK(empty.edge_count() == 0);

    Graph k3 = build_graph(3, {{0, 1}, {1, 2}, {0, 2}});
    CHECK(k3.edge_count() == 3);
    CHECK(k3.adjacent(0, 2));
    CHECK(is_complete(k3));

    Graph p4 = build_graph(4, {{0, 1}, {1, 2}, {2, 3}});
    CHECK(p4.edge_count() == 3);
    CHECK(p4.degree(0) == 1);
    CHECK(p4.degree(1) == 2);
    CHECK_FALSE(p4.adjacent(0, 3));
}

TEST_CASE("build_graph rejects bad edges") {
    CHECK_THROWS_AS(build_graph(3, {{0, 3}}), std::invalid_argument);
    CHECK_THROWS_AS(build_graph(3, {{1, 1}}), std::invalid_argument);
    CHECK_THROWS_WITH(build_graph(3, {{1, 1}}), Catch::Matchers::ContainsSubstring("(1,1)"));
}

TEST_CASE("duplicate edges collapse") {
    Graph g = build_graph(2, {{0, 1}, {1, 0}, {0, 1}});
    CHECK(g.edge_count() == 1);
}

TEST_CASE("neighbours and edges are sorted") {
    Graph g = build_graph(5, {{4, 0}, {2, 0}, {0, 3}});
    CHECK(g.neighbours(0) == VertexList{2, 3, 4});
    CHECK(g.edges() == EdgeList{{0, 2}, {0, 3}, {0, 4}});
}

TEST_CASE("induced subgraph records the id mapping") {
    Graph g = build_graph(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}});
    InducedSubgraph sub = induced_subgraph(g, {5, 0, 1});
    CHECK(sub.vertices == VertexList{0, 1, 5});
    CHECK(sub.graph.vertex_count() == 3);
    CHECK(sub.graph.adjacent(0, 1)); // 0-1
    CHECK(sub.graph.adjacent(0, 2)); // 0-5
    CHECK_FALSE(sub.graph.adjacent(1, 2));
}

TEST_CASE("complement") {
    Graph c5 = gen_cycle(5);
    Graph co = complement(c5);
    CHECK(co.edge_count() == 5);
    for (int u = 0; u < 5; ++u)
        for (int v = u + 1; v < 5; ++v) CHECK(c5.adjacent(u, v) != co.adjacent(u, v));
}

TEST_CASE("set predicates") {
    Graph g = gen_complete_multipartite({2, 3});
    CHECK(is_independent_set(g, {0, 1}));
    CHECK(is_independent_set(g, {2, 3, 4}));
    CHECK_FALSE(is_independent_set(g, {0, 2}));
    CHECK(is_complete_between(g, {0, 1}, {2, 3, 4}));
    CHECK(is_anticomplete_between(g, {0}, {1}));
    CHECK(is_clique(g, {0, 2}));
}

TEST_CASE("components") {
    Graph g = build_graph(5, {{0, 1}, {2, 3}});
    auto comps = connected_components(g);
    REQUIRE(comps.size() == 3);
    CHECK(comps[0] == VertexList{0, 1});
    CHECK(comps[1] == VertexList{2, 3});
    CHECK(comps[2] == VertexList{4});
    CHECK_FALSE(is_connected(g));
    CHECK(is_connected(build_graph(1, {})));
}

TEST_CASE("trace profiles") {
    Graph g = build_graph(8, {{7, 1}, {7, 2}, {7, 3}, {7, 4}});
    std::vector<VertexList> parts{{1, 2, 3}, {4, 5, 6}};

    SECTION("counts per part") {
        TraceProfile t = trace(g, 7, parts);
        CHECK(t.parts[0].neighbours == 3);
        CHECK(t.parts[0].non_neighbours == 0);
        CHECK(t.parts[1].neighbours == 1);
        CHECK(t.parts[1].non_neighbours == 2);
        CHECK(t.a_disconnected(0, 0));
        CHECK(t.a_connected(1, 1));
    }

    SECTION("isolated vertex") {
        TraceProfile t = trace(g, 0, parts);
        CHECK(t.parts[0].neighbours == 0);
        CHECK(t.parts[0].non_neighbours == 3);
    }

    SECTION("vertex inside a part is rejected") {
        CHECK_THROWS_AS(trace(g, 2, parts), PreconditionError);
    }

    SECTION("sums match part sizes on random instances") {
        SplitMix64 rng(7);
        for (int trial = 0; trial < 50; ++trial) {
            Graph h = gen_random(10, 0.4, rng.next());
            std::vector<VertexList> ps{{0, 1, 2}, {3, 4, 5, 6}};
            for (int v = 7; v < 10; ++v) {
                TraceProfile t = trace(h, v, ps);
                for (std::size_t i = 0; i < ps.size(); ++i) {
                    CHECK(t.parts[i].neighbours + t.parts[i].non_neighbours ==
                          (int)ps[i].size());
                    // independent recount
                    int nb = 0;
                    for (int u : ps[i])
                        if (h.adjacent(u, v)) ++nb;
                    CHECK(t.parts[i].neighbours == nb);
                }
            }
        }
    }
}
