#include <catch2/catch_amalgamated.hpp>

#include "pab/formats.hpp"
#include "pab/generators.hpp"
#include "pab/rng.hpp"

#include "support/catalog.hpp"

using namespace pab;

TEST_CASE("graph6 known encodings") {
    // "D?{" is 5 vertices with vertex 4 joined to all others
    Graph g = parse_graph6("D?{");
    CHECK(g.vertex_count() == 5);
    CHECK(g.edge_count() == 4);
    for (int v = 0; v < 4; ++v) CHECK(g.adjacent(v, 4));
    CHECK(emit_graph6(g) == "D?{");

    CHECK(emit_graph6(Graph(1)) == "@");
    CHECK(parse_graph6("@").vertex_count() == 1);

    // trailing newline tolerated, header accepted
    CHECK(parse_graph6("D?{\n") == g);
    CHECK(parse_graph6(">>graph6<<D?{") == g);
}

TEST_CASE("graph6 error kinds are distinct") {
    auto kind_of = [](const char* text) {
        try {
            parse_graph6(text);
        } catch (const FormatError& e) {
            return e.kind();
        }
        return FormatErrorKind::EmptyInput; // unreachable in these cases
    };
    CHECK(kind_of("") == FormatErrorKind::EmptyInput);
    CHECK(kind_of(">>sparse6<<D?{") == FormatErrorKind::BadHeader);
    CHECK(kind_of("D?") == FormatErrorKind::Truncated);
    CHECK(kind_of("D?{{") == FormatErrorKind::TrailingJunk);
    CHECK(kind_of("D?\x01") == FormatErrorKind::InvalidByte);
}

TEST_CASE("graph6 nonzero padding is rejected") {
    // K2: n=2, one pair bit; the data byte 'o' (111 - 63 = 48 = 110000b)
    // sets the edge bit and one pad bit
    bool caught = false;
    try {
        parse_graph6("Ao");
    } catch (const FormatError& e) {
        caught = e.kind() == FormatErrorKind::BadPadding;
    }
    CHECK(caught);
    CHECK(parse_graph6("A_").edge_count() == 1); // '_' = 100000b, clean padding
}

TEST_CASE("graph6 long-form size field") {
    Graph g = gen_cycle(100);
    std::string text = emit_graph6(g);
    CHECK((unsigned char)text[0] == 126);
    Graph back = parse_graph6(text);
    CHECK(back == g);
    CHECK(emit_graph6(back) == text);
}

TEST_CASE("dimacs round trip and errors") {
    Graph g = build_graph(4, {{0, 1}, {1, 2}, {2, 3}});
    std::string text = emit_dimacs(g);
    CHECK(text == "p edge 4 3\ne 1 2\ne 2 3\ne 3 4\n");
    CHECK(parse_dimacs(text) == g);

    CHECK(parse_dimacs("c comment\np edge 2 1\ne 1 2\n").edge_count() == 1);

    auto kind_of = [](const std::string& text_in) {
        try {
            parse_dimacs(text_in);
        } catch (const FormatError& e) {
            return e.kind();
        }
        return FormatErrorKind::EmptyInput;
    };
    CHECK(kind_of("") == FormatErrorKind::EmptyInput);
    CHECK(kind_of("e 1 2\n") == FormatErrorKind::BadHeader);
    CHECK(kind_of("p edge 2 2\ne 1 2\n") == FormatErrorKind::BadEdgeCount);
    CHECK(kind_of("p edge 2 1\ne 1 3\n") == FormatErrorKind::OutOfRange);
    CHECK(kind_of("p edge 2 1\ne 1 1\n") == FormatErrorKind::SelfLoop);
    CHECK(kind_of("p edge 2 1\ne one two\n") == FormatErrorKind::BadToken);
    CHECK(kind_of("p edge 2 1\nq 1 2\n") == FormatErrorKind::BadToken);
}

TEST_CASE("edge list round trip") {
    Graph g = build_graph(4, {{0, 1}, {2, 3}});
    std::string text = emit_edge_list(g);
    CHECK(text == "0 1\n2 3\n");
    CHECK(parse_edge_list(text) == g);
    CHECK(parse_edge_list("").vertex_count() == 0);
    CHECK_THROWS_AS(parse_edge_list("0 0\n"), FormatError);
}

TEST_CASE("round trips are bit-exact on a mixed corpus") {
    SplitMix64 rng(2024);
    std::vector<Graph> corpus;
    for (int n = 0; n <= 6; ++n)
        for (const Graph& g : pab_test::all_graphs(n)) corpus.push_back(g);
    while (corpus.size() < 1200) {
        int n = 1 + rng.next_below(30);
        double p = rng.next_unit();
        corpus.push_back(gen_random(n, p, rng.next()));
    }
    for (const Graph& g : corpus) {
        std::string g6 = emit_graph6(g);
        Graph back = parse_graph6(g6);
        REQUIRE(back == g);
        REQUIRE(emit_graph6(back) == g6);

        std::string dimacs = emit_dimacs(g);
        Graph back2 = parse_dimacs(dimacs);
        REQUIRE(back2 == g);
        REQUIRE(emit_dimacs(back2) == dimacs);
    }
}
