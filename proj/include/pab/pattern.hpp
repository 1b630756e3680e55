#pragma once

#include "pab/errors.hpp"
#include "pab/graph.hpp"

namespace pab {

enum class PatternRole { Apex, Pair, PartA, PartB };

// The pattern family P(a,b): the complete bipartite graph K_{a,b+2} plus an
// apex vertex adjacent to exactly two vertices x, y of the (b+2)-side.
// Vertex layout is fixed:
//   0           apex
//   1, 2        the pair {x, y}
//   3 .. 2+a    the A-part
//   3+a .. 2+a+b  the B-part
// Edges: apex-pair, pair x A, A x B, and nothing else.
struct PatternPab {
    int a = 0;
    int b = 0;
    Graph underlying;
    std::vector<PatternRole> roles;

    int apex() const { return 0; }
    std::pair<int, int> pair_vertices() const { return {1, 2}; }
    VertexList part_a() const {
        VertexList out;
        for (int i = 0; i < a; ++i) out.push_back(3 + i);
        return out;
    }
    VertexList part_b() const {
        VertexList out;
        for (int i = 0; i < b; ++i) out.push_back(3 + a + i);
        return out;
    }
    int vertex_count() const { return 3 + a + b; }
};

inline PatternPab gen_pattern(int a, int b) {
    if (a < 1) throw PreconditionError("gen_pattern: a must be >= 1");
    if (b < 1) throw PreconditionError("gen_pattern: b must be >= 1");
    int n = 3 + a + b;
    EdgeList edges;
    edges.emplace_back(0, 1);
    edges.emplace_back(0, 2);
    for (int i = 0; i < a; ++i) {
        edges.emplace_back(1, 3 + i);
        edges.emplace_back(2, 3 + i);
    }
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j) edges.emplace_back(3 + i, 3 + a + j);

    PatternPab p;
    p.a = a;
    p.b = b;
    p.underlying = Graph(n, edges);
    p.roles.assign(n, PatternRole::PartB);
    p.roles[0] = PatternRole::Apex;
    p.roles[1] = p.roles[2] = PatternRole::Pair;
    for (int i = 0; i < a; ++i) p.roles[3 + i] = PatternRole::PartA;
    return p;
}

} // namespace pab
