#pragma once

#include "pab/errors.hpp"
#include "pab/graph.hpp"

namespace pab {

struct PartTrace {
    int neighbours = 0;
    int non_neighbours = 0;
};

// Per-part neighbour/non-neighbour counts of one vertex against a list of
// parts; neighbours + non_neighbours always equals the part size.  The
// a-connected / a-disconnected predicates read off this profile.
struct TraceProfile {
    std::vector<PartTrace> parts;

    // at most `a` non-neighbours in part i
    bool a_disconnected(std::size_t i, int a) const { return parts[i].non_neighbours <= a; }
    // at most `a` neighbours in part i
    bool a_connected(std::size_t i, int a) const { return parts[i].neighbours <= a; }
};

inline TraceProfile trace(const Graph& g, int v, const std::vector<VertexList>& parts) {
    TraceProfile profile;
    for (const auto& part : parts) {
        PartTrace t;
        for (int u : part) {
            if (u == v)
                throw PreconditionError("trace: vertex " + std::to_string(v) +
                                        " lies inside a part");
            if (g.adjacent(v, u))
                ++t.neighbours;
            else
                ++t.non_neighbours;
        }
        profile.parts.push_back(t);
    }
    return profile;
}

} // namespace pab
