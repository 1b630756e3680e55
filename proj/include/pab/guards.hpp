#pragma once

#include "pab/errors.hpp"

namespace pab {

// Size guards for the exact searches.  All of them are configuration: the
// defaults keep desk-scale runs comfortably fast, and every limit can be
// raised (or effectively removed) by the caller.
struct Guards {
    int chromatic_max_vertices = 40;        // exact chromatic number
    int clique_max_vertices = 64;           // exact clique / independent set
    int embed_pattern_max_vertices = 12;    // induced_embedding pattern side
    int detect_pattern_max_vertices = 10;   // generic subdivision pattern
    int detect_host_generic = 24;           // subdivision host, generic pattern
    int detect_host_pattern = 40;           // subdivision host, P(a,b)-specialised
    int kss_host_max_vertices = 48;         // K_{s,s} search
    int connectivity_max_vertices = 64;

    static Guards unlimited() {
        Guards g;
        g.chromatic_max_vertices = 1 << 28;
        g.clique_max_vertices = 1 << 28;
        g.embed_pattern_max_vertices = 1 << 28;
        g.detect_pattern_max_vertices = 1 << 28;
        g.detect_host_generic = 1 << 28;
        g.detect_host_pattern = 1 << 28;
        g.kss_host_max_vertices = 1 << 28;
        g.connectivity_max_vertices = 1 << 28;
        return g;
    }
};

inline const Guards& default_guards() {
    static const Guards g{};
    return g;
}

inline void check_guard(const char* parameter, long long value, long long limit) {
    if (value > limit) throw GuardError(parameter, value, limit);
}

} // namespace pab
