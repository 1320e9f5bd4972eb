#ifndef ATG_CONFIG_HPP
#define ATG_CONFIG_HPP

#include <cstdlib>
#include <string>

namespace atg {

// Size guards.  Defaults keep every operation at desk scale; each can be
// raised through an environment variable of the same name.
struct Guards {
    int max_search_edges = 24;    // ATG_MAX_SEARCH_EDGES: orientation search
    int max_count_edges = 30;     // ATG_MAX_COUNT_EDGES: Eulerian counting
    int max_coeff_edges = 24;     // ATG_MAX_COEFF_EDGES: coefficient oracle
    int max_coeff_vertices = 10;  // ATG_MAX_COEFF_VERTICES
    int max_canonical_vertices = 10;   // ATG_MAX_CANONICAL_VERTICES
    int max_enumerate_vertices = 8;    // ATG_MAX_ENUMERATE_VERTICES
    int max_choosable_vertices = 7;    // ATG_MAX_CHOOSABLE_VERTICES
    int max_choosable_palette = 20;    // ATG_MAX_CHOOSABLE_PALETTE (sum of f)
    int max_paintable_vertices = 8;    // ATG_MAX_PAINTABLE_VERTICES
    int max_coloring_vertices = 12;    // ATG_MAX_COLORING_VERTICES
};

inline int env_int(const char* name, int fallback) {
    const char* s = std::getenv(name);
    if (!s || !*s) return fallback;
    return std::atoi(s);
}

inline const Guards& guards() {
    static const Guards g = [] {
        Guards d;
        d.max_search_edges = env_int("ATG_MAX_SEARCH_EDGES", d.max_search_edges);
        d.max_count_edges = env_int("ATG_MAX_COUNT_EDGES", d.max_count_edges);
        d.max_coeff_edges = env_int("ATG_MAX_COEFF_EDGES", d.max_coeff_edges);
        d.max_coeff_vertices = env_int("ATG_MAX_COEFF_VERTICES", d.max_coeff_vertices);
        d.max_canonical_vertices =
            env_int("ATG_MAX_CANONICAL_VERTICES", d.max_canonical_vertices);
        d.max_enumerate_vertices =
            env_int("ATG_MAX_ENUMERATE_VERTICES", d.max_enumerate_vertices);
        d.max_choosable_vertices =
            env_int("ATG_MAX_CHOOSABLE_VERTICES", d.max_choosable_vertices);
        d.max_choosable_palette =
            env_int("ATG_MAX_CHOOSABLE_PALETTE", d.max_choosable_palette);
        d.max_paintable_vertices =
            env_int("ATG_MAX_PAINTABLE_VERTICES", d.max_paintable_vertices);
        d.max_coloring_vertices =
            env_int("ATG_MAX_COLORING_VERTICES", d.max_coloring_vertices);
        return d;
    }();
    return g;
}

}  // namespace atg

#endif
