#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "oddc/graph.hpp"

namespace oddc {

// Vertex coloring with colors 1..palette.
struct Coloring {
    std::vector<int> color;
    int palette = 0;

    bool operator==(const Coloring& other) const = default;
};

struct OddReport {
    bool pass = false;
    // C_o(v): colors with odd multiplicity among v's neighbors, sorted.
    // Empty for isolated vertices (the odd condition is vacuous there).
    std::vector<std::vector<int>> odd_colors;
    // Non-isolated vertices with empty C_o(v).
    std::vector<int> odd_violations;
    // Monochromatic edges, u < v.
    std::vector<std::pair<int, int>> proper_violations;
};

// Colors with odd multiplicity in v's neighborhood. Throws for isolated v.
std::vector<int> odd_color_set(const Graph& g, const Coloring& c, int v);

// Passes iff the coloring is proper and every non-isolated vertex has a
// nonempty odd color set. Throws std::invalid_argument on out-of-range
// colors.
OddReport is_odd_coloring(const Graph& g, const Coloring& c);

// Coloring file: lines "v color"; blank lines and '#' comments ignored.
// Palette is max color unless palette_override > 0.
Coloring parse_coloring(std::string_view text, int vertex_count,
                        int palette_override = 0);
std::string write_coloring(const Coloring& c);

}  // namespace oddc
