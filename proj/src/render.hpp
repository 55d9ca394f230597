#pragma once

#include <array>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "layouts.hpp"
#include "scene.hpp"
#include "styling.hpp"

namespace nzhexmap {

enum class LabelMode { Full, Abbrev, None };

LabelMode parse_label_mode(std::string_view text);  // "full" | "abbrev" | "none"

struct FacetSpec {
    std::vector<std::string> panel_order;  // unique facet labels
    unsigned columns = 1;
    bool shared_legend = true;
};

// One hex per unit with a positive radius fraction, centered on its cell;
// MISSING units (absent from the style, or styled with no fill) are drawn
// outline-only at full radius with no label. The canvas is the layout
// bounding box plus a margin of one cell radius.
Scene render_map(const Layout& layout, const StyleSheet& style, LabelMode mode,
                 double cell_radius);

// Six triangles per unit present in `fills`, slot k painting triangle k;
// absent units are MISSING outlines. Every triangle edge is stroked.
Scene render_tri_map(const Layout& layout,
                     const std::map<std::string, std::array<Rgb, 6>>& fills,
                     LabelMode mode, double cell_radius);

// Horizontal swatch row, entries left to right in input order.
Scene render_legend(const std::vector<std::pair<std::string, Rgb>>& entries);

// Map on top, legend centered underneath.
Scene attach_legend(const Scene& map, const Scene& legend);

// Panels placed left-to-right, top-to-bottom in spec.columns columns, each
// titled; all panels must share canvas dimensions. Panels are drawn in
// spec.panel_order, which must match the given labels as a set. The shared
// legend, when provided and enabled, goes below the grid.
Scene render_facets(const std::vector<std::pair<std::string, Scene>>& panels,
                    const FacetSpec& spec, const Scene* legend);

// Standalone SVG 1.1, UTF-8, coordinates with exactly three decimals, no
// timestamps or other environment-dependent content.
std::string to_svg(const Scene& scene);

}  // namespace nzhexmap
