#pragma once

#include <array>

namespace nzhexmap {

inline constexpr double kSqrt3 = 1.7320508075688772;

// Integer position of one cell on the axial hex grid.
struct AxialCoord {
    int q = 0;  // column
    int r = 0;  // row
    friend bool operator==(const AxialCoord&, const AxialCoord&) = default;
};

// Map-space point. y grows downward (screen convention), so smaller y is
// further north on the page.
struct Point {
    double x = 0.0;
    double y = 0.0;
    friend bool operator==(const Point&, const Point&) = default;
};

struct HexPatch {
    Point center;
    double radius = 1.0;  // center-to-vertex distance, > 0
};

/* Pointy-top orientation throughout. Vertex 0 is the topmost point and the
 * numbering advances clockwise as seen on screen; triangle k spans the fan
 * wedge (center, v[k], v[k+1 mod 6]):
 *
 *          v0
 *        /    \
 *      v5  5 0  v1
 *      | 4    1 |
 *      v4  3 2  v2
 *        \    /
 *          v3
 */

// Center of cell c with cell radius R: x = R*sqrt(3)*(q + r/2), y = R*(3/2)*r.
// Adjacent cells share edges exactly. Rejects R <= 0.
Point axial_to_center(AxialCoord c, double cell_radius);

// The six axial neighbours of c, in triangle order (neighbour k is the cell
// across the outer edge of triangle k).
std::array<AxialCoord, 6> axial_neighbours(AxialCoord c);

// All six corners at distance h.radius from h.center.
std::array<Point, 6> hex_vertices(const HexPatch& h);

// (center, v[k], v[k+1 mod 6]); k outside 0..5 is rejected.
std::array<Point, 3> triangle_vertices(const HexPatch& h, int k);

}  // namespace nzhexmap
