#include "geometry.hpp"

#include <cmath>
#include <stdexcept>

namespace nzhexmap {

namespace {

constexpr double kHalf = 0.5;
constexpr double kHalfSqrt3 = kSqrt3 / 2.0;

// Unit offsets of the six corners, vertex 0 on top, clockwise on screen.
constexpr double kCornerX[6] = {0.0, kHalfSqrt3, kHalfSqrt3, 0.0, -kHalfSqrt3, -kHalfSqrt3};
constexpr double kCornerY[6] = {-1.0, -kHalf, kHalf, 1.0, kHalf, -kHalf};

// Axial offset of the cell across the outer edge of triangle k.
constexpr AxialCoord kNeighbourOffset[6] = {
    {1, -1}, {1, 0}, {0, 1}, {-1, 1}, {-1, 0}, {0, -1},
};

void check_patch(const HexPatch& h)
{
    if (!(h.radius > 0.0) || !std::isfinite(h.radius))
        throw std::invalid_argument("hex patch radius must be positive and finite");
    if (!std::isfinite(h.center.x) || !std::isfinite(h.center.y))
        throw std::invalid_argument("hex patch center must be finite");
}

}  // namespace

Point axial_to_center(AxialCoord c, double cell_radius)
{
    if (!(cell_radius > 0.0) || !std::isfinite(cell_radius))
        throw std::invalid_argument("cell radius must be positive and finite");
    return {cell_radius * kSqrt3 * (c.q + kHalf * c.r),
            cell_radius * 1.5 * c.r};
}

std::array<AxialCoord, 6> axial_neighbours(AxialCoord c)
{
    std::array<AxialCoord, 6> out;
    for (int k = 0; k < 6; ++k)
        out[k] = {c.q + kNeighbourOffset[k].q, c.r + kNeighbourOffset[k].r};
    return out;
}

std::array<Point, 6> hex_vertices(const HexPatch& h)
{
    check_patch(h);
    std::array<Point, 6> out;
    for (int k = 0; k < 6; ++k)
        out[k] = {h.center.x + h.radius * kCornerX[k],
                  h.center.y + h.radius * kCornerY[k]};
    return out;
}

std::array<Point, 3> triangle_vertices(const HexPatch& h, int k)
{
    if (k < 0 || k > 5)
        throw std::invalid_argument("triangle index must be in 0..5");
    const auto corners = hex_vertices(h);
    return {h.center, corners[k], corners[(k + 1) % 6]};
}

}  // namespace nzhexmap
