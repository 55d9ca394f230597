#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace nzhexmap {

struct Rgb {
    std::uint8_t r = 0;
    std::uint8_t g = 0;
    std::uint8_t b = 0;
    friend bool operator==(const Rgb&, const Rgb&) = default;
};

Rgb parse_colour(std::string_view hex);  // "#RRGGBB", case-insensitive
std::string colour_hex(Rgb c);           // "#rrggbb"

// Half-open bins [b_i, b_{i+1}) over strictly increasing cut points, with
// optional open-ended first/last bins. The top bin is closed at its lower
// cut, so a value exactly on the highest cut lands in the highest category.
struct Breaks {
    std::vector<double> cuts;
    bool open_low = true;
    bool open_high = true;

    std::size_t bin_count() const;
    void validate() const;
};

// Bin index of x; throws when x falls outside all bins (closed ends).
std::size_t bin_value(double x, const Breaks& breaks);

struct Palette {
    std::vector<Rgb> colours;
};

// 4-step light-to-dark sequential ramp used when no palette is given.
const Palette& default_palette();

// WCAG relative luminance of an sRGB colour (channels linearized).
double relative_luminance(Rgb c);

// Black on light fills, white on dark ones; threshold 0.179 on relative
// luminance gives equal contrast ratio against both choices.
Rgb label_colour(Rgb fill);

// r_u = sqrt(v_u / max v): the largest unit gets exactly 1.0. Rejects
// negative values and all-zero inputs. Units absent from `values` are
// simply absent from the result (missing, not zero).
std::map<std::string, double> radius_sqrt(const std::map<std::string, double>& values);
std::vector<double> radius_sqrt(std::span<const double> values);

// Per-unit drawing instructions. A unit absent from `entries`, or present
// with no fill, is MISSING: drawn outline-only at full radius, no label.
struct UnitStyle {
    std::optional<Rgb> fill;
    double radius_fraction = 1.0;          // in [0, 1]
    std::optional<std::string> label;      // overrides the layout-derived text
    Rgb label_fill{0, 0, 0};
};

struct StyleSheet {
    std::map<std::string, UnitStyle> entries;
};

}  // namespace nzhexmap
