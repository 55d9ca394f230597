#include "styling.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace nzhexmap {

namespace {

constexpr double kLuminanceThreshold = 0.179;

int hex_digit(char c)
{
    if (c >= '0' && c <= '9')
        return c - '0';
    if (c >= 'a' && c <= 'f')
        return c - 'a' + 10;
    if (c >= 'A' && c <= 'F')
        return c - 'A' + 10;
    return -1;
}

double linearize(std::uint8_t channel)
{
    const double s = channel / 255.0;
    return s <= 0.04045 ? s / 12.92 : std::pow((s + 0.055) / 1.055, 2.4);
}

}  // namespace

Rgb parse_colour(std::string_view hex)
{
    if (hex.size() != 7 || hex[0] != '#')
        throw std::invalid_argument("colour must look like #RRGGBB, got '" + std::string(hex) + "'");
    int v[6];
    for (int i = 0; i < 6; ++i) {
        v[i] = hex_digit(hex[i + 1]);
        if (v[i] < 0)
            throw std::invalid_argument("colour must look like #RRGGBB, got '" + std::string(hex) + "'");
    }
    return {static_cast<std::uint8_t>(v[0] * 16 + v[1]),
            static_cast<std::uint8_t>(v[2] * 16 + v[3]),
            static_cast<std::uint8_t>(v[4] * 16 + v[5])};
}

std::string colour_hex(Rgb c)
{
    static const char* digits = "0123456789abcdef";
    std::string out = "#......";
    out[1] = digits[c.r >> 4];
    out[2] = digits[c.r & 15];
    out[3] = digits[c.g >> 4];
    out[4] = digits[c.g & 15];
    out[5] = digits[c.b >> 4];
    out[6] = digits[c.b & 15];
    return out;
}

std::size_t Breaks::bin_count() const
{
    std::size_t n = cuts.empty() ? 0 : cuts.size() - 1;
    if (open_low)
        ++n;
    if (open_high)
        ++n;
    return n;
}

void Breaks::validate() const
{
    if (cuts.empty())
        throw std::invalid_argument("breaks need at least one cut point");
    for (std::size_t i = 0; i < cuts.size(); ++i) {
        if (!std::isfinite(cuts[i]))
            throw std::invalid_argument("break cut points must be finite");
        if (i > 0 && !(cuts[i - 1] < cuts[i]))
            throw std::invalid_argument("break cut points must be strictly increasing");
    }
    if (bin_count() < 1)
        throw std::invalid_argument("breaks define no bins");
}

std::size_t bin_value(double x, const Breaks& breaks)
{
    breaks.validate();
    if (std::isnan(x))
        throw std::invalid_argument("cannot bin NaN");
    // Number of cuts <= x.
    const std::size_t k = static_cast<std::size_t>(
        std::upper_bound(breaks.cuts.begin(), breaks.cuts.end(), x) - breaks.cuts.begin());
    if (k == 0) {
        if (!breaks.open_low)
            throw std::invalid_argument("value below the lowest break");
        return 0;
    }
    if (k == breaks.cuts.size() && !breaks.open_high)
        throw std::invalid_argument("value at or above the highest break");
    return k - 1 + (breaks.open_low ? 1 : 0);
}

const Palette& default_palette()
{
    static const Palette p{{parse_colour("#eff3ff"), parse_colour("#bdd7e7"),
                            parse_colour("#6baed6"), parse_colour("#2171b5")}};
    return p;
}

double relative_luminance(Rgb c)
{
    return 0.2126 * linearize(c.r) + 0.7152 * linearize(c.g) + 0.0722 * linearize(c.b);
}

Rgb label_colour(Rgb fill)
{
    return relative_luminance(fill) > kLuminanceThreshold ? Rgb{0, 0, 0} : Rgb{255, 255, 255};
}

namespace {

void check_radius_value(double v, const std::string& what)
{
    if (!std::isfinite(v))
        throw std::invalid_argument("radius value for " + what + " is not finite");
    if (v < 0.0)
        throw std::invalid_argument("radius value for " + what + " is negative");
}

}  // namespace

std::map<std::string, double> radius_sqrt(const std::map<std::string, double>& values)
{
    if (values.empty())
        throw std::invalid_argument("radius values must not be empty");
    double max_value = 0.0;
    for (const auto& [id, v] : values) {
        check_radius_value(v, "'" + id + "'");
        max_value = std::max(max_value, v);
    }
    if (max_value == 0.0)
        throw std::invalid_argument("radius values are all zero");
    // sqrt(v)/sqrt(max): exact for square ratios (25/100 -> 0.5, 4/100 -> 0.2).
    const double denom = std::sqrt(max_value);
    std::map<std::string, double> out;
    for (const auto& [id, v] : values)
        out[id] = std::sqrt(v) / denom;
    return out;
}

std::vector<double> radius_sqrt(std::span<const double> values)
{
    if (values.empty())
        throw std::invalid_argument("radius values must not be empty");
    double max_value = 0.0;
    for (std::size_t i = 0; i < values.size(); ++i) {
        check_radius_value(values[i], "entry " + std::to_string(i));
        max_value = std::max(max_value, values[i]);
    }
    if (max_value == 0.0)
        throw std::invalid_argument("radius values are all zero");
    const double denom = std::sqrt(max_value);
    std::vector<double> out;
    out.reserve(values.size());
    for (double v : values)
        out.push_back(std::sqrt(v) / denom);
    return out;
}

}  // namespace nzhexmap
