#include "render.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>
#include <set>
#include <stdexcept>

namespace nzhexmap {

namespace {

const Rgb kStrokeColour{0x33, 0x33, 0x33};
constexpr double kStrokeWidthFactor = 0.03;  // of cell radius
constexpr double kAbbrevFontFactor = 0.5;    // of cell radius
constexpr double kFullFontFactor = 0.35;
constexpr double kBaselineShift = 0.35;  // of font size; centers text vertically

constexpr double kTitleBandFactor = 0.08;  // of panel height
constexpr double kTitleFontFactor = 0.055;
constexpr double kPanelGapFactor = 0.03;
constexpr double kLegendGap = 8.0;

constexpr double kSwatchWidth = 36.0;
constexpr double kSwatchHeight = 18.0;
constexpr double kSwatchPad = 3.0;
constexpr double kLegendStride = 120.0;
constexpr double kLegendFontSize = 12.0;

struct Frame {
    Point translate;
    double width = 0.0;
    double height = 0.0;
};

// Layout bounding box (full-radius hexes) plus a one-cell-radius margin,
// independent of the stylesheet so the canvas is stable across datasets.
Frame layout_frame(const Layout& layout, double cell_radius)
{
    if (layout.units.empty())
        throw std::invalid_argument("layout has no units");
    double min_x = std::numeric_limits<double>::infinity();
    double min_y = min_x;
    double max_x = -min_x;
    double max_y = -min_x;
    const double half_width = cell_radius * kSqrt3 / 2.0;
    for (const Unit& u : layout.units) {
        const Point c = axial_to_center(u.cell, cell_radius);
        min_x = std::min(min_x, c.x - half_width);
        max_x = std::max(max_x, c.x + half_width);
        min_y = std::min(min_y, c.y - cell_radius);
        max_y = std::max(max_y, c.y + cell_radius);
    }
    const double margin = cell_radius;
    return {{margin - min_x, margin - min_y},
            (max_x - min_x) + 2.0 * margin,
            (max_y - min_y) + 2.0 * margin};
}

PolygonElem hex_polygon(const HexPatch& patch, std::optional<Rgb> fill, double stroke_width)
{
    const auto corners = hex_vertices(patch);
    return {{corners.begin(), corners.end()}, fill, kStrokeColour, stroke_width};
}

TextElem unit_label(Point center, const std::string& text, Rgb fill, double font_size)
{
    return {{center.x, center.y + kBaselineShift * font_size}, text, fill, font_size,
            TextAnchor::Middle};
}

// Label text for a unit: explicit override first, else the mode's layout text.
const std::string* label_text(const Unit& unit, const std::optional<std::string>& override_text,
                              LabelMode mode)
{
    if (mode == LabelMode::None)
        return nullptr;
    if (override_text)
        return &*override_text;
    return mode == LabelMode::Full ? &unit.name : &unit.abbrev;
}

double label_font(LabelMode mode, double cell_radius)
{
    return cell_radius * (mode == LabelMode::Full ? kFullFontFactor : kAbbrevFontFactor);
}

void check_known_ids(const Layout& layout, const std::set<std::string>& styled)
{
    std::set<std::string> known;
    for (const Unit& u : layout.units)
        known.insert(u.id);
    for (const std::string& id : styled)
        if (!known.count(id))
            throw std::invalid_argument("style references unknown unit id '" + id + "'");
}

void append_number(std::string& out, double value)
{
    char buf[48];
    const auto res = std::to_chars(buf, buf + sizeof buf, value, std::chars_format::fixed, 3);
    std::string_view text(buf, res.ptr - buf);
    if (text == "-0.000")
        text = "0.000";
    out += text;
}

void append_escaped(std::string& out, std::string_view text)
{
    for (char c : text) {
        switch (c) {
        case '&':
            out += "&amp;";
            break;
        case '<':
            out += "&lt;";
            break;
        case '>':
            out += "&gt;";
            break;
        case '"':
            out += "&quot;";
            break;
        default:
            out += c;
        }
    }
}

void write_element(std::string& out, const SceneElement& element)
{
    if (const auto* poly = std::get_if<PolygonElem>(&element)) {
        out += "<polygon points=\"";
        for (std::size_t i = 0; i < poly->points.size(); ++i) {
            if (i)
                out += ' ';
            append_number(out, poly->points[i].x);
            out += ',';
            append_number(out, poly->points[i].y);
        }
        out += "\" fill=\"";
        out += poly->fill ? colour_hex(*poly->fill) : "none";
        out += '"';
        if (poly->stroke) {
            out += " stroke=\"";
            out += colour_hex(*poly->stroke);
            out += "\" stroke-width=\"";
            append_number(out, poly->stroke_width);
            out += '"';
        }
        out += "/>\n";
    } else if (const auto* text = std::get_if<TextElem>(&element)) {
        out += "<text x=\"";
        append_number(out, text->pos.x);
        out += "\" y=\"";
        append_number(out, text->pos.y);
        out += "\" text-anchor=\"";
        out += text->anchor == TextAnchor::Middle ? "middle" : "start";
        out += "\" font-family=\"sans-serif\" font-size=\"";
        append_number(out, text->font_size);
        out += "\" fill=\"";
        out += colour_hex(text->fill);
        out += "\">";
        append_escaped(out, text->text);
        out += "</text>\n";
    } else {
        const auto& group = std::get<GroupElem>(element);
        out += "<g transform=\"translate(";
        append_number(out, group.offset.x);
        out += ',';
        append_number(out, group.offset.y);
        out += ")\">\n";
        for (const SceneElement& child : group.children)
            write_element(out, child);
        out += "</g>\n";
    }
}

}  // namespace

LabelMode parse_label_mode(std::string_view text)
{
    if (text == "full")
        return LabelMode::Full;
    if (text == "abbrev")
        return LabelMode::Abbrev;
    if (text == "none")
        return LabelMode::None;
    throw std::invalid_argument("unknown label mode '" + std::string(text) +
                                "' (expected full, abbrev or none)");
}

Scene render_map(const Layout& layout, const StyleSheet& style, LabelMode mode,
                 double cell_radius)
{
    std::set<std::string> styled;
    for (const auto& [id, entry] : style.entries)
        styled.insert(id);
    check_known_ids(layout, styled);

    const Frame frame = layout_frame(layout, cell_radius);
    Scene scene{frame.width, frame.height, {}};
    const double stroke_width = cell_radius * kStrokeWidthFactor;

    std::vector<SceneElement> labels;
    for (const Unit& u : layout.units) {
        const Point c0 = axial_to_center(u.cell, cell_radius);
        const Point c{c0.x + frame.translate.x, c0.y + frame.translate.y};
        const auto it = style.entries.find(u.id);
        const bool missing = it == style.entries.end() || !it->second.fill;
        if (missing) {
            scene.elements.push_back(hex_polygon({c, cell_radius}, std::nullopt, stroke_width));
            continue;
        }
        const UnitStyle& us = it->second;
        if (us.radius_fraction < 0.0 || us.radius_fraction > 1.0)
            throw std::invalid_argument("radius fraction for '" + u.id + "' outside [0, 1]");
        if (us.radius_fraction == 0.0)
            continue;  // zero-area hex: omitted, label suppressed
        scene.elements.push_back(
            hex_polygon({c, cell_radius * us.radius_fraction}, *us.fill, stroke_width));
        if (const std::string* text = label_text(u, us.label, mode))
            labels.push_back(unit_label(c, *text, us.label_fill, label_font(mode, cell_radius)));
    }
    // Labels above all hexes.
    for (auto& l : labels)
        scene.elements.push_back(std::move(l));
    return scene;
}

Scene render_tri_map(const Layout& layout,
                     const std::map<std::string, std::array<Rgb, 6>>& fills,
                     LabelMode mode, double cell_radius)
{
    std::set<std::string> styled;
    for (const auto& [id, f] : fills)
        styled.insert(id);
    check_known_ids(layout, styled);

    const Frame frame = layout_frame(layout, cell_radius);
    Scene scene{frame.width, frame.height, {}};
    const double stroke_width = cell_radius * kStrokeWidthFactor;

    std::vector<SceneElement> labels;
    for (const Unit& u : layout.units) {
        const Point c0 = axial_to_center(u.cell, cell_radius);
        const Point c{c0.x + frame.translate.x, c0.y + frame.translate.y};
        const auto it = fills.find(u.id);
        if (it == fills.end()) {
            scene.elements.push_back(hex_polygon({c, cell_radius}, std::nullopt, stroke_width));
            continue;
        }
        const HexPatch patch{c, cell_radius};
        for (int k = 0; k < 6; ++k) {
            const auto tri = triangle_vertices(patch, k);
            scene.elements.push_back(PolygonElem{
                {tri.begin(), tri.end()}, it->second[k], kStrokeColour, stroke_width});
        }
        if (const std::string* text = label_text(u, std::nullopt, mode)) {
            // Most frequent of the six fills decides the label colour;
            // earlier slots win ties.
            const auto& f = it->second;
            Rgb majority = f[0];
            int best = 0;
            for (int k = 0; k < 6; ++k) {
                const int n = static_cast<int>(std::count(f.begin(), f.end(), f[k]));
                if (n > best) {
                    best = n;
                    majority = f[k];
                }
            }
            labels.push_back(
                unit_label(c, *text, label_colour(majority), label_font(mode, cell_radius)));
        }
    }
    for (auto& l : labels)
        scene.elements.push_back(std::move(l));
    return scene;
}

Scene render_legend(const std::vector<std::pair<std::string, Rgb>>& entries)
{
    if (entries.empty())
        throw std::invalid_argument("legend needs at least one entry");
    Scene scene{kLegendStride * entries.size(), kSwatchHeight + 2.0 * kSwatchPad, {}};
    for (std::size_t i = 0; i < entries.size(); ++i) {
        const double x = kLegendStride * i;
        scene.elements.push_back(PolygonElem{{{x, kSwatchPad},
                                              {x + kSwatchWidth, kSwatchPad},
                                              {x + kSwatchWidth, kSwatchPad + kSwatchHeight},
                                              {x, kSwatchPad + kSwatchHeight}},
                                             entries[i].second,
                                             kStrokeColour,
                                             0.5});
        scene.elements.push_back(TextElem{
            {x + kSwatchWidth + 6.0,
             kSwatchPad + kSwatchHeight / 2.0 + kBaselineShift * kLegendFontSize},
            entries[i].first,
            Rgb{0, 0, 0},
            kLegendFontSize,
            TextAnchor::Start});
    }
    return scene;
}

Scene attach_legend(const Scene& map, const Scene& legend)
{
    Scene out{std::max(map.width, legend.width), map.height + kLegendGap + legend.height, {}};
    out.elements.push_back(GroupElem{{(out.width - map.width) / 2.0, 0.0}, map.elements});
    out.elements.push_back(
        GroupElem{{(out.width - legend.width) / 2.0, map.height + kLegendGap}, legend.elements});
    return out;
}

Scene render_facets(const std::vector<std::pair<std::string, Scene>>& panels,
                    const FacetSpec& spec, const Scene* legend)
{
    if (panels.empty())
        throw std::invalid_argument("facet grid needs at least one panel");
    if (spec.columns < 1)
        throw std::invalid_argument("facet columns must be at least 1");
    if (spec.panel_order.size() != panels.size())
        throw std::invalid_argument("facet panel order does not match the panels given");
    std::set<std::string> keys(spec.panel_order.begin(), spec.panel_order.end());
    if (keys.size() != spec.panel_order.size())
        throw std::invalid_argument("facet panel keys must be unique");

    std::map<std::string, const Scene*> by_label;
    for (const auto& [label, panel] : panels) {
        if (!keys.count(label))
            throw std::invalid_argument("panel '" + label + "' missing from the facet panel order");
        by_label[label] = &panel;
    }
    if (by_label.size() != panels.size())
        throw std::invalid_argument("facet panel labels must be unique");

    const double w = panels.front().second.width;
    const double h = panels.front().second.height;
    for (const auto& [label, panel] : panels)
        if (panel.width != w || panel.height != h)
            throw std::invalid_argument("facet panels must share canvas dimensions");

    const std::size_t n = panels.size();
    const std::size_t used_cols = std::min<std::size_t>(spec.columns, n);
    const std::size_t rows = (n + spec.columns - 1) / spec.columns;
    const double title_band = h * kTitleBandFactor;
    const double gap_x = w * kPanelGapFactor;
    const double gap_y = h * kPanelGapFactor;
    const double stride_x = w + gap_x;
    const double stride_y = title_band + h + gap_y;
    const double grid_w = used_cols * w + (used_cols - 1) * gap_x;
    const double grid_h = rows * (title_band + h) + (rows - 1) * gap_y;

    const bool with_legend = legend != nullptr && spec.shared_legend;
    Scene scene{with_legend ? std::max(grid_w, legend->width) : grid_w,
                with_legend ? grid_h + kLegendGap + legend->height : grid_h,
                {}};

    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t col = i % spec.columns;
        const std::size_t row = i / spec.columns;
        const Scene& panel = *by_label.at(spec.panel_order[i]);
        GroupElem slot{{col * stride_x, row * stride_y}, {}};
        slot.children.push_back(TextElem{{w / 2.0, title_band * 0.75},
                                         spec.panel_order[i],
                                         Rgb{0, 0, 0},
                                         h * kTitleFontFactor,
                                         TextAnchor::Middle});
        slot.children.push_back(GroupElem{{0.0, title_band}, panel.elements});
        scene.elements.push_back(std::move(slot));
    }
    if (with_legend)
        scene.elements.push_back(GroupElem{
            {(scene.width - legend->width) / 2.0, grid_h + kLegendGap}, legend->elements});
    return scene;
}

std::string to_svg(const Scene& scene)
{
    std::string out = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"";
    append_number(out, scene.width);
    out += "\" height=\"";
    append_number(out, scene.height);
    out += "\" viewBox=\"0 0 ";
    append_number(out, scene.width);
    out += ' ';
    append_number(out, scene.height);
    out += "\">\n";
    for (const SceneElement& element : scene.elements)
        write_element(out, element);
    out += "</svg>\n";
    return out;
}

}  // namespace nzhexmap
