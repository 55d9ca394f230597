#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "geometry.hpp"
#include "styling.hpp"

namespace nzhexmap {

// Resolution-independent draw list. Element order is paint order, and
// identical Scenes serialize to identical bytes.

struct PolygonElem {
    std::vector<Point> points;
    std::optional<Rgb> fill;    // nullopt -> fill="none"
    std::optional<Rgb> stroke;  // nullopt -> no stroke
    double stroke_width = 0.0;
};

enum class TextAnchor { Middle, Start };

struct TextElem {
    Point pos;  // anchor point; y is the baseline
    std::string text;
    Rgb fill{0, 0, 0};
    double font_size = 12.0;
    TextAnchor anchor = TextAnchor::Middle;
};

struct SceneElement;

struct GroupElem {
    Point offset;
    std::vector<SceneElement> children;
};

struct SceneElement : std::variant<PolygonElem, TextElem, GroupElem> {
    using std::variant<PolygonElem, TextElem, GroupElem>::variant;
};

struct Scene {
    double width = 0.0;
    double height = 0.0;
    std::vector<SceneElement> elements;
};

}  // namespace nzhexmap
