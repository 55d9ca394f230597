#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "geometry.hpp"

namespace nzhexmap {

enum class Island { North, South };

struct Unit {
    std::string id;      // lowercase ASCII slug of the macron-stripped name
    std::string name;    // canonical full name, with macrons
    std::string abbrev;  // short label; not guaranteed unique
    Island island;
    AxialCoord cell;
};

enum class LayoutKind { Dhb, Region };

struct Layout {
    LayoutKind kind;
    std::vector<Unit> units;  // registry order: roughly north to south
};

struct UnknownUnitError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct AmbiguousNameError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// The embedded registries: 20 DHBs (15 North, 5 South) and 16 Regions
// (9 North, 7 South). Immutable; stable across releases.
const Layout& builtin_layout(LayoutKind kind);

LayoutKind parse_layout_kind(std::string_view text);  // "dhb" | "region"
std::string_view layout_kind_name(LayoutKind kind);
std::string_view island_name(Island island);

// ASCII-folds the five macron vowels (both cases): ā->a, Ē->E, ...
std::string fold_macrons(std::string_view text);

// Matching key: trimmed, macron-folded, lowercased.
std::string normalize_name(std::string_view text);

// Stable id: lowercase, macron-stripped, apostrophes dropped, other
// non-alphanumeric runs collapsed to single hyphens.
std::string slugify(std::string_view text);

// Resolves text against canonical names first, then abbreviations, case-
// and macron-insensitively after trimming. Throws UnknownUnitError (with
// the three closest names by edit distance) or AmbiguousNameError (listing
// all candidates).
const Unit& resolve_name(std::string_view text, const Layout& layout);

enum class Severity { Warning, Error };

struct Finding {
    Severity severity;
    std::string message;
};

// Reports duplicate cells (error), island blocks that are not a single
// 6-neighbour connected component (warning), and isolated cells (warning).
// Findings are data, not failures.
std::vector<Finding> validate_layout(const Layout& layout);

// One unit per line: id, name, abbrev, island, q, r — tab separated.
// This dump is the fixture format for layout snapshot tests.
std::string dump_layout(const Layout& layout);

}  // namespace nzhexmap
