#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

#include "layouts.hpp"

using namespace nzhexmap;

namespace {

std::size_t island_count(const Layout& layout, Island island)
{
    return std::count_if(layout.units.begin(), layout.units.end(),
                         [&](const Unit& u) { return u.island == island; });
}

const Unit& unit_by_id(const Layout& layout, const std::string& id)
{
    for (const Unit& u : layout.units)
        if (u.id == id)
            return u;
    REQUIRE_MESSAGE(false, "no unit ", id);
    throw std::logic_error("unreachable");
}

// Test-side flood fill, independent of validate_layout's.
std::size_t component_count(const std::vector<const Unit*>& block)
{
    std::set<std::pair<int, int>> cells;
    for (const Unit* u : block)
        cells.insert({u->cell.q, u->cell.r});
    std::set<std::pair<int, int>> seen;
    std::size_t components = 0;
    for (const Unit* u : block) {
        const std::pair<int, int> start{u->cell.q, u->cell.r};
        if (seen.count(start))
            continue;
        ++components;
        std::vector<std::pair<int, int>> frontier{start};
        seen.insert(start);
        while (!frontier.empty()) {
            const auto [q, r] = frontier.back();
            frontier.pop_back();
            const std::pair<int, int> steps[6] = {{1, -1}, {1, 0}, {0, 1},
                                                  {-1, 1}, {-1, 0}, {0, -1}};
            for (const auto& [dq, dr] : steps) {
                const std::pair<int, int> next{q + dq, r + dr};
                if (cells.count(next) && !seen.count(next)) {
                    seen.insert(next);
                    frontier.push_back(next);
                }
            }
        }
    }
    return components;
}

bool adjacent(const Unit& a, const Unit& b)
{
    for (const AxialCoord& n : axial_neighbours(a.cell))
        if (n == b.cell)
            return true;
    return false;
}

}  // namespace

TEST_CASE("builtin cardinalities and island splits")
{
    const Layout& dhb = builtin_layout(LayoutKind::Dhb);
    CHECK(dhb.units.size() == 20);
    CHECK(island_count(dhb, Island::North) == 15);
    CHECK(island_count(dhb, Island::South) == 5);

    const Layout& region = builtin_layout(LayoutKind::Region);
    CHECK(region.units.size() == 16);
    CHECK(island_count(region, Island::North) == 9);
    CHECK(island_count(region, Island::South) == 7);

    for (const Layout* layout : {&dhb, &region}) {
        std::set<std::pair<int, int>> cells;
        std::set<std::string> ids;
        for (const Unit& u : layout->units) {
            CHECK(cells.insert({u.cell.q, u.cell.r}).second);
            CHECK(ids.insert(u.id).second);
        }
    }

    CHECK(unit_by_id(dhb, "tairawhiti").name == "Tairāwhiti");
    CHECK(unit_by_id(region, "gisborne").name == "Gisborne");
}

TEST_CASE("each island block is one connected component")
{
    for (LayoutKind kind : {LayoutKind::Dhb, LayoutKind::Region}) {
        const Layout& layout = builtin_layout(kind);
        for (Island island : {Island::North, Island::South}) {
            std::vector<const Unit*> block;
            for (const Unit& u : layout.units)
                if (u.island == island)
                    block.push_back(&u);
            CHECK(component_count(block) == 1);
        }
    }
}

TEST_CASE("the two documented fidelity defects are preserved")
{
    const Layout& dhb = builtin_layout(LayoutKind::Dhb);
    // MidCentral looks landlocked: all six neighbour cells are occupied.
    std::set<std::pair<int, int>> cells;
    for (const Unit& u : dhb.units)
        cells.insert({u.cell.q, u.cell.r});
    const Unit& midcentral = unit_by_id(dhb, "midcentral");
    for (const AxialCoord& n : axial_neighbours(midcentral.cell))
        CHECK(cells.count({n.q, n.r}) == 1);

    // West Coast is not contiguous with Southern / Southland.
    CHECK_FALSE(adjacent(unit_by_id(dhb, "west-coast"), unit_by_id(dhb, "southern")));
    const Layout& region = builtin_layout(LayoutKind::Region);
    CHECK_FALSE(adjacent(unit_by_id(region, "west-coast"), unit_by_id(region, "southland")));
}

TEST_CASE("name normalization helpers")
{
    CHECK(fold_macrons("Tairāwhiti") == "Tairawhiti");
    CHECK(fold_macrons("ĀĒĪŌŪ") == "AEIOU");
    CHECK(normalize_name("  WAIKATO ") == "waikato");
    CHECK(slugify("Capital & Coast") == "capital-coast");
    CHECK(slugify("Hawke's Bay") == "hawkes-bay");
    CHECK(slugify("Manawatū-Whanganui") == "manawatu-whanganui");
}

TEST_CASE("resolve_name: names, abbreviations, and error paths")
{
    const Layout& dhb = builtin_layout(LayoutKind::Dhb);
    CHECK(resolve_name("tairawhiti", dhb).id == "tairawhiti");
    CHECK(resolve_name("  WAIKATO ", dhb).id == "waikato");
    CHECK(resolve_name("Tairāwhiti", dhb).id == "tairawhiti");
    CHECK(resolve_name("HB", dhb).id == "hawkes-bay");
    CHECK(resolve_name("hut", dhb).id == "hutt-valley");

    // A canonical-name match shadows any abbreviation matches.
    CHECK(resolve_name("Waikato", dhb).id == "waikato");
    // "Wai" is carried by both Waikato and Wairarapa.
    CHECK_THROWS_AS(resolve_name("Wai", dhb), AmbiguousNameError);
    CHECK_THROWS_WITH_AS(resolve_name("Wai", dhb), doctest::Contains("Wairarapa"),
                         AmbiguousNameError);

    CHECK_THROWS_AS(resolve_name("Xanadu", dhb), UnknownUnitError);
    CHECK_THROWS_WITH_AS(resolve_name("Xanadu", dhb), doctest::Contains("closest"),
                         UnknownUnitError);
    CHECK_THROWS_AS(resolve_name("   ", dhb), std::invalid_argument);

    // Every unit resolves by name; by abbreviation when unambiguous.
    for (LayoutKind kind : {LayoutKind::Dhb, LayoutKind::Region}) {
        const Layout& layout = builtin_layout(kind);
        for (const Unit& u : layout.units) {
            CHECK(resolve_name(u.name, layout).id == u.id);
            const std::size_t carriers = std::count_if(
                layout.units.begin(), layout.units.end(), [&](const Unit& v) {
                    return normalize_name(v.abbrev) == normalize_name(u.abbrev);
                });
            if (carriers == 1)
                CHECK(resolve_name(u.abbrev, layout).id == u.id);
            else
                CHECK_THROWS_AS(resolve_name(u.abbrev, layout), AmbiguousNameError);
        }
    }
}

TEST_CASE("resolve_name is idempotent under case folding and macron stripping")
{
    const Layout& region = builtin_layout(LayoutKind::Region);
    for (const Unit& u : region.units) {
        const std::string folded = normalize_name(u.name);
        CHECK(resolve_name(folded, region).id == u.id);
        std::string upper = folded;
        std::transform(upper.begin(), upper.end(), upper.begin(),
                       [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
        CHECK(resolve_name(upper, region).id == u.id);
    }
}

TEST_CASE("validate_layout: builtins are clean, degenerate layouts are not")
{
    for (LayoutKind kind : {LayoutKind::Dhb, LayoutKind::Region}) {
        const auto findings = validate_layout(builtin_layout(kind));
        for (const Finding& f : findings)
            CHECK(f.severity != Severity::Error);
        CHECK(findings.empty());  // no warnings either: blocks connected, nothing isolated
    }

    Layout degenerate{LayoutKind::Dhb, {}};
    degenerate.units.push_back({"a", "A", "A", Island::North, {0, 0}});
    degenerate.units.push_back({"b", "B", "B", Island::North, {0, 0}});
    degenerate.units.push_back({"c", "C", "C", Island::South, {5, 5}});
    const auto findings = validate_layout(degenerate);
    const std::size_t errors = std::count_if(findings.begin(), findings.end(), [](const Finding& f) {
        return f.severity == Severity::Error;
    });
    CHECK(errors == 1);  // one duplicate-cell error
    // And the lonely southern cell yields an isolation warning.
    CHECK(std::any_of(findings.begin(), findings.end(), [](const Finding& f) {
        return f.severity == Severity::Warning && f.message.find("no neighbours") != std::string::npos;
    }));
}

TEST_CASE("split island block is reported as a warning")
{
    Layout split{LayoutKind::Region, {}};
    split.units.push_back({"a", "A", "A", Island::North, {0, 0}});
    split.units.push_back({"b", "B", "B", Island::North, {0, 1}});
    split.units.push_back({"c", "C", "C", Island::North, {4, 4}});
    split.units.push_back({"d", "D", "D", Island::North, {4, 5}});
    const auto findings = validate_layout(split);
    CHECK(std::any_of(findings.begin(), findings.end(), [](const Finding& f) {
        return f.severity == Severity::Warning &&
               f.message.find("connected") != std::string::npos;
    }));
}

TEST_CASE("dump_layout is the snapshot fixture format")
{
    const std::string dump = dump_layout(builtin_layout(LayoutKind::Region));
    CHECK(dump.find("gisborne\tGisborne\tGis\tNorth\t2\t2\n") != std::string::npos);
    CHECK(std::count(dump.begin(), dump.end(), '\n') == 16);
}

TEST_CASE("parse_layout_kind")
{
    CHECK(parse_layout_kind("dhb") == LayoutKind::Dhb);
    CHECK(parse_layout_kind("region") == LayoutKind::Region);
    CHECK_THROWS_AS(parse_layout_kind("canton"), std::invalid_argument);
}
