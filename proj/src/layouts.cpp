#include "layouts.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>

namespace nzhexmap {

namespace {

struct UnitDef {
    const char* name;
    const char* abbrev;
    Island island;
    int q;
    int r;
};

/* Both registries are hand-placed on the axial grid to echo the shape of
 * the country: a long north-west to south-east chain for the upper North
 * Island, a wide central band, and the South Island offset to the
 * south-west across a one-row strait gap.
 *
 * Two known fidelity defects of this style of map are kept on purpose
 * rather than fixed: MidCentral sits fully enclosed by its six neighbours
 * (it looks landlocked although it has a coast), and West Coast does not
 * touch Southern/Southland. Tests pin both.
 */

const UnitDef kDhbDefs[] = {
    {"Northland", "Nth", Island::North, 0, 0},
    {"Waitematā", "Wtm", Island::North, 0, 1},
    {"Auckland", "Akl", Island::North, 0, 2},
    {"Counties Manukau", "CM", Island::North, 0, 3},
    {"Waikato", "Wai", Island::North, 0, 4},
    {"Bay of Plenty", "BoP", Island::North, 1, 4},
    // East Cape gets rounded off: Tairāwhiti sits level with Bay of
    // Plenty instead of jutting north-east.
    {"Tairāwhiti", "Twh", Island::North, 2, 4},
    {"Taranaki", "Tar", Island::North, -1, 5},
    {"Lakes", "Lak", Island::North, 0, 5},
    {"Hawke's Bay", "HB", Island::North, 1, 5},
    {"Whanganui", "Wng", Island::North, -1, 6},
    {"MidCentral", "MC", Island::North, 0, 6},
    // Wairarapa placed beside Hawke's Bay so that MidCentral is enclosed
    // on all six sides. Shares its abbreviation with Waikato.
    {"Wairarapa", "Wai", Island::North, 1, 6},
    {"Capital & Coast", "CC", Island::North, -1, 7},
    {"Hutt Valley", "Hut", Island::North, 0, 7},
    {"Nelson Marlborough", "NM", Island::South, -3, 9},
    // West Coast deliberately two rows above Southern: not contiguous.
    {"West Coast", "WC", Island::South, -5, 10},
    {"Canterbury", "Can", Island::South, -4, 10},
    {"South Canterbury", "SC", Island::South, -4, 11},
    {"Southern", "Sth", Island::South, -5, 12},
};

const UnitDef kRegionDefs[] = {
    {"Northland", "Nth", Island::North, 0, 0},
    {"Auckland", "Akl", Island::North, 0, 1},
    {"Waikato", "Wai", Island::North, 0, 2},
    {"Bay of Plenty", "BoP", Island::North, 1, 2},
    {"Gisborne", "Gis", Island::North, 2, 2},
    {"Taranaki", "Tar", Island::North, -1, 3},
    {"Manawatū-Whanganui", "MW", Island::North, 0, 3},
    {"Hawke's Bay", "HB", Island::North, 1, 3},
    {"Wellington", "Wgn", Island::North, 0, 4},
    {"Tasman", "Tas", Island::South, -3, 6},
    {"Nelson", "Nel", Island::South, -2, 6},
    {"Marlborough", "Mbh", Island::South, -1, 6},
    {"West Coast", "WC", Island::South, -3, 7},
    {"Canterbury", "Can", Island::South, -2, 7},
    {"Otago", "Ota", Island::South, -3, 8},
    {"Southland", "Stl", Island::South, -4, 9},
};

Layout make_layout(LayoutKind kind, const UnitDef* defs, std::size_t n)
{
    Layout layout{kind, {}};
    layout.units.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        const UnitDef& d = defs[i];
        layout.units.push_back({slugify(d.name), d.name, d.abbrev, d.island, {d.q, d.r}});
    }
    return layout;
}

// Levenshtein distance, used only for "did you mean" suggestions.
std::size_t edit_distance(std::string_view a, std::string_view b)
{
    std::vector<std::size_t> row(b.size() + 1);
    for (std::size_t j = 0; j <= b.size(); ++j)
        row[j] = j;
    for (std::size_t i = 1; i <= a.size(); ++i) {
        std::size_t diag = row[0];
        row[0] = i;
        for (std::size_t j = 1; j <= b.size(); ++j) {
            const std::size_t up = row[j];
            row[j] = std::min({row[j] + 1, row[j - 1] + 1,
                               diag + (a[i - 1] == b[j - 1] ? 0 : 1)});
            diag = up;
        }
    }
    return row[b.size()];
}

std::string join_names(const std::vector<const Unit*>& units)
{
    std::string out;
    for (const Unit* u : units) {
        if (!out.empty())
            out += ", ";
        out += u->name;
    }
    return out;
}

}  // namespace

const Layout& builtin_layout(LayoutKind kind)
{
    static const Layout dhb = make_layout(LayoutKind::Dhb, kDhbDefs, std::size(kDhbDefs));
    static const Layout region = make_layout(LayoutKind::Region, kRegionDefs, std::size(kRegionDefs));
    switch (kind) {
    case LayoutKind::Dhb:
        return dhb;
    case LayoutKind::Region:
        return region;
    }
    throw std::invalid_argument("unknown layout kind");
}

LayoutKind parse_layout_kind(std::string_view text)
{
    if (text == "dhb")
        return LayoutKind::Dhb;
    if (text == "region")
        return LayoutKind::Region;
    throw std::invalid_argument("unknown layout kind '" + std::string(text) + "' (expected dhb or region)");
}

std::string_view layout_kind_name(LayoutKind kind)
{
    return kind == LayoutKind::Dhb ? "dhb" : "region";
}

std::string_view island_name(Island island)
{
    return island == Island::North ? "North" : "South";
}

std::string fold_macrons(std::string_view text)
{
    // The macron vowels are two-byte UTF-8 sequences 0xC4/0xC5 xx.
    static const std::map<std::string_view, char> kFold = {
        {"ā", 'a'}, {"ē", 'e'}, {"ī", 'i'}, {"ō", 'o'}, {"ū", 'u'},
        {"Ā", 'A'}, {"Ē", 'E'}, {"Ī", 'I'}, {"Ō", 'O'}, {"Ū", 'U'},
    };
    std::string out;
    out.reserve(text.size());
    for (std::size_t i = 0; i < text.size();) {
        if (i + 1 < text.size()) {
            const auto it = kFold.find(text.substr(i, 2));
            if (it != kFold.end()) {
                out += it->second;
                i += 2;
                continue;
            }
        }
        out += text[i];
        ++i;
    }
    return out;
}

std::string normalize_name(std::string_view text)
{
    std::size_t begin = 0;
    std::size_t end = text.size();
    while (begin < end && std::isspace(static_cast<unsigned char>(text[begin])))
        ++begin;
    while (end > begin && std::isspace(static_cast<unsigned char>(text[end - 1])))
        --end;
    std::string out = fold_macrons(text.substr(begin, end - begin));
    std::transform(out.begin(), out.end(), out.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return out;
}

std::string slugify(std::string_view text)
{
    const std::string folded = normalize_name(text);
    std::string out;
    bool pending_sep = false;
    for (char c : folded) {
        if (std::isalnum(static_cast<unsigned char>(c))) {
            if (pending_sep && !out.empty())
                out += '-';
            pending_sep = false;
            out += c;
        } else if (c != '\'') {
            pending_sep = true;
        }
    }
    return out;
}

const Unit& resolve_name(std::string_view text, const Layout& layout)
{
    const std::string key = normalize_name(text);
    if (key.empty())
        throw std::invalid_argument("unit name must not be empty");

    std::vector<const Unit*> matches;
    for (const Unit& u : layout.units)
        if (normalize_name(u.name) == key)
            matches.push_back(&u);
    if (matches.empty())
        for (const Unit& u : layout.units)
            if (normalize_name(u.abbrev) == key)
                matches.push_back(&u);

    if (matches.size() == 1)
        return *matches.front();
    if (matches.size() > 1)
        throw AmbiguousNameError("ambiguous name '" + std::string(text) +
                                 "' matches: " + join_names(matches));

    std::vector<std::pair<std::size_t, const Unit*>> ranked;
    for (const Unit& u : layout.units)
        ranked.emplace_back(edit_distance(key, normalize_name(u.name)), &u);
    std::stable_sort(ranked.begin(), ranked.end(),
                     [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<const Unit*> closest;
    for (std::size_t i = 0; i < ranked.size() && i < 3; ++i)
        closest.push_back(ranked[i].second);
    throw UnknownUnitError("unknown unit '" + std::string(text) +
                           "' (closest: " + join_names(closest) + ")");
}

std::vector<Finding> validate_layout(const Layout& layout)
{
    std::vector<Finding> findings;

    std::map<std::pair<int, int>, std::vector<const Unit*>> by_cell;
    for (const Unit& u : layout.units)
        by_cell[{u.cell.q, u.cell.r}].push_back(&u);
    for (const auto& [cell, units] : by_cell)
        if (units.size() > 1)
            findings.push_back({Severity::Error,
                                "duplicate cell (" + std::to_string(cell.first) + ", " +
                                    std::to_string(cell.second) + "): " + join_names(units)});

    auto occupied = [&](AxialCoord c) { return by_cell.count({c.q, c.r}) > 0; };

    for (const Unit& u : layout.units) {
        bool any = false;
        for (const AxialCoord& n : axial_neighbours(u.cell))
            any = any || occupied(n);
        if (!any)
            findings.push_back({Severity::Warning, "unit '" + u.name + "' has no neighbours"});
    }

    for (Island island : {Island::North, Island::South}) {
        std::vector<const Unit*> block;
        for (const Unit& u : layout.units)
            if (u.island == island)
                block.push_back(&u);
        if (block.empty())
            continue;
        std::set<std::pair<int, int>> cells;
        for (const Unit* u : block)
            cells.insert({u->cell.q, u->cell.r});
        // Flood fill from the first unit of the block.
        std::set<std::pair<int, int>> seen;
        std::vector<AxialCoord> frontier{block.front()->cell};
        seen.insert({frontier.front().q, frontier.front().r});
        while (!frontier.empty()) {
            const AxialCoord c = frontier.back();
            frontier.pop_back();
            for (const AxialCoord& n : axial_neighbours(c)) {
                const std::pair<int, int> key{n.q, n.r};
                if (cells.count(key) && !seen.count(key)) {
                    seen.insert(key);
                    frontier.push_back(n);
                }
            }
        }
        if (seen.size() != cells.size())
            findings.push_back({Severity::Warning,
                                std::string(island_name(island)) +
                                    " island block is not a single connected component"});
    }
    return findings;
}

std::string dump_layout(const Layout& layout)
{
    std::string out;
    for (const Unit& u : layout.units) {
        out += u.id;
        out += '\t';
        out += u.name;
        out += '\t';
        out += u.abbrev;
        out += '\t';
        out += island_name(u.island);
        out += '\t';
        out += std::to_string(u.cell.q);
        out += '\t';
        out += std::to_string(u.cell.r);
        out += '\n';
    }
    return out;
}

}  // namespace nzhexmap
