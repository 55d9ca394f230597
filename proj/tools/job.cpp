#include "job.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <set>

#include <CLI11.hpp>

#include "nzhexmap.h"

namespace nzhexmap::cli {

namespace {

template <typename T>
using Handle = std::unique_ptr<T, void (*)(T*)>;

using LayoutHandle = Handle<nzhm_layout>;
using StyleHandle = Handle<nzhm_style>;
using TriFillsHandle = Handle<nzhm_tri_fills>;
using SceneHandle = Handle<nzhm_scene>;
using FacetsHandle = Handle<nzhm_facets>;

// Throws DataError with the library's detail message on failure.
void check(nzhm_status status, const char* stage)
{
    if (status != NZHM_OK)
        throw DataError(std::string(stage) + ": " + nzhm_last_error());
}

LayoutHandle open_layout(const JobConfig& config, const char* stage)
{
    nzhm_layout* raw = nullptr;
    check(nzhm_layout_builtin(config.layout_kind.c_str(), &raw), stage);
    return {raw, nzhm_layout_free};
}

double parse_number(const std::string& field, std::size_t row, const std::string& column)
{
    std::size_t begin = field.find_first_not_of(" \t");
    std::size_t end = field.find_last_not_of(" \t");
    if (begin == std::string::npos)
        throw DataError("ingest: row " + std::to_string(row) + ": empty value in column '" +
                        column + "'");
    const std::string trimmed = field.substr(begin, end - begin + 1);
    char* tail = nullptr;
    const double value = std::strtod(trimmed.c_str(), &tail);
    if (tail != trimmed.c_str() + trimmed.size())
        throw DataError("ingest: row " + std::to_string(row) + ": non-numeric value '" + field +
                        "' in column '" + column + "'");
    return value;
}

std::string resolve_unit(const nzhm_layout* layout, const std::string& text, std::size_t row)
{
    const char* id = nullptr;
    const nzhm_status status = nzhm_layout_resolve(layout, text.c_str(), &id);
    if (status != NZHM_OK)
        throw DataError("ingest: row " + std::to_string(row) + ": " + nzhm_last_error());
    return id;
}

// %g keeps break labels short ("0.8", not "0.800000").
std::string format_cut(double value)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%g", value);
    return buf;
}

std::vector<std::string> bin_labels(const std::vector<double>& cuts)
{
    std::vector<std::string> labels;
    labels.push_back("<" + format_cut(cuts.front()));
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i)
        labels.push_back(format_cut(cuts[i]) + "-" + format_cut(cuts[i + 1]));
    labels.push_back(">=" + format_cut(cuts.back()));
    return labels;
}

std::vector<std::string> resolve_palette(const JobConfig& config, std::size_t needed,
                                         const std::string& what)
{
    if (!config.palette.empty()) {
        if (config.palette.size() != needed)
            throw DataError("style: palette has " + std::to_string(config.palette.size()) +
                            " colours but " + what + " needs " + std::to_string(needed));
        return config.palette;
    }
    size_t available = 0;
    const char* const* builtin = nzhm_default_palette(&available);
    if (needed > available)
        throw DataError("style: the built-in palette has " + std::to_string(available) +
                        " colours but " + what + " needs " + std::to_string(needed) +
                        "; pass --palette");
    return {builtin, builtin + needed};
}

std::size_t bin_of(double value, const JobConfig& config, const std::string& unit_id)
{
    size_t bin = 0;
    const nzhm_status status =
        nzhm_bin_value(value, config.breaks.data(), config.breaks.size(), 1, 1, &bin);
    if (status != NZHM_OK)
        throw DataError("style: unit '" + unit_id + "': " + nzhm_last_error());
    return bin;
}

SceneHandle make_legend(const std::vector<std::string>& labels,
                        const std::vector<std::string>& colours)
{
    std::vector<const char*> label_ptrs;
    std::vector<const char*> colour_ptrs;
    for (const auto& l : labels)
        label_ptrs.push_back(l.c_str());
    for (const auto& c : colours)
        colour_ptrs.push_back(c.c_str());
    nzhm_scene* raw = nullptr;
    check(nzhm_render_legend(label_ptrs.data(), colour_ptrs.data(), label_ptrs.size(), &raw),
          "render");
    return {raw, nzhm_scene_free};
}

void write_atomic(const std::string& path, const char* data, std::size_t len)
{
    namespace fs = std::filesystem;
    const fs::path target(path);
    const fs::path tmp = target.string() + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out)
            throw DataError("write: cannot open '" + tmp.string() + "'");
        out.write(data, static_cast<std::streamsize>(len));
        out.flush();
        if (!out) {
            out.close();
            fs::remove(tmp);
            throw DataError("write: failed writing '" + tmp.string() + "'");
        }
    }
    std::error_code ec;
    fs::rename(tmp, target, ec);
    if (ec) {
        fs::remove(tmp);
        throw DataError("write: cannot rename onto '" + path + "': " + ec.message());
    }
}

void write_svg(const JobConfig& config, const nzhm_scene* scene)
{
    char* svg = nullptr;
    size_t len = 0;
    check(nzhm_scene_to_svg(scene, &svg, &len), "render");
    const std::unique_ptr<char, void (*)(char*)> owner(svg, nzhm_string_free);
    write_atomic(config.output_path, svg, len);
}

int run_layout_dump(const JobConfig& config)
{
    const LayoutHandle layout = open_layout(config, "layout");
    char* text = nullptr;
    check(nzhm_layout_dump(layout.get(), &text), "layout");
    const std::unique_ptr<char, void (*)(char*)> owner(text, nzhm_string_free);
    if (config.output_path.empty())
        std::cout << text;
    else
        write_atomic(config.output_path, text, std::strlen(text));
    return 0;
}

int run_hex(const JobConfig& config)
{
    const LayoutHandle layout = open_layout(config, "ingest");
    IngestResult ingest = ingest_csv(config);
    apply_suppression(ingest, config.min_denominator);

    const auto labels = bin_labels(config.breaks);
    const auto palette = resolve_palette(config, labels.size(), "the breaks");

    // Radii are normalized over the units that will actually be drawn.
    std::map<std::string, double> fraction;
    if (!config.radius_col.empty()) {
        std::vector<const Record*> sized;
        std::vector<double> values;
        for (const Record& rec : ingest.records)
            if (!rec.missing && rec.radius_value) {
                sized.push_back(&rec);
                values.push_back(*rec.radius_value);
            }
        if (!values.empty()) {
            std::vector<double> fractions(values.size());
            check(nzhm_radius_sqrt(values.data(), values.size(), fractions.data()), "style");
            for (std::size_t i = 0; i < sized.size(); ++i)
                fraction[sized[i]->unit_id] = fractions[i];
        }
    }

    nzhm_style* style_raw = nullptr;
    check(nzhm_style_new(layout.get(), &style_raw), "style");
    const StyleHandle style(style_raw, nzhm_style_free);
    for (const Record& rec : ingest.records) {
        if (rec.missing)
            continue;
        const std::size_t bin = bin_of(rec.value, config, rec.unit_id);
        const double r = config.radius_col.empty() ? 1.0 : fraction.at(rec.unit_id);
        check(nzhm_style_set(style.get(), rec.unit_id.c_str(), palette[bin].c_str(), r, nullptr),
              "style");
    }

    nzhm_scene* map_raw = nullptr;
    check(nzhm_render_map(layout.get(), style.get(), config.label_mode.c_str(),
                          config.cell_radius, &map_raw),
          "render");
    const SceneHandle map(map_raw, nzhm_scene_free);
    const SceneHandle legend = make_legend(labels, palette);
    nzhm_scene* full_raw = nullptr;
    check(nzhm_scene_attach_legend(map.get(), legend.get(), &full_raw), "render");
    const SceneHandle full(full_raw, nzhm_scene_free);
    write_svg(config, full.get());
    return 0;
}

int run_tri(const JobConfig& config)
{
    const LayoutHandle layout = open_layout(config, "ingest");
    const IngestResult ingest = ingest_csv(config);

    const auto palette = resolve_palette(config, ingest.categories.size(), "the categories");

    nzhm_tri_fills* fills_raw = nullptr;
    check(nzhm_tri_fills_new(layout.get(), &fills_raw), "apportion");
    const TriFillsHandle fills(fills_raw, nzhm_tri_fills_free);
    for (const Record& rec : ingest.records) {
        size_t slots[6] = {};
        const nzhm_status status =
            nzhm_tri_slots(rec.counts.data(), rec.counts.size(), slots);
        if (status != NZHM_OK)
            throw DataError("apportion: unit '" + rec.unit_id + "': " + nzhm_last_error());
        const char* colours[6];
        for (int k = 0; k < 6; ++k)
            colours[k] = palette[slots[k]].c_str();
        check(nzhm_tri_fills_set(fills.get(), rec.unit_id.c_str(), colours), "apportion");
    }

    nzhm_scene* map_raw = nullptr;
    check(nzhm_render_tri_map(layout.get(), fills.get(), config.label_mode.c_str(),
                              config.cell_radius, &map_raw),
          "render");
    const SceneHandle map(map_raw, nzhm_scene_free);
    const SceneHandle legend = make_legend(ingest.categories, palette);
    nzhm_scene* full_raw = nullptr;
    check(nzhm_scene_attach_legend(map.get(), legend.get(), &full_raw), "render");
    const SceneHandle full(full_raw, nzhm_scene_free);
    write_svg(config, full.get());
    return 0;
}

int run_facet(const JobConfig& config)
{
    const LayoutHandle layout = open_layout(config, "ingest");
    IngestResult ingest = ingest_csv(config);
    apply_suppression(ingest, config.min_denominator);

    const auto labels = bin_labels(config.breaks);
    const auto palette = resolve_palette(config, labels.size(), "the breaks");

    nzhm_facets* facets_raw = nullptr;
    check(nzhm_facets_new(&facets_raw), "render");
    const FacetsHandle facets(facets_raw, nzhm_facets_free);

    for (const std::string& panel : ingest.panels) {
        nzhm_style* style_raw = nullptr;
        check(nzhm_style_new(layout.get(), &style_raw), "style");
        const StyleHandle style(style_raw, nzhm_style_free);
        for (const Record& rec : ingest.records) {
            if (rec.panel != panel || rec.missing)
                continue;
            const std::size_t bin = bin_of(rec.value, config, rec.unit_id);
            check(nzhm_style_set(style.get(), rec.unit_id.c_str(), palette[bin].c_str(), 1.0,
                                 nullptr),
                  "style");
        }
        nzhm_scene* panel_raw = nullptr;
        check(nzhm_render_map(layout.get(), style.get(), config.label_mode.c_str(),
                              config.cell_radius, &panel_raw),
              "render");
        const SceneHandle panel_scene(panel_raw, nzhm_scene_free);
        check(nzhm_facets_add(facets.get(), panel.c_str(), panel_scene.get()), "render");
    }

    const SceneHandle legend = make_legend(labels, palette);
    nzhm_scene* full_raw = nullptr;
    check(nzhm_facets_render(facets.get(), config.columns, legend.get(), &full_raw), "render");
    const SceneHandle full(full_raw, nzhm_scene_free);
    write_svg(config, full.get());
    return 0;
}

}  // namespace

std::optional<JobConfig> parse_args(const std::vector<std::string>& argv)
{
    JobConfig config;
    CLI::App app{"Hexagonal tile maps of New Zealand DHBs and Regions as deterministic SVG"};
    app.require_subcommand(1);

    auto add_common = [&](CLI::App* sub, bool needs_input) {
        sub->add_option("--layout", config.layout_kind, "Layout: dhb or region")
            ->required()
            ->check(CLI::IsMember({"dhb", "region"}));
        if (needs_input) {
            sub->add_option("--in", config.input_path, "Input CSV file")->required();
            sub->add_option("--out", config.output_path, "Output SVG file")->required();
            sub->add_option("--unit-col", config.unit_col, "Column holding unit names")
                ->required();
            sub->add_option("--labels", config.label_mode, "Label mode")
                ->check(CLI::IsMember({"full", "abbrev", "none"}))
                ->capture_default_str();
            sub->add_option("--palette", config.palette,
                            "Comma list of #RRGGBB fills (default: built-in ramp)")
                ->delimiter(',');
            sub->add_option("--cell-radius", config.cell_radius, "Hex cell radius in SVG units")
                ->check(CLI::PositiveNumber)
                ->capture_default_str();
        }
    };
    auto add_suppression = [&](CLI::App* sub) {
        sub->add_option("--min-denominator", config.min_denominator,
                        "Denominators below this become missing")
            ->check(CLI::NonNegativeNumber)
            ->capture_default_str();
        sub->add_option("--denominator-col", config.denominator_col,
                        "Column holding denominators");
    };
    auto add_breaks = [&](CLI::App* sub) {
        sub->add_option("--breaks", config.breaks, "Comma list of bin cut points")
            ->required()
            ->delimiter(',');
    };

    CLI::App* hex = app.add_subcommand("hex", "Shaded hex map from one value per unit");
    add_common(hex, true);
    hex->add_option("--value-col", config.value_col, "Column holding the shaded value")
        ->required();
    add_breaks(hex);
    hex->add_option("--radius-col", config.radius_col,
                    "Column scaling hex areas (radius = sqrt of the value)");
    add_suppression(hex);

    CLI::App* tri = app.add_subcommand("tri", "Six-triangle category map");
    add_common(tri, true);
    tri->add_option("--count-cols", config.count_cols,
                    "Comma list of category count columns (wide format)")
        ->delimiter(',');
    tri->add_option("--key-col", config.key_col, "Category column (long format)");
    tri->add_option("--val-col", config.val_col, "Count column (long format)");

    CLI::App* facet = app.add_subcommand("facet", "Small-multiple hex maps, one per facet value");
    add_common(facet, true);
    facet->add_option("--value-col", config.value_col, "Column holding the shaded value")
        ->required();
    facet->add_option("--facet-col", config.facet_col, "Column naming the panel of each row")
        ->required();
    add_breaks(facet);
    facet->add_option("--columns", config.columns, "Facet grid columns")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    add_suppression(facet);

    CLI::App* dump = app.add_subcommand("layout", "Dump a built-in layout registry as text");
    add_common(dump, false);
    dump->add_option("--out", config.output_path, "Output file (default: stdout)");

    try {
        std::vector<std::string> args(argv.begin() + (argv.empty() ? 0 : 1), argv.end());
        std::reverse(args.begin(), args.end());
        app.parse(std::move(args));
    } catch (const CLI::CallForHelp& e) {
        app.exit(e);  // prints context-aware help
        return std::nullopt;
    } catch (const CLI::ParseError& e) {
        throw UsageError(e.what());
    }

    if (app.got_subcommand(hex))
        config.mode = Mode::Hex;
    else if (app.got_subcommand(tri))
        config.mode = Mode::Tri;
    else if (app.got_subcommand(facet))
        config.mode = Mode::Facet;
    else
        config.mode = Mode::LayoutDump;

    // Cross-flag consistency CLI11 cannot express.
    if (config.mode == Mode::Tri) {
        const bool wide = !config.count_cols.empty();
        const bool longf = !config.key_col.empty() || !config.val_col.empty();
        if (wide && longf)
            throw UsageError("tri: use either --count-cols or --key-col/--val-col, not both");
        if (!wide && !longf)
            throw UsageError("tri: one of --count-cols or --key-col/--val-col is required");
        if (longf && (config.key_col.empty() || config.val_col.empty()))
            throw UsageError("tri: long format needs both --key-col and --val-col");
    }
    if (!config.breaks.empty()) {
        for (std::size_t i = 1; i < config.breaks.size(); ++i)
            if (!(config.breaks[i - 1] < config.breaks[i]))
                throw UsageError("--breaks must be strictly increasing");
    }
    for (const std::string& colour : config.palette) {
        const char* ignored = nullptr;
        if (nzhm_label_colour(colour.c_str(), &ignored) != NZHM_OK)
            throw UsageError(std::string("--palette: ") + nzhm_last_error());
    }
    if (config.min_denominator > 0.0 && config.denominator_col.empty())
        throw UsageError("--min-denominator needs --denominator-col");

    return config;
}

IngestResult ingest_csv(const JobConfig& config)
{
    const LayoutHandle layout = open_layout(config, "ingest");
    const CsvTable table = read_csv(config.input_path);
    IngestResult out;

    const std::size_t unit_col = table.column(config.unit_col);
    const bool with_denominator = !config.denominator_col.empty();
    const std::size_t denom_col = with_denominator ? table.column(config.denominator_col) : 0;

    auto denominator_of = [&](const std::vector<std::string>& row, std::size_t rowno)
        -> std::optional<double> {
        if (!with_denominator)
            return std::nullopt;
        return parse_number(row[denom_col], rowno, config.denominator_col);
    };

    switch (config.mode) {
    case Mode::Hex: {
        const std::size_t value_col = table.column(config.value_col);
        const bool with_radius = !config.radius_col.empty();
        const std::size_t radius_col = with_radius ? table.column(config.radius_col) : 0;
        std::set<std::string> seen;
        for (std::size_t i = 0; i < table.rows.size(); ++i) {
            const auto& row = table.rows[i];
            const std::size_t rowno = i + 2;  // 1-based, after the header
            Record rec;
            rec.unit_id = resolve_unit(layout.get(), row[unit_col], rowno);
            if (!seen.insert(rec.unit_id).second)
                throw DataError("ingest: row " + std::to_string(rowno) + ": duplicate unit '" +
                                row[unit_col] + "'");
            rec.value = parse_number(row[value_col], rowno, config.value_col);
            if (with_radius)
                rec.radius_value = parse_number(row[radius_col], rowno, config.radius_col);
            rec.denominator = denominator_of(row, rowno);
            out.records.push_back(std::move(rec));
        }
        break;
    }
    case Mode::Tri: {
        if (!config.count_cols.empty()) {
            std::vector<std::size_t> cols;
            for (const std::string& name : config.count_cols)
                cols.push_back(table.column(name));
            out.categories = config.count_cols;
            std::set<std::string> seen;
            for (std::size_t i = 0; i < table.rows.size(); ++i) {
                const auto& row = table.rows[i];
                const std::size_t rowno = i + 2;
                Record rec;
                rec.unit_id = resolve_unit(layout.get(), row[unit_col], rowno);
                if (!seen.insert(rec.unit_id).second)
                    throw DataError("ingest: row " + std::to_string(rowno) +
                                    ": duplicate unit '" + row[unit_col] + "'");
                for (std::size_t c = 0; c < cols.size(); ++c)
                    rec.counts.push_back(
                        parse_number(row[cols[c]], rowno, config.count_cols[c]));
                out.records.push_back(std::move(rec));
            }
        } else {
            // Long format: pivot (unit, key, value) rows into per-unit count
            // vectors; categories ordered by first appearance.
            const std::size_t key_col = table.column(config.key_col);
            const std::size_t val_col = table.column(config.val_col);
            std::map<std::string, std::size_t> category_index;
            std::map<std::string, std::size_t> record_index;
            std::set<std::pair<std::string, std::string>> seen;
            for (std::size_t i = 0; i < table.rows.size(); ++i) {
                const auto& row = table.rows[i];
                const std::size_t rowno = i + 2;
                const std::string unit_id = resolve_unit(layout.get(), row[unit_col], rowno);
                const std::string& key = row[key_col];
                if (key.empty())
                    throw DataError("ingest: row " + std::to_string(rowno) +
                                    ": empty category key");
                if (!seen.insert({unit_id, key}).second)
                    throw DataError("ingest: row " + std::to_string(rowno) + ": duplicate (" +
                                    row[unit_col] + ", " + key + ") row");
                if (!category_index.count(key)) {
                    category_index[key] = out.categories.size();
                    out.categories.push_back(key);
                }
                if (!record_index.count(unit_id)) {
                    record_index[unit_id] = out.records.size();
                    Record rec;
                    rec.unit_id = unit_id;
                    out.records.push_back(std::move(rec));
                }
                Record& rec = out.records[record_index[unit_id]];
                const std::size_t ci = category_index[key];
                if (rec.counts.size() <= ci)
                    rec.counts.resize(ci + 1, 0.0);
                rec.counts[ci] = parse_number(row[val_col], rowno, config.val_col);
            }
            for (Record& rec : out.records)
                rec.counts.resize(out.categories.size(), 0.0);
        }
        break;
    }
    case Mode::Facet: {
        const std::size_t value_col = table.column(config.value_col);
        const std::size_t facet_col = table.column(config.facet_col);
        std::set<std::string> panels_seen;
        std::set<std::pair<std::string, std::string>> seen;
        for (std::size_t i = 0; i < table.rows.size(); ++i) {
            const auto& row = table.rows[i];
            const std::size_t rowno = i + 2;
            Record rec;
            rec.unit_id = resolve_unit(layout.get(), row[unit_col], rowno);
            rec.panel = row[facet_col];
            if (rec.panel.empty())
                throw DataError("ingest: row " + std::to_string(rowno) + ": empty facet value");
            if (!seen.insert({rec.unit_id, rec.panel}).second)
                throw DataError("ingest: row " + std::to_string(rowno) + ": duplicate (" +
                                row[unit_col] + ", " + rec.panel + ") row");
            if (panels_seen.insert(rec.panel).second)
                out.panels.push_back(rec.panel);
            rec.value = parse_number(row[value_col], rowno, config.value_col);
            rec.denominator = denominator_of(row, rowno);
            out.records.push_back(std::move(rec));
        }
        if (out.panels.empty())
            throw DataError("ingest: no data rows, so no facet panels");
        break;
    }
    case Mode::LayoutDump:
        break;
    }
    return out;
}

void apply_suppression(IngestResult& ingest, double threshold)
{
    if (threshold <= 0.0)
        return;
    for (Record& rec : ingest.records)
        if (rec.denominator && *rec.denominator < threshold)
            rec.missing = true;
}

int run(const JobConfig& config)
{
    switch (config.mode) {
    case Mode::Hex:
        return run_hex(config);
    case Mode::Tri:
        return run_tri(config);
    case Mode::Facet:
        return run_facet(config);
    case Mode::LayoutDump:
        return run_layout_dump(config);
    }
    throw UsageError("unknown mode");
}

int cli_main(int argc, const char* const argv[])
{
    try {
        const auto config = parse_args({argv, argv + argc});
        if (!config)
            return 0;
        try {
            return run(*config);
        } catch (const DataError& e) {
            std::cerr << "nzhexmap: " << e.what() << '\n';
            return 1;
        }
    } catch (const UsageError& e) {
        std::cerr << "nzhexmap: " << e.what() << '\n';
        std::cerr << "nzhexmap: try --help\n";
        return 2;
    }
}

}  // namespace nzhexmap::cli
