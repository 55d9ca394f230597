#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "csv.hpp"

namespace nzhexmap::cli {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class Mode { Hex, Tri, Facet, LayoutDump };

struct JobConfig {
    Mode mode = Mode::Hex;
    std::string layout_kind;  // "dhb" | "region"
    std::string input_path;
    std::string output_path;  // empty = stdout (layout dump only)
    std::string unit_col;
    std::string value_col;                // hex, facet
    std::vector<std::string> count_cols;  // tri, wide format
    std::string key_col;                  // tri, long format
    std::string val_col;
    std::string facet_col;            // facet
    std::vector<double> breaks;       // cut points, strictly increasing
    std::vector<std::string> palette; // "#RRGGBB"; empty = built-in default
    std::string radius_col;
    std::string label_mode = "abbrev";  // full | abbrev | none
    double min_denominator = 0.0;
    std::string denominator_col;
    unsigned columns = 2;     // facet grid columns
    double cell_radius = 20.0;
};

// One data row after unit resolution. Hex/facet rows carry `value`; tri
// rows carry `counts` parallel to IngestResult::categories.
struct Record {
    std::string unit_id;
    std::string panel;  // facet key; empty outside facet mode
    double value = 0.0;
    std::vector<double> counts;
    std::optional<double> radius_value;
    std::optional<double> denominator;
    bool missing = false;
};

struct IngestResult {
    std::vector<Record> records;          // input row order (long tri input pivoted)
    std::vector<std::string> categories;  // tri: first-appearance order
    std::vector<std::string> panels;      // facet: first-appearance order
};

// Parses argv (without the program name handled separately; argv[0] is the
// program name). Returns nullopt when --help/--version was served. Throws
// UsageError for unknown flags, missing required flags and inconsistent
// combinations.
std::optional<JobConfig> parse_args(const std::vector<std::string>& argv);

// Reads the input file and resolves unit names against the layout.
// Duplicate (unit[, facet|category]) rows, non-numeric values and
// unresolvable names are DataErrors naming the offender.
IngestResult ingest_csv(const JobConfig& config);

// Any record whose denominator is below the threshold becomes MISSING.
void apply_suppression(IngestResult& ingest, double threshold);

// Full pipeline: ingest, style or apportion, render, serialize, atomic
// write. Returns 0; throws DataError/UsageError.
int run(const JobConfig& config);

// parse + run with errors mapped to exit codes: 0 ok, 1 data, 2 usage.
int cli_main(int argc, const char* const argv[]);

}  // namespace nzhexmap::cli
