#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace nzhexmap::cli {

struct DataError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct CsvTable {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;  // each as wide as header

    // Column index by exact header name; throws DataError when absent.
    std::size_t column(const std::string& name) const;
};

// Strict dialect: comma separator, double-quote escaping ("" inside a
// quoted field), UTF-8, mandatory header row. CRLF and a missing final
// newline are tolerated; ragged rows and stray quotes are errors.
CsvTable read_csv(const std::string& path);
CsvTable parse_csv(const std::string& text, const std::string& origin);

}  // namespace nzhexmap::cli
