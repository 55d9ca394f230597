#include "csv.hpp"

#include <fstream>
#include <sstream>

namespace nzhexmap::cli {

std::size_t CsvTable::column(const std::string& name) const
{
    for (std::size_t i = 0; i < header.size(); ++i)
        if (header[i] == name)
            return i;
    throw DataError("no column named '" + name + "' in the input header");
}

CsvTable read_csv(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw DataError("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_csv(buf.str(), path);
}

CsvTable parse_csv(const std::string& text, const std::string& origin)
{
    std::vector<std::vector<std::string>> records;
    std::vector<std::string> record;
    std::string field;
    bool quoted = false;
    bool field_was_quoted = false;

    auto end_field = [&] {
        record.push_back(std::move(field));
        field.clear();
        field_was_quoted = false;
    };
    auto end_record = [&] {
        end_field();
        records.push_back(std::move(record));
        record.clear();
    };

    for (std::size_t i = 0; i < text.size(); ++i) {
        const char c = text[i];
        if (quoted) {
            if (c == '"') {
                if (i + 1 < text.size() && text[i + 1] == '"') {
                    field += '"';
                    ++i;
                } else {
                    quoted = false;
                }
            } else {
                field += c;
            }
        } else if (c == '"') {
            if (!field.empty() || field_was_quoted)
                throw DataError(origin + ": stray quote in record " +
                                std::to_string(records.size() + 1));
            quoted = true;
            field_was_quoted = true;
        } else if (c == ',') {
            end_field();
        } else if (c == '\n') {
            if (!field.empty() && field.back() == '\r')
                field.pop_back();
            end_record();
        } else {
            field += c;
        }
    }
    if (quoted)
        throw DataError(origin + ": unterminated quoted field");
    if (!field.empty() || !record.empty() || field_was_quoted)
        end_record();

    if (records.empty() || (records.size() == 1 && records[0].size() == 1 && records[0][0].empty()))
        throw DataError(origin + ": empty file (a header row is required)");

    CsvTable table;
    table.header = std::move(records.front());
    for (std::size_t i = 1; i < records.size(); ++i) {
        if (records[i].size() == 1 && records[i][0].empty())
            continue;  // blank line
        if (records[i].size() != table.header.size())
            throw DataError(origin + ": row " + std::to_string(i + 1) + " has " +
                            std::to_string(records[i].size()) + " fields, expected " +
                            std::to_string(table.header.size()));
        table.rows.push_back(std::move(records[i]));
    }
    return table;
}

}  // namespace nzhexmap::cli
