// csv.hpp: deterministic CSV output with '#' metadata lines, a header row, then
// rows at 17 significant digits.

#pragma once

#include <ostream>
#include <string>
#include <utility>
#include <vector>

namespace phasediff {

inline constexpr const char* kToolVersion = "phasediff 1.0.0";

struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;  // each row has columns.size() entries
};

struct CsvDocument {
    std::vector<std::pair<std::string, std::string>> metadata;
    Table table;
};

void write_csv(std::ostream& os, const CsvDocument& doc);
std::string to_csv(const CsvDocument& doc);

// Writes doc to path; throws std::runtime_error when the file cannot be written.
void write_csv_file(const std::string& path, const CsvDocument& doc);

// A standalone matplotlib script that plots every data column of csv_path
// against the first one.
std::string plot_script(const std::string& csv_path, const CsvDocument& doc);

} // namespace phasediff
