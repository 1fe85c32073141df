#pragma once

#include <filesystem>
#include <string>
#include <vector>

namespace h22::cli {

/// A header plus rows of already-formatted fields. Fields containing a comma,
/// quote or newline are quoted on output.
struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  void add(std::vector<std::string> row);
  std::string to_string() const;
};

std::string csv_number(double v);  // %.17g
void write_text(const std::filesystem::path& path, const std::string& text);
CsvTable parse_csv(const std::string& text);  // first line is the header; empty text gives an empty table
CsvTable read_csv(const std::filesystem::path& path);

}  // namespace h22::cli
