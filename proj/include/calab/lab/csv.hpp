#pragma once

#include <filesystem>
#include <string>
#include <vector>

namespace calab::lab {

// A plot-ready table: '.' decimal separator, '\n' line endings.
struct Table {
  std::string name;  // file stem
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  void add(std::vector<std::string> row) { rows.push_back(std::move(row)); }
};

// Shortest text that reads back to the same double; "inf", "-inf", "nan".
std::string format_number(double v);
std::string format_number(long long v);
std::string format_number(std::size_t v);
std::string format_bool(bool v);

std::string to_csv(const Table& table);

// Writes to a temporary sibling and renames it into place. Throws
// std::ios_base::failure on any I/O error.
void write_atomic(const std::filesystem::path& path, const std::string& contents);

}  // namespace calab::lab
