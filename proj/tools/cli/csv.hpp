#pragma once

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <string>
#include <string_view>
#include <vector>

namespace primegaps::cli {

// Shortest decimal that parses back to the same double.
std::string format_double(double value);

// Minimal comma-separated writer. Fields are never quoted; callers only emit
// numbers and simple identifiers.
class CsvWriter {
 public:
  // Throws IoError if the file cannot be created.
  CsvWriter(const std::filesystem::path& path, const std::vector<std::string>& header);

  CsvWriter& field(std::string_view text);
  CsvWriter& field(double value) { return field(format_double(value)); }
  CsvWriter& field(std::uint64_t value) { return field(std::to_string(value)); }
  CsvWriter& field(int value) { return field(std::to_string(value)); }
  void end_row();

  // Flushes and throws IoError on a failed write.
  void close();

 private:
  std::filesystem::path path_;
  std::ofstream out_;
  std::size_t columns_ = 0;
  std::size_t in_row_ = 0;
};

class CsvTable {
 public:
  // Throws IoError if unreadable, ParseError on an empty file or a ragged row.
  static CsvTable read(const std::filesystem::path& path);
  static CsvTable parse(std::string_view text, const std::string& source = {});

  const std::vector<std::string>& header() const { return header_; }
  std::size_t rows() const { return rows_.size(); }

  // Throws SchemaError unless every name is a column.
  void require(const std::vector<std::string>& names) const;
  // Throws SchemaError if the column is missing.
  std::size_t column(std::string_view name) const;

  const std::string& text(std::size_t row, std::size_t col) const { return rows_[row][col]; }
  // Throw ParseError (with the 1-based file line) on a malformed value.
  double number(std::size_t row, std::size_t col) const;
  std::uint64_t integer(std::size_t row, std::size_t col) const;

 private:
  std::string source_;
  std::vector<std::string> header_;
  std::vector<std::vector<std::string>> rows_;
  std::vector<std::size_t> lines_;
};

}  // namespace primegaps::cli
