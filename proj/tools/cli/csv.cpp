#include "csv.hpp"

#include <charconv>
#include <cmath>
#include <sstream>

#include "primegaps/errors.hpp"

namespace primegaps::cli {

std::string format_double(double value) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value);
  if (ec != std::errc{}) throw IntegrityError("to_chars failed");
  return std::string(buf, ptr);
}

CsvWriter::CsvWriter(const std::filesystem::path& path, const std::vector<std::string>& header)
    : path_(path), out_(path, std::ios::binary | std::ios::trunc), columns_(header.size()) {
  if (!out_) throw IoError("cannot create " + path.string());
  for (const auto& h : header) field(h);
  end_row();
}

CsvWriter& CsvWriter::field(std::string_view text) {
  if (in_row_ > 0) out_ << ',';
  out_ << text;
  ++in_row_;
  return *this;
}

void CsvWriter::end_row() {
  if (in_row_ != columns_) {
    throw IntegrityError(path_.string() + ": row has " + std::to_string(in_row_) + " fields, expected " +
                         std::to_string(columns_));
  }
  out_ << '\n';
  in_row_ = 0;
}

void CsvWriter::close() {
  out_.flush();
  if (!out_) throw IoError("failed writing " + path_.string());
  out_.close();
}

namespace {

std::vector<std::string> split(std::string_view line) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const auto comma = line.find(',', start);
    out.emplace_back(line.substr(start, comma - start));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

}  // namespace

CsvTable CsvTable::read(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw IoError("failed reading " + path.string());
  return parse(buf.str(), path.string());
}

CsvTable CsvTable::parse(std::string_view text, const std::string& source) {
  CsvTable t;
  t.source_ = source;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    auto end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty()) continue;
    auto fields = split(line);
    if (t.header_.empty()) {
      t.header_ = std::move(fields);
      continue;
    }
    if (fields.size() != t.header_.size()) {
      throw ParseError(source + ": expected " + std::to_string(t.header_.size()) + " fields, got " +
                           std::to_string(fields.size()),
                       line_no);
    }
    t.rows_.push_back(std::move(fields));
    t.lines_.push_back(line_no);
  }
  if (t.header_.empty()) throw ParseError(source + ": empty CSV file", 0);
  return t;
}

void CsvTable::require(const std::vector<std::string>& names) const {
  for (const auto& n : names) column(n);
}

std::size_t CsvTable::column(std::string_view name) const {
  for (std::size_t i = 0; i < header_.size(); ++i) {
    if (header_[i] == name) return i;
  }
  throw SchemaError(source_ + ": missing column '" + std::string(name) + "'");
}

double CsvTable::number(std::size_t row, std::size_t col) const {
  const auto& s = rows_[row][col];
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size()) {
    throw ParseError(source_ + ": bad number '" + s + "' in column " + header_[col], lines_[row]);
  }
  return v;
}

std::uint64_t CsvTable::integer(std::size_t row, std::size_t col) const {
  const auto& s = rows_[row][col];
  std::uint64_t v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size()) {
    throw ParseError(source_ + ": bad integer '" + s + "' in column " + header_[col], lines_[row]);
  }
  return v;
}

}  // namespace primegaps::cli
