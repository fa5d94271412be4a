#pragma once

#include <charconv>
#include <filesystem>
#include <fstream>
#include <string>
#include <system_error>
#include <vector>

#include "itlab/errors.hpp"

namespace itlab {

/// Locale-independent, 17 significant digits.
inline std::string format_number(double value) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), value, std::chars_format::general, 17);
  if (res.ec != std::errc()) throw Error("number formatting failed");
  return std::string(buf, res.ptr);
}

/// Rectangular numeric table written as comma-separated text with LF endings.
class CsvTable {
 public:
  CsvTable(std::string name, std::vector<std::string> header) : name_(std::move(name)), header_(std::move(header)) {
    if (header_.empty()) throw ValidationError("CSV table needs at least one column");
  }

  void add_row(std::vector<double> row) {
    if (row.size() != header_.size())
      throw ValidationError("CSV row has " + std::to_string(row.size()) + " fields, expected " +
                            std::to_string(header_.size()));
    rows_.push_back(std::move(row));
  }

  const std::string& name() const { return name_; }
  const std::vector<std::string>& header() const { return header_; }
  const std::vector<std::vector<double>>& rows() const { return rows_; }

  std::string to_string() const {
    std::string out;
    for (std::size_t c = 0; c < header_.size(); ++c) {
      if (c) out += ',';
      out += header_[c];
    }
    out += '\n';
    for (const auto& row : rows_) {
      for (std::size_t c = 0; c < row.size(); ++c) {
        if (c) out += ',';
        out += format_number(row[c]);
      }
      out += '\n';
    }
    return out;
  }

  void write(const std::filesystem::path& path) const {
    std::ofstream file(path, std::ios::binary | std::ios::trunc);
    if (!file) throw Error("cannot open " + path.string() + " for writing");
    file << to_string();
    if (!file) throw Error("failed writing " + path.string());
  }

 private:
  std::string name_;
  std::vector<std::string> header_;
  std::vector<std::vector<double>> rows_;
};

}  // namespace itlab
