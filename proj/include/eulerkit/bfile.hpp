#pragma once

#include <cctype>
#include <filesystem>
#include <fstream>
#include <string>
#include <string_view>
#include <vector>

#include "eulerkit/bigint.hpp"
#include "eulerkit/parse_error.hpp"

namespace eulerkit {

/// One "index value" pair from an OEIS b-file.
struct BFileEntry {
  long long index = 0;
  BigInt value;

  bool operator==(const BFileEntry&) const = default;
};

/// Parsed b-file: strictly increasing indices, arbitrary-precision values.
struct BFile {
  std::string sequence_id;  // "A" + 6 digits when known, else empty
  std::vector<BFileEntry> entries;
};

/// Parses the standard b-file line format `<index><space><integer>`, skipping
/// blank lines and '#' comments. Malformed lines and non-increasing indices
/// raise ParseError with the offending line number.
inline BFile parse_bfile_text(std::istream& in, std::string sequence_id = "") {
  BFile out;
  out.sequence_id = std::move(sequence_id);
  std::string line;
  std::size_t line_no = 0;
  bool have_prev = false;
  long long prev_index = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view sv(line);
    while (!sv.empty() && (sv.back() == '\r' || sv.back() == ' ' || sv.back() == '\t'))
      sv.remove_suffix(1);
    while (!sv.empty() && (sv.front() == ' ' || sv.front() == '\t')) sv.remove_prefix(1);
    if (sv.empty() || sv.front() == '#') continue;

    auto sep = sv.find_first_of(" \t");
    if (sep == std::string_view::npos)
      throw ParseError(line_no, "line", "expected '<index> <value>'");
    std::string_view index_part = sv.substr(0, sep);
    std::string_view value_part = sv.substr(sep + 1);
    while (!value_part.empty() && (value_part.front() == ' ' || value_part.front() == '\t'))
      value_part.remove_prefix(1);
    if (value_part.empty()) throw ParseError(line_no, "value", "missing value");
    if (value_part.find_first_of(" \t") != std::string_view::npos)
      throw ParseError(line_no, "value", "trailing data after the value");

    BFileEntry entry;
    try {
      entry.index = BigInt::from_string(index_part).to_int64().value();
    } catch (...) {
      throw ParseError(line_no, "index", "'" + std::string(index_part) + "' is not an integer");
    }
    try {
      entry.value = BigInt::from_string(value_part);
    } catch (const std::invalid_argument&) {
      throw ParseError(line_no, "value", "'" + std::string(value_part) + "' is not an integer");
    }
    if (have_prev && entry.index <= prev_index)
      throw ParseError(line_no, "index", "indices must be strictly increasing");
    prev_index = entry.index;
    have_prev = true;
    out.entries.push_back(std::move(entry));
  }
  return out;
}

/// Derives the sequence id from a conventional b-file name (bNNNNNN.txt).
inline std::string sequence_id_from_filename(const std::filesystem::path& path) {
  std::string stem = path.stem().string();
  if (stem.size() == 7 && stem[0] == 'b') {
    bool digits = true;
    for (std::size_t i = 1; i < stem.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(stem[i]))) digits = false;
    if (digits) return "A" + stem.substr(1);
  }
  return "";
}

inline BFile parse_bfile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("parse_bfile: cannot open " + path.string());
  return parse_bfile_text(in, sequence_id_from_filename(path));
}

}  // namespace eulerkit
