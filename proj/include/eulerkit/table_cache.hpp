#pragma once

#include <charconv>
#include <cstddef>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "eulerkit/euler_table.hpp"
#include "eulerkit/parse_error.hpp"

namespace eulerkit {

/// Renders a table in the cache file format:
///   eulerkit-table v1 N=<max_index>
///   e[<k>] = <coeff_0>,<coeff_1>,...
/// with e_k(a) coefficients ascending in alpha, each in canonical "p/q" form,
/// trailing zeros trimmed. The encoding round-trips bit-exactly.
inline std::string cache_format(const EulerTable& table) {
  std::ostringstream out;
  out << "eulerkit-table v1 N=" << table.max_index() << "\n";
  for (std::size_t k = 0; k <= table.max_index(); ++k) {
    out << "e[" << k << "] =";
    const AlphaPoly& e = table.constant_term(k);
    if (e.is_zero()) {
      out << " 0";
    } else {
      for (std::size_t j = 0; j <= static_cast<std::size_t>(e.degree()); ++j)
        out << (j == 0 ? " " : ",") << e.coeff(j).to_string();
    }
    out << "\n";
  }
  return out.str();
}

inline void cache_store(const EulerTable& table, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cache_store: cannot open " + path.string() + " for writing");
  out << cache_format(table);
  if (!out) throw std::runtime_error("cache_store: write failed for " + path.string());
}

namespace detail {

inline bool parse_size(std::string_view s, std::size_t& value) {
  if (s.empty()) return false;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  return ec == std::errc() && ptr == s.data() + s.size();
}

}  // namespace detail

/// Strict reader for the cache format. Malformed input raises ParseError with
/// the offending line and field; a version other than v1 is rejected.
inline EulerTable cache_parse(std::istream& in) {
  std::string line;
  std::size_t line_no = 1;
  if (!std::getline(in, line)) throw ParseError(1, "header", "empty file, expected 'eulerkit-table v1 N=<n>'");

  constexpr std::string_view magic = "eulerkit-table v";
  if (line.rfind(magic, 0) != 0) throw ParseError(1, "header", "expected 'eulerkit-table v1 N=<n>'");
  std::string_view rest = std::string_view(line).substr(magic.size());
  auto space = rest.find(' ');
  if (space == std::string_view::npos) throw ParseError(1, "header", "missing N=<n> segment");
  std::string_view version = rest.substr(0, space);
  if (version != "1") throw ParseError(1, "version", "unsupported version 'v" + std::string(version) + "'");
  std::string_view nseg = rest.substr(space + 1);
  if (nseg.rfind("N=", 0) != 0) throw ParseError(1, "header", "missing N=<n> segment");
  std::size_t max_index = 0;
  if (!detail::parse_size(nseg.substr(2), max_index)) throw ParseError(1, "N", "not a valid non-negative integer");

  std::vector<AlphaPoly> terms;
  terms.reserve(max_index + 1);
  for (std::size_t k = 0; k <= max_index; ++k) {
    ++line_no;
    if (!std::getline(in, line))
      throw ParseError(line_no, "e[" + std::to_string(k) + "]", "file truncated, entry missing");
    const std::string expected_prefix = "e[" + std::to_string(k) + "] = ";
    if (line.rfind(expected_prefix, 0) != 0)
      throw ParseError(line_no, "e[" + std::to_string(k) + "]",
                       "expected line starting with '" + expected_prefix + "'");
    std::string_view body = std::string_view(line).substr(expected_prefix.size());
    if (body.empty()) throw ParseError(line_no, "coefficients", "no coefficients");

    std::vector<Rat> coeffs;
    std::size_t start = 0;
    while (true) {
      auto comma = body.find(',', start);
      std::string_view token = body.substr(start, comma == std::string_view::npos ? comma : comma - start);
      auto value = Rat::parse_canonical(token);
      if (!value)
        throw ParseError(line_no, "coefficient " + std::to_string(coeffs.size()),
                         "'" + std::string(token) + "' is not a canonical rational");
      coeffs.push_back(*value);
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
    if (coeffs.size() > k + 1)
      throw ParseError(line_no, "coefficients", "degree exceeds the index bound deg e_k <= k");
    if (coeffs.size() > 1 && coeffs.back().is_zero())
      throw ParseError(line_no, "coefficients", "trailing zero coefficient, non-canonical form");
    terms.push_back(AlphaPoly::from_coeffs(std::move(coeffs)));
  }
  ++line_no;
  if (std::getline(in, line) && !line.empty())
    throw ParseError(line_no, "trailing data", "unexpected content after the last entry");
  return EulerTable::from_constant_terms(std::move(terms));
}

inline EulerTable cache_load(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cache_load: cannot open " + path.string());
  return cache_parse(in);
}

}  // namespace eulerkit
