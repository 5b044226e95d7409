#pragma once

#include <charconv>
#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <string>
#include <string_view>
#include <system_error>
#include <vector>

namespace medalstats {

/// Parse failure in a tabular input; carries the 1-based line number.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, int line)
      : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

/// Structurally valid input whose content violates a dataset invariant.
class IntegrityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace tsv {

inline std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> fields;
  size_t start = 0;
  while (true) {
    size_t tab = line.find('\t', start);
    if (tab == std::string_view::npos) {
      fields.push_back(line.substr(start));
      break;
    }
    fields.push_back(line.substr(start, tab - start));
    start = tab + 1;
  }
  return fields;
}

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

inline bool is_skippable(std::string_view line) {
  auto t = trim(line);
  return t.empty() || t.front() == '#';
}

/// Calls fn(line_number, fields) for every non-comment, non-blank line.
template <typename Fn>
void for_each_row(std::string_view text, Fn&& fn) {
  int line_no = 0;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t nl = text.find('\n', pos);
    std::string_view line =
        nl == std::string_view::npos ? text.substr(pos) : text.substr(pos, nl - pos);
    ++line_no;
    if (nl == std::string_view::npos && line.empty()) break;
    if (!is_skippable(line)) fn(line_no, split_fields(line));
    if (nl == std::string_view::npos) break;
    pos = nl + 1;
  }
}

// from_chars is locale-independent by construction, which the output contract
// requires (dot decimal separator regardless of environment).
inline int parse_int(std::string_view field, int line, std::string_view what) {
  auto t = trim(field);
  int value = 0;
  auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), value);
  if (ec != std::errc{} || ptr != t.data() + t.size())
    throw ParseError("cannot parse " + std::string(what) + " from '" + std::string(field) + "'",
                     line);
  return value;
}

inline double parse_double(std::string_view field, int line, std::string_view what) {
  auto t = trim(field);
  double value = 0;
  auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), value);
  if (ec != std::errc{} || ptr != t.data() + t.size())
    throw ParseError("cannot parse " + std::string(what) + " from '" + std::string(field) + "'",
                     line);
  return value;
}

/// Fixed-point formatting with a dot separator, immune to the global locale.
inline std::string format_fixed(double value, int decimals) {
  if (!std::isfinite(value)) return value > 0 ? "inf" : (value < 0 ? "-inf" : "nan");
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value, std::chars_format::fixed,
                                 decimals);
  if (ec != std::errc{}) return "?";
  return std::string(buf, ptr);
}

inline std::string format_int(long long value) { return std::to_string(value); }

}  // namespace tsv
}  // namespace medalstats
