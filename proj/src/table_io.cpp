#include "plindley/table_io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

#include "plindley/errors.hpp"

namespace plindley::io {

namespace {

// Frequencies (percent) of the DIT and NOC metrics, system category.
constexpr std::string_view kDitSystem =
    "value,frequency\n"
    "0,35.45\n"
    "1,54.27\n"
    "2,7.94\n"
    "3,1.50\n"
    "4,0.77\n"
    "5,0.07\n";

constexpr std::string_view kNocSystem =
    "value,frequency\n"
    "0,92.21\n"
    "1,3.73\n"
    "2,1.99\n"
    "3,0.64\n"
    "4,0.32\n"
    "5,0.21\n"
    "6,0.19\n"
    "7,0.09\n"
    "8,0.06\n"
    "9,0.11\n"
    "10,0.09\n"
    "11,0.02\n"
    "12,0.11\n"
    "13,0.04\n"
    "14,0.04\n"
    "15,0.04\n"
    "17,0.02\n"
    "18,0.02\n"
    "19,0.04\n"
    "29,0.02\n";

std::string_view trim(std::string_view s) {
  const auto is_space = [](char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\n'; };
  while (!s.empty() && is_space(s.front())) {
    s.remove_prefix(1);
  }
  while (!s.empty() && is_space(s.back())) {
    s.remove_suffix(1);
  }
  return s;
}

double parse_number(std::string_view field, std::size_t line, const char* what) {
  field = trim(field);
  double v = 0.0;
  const auto* end = field.data() + field.size();
  const auto [ptr, ec] = std::from_chars(field.data(), end, v);
  if (field.empty() || ec != std::errc() || ptr != end) {
    throw ParseError("line " + std::to_string(line) + ": cannot parse " + what + " '" +
                         std::string(field) + "'",
                     line);
  }
  return v;
}

}  // namespace

std::vector<std::string> embedded_table_names() { return {"dit-system", "noc-system"}; }

bool is_embedded_table(std::string_view name) {
  return name == "dit-system" || name == "noc-system";
}

std::string_view embedded_table_text(std::string_view name) {
  if (name == "dit-system") {
    return kDitSystem;
  }
  if (name == "noc-system") {
    return kNocSystem;
  }
  throw ValidationError("unknown embedded table '" + std::string(name) + "'");
}

fitting::FrequencyTable parse_table_csv(std::string_view text, std::string name) {
  std::vector<fitting::Row> rows;
  bool header_seen = false;
  std::size_t line_no = 0;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    const std::string_view raw = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;

    std::string_view line = trim(raw);
    if (line_no == 1 && line.starts_with("\xEF\xBB\xBF")) {
      line.remove_prefix(3);
    }
    if (line.empty() || line.front() == '#') {
      continue;
    }
    const auto comma = line.find(',');
    if (comma == std::string_view::npos || line.find(',', comma + 1) != std::string_view::npos) {
      throw ParseError("line " + std::to_string(line_no) + ": expected exactly two fields",
                       line_no);
    }
    const auto first = trim(line.substr(0, comma));
    const auto second = trim(line.substr(comma + 1));
    if (!header_seen) {
      if (first != "value" || second != "frequency") {
        throw ParseError(
            "line " + std::to_string(line_no) + ": expected header 'value,frequency'", line_no);
      }
      header_seen = true;
      continue;
    }
    rows.push_back({parse_number(first, line_no, "value"),
                    parse_number(second, line_no, "frequency")});
  }
  if (!header_seen) {
    throw ParseError("empty input: no 'value,frequency' header", 0);
  }
  if (rows.empty()) {
    throw ParseError("no data rows after the header", line_no);
  }
  return fitting::FrequencyTable(std::move(name), std::move(rows));
}

fitting::FrequencyTable read_table(const std::string& path_or_name) {
  if (is_embedded_table(path_or_name)) {
    return parse_table_csv(embedded_table_text(path_or_name), path_or_name);
  }
  std::ifstream in(path_or_name, std::ios::binary);
  if (!in) {
    throw IoError("cannot open '" + path_or_name + "'");
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_table_csv(buf.str(), path_or_name);
}

}  // namespace plindley::io
