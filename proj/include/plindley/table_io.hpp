#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "plindley/fitting.hpp"

namespace plindley::io {

/// Names of the bundled tables ("dit-system", "noc-system").
std::vector<std::string> embedded_table_names();
bool is_embedded_table(std::string_view name);
/// CSV text of a bundled table. Throws ValidationError for unknown names.
std::string_view embedded_table_text(std::string_view name);

/// Parses `value,frequency` CSV. Blank lines and lines starting with '#'
/// are skipped. Throws ParseError (with line number) on malformed input and
/// ValidationError when the rows break a table invariant.
fitting::FrequencyTable parse_table_csv(std::string_view text, std::string name);

/// Loads an embedded table by name or a CSV file by path.
fitting::FrequencyTable read_table(const std::string& path_or_name);

}  // namespace plindley::io
