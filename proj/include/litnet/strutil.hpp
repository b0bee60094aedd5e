#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace litnet {

// Splits on a single delimiter; empty fields preserved.
std::vector<std::string> split(std::string_view line, char delim);

// Strips leading/trailing ASCII whitespace.
std::string trim(std::string_view s);

// Lowercases ASCII and collapses runs of whitespace to one space.
// All pattern matching operates on text in this normal form.
std::string normalize_text(std::string_view s);

// True iff `pattern` occurs in `text` delimited by non-alphanumeric
// characters (or string boundaries) on both sides. Both arguments must
// already be in normalize_text() form.
bool contains_token_bounded(std::string_view text, std::string_view pattern);

}  // namespace litnet
