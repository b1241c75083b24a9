#pragma once
#include <string>
#include <vector>

namespace rs {

// Splits text into whitespace tokens, one vector per line; blank and '#' lines are dropped.
std::vector<std::vector<std::string>> content_lines(const std::string& text);

long long to_int(const std::string& tok, const char* what);

}  // namespace rs
