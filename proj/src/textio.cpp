#include "textio.hpp"

#include <charconv>
#include <sstream>

#include "error.hpp"

namespace rs {

std::vector<std::vector<std::string>> content_lines(const std::string& text) {
  std::vector<std::vector<std::string>> out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::vector<std::string> toks;
    std::string tok;
    while (ls >> tok) toks.push_back(tok);
    if (toks.empty() || toks[0][0] == '#') continue;
    out.push_back(std::move(toks));
  }
  return out;
}

long long to_int(const std::string& tok, const char* what) {
  long long v = 0;
  auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc() || p != tok.data() + tok.size())
    throw InvalidInput(std::string("expected integer for ") + what + ", got '" + tok + "'");
  return v;
}

}  // namespace rs
