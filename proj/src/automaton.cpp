#include "automaton.hpp"

#include <bit>
#include <sstream>

#include "error.hpp"
#include "textio.hpp"

namespace rs {

StateSet StateSet::full(int t) {
  StateSet s(t);
  for (int i = 0; i < t; ++i) s.add(i);
  return s;
}

int StateSet::size() const {
  int n = 0;
  for (auto b : bits_) n += std::popcount(b);
  return n;
}

std::vector<int> StateSet::members() const {
  std::vector<int> out;
  for (int i = 0; i < t_; ++i)
    if (has(i)) out.push_back(i);
  return out;
}

std::size_t StateSetHash::operator()(const StateSet& s) const {
  std::size_t h = 1469598103934665603ull;
  for (auto b : s.blocks()) {
    h ^= b + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return h;
}

Dfa::Dfa(int t, int alphabet) : t_(t), k_(alphabet), delta_(std::size_t(t) * alphabet, 0) {
  if (t < 1 || alphabet < 1) throw InvalidInput("dfa needs at least one state and one letter");
}

Dfa::Dfa(int t, int alphabet, std::vector<int> delta) : Dfa(t, alphabet) {
  if (delta.size() != delta_.size()) throw InvalidInput("transition table has wrong size");
  for (int v : delta)
    if (v < 0 || v >= t) throw InvalidInput("transition target out of range");
  delta_ = std::move(delta);
}

void Dfa::set(int s, int a, int v) {
  if (v < 0 || v >= t_) throw InvalidInput("transition target out of range");
  delta_[std::size_t(s) * k_ + a] = v;
}

StateSet apply_letter(const Dfa& a, const StateSet& s, int letter) {
  if (letter < 0 || letter >= a.letters())
    throw InvalidInput("letter " + std::to_string(letter) + " out of range");
  StateSet r(a.states());
  const auto& blocks = s.blocks();
  for (std::size_t bi = 0; bi < blocks.size(); ++bi) {
    auto b = blocks[bi];
    while (b) {
      int st = int(bi * 64) + std::countr_zero(b);
      b &= b - 1;
      r.add(a.next(st, letter));
    }
  }
  return r;
}

StateSet apply_word(const Dfa& a, const StateSet& s, const Word& w) {
  StateSet cur = s;
  for (int l : w) cur = apply_letter(a, cur, l);
  return cur;
}

std::vector<StateSet> activity_trace(const Dfa& a, const Word& w) {
  std::vector<StateSet> tr{StateSet::full(a.states())};
  for (int l : w) tr.push_back(apply_letter(a, tr.back(), l));
  return tr;
}

Dfa cerny_automaton(int n) {
  if (n < 2) throw InvalidInput("cerny automaton needs n >= 2");
  Dfa a(n, 2);
  for (int i = 0; i < n; ++i) {
    a.set(i, 0, i == 0 ? 1 : i);
    a.set(i, 1, (i + 1) % n);
  }
  return a;
}

std::string render_word(const Word& w, int alphabet) {
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (alphabet <= 26) {
      s += char('a' + w[i]);
    } else {
      if (i) s += ' ';
      s += std::to_string(w[i]);
    }
  }
  return s;
}

Word parse_word(const std::string& s, int alphabet) {
  Word w;
  bool numeric = false;
  for (char c : s)
    if (c >= '0' && c <= '9') numeric = true;
  if (numeric) {
    std::istringstream in(s);
    std::string tok;
    while (in >> tok) w.push_back(int(to_int(tok, "letter")));
  } else {
    for (char c : s) {
      if (c == ' ') continue;
      if (c < 'a' || c > 'z') throw InvalidInput(std::string("bad letter '") + c + "'");
      w.push_back(c - 'a');
    }
  }
  for (int l : w)
    if (l < 0 || l >= alphabet) throw InvalidInput("letter out of range in word '" + s + "'");
  return w;
}

std::string dfa_to_text(const Dfa& a) {
  std::ostringstream out;
  out << "dfa " << a.states() << ' ' << a.letters() << '\n';
  for (int s = 0; s < a.states(); ++s) {
    for (int l = 0; l < a.letters(); ++l) out << (l ? " " : "") << a.next(s, l);
    out << '\n';
  }
  return out.str();
}

Dfa dfa_from_text(const std::string& text) {
  auto lines = content_lines(text);
  if (lines.empty() || lines[0].size() != 3 || lines[0][0] != "dfa")
    throw InvalidInput("expected header 'dfa <t> <alphabet_size>'");
  long long t = to_int(lines[0][1], "t"), k = to_int(lines[0][2], "alphabet_size");
  if (t < 1 || k < 1) throw InvalidInput("dfa needs t >= 1 and alphabet_size >= 1");
  if (t > 1000000 || k > 100000) throw SizeLimit("dfa dimensions too large");
  if (lines.size() != std::size_t(t) + 1)
    throw InvalidInput("expected " + std::to_string(t) + " transition rows");
  std::vector<int> delta;
  for (long long s = 0; s < t; ++s) {
    const auto& row = lines[s + 1];
    if (row.size() != std::size_t(k))
      throw InvalidInput("row " + std::to_string(s) + " must have " + std::to_string(k) + " entries");
    for (const auto& tok : row) delta.push_back(int(to_int(tok, "transition")));
  }
  return Dfa(int(t), int(k), std::move(delta));
}

}  // namespace rs
