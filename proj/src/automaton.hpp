#pragma once
#include <cstdint>
#include <string>
#include <vector>

namespace rs {

using Word = std::vector<int>;

class StateSet {
 public:
  StateSet() = default;
  explicit StateSet(int t) : t_(t), bits_((t + 63) / 64, 0) {}
  static StateSet full(int t);

  int universe() const { return t_; }
  bool has(int s) const { return (bits_[s >> 6] >> (s & 63)) & 1u; }
  void add(int s) { bits_[s >> 6] |= std::uint64_t(1) << (s & 63); }
  int size() const;
  std::vector<int> members() const;
  const std::vector<std::uint64_t>& blocks() const { return bits_; }

  bool operator==(const StateSet& o) const { return t_ == o.t_ && bits_ == o.bits_; }
  bool operator<(const StateSet& o) const { return bits_ < o.bits_; }

 private:
  int t_ = 0;
  std::vector<std::uint64_t> bits_;
};

struct StateSetHash {
  std::size_t operator()(const StateSet& s) const;
};

class Dfa {
 public:
  Dfa() = default;
  Dfa(int t, int alphabet);
  Dfa(int t, int alphabet, std::vector<int> delta);

  int states() const { return t_; }
  int letters() const { return k_; }
  int next(int s, int a) const { return delta_[std::size_t(s) * k_ + a]; }
  void set(int s, int a, int v);
  const std::vector<int>& table() const { return delta_; }

  bool operator==(const Dfa& o) const = default;

 private:
  int t_ = 0, k_ = 0;
  std::vector<int> delta_;
};

// image of s under one letter / a whole word
StateSet apply_letter(const Dfa& a, const StateSet& s, int letter);
StateSet apply_word(const Dfa& a, const StateSet& s, const Word& w);
std::vector<StateSet> activity_trace(const Dfa& a, const Word& w);

Dfa cerny_automaton(int n);

// letters render as a, b, c, ... when the alphabet fits, else as numbers
std::string render_word(const Word& w, int alphabet);
Word parse_word(const std::string& s, int alphabet);

std::string dfa_to_text(const Dfa& a);
Dfa dfa_from_text(const std::string& text);

}  // namespace rs
