#pragma once
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "automaton.hpp"
#include "sync.hpp"

namespace rs {

struct BatchItem {
  Dfa dfa;
  std::int64_t d = 0;
};

struct Batch {
  int t = 0;
  std::vector<BatchItem> items;
};

// Preprocessed batch: letter 0 of every item is the shared identity letter kappa.
struct Preprocessed {
  std::optional<bool> early;  // set when the batch is decided without composing
  Batch batch;
  std::vector<int> origin;  // index in the raw batch of every surviving item
};

Preprocessed preprocess(const Batch& raw);
// decides the batch directly when m >= 2^t
std::optional<bool> big_m_branch(const Batch& pre, const BfsLimits& lim = {});

int pattern_width(int m);  // floor(log2(m + 1))
std::vector<int> pattern_subset(int i, int m);
std::pair<std::vector<int>, std::vector<int>> pattern_functions(int i, int m);

struct Composed {
  Dfa dfa;
  std::int64_t d_prime = 0;
  int t = 0, m = 0, z = 0, q = 0;
  std::vector<std::string> state_names, letter_names;
  std::vector<int> item_letter_base;  // first letter of item i (after kappa)

  int dead() const { return t; }
  int cell(int h, int k, bool flag_f) const { return t + 1 + ((h * (q + 1) + k) * 2 + (flag_f ? 1 : 0)); }
  int kappa() const { return 0; }
  int x(int i, int j) const { return item_letter_base[i - 1] + j - 1; }  // j >= 1
  int alpha(int i) const { return letter_alpha0 + i - 1; }
  int omega(int s) const { return letter_omega0 + s - 1; }  // s in 1..t
  int letter_alpha0 = 0, letter_omega0 = 0;
};

Composed compose(const Batch& pre);

struct ComposeReport {
  bool c1 = false, c2 = false, c3 = false;
  bool equivalence = false;  // syn_decide(A', z+1) iff some item is a YES instance
  bool composed_yes = false, any_item_yes = false;
  std::uint64_t words_checked = 0, reset_words_found = 0, c3_words = 0;
};

struct VerifyLimits {
  std::uint64_t word_cap = 100000000;
  BfsLimits bfs;
};

ComposeReport verify_c1_c2_c3(const Composed& a, const Batch& pre, const VerifyLimits& lim = {});

std::string batch_to_text(const Batch& b);
Batch batch_from_text(const std::string& text);

}  // namespace rs
