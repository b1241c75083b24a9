#pragma once
#include <cstdint>
#include <optional>

#include "automaton.hpp"

namespace rs {

// Pin's bound (t^3 - t) / 6 on the length of a shortest reset word
std::int64_t pin_bound(std::int64_t t);

bool is_synchronizing(const Dfa& a);

struct BfsLimits {
  std::optional<int> max_length;          // stop searching beyond this length
  std::size_t max_subsets = std::size_t(1) << 24;  // SizeLimit once exceeded
};

std::optional<Word> shortest_reset_word(const Dfa& a, const BfsLimits& lim = {});

bool syn_decide(const Dfa& a, std::int64_t k, const BfsLimits& lim = {});

}  // namespace rs
