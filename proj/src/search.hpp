#pragma once
#include <cstdint>
#include <functional>
#include <optional>

#include "graph.hpp"

namespace rs {

// Smallest index in [0, count) with pred true; chunks are handed out to `threads` workers.
std::optional<std::uint64_t> first_index(std::uint64_t count, int threads,
                                         const std::function<bool(std::uint64_t)>& pred);

// Backtracking search for a coloring under which every vertex walks w into q.
// Uses exact-length reachability to prune; parallel edges are tried once.
std::optional<Coloring> color_for_word(const Multigraph& g, const Word& w, int q);

// Words of length k with letters in first-occurrence order (0 first, then at most max+1).
std::vector<Word> canonical_words(int k, int alphabet);

}  // namespace rs
