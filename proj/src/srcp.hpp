#pragma once
#include <cstdint>
#include <optional>

#include "graph.hpp"
#include "sync.hpp"

namespace rs {

struct OracleLimits {
  // literal enumeration up to this many colorings, pattern search above
  std::uint64_t coloring_cap = std::uint64_t(1) << 20;
  int threads = 1;
  BfsLimits bfs;
};

struct SrcpWitness {
  Coloring coloring;
  Word word;
};

std::optional<SrcpWitness> srcp_oracle(const Multigraph& g, std::int64_t k, const OracleLimits& lim = {});
// literal enumeration only, regardless of the cap
std::optional<SrcpWitness> srcp_enumerate(const Multigraph& g, std::int64_t k, const OracleLimits& lim = {});
// pattern search only
std::optional<SrcpWitness> srcp_pattern(const Multigraph& g, std::int64_t k, const BfsLimits& bfs = {});

bool srcp_decide(const Multigraph& g, std::int64_t k, const OracleLimits& lim = {});

struct KernelResult {
  Multigraph graph;
  std::int64_t k = 0;
  bool trivial = false;  // resolved without search; `yes` holds the answer
  bool yes = false;
  bool aperiodicity_preserved = true;
  int rounds = 0;
};

KernelResult kernelize(const Multigraph& g, std::int64_t k);
// the deletion loop alone, without admissibility checks or the trivial branch
Multigraph kernel_reduce(const Multigraph& g, std::int64_t bound, int* rounds = nullptr);

}  // namespace rs
