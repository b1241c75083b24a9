#pragma once
#include <array>
#include <optional>
#include <string>
#include <vector>

#include "graph.hpp"
#include "srcp.hpp"

namespace rs {

// 3-CNF; literals are signed variable indices 1..n.
struct Cnf3 {
  int n = 0;
  std::vector<std::array<int, 3>> clauses;
  bool operator==(const Cnf3&) const = default;
};

using Assignment = std::vector<bool>;  // index 0 is x_1

bool satisfies(const Cnf3& f, const Assignment& x);
Cnf3 augment_tautologies(const Cnf3& f);
// least model, reading x_1 as the most significant bit
std::optional<Assignment> sat_oracle(const Cnf3& f);

struct ReductionGraph {
  Multigraph graph;
  std::vector<std::string> names;
  int n = 0, m = 0;

  int d(int i) const { return i; }
  int lit(int l) const { return 8 + 3 * (std::abs(l) - 1) + (l < 0 ? 1 : 0); }
  int w(int i) const { return 8 + 3 * (i - 1) + 2; }
  int c(int j, int k) const { return 8 + 3 * n + 5 * (j - 1) + k; }  // j in 1..m, k in 0..4
};

ReductionGraph build_reduction(const Cnf3& f);
Coloring extract_coloring(const ReductionGraph& g, const Cnf3& f, const Assignment& x);

struct ReductionReport {
  int vertices = 0;
  bool satisfiable = false;
  bool synchronizable = false;  // some coloring has a reset word of length <= 4
  bool equivalent = false;
  bool size_ok = false, degree_ok = false, strongly_connected = false;
  bool words_ok = false;  // abaa is the only length-4 pattern that synchronizes
  std::optional<bool> witness_ok;
  std::vector<std::string> synchronizing_words;
  bool passed() const {
    return equivalent && size_ok && degree_ok && strongly_connected && words_ok && witness_ok.value_or(true);
  }
};

struct ReductionLimits {
  int max_vertices = 40;
  OracleLimits oracle;
};

ReductionReport verify_reduction(const Cnf3& f, const ReductionLimits& lim = {});

std::string cnf_to_dimacs(const Cnf3& f);
Cnf3 cnf_from_dimacs(const std::string& text);

}  // namespace rs
