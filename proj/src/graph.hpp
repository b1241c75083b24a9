#pragma once
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "automaton.hpp"

namespace rs {

// Directed multigraph; out[v] lists targets in slot order, repeats are parallel edges.
struct Multigraph {
  std::vector<std::vector<int>> out;

  Multigraph() = default;
  explicit Multigraph(std::vector<std::vector<int>> adj);
  int vertices() const { return int(out.size()); }
  bool operator==(const Multigraph&) const = default;
};

// letter[v][slot] is the letter on that out-edge; a bijection per vertex.
struct Coloring {
  std::vector<std::vector<int>> letter;
  bool operator==(const Coloring&) const = default;
};

std::optional<int> out_degree_uniform(const Multigraph& g);
bool is_aperiodic(const Multigraph& g);
bool is_admissible(const Multigraph& g);
bool is_strongly_connected(const Multigraph& g);
// Some coloring synchronizes: uniform out-degree >= 1 and exactly one sink
// component, which is aperiodic (road coloring theorem on that component).
bool is_road_colorable(const Multigraph& g);
// shortest distance v -> q, -1 when q is unreachable
std::vector<int> distance_layers(const Multigraph& g, int q);
// vertices with a walk of length exactly i into q, for i = 0..len
std::vector<std::vector<char>> exact_predecessors(const Multigraph& g, int q, int len);

void check_coloring(const Multigraph& g, const Coloring& c);
Dfa apply_coloring(const Multigraph& g, const Coloring& c);

// The identity coloring: slot j carries letter j.
Coloring identity_coloring(const Multigraph& g);

// Colorings are numbered in mixed radix, vertex 0 most significant, each digit the
// lexicographic rank of that vertex's slot->letter permutation.
std::optional<std::uint64_t> coloring_count(const Multigraph& g);
Coloring coloring_at(const Multigraph& g, std::uint64_t index);

std::string graph_to_text(const Multigraph& g);
Multigraph graph_from_text(const std::string& text);
std::string colored_graph_to_text(const Multigraph& g, const Coloring& c);
// accepts plain graph text too, in which case the coloring is absent
Multigraph colored_graph_from_text(const std::string& text, std::optional<Coloring>* c);
std::string graph_to_dot(const Multigraph& g, const Coloring* c, const std::vector<std::string>* names = nullptr);

}  // namespace rs
