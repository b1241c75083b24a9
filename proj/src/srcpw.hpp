#pragma once
#include <optional>
#include <string>

#include "graph.hpp"
#include "srcp.hpp"

namespace rs {

// The four canonical length-3 words over {a, b}.
enum class FixedWord { aaa, aab, aba, abb };
Word fixed_word(FixedWord w);
std::optional<FixedWord> parse_fixed_word(const std::string& s);

// Brute force: a coloring of an out-degree-2 graph under which w maps Q to one state.
std::optional<Coloring> in_class_oracle(const Multigraph& g, const Word& w, const OracleLimits& lim = {});

// Polynomial deciders. Each returns a witnessing coloring when the graph is in the class:
//   aaa: G_aaa
//   aab: G_aab minus G_aaa
//   aba: G_aba minus G_aaa
//   abb: G_abb minus (G_aba and G_aaa)
std::optional<Coloring> witness_aaa(const Multigraph& g);
std::optional<Coloring> witness_aab(const Multigraph& g);
std::optional<Coloring> witness_aba(const Multigraph& g);
std::optional<Coloring> witness_abb(const Multigraph& g);

bool decide_aaa(const Multigraph& g);
bool decide_aab(const Multigraph& g);
bool decide_aba(const Multigraph& g);
bool decide_abb(const Multigraph& g);

// Swap colors at every vertex whose b-edge enters q; turns an abb coloring into an aba one.
Coloring recolor_abb_to_aba(const Multigraph& g, const Coloring& c);

// Is there a coloring with a reset word of length <= 3? srcp_k3_decide also checks admissibility.
bool srcp_k3_union(const Multigraph& g);
bool srcp_k3_decide(const Multigraph& g);

}  // namespace rs
