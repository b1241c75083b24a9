#include "srcp.hpp"

#include <algorithm>
#include <map>

#include "error.hpp"
#include "search.hpp"
#include "srcpw.hpp"

namespace rs {

namespace {

std::optional<SrcpWitness> tiny_cases(const Multigraph& g, std::int64_t k, bool& decided) {
  decided = true;
  if (g.vertices() == 1) return SrcpWitness{identity_coloring(g), {}};
  if (k <= 0 || g.out[0].empty()) return std::nullopt;
  decided = false;
  return std::nullopt;
}

}  // namespace

std::optional<SrcpWitness> srcp_enumerate(const Multigraph& g, std::int64_t k, const OracleLimits& lim) {
  if (!out_degree_uniform(g)) throw InvalidInput("srcp needs uniform out-degree");
  bool decided;
  auto early = tiny_cases(g, k, decided);
  if (decided) return early;
  auto count = coloring_count(g);
  if (!count) throw SizeLimit("coloring count overflows 64 bits");
  auto hit = first_index(*count, lim.threads, [&](std::uint64_t i) {
    return syn_decide(apply_coloring(g, coloring_at(g, i)), k, lim.bfs);
  });
  if (!hit) return std::nullopt;
  auto c = coloring_at(g, *hit);
  return SrcpWitness{c, *shortest_reset_word(apply_coloring(g, c), lim.bfs)};
}

std::optional<SrcpWitness> srcp_pattern(const Multigraph& g, std::int64_t k, const BfsLimits& bfs) {
  if (!out_degree_uniform(g)) throw InvalidInput("srcp needs uniform out-degree");
  bool decided;
  auto early = tiny_cases(g, k, decided);
  if (decided) return early;
  const int t = g.vertices(), d = int(g.out[0].size());
  // any reset word can be padded to length exactly k
  const int len = int(std::min<std::int64_t>(k, pin_bound(t)));
  auto words = canonical_words(len, d);
  for (int q = 0; q < t; ++q) {
    for (const auto& w : words) {
      auto c = color_for_word(g, w, q);
      if (c) return SrcpWitness{*c, *shortest_reset_word(apply_coloring(g, *c), bfs)};
    }
  }
  return std::nullopt;
}

std::optional<SrcpWitness> srcp_oracle(const Multigraph& g, std::int64_t k, const OracleLimits& lim) {
  if (!out_degree_uniform(g)) throw InvalidInput("srcp needs uniform out-degree");
  auto count = coloring_count(g);
  if (count && *count <= lim.coloring_cap) return srcp_enumerate(g, k, lim);
  return srcp_pattern(g, k, lim.bfs);
}

bool srcp_decide(const Multigraph& g, std::int64_t k, const OracleLimits& lim) {
  if (!is_admissible(g)) throw InvalidInput("srcp is defined on admissible graphs only");
  if (k >= pin_bound(g.vertices())) return is_road_colorable(g);
  if (g.out[0].size() == 2 && k == 3) return srcp_k3_decide(g);
  return srcp_oracle(g, k, lim).has_value();
}

Multigraph kernel_reduce(const Multigraph& g, std::int64_t bound, int* rounds) {
  Multigraph h = g;
  int n = 0;
  while (!h.out.empty() && std::int64_t(h.out[0].size()) > bound) {
    for (auto& row : h.out) {
      std::map<int, int> mult;
      for (int v : row) ++mult[v];
      int target = -1, best = 0;
      for (auto [v, c] : mult)
        if (c > best) best = c, target = v;  // map order gives the smallest target on ties
      auto it = std::find(row.rbegin(), row.rend(), target);
      row.erase(std::next(it).base());
    }
    ++n;
  }
  if (rounds) *rounds = n;
  return h;
}

KernelResult kernelize(const Multigraph& g, std::int64_t k) {
  if (!is_admissible(g)) throw InvalidInput("kernelize needs an admissible graph");
  const std::int64_t t = g.vertices(), z = pin_bound(t), d = std::int64_t(g.out[0].size());
  const std::int64_t bound = t * (z - 1);
  KernelResult r;
  if (k >= z) {
    std::int64_t loops = std::max<std::int64_t>(1, std::min(d, bound));
    std::vector<int> row(std::size_t(loops), 0);
    r.yes = is_road_colorable(g);
    if (r.yes) {
      r.graph = Multigraph({row});
    } else {
      std::vector<int> row1(std::size_t(loops), 1);
      r.graph = Multigraph({row, row1});
    }
    r.k = 0;
    r.trivial = true;
    return r;
  }
  r.graph = kernel_reduce(g, bound, &r.rounds);
  r.k = k;
  r.aperiodicity_preserved = r.graph.out[0].empty() ? false : is_aperiodic(r.graph);
  return r;
}

}  // namespace rs
