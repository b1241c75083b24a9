// Independent brute-force references used by the tests. Nothing here calls the
// library's search code; answers come from direct simulation.
#pragma once
#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "automaton.hpp"
#include "graph.hpp"

namespace brute {

inline rs::Multigraph mg(std::vector<std::vector<int>> adj) { return rs::Multigraph(std::move(adj)); }

using Table = std::vector<std::vector<int>>;  // table[state][letter]

inline Table table_of(const rs::Dfa& a) {
  Table t(a.states(), std::vector<int>(a.letters()));
  for (int s = 0; s < a.states(); ++s)
    for (int l = 0; l < a.letters(); ++l) t[s][l] = a.next(s, l);
  return t;
}

inline bool resets(const Table& t, const std::vector<int>& w) {
  int target = -1;
  for (int s = 0; s < int(t.size()); ++s) {
    int cur = s;
    for (int l : w) cur = t[cur][l];
    if (target >= 0 && cur != target) return false;
    target = cur;
  }
  return true;
}

// calls f on every word of length len until it returns true
inline bool any_word(int letters, int len, const std::function<bool(const std::vector<int>&)>& f) {
  std::vector<int> w(len, 0);
  for (;;) {
    if (f(w)) return true;
    int p = len - 1;
    while (p >= 0 && w[p] == letters - 1) w[p--] = 0;
    if (p < 0) return false;
    ++w[p];
  }
}

inline bool has_reset_of_length(const Table& t, int len) {
  int k = t.empty() ? 0 : int(t[0].size());
  return any_word(k, len, [&](const std::vector<int>& w) { return resets(t, w); });
}

inline rs::Dfa random_dfa(std::mt19937_64& rng, int t, int k) {
  rs::Dfa a(t, k);
  std::uniform_int_distribution<int> pick(0, t - 1);
  for (int s = 0; s < t; ++s)
    for (int l = 0; l < k; ++l) a.set(s, l, pick(rng));
  return a;
}

inline rs::Multigraph random_graph(std::mt19937_64& rng, int t, int d) {
  std::uniform_int_distribution<int> pick(0, t - 1);
  std::vector<std::vector<int>> adj(t);
  for (auto& row : adj)
    for (int i = 0; i < d; ++i) row.push_back(pick(rng));
  return rs::Multigraph(adj);
}

// gcd of all simple cycle lengths; 0 when acyclic
inline long long cycle_gcd(const rs::Multigraph& g) {
  const int t = g.vertices();
  long long gd = 0;
  std::vector<char> on(t, 0);
  std::function<void(int, int, int)> dfs = [&](int start, int v, int len) {
    for (int w : g.out[v]) {
      if (w == start) gd = std::gcd(gd, (long long)len + 1);
      else if (w > start && !on[w]) {
        on[w] = 1;
        dfs(start, w, len + 1);
        on[w] = 0;
      }
    }
  };
  for (int s = 0; s < t; ++s) {
    on[s] = 1;
    dfs(s, s, 0);
    on[s] = 0;
  }
  return gd;
}

// every coloring as a transition table, per-vertex permutations in next_permutation order
inline void each_coloring(const rs::Multigraph& g, const std::function<bool(const Table&)>& f) {
  const int t = g.vertices(), d = int(g.out[0].size());
  std::vector<std::vector<int>> perm(t, std::vector<int>(d));
  for (auto& p : perm) std::iota(p.begin(), p.end(), 0);
  Table tab(t, std::vector<int>(d));
  std::function<bool(int)> rec = [&](int v) -> bool {
    if (v == t) return f(tab);
    std::vector<int> p(d);
    std::iota(p.begin(), p.end(), 0);
    do {
      for (int s = 0; s < d; ++s) tab[v][p[s]] = g.out[v][s];
      if (rec(v + 1)) return true;
    } while (std::next_permutation(p.begin(), p.end()));
    return false;
  };
  rec(0);
}

inline bool in_class(const rs::Multigraph& g, const std::vector<int>& w) {
  bool hit = false;
  each_coloring(g, [&](const Table& t) { return hit = resets(t, w); });
  return hit;
}

// some coloring has a reset word of length <= k (exactly k suffices: pad the word)
inline bool srcp(const rs::Multigraph& g, int k) {
  if (g.vertices() == 1) return true;
  if (k == 0) return false;
  bool hit = false;
  each_coloring(g, [&](const Table& t) { return hit = has_reset_of_length(t, k); });
  return hit;
}

// odometer over all graphs with t vertices, out-degree d, targets as sorted multisets
inline void each_graph(int t, int d, const std::function<void(const rs::Multigraph&)>& f) {
  std::vector<std::vector<int>> rows;
  std::vector<int> cur;
  std::function<void(int)> gen = [&](int lo) {
    if (int(cur.size()) == d) {
      rows.push_back(cur);
      return;
    }
    for (int v = lo; v < t; ++v) {
      cur.push_back(v);
      gen(v);
      cur.pop_back();
    }
  };
  gen(0);
  std::vector<std::size_t> idx(t, 0);
  std::vector<std::vector<int>> adj(t);
  for (;;) {
    for (int v = 0; v < t; ++v) adj[v] = rows[idx[v]];
    f(rs::Multigraph(adj));
    int p = t - 1;
    while (p >= 0 && idx[p] == rows.size() - 1) idx[p--] = 0;
    if (p < 0) return;
    ++idx[p];
  }
}

}  // namespace brute
