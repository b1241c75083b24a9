#include "srcpw.hpp"

#include <bit>

#include "error.hpp"
#include "search.hpp"

namespace rs {

namespace {

void need_degree2(const Multigraph& g) {
  auto d = out_degree_uniform(g);
  if (!d || *d != 2) throw InvalidInput("fixed-word classes need out-degree 2");
}

// orientation 0: slot 0 is a; orientation 1: slot 1 is a
Coloring from_orient(const std::vector<int>& o) {
  Coloring c;
  for (int x : o) c.letter.push_back(x ? std::vector<int>{1, 0} : std::vector<int>{0, 1});
  return c;
}

bool has_edge(const Multigraph& g, int v, int q) { return g.out[v][0] == q || g.out[v][1] == q; }

}  // namespace

Word fixed_word(FixedWord w) {
  switch (w) {
    case FixedWord::aaa: return {0, 0, 0};
    case FixedWord::aab: return {0, 0, 1};
    case FixedWord::aba: return {0, 1, 0};
    case FixedWord::abb: return {0, 1, 1};
  }
  return {};
}

std::optional<FixedWord> parse_fixed_word(const std::string& s) {
  if (s == "aaa") return FixedWord::aaa;
  if (s == "aab") return FixedWord::aab;
  if (s == "aba") return FixedWord::aba;
  if (s == "abb") return FixedWord::abb;
  return std::nullopt;
}

std::optional<Coloring> in_class_oracle(const Multigraph& g, const Word& w, const OracleLimits& lim) {
  need_degree2(g);
  for (int l : w)
    if (l < 0 || l > 1) throw InvalidInput("word letters must be a or b");
  const int t = g.vertices();
  if (t <= 62 && (std::uint64_t(1) << t) <= lim.coloring_cap) {
    const std::uint64_t count = std::uint64_t(1) << t;
    const std::uint64_t full = (std::uint64_t(1) << t) - 1;
    auto hit = first_index(count, lim.threads, [&](std::uint64_t idx) {
      std::uint64_t s = full;
      for (int l : w) {
        std::uint64_t r = 0;
        while (s) {
          int v = std::countr_zero(s);
          s &= s - 1;
          int o = int((idx >> (t - 1 - v)) & 1);
          r |= std::uint64_t(1) << g.out[v][o ^ l];
        }
        s = r;
      }
      return std::popcount(s) == 1;
    });
    if (!hit) return std::nullopt;
    return coloring_at(g, *hit);
  }
  for (int q = 0; q < t; ++q)
    if (auto c = color_for_word(g, w, q)) return c;
  return std::nullopt;
}

// G_aaa: q carries a loop and every vertex is within distance 3 of q.
std::optional<Coloring> witness_aaa(const Multigraph& g) {
  need_degree2(g);
  const int t = g.vertices();
  for (int q = 0; q < t; ++q) {
    if (!has_edge(g, q, q)) continue;
    auto dist = distance_layers(g, q);
    bool ok = true;
    for (int x : dist) ok = ok && x >= 0 && x <= 3;
    if (!ok) continue;
    std::vector<int> o(t, 0);
    for (int v = 0; v < t; ++v) {
      int want = v == q ? q : -1;
      for (int s = 0; s < 2; ++s) {
        int u = g.out[v][s];
        if ((v == q && u == want) || (v != q && dist[u] == dist[v] - 1)) {
          o[v] = s;
          break;
        }
      }
    }
    return from_orient(o);
  }
  return std::nullopt;
}

std::optional<Coloring> witness_aab(const Multigraph& g) {
  need_degree2(g);
  if (witness_aaa(g)) return std::nullopt;
  const int t = g.vertices();
  for (int q = 0; q < t; ++q) {
    // Z: vertices whose b-edge can enter q while the a-edge stays in Z
    std::vector<char> in(t, 0);
    for (int v = 0; v < t; ++v) in[v] = has_edge(g, v, q);
    for (bool changed = true; changed;) {
      changed = false;
      for (int v = 0; v < t; ++v) {
        if (!in[v]) continue;
        bool ok = (g.out[v][0] == q && in[g.out[v][1]]) || (g.out[v][1] == q && in[g.out[v][0]]);
        if (!ok) in[v] = 0, changed = true;
      }
    }
    bool any = false;
    for (char c : in) any = any || c;
    if (!any) continue;
    std::vector<char> near(t, 0);
    for (int v = 0; v < t; ++v) near[v] = in[v] || in[g.out[v][0]] || in[g.out[v][1]];
    bool ok = true;
    for (int v = 0; v < t && ok; ++v) ok = near[g.out[v][0]] || near[g.out[v][1]];
    if (!ok) continue;
    std::vector<int> o(t, 0);
    for (int v = 0; v < t; ++v) {
      const auto& e = g.out[v];
      if (in[v]) o[v] = (e[1] == q && in[e[0]]) ? 0 : 1;
      else if (near[v]) o[v] = in[e[0]] ? 0 : 1;
      else o[v] = near[e[0]] ? 0 : 1;
    }
    return from_orient(o);
  }
  return std::nullopt;
}

std::optional<Coloring> witness_aba(const Multigraph& g) {
  need_degree2(g);
  if (witness_aaa(g)) return std::nullopt;
  const int t = g.vertices();
  for (int q = 0; q < t; ++q) {
    if (has_edge(g, q, q)) continue;
    std::vector<char> pre(t, 0);
    for (int v = 0; v < t; ++v) pre[v] = has_edge(g, v, q);
    // orientations allowed at v: vertices next to q must send a into q
    auto allowed = [&](int v, int o) { return !pre[v] || g.out[v][o] == q; };
    std::vector<char> in(t, 1);
    auto fits = [&](int v, int o) { return allowed(v, o) && in[g.out[v][o]] && pre[g.out[v][o ^ 1]]; };
    for (bool changed = true; changed;) {
      changed = false;
      for (int v = 0; v < t; ++v)
        if (in[v] && !fits(v, 0) && !fits(v, 1)) in[v] = 0, changed = true;
    }
    if (!in[q]) continue;
    std::vector<int> o(t, -1);
    for (int v = 0; v < t; ++v) {
      for (int x = 0; x < 2 && o[v] < 0; ++x) {
        if (in[v] ? fits(v, x) : (allowed(v, x) && in[g.out[v][x]])) o[v] = x;
      }
    }
    bool ok = true;
    for (int x : o) ok = ok && x >= 0;
    if (ok) return from_orient(o);
  }
  return std::nullopt;
}

std::optional<Coloring> witness_abb(const Multigraph& g) {
  need_degree2(g);
  if (witness_aaa(g) || witness_aba(g)) return std::nullopt;
  const int t = g.vertices();
  for (int q = 0; q < t; ++q) {
    auto dist = distance_layers(g, q);
    bool ok = true;
    for (int v = 0; v < t && ok; ++v) ok = dist[g.out[v][0]] == 2 || dist[g.out[v][1]] == 2;
    if (!ok) continue;
    std::vector<int> o(t, 0);
    for (int v = 0; v < t; ++v) o[v] = dist[g.out[v][0]] == 2 ? 0 : 1;
    return from_orient(o);
  }
  return std::nullopt;
}

bool decide_aaa(const Multigraph& g) { return witness_aaa(g).has_value(); }
bool decide_aab(const Multigraph& g) { return witness_aab(g).has_value(); }
bool decide_aba(const Multigraph& g) { return witness_aba(g).has_value(); }
bool decide_abb(const Multigraph& g) { return witness_abb(g).has_value(); }

Coloring recolor_abb_to_aba(const Multigraph& g, const Coloring& c) {
  need_degree2(g);
  check_coloring(g, c);
  Dfa a = apply_coloring(g, c);
  auto full = StateSet::full(g.vertices());
  auto img = apply_word(a, full, {0, 1, 1});
  if (img.size() != 1) throw InvalidInput("precondition failed: coloring does not synchronize by abb");
  int q = img.members()[0];
  if (!apply_letter(a, full, 0).has(q)) throw InvalidInput("precondition failed: target is not in the image of a");
  if (decide_aaa(g)) throw InvalidInput("precondition failed: graph admits an aaa coloring");
  Coloring out = c;
  for (int v = 0; v < g.vertices(); ++v)
    if (a.next(v, 1) == q) std::swap(out.letter[v][0], out.letter[v][1]);
  return out;
}

bool srcp_k3_union(const Multigraph& g) {
  need_degree2(g);
  if (g.vertices() == 1) return true;
  return decide_aaa(g) || decide_aab(g) || decide_aba(g) || decide_abb(g);
}

bool srcp_k3_decide(const Multigraph& g) {
  need_degree2(g);
  if (!is_admissible(g)) throw InvalidInput("srcp is defined on admissible graphs only");
  return srcp_k3_union(g);
}

}  // namespace rs
