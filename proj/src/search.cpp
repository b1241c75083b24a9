#include "search.hpp"

#include <atomic>
#include <thread>

namespace rs {

std::optional<std::uint64_t> first_index(std::uint64_t count, int threads,
                                         const std::function<bool(std::uint64_t)>& pred) {
  if (threads <= 1 || count < 4096) {
    for (std::uint64_t i = 0; i < count; ++i)
      if (pred(i)) return i;
    return std::nullopt;
  }
  constexpr std::uint64_t chunk = 1024;
  std::atomic<std::uint64_t> next{0}, best{~std::uint64_t(0)};
  auto worker = [&] {
    for (;;) {
      std::uint64_t lo = next.fetch_add(chunk);
      if (lo >= count || lo >= best.load()) return;
      std::uint64_t hi = std::min(count, lo + chunk);
      for (std::uint64_t i = lo; i < hi; ++i) {
        if (i >= best.load()) return;
        if (pred(i)) {
          std::uint64_t cur = best.load();
          while (i < cur && !best.compare_exchange_weak(cur, i)) {
          }
          return;
        }
      }
    }
  };
  std::vector<std::thread> pool;
  for (int k = 0; k < threads; ++k) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
  if (best.load() == ~std::uint64_t(0)) return std::nullopt;
  return best.load();
}

namespace {

struct WordSearch {
  const Multigraph& g;
  const Word& w;
  int q, k, d;
  std::vector<std::vector<char>> reach;
  std::vector<std::vector<int>> slot;  // slot[v][letter], -1 if open
  std::vector<std::vector<char>> used;

  WordSearch(const Multigraph& g_, const Word& w_, int q_)
      : g(g_), w(w_), q(q_), k(int(w_.size())), d(int(g_.out[0].size())) {
    reach = exact_predecessors(g, q, k);
    slot.assign(g.vertices(), std::vector<int>(d, -1));
    used.assign(g.vertices(), std::vector<char>(d, 0));
  }

  bool walk(int start, int v, int pos) {
    if (pos == k) return v == q && begin(start + 1);
    if (!reach[k - pos][v]) return false;
    int l = w[pos];
    if (slot[v][l] >= 0) return walk(start, g.out[v][slot[v][l]], pos + 1);
    const auto& row = g.out[v];
    for (int s = 0; s < d; ++s) {
      if (used[v][s] || !reach[k - pos - 1][row[s]]) continue;
      bool dup = false;
      for (int p = 0; p < s && !dup; ++p) dup = !used[v][p] && row[p] == row[s];
      if (dup) continue;
      slot[v][l] = s;
      used[v][s] = 1;
      if (walk(start, row[s], pos + 1)) return true;
      slot[v][l] = -1;
      used[v][s] = 0;
    }
    return false;
  }

  bool begin(int start) {
    if (start == g.vertices()) return true;
    return walk(start, start, 0);
  }

  Coloring coloring() const {
    Coloring c;
    for (int v = 0; v < g.vertices(); ++v) {
      std::vector<int> row(d, -1);
      std::vector<char> taken = used[v];
      for (int l = 0; l < d; ++l)
        if (slot[v][l] >= 0) row[slot[v][l]] = l;
      for (int l = 0; l < d; ++l) {
        if (slot[v][l] >= 0) continue;
        for (int s = 0; s < d; ++s)
          if (!taken[s]) {
            taken[s] = 1;
            row[s] = l;
            break;
          }
      }
      c.letter.push_back(row);
    }
    return c;
  }
};

}  // namespace

std::optional<Coloring> color_for_word(const Multigraph& g, const Word& w, int q) {
  if (g.out.empty() || g.out[0].empty()) return std::nullopt;
  WordSearch s(g, w, q);
  for (int v = 0; v < g.vertices(); ++v)
    if (!s.reach[w.size()][v]) return std::nullopt;
  if (!s.begin(0)) return std::nullopt;
  return s.coloring();
}

std::vector<Word> canonical_words(int k, int alphabet) {
  std::vector<Word> out;
  if (k == 0) return {Word{}};
  if (alphabet < 1) return out;
  Word cur;
  std::function<void(int)> rec = [&](int top) {
    if (int(cur.size()) == k) {
      out.push_back(cur);
      return;
    }
    for (int l = 0; l <= std::min(top + 1, alphabet - 1); ++l) {
      cur.push_back(l);
      rec(std::max(top, l));
      cur.pop_back();
    }
  };
  cur.push_back(0);
  rec(0);
  return out;
}

}  // namespace rs
