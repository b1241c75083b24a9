#include "sync.hpp"

#include <bit>
#include <deque>
#include <unordered_map>

#include "error.hpp"

namespace rs {

std::int64_t pin_bound(std::int64_t t) { return (t * t * t - t) / 6; }

bool is_synchronizing(const Dfa& a) {
  const int t = a.states(), k = a.letters();
  if (t == 1) return true;
  auto idx = [t](int p, int q) -> std::size_t {
    if (p > q) std::swap(p, q);
    return std::size_t(p) * t + q;
  };
  const std::size_t n = std::size_t(t) * t;
  std::vector<char> good(n, 0);
  std::vector<std::vector<std::uint32_t>> rev(n);
  std::deque<std::size_t> queue;
  for (int p = 0; p < t; ++p)
    for (int q = p + 1; q < t; ++q) {
      std::size_t me = idx(p, q);
      for (int l = 0; l < k; ++l) {
        int p2 = a.next(p, l), q2 = a.next(q, l);
        if (p2 == q2) {
          if (!good[me]) {
            good[me] = 1;
            queue.push_back(me);
          }
        } else {
          rev[idx(p2, q2)].push_back(std::uint32_t(me));
        }
      }
    }
  while (!queue.empty()) {
    auto cur = queue.front();
    queue.pop_front();
    for (auto pre : rev[cur])
      if (!good[pre]) {
        good[pre] = 1;
        queue.push_back(pre);
      }
  }
  for (int p = 0; p < t; ++p)
    for (int q = p + 1; q < t; ++q)
      if (!good[idx(p, q)]) return false;
  return true;
}

namespace {

template <class Hash, class Key, class Step, class IsSingle>
std::optional<Word> bfs(const Key& start, int letters, Step step, IsSingle single, const BfsLimits& lim) {
  if (single(start)) return Word{};
  struct Node {
    Key set;
    int parent;
    int letter;
    int depth;
  };
  std::vector<Node> nodes{{start, -1, -1, 0}};
  std::unordered_map<Key, int, Hash> seen{{start, 0}};
  for (std::size_t head = 0; head < nodes.size(); ++head) {
    int depth = nodes[head].depth;
    if (lim.max_length && depth >= *lim.max_length) break;
    for (int l = 0; l < letters; ++l) {
      Key img = step(nodes[head].set, l);
      if (seen.count(img)) continue;
      seen.emplace(img, int(nodes.size()));
      nodes.push_back({img, int(head), l, depth + 1});
      if (single(img)) {
        Word w;
        for (int cur = int(nodes.size()) - 1; nodes[cur].parent >= 0; cur = nodes[cur].parent)
          w.push_back(nodes[cur].letter);
        return Word(w.rbegin(), w.rend());
      }
      if (nodes.size() > lim.max_subsets)
        throw SizeLimit("subset search exceeded " + std::to_string(lim.max_subsets) + " subsets");
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<Word> shortest_reset_word(const Dfa& a, const BfsLimits& lim) {
  const int t = a.states(), k = a.letters();
  if (t <= 64) {
    auto step = [&](std::uint64_t s, int l) {
      std::uint64_t r = 0;
      while (s) {
        int st = std::countr_zero(s);
        s &= s - 1;
        r |= std::uint64_t(1) << a.next(st, l);
      }
      return r;
    };
    std::uint64_t full = t == 64 ? ~std::uint64_t(0) : (std::uint64_t(1) << t) - 1;
    return bfs<std::hash<std::uint64_t>>(full, k, step, [](std::uint64_t s) { return std::popcount(s) == 1; }, lim);
  }
  return bfs<StateSetHash>(
      StateSet::full(t), k, [&](const StateSet& s, int l) { return apply_letter(a, s, l); },
      [](const StateSet& s) { return s.size() == 1; }, lim);
}

bool syn_decide(const Dfa& a, std::int64_t k, const BfsLimits& lim) {
  if (k < 0) return false;
  if (k >= pin_bound(a.states())) return is_synchronizing(a);
  BfsLimits capped = lim;
  capped.max_length = int(k);
  return shortest_reset_word(a, capped).has_value();
}

}  // namespace rs
