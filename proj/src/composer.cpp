#include "composer.hpp"

#include <functional>
#include <sstream>

#include "error.hpp"
#include "textio.hpp"

namespace rs {

Preprocessed preprocess(const Batch& raw) {
  Preprocessed out;
  out.batch.t = raw.t;
  const std::int64_t z = pin_bound(raw.t);
  for (std::size_t i = 0; i < raw.items.size(); ++i) {
    const auto& it = raw.items[i];
    if (it.dfa.states() != raw.t) throw InvalidInput("batch item " + std::to_string(i + 1) + " has the wrong state count");
    if (it.d < 0) throw InvalidInput("batch item " + std::to_string(i + 1) + " has a negative length");
    if (it.d >= z) {
      if (is_synchronizing(it.dfa)) {
        out.early = true;
        return out;
      }
      continue;
    }
    Dfa a(raw.t, it.dfa.letters() + 1);
    for (int s = 0; s < raw.t; ++s) {
      a.set(s, 0, s);
      for (int l = 0; l < it.dfa.letters(); ++l) a.set(s, l + 1, it.dfa.next(s, l));
    }
    out.batch.items.push_back({a, it.d});
    out.origin.push_back(int(i));
  }
  if (out.batch.items.empty()) out.early = false;
  return out;
}

std::optional<bool> big_m_branch(const Batch& pre, const BfsLimits& lim) {
  const std::size_t m = pre.items.size();
  if (pre.t < 63 && m < (std::size_t(1) << pre.t)) return std::nullopt;
  for (const auto& it : pre.items)
    if (syn_decide(it.dfa, it.d, lim)) return true;
  return false;
}

int pattern_width(int m) {
  int q = 0;
  while ((2LL << q) <= m + 1LL) ++q;
  return q;
}

std::vector<int> pattern_subset(int i, int m) {
  if (m < 1 || i < 1 || i > m) throw InvalidInput("pattern index out of range");
  std::vector<int> out;
  for (int k = 0; k <= pattern_width(m); ++k)
    if ((i >> k) & 1) out.push_back(k);
  return out;
}

std::pair<std::vector<int>, std::vector<int>> pattern_functions(int i, int m) {
  auto on = pattern_subset(i, m);
  const int r = pattern_width(m) + 1;
  std::vector<int> off;
  for (int k = 0; k < r; ++k)
    if (!((i >> k) & 1)) off.push_back(k);
  std::vector<int> pt(r), pf(r);
  for (int k = 0; k < r; ++k) {
    pt[k] = on[std::size_t(k) % on.size()];
    pf[k] = off[std::size_t(k) % off.size()];
  }
  return {pt, pf};
}

Composed compose(const Batch& pre) {
  const int t = pre.t, m = int(pre.items.size());
  if (m < 1) throw InvalidInput("compose needs a nonempty batch");
  if (t < 2) throw InvalidInput("compose needs t >= 2");
  if (t < 31 && m >= (1 << t)) throw InvalidInput("compose needs m < 2^t");
  const std::int64_t z64 = pin_bound(t);
  if (z64 > 100000) throw SizeLimit("pin bound too large to materialize the guard table");
  Composed c;
  c.t = t;
  c.m = m;
  c.z = int(z64);
  c.q = pattern_width(m);
  c.d_prime = z64 + 1;
  const int z = c.z, q = c.q;
  for (const auto& it : pre.items) {
    if (it.dfa.states() != t) throw InvalidInput("batch item has the wrong state count");
    if (it.d >= z64) throw InvalidInput("batch item length must be below the pin bound");
    for (int s = 0; s < t; ++s)
      if (it.dfa.next(s, 0) != s) throw InvalidInput("letter 0 of every item must be the identity");
  }

  // letters
  c.letter_names.push_back("kappa");
  int next = 1;
  for (int i = 1; i <= m; ++i) {
    c.item_letter_base.push_back(next);
    for (int j = 1; j < pre.items[i - 1].dfa.letters(); ++j, ++next)
      c.letter_names.push_back("x" + std::to_string(i) + "," + std::to_string(j));
  }
  c.letter_alpha0 = next;
  for (int i = 1; i <= m; ++i, ++next) c.letter_names.push_back("alpha" + std::to_string(i));
  c.letter_omega0 = next;
  for (int s = 1; s <= t; ++s, ++next) c.letter_names.push_back("omega" + std::to_string(s));
  const int letters = next;

  // states
  for (int s = 1; s <= t; ++s) c.state_names.push_back(std::to_string(s));
  c.state_names.push_back("D");
  for (int h = 0; h <= z; ++h)
    for (int k = 0; k <= q; ++k)
      for (char f : {'T', 'F'})
        c.state_names.push_back("(" + std::to_string(h) + "," + std::to_string(k) + "," + f + ")");
  const int states = int(c.state_names.size());

  Dfa a(states, letters);
  const int D = c.dead();
  for (int l = 0; l < letters; ++l) a.set(D, l, D);

  // base states
  for (int s = 0; s < t; ++s) {
    a.set(s, c.kappa(), s);
    for (int i = 1; i <= m; ++i)
      for (int j = 1; j < pre.items[i - 1].dfa.letters(); ++j) a.set(s, c.x(i, j), pre.items[i - 1].dfa.next(s, j));
    for (int i = 1; i <= m; ++i) a.set(s, c.alpha(i), s);
    for (int sb = 1; sb <= t; ++sb) a.set(s, c.omega(sb), sb == s + 1 ? D : s);
  }

  // guard table
  for (int i = 1; i <= m; ++i) {
    auto [pt, pf] = pattern_functions(i, m);
    const int di = int(pre.items[i - 1].d);
    for (int h = 0; h <= z; ++h)
      for (int k = 0; k <= q; ++k) {
        const bool on = (i >> k) & 1;
        a.set(c.cell(h, k, false), c.alpha(i), c.cell(1, pt[k], false));
        a.set(c.cell(h, k, true), c.alpha(i), c.cell(1, pf[k], true));
        int toT, toF;
        if (h >= 1 && h <= di) {
          toT = on ? c.cell(h + 1, k, false) : c.cell(0, k, false);
          toF = !on ? c.cell(h + 1, k, true) : c.cell(0, k, false);
        } else {
          toT = c.cell(0, k, false);
          toF = c.cell(0, k, true);
        }
        for (int j = 1; j < pre.items[i - 1].dfa.letters(); ++j) {
          a.set(c.cell(h, k, false), c.x(i, j), toT);
          a.set(c.cell(h, k, true), c.x(i, j), toF);
        }
      }
  }
  for (int h = 0; h <= z; ++h)
    for (int k = 0; k <= q; ++k)
      for (bool f : {false, true}) {
        int row = (h >= 1 && h <= z - 1) ? h + 1 : 0;
        a.set(c.cell(h, k, f), c.kappa(), c.cell(row, k, f));
        for (int s = 1; s <= t; ++s) a.set(c.cell(h, k, f), c.omega(s), h == z ? D : c.cell(0, k, f));
      }
  c.dfa = std::move(a);
  return c;
}

namespace {

std::uint64_t power_capped(std::uint64_t base, std::int64_t exp, std::uint64_t cap) {
  std::uint64_t r = 1;
  for (std::int64_t e = 0; e < exp; ++e) {
    if (base && r > cap / base) return cap + 1;
    r *= base;
  }
  return r;
}

// which item owns letter l, or 0 for kappa / non-item letters
int owner(const Composed& c, int l) {
  if (l == 0 || l >= c.letter_alpha0) return 0;
  int i = 1;
  while (i < c.m && l >= c.item_letter_base[i]) ++i;
  return i;
}

}  // namespace

ComposeReport verify_c1_c2_c3(const Composed& c, const Batch& pre, const VerifyLimits& lim) {
  ComposeReport rep;
  const Dfa& a = c.dfa;
  const int L = int(c.d_prime);
  const std::uint64_t total = power_capped(std::uint64_t(a.letters()), L, lim.word_cap);
  if (total > lim.word_cap)
    throw SizeLimit("exhaustive word check needs " + std::to_string(a.letters()) + "^" + std::to_string(L) +
                    " words, above the cap of " + std::to_string(lim.word_cap));

  // C1: nothing of length <= z resets A'
  BfsLimits capped = lim.bfs;
  capped.max_length = c.z;
  rep.c1 = !shortest_reset_word(a, capped).has_value();

  // C2: every reset word of length z+1 has the prescribed form
  auto item_resets = [&](int i, const Word& y) {
    return apply_word(pre.items[i - 1].dfa, StateSet::full(c.t), y).size() == 1;
  };
  auto has_form = [&](const Word& w) {
    if (w[0] < c.letter_alpha0 || w[0] >= c.letter_omega0) return false;
    const int i = w[0] - c.letter_alpha0 + 1;
    const int di = int(pre.items[i - 1].d);
    Word y;
    for (int p = 1; p <= di; ++p) {
      int l = w[p];
      if (l != 0 && owner(c, l) != i) return false;
      y.push_back(l == 0 ? 0 : l - c.item_letter_base[i - 1] + 1);
    }
    for (int p = di + 1; p < L - 1; ++p)
      if (w[p] != c.kappa()) return false;
    if (w[L - 1] < c.letter_omega0) return false;
    return item_resets(i, y);
  };
  rep.c2 = true;
  std::vector<StateSet> stack{StateSet::full(a.states())};
  Word w;
  std::function<void()> rec = [&] {
    if (int(w.size()) == L) {
      ++rep.words_checked;
      if (stack.back().size() == 1) {
        ++rep.reset_words_found;
        if (!has_form(w)) rep.c2 = false;
      }
      return;
    }
    for (int l = 0; l < a.letters(); ++l) {
      w.push_back(l);
      stack.push_back(apply_letter(a, stack.back(), l));
      rec();
      stack.pop_back();
      w.pop_back();
    }
  };
  rec();

  // C3: assembled words built from item reset words reset A'
  rep.c3 = true;
  for (int i = 1; i <= c.m; ++i) {
    const Dfa& ai = pre.items[i - 1].dfa;
    const int di = int(pre.items[i - 1].d);
    if (power_capped(std::uint64_t(ai.letters()), di, lim.word_cap) > lim.word_cap)
      throw SizeLimit("item word enumeration above the cap");
    Word y(di, 0);
    for (;;) {
      auto img = apply_word(ai, StateSet::full(c.t), y);
      if (img.size() == 1) {
        int s = img.members()[0] + 1;
        Word full{c.alpha(i)};
        for (int l : y) full.push_back(l == 0 ? c.kappa() : c.x(i, l));
        for (int p = 0; p < c.z - 1 - di; ++p) full.push_back(c.kappa());
        full.push_back(c.omega(s));
        ++rep.c3_words;
        if (apply_word(a, StateSet::full(a.states()), full).size() != 1) rep.c3 = false;
      }
      int p = di - 1;
      while (p >= 0 && y[p] == ai.letters() - 1) y[p--] = 0;
      if (p < 0) break;
      ++y[p];
    }
  }

  rep.composed_yes = syn_decide(a, c.d_prime, lim.bfs);
  rep.any_item_yes = false;
  for (const auto& it : pre.items) rep.any_item_yes = rep.any_item_yes || syn_decide(it.dfa, it.d, lim.bfs);
  rep.equivalence = rep.composed_yes == rep.any_item_yes;
  return rep;
}

std::string batch_to_text(const Batch& b) {
  std::ostringstream out;
  out << "batch " << b.items.size() << ' ' << b.t << '\n';
  for (const auto& it : b.items) {
    out << "item " << it.d << ' ' << it.dfa.letters() << '\n';
    auto body = dfa_to_text(it.dfa);
    out << body.substr(body.find('\n') + 1);
  }
  return out.str();
}

Batch batch_from_text(const std::string& text) {
  auto lines = content_lines(text);
  if (lines.empty() || lines[0].size() != 3 || lines[0][0] != "batch")
    throw InvalidInput("expected header 'batch <m> <t>'");
  long long m = to_int(lines[0][1], "m"), t = to_int(lines[0][2], "t");
  if (m < 0 || t < 1) throw InvalidInput("batch needs m >= 0 and t >= 1");
  if (t > 100000 || m > 1000000) throw SizeLimit("batch dimensions too large");
  Batch b;
  b.t = int(t);
  std::size_t pos = 1;
  for (long long i = 0; i < m; ++i) {
    if (pos >= lines.size() || lines[pos].size() != 3 || lines[pos][0] != "item")
      throw InvalidInput("expected 'item <d_i> <alphabet_size>' for item " + std::to_string(i + 1));
    long long d = to_int(lines[pos][1], "d_i"), k = to_int(lines[pos][2], "alphabet_size");
    if (k < 1) throw InvalidInput("item alphabet must be nonempty");
    ++pos;
    if (pos + std::size_t(t) > lines.size()) throw InvalidInput("item " + std::to_string(i + 1) + " is truncated");
    std::vector<int> delta;
    for (long long s = 0; s < t; ++s, ++pos) {
      if (lines[pos].size() != std::size_t(k)) throw InvalidInput("item row has the wrong width");
      for (const auto& tok : lines[pos]) delta.push_back(int(to_int(tok, "transition")));
    }
    b.items.push_back({Dfa(int(t), int(k), std::move(delta)), d});
  }
  if (pos != lines.size()) throw InvalidInput("trailing content after batch");
  return b;
}

}  // namespace rs
