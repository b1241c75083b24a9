#include "satred.hpp"

#include <cstdlib>
#include <sstream>

#include "error.hpp"
#include "search.hpp"
#include "textio.hpp"

namespace rs {

bool satisfies(const Cnf3& f, const Assignment& x) {
  for (const auto& cl : f.clauses) {
    bool ok = false;
    for (int l : cl) ok = ok || (x[std::abs(l) - 1] == (l > 0));
    if (!ok) return false;
  }
  return true;
}

Cnf3 augment_tautologies(const Cnf3& f) {
  Cnf3 out = f;
  std::vector<char> pos(f.n + 1, 0);
  for (const auto& cl : f.clauses)
    for (int l : cl)
      if (l > 0) pos[l] = 1;
  for (int i = 1; i <= f.n; ++i)
    if (!pos[i]) out.clauses.push_back({i, -i, -i});
  return out;
}

std::optional<Assignment> sat_oracle(const Cnf3& f) {
  if (f.n > 25) throw SizeLimit("truth-table check is limited to 25 variables");
  Assignment x(f.n);
  for (std::uint64_t bits = 0; bits < (std::uint64_t(1) << f.n); ++bits) {
    for (int i = 0; i < f.n; ++i) x[i] = (bits >> (f.n - 1 - i)) & 1;
    if (satisfies(f, x)) return x;
  }
  return std::nullopt;
}

ReductionGraph build_reduction(const Cnf3& f) {
  if (f.clauses.empty()) throw InvalidInput("formula needs at least one clause");
  std::vector<char> pos(f.n + 1, 0);
  for (const auto& cl : f.clauses)
    for (int l : cl) {
      if (l == 0 || std::abs(l) > f.n) throw InvalidInput("literal out of range");
      if (l > 0) pos[l] = 1;
    }
  for (int i = 1; i <= f.n; ++i)
    if (!pos[i]) throw InvalidInput("variable x" + std::to_string(i) + " never occurs positively; run augment_tautologies first");

  ReductionGraph r;
  r.n = f.n;
  r.m = int(f.clauses.size());
  const int t = 5 * r.m + 3 * r.n + 8;
  std::vector<std::vector<int>> adj(t);
  for (int i = 0; i < 8; ++i) r.names.push_back("D" + std::to_string(i));
  for (int i = 1; i <= r.n; ++i) {
    r.names.push_back("x" + std::to_string(i));
    r.names.push_back("~x" + std::to_string(i));
    r.names.push_back("W" + std::to_string(i));
  }
  for (int j = 1; j <= r.m; ++j)
    for (int k = 0; k < 5; ++k) r.names.push_back("C" + std::to_string(j) + "," + std::to_string(k));

  const int D0 = 0, D1 = 1, D2 = 2, D3 = 3, D4 = 4, D5 = 5, D6 = 6, D7 = 7;
  adj[D0] = {D1, D1};
  adj[D1] = {D5, D5};
  adj[D2] = {D3, D7};
  adj[D3] = {D4, D6};
  adj[D4] = {D3, D2};
  adj[D5] = {D3, D6};
  adj[D6] = {D7, r.c(1, 0)};
  adj[D7] = {D4, D2};
  for (int i = 1; i <= r.n; ++i) {
    adj[r.lit(i)] = {r.lit(-i), D4};
    adj[r.lit(-i)] = {r.w(i), D4};
    adj[r.w(i)] = {r.lit(-i), D4};
  }
  for (int j = 1; j <= r.m; ++j) {
    const auto& cl = f.clauses[j - 1];
    adj[r.c(j, 0)] = {r.c(j, 1), r.c(j, 2)};
    adj[r.c(j, 1)] = {r.lit(cl[0]), r.lit(cl[1])};
    adj[r.c(j, 2)] = {r.lit(cl[2]), r.c(j, 3)};
    adj[r.c(j, 3)] = {r.c(j, 4), D4};
    adj[r.c(j, 4)] = {D3, j < r.m ? r.c(j + 1, 0) : D0};
  }
  r.graph = Multigraph(std::move(adj));
  return r;
}

Coloring extract_coloring(const ReductionGraph& g, const Cnf3& f, const Assignment& x) {
  if (int(x.size()) != f.n) throw InvalidInput("assignment has the wrong length");
  if (!satisfies(f, x)) throw InvalidInput("assignment does not satisfy the formula");
  const int t = g.graph.vertices();
  std::vector<int> a(t, 0);  // slot carrying letter a
  for (int i = 1; i <= f.n; ++i) {
    if (x[i - 1]) {
      a[g.lit(i)] = 0;   // x -a-> ~x
      a[g.lit(-i)] = 1;  // ~x -a-> D4
      a[g.w(i)] = 0;
    } else {
      a[g.lit(-i)] = 0;  // ~x -a-> W
      a[g.w(i)] = 1;     // W -a-> D4
      a[g.lit(i)] = 1;
    }
  }
  for (int j = 1; j <= g.m; ++j) {
    const auto& cl = f.clauses[j - 1];
    int last = 2;
    while (x[std::abs(cl[last]) - 1] != (cl[last] > 0)) --last;
    if (last < 2) {
      a[g.c(j, 0)] = 0;
      a[g.c(j, 1)] = last == 0 ? 1 : 0;  // b goes to the satisfied literal
      a[g.c(j, 2)] = 0;
    } else {
      a[g.c(j, 0)] = 1;
      a[g.c(j, 2)] = 1;
    }
    a[g.c(j, 3)] = 1;
    a[g.c(j, 4)] = 0;
  }
  Coloring c;
  for (int v = 0; v < t; ++v) c.letter.push_back(a[v] ? std::vector<int>{1, 0} : std::vector<int>{0, 1});
  return c;
}

ReductionReport verify_reduction(const Cnf3& f, const ReductionLimits& lim) {
  ReductionReport rep;
  Cnf3 full = augment_tautologies(f);
  auto rg = build_reduction(full);
  const auto& g = rg.graph;
  rep.vertices = g.vertices();
  if (rep.vertices > lim.max_vertices)
    throw SizeLimit("reduction graph has " + std::to_string(rep.vertices) + " vertices, limit is " +
                    std::to_string(lim.max_vertices));
  rep.size_ok = rep.vertices == 5 * int(full.clauses.size()) + 3 * full.n + 8;
  auto deg = out_degree_uniform(g);
  rep.degree_ok = deg && *deg == 2;
  rep.strongly_connected = is_strongly_connected(g);

  auto model = sat_oracle(f);
  rep.satisfiable = model.has_value();
  rep.synchronizable = srcp_oracle(g, 4, lim.oracle).has_value();
  rep.equivalent = rep.satisfiable == rep.synchronizable;

  rep.words_ok = true;
  for (const auto& w : canonical_words(4, 2)) {
    bool hit = false;
    for (int q = 0; q < g.vertices() && !hit; ++q) hit = color_for_word(g, w, q).has_value();
    if (hit) {
      rep.synchronizing_words.push_back(render_word(w, 2));
      if (w != Word{0, 1, 0, 0}) rep.words_ok = false;
    }
  }
  if (model) {
    auto c = extract_coloring(rg, full, *model);
    auto img = apply_word(apply_coloring(g, c), StateSet::full(g.vertices()), {0, 1, 0, 0});
    rep.witness_ok = img.size() == 1 && img.has(rg.d(4));
  }
  return rep;
}

std::string cnf_to_dimacs(const Cnf3& f) {
  std::ostringstream out;
  out << "p cnf " << f.n << ' ' << f.clauses.size() << '\n';
  for (const auto& cl : f.clauses) out << cl[0] << ' ' << cl[1] << ' ' << cl[2] << " 0\n";
  return out.str();
}

Cnf3 cnf_from_dimacs(const std::string& text) {
  Cnf3 f;
  bool header = false;
  long long m = 0;
  std::vector<int> pending;
  for (auto& toks : content_lines(text)) {
    if (toks[0] == "c" || toks[0][0] == '%') continue;
    if (toks[0] == "p") {
      if (header || toks.size() != 4 || toks[1] != "cnf") throw InvalidInput("expected header 'p cnf <n> <m>'");
      f.n = int(to_int(toks[2], "n"));
      m = to_int(toks[3], "m");
      if (f.n < 0 || m < 0) throw InvalidInput("negative size in header");
      header = true;
      continue;
    }
    if (!header) throw InvalidInput("clause before 'p cnf' header");
    for (const auto& tok : toks) {
      int l = int(to_int(tok, "literal"));
      if (l == 0) {
        if (pending.size() != 3) throw InvalidInput("every clause needs exactly 3 literals");
        f.clauses.push_back({pending[0], pending[1], pending[2]});
        pending.clear();
      } else {
        if (std::abs(l) > f.n) throw InvalidInput("literal " + std::to_string(l) + " exceeds n");
        pending.push_back(l);
      }
    }
  }
  if (!header) throw InvalidInput("missing 'p cnf' header");
  if (!pending.empty()) throw InvalidInput("last clause is not terminated by 0");
  if (std::int64_t(f.clauses.size()) != m) throw InvalidInput("clause count does not match header");
  return f;
}

}  // namespace rs
