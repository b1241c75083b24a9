#include "graph.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <sstream>

#include "error.hpp"
#include "textio.hpp"

namespace rs {

Multigraph::Multigraph(std::vector<std::vector<int>> adj) : out(std::move(adj)) {
  const int t = vertices();
  for (const auto& row : out)
    for (int v : row)
      if (v < 0 || v >= t) throw InvalidInput("edge target " + std::to_string(v) + " out of range");
}

std::optional<int> out_degree_uniform(const Multigraph& g) {
  if (g.out.empty()) return std::nullopt;
  int d = int(g.out[0].size());
  for (const auto& row : g.out)
    if (int(row.size()) != d) return std::nullopt;
  return d;
}

namespace {

// Tarjan, iterative; returns component id per vertex.
std::vector<int> scc(const Multigraph& g, int& count) {
  const int t = g.vertices();
  std::vector<int> index(t, -1), low(t, 0), comp(t, -1), stack;
  std::vector<char> on(t, 0);
  std::vector<std::pair<int, std::size_t>> call;
  int next = 0;
  count = 0;
  for (int root = 0; root < t; ++root) {
    if (index[root] >= 0) continue;
    call.push_back({root, 0});
    index[root] = low[root] = next++;
    stack.push_back(root);
    on[root] = 1;
    while (!call.empty()) {
      auto& [v, i] = call.back();
      if (i < g.out[v].size()) {
        int w = g.out[v][i++];
        if (index[w] < 0) {
          index[w] = low[w] = next++;
          stack.push_back(w);
          on[w] = 1;
          call.push_back({w, 0});
        } else if (on[w]) {
          low[v] = std::min(low[v], index[w]);
        }
        continue;
      }
      int done = v;
      call.pop_back();
      if (!call.empty()) low[call.back().first] = std::min(low[call.back().first], low[done]);
      if (low[done] == index[done]) {
        int w;
        do {
          w = stack.back();
          stack.pop_back();
          on[w] = 0;
          comp[w] = count;
        } while (w != done);
        ++count;
      }
    }
  }
  return comp;
}

}  // namespace

bool is_aperiodic(const Multigraph& g) {
  const int t = g.vertices();
  int ncomp = 0;
  auto comp = scc(g, ncomp);
  std::vector<int> level(t, -1);
  long long period = 0;
  bool cyclic = false;
  for (int root = 0; root < t; ++root) {
    if (level[root] >= 0) continue;
    level[root] = 0;
    std::deque<int> queue{root};
    while (!queue.empty()) {
      int u = queue.front();
      queue.pop_front();
      for (int v : g.out[u]) {
        if (comp[v] != comp[u]) continue;
        if (level[v] < 0) {
          level[v] = level[u] + 1;
          queue.push_back(v);
        }
      }
    }
  }
  for (int u = 0; u < t; ++u)
    for (int v : g.out[u])
      if (comp[u] == comp[v]) {
        cyclic = true;
        period = std::gcd(period, std::llabs(level[u] + 1LL - level[v]));
      }
  if (!cyclic) throw InvalidInput("no cycles");
  return period == 1;
}

bool is_admissible(const Multigraph& g) {
  auto d = out_degree_uniform(g);
  if (!d || *d == 0) return false;
  return is_aperiodic(g);
}

bool is_strongly_connected(const Multigraph& g) {
  if (g.out.empty()) return false;
  int n = 0;
  scc(g, n);
  return n == 1;
}

bool is_road_colorable(const Multigraph& g) {
  auto d = out_degree_uniform(g);
  if (!d || *d == 0) return false;
  int n = 0;
  auto comp = scc(g, n);
  std::vector<char> sink(n, 1);
  for (int u = 0; u < g.vertices(); ++u)
    for (int v : g.out[u])
      if (comp[u] != comp[v]) sink[comp[u]] = 0;
  int which = -1, count = 0;
  for (int c = 0; c < n; ++c)
    if (sink[c]) which = c, ++count;
  if (count != 1) return false;
  std::vector<int> keep(g.vertices(), -1);
  int m = 0;
  for (int v = 0; v < g.vertices(); ++v)
    if (comp[v] == which) keep[v] = m++;
  std::vector<std::vector<int>> sub(m);
  for (int v = 0; v < g.vertices(); ++v)
    if (keep[v] >= 0)
      for (int w : g.out[v]) sub[keep[v]].push_back(keep[w]);
  return is_aperiodic(Multigraph(std::move(sub)));
}

std::vector<int> distance_layers(const Multigraph& g, int q) {
  const int t = g.vertices();
  if (q < 0 || q >= t) throw InvalidInput("vertex out of range");
  std::vector<std::vector<int>> rev(t);
  for (int u = 0; u < t; ++u)
    for (int v : g.out[u]) rev[v].push_back(u);
  std::vector<int> dist(t, -1);
  dist[q] = 0;
  std::deque<int> queue{q};
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    for (int u : rev[v])
      if (dist[u] < 0) {
        dist[u] = dist[v] + 1;
        queue.push_back(u);
      }
  }
  return dist;
}

std::vector<std::vector<char>> exact_predecessors(const Multigraph& g, int q, int len) {
  const int t = g.vertices();
  std::vector<std::vector<char>> r(len + 1, std::vector<char>(t, 0));
  r[0][q] = 1;
  for (int i = 1; i <= len; ++i)
    for (int v = 0; v < t; ++v)
      for (int w : g.out[v])
        if (r[i - 1][w]) {
          r[i][v] = 1;
          break;
        }
  return r;
}

void check_coloring(const Multigraph& g, const Coloring& c) {
  auto d = out_degree_uniform(g);
  if (!d) throw InvalidInput("coloring needs a graph with uniform out-degree");
  if (int(c.letter.size()) != g.vertices()) throw InvalidInput("coloring has wrong vertex count");
  for (const auto& row : c.letter) {
    if (int(row.size()) != *d) throw InvalidInput("coloring row has wrong length");
    std::vector<char> seen(*d, 0);
    for (int l : row) {
      if (l < 0 || l >= *d || seen[l]) throw InvalidInput("coloring row is not a permutation");
      seen[l] = 1;
    }
  }
}

Dfa apply_coloring(const Multigraph& g, const Coloring& c) {
  check_coloring(g, c);
  const int d = int(c.letter.empty() ? 0 : c.letter[0].size());
  Dfa a(g.vertices(), d);
  for (int v = 0; v < g.vertices(); ++v)
    for (int s = 0; s < d; ++s) a.set(v, c.letter[v][s], g.out[v][s]);
  return a;
}

Coloring identity_coloring(const Multigraph& g) {
  Coloring c;
  for (const auto& row : g.out) {
    std::vector<int> p(row.size());
    std::iota(p.begin(), p.end(), 0);
    c.letter.push_back(p);
  }
  return c;
}

std::optional<std::uint64_t> coloring_count(const Multigraph& g) {
  auto d = out_degree_uniform(g);
  if (!d) throw InvalidInput("coloring needs a graph with uniform out-degree");
  unsigned __int128 per = 1, total = 1;
  for (int i = 2; i <= *d; ++i) {
    per *= i;
    if (per > ~std::uint64_t(0)) return std::nullopt;
  }
  for (int v = 0; v < g.vertices(); ++v) {
    total *= per;
    if (total > ~std::uint64_t(0)) return std::nullopt;
  }
  return std::uint64_t(total);
}

Coloring coloring_at(const Multigraph& g, std::uint64_t index) {
  auto d = *out_degree_uniform(g);
  std::uint64_t per = 1;
  for (int i = 2; i <= d; ++i) per *= std::uint64_t(i);
  Coloring c;
  c.letter.assign(g.vertices(), {});
  for (int v = g.vertices() - 1; v >= 0; --v) {
    std::uint64_t rank = index % per;
    index /= per;
    // unrank in the factorial number system
    std::vector<int> pool(d);
    std::iota(pool.begin(), pool.end(), 0);
    std::uint64_t f = per;
    std::vector<int> perm;
    for (int k = d; k >= 1; --k) {
      f /= std::uint64_t(k);
      std::size_t pick = std::size_t(rank / f);
      rank %= f;
      perm.push_back(pool[pick]);
      pool.erase(pool.begin() + long(pick));
    }
    c.letter[v] = perm;
  }
  return c;
}

std::string graph_to_text(const Multigraph& g) {
  std::ostringstream out;
  int d = g.out.empty() ? 0 : int(g.out[0].size());
  out << "graph " << g.vertices() << ' ' << d << '\n';
  for (const auto& row : g.out) {
    for (std::size_t i = 0; i < row.size(); ++i) out << (i ? " " : "") << row[i];
    out << '\n';
  }
  return out.str();
}

namespace {

Multigraph parse_graph_lines(const std::vector<std::vector<std::string>>& lines, std::size_t& pos) {
  if (lines.empty() || lines[0].size() != 3 || lines[0][0] != "graph")
    throw InvalidInput("expected header 'graph <t> <d>'");
  long long t = to_int(lines[0][1], "t"), d = to_int(lines[0][2], "d");
  if (t < 1 || d < 0) throw InvalidInput("graph needs t >= 1 and d >= 0");
  if (t > 1000000 || d > 100000) throw SizeLimit("graph dimensions too large");
  if (lines.size() < std::size_t(t) + 1) throw InvalidInput("expected " + std::to_string(t) + " rows of targets");
  std::vector<std::vector<int>> adj(t);
  for (long long v = 0; v < t; ++v) {
    const auto& row = lines[v + 1];
    if (row.size() != std::size_t(d))
      throw InvalidInput("row " + std::to_string(v) + " must have " + std::to_string(d) + " targets");
    for (const auto& tok : row) adj[v].push_back(int(to_int(tok, "target")));
  }
  pos = std::size_t(t) + 1;
  return Multigraph(std::move(adj));
}

}  // namespace

Multigraph graph_from_text(const std::string& text) {
  auto lines = content_lines(text);
  std::size_t pos = 0;
  auto g = parse_graph_lines(lines, pos);
  if (pos != lines.size()) throw InvalidInput("trailing content after graph");
  return g;
}

std::string colored_graph_to_text(const Multigraph& g, const Coloring& c) {
  check_coloring(g, c);
  std::ostringstream out;
  out << graph_to_text(g) << "colors\n";
  const int d = g.out.empty() ? 0 : int(g.out[0].size());
  for (const auto& row : c.letter) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out << ' ';
      if (d <= 26) out << char('a' + row[i]);
      else out << row[i];
    }
    out << '\n';
  }
  return out.str();
}

Multigraph colored_graph_from_text(const std::string& text, std::optional<Coloring>* c) {
  auto lines = content_lines(text);
  std::size_t pos = 0;
  auto g = parse_graph_lines(lines, pos);
  if (c) c->reset();
  if (pos == lines.size()) return g;
  if (lines[pos].size() != 1 || lines[pos][0] != "colors") throw InvalidInput("expected 'colors' section");
  ++pos;
  if (lines.size() - pos != std::size_t(g.vertices())) throw InvalidInput("colors section needs one row per vertex");
  Coloring col;
  const int d = g.out.empty() ? 0 : int(g.out[0].size());
  for (int v = 0; v < g.vertices(); ++v) {
    std::vector<int> row;
    for (const auto& tok : lines[pos + v]) {
      if (tok.size() == 1 && tok[0] >= 'a' && tok[0] <= 'z') row.push_back(tok[0] - 'a');
      else row.push_back(int(to_int(tok, "letter")));
    }
    col.letter.push_back(row);
  }
  (void)d;
  check_coloring(g, col);
  if (c) *c = col;
  return g;
}

std::string graph_to_dot(const Multigraph& g, const Coloring* c, const std::vector<std::string>* names) {
  if (c) check_coloring(g, *c);
  const int d = g.out.empty() ? 0 : int(g.out[0].size());
  std::ostringstream out;
  out << "digraph G {\n";
  for (int v = 0; v < g.vertices(); ++v) {
    out << "  " << v;
    if (names && v < int(names->size())) out << " [label=\"" << (*names)[v] << "\"]";
    out << ";\n";
  }
  for (int v = 0; v < g.vertices(); ++v)
    for (std::size_t s = 0; s < g.out[v].size(); ++s) {
      out << "  " << v << " -> " << g.out[v][s];
      if (c) {
        int l = c->letter[v][s];
        out << " [label=\"";
        if (d <= 26) out << char('a' + l);
        else out << l;
        out << "\"]";
      }
      out << ";\n";
    }
  out << "}\n";
  return out.str();
}

}  // namespace rs
