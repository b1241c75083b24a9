#include "roadsync/roadsync.h"

#include <cstring>
#include <json.hpp>
#include <string>

#include "../composer.hpp"
#include "../error.hpp"
#include "../satred.hpp"
#include "../srcp.hpp"
#include "../srcpw.hpp"
#include "../sync.hpp"

using json = nlohmann::ordered_json;

struct rs_dfa {
  rs::Dfa dfa;
};

struct rs_graph {
  rs::Multigraph g;
  std::optional<rs::Coloring> coloring;
};

struct rs_result {
  int answer = -1;
  std::optional<rs::Word> word;
  int alphabet = 2;
  std::string word_text;
  std::optional<std::string> coloring_text;
  json witness_coloring;  // null or array of letter rows
  json report = json::object();
  std::string report_text, full_text;

  void finish() {
    report_text = report.dump();
    json j;
    j["answer"] = answer < 0 ? json(nullptr) : json(answer == 1 ? "YES" : "NO");
    j["witness_word"] = word ? json(*word) : json(nullptr);
    j["witness_coloring"] = witness_coloring;
    j["report"] = report;
    full_text = j.dump();
    if (word) word_text = rs::render_word(*word, alphabet);
  }
};

namespace {

thread_local std::string last_error;

template <class F>
rs_status guard(F&& f) {
  try {
    last_error.clear();
    f();
    return RS_OK;
  } catch (const rs::InvalidInput& e) {
    last_error = e.what();
    return RS_ERR_INVALID;
  } catch (const rs::SizeLimit& e) {
    last_error = e.what();
    return RS_ERR_SIZE;
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return RS_ERR_SIZE;
  } catch (const std::exception& e) {
    last_error = e.what();
    return RS_ERR_INTERNAL;
  }
}

char* dup(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (p) std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

void need(const void* p, const char* what) {
  if (!p) throw rs::InvalidInput(std::string("null ") + what);
}

rs::OracleLimits oracle_limits(const rs_limits* lim) {
  rs::OracleLimits o;
  if (lim) {
    o.coloring_cap = lim->coloring_cap;
    o.threads = lim->threads < 1 ? 1 : lim->threads;
    o.bfs.max_subsets = lim->max_subsets;
  }
  return o;
}

void attach_coloring(rs_result& r, const rs::Multigraph& g, const rs::Coloring& c) {
  r.coloring_text = rs::colored_graph_to_text(g, c);
  r.witness_coloring = json(c.letter);
}

}  // namespace

extern "C" {

void rs_limits_default(rs_limits* lim) {
  if (!lim) return;
  lim->coloring_cap = std::uint64_t(1) << 20;
  lim->threads = 1;
  lim->max_subsets = std::uint64_t(1) << 24;
  lim->word_cap = 100000000;
  lim->max_reduction_vertices = 40;
}

const char* rs_last_error(void) { return last_error.c_str(); }
void rs_string_free(char* s) { std::free(s); }

rs_status rs_dfa_parse(const char* text, rs_dfa** out) {
  return guard([&] {
    need(text, "text");
    need(out, "output");
    *out = new rs_dfa{rs::dfa_from_text(text)};
  });
}

rs_status rs_dfa_cerny(int n, rs_dfa** out) {
  return guard([&] {
    need(out, "output");
    *out = new rs_dfa{rs::cerny_automaton(n)};
  });
}

int rs_dfa_states(const rs_dfa* a) { return a ? a->dfa.states() : 0; }
int rs_dfa_letters(const rs_dfa* a) { return a ? a->dfa.letters() : 0; }
int rs_dfa_next(const rs_dfa* a, int s, int l) {
  if (!a || s < 0 || s >= a->dfa.states() || l < 0 || l >= a->dfa.letters()) return -1;
  return a->dfa.next(s, l);
}
char* rs_dfa_to_text(const rs_dfa* a) { return a ? dup(rs::dfa_to_text(a->dfa)) : nullptr; }

char* rs_dfa_to_dot(const rs_dfa* a) {
  if (!a) return nullptr;
  std::vector<std::vector<int>> adj(a->dfa.states());
  for (int s = 0; s < a->dfa.states(); ++s)
    for (int l = 0; l < a->dfa.letters(); ++l) adj[s].push_back(a->dfa.next(s, l));
  rs::Multigraph g(adj);
  auto c = rs::identity_coloring(g);
  return dup(rs::graph_to_dot(g, &c));
}

void rs_dfa_free(rs_dfa* a) { delete a; }

rs_status rs_graph_parse(const char* text, rs_graph** out) {
  return guard([&] {
    need(text, "text");
    need(out, "output");
    std::optional<rs::Coloring> c;
    auto g = rs::colored_graph_from_text(text, &c);
    *out = new rs_graph{std::move(g), std::move(c)};
  });
}

int rs_graph_vertices(const rs_graph* g) { return g ? g->g.vertices() : 0; }
int rs_graph_degree(const rs_graph* g) {
  if (!g) return -1;
  auto d = rs::out_degree_uniform(g->g);
  return d ? *d : -1;
}
int rs_graph_has_coloring(const rs_graph* g) { return g && g->coloring ? 1 : 0; }
char* rs_graph_to_text(const rs_graph* g) {
  if (!g) return nullptr;
  return dup(g->coloring ? rs::colored_graph_to_text(g->g, *g->coloring) : rs::graph_to_text(g->g));
}
char* rs_graph_to_dot(const rs_graph* g) {
  if (!g) return nullptr;
  try {
    return dup(rs::graph_to_dot(g->g, g->coloring ? &*g->coloring : nullptr));
  } catch (const std::exception& e) {
    last_error = e.what();
    return nullptr;
  }
}
void rs_graph_free(rs_graph* g) { delete g; }

int rs_result_answer(const rs_result* r) { return r ? r->answer : -1; }
int rs_result_has_word(const rs_result* r) { return r && r->word ? 1 : 0; }
size_t rs_result_word_length(const rs_result* r) { return r && r->word ? r->word->size() : 0; }
const int* rs_result_word(const rs_result* r) { return r && r->word ? r->word->data() : nullptr; }
const char* rs_result_word_text(const rs_result* r) { return r ? r->word_text.c_str() : ""; }
const char* rs_result_coloring_text(const rs_result* r) {
  return r && r->coloring_text ? r->coloring_text->c_str() : nullptr;
}
const char* rs_result_report_json(const rs_result* r) { return r ? r->report_text.c_str() : "{}"; }
const char* rs_result_json(const rs_result* r) { return r ? r->full_text.c_str() : "{}"; }
void rs_result_free(rs_result* r) { delete r; }

rs_status rs_sync_check(const rs_dfa* a, rs_result** out) {
  return guard([&] {
    need(a, "dfa");
    need(out, "output");
    auto r = std::make_unique<rs_result>();
    r->answer = rs::is_synchronizing(a->dfa) ? 1 : 0;
    r->report["states"] = a->dfa.states();
    r->report["pin_bound"] = rs::pin_bound(a->dfa.states());
    r->finish();
    *out = r.release();
  });
}

rs_status rs_sync_shortest(const rs_dfa* a, int64_t limit, const rs_limits* lim, rs_result** out) {
  return guard([&] {
    need(a, "dfa");
    need(out, "output");
    rs::BfsLimits b = oracle_limits(lim).bfs;
    if (limit >= 0) b.max_length = int(std::min<int64_t>(limit, 1 << 30));
    auto w = rs::shortest_reset_word(a->dfa, b);
    auto r = std::make_unique<rs_result>();
    r->alphabet = a->dfa.letters();
    r->answer = w ? 1 : 0;
    r->word = w;
    r->report["length"] = w ? json(w->size()) : json(nullptr);
    if (limit >= 0) r->report["limit"] = limit;
    r->finish();
    *out = r.release();
  });
}

rs_status rs_syn_decide(const rs_dfa* a, int64_t k, const rs_limits* lim, rs_result** out) {
  return guard([&] {
    need(a, "dfa");
    need(out, "output");
    auto r = std::make_unique<rs_result>();
    r->answer = rs::syn_decide(a->dfa, k, oracle_limits(lim).bfs) ? 1 : 0;
    r->report["k"] = k;
    r->report["pin_bound"] = rs::pin_bound(a->dfa.states());
    r->finish();
    *out = r.release();
  });
}

rs_status rs_srcp_decide(const rs_graph* g, int64_t k, const rs_limits* lim, rs_result** out) {
  return guard([&] {
    need(g, "graph");
    need(out, "output");
    const auto& G = g->g;
    if (!rs::is_admissible(G)) throw rs::InvalidInput("srcp is defined on admissible graphs only");
    auto r = std::make_unique<rs_result>();
    r->alphabet = int(G.out[0].size());
    r->report["k"] = k;
    r->report["pin_bound"] = rs::pin_bound(G.vertices());
    if (k >= rs::pin_bound(G.vertices())) {
      r->answer = rs::is_road_colorable(G) ? 1 : 0;
      r->report["method"] = "pin-bound";
    } else if (G.out[0].size() == 2 && k == 3) {
      r->report["method"] = "k3";
      std::optional<rs::Coloring> c;
      if (G.vertices() == 1) c = rs::identity_coloring(G);
      if (!c) c = rs::witness_aaa(G);
      if (!c) c = rs::witness_aab(G);
      if (!c) c = rs::witness_aba(G);
      if (!c) c = rs::witness_abb(G);
      r->answer = c ? 1 : 0;
      if (c) {
        attach_coloring(*r, G, *c);
        r->word = rs::shortest_reset_word(rs::apply_coloring(G, *c));
      }
    } else {
      r->report["method"] = "oracle";
      auto w = rs::srcp_oracle(G, k, oracle_limits(lim));
      r->answer = w ? 1 : 0;
      if (w) {
        attach_coloring(*r, G, w->coloring);
        r->word = w->word;
      }
    }
    r->finish();
    *out = r.release();
  });
}

rs_status rs_srcp_kernel(const rs_graph* g, int64_t k, rs_graph** kernel, rs_result** out) {
  return guard([&] {
    need(g, "graph");
    need(kernel, "kernel output");
    auto res = rs::kernelize(g->g, k);
    auto r = std::make_unique<rs_result>();
    r->report["k"] = res.k;
    r->report["trivial"] = res.trivial;
    r->report["rounds"] = res.rounds;
    r->report["out_degree"] = res.graph.out[0].size();
    r->report["aperiodicity_preserved"] = res.aperiodicity_preserved;
    if (res.trivial) r->answer = res.yes ? 1 : 0;
    r->finish();
    *kernel = new rs_graph{res.graph, std::nullopt};
    if (out) *out = r.release();
  });
}

rs_status rs_srcp_k3(const rs_graph* g, rs_result** out) {
  if (g && rs_graph_degree(g) != 2) {
    last_error = "srcp k3 needs out-degree 2";
    return RS_ERR_INVALID;
  }
  return rs_srcp_decide(g, 3, nullptr, out);
}

rs_status rs_srcpw_decide(const rs_graph* g, const char* word, int use_oracle, const rs_limits* lim, rs_result** out) {
  return guard([&] {
    need(g, "graph");
    need(word, "word");
    need(out, "output");
    const auto& G = g->g;
    auto r = std::make_unique<rs_result>();
    std::optional<rs::Coloring> c;
    rs::Word w = rs::parse_word(word, 2);
    if (use_oracle) {
      c = rs::in_class_oracle(G, w, oracle_limits(lim));
      r->report["class"] = std::string("G_") + word;
      r->report["method"] = "oracle";
    } else {
      auto fw = rs::parse_fixed_word(word);
      if (!fw) throw rs::InvalidInput("word must be one of aaa, aab, aba, abb");
      switch (*fw) {
        case rs::FixedWord::aaa: c = rs::witness_aaa(G); r->report["class"] = "G_aaa"; break;
        case rs::FixedWord::aab: c = rs::witness_aab(G); r->report["class"] = "G_aab minus G_aaa"; break;
        case rs::FixedWord::aba: c = rs::witness_aba(G); r->report["class"] = "G_aba minus G_aaa"; break;
        case rs::FixedWord::abb: c = rs::witness_abb(G); r->report["class"] = "G_abb minus (G_aba or G_aaa)"; break;
      }
      r->report["method"] = "polynomial";
    }
    r->answer = c ? 1 : 0;
    if (c) {
      attach_coloring(*r, G, *c);
      r->word = w;
    }
    r->finish();
    *out = r.release();
  });
}

rs_status rs_gen_compose(const char* batch_text, const rs_limits* lim, rs_dfa** out, char** names_json, rs_result** info) {
  return guard([&] {
    need(batch_text, "batch");
    need(out, "output");
    auto raw = rs::batch_from_text(batch_text);
    auto pre = rs::preprocess(raw);
    auto r = std::make_unique<rs_result>();
    json names;
    std::optional<bool> early = pre.early;
    if (!early) early = rs::big_m_branch(pre.batch, oracle_limits(lim).bfs);
    if (early) {
      r->answer = *early ? 1 : 0;
      r->report["early"] = true;
      // stand-in instances: a 1-state automaton (YES) or a 2-state swap (NO), with d' = 0
      rs::Dfa a = *early ? rs::Dfa(1, 1, {0}) : rs::Dfa(2, 1, {1, 0});
      r->report["d_prime"] = 0;
      *out = new rs_dfa{a};
      names["states"] = json::array();
      names["letters"] = json::array();
    } else {
      auto c = rs::compose(pre.batch);
      r->report["early"] = false;
      r->report["states"] = c.dfa.states();
      r->report["letters"] = c.dfa.letters();
      r->report["d_prime"] = c.d_prime;
      r->report["pin_bound"] = c.z;
      r->report["q"] = c.q;
      r->report["kept_items"] = pre.origin;
      names["states"] = c.state_names;
      names["letters"] = c.letter_names;
      names["d_prime"] = c.d_prime;
      *out = new rs_dfa{c.dfa};
    }
    r->finish();
    if (names_json) *names_json = dup(names.dump(2) + "\n");
    if (info) *info = r.release();
  });
}

rs_status rs_gen_sat_reduce(const char* dimacs, rs_graph** out, char** names_json) {
  return guard([&] {
    need(dimacs, "formula");
    need(out, "output");
    auto f = rs::augment_tautologies(rs::cnf_from_dimacs(dimacs));
    auto rg = rs::build_reduction(f);
    if (names_json) {
      json names;
      names["vertices"] = rg.names;
      names["clauses"] = f.clauses.size();
      names["target"] = rg.names[rg.d(4)];
      *names_json = dup(names.dump(2) + "\n");
    }
    *out = new rs_graph{rg.graph, std::nullopt};
  });
}

rs_status rs_verify_compose(const char* batch_text, const rs_limits* lim, rs_result** out) {
  return guard([&] {
    need(batch_text, "batch");
    need(out, "output");
    auto raw = rs::batch_from_text(batch_text);
    auto pre = rs::preprocess(raw);
    auto r = std::make_unique<rs_result>();
    if (pre.early) {
      r->answer = *pre.early ? 1 : 0;
      r->report["early"] = true;
    } else {
      auto c = rs::compose(pre.batch);
      rs::VerifyLimits v;
      if (lim) {
        v.word_cap = lim->word_cap;
        v.bfs.max_subsets = lim->max_subsets;
      }
      auto rep = rs::verify_c1_c2_c3(c, pre.batch, v);
      r->answer = rep.c1 && rep.c2 && rep.c3 && rep.equivalence ? 1 : 0;
      r->report = {{"early", false},      {"C1", rep.c1},
                   {"C2", rep.c2},        {"C3", rep.c3},
                   {"equivalence", rep.equivalence}, {"composed_yes", rep.composed_yes},
                   {"any_item_yes", rep.any_item_yes}, {"words_checked", rep.words_checked},
                   {"reset_words_found", rep.reset_words_found}, {"c3_words", rep.c3_words}};
    }
    r->finish();
    *out = r.release();
  });
}

rs_status rs_verify_sat_reduce(const char* dimacs, const rs_limits* lim, rs_result** out) {
  return guard([&] {
    need(dimacs, "formula");
    need(out, "output");
    auto f = rs::cnf_from_dimacs(dimacs);
    rs::ReductionLimits rl;
    rl.oracle = oracle_limits(lim);
    if (lim) rl.max_vertices = lim->max_reduction_vertices;
    auto rep = rs::verify_reduction(f, rl);
    auto r = std::make_unique<rs_result>();
    r->answer = rep.passed() ? 1 : 0;
    r->report = {{"vertices", rep.vertices},
                 {"satisfiable", rep.satisfiable},
                 {"synchronizable", rep.synchronizable},
                 {"equivalent", rep.equivalent},
                 {"size_ok", rep.size_ok},
                 {"degree_ok", rep.degree_ok},
                 {"strongly_connected", rep.strongly_connected},
                 {"words_ok", rep.words_ok},
                 {"synchronizing_words", rep.synchronizing_words},
                 {"witness_ok", rep.witness_ok ? json(*rep.witness_ok) : json(nullptr)}};
    r->finish();
    *out = r.release();
  });
}

}  // extern "C"
