// roadsync command-line front end; talks to the library only through the C API.
#include <CLI11.hpp>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>
#include <string>

#include "roadsync/roadsync.h"

namespace {

using json = nlohmann::ordered_json;

struct Failure {
  int code;
  std::string msg;
};

std::string slurp(const std::string& path) {
  if (path == "-") {
    std::stringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Failure{1, "cannot read " + path};
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void spit(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Failure{1, "cannot write " + path};
  out << text;
}

void check(rs_status st) {
  if (st != RS_OK) throw Failure{st == RS_ERR_SIZE ? 2 : 1, rs_last_error()};
}

std::string take(char* s) {
  std::string out = s ? s : "";
  rs_string_free(s);
  return out;
}

struct Opts {
  bool json = false;
  int threads = 1;
  long long limit = -1;
  long long k = 0;
  std::string in, out, names, batch, word;
  int n = 0;
  bool oracle = false;
  rs_limits lim{};
};

// Prints a result: YES/NO, then the word, then any witness coloring.
void emit(const Opts& o, rs_result* r, bool word_first = false) {
  if (o.json) {
    std::cout << rs_result_json(r) << '\n';
    return;
  }
  int ans = rs_result_answer(r);
  if (word_first) {
    if (rs_result_has_word(r)) {
      std::cout << rs_result_word_length(r) << '\n' << rs_result_word_text(r) << '\n';
    } else {
      std::cout << "NO\n";
    }
    return;
  }
  if (ans >= 0) std::cout << (ans ? "YES" : "NO") << '\n';
  if (rs_result_has_word(r)) std::cout << "word " << rs_result_word_text(r) << '\n';
  if (const char* c = rs_result_coloring_text(r)) std::cout << c;
}

void emit_report(const Opts& o, rs_result* r) {
  if (o.json) {
    std::cout << rs_result_json(r) << '\n';
    return;
  }
  int ans = rs_result_answer(r);
  if (ans >= 0) std::cout << (ans ? "YES" : "NO") << '\n';
  auto rep = json::parse(rs_result_report_json(r));
  for (auto& [key, val] : rep.items()) std::cout << key << ' ' << val.dump() << '\n';
}

struct ResultPtr {
  rs_result* p = nullptr;
  ~ResultPtr() { rs_result_free(p); }
};

rs_dfa* load_dfa(const std::string& path) {
  rs_dfa* a = nullptr;
  check(rs_dfa_parse(slurp(path).c_str(), &a));
  return a;
}

rs_graph* load_graph(const std::string& path) {
  rs_graph* g = nullptr;
  check(rs_graph_parse(slurp(path).c_str(), &g));
  return g;
}

}  // namespace

int main(int argc, char** argv) {
  Opts o;
  rs_limits_default(&o.lim);
  unsigned long long coloring_cap = o.lim.coloring_cap, max_subsets = o.lim.max_subsets, word_cap = o.lim.word_cap;
  int max_vertices = o.lim.max_reduction_vertices;

  CLI::App app{"roadsync: synchronizing automata, road colorings and their reductions"};
  app.require_subcommand(1);
  app.add_flag("--json", o.json, "print one JSON object {answer, witness_word, witness_coloring, report}");
  app.add_option("--threads", o.threads, "worker threads for brute-force enumeration")->check(CLI::PositiveNumber);
  app.add_option("--coloring-cap", coloring_cap, "literal coloring enumeration up to this many colorings");
  app.add_option("--max-subsets", max_subsets, "subset-search size limit");
  app.add_option("--word-cap", word_cap, "exhaustive word enumeration limit");
  app.add_option("--max-vertices", max_vertices, "largest reduction graph to verify");

  auto in_opt = [&](CLI::App* c) { c->add_option("--in", o.in, "input file, - for stdin")->required(); };

  auto* sync = app.add_subcommand("sync", "synchronization of a dfa")->require_subcommand(1);
  auto* sync_check = sync->add_subcommand("check", "is the automaton synchronizing");
  in_opt(sync_check);
  auto* sync_short = sync->add_subcommand("shortest", "a shortest reset word");
  in_opt(sync_short);
  sync_short->add_option("--limit", o.limit, "longest word to consider");

  auto* srcp = app.add_subcommand("srcp", "synchronizing road colorings")->require_subcommand(1);
  auto* srcp_decide = srcp->add_subcommand("decide", "is there a coloring with a reset word of length <= k");
  in_opt(srcp_decide);
  srcp_decide->add_option("--k", o.k, "word length bound")->required();
  auto* srcp_kernel = srcp->add_subcommand("kernel", "polynomial kernel in the number of vertices");
  in_opt(srcp_kernel);
  srcp_kernel->add_option("--k", o.k, "word length bound")->required();
  srcp_kernel->add_option("--out", o.out, "kernel graph file");
  auto* srcp_k3 = srcp->add_subcommand("k3", "polynomial decision for out-degree 2 and k = 3");
  in_opt(srcp_k3);

  auto* srcpw = app.add_subcommand("srcpw", "fixed-word road colorings")->require_subcommand(1);
  auto* srcpw_decide = srcpw->add_subcommand("decide", "membership in a fixed-word class");
  in_opt(srcpw_decide);
  srcpw_decide->add_option("--word", o.word, "aaa, aab, aba or abb")->required();
  srcpw_decide->add_flag("--oracle", o.oracle, "brute force G_w membership for any a/b word");

  auto* gen = app.add_subcommand("gen", "generators")->require_subcommand(1);
  auto* gen_cerny = gen->add_subcommand("cerny", "Cerny automaton");
  gen_cerny->add_option("--n", o.n, "state count")->required();
  gen_cerny->add_option("--out", o.out, "output file");
  auto* gen_compose = gen->add_subcommand("compose", "guard-table composition of a batch");
  gen_compose->add_option("--batch", o.batch, "batch file")->required();
  gen_compose->add_option("--out", o.out, "output dfa file");
  gen_compose->add_option("--names", o.names, "state and letter names as JSON");
  auto* gen_sat = gen->add_subcommand("sat-reduce", "3-SAT to road coloring with k = 4");
  in_opt(gen_sat);
  gen_sat->add_option("--out", o.out, "output graph file");
  gen_sat->add_option("--names", o.names, "vertex names as JSON");

  auto* verify = app.add_subcommand("verify", "exhaustive checks of the constructions")->require_subcommand(1);
  auto* verify_compose = verify->add_subcommand("compose", "check C1, C2, C3 and the composition equivalence");
  verify_compose->add_option("--batch", o.batch, "batch file")->required();
  auto* verify_sat = verify->add_subcommand("sat-reduce", "check SAT iff a length-4 synchronizing coloring exists");
  in_opt(verify_sat);

  auto* exp = app.add_subcommand("export", "format conversion")->require_subcommand(1);
  auto* exp_dot = exp->add_subcommand("dot", "Graphviz output for a graph, colored graph or dfa");
  in_opt(exp_dot);
  exp_dot->add_option("--out", o.out, "output file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }
  o.lim.coloring_cap = coloring_cap;
  o.lim.max_subsets = max_subsets;
  o.lim.word_cap = word_cap;
  o.lim.max_reduction_vertices = max_vertices;
  o.lim.threads = o.threads;

  try {
    ResultPtr r;
    if (*sync_check || *sync_short) {
      rs_dfa* a = load_dfa(o.in);
      rs_status st = *sync_check ? rs_sync_check(a, &r.p) : rs_sync_shortest(a, o.limit, &o.lim, &r.p);
      rs_dfa_free(a);
      check(st);
      emit(o, r.p, bool(*sync_short));
    } else if (*srcp_decide || *srcp_k3) {
      rs_graph* g = load_graph(o.in);
      rs_status st = *srcp_k3 ? rs_srcp_k3(g, &r.p) : rs_srcp_decide(g, o.k, &o.lim, &r.p);
      rs_graph_free(g);
      check(st);
      emit(o, r.p);
    } else if (*srcp_kernel) {
      rs_graph* g = load_graph(o.in);
      rs_graph* k = nullptr;
      rs_status st = rs_srcp_kernel(g, o.k, &k, &r.p);
      rs_graph_free(g);
      check(st);
      std::string text = take(rs_graph_to_text(k));
      rs_graph_free(k);
      if (o.out.empty()) {
        if (o.json) emit_report(o, r.p);
        else std::cout << text;
      } else {
        spit(o.out, text);
        emit_report(o, r.p);
      }
    } else if (*srcpw_decide) {
      rs_graph* g = load_graph(o.in);
      rs_status st = rs_srcpw_decide(g, o.word.c_str(), o.oracle ? 1 : 0, &o.lim, &r.p);
      rs_graph_free(g);
      check(st);
      emit(o, r.p);
    } else if (*gen_cerny) {
      rs_dfa* a = nullptr;
      check(rs_dfa_cerny(o.n, &a));
      std::string text = take(rs_dfa_to_text(a));
      rs_dfa_free(a);
      spit(o.out, text);
    } else if (*gen_compose) {
      rs_dfa* a = nullptr;
      char* names = nullptr;
      check(rs_gen_compose(slurp(o.batch).c_str(), &o.lim, &a, &names, &r.p));
      std::string text = take(rs_dfa_to_text(a));
      rs_dfa_free(a);
      std::string names_text = take(names);
      if (!o.names.empty()) spit(o.names, names_text);
      if (o.out.empty() && !o.json) {
        std::cout << text;
      } else {
        if (!o.out.empty()) spit(o.out, text);
        emit_report(o, r.p);
      }
    } else if (*gen_sat) {
      rs_graph* g = nullptr;
      char* names = nullptr;
      check(rs_gen_sat_reduce(slurp(o.in).c_str(), &g, &names));
      std::string text = take(rs_graph_to_text(g));
      rs_graph_free(g);
      std::string names_text = take(names);
      if (!o.names.empty()) spit(o.names, names_text);
      spit(o.out, text);
    } else if (*verify_compose) {
      check(rs_verify_compose(slurp(o.batch).c_str(), &o.lim, &r.p));
      emit_report(o, r.p);
    } else if (*verify_sat) {
      check(rs_verify_sat_reduce(slurp(o.in).c_str(), &o.lim, &r.p));
      emit_report(o, r.p);
    } else if (*exp_dot) {
      std::string text = slurp(o.in);
      std::string dot;
      std::istringstream first(text);
      std::string tok;
      while (first >> tok && tok[0] == '#') std::getline(first, tok);
      if (tok == "dfa") {
        rs_dfa* a = nullptr;
        check(rs_dfa_parse(text.c_str(), &a));
        dot = take(rs_dfa_to_dot(a));
        rs_dfa_free(a);
      } else {
        rs_graph* g = nullptr;
        check(rs_graph_parse(text.c_str(), &g));
        char* d = rs_graph_to_dot(g);
        rs_graph_free(g);
        if (!d) throw Failure{1, rs_last_error()};
        dot = take(d);
      }
      spit(o.out, dot);
    }
  } catch (const Failure& f) {
    std::cerr << "error: " << f.msg << '\n';
    return f.code;
  }
  return 0;
}
