/* roadsync: synchronizing automata and road colorings, C interface.
 *
 * Every object is an opaque handle released with its matching *_free call.
 * Functions return an rs_status; on failure rs_last_error() describes the
 * problem (thread-local, valid until the next call on the same thread).
 * Strings returned through char** are released with rs_string_free.
 */
#ifndef ROADSYNC_H
#define ROADSYNC_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum {
  RS_OK = 0,
  RS_ERR_INVALID = 1,    /* malformed input or violated precondition */
  RS_ERR_SIZE = 2,       /* a size limit was exceeded */
  RS_ERR_INTERNAL = 3
} rs_status;

typedef struct rs_dfa rs_dfa;
typedef struct rs_graph rs_graph;
typedef struct rs_result rs_result;

typedef struct {
  uint64_t coloring_cap;      /* literal coloring enumeration up to this count */
  int threads;                /* worker threads for enumeration */
  uint64_t max_subsets;       /* subset-search cap */
  uint64_t word_cap;          /* exhaustive word enumeration cap */
  int max_reduction_vertices; /* largest reduction graph verified */
} rs_limits;

void rs_limits_default(rs_limits* lim);
const char* rs_last_error(void);
void rs_string_free(char* s);

/* automata */
rs_status rs_dfa_parse(const char* text, rs_dfa** out);
rs_status rs_dfa_cerny(int n, rs_dfa** out);
int rs_dfa_states(const rs_dfa* a);
int rs_dfa_letters(const rs_dfa* a);
int rs_dfa_next(const rs_dfa* a, int state, int letter);
char* rs_dfa_to_text(const rs_dfa* a);
char* rs_dfa_to_dot(const rs_dfa* a);
void rs_dfa_free(rs_dfa* a);

/* graphs; the text may carry a 'colors' section */
rs_status rs_graph_parse(const char* text, rs_graph** out);
int rs_graph_vertices(const rs_graph* g);
int rs_graph_degree(const rs_graph* g); /* -1 if not uniform */
int rs_graph_has_coloring(const rs_graph* g);
char* rs_graph_to_text(const rs_graph* g);
char* rs_graph_to_dot(const rs_graph* g);
void rs_graph_free(rs_graph* g);

/* results */
int rs_result_answer(const rs_result* r); /* 1 yes, 0 no, -1 none */
int rs_result_has_word(const rs_result* r);
size_t rs_result_word_length(const rs_result* r);
const int* rs_result_word(const rs_result* r);
const char* rs_result_word_text(const rs_result* r);
const char* rs_result_coloring_text(const rs_result* r); /* NULL when absent */
const char* rs_result_report_json(const rs_result* r);
const char* rs_result_json(const rs_result* r);
void rs_result_free(rs_result* r);

/* operations */
rs_status rs_sync_check(const rs_dfa* a, rs_result** out);
rs_status rs_sync_shortest(const rs_dfa* a, int64_t limit, const rs_limits* lim, rs_result** out);
rs_status rs_syn_decide(const rs_dfa* a, int64_t k, const rs_limits* lim, rs_result** out);
rs_status rs_srcp_decide(const rs_graph* g, int64_t k, const rs_limits* lim, rs_result** out);
rs_status rs_srcp_kernel(const rs_graph* g, int64_t k, rs_graph** kernel, rs_result** out);
rs_status rs_srcp_k3(const rs_graph* g, rs_result** out);
/* word: aaa, aab, aba or abb for the polynomial deciders; any a/b word with use_oracle */
rs_status rs_srcpw_decide(const rs_graph* g, const char* word, int use_oracle, const rs_limits* lim, rs_result** out);

rs_status rs_gen_compose(const char* batch_text, const rs_limits* lim, rs_dfa** out, char** names_json, rs_result** info);
rs_status rs_gen_sat_reduce(const char* dimacs, rs_graph** out, char** names_json);
rs_status rs_verify_compose(const char* batch_text, const rs_limits* lim, rs_result** out);
rs_status rs_verify_sat_reduce(const char* dimacs, const rs_limits* lim, rs_result** out);

#ifdef __cplusplus
}
#endif

#endif
