/* pops — partially ordered patterns: C API.
 *
 * Permutation classes defined by partially ordered patterns (POPs):
 * linear-extension bases, POP detection, the regular-insertion-encoding test, exact avoider
 * counting, symmetry/Wilf classification, generating-function series, and
 * OEIS b-file comparison.
 *
 * Conventions:
 *   - Objects are opaque handles freed with their pops_*_free function.
 *   - Fallible calls either return a handle (NULL on failure) or a
 *     pops_status, and take a pops_error** out-parameter (pass NULL to
 *     discard details; otherwise free with pops_error_free).
 *   - All returned strings are malloc'd; free with pops_string_free.
 *   - Counts are decimal strings (they are exact big integers).
 */

#ifndef POPS_H
#define POPS_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum pops_status {
  POPS_OK = 0,
  POPS_ERR_INVALID = 1, /* malformed input or violated precondition */
  POPS_ERR_BUDGET = 2,  /* enumeration node budget exceeded */
  POPS_ERR_IO = 3,      /* file or cache problem */
  POPS_ERR_NET = 4,     /* network unavailable or cache miss */
  POPS_ERR_INTERNAL = 5
} pops_status;

typedef struct pops_error pops_error;
pops_status pops_error_code(const pops_error* err);
const char* pops_error_message(const pops_error* err);
/* For POPS_ERR_BUDGET: largest size whose count completed, else -1. */
int pops_error_size_reached(const pops_error* err);
void pops_error_free(pops_error* err);

void pops_string_free(char* s);
const char* pops_version(void);

/* ---- permutations ----------------------------------------------------- */

typedef struct pops_perm pops_perm;

/* Space-separated values, or a digit string for sizes up to 9. */
pops_perm* pops_perm_parse(const char* text, pops_error** err);
pops_perm* pops_perm_make(const uint8_t* values, size_t n, pops_error** err);
void pops_perm_free(pops_perm* p);
int pops_perm_size(const pops_perm* p);
char* pops_perm_str(const pops_perm* p);
int pops_perm_contains(const pops_perm* haystack, const pops_perm* pattern);
uint64_t pops_perm_count_occurrences(const pops_perm* haystack, const pops_perm* pattern);
/* op: identity, reverse, complement, inverse, reverse-complement,
 * reverse-inverse, complement-inverse, reverse-complement-inverse. */
pops_perm* pops_perm_symmetry(const pops_perm* p, const char* op, pops_error** err);

/* ---- posets ------------------------------------------------------------ */

typedef struct pops_poset pops_poset;

/* Compact "k: a<b, c<d" or JSON {"size":k,"relations":[[a,b],...]}. */
pops_poset* pops_poset_parse(const char* text, pops_error** err);
pops_poset* pops_poset_make(int size, const int* pairs, size_t npairs, pops_error** err);
pops_poset* pops_poset_zigzag(const int* labels, size_t n, pops_error** err);
void pops_poset_free(pops_poset* p);
int pops_poset_size(const pops_poset* p);
int pops_poset_less(const pops_poset* p, int a, int b);
int pops_poset_height(const pops_poset* p);
char* pops_poset_str(const pops_poset* p);
char* pops_poset_json(const pops_poset* p);
/* op: complement-labels or reverse-relations. */
pops_poset* pops_poset_transform(const pops_poset* p, const char* op, pops_error** err);
uint64_t pops_poset_linear_extension_count(const pops_poset* p);
/* Yields every labeled poset of the given size (size <= 5) exactly once. */
pops_status pops_poset_enumerate(int size,
                                 void (*visit)(const pops_poset* p, void* user),
                                 void* user, pops_error** err);

/* ---- permutation classes ----------------------------------------------- */

typedef struct pops_class pops_class;

/* Basis elements separated by ';' (or newlines, e.g. a basis file). */
pops_class* pops_class_parse(const char* text, pops_error** err);
pops_class* pops_class_load(const char* path, pops_error** err);
void pops_class_free(pops_class* c);
size_t pops_class_basis_size(const pops_class* c);
pops_perm* pops_class_basis_elem(const pops_class* c, size_t i);
char* pops_class_str(const pops_class* c);
int pops_class_avoids(const pops_class* c, const pops_perm* p);
int pops_class_equal(const pops_class* a, const pops_class* b);

int pops_pop_contains(const pops_perm* p, const pops_poset* poset);
pops_class* pops_basis_of_pop(const pops_poset* p, pops_error** err);
/* *out is NULL with POPS_OK when the class is not a POP class. */
pops_status pops_pop_of_class(const pops_class* c, pops_poset** out, pops_error** err);

/* ---- exact enumeration -------------------------------------------------- */

typedef struct pops_limits {
  uint64_t node_budget; /* 0 = unlimited */
  uint64_t max_live;    /* 0 = default materialization cap */
  unsigned workers;     /* 0 = hardware concurrency */
} pops_limits;

typedef struct pops_series pops_series;
void pops_series_free(pops_series* s);
size_t pops_series_len(const pops_series* s);
char* pops_series_term(const pops_series* s, size_t i);
/* b-file text, lines "n a(n)", offset 0. */
char* pops_series_bfile(const pops_series* s);

char* pops_count_avoiders(const pops_class* c, int n, const pops_limits* limits,
                          pops_error** err);
pops_series* pops_counting_sequence(const pops_class* c, int max_size,
                                    const pops_limits* limits, pops_error** err);
char* pops_count_pop_avoiders(const pops_poset* p, int n, const pops_limits* limits,
                              pops_error** err);
pops_series* pops_pop_counting_sequence(const pops_poset* p, int max_size,
                                        const pops_limits* limits, pops_error** err);

/* ---- classification ----------------------------------------------------- */

/* Bitmask: bit i-1 set iff the permutation lies in juxtaposition class Ji. */
unsigned pops_juxtaposition_membership(const pops_perm* p);
/* 1, 0, or -1 on error (empty basis). */
int pops_has_regular_insertion_encoding(const pops_class* c, pops_error** err);

typedef struct pops_class_list pops_class_list;
void pops_class_list_free(pops_class_list* l);
size_t pops_class_list_len(const pops_class_list* l);
pops_class* pops_class_list_get(const pops_class_list* l, size_t i);

pops_class_list* pops_symmetry_orbit(const pops_class* c, pops_error** err);
pops_class* pops_canonical_class(const pops_class* c, pops_error** err);

typedef struct pops_landscape_report {
  int size;
  uint64_t total_posets;
  uint64_t symmetry_classes;
  uint64_t bipartite_symmetry_classes;
} pops_landscape_report;
pops_status pops_landscape(int size, pops_landscape_report* out, pops_error** err);

typedef struct pops_wilf pops_wilf;
void pops_wilf_free(pops_wilf* w);
size_t pops_wilf_num_parts(const pops_wilf* w);
size_t pops_wilf_part_size(const pops_wilf* w, size_t part);
pops_class* pops_wilf_part_class(const pops_wilf* w, size_t part, size_t i);
/* Partition by exact equality of counting sequences up to max_size. */
pops_wilf* pops_wilf_partition(pops_class* const* classes, size_t n, int max_size,
                               const pops_limits* limits, pops_error** err);

/* ---- generating functions ----------------------------------------------- */

typedef struct pops_gf pops_gf;
/* {"kind":"rational","num":[...],"den":[...]} or
 * {"kind":"algebraic","minpoly":[[i,j,c],...],"seed":[...]}. */
pops_gf* pops_gf_parse(const char* json_text, pops_error** err);
pops_gf* pops_gf_load(const char* path, pops_error** err);
void pops_gf_free(pops_gf* gf);
/* Fails (POPS_ERR_INVALID) when a coefficient is not an integer. */
pops_series* pops_gf_series(const pops_gf* gf, int max_index, pops_error** err);

typedef struct pops_match_report {
  int agree;
  int overlap;
  int first_disagreement; /* -1 when agreeing */
  char* lhs;              /* values at the disagreement, or NULL */
  char* rhs;
} pops_match_report;
void pops_match_report_clear(pops_match_report* rep);
/* lhs[n] is compared with rhs[n + shift]; needs 5 overlapping indices. */
pops_status pops_check_sequence_match(const pops_series* lhs, const pops_series* rhs,
                                      int shift, pops_match_report* out, pops_error** err);

/* ---- OEIS --------------------------------------------------------------- */

typedef struct pops_oeis_options {
  const char* cache_dir; /* NULL = $POPS_OEIS_CACHE, else "oeis-cache" */
  int allow_network;     /* live fetching is opt-in */
  int timeout_ms;        /* 0 = default */
} pops_oeis_options;

typedef struct pops_oeis_seq pops_oeis_seq;
void pops_oeis_seq_free(pops_oeis_seq* s);
long pops_oeis_seq_offset(const pops_oeis_seq* s);
size_t pops_oeis_seq_len(const pops_oeis_seq* s);
char* pops_oeis_seq_term(const pops_oeis_seq* s, size_t i);

pops_oeis_seq* pops_oeis_fetch(const char* anum, const pops_oeis_options* opts,
                               pops_error** err);
/* Parses a local b-file ("n a(n)" lines, '#' comments); *offset receives the
 * first index. */
pops_series* pops_series_load_bfile(const char* path, long* offset, pops_error** err);
/* terms[n] vs a(n + shift), the entry's own offset folded in. */
pops_status pops_oeis_compare(const pops_series* terms, const char* anum, int shift,
                              const pops_oeis_options* opts, pops_match_report* out,
                              pops_error** err);

/* ---- canned verification pipelines -------------------------------------- */

/* NULL-terminated array of known ids; do not free. */
const char* const* pops_reproduce_ids(void);
/* Emits one JSON record per check; returns 0 if all pass, 1 if any fail,
 * negative pops_status on setup errors. */
int pops_reproduce(const char* id, const pops_limits* limits,
                   const pops_oeis_options* oeis_opts,
                   void (*line)(const char* record, void* user), void* user,
                   pops_error** err);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* POPS_H */
