#include "pops.h"

#include <cstring>
#include <fstream>
#include <new>
#include <sstream>

#include "pops/catalog.hpp"
#include "pops/classify.hpp"
#include "pops/enumerate.hpp"
#include "pops/genfunc.hpp"
#include "pops/oeis.hpp"
#include "pops/perm_class.hpp"
#include "pops/reproduce.hpp"

struct pops_error {
  pops_status code = POPS_ERR_INTERNAL;
  std::string message;
  int size_reached = -1;
};

struct pops_perm {
  pops::Permutation v;
};
struct pops_poset {
  pops::Poset v;
};
struct pops_class {
  pops::PermClass v;
};
struct pops_series {
  std::vector<pops::BigInt> v;
};
struct pops_class_list {
  std::vector<pops::PermClass> v;
};
struct pops_wilf {
  pops::WilfPartition v;
};
struct pops_gf {
  pops::GenFunc v;
};
struct pops_oeis_seq {
  pops::OeisSequence v;
};

namespace {

void set_error(pops_error** err, pops_status code, const std::string& msg,
               int size_reached = -1) {
  if (!err) return;
  *err = new pops_error{code, msg, size_reached};
}

// Runs fn, translating C++ failures into pops_error codes.
template <typename Fn>
auto guarded(pops_error** err, Fn&& fn) -> decltype(fn()) {
  try {
    return fn();
  } catch (const pops::BudgetExceeded& e) {
    set_error(err, POPS_ERR_BUDGET, e.what(), e.size_reached());
  } catch (const pops::OeisError& e) {
    pops_status code = POPS_ERR_NET;
    if (e.kind() == pops::OeisError::Kind::bad_anum) code = POPS_ERR_INVALID;
    if (e.kind() == pops::OeisError::Kind::malformed) code = POPS_ERR_IO;
    set_error(err, code, e.what());
  } catch (const std::invalid_argument& e) {
    set_error(err, POPS_ERR_INVALID, e.what());
  } catch (const std::exception& e) {
    set_error(err, POPS_ERR_IO, e.what());
  }
  return decltype(fn())();
}

// For status-returning entry points: runs fn and reports the mapped code.
template <typename Fn>
pops_status guarded_status(pops_error** err, Fn&& fn) {
  pops_error* local = nullptr;
  bool ok = guarded(&local, [&] {
    fn();
    return true;
  });
  if (!ok) {
    pops_status code = local ? local->code : POPS_ERR_INTERNAL;
    if (err) *err = local;
    else pops_error_free(local);
    return code;
  }
  return POPS_OK;
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(malloc(s.size() + 1));
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

pops::EnumLimits to_limits(const pops_limits* limits) {
  pops::EnumLimits out;
  if (limits) {
    out.node_budget = limits->node_budget;
    out.max_live = limits->max_live;
    out.workers = limits->workers;
  }
  return out;
}

pops::OeisOptions to_oeis_options(const pops_oeis_options* opts) {
  pops::OeisOptions out;
  if (opts) {
    if (opts->cache_dir) out.cache_dir = opts->cache_dir;
    out.allow_network = opts->allow_network != 0;
    if (opts->timeout_ms > 0) out.timeout_ms = opts->timeout_ms;
  }
  return out;
}

void fill_match_report(const pops::MatchReport& rep, pops_match_report* out) {
  out->agree = rep.agree ? 1 : 0;
  out->overlap = rep.overlap;
  out->first_disagreement = rep.first_disagreement ? *rep.first_disagreement : -1;
  out->lhs = rep.first_disagreement ? dup_string(rep.lhs) : nullptr;
  out->rhs = rep.first_disagreement ? dup_string(rep.rhs) : nullptr;
}

}  // namespace

extern "C" {

pops_status pops_error_code(const pops_error* err) {
  return err ? err->code : POPS_OK;
}
const char* pops_error_message(const pops_error* err) {
  return err ? err->message.c_str() : "";
}
int pops_error_size_reached(const pops_error* err) {
  return err ? err->size_reached : -1;
}
void pops_error_free(pops_error* err) { delete err; }

void pops_string_free(char* s) { free(s); }
const char* pops_version(void) { return "1.0.0"; }

/* ---- permutations ----------------------------------------------------- */

pops_perm* pops_perm_parse(const char* text, pops_error** err) {
  if (!text) {
    set_error(err, POPS_ERR_INVALID, "null permutation text");
    return nullptr;
  }
  return guarded(err, [&] { return new pops_perm{pops::Permutation::parse(text)}; });
}

pops_perm* pops_perm_make(const uint8_t* values, size_t n, pops_error** err) {
  return guarded(err, [&] {
    return new pops_perm{pops::Permutation(std::vector<uint8_t>(values, values + n))};
  });
}

void pops_perm_free(pops_perm* p) { delete p; }
int pops_perm_size(const pops_perm* p) { return p->v.size(); }
char* pops_perm_str(const pops_perm* p) { return dup_string(p->v.str()); }

int pops_perm_contains(const pops_perm* haystack, const pops_perm* pattern) {
  return contains(haystack->v, pattern->v) ? 1 : 0;
}

uint64_t pops_perm_count_occurrences(const pops_perm* haystack, const pops_perm* pattern) {
  return count_occurrences(haystack->v, pattern->v);
}

pops_perm* pops_perm_symmetry(const pops_perm* p, const char* op, pops_error** err) {
  return guarded(err, [&] {
    return new pops_perm{apply_symmetry(p->v, pops::symmetry_from_name(op ? op : ""))};
  });
}

/* ---- posets ------------------------------------------------------------ */

pops_poset* pops_poset_parse(const char* text, pops_error** err) {
  if (!text) {
    set_error(err, POPS_ERR_INVALID, "null poset text");
    return nullptr;
  }
  return guarded(err, [&] { return new pops_poset{pops::Poset::parse(text)}; });
}

pops_poset* pops_poset_make(int size, const int* pairs, size_t npairs, pops_error** err) {
  return guarded(err, [&] {
    std::vector<std::pair<int, int>> rel;
    for (size_t i = 0; i < npairs; ++i) rel.emplace_back(pairs[2 * i], pairs[2 * i + 1]);
    return new pops_poset{pops::Poset(size, rel)};
  });
}

pops_poset* pops_poset_zigzag(const int* labels, size_t n, pops_error** err) {
  return guarded(err, [&] {
    return new pops_poset{pops::zigzag_poset(std::vector<int>(labels, labels + n))};
  });
}

void pops_poset_free(pops_poset* p) { delete p; }
int pops_poset_size(const pops_poset* p) { return p->v.size(); }
int pops_poset_less(const pops_poset* p, int a, int b) {
  if (a < 1 || b < 1 || a > p->v.size() || b > p->v.size()) return 0;
  return p->v.less(a, b) ? 1 : 0;
}
int pops_poset_height(const pops_poset* p) { return p->v.height(); }
char* pops_poset_str(const pops_poset* p) { return dup_string(p->v.str()); }
char* pops_poset_json(const pops_poset* p) { return dup_string(p->v.json()); }

pops_poset* pops_poset_transform(const pops_poset* p, const char* op, pops_error** err) {
  return guarded(err, [&]() -> pops_poset* {
    std::string name = op ? op : "";
    pops::PosetTransform t;
    if (name == "complement-labels") t = pops::PosetTransform::complement_labels;
    else if (name == "reverse-relations") t = pops::PosetTransform::reverse_relations;
    else throw std::invalid_argument("unknown poset transform: " + name);
    return new pops_poset{transform_poset(p->v, t)};
  });
}

uint64_t pops_poset_linear_extension_count(const pops_poset* p) {
  return p->v.linear_extension_count();
}

pops_status pops_poset_enumerate(int size, void (*visit)(const pops_poset*, void*),
                                 void* user, pops_error** err) {
  return guarded_status(err, [&] {
    pops::for_each_poset(size, [&](const pops::Poset& p) {
      pops_poset handle{p};
      visit(&handle, user);
    });
  });
}

/* ---- permutation classes ----------------------------------------------- */

pops_class* pops_class_parse(const char* text, pops_error** err) {
  if (!text) {
    set_error(err, POPS_ERR_INVALID, "null class text");
    return nullptr;
  }
  return guarded(err, [&] { return new pops_class{pops::PermClass::parse(text)}; });
}

pops_class* pops_class_load(const char* path, pops_error** err) {
  return guarded(err, [&]() -> pops_class* {
    std::ifstream in(path);
    if (!in) throw std::runtime_error(std::string("cannot open basis file: ") + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return new pops_class{pops::PermClass::parse(buf.str())};
  });
}

void pops_class_free(pops_class* c) { delete c; }
size_t pops_class_basis_size(const pops_class* c) { return c->v.basis_size(); }

pops_perm* pops_class_basis_elem(const pops_class* c, size_t i) {
  if (i >= c->v.basis_size()) return nullptr;
  return new pops_perm{c->v.basis()[i]};
}

char* pops_class_str(const pops_class* c) { return dup_string(c->v.str()); }
int pops_class_avoids(const pops_class* c, const pops_perm* p) {
  return c->v.avoids(p->v) ? 1 : 0;
}
int pops_class_equal(const pops_class* a, const pops_class* b) {
  return a->v == b->v ? 1 : 0;
}

int pops_pop_contains(const pops_perm* p, const pops_poset* poset) {
  return pop_contains(p->v, poset->v) ? 1 : 0;
}

pops_class* pops_basis_of_pop(const pops_poset* p, pops_error** err) {
  return guarded(err, [&] { return new pops_class{pops::basis_of_pop(p->v)}; });
}

pops_status pops_pop_of_class(const pops_class* c, pops_poset** out, pops_error** err) {
  *out = nullptr;
  return guarded_status(err, [&] {
    if (auto p = pops::pop_of_class(c->v)) *out = new pops_poset{*p};
  });
}

/* ---- exact enumeration -------------------------------------------------- */

void pops_series_free(pops_series* s) { delete s; }
size_t pops_series_len(const pops_series* s) { return s->v.size(); }
char* pops_series_term(const pops_series* s, size_t i) {
  if (i >= s->v.size()) return nullptr;
  return dup_string(s->v[i].get_str());
}
char* pops_series_bfile(const pops_series* s) {
  return dup_string(pops::CountingSequence{s->v}.bfile());
}

char* pops_count_avoiders(const pops_class* c, int n, const pops_limits* limits,
                          pops_error** err) {
  return guarded(err, [&]() -> char* {
    return dup_string(pops::count_avoiders(c->v, n, to_limits(limits)).get_str());
  });
}

pops_series* pops_counting_sequence(const pops_class* c, int max_size,
                                    const pops_limits* limits, pops_error** err) {
  return guarded(err, [&] {
    return new pops_series{pops::counting_sequence(c->v, max_size, to_limits(limits)).terms};
  });
}

char* pops_count_pop_avoiders(const pops_poset* p, int n, const pops_limits* limits,
                              pops_error** err) {
  return guarded(err, [&]() -> char* {
    return dup_string(pops::count_pop_avoiders(p->v, n, to_limits(limits)).get_str());
  });
}

pops_series* pops_pop_counting_sequence(const pops_poset* p, int max_size,
                                        const pops_limits* limits, pops_error** err) {
  return guarded(err, [&] {
    return new pops_series{
        pops::pop_counting_sequence(p->v, max_size, to_limits(limits)).terms};
  });
}

/* ---- classification ----------------------------------------------------- */

unsigned pops_juxtaposition_membership(const pops_perm* p) {
  return pops::juxtaposition_membership(p->v);
}

int pops_has_regular_insertion_encoding(const pops_class* c, pops_error** err) {
  int answer = -1;
  pops_status rc = guarded_status(err, [&] {
    answer = pops::has_regular_insertion_encoding(c->v) ? 1 : 0;
  });
  return rc == POPS_OK ? answer : -1;
}

void pops_class_list_free(pops_class_list* l) { delete l; }
size_t pops_class_list_len(const pops_class_list* l) { return l->v.size(); }
pops_class* pops_class_list_get(const pops_class_list* l, size_t i) {
  if (i >= l->v.size()) return nullptr;
  return new pops_class{l->v[i]};
}

pops_class_list* pops_symmetry_orbit(const pops_class* c, pops_error** err) {
  return guarded(err, [&] { return new pops_class_list{pops::symmetry_orbit(c->v)}; });
}

pops_class* pops_canonical_class(const pops_class* c, pops_error** err) {
  return guarded(err, [&] { return new pops_class{pops::canonical_class(c->v)}; });
}

pops_status pops_landscape(int size, pops_landscape_report* out, pops_error** err) {
  return guarded_status(err, [&] {
    pops::LandscapeReport rep = pops::pop_landscape(size);
    out->size = rep.size;
    out->total_posets = rep.total_posets;
    out->symmetry_classes = rep.symmetry_classes;
    out->bipartite_symmetry_classes = rep.bipartite_symmetry_classes;
  });
}

void pops_wilf_free(pops_wilf* w) { delete w; }
size_t pops_wilf_num_parts(const pops_wilf* w) { return w->v.parts.size(); }
size_t pops_wilf_part_size(const pops_wilf* w, size_t part) {
  if (part >= w->v.parts.size()) return 0;
  return w->v.parts[part].size();
}
pops_class* pops_wilf_part_class(const pops_wilf* w, size_t part, size_t i) {
  if (part >= w->v.parts.size() || i >= w->v.parts[part].size()) return nullptr;
  return new pops_class{w->v.parts[part][i]};
}

pops_wilf* pops_wilf_partition(pops_class* const* classes, size_t n, int max_size,
                               const pops_limits* limits, pops_error** err) {
  return guarded(err, [&] {
    std::vector<pops::PermClass> input;
    input.reserve(n);
    for (size_t i = 0; i < n; ++i) input.push_back(classes[i]->v);
    return new pops_wilf{pops::wilf_partition(input, max_size, to_limits(limits))};
  });
}

/* ---- generating functions ----------------------------------------------- */

pops_gf* pops_gf_parse(const char* json_text, pops_error** err) {
  if (!json_text) {
    set_error(err, POPS_ERR_INVALID, "null generating-function text");
    return nullptr;
  }
  return guarded(err, [&] { return new pops_gf{pops::parse_gf(json_text)}; });
}

pops_gf* pops_gf_load(const char* path, pops_error** err) {
  return guarded(err, [&] { return new pops_gf{pops::load_gf(path)}; });
}

void pops_gf_free(pops_gf* gf) { delete gf; }

pops_series* pops_gf_series(const pops_gf* gf, int max_index, pops_error** err) {
  return guarded(err, [&] {
    return new pops_series{pops::to_bigints(gf->v.series(max_index))};
  });
}

void pops_match_report_clear(pops_match_report* rep) {
  if (!rep) return;
  free(rep->lhs);
  free(rep->rhs);
  rep->lhs = rep->rhs = nullptr;
}

pops_status pops_check_sequence_match(const pops_series* lhs, const pops_series* rhs,
                                      int shift, pops_match_report* out,
                                      pops_error** err) {
  return guarded_status(err, [&] {
    std::vector<pops::BigRat> coeffs;
    for (const auto& t : lhs->v) coeffs.emplace_back(t);
    fill_match_report(pops::check_sequence_match(coeffs, rhs->v, shift), out);
  });
}

/* ---- OEIS --------------------------------------------------------------- */

void pops_oeis_seq_free(pops_oeis_seq* s) { delete s; }
long pops_oeis_seq_offset(const pops_oeis_seq* s) { return s->v.offset; }
size_t pops_oeis_seq_len(const pops_oeis_seq* s) { return s->v.terms.size(); }
char* pops_oeis_seq_term(const pops_oeis_seq* s, size_t i) {
  if (i >= s->v.terms.size()) return nullptr;
  return dup_string(s->v.terms[i].get_str());
}

pops_oeis_seq* pops_oeis_fetch(const char* anum, const pops_oeis_options* opts,
                               pops_error** err) {
  return guarded(err, [&] {
    return new pops_oeis_seq{pops::fetch_sequence(anum ? anum : "", to_oeis_options(opts))};
  });
}

pops_series* pops_series_load_bfile(const char* path, long* offset, pops_error** err) {
  return guarded(err, [&]() -> pops_series* {
    std::ifstream in(path);
    if (!in) throw std::runtime_error(std::string("cannot open b-file: ") + path);
    std::stringstream buf;
    buf << in.rdbuf();
    pops::OeisSequence seq = pops::parse_bfile(path, buf.str());
    if (offset) *offset = seq.offset;
    return new pops_series{std::move(seq.terms)};
  });
}

pops_status pops_oeis_compare(const pops_series* terms, const char* anum, int shift,
                              const pops_oeis_options* opts, pops_match_report* out,
                              pops_error** err) {
  return guarded_status(err, [&] {
    fill_match_report(
        pops::compare_with_oeis(terms->v, anum ? anum : "", shift, to_oeis_options(opts)),
        out);
  });
}

/* ---- canned verification pipelines -------------------------------------- */

const char* const* pops_reproduce_ids(void) {
  static std::vector<std::string> ids = pops::reproduce_ids();
  static std::vector<const char*> ptrs = [] {
    std::vector<const char*> out;
    for (const auto& id : ids) out.push_back(id.c_str());
    out.push_back(nullptr);
    return out;
  }();
  return ptrs.data();
}

int pops_reproduce(const char* id, const pops_limits* limits,
                   const pops_oeis_options* oeis_opts,
                   void (*line)(const char*, void*), void* user, pops_error** err) {
  pops_error* local = nullptr;
  int rc = -1;
  bool ok = guarded(&local, [&] {
    rc = pops::reproduce(id ? id : "", to_limits(limits), to_oeis_options(oeis_opts),
                         [&](const std::string& record) {
                           if (line) line(record.c_str(), user);
                         });
    return true;
  });
  if (!ok) {
    pops_status code = local ? local->code : POPS_ERR_INTERNAL;
    if (err) *err = local;
    else pops_error_free(local);
    return -static_cast<int>(code);
  }
  return rc;
}

} /* extern "C" */
