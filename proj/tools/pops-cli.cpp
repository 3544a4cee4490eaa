// pops CLI: every library capability behind one executable, built against the
// C API only. Machine-readable records go to stdout (JSON lines, or b-file
// lines for counts); human summaries go to stderr; --pretty switches stdout
// to aligned text.
//
// Exit codes: 0 success/agreement, 1 mathematical mismatch (a result, not a
// failure), 2 usage error, 3 resource budget exceeded, 4 I/O or network.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "pops.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;
constexpr int kExitIo = 4;

int exit_code_for(const pops_error* err) {
  switch (pops_error_code(err)) {
    case POPS_OK: return kExitOk;
    case POPS_ERR_INVALID: return kExitUsage;
    case POPS_ERR_BUDGET: return kExitBudget;
    case POPS_ERR_IO:
    case POPS_ERR_NET: return kExitIo;
    default: return kExitIo;
  }
}

// Reports err on stderr and returns the matching exit code.
int fail(pops_error* err) {
  std::cerr << "error: " << pops_error_message(err) << "\n";
  int rc = exit_code_for(err);
  pops_error_free(err);
  return rc;
}

struct StringGuard {
  char* s = nullptr;
  ~StringGuard() { pops_string_free(s); }
  std::string str() const { return s ? s : ""; }
};

struct Options {
  std::string basis, basis_file;
  std::string poset, poset_file;
  std::string gf_file, classes_file, seq_file, anum, table_id, cache_dir;
  int max_size = 0;
  int shift = 0;
  int size = 0;
  bool fetch = false;
  bool pretty = false;
  int timeout_ms = 0;
  pops_limits limits{0, 0, 0};
};

pops_limits* limits_ptr(Options& o) { return &o.limits; }

pops_oeis_options oeis_options(const Options& o) {
  pops_oeis_options opts{};
  opts.cache_dir = o.cache_dir.empty() ? nullptr : o.cache_dir.c_str();
  opts.allow_network = o.fetch ? 1 : 0;
  opts.timeout_ms = o.timeout_ms;
  return opts;
}

// Inline spec and file are mutually exclusive; exactly one must be present.
int resolve_source(const std::string& inline_spec, const std::string& file,
                   const char* what, std::string* out) {
  if (!inline_spec.empty() && !file.empty()) {
    std::cerr << "error: give " << what << " inline or as a file, not both\n";
    return kExitUsage;
  }
  if (inline_spec.empty() && file.empty()) {
    std::cerr << "error: missing " << what << "\n";
    return kExitUsage;
  }
  if (!inline_spec.empty()) {
    *out = inline_spec;
    return kExitOk;
  }
  std::ifstream in(file);
  if (!in) {
    std::cerr << "error: cannot open " << file << "\n";
    return kExitIo;
  }
  std::stringstream buf;
  buf << in.rdbuf();
  *out = buf.str();
  return kExitOk;
}

pops_class* parse_class_arg(Options& o, int* rc) {
  std::string text;
  *rc = resolve_source(o.basis, o.basis_file, "--basis", &text);
  if (*rc != kExitOk) return nullptr;
  pops_error* err = nullptr;
  pops_class* c = pops_class_parse(text.c_str(), &err);
  if (!c) *rc = fail(err);
  return c;
}

pops_poset* parse_poset_arg(Options& o, int* rc) {
  std::string text;
  *rc = resolve_source(o.poset, o.poset_file, "--poset", &text);
  if (*rc != kExitOk) return nullptr;
  pops_error* err = nullptr;
  pops_poset* p = pops_poset_parse(text.c_str(), &err);
  if (!p) *rc = fail(err);
  return p;
}

void emit(const nlohmann::json& record) { std::cout << record.dump() << "\n"; }

int cmd_basis(Options& o) {
  int rc;
  pops_poset* p = parse_poset_arg(o, &rc);
  if (!p) return rc;
  pops_error* err = nullptr;
  pops_class* c = pops_basis_of_pop(p, &err);
  pops_poset_free(p);
  if (!c) return fail(err);
  for (size_t i = 0; i < pops_class_basis_size(c); ++i) {
    pops_perm* beta = pops_class_basis_elem(c, i);
    StringGuard s{pops_perm_str(beta)};
    std::cout << s.str() << "\n";
    pops_perm_free(beta);
  }
  std::cerr << "basis of " << pops_class_basis_size(c) << " permutation(s)\n";
  pops_class_free(c);
  return kExitOk;
}

int cmd_is_pop(Options& o) {
  int rc;
  pops_class* c = parse_class_arg(o, &rc);
  if (!c) return rc;
  pops_poset* p = nullptr;
  pops_error* err = nullptr;
  if (pops_pop_of_class(c, &p, &err) != POPS_OK) {
    pops_class_free(c);
    return fail(err);
  }
  pops_class_free(c);
  if (!p) {
    std::cout << "not-a-pop\n";
    return kExitMismatch;
  }
  StringGuard s{pops_poset_str(p)};
  std::cout << s.str() << "\n";
  pops_poset_free(p);
  return kExitOk;
}

int cmd_rie(Options& o) {
  const bool have_poset = !o.poset.empty() || !o.poset_file.empty();
  const bool have_basis = !o.basis.empty() || !o.basis_file.empty();
  if (have_poset == have_basis) {
    std::cerr << "error: give exactly one of --basis / --poset\n";
    return kExitUsage;
  }
  pops_error* err = nullptr;
  nlohmann::json record;
  int rie;
  if (have_poset) {
    int rc;
    pops_poset* p = parse_poset_arg(o, &rc);
    if (!p) return rc;
    pops_class* c = pops_basis_of_pop(p, &err);
    if (!c) {
      pops_poset_free(p);
      return fail(err);
    }
    rie = pops_has_regular_insertion_encoding(c, &err);
    record["bipartite"] = pops_poset_height(p) <= 2;
    pops_class_free(c);
    pops_poset_free(p);
  } else {
    int rc;
    pops_class* c = parse_class_arg(o, &rc);
    if (!c) return rc;
    rie = pops_has_regular_insertion_encoding(c, &err);
    pops_class_free(c);
  }
  if (rie < 0) return fail(err);
  record["regular_insertion_encoding"] = rie == 1;
  if (o.pretty) {
    std::cout << (rie == 1 ? "regular insertion encoding: yes"
                           : "regular insertion encoding: no")
              << "\n";
  } else {
    emit(record);
  }
  return kExitOk;
}

int cmd_count(Options& o) {
  const bool have_poset = !o.poset.empty() || !o.poset_file.empty();
  const bool have_basis = !o.basis.empty() || !o.basis_file.empty();
  if (have_poset == have_basis) {
    std::cerr << "error: give exactly one of --basis / --poset\n";
    return kExitUsage;
  }
  pops_error* err = nullptr;
  pops_series* seq = nullptr;
  int rc = kExitOk;
  auto run = [&](int max_size, pops_error** e) {
    if (have_basis) {
      pops_class* c = parse_class_arg(o, &rc);
      if (!c) return static_cast<pops_series*>(nullptr);
      pops_series* s = pops_counting_sequence(c, max_size, limits_ptr(o), e);
      pops_class_free(c);
      return s;
    }
    pops_poset* p = parse_poset_arg(o, &rc);
    if (!p) return static_cast<pops_series*>(nullptr);
    pops_series* s = pops_pop_counting_sequence(p, max_size, limits_ptr(o), e);
    pops_poset_free(p);
    return s;
  };
  seq = run(o.max_size, &err);
  if (!seq && rc != kExitOk) return rc;
  if (!seq) {
    if (pops_error_code(err) == POPS_ERR_BUDGET && pops_error_size_reached(err) >= 0) {
      // The completed sizes are still available within the same budget.
      const int reached = pops_error_size_reached(err);
      std::cerr << "error: " << pops_error_message(err) << "\n";
      pops_error_free(err);
      err = nullptr;
      seq = run(reached, &err);
      if (seq) {
        StringGuard text{pops_series_bfile(seq)};
        std::cout << text.str();
        pops_series_free(seq);
      }
      return kExitBudget;
    }
    return fail(err);
  }
  StringGuard text{pops_series_bfile(seq)};
  std::cout << text.str();
  pops_series_free(seq);
  return kExitOk;
}

int cmd_symmetries(Options& o) {
  int rc;
  pops_class* c = parse_class_arg(o, &rc);
  if (!c) return rc;
  pops_error* err = nullptr;
  pops_class_list* orbit = pops_symmetry_orbit(c, &err);
  if (!orbit) {
    pops_class_free(c);
    return fail(err);
  }
  pops_class* canon = pops_canonical_class(c, &err);
  pops_class_free(c);
  if (!canon) {
    pops_class_list_free(orbit);
    return fail(err);
  }
  StringGuard canon_str{pops_class_str(canon)};
  for (size_t i = 0; i < pops_class_list_len(orbit); ++i) {
    pops_class* member = pops_class_list_get(orbit, i);
    StringGuard s{pops_class_str(member)};
    if (o.pretty) {
      std::cout << s.str() << (pops_class_equal(member, canon) ? "  (canonical)" : "")
                << "\n";
    } else {
      emit({{"member", s.str()}, {"canonical", pops_class_equal(member, canon) == 1}});
    }
    pops_class_free(member);
  }
  std::cerr << "orbit size " << pops_class_list_len(orbit) << ", canonical "
            << canon_str.str() << "\n";
  pops_class_list_free(orbit);
  pops_class_free(canon);
  return kExitOk;
}

int cmd_landscape(Options& o) {
  pops_landscape_report rep{};
  pops_error* err = nullptr;
  if (pops_landscape(o.size, &rep, &err) != POPS_OK) return fail(err);
  if (o.pretty) {
    std::cout << "size " << rep.size << ": " << rep.total_posets << " posets, "
              << rep.symmetry_classes << " symmetry classes, "
              << rep.bipartite_symmetry_classes << " bipartite symmetry classes\n";
  } else {
    emit({{"size", rep.size},
          {"total_posets", rep.total_posets},
          {"symmetry_classes", rep.symmetry_classes},
          {"bipartite_symmetry_classes", rep.bipartite_symmetry_classes}});
  }
  return kExitOk;
}

int cmd_wilf(Options& o) {
  std::ifstream in(o.classes_file);
  if (!in) {
    std::cerr << "error: cannot open " << o.classes_file << "\n";
    return kExitIo;
  }
  std::vector<pops_class*> classes;
  std::string line;
  int rc = kExitOk;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    pops_error* err = nullptr;
    pops_class* c = pops_class_parse(line.c_str(), &err);
    if (!c) {
      rc = fail(err);
      break;
    }
    classes.push_back(c);
  }
  if (rc == kExitOk) {
    pops_error* err = nullptr;
    pops_wilf* w = pops_wilf_partition(classes.data(), classes.size(), o.max_size,
                                       limits_ptr(o), &err);
    if (!w) {
      rc = fail(err);
    } else {
      for (size_t part = 0; part < pops_wilf_num_parts(w); ++part) {
        // Parts list their members by canonical basis string.
        nlohmann::json members = nlohmann::json::array();
        for (size_t i = 0; i < pops_wilf_part_size(w, part); ++i) {
          pops_class* c = pops_wilf_part_class(w, part, i);
          pops_class* canon = pops_canonical_class(c, nullptr);
          StringGuard s{pops_class_str(canon ? canon : c)};
          members.push_back(s.str());
          pops_class_free(canon);
          pops_class_free(c);
        }
        if (o.pretty) {
          std::cout << "part " << part << ":";
          for (const auto& m : members) std::cout << "  " << m.get<std::string>();
          std::cout << "\n";
        } else {
          emit({{"part", part}, {"classes", members}, {"horizon", o.max_size}});
        }
      }
      std::cerr << pops_wilf_num_parts(w) << " part(s) at horizon " << o.max_size << "\n";
      pops_wilf_free(w);
    }
  }
  for (pops_class* c : classes) pops_class_free(c);
  return rc;
}

int cmd_gf_check(Options& o) {
  int rc;
  pops_class* c = parse_class_arg(o, &rc);
  if (!c) return rc;
  pops_error* err = nullptr;
  pops_gf* gf = pops_gf_load(o.gf_file.c_str(), &err);
  if (!gf) {
    pops_class_free(c);
    return fail(err);
  }
  pops_series* series = pops_gf_series(gf, o.max_size, &err);
  pops_gf_free(gf);
  if (!series) {
    pops_class_free(c);
    return fail(err);
  }
  pops_series* counts = pops_counting_sequence(c, o.max_size, limits_ptr(o), &err);
  pops_class_free(c);
  if (!counts) {
    pops_series_free(series);
    return fail(err);
  }
  pops_match_report rep{};
  if (pops_check_sequence_match(series, counts, o.shift, &rep, &err) != POPS_OK) {
    pops_series_free(series);
    pops_series_free(counts);
    return fail(err);
  }
  nlohmann::json record{{"agree", rep.agree == 1},
                        {"overlap", rep.overlap},
                        {"shift", o.shift},
                        {"max_size", o.max_size}};
  if (rep.agree != 1 && rep.first_disagreement >= 0) {
    record["first_disagreement"] = rep.first_disagreement;
    record["series"] = rep.lhs ? rep.lhs : "";
    record["counts"] = rep.rhs ? rep.rhs : "";
  }
  if (o.pretty) {
    std::cout << (rep.agree == 1 ? "agree" : "disagree") << "\n";
  } else {
    emit(record);
  }
  int code = rep.agree == 1 ? kExitOk : kExitMismatch;
  pops_match_report_clear(&rep);
  pops_series_free(series);
  pops_series_free(counts);
  return code;
}

int cmd_oeis(Options& o) {
  pops_error* err = nullptr;
  long offset = 0;
  pops_series* terms = pops_series_load_bfile(o.seq_file.c_str(), &offset, &err);
  if (!terms) return fail(err);
  pops_oeis_options opts = oeis_options(o);
  pops_match_report rep{};
  // The local file's own offset folds into the shift.
  pops_status rc = pops_oeis_compare(terms, o.anum.c_str(), o.shift + static_cast<int>(offset),
                                     &opts, &rep, &err);
  pops_series_free(terms);
  if (rc != POPS_OK) return fail(err);
  nlohmann::json record{{"anum", o.anum},
                        {"agree", rep.agree == 1},
                        {"overlap", rep.overlap},
                        {"shift", o.shift}};
  if (rep.agree != 1 && rep.first_disagreement >= 0) {
    record["first_disagreement"] = rep.first_disagreement;
    record["sequence"] = rep.lhs ? rep.lhs : "";
    record["oeis"] = rep.rhs ? rep.rhs : "";
  }
  if (o.pretty) {
    std::cout << (rep.agree == 1 ? "agree" : "disagree") << "\n";
  } else {
    emit(record);
  }
  int code = rep.agree == 1 ? kExitOk : kExitMismatch;
  pops_match_report_clear(&rep);
  return code;
}

struct ReproducePrinter {
  bool pretty = false;
  int checks = 0;
};

void reproduce_line(const char* record, void* user) {
  auto* printer = static_cast<ReproducePrinter*>(user);
  ++printer->checks;
  if (!printer->pretty) {
    std::cout << record << "\n";
    return;
  }
  auto j = nlohmann::json::parse(record, nullptr, false);
  if (j.is_discarded()) {
    std::cout << record << "\n";
    return;
  }
  std::cout << j.value("status", "?") << " " << j.value("id", "") << " "
            << j.value("check", "") << "\n";
}

int cmd_reproduce(Options& o) {
  ReproducePrinter printer{o.pretty};
  pops_error* err = nullptr;
  pops_oeis_options opts = oeis_options(o);
  int rc = pops_reproduce(o.table_id.c_str(), limits_ptr(o), &opts, reproduce_line,
                          &printer, &err);
  if (rc < 0) return fail(err);
  std::cerr << printer.checks << " check(s), " << (rc == 0 ? "all passed" : "FAILURES")
            << "\n";
  return rc == 0 ? kExitOk : kExitMismatch;
}

void add_limit_flags(CLI::App* cmd, Options& o) {
  cmd->add_option("--budget", o.limits.node_budget, "node budget (0 = unlimited)");
  cmd->add_option("--workers", o.limits.workers, "worker threads (0 = auto)");
  cmd->add_option("--max-live", o.limits.max_live,
                  "materialization cap before depth-first counting");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"partially ordered patterns: bases, detection, counting, classification"};
  app.require_subcommand(1);
  Options o;

  auto* basis = app.add_subcommand("basis", "basis of the class avoiding a POP");
  basis->add_option("--poset", o.poset, "poset spec, e.g. \"4: 2<3, 3<1, 1<4\"");
  basis->add_option("--poset-file", o.poset_file, "file with a poset spec");
  basis->callback([&] { std::exit(cmd_basis(o)); });

  auto* ispop = app.add_subcommand("is-pop", "decide whether a class is a POP class");
  ispop->add_option("--basis", o.basis, "basis spec, e.g. \"132;231\"");
  ispop->add_option("--basis-file", o.basis_file, "file with one permutation per line");
  ispop->callback([&] { std::exit(cmd_is_pop(o)); });

  auto* rie = app.add_subcommand("rie", "regular-insertion-encoding test");
  rie->add_option("--basis", o.basis, "basis spec");
  rie->add_option("--basis-file", o.basis_file, "basis file");
  rie->add_option("--poset", o.poset, "poset spec (also reports bipartiteness)");
  rie->add_option("--poset-file", o.poset_file, "poset file");
  rie->add_flag("--pretty", o.pretty, "human-readable output");
  rie->callback([&] { std::exit(cmd_rie(o)); });

  auto* count = app.add_subcommand("count", "exact counting sequence (b-file lines)");
  count->add_option("--basis", o.basis, "basis spec");
  count->add_option("--basis-file", o.basis_file, "basis file");
  count->add_option("--poset", o.poset, "poset spec (counts POP avoiders directly)");
  count->add_option("--poset-file", o.poset_file, "poset file");
  count->add_option("--max-size", o.max_size, "largest size to count")->required();
  add_limit_flags(count, o);
  count->callback([&] { std::exit(cmd_count(o)); });

  auto* sym = app.add_subcommand("symmetries", "symmetry orbit and canonical member");
  sym->add_option("--basis", o.basis, "basis spec");
  sym->add_option("--basis-file", o.basis_file, "basis file");
  sym->add_flag("--pretty", o.pretty, "human-readable output");
  sym->callback([&] { std::exit(cmd_symmetries(o)); });

  auto* land = app.add_subcommand("landscape", "POP landscape census for one size");
  land->add_option("--size", o.size, "poset size (1..5)")->required();
  land->add_flag("--pretty", o.pretty, "human-readable output");
  land->callback([&] { std::exit(cmd_landscape(o)); });

  auto* wilf = app.add_subcommand("wilf", "partition classes by counting sequence");
  wilf->add_option("--classes", o.classes_file, "file, one basis spec per line")
      ->required();
  wilf->add_option("--max-size", o.max_size, "horizon")->required();
  wilf->add_flag("--pretty", o.pretty, "human-readable output");
  add_limit_flags(wilf, o);
  wilf->callback([&] { std::exit(cmd_wilf(o)); });

  auto* gfc = app.add_subcommand("gf-check", "generating-function series vs counts");
  gfc->add_option("--gf", o.gf_file, "generating-function fixture (JSON)")->required();
  gfc->add_option("--basis", o.basis, "basis spec");
  gfc->add_option("--basis-file", o.basis_file, "basis file");
  gfc->add_option("--max-size", o.max_size, "largest size to compare")->required();
  gfc->add_option("--shift", o.shift, "series index n maps to count n+shift");
  gfc->add_flag("--pretty", o.pretty, "human-readable output");
  add_limit_flags(gfc, o);
  gfc->callback([&] { std::exit(cmd_gf_check(o)); });

  auto* oeis = app.add_subcommand("oeis", "compare a local b-file with an OEIS entry");
  oeis->add_option("--anum", o.anum, "OEIS id, e.g. A001035")->required();
  oeis->add_option("--seq", o.seq_file, "local b-file with the sequence")->required();
  oeis->add_option("--shift", o.shift, "sequence index n maps to OEIS index n+shift");
  oeis->add_flag("--fetch", o.fetch, "allow a live fetch on cache miss");
  oeis->add_option("--cache-dir", o.cache_dir, "b-file cache ($POPS_OEIS_CACHE)");
  oeis->add_option("--timeout", o.timeout_ms, "fetch timeout in milliseconds");
  oeis->add_flag("--pretty", o.pretty, "human-readable output");
  oeis->callback([&] { std::exit(cmd_oeis(o)); });

  auto* rep = app.add_subcommand("reproduce", "canned verification pipelines");
  rep->add_option("table-id", o.table_id, "pipeline id (see --list)");
  rep->add_flag("--pretty", o.pretty, "PASS/FAIL lines instead of JSON records");
  rep->add_option("--cache-dir", o.cache_dir, "OEIS b-file cache directory");
  rep->add_flag("--fetch", o.fetch, "allow live OEIS fetches");
  add_limit_flags(rep, o);
  bool list_ids = false;
  rep->add_flag("--list", list_ids, "list pipeline ids");
  rep->callback([&] {
    if (list_ids) {
      for (const char* const* id = pops_reproduce_ids(); *id; ++id) {
        std::cout << *id << "\n";
      }
      std::exit(kExitOk);
    }
    if (o.table_id.empty()) {
      std::cerr << "error: missing table-id\n";
      std::exit(kExitUsage);
    }
    std::exit(cmd_reproduce(o));
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {  // --help
      app.exit(e);
      return kExitOk;
    }
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitOk;
}
