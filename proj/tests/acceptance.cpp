// Acceptance suite: one numbered check per published target, each printing a
// PASS/FAIL line. Run with no arguments for everything, or pass criterion
// numbers (e.g. "pops_acceptance 4 9"). Needs POPS_OEIS_CACHE pointing at the
// shipped b-file fixtures.

#include <algorithm>
#include <cstdlib>
#include <cstring>
#include <iostream>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "pops/catalog.hpp"
#include "pops/classify.hpp"
#include "pops/genfunc.hpp"
#include "pops/oeis.hpp"

using namespace pops;

namespace {

int failures = 0;
EnumLimits limits{};  // defaults; workers from hardware

void report(int criterion, const std::string& what, bool ok,
            const std::string& detail = "") {
  std::cout << (ok ? "PASS" : "FAIL") << " criterion-" << criterion << ": " << what;
  if (!detail.empty()) std::cout << " [" << detail << "]";
  std::cout << std::endl;
  if (!ok) ++failures;
}

CountingSequence seq_of(const PermClass& c, int N) {
  return counting_sequence(c, N, limits);
}

bool series_equals_counts(const AlgebraicGF& gf, const CountingSequence& counts, int N,
                          int shift) {
  auto series = algebraic_series(gf, N);
  return check_sequence_match(series, counts, shift).agree;
}

// ---- criterion 1: worked basis examples ------------------------------------

void criterion1() {
  report(1, "chain 2<3<1<4 has basis {3124}",
         basis_of_pop(catalog::chain_2314()) == PermClass::parse("3124"));
  report(1, "the five-element example has the six listed basis elements",
         basis_of_pop(catalog::five_example_poset()) ==
             PermClass::parse("23145;23154;24135;24153;25134;25143"));
}

// ---- criterion 2: landscape census ----------------------------------------

void criterion2() {
  const uint64_t totals[] = {0, 1, 3, 19, 219, 4231};
  const uint64_t syms[] = {0, 1, 2, 7, 64, 1068};
  for (int k = 1; k <= 5; ++k) {
    LandscapeReport rep = pop_landscape(k);
    std::ostringstream detail;
    detail << rep.total_posets << " posets, " << rep.symmetry_classes
           << " symmetry classes, " << rep.bipartite_symmetry_classes << " bipartite";
    bool ok = rep.total_posets == totals[k] && rep.symmetry_classes == syms[k];
    if (k == 5) ok = ok && rep.bipartite_symmetry_classes == 223;
    report(2, "landscape census at size " + std::to_string(k), ok, detail.str());
  }
}

// ---- criterion 3: bipartite iff regular insertion encoding -----------------

void criterion3() {
  for (int k : {4, 5}) {
    uint64_t posets = 0, mismatched = 0;
    for_each_poset(k, [&](const Poset& p) {
      ++posets;
      if ((p.height() <= 2) != has_regular_insertion_encoding(basis_of_pop(p))) {
        ++mismatched;
      }
    });
    report(3,
           "height <= 2 iff regular insertion encoding over all size-" +
               std::to_string(k) + " posets",
           mismatched == 0,
           std::to_string(posets) + " posets, " + std::to_string(mismatched) +
               " mismatched");
  }
}

// ---- criterion 4: the refuted conjecture -----------------------------------

void criterion4() {
  CountingSequence counts = seq_of(catalog::conjecture_class(1), 10);
  report(4, "size-10 count is 443592", counts.terms[10] == 443592,
         counts.terms[10].get_str());
  MatchReport rep = compare_with_oeis(counts, "A216879", 0);
  report(4, "cached A216879 disagrees exactly at 443592 vs 443594",
         !rep.agree && rep.first_disagreement && *rep.first_disagreement == 10 &&
             rep.lhs == "443592" && rep.rhs == "443594",
         rep.agree ? "agreed" : rep.lhs + " vs " + rep.rhs);
  report(4, "quartic minimal-polynomial series matches counts to size 10",
         series_equals_counts(catalog::conjecture_gf(1), counts, 10, 0));
}

// ---- criteria 5-8: the confirmed conjectures --------------------------------

void series_criterion(int crit, int which, const std::string& name) {
  CountingSequence counts = seq_of(catalog::conjecture_class(which), 10);
  report(crit, name + " series matches counts to size 10",
         series_equals_counts(catalog::conjecture_gf(which), counts, 10, 0));
}

void table_criterion(int crit, const std::vector<PermClass>& classes, int N,
                     const std::string& name) {
  WilfPartition parts = wilf_partition(classes, N, limits);
  report(crit, name, parts.parts.size() == 1,
         std::to_string(classes.size()) + " classes, " +
             std::to_string(parts.parts.size()) + " sequence(s)");
}

void criterion5() {
  series_criterion(5, 2, "squared closed-form");
  table_criterion(5, catalog::a054872_classes(), 10,
                  "all ten A054872-table classes agree pairwise to size 10");
}

void criterion6() {
  series_criterion(6, 3, "squared closed-form");
  table_criterion(6, catalog::a118376_classes(), 9,
                  "all sixteen A118376-table classes agree pairwise to size 9");
}

void criterion7() {
  series_criterion(7, 4, "squared closed-form");
  table_criterion(7, catalog::a212198_classes(), 9,
                  "all ten A212198-table POP classes agree pairwise to size 9");
}

void criterion8() {
  CountingSequence counts = seq_of(catalog::conjecture_class(5), 10);
  auto f = algebraic_series(catalog::conjecture_gf(5), 9);
  bool ok = counts.terms[0] == 1 && check_sequence_match(f, counts, 1).agree;
  report(8, "1 + x F(x) from the cubic matches counts to size 10", ok);
}

// ---- criterion 9: evidence for the open conjecture --------------------------

void criterion9() {
  CountingSequence lhs = seq_of(catalog::conjecture_class(6), 11);
  CountingSequence rhs = seq_of(catalog::conjecture6_reference_class(), 10);
  report(9, "counts of Av(45123,45213) equal counts of Av(12345,12354) to size 10",
         std::equal(rhs.terms.begin(), rhs.terms.end(), lhs.terms.begin()));
  report(9, "counts of Av(45123,45213) match cached A224295 to size 11",
         compare_with_oeis(lhs, "A224295", 0).agree);
}

// ---- criterion 10: published rational series for M-classes ------------------

void criterion10() {
  int ok = 0, bad = 0;
  std::string first_bad;
  for (const catalog::MBox& box : catalog::m_class_boxes()) {
    PermClass cls = basis_of_pop(zigzag_poset(box.labelings.front()));
    CountingSequence counts = seq_of(cls, 11);
    auto series = rational_series(box.gf, 11);
    if (check_sequence_match(series, counts, 0).agree) {
      ++ok;
    } else {
      ++bad;
      if (first_bad.empty()) {
        for (int v : box.labelings.front()) first_bad += std::to_string(v);
      }
    }
  }
  report(10, "published rational series match brute-force counts to size 11",
         bad == 0 && ok == 23,
         std::to_string(ok) + "/23 representatives" +
             (first_bad.empty() ? "" : ", first failure at labels " + first_bad));
}

// ---- criterion 11: Wilf partitions ------------------------------------------

std::vector<Poset> zigzag_posets(int n) {
  std::set<Poset> distinct;
  std::vector<int> labels(n);
  std::iota(labels.begin(), labels.end(), 1);
  do {
    distinct.insert(zigzag_poset(labels));
  } while (std::next_permutation(labels.begin(), labels.end()));
  return std::vector<Poset>(distinct.begin(), distinct.end());
}

void criterion11_m() {
  std::vector<Poset> posets = zigzag_posets(5);
  report(11, "there are 60 labeled size-5 fences", posets.size() == 60,
         std::to_string(posets.size()));
  std::vector<PermClass> classes;
  for (const Poset& p : posets) classes.push_back(basis_of_pop(p));
  WilfPartition parts = wilf_partition(classes, 11, limits);
  report(11, "the 60 M-classes split into 23 parts at horizon 11",
         parts.parts.size() == 23, std::to_string(parts.parts.size()) + " parts");

  // One published box per part, bijectively.
  std::map<PermClass, size_t> part_of;
  for (size_t g = 0; g < parts.parts.size(); ++g) {
    for (const PermClass& c : parts.parts[g]) part_of[canonical_class(c)] = g;
  }
  std::set<size_t> used;
  bool ok = true;
  for (const catalog::MBox& box : catalog::m_class_boxes()) {
    std::set<size_t> targets;
    for (const auto& labels : box.labelings) {
      auto it = part_of.find(canonical_class(basis_of_pop(zigzag_poset(labels))));
      if (it == part_of.end()) {
        ok = false;
        continue;
      }
      targets.insert(it->second);
    }
    if (targets.size() != 1 || !used.insert(*targets.begin()).second) ok = false;
  }
  report(11, "the published boxes and the 23 parts correspond one to one",
         ok && used.size() == 23);
}

void criterion11_zz6() {
  std::set<PermClass> reps;
  std::vector<int> labels = {1, 2, 3, 4, 5, 6};
  do {
    reps.insert(canonical_class(basis_of_pop(zigzag_poset(labels))));
  } while (std::next_permutation(labels.begin(), labels.end()));
  std::vector<PermClass> classes(reps.begin(), reps.end());
  WilfPartition parts = wilf_partition(classes, 10, limits);
  report(11,
         "size-6 zig-zag symmetry representatives split into 177 parts at horizon 10",
         parts.parts.size() == 177,
         std::to_string(classes.size()) + " representatives, " +
             std::to_string(parts.parts.size()) + " parts");

  std::set<std::set<PermClass>> nontrivial;
  for (const auto& part : parts.parts) {
    if (part.size() > 1) nontrivial.insert(std::set<PermClass>(part.begin(), part.end()));
  }
  std::set<std::set<PermClass>> expected;
  for (const auto& group : catalog::zigzag6_nontrivial_groups()) {
    std::set<PermClass> g;
    for (const auto& l : group) g.insert(canonical_class(basis_of_pop(zigzag_poset(l))));
    expected.insert(std::move(g));
  }
  report(11, "the five nontrivial parts are the published groups",
         nontrivial == expected, std::to_string(nontrivial.size()) + " nontrivial parts");
}

void criterion11() {
  criterion11_m();
  criterion11_zz6();
}

// ---- criterion 12: property suites ------------------------------------------

void criterion12_cross_oracle() {
  // pop_contains versus avoidance of the linear-extension basis, for
  // posets through size 4 and permutations through size 7.
  uint64_t pairs = 0, mismatched = 0;
  std::vector<Permutation> perms;
  for (int n = 0; n <= 7; ++n) {
    oracles::for_each_perm(n, [&](const oracles::Word& w) {
      perms.push_back(Permutation(std::vector<uint8_t>(w.begin(), w.end())));
    });
  }
  for (int k = 1; k <= 4; ++k) {
    for_each_poset(k, [&](const Poset& p) {
      PermClass basis = basis_of_pop(p);
      for (const Permutation& pi : perms) {
        ++pairs;
        if (pop_contains(pi, p) == basis.avoids(pi)) ++mismatched;
      }
    });
  }
  report(12, "POP containment equals basis containment on every pair",
         mismatched == 0, std::to_string(pairs) + " pairs");
}

void criterion12_euler() {
  const uint64_t euler[] = {1, 1, 1, 2, 5, 16, 61, 272};
  bool ok = true;
  for (int n = 1; n <= 7; ++n) {
    std::vector<int> id(n);
    std::iota(id.begin(), id.end(), 1);
    Poset zz = zigzag_poset(id);
    if (zz.linear_extension_count() != euler[n]) ok = false;
    if (oracles::linear_extensions(n, zz.relations()).size() != euler[n]) ok = false;
  }
  report(12, "zig-zag linear-extension counts are the Euler numbers through size 7", ok);
}

void criterion12_symmetry_invariance() {
  bool ok = true;
  for (const PermClass& c :
       {catalog::conjecture_class(4), basis_of_pop(zigzag_poset({2, 4, 1, 5, 3}))}) {
    CountingSequence base = seq_of(c, 8);
    for (SymmetryOp op : kAllSymmetries) {
      if (seq_of(apply_symmetry(c, op), 8).terms != base.terms) ok = false;
    }
  }
  report(12, "counting sequences are invariant under all eight symmetries", ok);
}

void criterion12_residuals() {
  bool ok = true;
  auto check = [&](const AlgebraicGF& gf) {
    auto series = algebraic_series(gf, 12);
    for (const BigRat& r : algebraic_residual(gf, series)) {
      if (r != 0) ok = false;
    }
  };
  for (int i = 1; i <= 5; ++i) check(catalog::conjecture_gf(i));
  check(catalog::degree10_gf());
  for (const catalog::MBox& box : catalog::m_class_boxes()) check(as_algebraic(box.gf));
  report(12, "every fixture's series leaves a zero residual to truncation order", ok);
}

void criterion12_prefix_tree() {
  bool ok = true;
  const std::vector<PermClass> bases = {
      PermClass::parse("132"),
      PermClass::parse("321;2143;2413"),
      basis_of_pop(catalog::intro_example_poset()),
      basis_of_pop(zigzag_poset({2, 4, 1, 5, 3})),
  };
  for (const PermClass& b : bases) {
    CountingSequence seq = seq_of(b, 7);
    std::vector<oracles::Word> words;
    for (const auto& beta : b.basis()) {
      words.emplace_back(beta.values().begin(), beta.values().end());
    }
    for (int n = 0; n <= 7; ++n) {
      if (seq.terms[n] != BigInt(static_cast<unsigned long>(
                              oracles::count_avoiders(words, n)))) {
        ok = false;
      }
    }
  }
  report(12, "prefix-tree enumeration equals whole-set filtering through size 7", ok);
}

void criterion12() {
  criterion12_cross_oracle();
  criterion12_euler();
  criterion12_symmetry_invariance();
  criterion12_residuals();
  criterion12_prefix_tree();
}

}  // namespace

int main(int argc, char** argv) {
  std::set<int> wanted;
  for (int i = 1; i < argc; ++i) wanted.insert(std::atoi(argv[i]));
  auto want = [&](int n) { return wanted.empty() || wanted.count(n) > 0; };

  if (want(1)) criterion1();
  if (want(2)) criterion2();
  if (want(3)) criterion3();
  if (want(4)) criterion4();
  if (want(5)) criterion5();
  if (want(6)) criterion6();
  if (want(7)) criterion7();
  if (want(8)) criterion8();
  if (want(9)) criterion9();
  if (want(10)) criterion10();
  if (want(11)) criterion11();
  if (want(12)) criterion12();

  if (failures) {
    std::cout << failures << " criterion check(s) FAILED" << std::endl;
    return 1;
  }
  std::cout << "all criterion checks passed" << std::endl;
  return 0;
}
