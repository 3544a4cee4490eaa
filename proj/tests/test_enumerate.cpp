#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "pops/enumerate.hpp"

using pops::BigInt;
using pops::count_avoiders;
using pops::count_pop_avoiders;
using pops::counting_sequence;
using pops::CountingSequence;
using pops::EnumLimits;
using pops::PermClass;
using pops::Permutation;
using pops::Poset;

namespace {

PermClass cls(std::initializer_list<const char*> words) {
  std::vector<Permutation> elems;
  for (const char* w : words) elems.push_back(Permutation::parse(w));
  return PermClass(std::move(elems));
}

std::vector<oracles::Word> words_of(const PermClass& c) {
  std::vector<oracles::Word> out;
  for (const auto& b : c.basis()) {
    oracles::Word w;
    for (uint8_t v : b.values()) w.push_back(v);
    out.push_back(w);
  }
  return out;
}

}  // namespace

TEST_CASE("worked examples") {
  CHECK(count_avoiders(PermClass::empty_basis(), 4) == 24);
  CHECK(count_avoiders(cls({"132"}), 6) == 132);
  CHECK(counting_sequence(cls({"12"}), 4).terms ==
        std::vector<BigInt>{1, 1, 1, 1, 1});
  CHECK(counting_sequence(cls({"12345", "12354"}), 5).terms ==
        std::vector<BigInt>{1, 1, 2, 6, 24, 118});
}

TEST_CASE("prefix-tree growth equals whole-set filtering through size 7") {
  const std::vector<PermClass> bases = {
      cls({"132"}),
      cls({"321", "2143", "2413"}),
      cls({"123", "3142", "3412"}),
      cls({"1342", "1432"}),
      cls({"23145", "23154", "24135", "24153", "25134", "25143"}),
      cls({"1"}),
      PermClass::empty_basis(),
  };
  for (const auto& b : bases) {
    CountingSequence seq = counting_sequence(b, 7);
    for (int n = 0; n <= 7; ++n) {
      CAPTURE(b.str()); CAPTURE(n);
      CHECK(seq.terms[n] == BigInt(static_cast<unsigned long>(
                                oracles::count_avoiders(words_of(b), n))));
    }
  }
}

TEST_CASE("empty-permutation basis forces the empty class") {
  PermClass trivial(std::vector<Permutation>{Permutation()});
  CHECK(counting_sequence(trivial, 3).terms == std::vector<BigInt>{0, 0, 0, 0});
  CHECK(counting_sequence(cls({"1"}), 3).terms == std::vector<BigInt>{1, 0, 0, 0});
}

TEST_CASE("POP counting agrees with basis counting and with the oracle") {
  Poset chain(4, {{2, 3}, {3, 1}, {1, 4}});
  CHECK(count_pop_avoiders(chain, 5) == count_avoiders(cls({"3124"}), 5));
  CHECK(count_pop_avoiders(Poset::antichain(3), 4) == 0);

  Poset five(5, {{3, 1}, {1, 2}, {1, 4}, {1, 5}});
  for (int n = 0; n <= 6; ++n) {
    CHECK(count_pop_avoiders(five, n) == count_avoiders(pops::basis_of_pop(five), n));
    CHECK(count_pop_avoiders(five, n) ==
          BigInt(static_cast<unsigned long>(
              oracles::count_pop_avoiders(5, five.relations(), n))));
  }
}

TEST_CASE("the two counting paths agree for every poset of size <= 4") {
  for (int k = 1; k <= 4; ++k) {
    for (const Poset& p : pops::enumerate_posets(k)) {
      PermClass b = pops::basis_of_pop(p);
      for (int n = 0; n <= 6; ++n) {
        CAPTURE(p.str()); CAPTURE(n);
        CHECK(count_pop_avoiders(p, n) == count_avoiders(b, n));
      }
    }
  }
}

TEST_CASE("counting sequences are symmetry invariant") {
  PermClass b = cls({"132", "4321"});
  CountingSequence base = counting_sequence(b, 7);
  for (pops::SymmetryOp op : pops::kAllSymmetries) {
    CHECK(counting_sequence(apply_symmetry(b, op), 7) == base);
  }
}

TEST_CASE("results do not depend on worker count or materialization") {
  PermClass b = cls({"231", "4123"});
  EnumLimits one{.workers = 1};
  EnumLimits two{.workers = 2};
  EnumLimits dfs{.max_live = 4, .workers = 2};
  auto s1 = counting_sequence(b, 8, one);
  auto s2 = counting_sequence(b, 8, two);
  auto s3 = counting_sequence(b, 8, dfs);
  CHECK(s1 == s2);
  CHECK(s1 == s3);
}

TEST_CASE("node budgets fail distinctly and carry the size reached") {
  PermClass b = cls({"132"});
  CHECK_THROWS_AS(counting_sequence(b, 8, EnumLimits{.node_budget = 1}),
                  pops::BudgetExceeded);
  try {
    counting_sequence(b, 8, EnumLimits{.node_budget = 10});
    FAIL("expected budget error");
  } catch (const pops::BudgetExceeded& e) {
    CHECK(e.size_reached() >= 1);
    CHECK(e.size_reached() < 8);
    CHECK(e.partial_terms().size() == static_cast<size_t>(e.size_reached()) + 1);
    CHECK(e.partial_terms()[0] == 1);
  }
  // The same budget failure in depth-first mode.
  CHECK_THROWS_AS(
      counting_sequence(b, 9, EnumLimits{.node_budget = 50, .max_live = 2}),
      pops::BudgetExceeded);
}

TEST_CASE("terms stay within 0..n! and b-file output is well-formed") {
  CountingSequence seq = counting_sequence(cls({"132", "4321"}), 6);
  BigInt fact = 1;
  for (int n = 0; n <= 6; ++n) {
    if (n > 0) fact *= n;
    CHECK(seq.terms[n] >= 0);
    CHECK(seq.terms[n] <= fact);
  }
  CHECK(seq.bfile().substr(0, 8) == "0 1\n1 1\n");
}
