#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <set>

#include "oracles.hpp"
#include "pops/poset.hpp"

using pops::Poset;
using pops::PosetTransform;
using pops::TotalOrder;

namespace {

std::vector<std::vector<int>> all_labelings(int n) {
  std::vector<std::vector<int>> out;
  oracles::for_each_perm(n, [&](const oracles::Word& w) { out.push_back(w); });
  return out;
}

}  // namespace

TEST_CASE("relations close transitively and reject cycles") {
  Poset chain(4, {{2, 3}, {3, 1}, {1, 4}});
  for (auto [a, b] : std::vector<std::pair<int, int>>{
           {2, 3}, {2, 1}, {2, 4}, {3, 1}, {3, 4}, {1, 4}}) {
    CAPTURE(a); CAPTURE(b);
    CHECK(chain.less(a, b));
    CHECK_FALSE(chain.less(b, a));
  }
  CHECK(chain.relations().size() == 6);

  Poset anti = Poset::antichain(3);
  CHECK(anti.relations().empty());

  CHECK_THROWS_AS(Poset(2, {{1, 2}, {2, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(Poset(3, {{1, 2}, {2, 3}, {3, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(Poset(2, {{1, 3}}), std::invalid_argument);
  CHECK_THROWS_AS(Poset(2, {{1, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(Poset(0, {}), std::invalid_argument);
}

TEST_CASE("text and JSON forms round-trip") {
  Poset chain(4, {{2, 3}, {3, 1}, {1, 4}});
  CHECK(chain.str() == "4: 1<4, 2<3, 3<1");
  CHECK(Poset::parse(chain.str()) == chain);
  CHECK(Poset::parse(chain.json()) == chain);
  CHECK(Poset::parse("3:") == Poset::antichain(3));
  CHECK(Poset::parse("{\"size\": 2, \"relations\": [[1,2]]}") == Poset(2, {{1, 2}}));
  CHECK_THROWS_AS(Poset::parse("4: 1<1"), std::invalid_argument);
  CHECK_THROWS_AS(Poset::parse("nonsense"), std::invalid_argument);
  CHECK_THROWS_AS(Poset::parse("2: 1-2"), std::invalid_argument);
}

TEST_CASE("linear extensions of the worked examples") {
  Poset chain(4, {{2, 3}, {3, 1}, {1, 4}});
  auto exts = chain.linear_extensions();
  REQUIRE(exts.size() == 1);
  CHECK(exts[0].order == std::vector<uint8_t>{2, 3, 1, 4});

  auto anti_exts = Poset::antichain(3).linear_extensions();
  CHECK(anti_exts.size() == 6);

  // Zig-zag of size 5 has 16 extensions (checked against the brute-force
  // enumeration of all 120 orders).
  Poset zz = pops::zigzag_poset({1, 2, 3, 4, 5});
  auto zz_exts = zz.linear_extensions();
  CHECK(zz_exts.size() == 16);
  auto expected = oracles::linear_extensions(5, zz.relations());
  REQUIRE(zz_exts.size() == expected.size());
  for (size_t i = 0; i < expected.size(); ++i) {
    CHECK(std::vector<int>(zz_exts[i].order.begin(), zz_exts[i].order.end()) == expected[i]);
  }
}

TEST_CASE("linear extensions are lexicographically ordered and match the oracle") {
  for (const Poset& p : pops::enumerate_posets(4)) {
    auto exts = p.linear_extensions();
    auto expected = oracles::linear_extensions(4, p.relations());
    REQUIRE(exts.size() == expected.size());
    for (size_t i = 0; i < exts.size(); ++i) {
      CHECK(std::vector<int>(exts[i].order.begin(), exts[i].order.end()) == expected[i]);
    }
  }
}

TEST_CASE("chains and antichains bound the extension counts") {
  CHECK(Poset::chain({3, 1, 2}).linear_extension_count() == 1);
  CHECK(Poset::antichain(4).linear_extension_count() == 24);
}

TEST_CASE("height") {
  CHECK(Poset::antichain(5).height() == 1);
  Poset five(5, {{3, 1}, {1, 2}, {1, 4}, {1, 5}});
  CHECK(five.height() == 3);
  for (int n = 2; n <= 7; ++n) {
    std::vector<int> id(n);
    std::iota(id.begin(), id.end(), 1);
    CHECK(pops::zigzag_poset(id).height() == 2);
  }
  CHECK(pops::zigzag_poset({1}).height() == 1);
}

TEST_CASE("transformations match the worked examples and are involutions") {
  Poset chain(4, {{2, 3}, {3, 1}, {1, 4}});
  CHECK(transform_poset(chain, PosetTransform::complement_labels) ==
        Poset::chain({3, 2, 4, 1}));
  CHECK(transform_poset(chain, PosetTransform::reverse_relations) ==
        Poset::chain({4, 1, 3, 2}));
  for (const Poset& p : pops::enumerate_posets(3)) {
    for (auto t : {PosetTransform::complement_labels, PosetTransform::reverse_relations}) {
      CHECK(transform_poset(transform_poset(p, t), t) == p);
      CHECK(transform_poset(p, t).height() == p.height());
    }
  }
}

TEST_CASE("zig-zag posets follow the fence convention") {
  Poset m = pops::zigzag_poset({2, 4, 1, 5, 3});
  CHECK(m == Poset(5, {{2, 4}, {1, 4}, {1, 5}, {3, 5}}));
  CHECK(pops::zigzag_poset({1, 2}) == Poset::chain({1, 2}));
  CHECK(pops::zigzag_poset({1}) == Poset::antichain(1));
  CHECK_THROWS_AS(pops::zigzag_poset({1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(pops::zigzag_poset({2, 3}), std::invalid_argument);
  CHECK_THROWS_AS(pops::zigzag_poset({}), std::invalid_argument);
}

TEST_CASE("linear-extension counts of zig-zags are the Euler numbers") {
  const uint64_t euler[] = {1, 1, 1, 2, 5, 16, 61, 272};  // E_0..E_7
  for (int n = 1; n <= 7; ++n) {
    std::vector<int> id(n);
    std::iota(id.begin(), id.end(), 1);
    Poset zz = pops::zigzag_poset(id);
    CHECK(zz.linear_extension_count() == euler[n]);
    CHECK(oracles::linear_extensions(n, zz.relations()).size() == euler[n]);
  }
  // Any labeling gives an isomorphic fence, so the count is unchanged.
  CHECK(pops::zigzag_poset({2, 4, 1, 5, 3}).linear_extension_count() == 16);
  CHECK(pops::zigzag_poset({3, 6, 1, 5, 2, 7, 4}).linear_extension_count() == 272);
}

TEST_CASE("the number of distinct labeled zig-zag posets is n! (even) or n!/2 (odd)") {
  uint64_t fact = 1;
  for (int n = 1; n <= 6; ++n) {
    fact *= n;
    std::set<Poset> distinct;
    for (const auto& labels : all_labelings(n)) distinct.insert(pops::zigzag_poset(labels));
    const uint64_t expected = n == 1 ? 1 : (n % 2 == 0 ? fact : fact / 2);
    CAPTURE(n);
    CHECK(distinct.size() == expected);
  }
}

TEST_CASE("poset enumeration matches the labeled-poset counts") {
  const uint64_t a001035[] = {1, 1, 3, 19, 219, 4231};
  for (int k = 1; k <= 5; ++k) {
    std::vector<Poset> all = pops::enumerate_posets(k);
    CAPTURE(k);
    CHECK(all.size() == a001035[k]);
    std::set<Poset> distinct(all.begin(), all.end());
    CHECK(distinct.size() == all.size());
    // Deterministic order.
    CHECK(pops::enumerate_posets(k) == all);
  }
  CHECK_THROWS_AS(pops::enumerate_posets(6), std::invalid_argument);
}
