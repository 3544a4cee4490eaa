#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pops/genfunc.hpp"

using pops::AlgebraicGF;
using pops::algebraic_residual;
using pops::algebraic_series;
using pops::BigInt;
using pops::BigRat;
using pops::check_sequence_match;
using pops::GenFunc;
using pops::RationalGF;
using pops::rational_series;

namespace {

std::vector<BigInt> ints(std::initializer_list<long> v) {
  return std::vector<BigInt>(v.begin(), v.end());
}

std::vector<BigRat> rats(std::initializer_list<long> v) {
  std::vector<BigRat> out;
  for (long x : v) out.emplace_back(x);
  return out;
}

// x F^2 - F + 1 = 0, the Catalan equation.
AlgebraicGF catalan_gf(std::vector<BigInt> seed = {}) {
  AlgebraicGF gf;
  gf.minpoly = {{1, 2, 1}, {0, 1, -1}, {0, 0, 1}};
  gf.seed = std::move(seed);
  return gf;
}

// (F - 1 - 2x + 2x^2)^2 = x^2 (1 - 8x + 4x^2), i.e. the squared form of
// 1 + 2x - 2x^2 - x sqrt(1 - 8x + 4x^2).
AlgebraicGF sqrt_form_gf() {
  AlgebraicGF gf;
  gf.minpoly = {{0, 2, 1}, {0, 1, -2}, {1, 1, -4}, {2, 1, 4}, {0, 0, 1}, {1, 0, 4}, {2, 0, -1}};
  gf.seed = {1, 1};
  return gf;
}

}  // namespace

TEST_CASE("rational series of geometric forms") {
  CHECK(rational_series({.num = ints({1}), .den = ints({1, -1})}, 4) ==
        rats({1, 1, 1, 1, 1}));
  CHECK(rational_series({.num = ints({1}), .den = ints({1, -2})}, 4) ==
        rats({1, 2, 4, 8, 16}));
  CHECK_THROWS_AS(rational_series({.num = ints({1}), .den = ints({0, 1})}, 3),
                  std::invalid_argument);
  CHECK_THROWS_AS(rational_series({.num = ints({1}), .den = {}}, 3),
                  std::invalid_argument);
}

TEST_CASE("rational series convolved with the denominator returns the numerator") {
  RationalGF gf{.num = ints({1, -4, -1, 3}), .den = ints({1, -5, 2, 5, -4})};
  auto c = rational_series(gf, 12);
  for (int n = 0; n <= 12; ++n) {
    BigRat acc(0);
    for (int j = 0; j <= n && j < static_cast<int>(gf.den.size()); ++j) {
      acc += BigRat(gf.den[j]) * c[n - j];
    }
    BigRat expect = n < static_cast<int>(gf.num.size()) ? BigRat(gf.num[n]) : BigRat(0);
    CHECK(acc == expect);
  }
}

TEST_CASE("the Catalan equation solves from a one-term seed") {
  auto c = algebraic_series(catalan_gf({1}), 5);
  CHECK(c == rats({1, 1, 2, 5, 14, 42}));
}

TEST_CASE("a linear constant term allows an empty seed") {
  // P(0, F) = 1 - F is linear, so the solver can start unseeded.
  auto c = algebraic_series(catalan_gf(), 6);
  CHECK(c == rats({1, 1, 2, 5, 14, 42, 132}));
}

TEST_CASE("ramified square-root forms need and use two seed terms") {
  CHECK(algebraic_series(sqrt_form_gf(), 5) == rats({1, 1, 2, 6, 24, 114}));

  auto other = sqrt_form_gf();
  other.seed = {1, 3};  // the +sqrt branch
  auto c = algebraic_series(other, 2);
  CHECK(c == rats({1, 3, -6}));

  auto short_seed = sqrt_form_gf();
  short_seed.seed = {1};
  CHECK_THROWS_AS(algebraic_series(short_seed, 5), std::invalid_argument);
}

TEST_CASE("inconsistent seeds are rejected") {
  CHECK_THROWS_AS(algebraic_series(catalan_gf({2}), 5), std::invalid_argument);
  CHECK_THROWS_AS(algebraic_series(catalan_gf({1, 7}), 5), std::invalid_argument);
}

TEST_CASE("residuals of computed series vanish to truncation order") {
  for (const AlgebraicGF& gf : {catalan_gf({1}), sqrt_form_gf()}) {
    auto series = algebraic_series(gf, 12);
    for (const BigRat& r : algebraic_residual(gf, series)) CHECK(r == 0);
  }
}

TEST_CASE("a rational gf re-expressed algebraically gives the same series") {
  RationalGF gf{.num = ints({1, 1}), .den = ints({1, -3, 1})};
  auto direct = rational_series(gf, 10);
  auto via_poly = algebraic_series(pops::as_algebraic(gf), 10);
  CHECK(direct == via_poly);
}

TEST_CASE("sequence matching reports the first disagreement") {
  auto coeffs = rats({1, 1, 2, 6, 24, 120, 720});
  std::vector<BigInt> seq = ints({1, 1, 2, 6, 24, 118, 720});
  auto rep = check_sequence_match(coeffs, seq, 0);
  CHECK_FALSE(rep.agree);
  REQUIRE(rep.first_disagreement.has_value());
  CHECK(*rep.first_disagreement == 5);
  CHECK(rep.lhs == "120");
  CHECK(rep.rhs == "118");

  auto self = check_sequence_match(coeffs, pops::to_bigints(coeffs), 0);
  CHECK(self.agree);
  CHECK(self.overlap == 7);
}

TEST_CASE("shifts realign comparisons in both directions") {
  auto coeffs = rats({2, 3, 4, 5, 6, 7});
  std::vector<BigInt> seq = ints({0, 1, 2, 3, 4, 5, 6, 7});
  CHECK(check_sequence_match(coeffs, seq, 2).agree);
  auto r = check_sequence_match(coeffs, seq, 1);
  CHECK_FALSE(r.agree);

  // Negative shift: coeffs[n] vs seq[n - 1].
  auto coeffs2 = rats({9, 0, 1, 2, 3, 4, 5, 6, 7});
  coeffs2[0] = BigRat(9);
  std::vector<BigInt> seq2 = ints({0, 1, 2, 3, 4, 5, 6, 7});
  auto r2 = check_sequence_match(coeffs2, seq2, -1);
  CHECK(r2.agree);
  CHECK(r2.overlap_lo == 1);
}

TEST_CASE("too little overlap is an error, not an answer") {
  auto coeffs = rats({1, 2, 3, 4});
  CHECK_THROWS_AS(check_sequence_match(coeffs, ints({1, 2, 3, 4}), 0),
                  std::invalid_argument);
  CHECK_THROWS_AS(check_sequence_match(coeffs, ints({1, 2, 3, 4, 5, 6}), 5),
                  std::invalid_argument);
}

TEST_CASE("fixture JSON round-trips both kinds") {
  GenFunc r = pops::parse_gf(R"({"kind":"rational","num":[1,-4],"den":[1,-5,2]})");
  REQUIRE(r.rational.has_value());
  CHECK(r.rational->num == ints({1, -4}));
  CHECK(pops::parse_gf(pops::gf_to_json(r)).rational->den == r.rational->den);

  GenFunc a = pops::parse_gf(R"({"kind":"algebraic","minpoly":[[1,2,1],[0,1,-1],[0,0,1]],"seed":[1]})");
  REQUIRE(a.algebraic.has_value());
  CHECK(a.series(5) == rats({1, 1, 2, 5, 14, 42}));
  CHECK(pops::parse_gf(pops::gf_to_json(a)).series(5) == a.series(5));

  CHECK_THROWS_AS(pops::parse_gf("{\"kind\":\"polynomialish\"}"), std::invalid_argument);
  CHECK_THROWS_AS(pops::parse_gf("not json"), std::invalid_argument);
}

TEST_CASE("non-integer series are flagged when integers are demanded") {
  RationalGF gf{.num = ints({1}), .den = ints({2, 1})};
  CHECK_THROWS_AS(pops::to_bigints(rational_series(gf, 4)), std::invalid_argument);
}
