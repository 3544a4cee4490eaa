#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pops/enumerate.hpp"

namespace pops {

using BigRat = mpq_class;

// Rational F = num/den with integer polynomial coefficients, ascending.
struct RationalGF {
  std::vector<BigInt> num;
  std::vector<BigInt> den;
};

// Algebraic F given by a bivariate integer polynomial sum c * x^i * F^j = 0
// plus seed terms fixing the branch.
struct AlgebraicGF {
  struct Monomial {
    int xpow = 0;
    int fpow = 0;
    BigInt coeff;
  };
  std::vector<Monomial> minpoly;
  std::vector<BigInt> seed;
};

// Exact coefficients c_0..c_N of num/den. Throws std::invalid_argument if
// den has zero constant term.
std::vector<BigRat> rational_series(const RationalGF& gf, int N);

// Coefficients c_0..c_N solving minpoly(x, F) = 0 order by order, extending
// the seed. Throws std::invalid_argument when the branch is not determined
// (linearized coefficient vanishes within the seed) or the seed is
// inconsistent with the minimal polynomial.
std::vector<BigRat> algebraic_series(const AlgebraicGF& gf, int N);

// minpoly evaluated at the truncated series, mod x^(N+1). All-zero exactly
// when the series satisfies the polynomial to that order.
std::vector<BigRat> algebraic_residual(const AlgebraicGF& gf,
                                       const std::vector<BigRat>& series);

// Every rational GF doubles as the algebraic one den*F - num = 0, empty seed.
AlgebraicGF as_algebraic(const RationalGF& gf);

struct MatchReport {
  bool agree = false;
  int overlap = 0;                         // number of indices compared
  int overlap_lo = 0, overlap_hi = 0;      // coefficient-index range compared
  std::optional<int> first_disagreement;   // coefficient index
  std::string lhs, rhs;                    // values at the disagreement
};

// Compares coeffs[n] with seq[n+shift] over the index overlap (negative
// shift allowed). Throws std::invalid_argument when the overlap has fewer
// than 5 indices.
MatchReport check_sequence_match(const std::vector<BigRat>& coeffs,
                                 const std::vector<BigInt>& seq, int shift);
MatchReport check_sequence_match(const std::vector<BigRat>& coeffs,
                                 const CountingSequence& seq, int shift);

// Fixture form: {"kind":"rational","num":[...],"den":[...]} or
// {"kind":"algebraic","minpoly":[[i,j,c],...],"seed":[...]}.
struct GenFunc {
  std::optional<RationalGF> rational;
  std::optional<AlgebraicGF> algebraic;

  std::vector<BigRat> series(int N) const;
};

GenFunc parse_gf(std::string_view json_text);
GenFunc load_gf(const std::string& path);
std::string gf_to_json(const GenFunc& gf);

std::vector<BigInt> to_bigints(const std::vector<BigRat>& coeffs);  // throws if non-integral

}  // namespace pops
