#include "pops/genfunc.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace pops {

namespace {

using Series = std::vector<BigRat>;  // coefficients 0..len-1

// c += a * b, truncated beyond degree N.
void mul_acc(Series& c, const Series& a, const Series& b, int N) {
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    const size_t jmax = std::min(b.size(), static_cast<size_t>(N) + 1 - i);
    for (size_t j = 0; j < jmax; ++j) {
      if (b[j] == 0) continue;
      c[i + j] += a[i] * b[j];
    }
  }
}

Series mul(const Series& a, const Series& b, int N) {
  Series c(N + 1, BigRat(0));
  mul_acc(c, a, b, N);
  return c;
}

// Groups the minpoly by F-power: poly[j] = coefficient polynomial of F^j.
std::vector<Series> by_fpower(const std::vector<AlgebraicGF::Monomial>& minpoly, int N) {
  int dmax = 0;
  for (const auto& m : minpoly) dmax = std::max(dmax, m.fpow);
  std::vector<Series> poly(dmax + 1, Series(N + 1, BigRat(0)));
  for (const auto& m : minpoly) {
    if (m.xpow < 0 || m.fpow < 0) throw std::invalid_argument("negative exponent in minpoly");
    if (m.xpow <= N) poly[m.fpow][m.xpow] += BigRat(m.coeff);
  }
  return poly;
}

// P(x, F) mod x^(N+1) by Horner in F.
Series eval_poly(const std::vector<Series>& poly, const Series& f, int N) {
  Series acc(N + 1, BigRat(0));
  for (int j = static_cast<int>(poly.size()) - 1; j >= 0; --j) {
    if (j + 1 < static_cast<int>(poly.size())) acc = mul(acc, f, N);
    for (int i = 0; i <= N; ++i) acc[i] += poly[j][i];
  }
  return acc;
}

std::vector<Series> derivative_in_f(const std::vector<Series>& poly, int N) {
  std::vector<Series> d;
  for (size_t j = 1; j < poly.size(); ++j) {
    Series s = poly[j];
    for (auto& c : s) c *= static_cast<long>(j);
    d.push_back(std::move(s));
  }
  if (d.empty()) d.push_back(Series(N + 1, BigRat(0)));
  return d;
}

BigInt parse_bigint_json(const nlohmann::json& v, const char* what) {
  if (v.is_number_integer()) return BigInt(static_cast<long>(v.get<int64_t>()));
  if (v.is_string()) {
    BigInt out;
    if (out.set_str(v.get<std::string>(), 10) != 0) {
      throw std::invalid_argument(std::string("malformed integer in ") + what);
    }
    return out;
  }
  throw std::invalid_argument(std::string("expected integer in ") + what);
}

}  // namespace

std::vector<BigRat> rational_series(const RationalGF& gf, int N) {
  if (gf.den.empty() || gf.den[0] == 0) {
    throw std::invalid_argument("denominator has zero constant term");
  }
  std::vector<BigRat> c(N + 1, BigRat(0));
  for (int n = 0; n <= N; ++n) {
    BigRat acc = n < static_cast<int>(gf.num.size()) ? BigRat(gf.num[n]) : BigRat(0);
    const int jmax = std::min<int>(n, static_cast<int>(gf.den.size()) - 1);
    for (int j = 1; j <= jmax; ++j) acc -= BigRat(gf.den[j]) * c[n - j];
    c[n] = acc / BigRat(gf.den[0]);
  }
  return c;
}

std::vector<BigRat> algebraic_series(const AlgebraicGF& gf, int N) {
  if (gf.minpoly.empty()) throw std::invalid_argument("empty minimal polynomial");
  if (N < 0) throw std::invalid_argument("series order must be nonnegative");

  Series f;
  for (const BigInt& s : gf.seed) f.emplace_back(s);

  if (f.empty()) {
    // Without a seed the constant term must be forced linearly: P(0, F)
    // of degree <= 1 in F.
    BigRat a(0), b(0);
    bool higher = false;
    for (const auto& m : gf.minpoly) {
      if (m.xpow != 0) continue;
      if (m.fpow == 0) a += BigRat(m.coeff);
      else if (m.fpow == 1) b += BigRat(m.coeff);
      else if (m.coeff != 0) higher = true;
    }
    if (higher || b == 0) {
      throw std::invalid_argument("branch not determined: a seed is required");
    }
    f.push_back(-a / b);
  }

  const int s = static_cast<int>(f.size());

  // Valuation v of dP/dF at the seeded series; it must be visible inside the
  // seed, otherwise the branch is not determined. Extensions of the series
  // only perturb dP/dF at orders >= s > v, so v and g_v are stable.
  const int probe = s - 1;
  auto poly_probe = by_fpower(gf.minpoly, probe);
  auto dpoly = derivative_in_f(poly_probe, probe);
  Series g = eval_poly(dpoly, f, probe);
  int v = -1;
  for (int i = 0; i <= probe; ++i) {
    if (g[i] != 0) {
      v = i;
      break;
    }
  }
  if (v < 0) {
    throw std::invalid_argument(
        "branch not determined: linearized coefficient vanishes through the seed");
  }
  const BigRat gv = g[v];

  // Seed consistency: orders below s+v of the residual are fully determined
  // by the seed (unknown coefficients only reach order s+v) and must vanish.
  {
    auto poly = by_fpower(gf.minpoly, s + v);
    Series fpad = f;
    fpad.resize(s + v, BigRat(0));
    Series r = eval_poly(poly, fpad, s + v - 1);
    for (int m = 0; m < s + v; ++m) {
      if (r[m] != 0) {
        throw std::invalid_argument("seed inconsistent with the minimal polynomial at x^" +
                                    std::to_string(m));
      }
    }
  }

  // One new coefficient per step, read off the residual at x^(n+v).
  auto poly = by_fpower(gf.minpoly, N + v);
  for (int n = s; n <= N; ++n) {
    Series fcur = f;
    fcur.resize(n + v + 1, BigRat(0));
    Series res = eval_poly(poly, fcur, n + v);
    f.push_back(-res[n + v] / gv);
  }
  f.resize(N + 1, BigRat(0));
  return f;
}

std::vector<BigRat> algebraic_residual(const AlgebraicGF& gf,
                                       const std::vector<BigRat>& series) {
  const int N = static_cast<int>(series.size()) - 1;
  auto poly = by_fpower(gf.minpoly, N);
  return eval_poly(poly, series, N);
}

AlgebraicGF as_algebraic(const RationalGF& gf) {
  AlgebraicGF out;
  for (size_t i = 0; i < gf.den.size(); ++i) {
    out.minpoly.push_back({static_cast<int>(i), 1, gf.den[i]});
  }
  for (size_t i = 0; i < gf.num.size(); ++i) {
    out.minpoly.push_back({static_cast<int>(i), 0, -gf.num[i]});
  }
  return out;
}

MatchReport check_sequence_match(const std::vector<BigRat>& coeffs,
                                 const std::vector<BigInt>& seq, int shift) {
  const int lo = std::max(0, -shift);
  const int hi = std::min(static_cast<int>(coeffs.size()) - 1,
                          static_cast<int>(seq.size()) - 1 - shift);
  MatchReport rep;
  rep.overlap = hi >= lo ? hi - lo + 1 : 0;
  rep.overlap_lo = lo;
  rep.overlap_hi = hi;
  if (rep.overlap < 5) {
    throw std::invalid_argument("insufficient overlap for sequence comparison (need 5)");
  }
  rep.agree = true;
  for (int n = lo; n <= hi; ++n) {
    if (coeffs[n] != BigRat(seq[n + shift])) {
      rep.agree = false;
      rep.first_disagreement = n;
      rep.lhs = coeffs[n].get_str();
      rep.rhs = seq[n + shift].get_str();
      break;
    }
  }
  return rep;
}

MatchReport check_sequence_match(const std::vector<BigRat>& coeffs,
                                 const CountingSequence& seq, int shift) {
  return check_sequence_match(coeffs, seq.terms, shift);
}

std::vector<BigRat> GenFunc::series(int N) const {
  if (rational) return rational_series(*rational, N);
  if (algebraic) return algebraic_series(*algebraic, N);
  throw std::invalid_argument("empty generating function");
}

GenFunc parse_gf(std::string_view json_text) {
  auto j = nlohmann::json::parse(json_text, nullptr, /*allow_exceptions=*/false);
  if (j.is_discarded() || !j.is_object() || !j.contains("kind")) {
    throw std::invalid_argument("malformed generating-function fixture");
  }
  GenFunc out;
  const std::string kind = j["kind"].get<std::string>();
  if (kind == "rational") {
    RationalGF gf;
    for (const auto& v : j.at("num")) gf.num.push_back(parse_bigint_json(v, "num"));
    for (const auto& v : j.at("den")) gf.den.push_back(parse_bigint_json(v, "den"));
    out.rational = std::move(gf);
  } else if (kind == "algebraic") {
    AlgebraicGF gf;
    for (const auto& m : j.at("minpoly")) {
      if (!m.is_array() || m.size() != 3) {
        throw std::invalid_argument("minpoly entries must be [i, j, c]");
      }
      gf.minpoly.push_back(
          {m[0].get<int>(), m[1].get<int>(), parse_bigint_json(m[2], "minpoly")});
    }
    if (j.contains("seed")) {
      for (const auto& v : j.at("seed")) gf.seed.push_back(parse_bigint_json(v, "seed"));
    }
    out.algebraic = std::move(gf);
  } else {
    throw std::invalid_argument("unknown generating-function kind: " + kind);
  }
  return out;
}

GenFunc load_gf(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open generating-function fixture: " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_gf(buf.str());
}

std::string gf_to_json(const GenFunc& gf) {
  nlohmann::json j;
  if (gf.rational) {
    j["kind"] = "rational";
    auto num = nlohmann::json::array(), den = nlohmann::json::array();
    for (const auto& c : gf.rational->num) num.push_back(c.get_str());
    for (const auto& c : gf.rational->den) den.push_back(c.get_str());
    j["num"] = num;
    j["den"] = den;
  } else if (gf.algebraic) {
    j["kind"] = "algebraic";
    auto mp = nlohmann::json::array();
    for (const auto& m : gf.algebraic->minpoly) {
      mp.push_back({m.xpow, m.fpow, m.coeff.get_str()});
    }
    j["minpoly"] = mp;
    auto seed = nlohmann::json::array();
    for (const auto& t : gf.algebraic->seed) seed.push_back(t.get_str());
    j["seed"] = seed;
  }
  return j.dump();
}

std::vector<BigInt> to_bigints(const std::vector<BigRat>& coeffs) {
  std::vector<BigInt> out;
  out.reserve(coeffs.size());
  for (const BigRat& c : coeffs) {
    if (c.get_den() != 1) {
      throw std::invalid_argument("series coefficient is not an integer: " + c.get_str());
    }
    out.push_back(c.get_num());
  }
  return out;
}

}  // namespace pops
