#include "pops/perm.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace pops {

namespace {

void validate(const std::vector<uint8_t>& vals) {
  const size_t n = vals.size();
  if (n > 64) throw std::invalid_argument("permutation too large (max size 64)");
  std::vector<bool> seen(n + 1, false);
  for (uint8_t v : vals) {
    if (v < 1 || v > n) {
      throw std::invalid_argument("permutation value out of range 1.." + std::to_string(n));
    }
    if (seen[v]) throw std::invalid_argument("duplicate value in permutation");
    seen[v] = true;
  }
}

}  // namespace

Permutation::Permutation(std::vector<uint8_t> values) : vals_(std::move(values)) {
  validate(vals_);
}

Permutation Permutation::identity(int n) {
  std::vector<uint8_t> v(n);
  for (int i = 0; i < n; ++i) v[i] = static_cast<uint8_t>(i + 1);
  return Permutation(std::move(v));
}

Permutation Permutation::parse(std::string_view text) {
  // Trim surrounding whitespace.
  size_t b = text.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return Permutation();  // empty permutation
  size_t e = text.find_last_not_of(" \t\r\n");
  text = text.substr(b, e - b + 1);

  const bool has_sep = text.find_first_of(" \t,") != std::string_view::npos;
  std::vector<uint8_t> vals;
  if (!has_sep && text.size() > 1) {
    // Digit-string form, unambiguous only below size 10.
    for (char c : text) {
      if (c < '1' || c > '9') {
        throw std::invalid_argument("digit-string permutation may only use digits 1..9");
      }
      vals.push_back(static_cast<uint8_t>(c - '0'));
    }
    return Permutation(std::move(vals));
  }
  std::string s(text);
  for (char& c : s) {
    if (c == ',') c = ' ';
  }
  std::istringstream in(s);
  long x;
  while (in >> x) {
    if (x < 1 || x > 255) throw std::invalid_argument("permutation value out of range");
    vals.push_back(static_cast<uint8_t>(x));
  }
  if (!in.eof()) throw std::invalid_argument("malformed permutation text");
  return Permutation(std::move(vals));
}

std::string Permutation::str() const {
  std::string out;
  if (size() <= 9) {
    for (uint8_t v : vals_) out.push_back(static_cast<char>('0' + v));
    return out;
  }
  for (size_t i = 0; i < vals_.size(); ++i) {
    if (i) out.push_back(' ');
    out += std::to_string(int{vals_[i]});
  }
  return out;
}

bool operator<(const Permutation& a, const Permutation& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a.vals_ < b.vals_;
}

Permutation Permutation::reversed() const {
  std::vector<uint8_t> v(vals_.rbegin(), vals_.rend());
  return Permutation(std::move(v));
}

Permutation Permutation::complemented() const {
  const int n = size();
  std::vector<uint8_t> v(vals_.size());
  for (int i = 0; i < n; ++i) v[i] = static_cast<uint8_t>(n + 1 - vals_[i]);
  return Permutation(std::move(v));
}

Permutation Permutation::inverted() const {
  std::vector<uint8_t> v(vals_.size());
  for (int i = 0; i < size(); ++i) v[vals_[i] - 1] = static_cast<uint8_t>(i + 1);
  return Permutation(std::move(v));
}

std::string_view symmetry_name(SymmetryOp op) {
  switch (op) {
    case SymmetryOp::identity: return "identity";
    case SymmetryOp::reverse: return "reverse";
    case SymmetryOp::complement: return "complement";
    case SymmetryOp::inverse: return "inverse";
    case SymmetryOp::reverse_complement: return "reverse-complement";
    case SymmetryOp::reverse_inverse: return "reverse-inverse";
    case SymmetryOp::complement_inverse: return "complement-inverse";
    case SymmetryOp::reverse_complement_inverse: return "reverse-complement-inverse";
  }
  return "?";
}

SymmetryOp symmetry_from_name(std::string_view name) {
  for (SymmetryOp op : kAllSymmetries) {
    if (symmetry_name(op) == name) return op;
  }
  throw std::invalid_argument("unknown symmetry op: " + std::string(name));
}

Permutation apply_symmetry(const Permutation& p, SymmetryOp op) {
  switch (op) {
    case SymmetryOp::identity: return p;
    case SymmetryOp::reverse: return p.reversed();
    case SymmetryOp::complement: return p.complemented();
    case SymmetryOp::inverse: return p.inverted();
    case SymmetryOp::reverse_complement: return p.complemented().reversed();
    case SymmetryOp::reverse_inverse: return p.inverted().reversed();
    case SymmetryOp::complement_inverse: return p.inverted().complemented();
    case SymmetryOp::reverse_complement_inverse:
      return p.inverted().complemented().reversed();
  }
  throw std::logic_error("unreachable");
}

namespace {

// Backtracking occurrence search, assigning pattern positions left to right.
// For pattern position j the admissible word values lie strictly between the
// largest assigned value with smaller pattern value and the smallest assigned
// value with larger pattern value.
struct OccurrenceSearch {
  std::span<const uint8_t> w;
  std::span<const uint8_t> p;
  int n, k;
  bool count_all = false;
  uint64_t count = 0;
  std::vector<uint8_t> chosen_val;  // by pattern position

  bool run() {
    chosen_val.assign(k, 0);
    return descend(0, 0);
  }

  // Returns true to stop the search (first hit found, when not counting).
  bool descend(int j, int start) {
    if (j == k) {
      ++count;
      return !count_all;
    }
    uint8_t lo = 0, hi = static_cast<uint8_t>(n + 1);
    for (int a = 0; a < j; ++a) {
      if (p[a] < p[j]) {
        if (chosen_val[a] > lo) lo = chosen_val[a];
      } else {
        if (chosen_val[a] < hi) hi = chosen_val[a];
      }
    }
    for (int i = start; i <= n - (k - j); ++i) {
      const uint8_t v = w[i];
      if (v <= lo || v >= hi) continue;
      chosen_val[j] = v;
      if (descend(j + 1, i + 1)) return true;
    }
    return false;
  }
};

}  // namespace

bool contains(const Permutation& pi, const Permutation& sigma) {
  if (sigma.empty()) return true;
  if (sigma.size() > pi.size()) return false;
  OccurrenceSearch s{pi.values(), sigma.values(), pi.size(), sigma.size()};
  return s.run();
}

uint64_t count_occurrences(const Permutation& pi, const Permutation& sigma) {
  if (sigma.empty()) return 1;
  if (sigma.size() > pi.size()) return 0;
  OccurrenceSearch s{pi.values(), sigma.values(), pi.size(), sigma.size()};
  s.count_all = true;
  s.run();
  return s.count;
}

}  // namespace pops
