#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace pops {

// A permutation of {1..n} in one-line notation. Immutable after construction;
// the empty permutation (n = 0) is a valid value and is contained in everything.
class Permutation {
 public:
  Permutation() = default;

  // Validates that `values` is a bijection {1..n} -> {1..n}.
  // Throws std::invalid_argument otherwise.
  explicit Permutation(std::vector<uint8_t> values);

  static Permutation identity(int n);

  // Text forms: canonical space-separated values ("3 7 1 4 6 5 2"), or a
  // digit string ("3714652") accepted only for n <= 9.
  static Permutation parse(std::string_view text);
  std::string str() const;

  int size() const { return static_cast<int>(vals_.size()); }
  bool empty() const { return vals_.empty(); }
  uint8_t value_at(int pos) const { return vals_[pos]; }  // 0-based position
  std::span<const uint8_t> values() const { return vals_; }

  Permutation reversed() const;
  Permutation complemented() const;
  Permutation inverted() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;

  // Orders by size, then lexicographically by word.
  friend bool operator<(const Permutation& a, const Permutation& b);

 private:
  std::vector<uint8_t> vals_;
};

// The order-8 symmetry group generated by reverse, complement and inverse.
// Composite names apply right to left: reverse_inverse(p) = reverse(inverse(p)).
enum class SymmetryOp {
  identity,
  reverse,
  complement,
  inverse,
  reverse_complement,
  reverse_inverse,
  complement_inverse,
  reverse_complement_inverse,
};

inline constexpr SymmetryOp kAllSymmetries[8] = {
    SymmetryOp::identity,         SymmetryOp::reverse,
    SymmetryOp::complement,       SymmetryOp::inverse,
    SymmetryOp::reverse_complement, SymmetryOp::reverse_inverse,
    SymmetryOp::complement_inverse, SymmetryOp::reverse_complement_inverse,
};

std::string_view symmetry_name(SymmetryOp op);
SymmetryOp symmetry_from_name(std::string_view name);  // throws on unknown name

Permutation apply_symmetry(const Permutation& p, SymmetryOp op);

// Classical pattern containment: true iff some subword of `pi` at strictly
// increasing indices is order-isomorphic to `sigma`.
bool contains(const Permutation& pi, const Permutation& sigma);

// Exact number of occurrences (index tuples) of `sigma` in `pi`.
uint64_t count_occurrences(const Permutation& pi, const Permutation& sigma);

}  // namespace pops
