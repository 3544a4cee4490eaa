#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pops/perm.hpp"
#include "pops/poset.hpp"

namespace pops {

// A permutation class Av(B) named by its finite basis, kept sorted (size,
// then word). The basis must be an antichain under containment.
class PermClass {
 public:
  // Sorts and deduplicates; throws std::invalid_argument if one element
  // contains another.
  explicit PermClass(std::vector<Permutation> basis);

  static PermClass empty_basis() { return PermClass(std::vector<Permutation>{}); }

  // Inline form: elements separated by ';' or newline ("321;2143;2413").
  static PermClass parse(std::string_view text);
  std::string str() const;  // elements joined by ";"

  const std::vector<Permutation>& basis() const { return basis_; }
  size_t basis_size() const { return basis_.size(); }

  // True iff pi avoids every basis element.
  bool avoids(const Permutation& pi) const;

  friend bool operator==(const PermClass&, const PermClass&) = default;
  friend bool operator<(const PermClass& a, const PermClass& b) {
    return a.basis_ < b.basis_;
  }

 private:
  std::vector<Permutation> basis_;
};

PermClass apply_symmetry(const PermClass& c, SymmetryOp op);

// perm(L) = (l_1 l_2 ... l_k)^{-1}.
Permutation perm_of_total_order(const TotalOrder& order);

// POP containment: some increasing index tuple whose values respect every
// relation of P. Implemented directly by backtracking on index tuples, not
// via the basis, so the equivalence with basis avoidance stays a genuine
// cross-check between independent code paths.
bool pop_contains(const Permutation& pi, const Poset& p);

// The basis of Av(P): inverses of the linear extensions of P.
PermClass basis_of_pop(const Poset& p);

// POP-class detection: intersect the total orders given by the inverses of
// the basis elements and accept iff that poset reproduces the basis.
// nullopt is the negative answer, not an error.
std::optional<Poset> pop_of_class(const PermClass& c);

}  // namespace pops
