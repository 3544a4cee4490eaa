#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "pops/perm_class.hpp"
#include "pops/poset.hpp"

namespace pops {

using BigInt = mpz_class;

struct EnumLimits {
  // Maximum number of candidate children examined; 0 means unlimited.
  uint64_t node_budget = 0;
  // Cap on materialized avoiders per size before the engine switches to
  // depth-first counting (same totals, no list kept). 0 means the default.
  uint64_t max_live = 0;
  // Worker threads; 0 means hardware concurrency.
  unsigned workers = 0;
};

// Exact terms a(0..N) of a class counting sequence.
struct CountingSequence {
  std::vector<BigInt> terms;

  int max_size() const { return static_cast<int>(terms.size()) - 1; }
  // b-file style lines "n a(n)", offset 0.
  std::string bfile() const;

  friend bool operator==(const CountingSequence&, const CountingSequence&) = default;
};

// Thrown when the configured node budget runs out. Carries the largest size
// whose term was completed, plus the partial sequence up to it.
class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(int size_reached, std::vector<BigInt> partial)
      : std::runtime_error("enumeration node budget exceeded after size " +
                           std::to_string(size_reached)),
        size_reached_(size_reached),
        partial_(std::move(partial)) {}

  int size_reached() const { return size_reached_; }
  const std::vector<BigInt>& partial_terms() const { return partial_; }

 private:
  int size_reached_;
  std::vector<BigInt> partial_;
};

// Exact number of permutations of size n avoiding every element of B.
BigInt count_avoiders(const PermClass& c, int n, const EnumLimits& limits = {});

// terms[0..N]; one incremental pass, so the prefix costs little more than
// the last term.
CountingSequence counting_sequence(const PermClass& c, int N, const EnumLimits& limits = {});

// Exact count of Av(P) via direct POP-occurrence checks, independent of
// basis_of_pop. Must agree with count_avoiders(basis_of_pop(P), n).
BigInt count_pop_avoiders(const Poset& p, int n, const EnumLimits& limits = {});
CountingSequence pop_counting_sequence(const Poset& p, int N, const EnumLimits& limits = {});

}  // namespace pops
