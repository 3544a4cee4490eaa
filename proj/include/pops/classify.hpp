#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "pops/enumerate.hpp"
#include "pops/perm_class.hpp"

namespace pops {

// The four vertical juxtapositions whose bases govern the regular-insertion-
// encoding test: J1 = Av(321,2143,2413), J2 = Av(123,3142,3412),
// J3 = Av(132,312), J4 = Av(213,231).
const PermClass& juxtaposition_class(int i);  // i in 1..4

// Bitmask (bit i-1 for Ji) of the juxtaposition classes containing pi.
unsigned juxtaposition_membership(const Permutation& pi);

// True iff each of J1..J4 contains at least one basis element of c.
bool has_regular_insertion_encoding(const PermClass& c);

// Orbit of Av(B) under the order-8 symmetry group, sorted; size divides 8.
std::vector<PermClass> symmetry_orbit(const PermClass& c);

// The orbit member with the lexicographically smallest basis.
PermClass canonical_class(const PermClass& c);

struct LandscapeReport {
  int size = 0;
  uint64_t total_posets = 0;
  uint64_t symmetry_classes = 0;
  uint64_t bipartite_symmetry_classes = 0;

  friend bool operator==(const LandscapeReport&, const LandscapeReport&) = default;
};

// Census of all labeled posets of size k grouped into symmetry orbits of
// their classes. Bipartiteness (height <= 2) and the insertion-encoding test
// are computed independently per orbit and must agree (throws otherwise).
LandscapeReport pop_landscape(int k);

struct WilfPartition {
  // Parts in deterministic order (by smallest canonical member); classes
  // within a part keep their canonical order.
  std::vector<std::vector<PermClass>> parts;
  int horizon = 0;  // sequences certified equal on sizes 0..horizon only
};

// Partitions classes by exact equality of counting_sequence(., N).
WilfPartition wilf_partition(const std::vector<PermClass>& classes, int N,
                             const EnumLimits& limits = {});

}  // namespace pops
