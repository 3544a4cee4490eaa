#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace pops {

// A total order l_1 < l_2 < ... < l_k on the labels {1..k}.
struct TotalOrder {
  std::vector<uint8_t> order;

  friend bool operator==(const TotalOrder&, const TotalOrder&) = default;
  friend bool operator<(const TotalOrder& a, const TotalOrder& b) {
    return a.order < b.order;
  }
};

// A labeled strict partial order on {1..k}, stored as the full (transitively
// closed) relation. Minimum size is 1: a size-0 POP would make Av(P) empty.
class Poset {
 public:
  // The transitive closure of `relations` (pairs (a,b) meaning a < b).
  // Throws std::invalid_argument on labels out of range or if the closure
  // would create a cycle.
  Poset(int k, const std::vector<std::pair<int, int>>& relations);

  static Poset antichain(int k) { return Poset(k, {}); }
  static Poset chain(const std::vector<int>& labels_bottom_up);

  // Text forms: compact "k: a<b, c<d" or JSON {"size":k,"relations":[[a,b],..]}.
  static Poset parse(std::string_view text);
  std::string str() const;        // compact form, cover relations only
  std::string json() const;       // JSON form, cover relations only

  int size() const { return k_; }
  bool less(int a, int b) const { return (lt_[a - 1] >> (b - 1)) & 1u; }

  // Number of elements in a longest chain; bipartite means height() <= 2.
  int height() const;

  std::vector<std::pair<int, int>> relations() const;        // all pairs a<b
  std::vector<std::pair<int, int>> cover_relations() const;  // transitive reduction

  std::vector<int> maximal_elements() const;

  // All linear extensions, in lexicographic order of their sequences.
  std::vector<TotalOrder> linear_extensions() const;
  uint64_t linear_extension_count() const;

  friend bool operator==(const Poset&, const Poset&) = default;
  friend bool operator<(const Poset& a, const Poset& b);

  // Relation row as a bitmask: bit (b-1) set iff a < b. Internal fast path
  // for the enumeration engine.
  uint32_t row(int a) const { return lt_[a - 1]; }

 private:
  Poset() = default;
  int k_ = 0;
  std::vector<uint32_t> lt_;  // lt_[a-1] bit (b-1): a < b
};

// complement-labels replaces each label i by k+1-i; reverse-relations turns
// every a<b into b<a.
enum class PosetTransform { complement_labels, reverse_relations };

Poset transform_poset(const Poset& p, PosetTransform t);

// The up-down fence on positions 1..n: labels[0] < labels[1] > labels[2] < ...
// (position 1 is a valley). Throws if labels is not a bijection on {1..n}.
Poset zigzag_poset(const std::vector<int>& labels);

// Yields every labeled poset on {1..k} exactly once, in a deterministic
// order. k <= 5 (throws std::invalid_argument beyond the bound).
void for_each_poset(int k, const std::function<void(const Poset&)>& fn);
std::vector<Poset> enumerate_posets(int k);

}  // namespace pops
