#include "pops/perm_class.hpp"

#include <algorithm>
#include <stdexcept>

namespace pops {

PermClass::PermClass(std::vector<Permutation> basis) : basis_(std::move(basis)) {
  std::sort(basis_.begin(), basis_.end());
  basis_.erase(std::unique(basis_.begin(), basis_.end()), basis_.end());
  for (size_t i = 0; i < basis_.size(); ++i) {
    for (size_t j = 0; j < basis_.size(); ++j) {
      if (i != j && contains(basis_[j], basis_[i])) {
        throw std::invalid_argument("basis is not an antichain: " + basis_[j].str() +
                                    " contains " + basis_[i].str());
      }
    }
  }
}

PermClass PermClass::parse(std::string_view text) {
  std::vector<Permutation> elems;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t sep = text.find_first_of(";\n", pos);
    std::string_view tok = text.substr(pos, sep == std::string_view::npos ? sep : sep - pos);
    size_t b = tok.find_first_not_of(" \t\r");
    if (b != std::string_view::npos) {
      size_t e = tok.find_last_not_of(" \t\r");
      elems.push_back(Permutation::parse(tok.substr(b, e - b + 1)));
    }
    if (sep == std::string_view::npos) break;
    pos = sep + 1;
  }
  return PermClass(std::move(elems));
}

std::string PermClass::str() const {
  std::string out;
  for (size_t i = 0; i < basis_.size(); ++i) {
    if (i) out.push_back(';');
    out += basis_[i].str();
  }
  return out;
}

bool PermClass::avoids(const Permutation& pi) const {
  for (const Permutation& b : basis_) {
    if (contains(pi, b)) return false;
  }
  return true;
}

PermClass apply_symmetry(const PermClass& c, SymmetryOp op) {
  std::vector<Permutation> mapped;
  mapped.reserve(c.basis_size());
  for (const Permutation& b : c.basis()) mapped.push_back(apply_symmetry(b, op));
  return PermClass(std::move(mapped));
}

Permutation perm_of_total_order(const TotalOrder& order) {
  return Permutation(std::vector<uint8_t>(order.order)).inverted();
}

namespace {

// Assigns poset elements 1..k to increasing word indices; the value bounds at
// element j come from the relations against already-assigned elements.
struct PopSearch {
  std::span<const uint8_t> w;
  const Poset& p;
  int n, k;
  std::vector<uint8_t> val;  // assigned value per element (1-based elements)

  bool descend(int j, int start) {
    if (j > k) return true;
    uint8_t lo = 0, hi = static_cast<uint8_t>(n + 1);
    for (int a = 1; a < j; ++a) {
      if (p.less(a, j) && val[a] > lo) lo = val[a];
      if (p.less(j, a) && val[a] < hi) hi = val[a];
    }
    // Elements j..k still need k-j+1 indices (j is 1-based).
    for (int i = start; i <= n - (k - j) - 1; ++i) {
      const uint8_t v = w[i];
      if (v <= lo || v >= hi) continue;
      val[j] = v;
      if (descend(j + 1, i + 1)) return true;
    }
    return false;
  }
};

}  // namespace

bool pop_contains(const Permutation& pi, const Poset& p) {
  if (p.size() > pi.size()) return false;
  PopSearch s{pi.values(), p, pi.size(), p.size(), {}};
  s.val.assign(p.size() + 1, 0);
  return s.descend(1, 0);
}

PermClass basis_of_pop(const Poset& p) {
  std::vector<Permutation> elems;
  for (const TotalOrder& ext : p.linear_extensions()) {
    elems.push_back(perm_of_total_order(ext));
  }
  return PermClass(std::move(elems));
}

std::optional<Poset> pop_of_class(const PermClass& c) {
  const auto& basis = c.basis();
  if (basis.empty()) return std::nullopt;
  const int k = basis.front().size();
  if (k == 0) return std::nullopt;
  for (const Permutation& b : basis) {
    if (b.size() != k) return std::nullopt;  // a POP basis is uniform in size
  }
  // a < b in the candidate poset iff a precedes b in the inverse of every
  // basis element, read as a total order.
  std::vector<std::pair<int, int>> rel;
  for (int a = 1; a <= k; ++a) {
    for (int b = 1; b <= k; ++b) {
      if (a == b) continue;
      bool everywhere = true;
      for (const Permutation& beta : basis) {
        // position of label a in the order beta^{-1} is beta(a).
        if (!(beta.value_at(a - 1) < beta.value_at(b - 1))) {
          everywhere = false;
          break;
        }
      }
      if (everywhere) rel.emplace_back(a, b);
    }
  }
  Poset candidate(k, rel);
  if (basis_of_pop(candidate) == c) return candidate;
  return std::nullopt;
}

}  // namespace pops
