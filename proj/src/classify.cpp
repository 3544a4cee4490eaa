#include "pops/classify.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>
#include <stdexcept>
#include <thread>

namespace pops {

const PermClass& juxtaposition_class(int i) {
  static const PermClass j1 = PermClass::parse("321;2143;2413");
  static const PermClass j2 = PermClass::parse("123;3142;3412");
  static const PermClass j3 = PermClass::parse("132;312");
  static const PermClass j4 = PermClass::parse("213;231");
  switch (i) {
    case 1: return j1;
    case 2: return j2;
    case 3: return j3;
    case 4: return j4;
  }
  throw std::invalid_argument("juxtaposition index must be 1..4");
}

unsigned juxtaposition_membership(const Permutation& pi) {
  unsigned mask = 0;
  for (int i = 1; i <= 4; ++i) {
    if (juxtaposition_class(i).avoids(pi)) mask |= 1u << (i - 1);
  }
  return mask;
}

bool has_regular_insertion_encoding(const PermClass& c) {
  if (c.basis().empty()) {
    throw std::invalid_argument("the insertion-encoding test needs a non-empty basis");
  }
  unsigned covered = 0;
  for (const Permutation& beta : c.basis()) {
    covered |= juxtaposition_membership(beta);
    if (covered == 0xF) return true;
  }
  return covered == 0xF;
}

std::vector<PermClass> symmetry_orbit(const PermClass& c) {
  std::set<PermClass> orbit;
  for (SymmetryOp op : kAllSymmetries) orbit.insert(apply_symmetry(c, op));
  return std::vector<PermClass>(orbit.begin(), orbit.end());
}

PermClass canonical_class(const PermClass& c) {
  return symmetry_orbit(c).front();
}

LandscapeReport pop_landscape(int k) {
  LandscapeReport rep;
  rep.size = k;

  struct Orbit {
    bool bipartite = false;
    bool rie = false;
  };
  std::map<PermClass, Orbit> orbits;
  for_each_poset(k, [&](const Poset& p) {
    ++rep.total_posets;
    PermClass basis = basis_of_pop(p);
    PermClass canon = canonical_class(basis);
    const bool bipartite = p.height() <= 2;
    const bool rie = has_regular_insertion_encoding(basis);
    if (bipartite != rie) {
      throw std::logic_error("insertion-encoding test deviates from bipartiteness on " +
                             p.str());
    }
    auto [it, inserted] = orbits.try_emplace(canon, Orbit{bipartite, rie});
    if (!inserted && (it->second.bipartite != bipartite || it->second.rie != rie)) {
      throw std::logic_error("bipartiteness is not constant on the orbit of " + p.str());
    }
  });
  rep.symmetry_classes = orbits.size();
  for (const auto& [canon, orbit] : orbits) {
    if (orbit.bipartite) ++rep.bipartite_symmetry_classes;
  }
  return rep;
}

WilfPartition wilf_partition(const std::vector<PermClass>& classes, int N,
                             const EnumLimits& limits) {
  WilfPartition out;
  out.horizon = N;

  // Sequences are computed once per canonical representative; symmetric
  // copies share counts.
  std::vector<PermClass> canon(classes.size(), PermClass::empty_basis());
  for (size_t i = 0; i < classes.size(); ++i) canon[i] = canonical_class(classes[i]);

  std::map<PermClass, CountingSequence> memo;
  std::mutex mu;
  std::vector<PermClass> todo;
  for (const PermClass& c : canon) {
    if (memo.try_emplace(c, CountingSequence{}).second) todo.push_back(c);
  }

  unsigned workers = limits.workers ? limits.workers : std::thread::hardware_concurrency();
  if (workers < 1) workers = 1;
  EnumLimits inner = limits;
  inner.workers = 1;
  std::exception_ptr failure;
  auto work = [&](unsigned t) {
    for (size_t i = t; i < todo.size(); i += workers) {
      try {
        CountingSequence seq = counting_sequence(todo[i], N, inner);
        std::lock_guard<std::mutex> lock(mu);
        memo[todo[i]] = std::move(seq);
      } catch (...) {
        std::lock_guard<std::mutex> lock(mu);
        if (!failure) failure = std::current_exception();
        return;
      }
    }
  };
  if (workers == 1 || todo.size() <= 1) {
    work(0);
  } else {
    std::vector<std::thread> threads;
    for (unsigned t = 0; t < workers; ++t) threads.emplace_back(work, t);
    for (auto& th : threads) th.join();
  }
  if (failure) std::rethrow_exception(failure);

  // Group by sequence; order parts by their smallest canonical member.
  std::map<PermClass, size_t> part_of_canon;
  std::vector<std::vector<size_t>> groups;  // indices into `classes`
  std::map<std::vector<BigInt>, size_t> by_seq;
  for (size_t i = 0; i < classes.size(); ++i) {
    const auto& seq = memo.at(canon[i]).terms;
    auto [it, inserted] = by_seq.try_emplace(seq, groups.size());
    if (inserted) groups.emplace_back();
    groups[it->second].push_back(i);
  }
  std::vector<size_t> order(groups.size());
  for (size_t g = 0; g < groups.size(); ++g) order[g] = g;
  auto smallest = [&](size_t g) -> const PermClass& {
    size_t best = groups[g].front();
    for (size_t i : groups[g]) {
      if (canon[i] < canon[best]) best = i;
    }
    return canon[best];
  };
  std::sort(order.begin(), order.end(),
            [&](size_t a, size_t b) { return smallest(a) < smallest(b); });
  for (size_t g : order) {
    std::vector<PermClass> part;
    for (size_t i : groups[g]) part.push_back(classes[i]);
    std::sort(part.begin(), part.end());
    out.parts.push_back(std::move(part));
  }
  return out;
}

}  // namespace pops
