#include "pops/enumerate.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <thread>

namespace pops {

std::string CountingSequence::bfile() const {
  std::string out;
  for (size_t n = 0; n < terms.size(); ++n) {
    out += std::to_string(n);
    out.push_back(' ');
    out += terms[n].get_str();
    out.push_back('\n');
  }
  return out;
}

namespace {

constexpr int kMaxWord = 32;

// Occurrence search for a classical pattern where the word index `gap`
// (holding the new maximum) is pinned to the pattern's own maximum. Because
// both are maxima, comparisons against them always hold, so consistency is
// only checked among the other positions.
struct Pattern {
  std::array<uint8_t, kMaxWord> vals{};
  int k = 0;
  int maxpos = 0;
};

struct PinnedPatternSearch {
  const uint8_t* w;
  int m;
  const Pattern& p;
  int gap;
  std::array<uint8_t, kMaxWord> val{};

  bool descend(int j, int start) {
    if (j == p.k) return true;
    if (j == p.maxpos) {
      if (start > gap) return false;
      return descend(j + 1, gap + 1);
    }
    uint8_t lo = 0, hi = static_cast<uint8_t>(m + 1);
    for (int a = 0; a < j; ++a) {
      if (a == p.maxpos) continue;
      if (p.vals[a] < p.vals[j]) {
        if (val[a] > lo) lo = val[a];
      } else if (val[a] < hi) {
        hi = val[a];
      }
    }
    const int last = (j < p.maxpos) ? gap - (p.maxpos - j) : m - (p.k - j);
    for (int i = start; i <= last; ++i) {
      const uint8_t v = w[i];
      if (v <= lo || v >= hi) continue;
      val[j] = v;
      if (descend(j + 1, i + 1)) return true;
    }
    return false;
  }
};

struct BasisChecker {
  std::vector<Pattern> pats;

  explicit BasisChecker(const PermClass& c) {
    for (const Permutation& b : c.basis()) {
      Pattern p;
      p.k = b.size();
      for (int i = 0; i < b.size(); ++i) {
        p.vals[i] = b.value_at(i);
        if (b.value_at(i) == b.size()) p.maxpos = i;
      }
      pats.push_back(p);
    }
    std::sort(pats.begin(), pats.end(),
              [](const Pattern& a, const Pattern& b) { return a.k < b.k; });
  }

  bool child_hit(const uint8_t* w, int m, int gap) const {
    for (const Pattern& p : pats) {
      if (p.k > m) break;
      PinnedPatternSearch s{w, m, p, gap};
      if (s.descend(0, 0)) return true;
    }
    return false;
  }
};

// POP-occurrence search with the word index `gap` required to be used by
// some element; value bounds come from the poset relations.
struct PopPinnedSearch {
  const uint8_t* w;
  int m;
  const Poset& p;
  int gap;
  std::array<uint8_t, kMaxWord> val{};  // 1-based elements

  bool descend(int j, int start, bool used) {
    if (j > p.size()) return used;
    if (!used && start > gap) return false;
    uint8_t lo = 0, hi = static_cast<uint8_t>(m + 1);
    for (int a = 1; a < j; ++a) {
      if (p.less(a, j) && val[a] > lo) lo = val[a];
      if (p.less(j, a) && val[a] < hi) hi = val[a];
    }
    // Elements j..k still need k-j+1 indices (j is 1-based).
    const int last = m - (p.size() - j) - 1;
    for (int i = start; i <= last; ++i) {
      if (!used && i > gap) return false;
      const uint8_t v = w[i];
      if (v <= lo || v >= hi) continue;
      val[j] = v;
      if (descend(j + 1, i + 1, used || i == gap)) return true;
    }
    return false;
  }
};

struct PopChecker {
  const Poset& p;

  bool child_hit(const uint8_t* w, int m, int gap) const {
    if (p.size() > m) return false;
    PopPinnedSearch s{w, m, p, gap};
    return s.descend(1, 0, false);
  }
};

// Avoiders of one size in a flat buffer, n bytes per permutation.
struct Level {
  int n = 0;
  std::vector<uint8_t> data;

  size_t count() const { return n == 0 ? (data.empty() ? 0 : 1) : data.size() / n; }
};

constexpr uint64_t kDefaultMaxLive = 2'000'000;

template <typename Checker>
class Engine {
 public:
  Engine(const Checker& chk, const EnumLimits& limits) : chk_(chk) {
    budget_ = limits.node_budget;
    max_live_ = limits.max_live ? limits.max_live : kDefaultMaxLive;
    workers_ = limits.workers ? limits.workers : std::thread::hardware_concurrency();
    if (workers_ < 1) workers_ = 1;
  }

  // terms[0..N]; terms[0] is 1 (the empty permutation; callers handle the
  // empty-pattern basis separately).
  std::vector<BigInt> run(int N) {
    std::vector<uint64_t> counts(static_cast<size_t>(N) + 1, 0);
    counts[0] = 1;
    Level cur;
    cur.n = 0;
    cur.data = {0};  // sentinel slot for the single empty permutation

    for (int n = 0; n < N; ++n) {
      const size_t parents = cur.count();
      if (parents == 0) break;
      const uint64_t children = static_cast<uint64_t>(parents) * (n + 1);
      if (budget_ && nodes_ + children > budget_) {
        throw BudgetExceeded(n, to_bigints(counts, n));
      }
      if (children > max_live_) {
        // Too big to keep materializing: count the rest depth first.
        dfs_remaining(cur, N, counts);
        return to_bigints(counts, N);
      }
      nodes_ += children;
      Level next = expand(cur, n);
      counts[n + 1] = next.count();
      cur = std::move(next);
    }
    return to_bigints(counts, N);
  }

 private:
  static std::vector<BigInt> to_bigints(const std::vector<uint64_t>& counts, int upto) {
    std::vector<BigInt> out;
    out.reserve(upto + 1);
    for (int i = 0; i <= upto; ++i) out.emplace_back(static_cast<unsigned long>(counts[i]));
    return out;
  }

  // One growth step: children of every avoider of size n, keeping those with
  // no forbidden occurrence through the inserted maximum.
  Level expand(const Level& cur, int n) {
    Level next;
    next.n = n + 1;
    const size_t parents = cur.count();
    const unsigned nw = (parents >= 4096 && workers_ > 1) ? workers_ : 1;
    if (nw == 1) {
      expand_chunk(cur, n, 0, parents, next.data);
      return next;
    }
    std::vector<std::vector<uint8_t>> blocks(nw);
    std::vector<std::thread> threads;
    for (unsigned t = 0; t < nw; ++t) {
      const size_t lo = parents * t / nw, hi = parents * (t + 1) / nw;
      threads.emplace_back(
          [&, t, lo, hi] { expand_chunk(cur, n, lo, hi, blocks[t]); });
    }
    for (auto& th : threads) th.join();
    for (auto& b : blocks) next.data.insert(next.data.end(), b.begin(), b.end());
    return next;
  }

  void expand_chunk(const Level& cur, int n, size_t lo, size_t hi,
                    std::vector<uint8_t>& out) const {
    std::array<uint8_t, kMaxWord> child{};
    for (size_t idx = lo; idx < hi; ++idx) {
      const uint8_t* parent = n == 0 ? nullptr : &cur.data[idx * n];
      for (int gap = 0; gap <= n; ++gap) {
        for (int i = 0; i < gap; ++i) child[i] = parent[i];
        child[gap] = static_cast<uint8_t>(n + 1);
        for (int i = gap; i < n; ++i) child[i + 1] = parent[i];
        if (!chk_.child_hit(child.data(), n + 1, gap)) {
          out.insert(out.end(), child.begin(), child.begin() + n + 1);
        }
      }
    }
  }

  void dfs_remaining(const Level& cur, int N, std::vector<uint64_t>& counts) {
    const size_t parents = cur.count();
    const unsigned nw = (parents >= static_cast<size_t>(workers_) && workers_ > 1)
                            ? workers_
                            : 1;
    std::atomic<uint64_t> nodes{nodes_};
    std::atomic<bool> over{false};
    std::vector<std::vector<uint64_t>> partial(nw,
                                               std::vector<uint64_t>(counts.size(), 0));
    auto work = [&](unsigned t) {
      std::array<uint8_t, kMaxWord> word{};
      const size_t lo = parents * t / nw, hi = parents * (t + 1) / nw;
      for (size_t idx = lo; idx < hi && !over.load(std::memory_order_relaxed); ++idx) {
        if (cur.n > 0) {
          std::copy_n(&cur.data[idx * cur.n], cur.n, word.begin());
        }
        dfs(word, cur.n, N, partial[t], nodes, over);
      }
    };
    if (nw == 1) {
      work(0);
    } else {
      std::vector<std::thread> threads;
      for (unsigned t = 0; t < nw; ++t) threads.emplace_back(work, t);
      for (auto& th : threads) th.join();
    }
    if (over.load()) {
      throw BudgetExceeded(cur.n, to_bigints(counts, cur.n));
    }
    for (const auto& part : partial) {
      for (size_t i = 0; i < counts.size(); ++i) counts[i] += part[i];
    }
    nodes_ = nodes.load();
  }

  void dfs(std::array<uint8_t, kMaxWord>& word, int n, int N,
           std::vector<uint64_t>& counts, std::atomic<uint64_t>& nodes,
           std::atomic<bool>& over) const {
    if (n == N) return;
    if (budget_) {
      const uint64_t seen = nodes.fetch_add(n + 1, std::memory_order_relaxed) + n + 1;
      if (seen > budget_) {
        over.store(true, std::memory_order_relaxed);
        return;
      }
    }
    std::array<uint8_t, kMaxWord> child{};
    for (int gap = 0; gap <= n && !over.load(std::memory_order_relaxed); ++gap) {
      for (int i = 0; i < gap; ++i) child[i] = word[i];
      child[gap] = static_cast<uint8_t>(n + 1);
      for (int i = gap; i < n; ++i) child[i + 1] = word[i];
      if (!chk_.child_hit(child.data(), n + 1, gap)) {
        ++counts[n + 1];
        dfs(child, n + 1, N, counts, nodes, over);
      }
    }
  }

  const Checker& chk_;
  uint64_t budget_ = 0;
  uint64_t max_live_ = kDefaultMaxLive;
  unsigned workers_ = 1;
  uint64_t nodes_ = 0;
};

bool basis_has_empty_perm(const PermClass& c) {
  return !c.basis().empty() && c.basis().front().size() == 0;
}

std::vector<BigInt> run_basis(const PermClass& c, int N, const EnumLimits& limits) {
  if (N < 0) throw std::invalid_argument("size must be nonnegative");
  if (N > kMaxWord - 1) throw std::invalid_argument("size out of engine range");
  if (basis_has_empty_perm(c)) {
    return std::vector<BigInt>(static_cast<size_t>(N) + 1, BigInt(0));
  }
  BasisChecker chk(c);
  Engine<BasisChecker> eng(chk, limits);
  return eng.run(N);
}

std::vector<BigInt> run_pop(const Poset& p, int N, const EnumLimits& limits) {
  if (N < 0) throw std::invalid_argument("size must be nonnegative");
  if (N > kMaxWord - 1) throw std::invalid_argument("size out of engine range");
  PopChecker chk{p};
  Engine<PopChecker> eng(chk, limits);
  return eng.run(N);
}

}  // namespace

BigInt count_avoiders(const PermClass& c, int n, const EnumLimits& limits) {
  return run_basis(c, n, limits).back();
}

CountingSequence counting_sequence(const PermClass& c, int N, const EnumLimits& limits) {
  return CountingSequence{run_basis(c, N, limits)};
}

BigInt count_pop_avoiders(const Poset& p, int n, const EnumLimits& limits) {
  return run_pop(p, n, limits).back();
}

CountingSequence pop_counting_sequence(const Poset& p, int N, const EnumLimits& limits) {
  return CountingSequence{run_pop(p, N, limits)};
}

}  // namespace pops
