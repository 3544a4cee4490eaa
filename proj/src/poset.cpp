#include "pops/poset.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace pops {

namespace {

constexpr int kMaxPosetSize = 16;
constexpr int kMaxEnumerateSize = 5;

void check_size(int k) {
  if (k < 1) throw std::invalid_argument("poset size must be at least 1");
  if (k > kMaxPosetSize) throw std::invalid_argument("poset too large (max size 16)");
}

}  // namespace

Poset::Poset(int k, const std::vector<std::pair<int, int>>& relations) : k_(k) {
  check_size(k);
  lt_.assign(k, 0);
  for (auto [a, b] : relations) {
    if (a < 1 || a > k || b < 1 || b > k) {
      throw std::invalid_argument("poset relation label out of range 1..k");
    }
    if (a == b) throw std::invalid_argument("poset relation must join distinct labels");
    lt_[a - 1] |= 1u << (b - 1);
  }
  // Transitive closure, then antisymmetry (= acyclicity) check.
  for (int m = 0; m < k; ++m) {
    for (int a = 0; a < k; ++a) {
      if ((lt_[a] >> m) & 1u) lt_[a] |= lt_[m];
    }
  }
  for (int a = 0; a < k; ++a) {
    if ((lt_[a] >> a) & 1u) throw std::invalid_argument("relations contain a cycle");
    for (int b = 0; b < k; ++b) {
      if (((lt_[a] >> b) & 1u) && ((lt_[b] >> a) & 1u)) {
        throw std::invalid_argument("relations contain a cycle");
      }
    }
  }
}

Poset Poset::chain(const std::vector<int>& labels_bottom_up) {
  std::vector<std::pair<int, int>> rel;
  for (size_t i = 0; i + 1 < labels_bottom_up.size(); ++i) {
    rel.emplace_back(labels_bottom_up[i], labels_bottom_up[i + 1]);
  }
  return Poset(static_cast<int>(labels_bottom_up.size()), rel);
}

Poset Poset::parse(std::string_view text) {
  size_t b = text.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) throw std::invalid_argument("empty poset spec");
  if (text[b] == '{') {
    auto j = nlohmann::json::parse(text, nullptr, /*allow_exceptions=*/false);
    if (j.is_discarded() || !j.is_object() || !j.contains("size") ||
        !j["size"].is_number_integer()) {
      throw std::invalid_argument("malformed poset JSON");
    }
    int k = j["size"].get<int>();
    std::vector<std::pair<int, int>> rel;
    if (j.contains("relations")) {
      for (const auto& p : j["relations"]) {
        if (!p.is_array() || p.size() != 2) {
          throw std::invalid_argument("malformed poset relation");
        }
        rel.emplace_back(p[0].get<int>(), p[1].get<int>());
      }
    }
    return Poset(k, rel);
  }
  std::string s(text);
  size_t colon = s.find(':');
  if (colon == std::string::npos) throw std::invalid_argument("poset spec missing ':'");
  int k;
  try {
    k = std::stoi(s.substr(0, colon));
  } catch (const std::exception&) {
    throw std::invalid_argument("malformed poset size");
  }
  std::vector<std::pair<int, int>> rel;
  std::string rest = s.substr(colon + 1);
  std::istringstream in(rest);
  std::string tok;
  while (std::getline(in, tok, ',')) {
    std::string t;
    for (char c : tok) {
      if (!isspace(static_cast<unsigned char>(c))) t.push_back(c);
    }
    if (t.empty()) continue;
    size_t lt = t.find('<');
    if (lt == std::string::npos) throw std::invalid_argument("poset relation must be a<b");
    try {
      rel.emplace_back(std::stoi(t.substr(0, lt)), std::stoi(t.substr(lt + 1)));
    } catch (const std::exception&) {
      throw std::invalid_argument("malformed poset relation");
    }
  }
  return Poset(k, rel);
}

std::vector<std::pair<int, int>> Poset::relations() const {
  std::vector<std::pair<int, int>> out;
  for (int a = 1; a <= k_; ++a) {
    for (int b = 1; b <= k_; ++b) {
      if (less(a, b)) out.emplace_back(a, b);
    }
  }
  return out;
}

std::vector<std::pair<int, int>> Poset::cover_relations() const {
  std::vector<std::pair<int, int>> out;
  for (int a = 1; a <= k_; ++a) {
    for (int b = 1; b <= k_; ++b) {
      if (!less(a, b)) continue;
      bool cover = true;
      for (int m = 1; m <= k_; ++m) {
        if (less(a, m) && less(m, b)) {
          cover = false;
          break;
        }
      }
      if (cover) out.emplace_back(a, b);
    }
  }
  return out;
}

std::string Poset::str() const {
  std::string out = std::to_string(k_) + ":";
  bool first = true;
  for (auto [a, b] : cover_relations()) {
    out += first ? " " : ", ";
    out += std::to_string(a) + "<" + std::to_string(b);
    first = false;
  }
  return out;
}

std::string Poset::json() const {
  nlohmann::json j;
  j["size"] = k_;
  auto rel = nlohmann::json::array();
  for (auto [a, b] : cover_relations()) rel.push_back({a, b});
  j["relations"] = rel;
  return j.dump();
}

int Poset::height() const {
  // Longest chain by DP over increasing chain length.
  std::vector<int> h(k_, 1);
  bool changed = true;
  while (changed) {
    changed = false;
    for (int a = 0; a < k_; ++a) {
      for (int b = 0; b < k_; ++b) {
        if ((lt_[a] >> b) & 1u) {
          if (h[b] < h[a] + 1) {
            h[b] = h[a] + 1;
            changed = true;
          }
        }
      }
    }
  }
  return *std::max_element(h.begin(), h.end());
}

std::vector<int> Poset::maximal_elements() const {
  std::vector<int> out;
  for (int a = 0; a < k_; ++a) {
    if (lt_[a] == 0) out.push_back(a + 1);
  }
  return out;
}

bool operator<(const Poset& a, const Poset& b) {
  if (a.k_ != b.k_) return a.k_ < b.k_;
  return a.lt_ < b.lt_;
}

namespace {

void extend_order(const Poset& p, uint32_t placed, std::vector<uint8_t>& prefix,
                  std::vector<TotalOrder>& out) {
  const int k = p.size();
  if (static_cast<int>(prefix.size()) == k) {
    out.push_back(TotalOrder{prefix});
    return;
  }
  for (int a = 1; a <= k; ++a) {
    if ((placed >> (a - 1)) & 1u) continue;
    // a is currently minimal if every element below it is already placed.
    bool minimal = true;
    for (int b = 1; b <= k; ++b) {
      if (p.less(b, a) && !((placed >> (b - 1)) & 1u)) {
        minimal = false;
        break;
      }
    }
    if (!minimal) continue;
    prefix.push_back(static_cast<uint8_t>(a));
    extend_order(p, placed | (1u << (a - 1)), prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<TotalOrder> Poset::linear_extensions() const {
  std::vector<TotalOrder> out;
  std::vector<uint8_t> prefix;
  extend_order(*this, 0, prefix, out);
  return out;
}

uint64_t Poset::linear_extension_count() const {
  return linear_extensions().size();
}

Poset transform_poset(const Poset& p, PosetTransform t) {
  const int k = p.size();
  std::vector<std::pair<int, int>> rel;
  for (auto [a, b] : p.relations()) {
    if (t == PosetTransform::complement_labels) {
      rel.emplace_back(k + 1 - a, k + 1 - b);
    } else {
      rel.emplace_back(b, a);
    }
  }
  return Poset(k, rel);
}

Poset zigzag_poset(const std::vector<int>& labels) {
  const int n = static_cast<int>(labels.size());
  if (n < 1) throw std::invalid_argument("zig-zag poset needs at least one label");
  std::vector<bool> seen(n + 1, false);
  for (int v : labels) {
    if (v < 1 || v > n || seen[v]) {
      throw std::invalid_argument("zig-zag labels must be a bijection on 1..n");
    }
    seen[v] = true;
  }
  std::vector<std::pair<int, int>> rel;
  for (int i = 1; i < n; ++i) {
    if (i % 2 == 1) {
      rel.emplace_back(labels[i - 1], labels[i]);  // valley up to peak
    } else {
      rel.emplace_back(labels[i], labels[i - 1]);  // valley up to previous peak
    }
  }
  return Poset(n, rel);
}

namespace {

// Recursive three-state assignment per unordered pair (incomparable, a<b,
// b<a), pairs ordered by (max, min). A triple becomes fully decided exactly
// when its last pair is assigned, so transitivity is checked incrementally
// and dead branches are cut early.
struct PosetGen {
  int k;
  const std::function<void(const Poset&)>& fn;
  std::vector<std::pair<int, int>> pairs;  // 0-based (a, b), a < b
  std::vector<uint32_t> lt;                // partial relation

  void run() {
    for (int b = 1; b < k; ++b) {
      for (int a = 0; a < b; ++a) pairs.emplace_back(a, b);
    }
    lt.assign(k, 0);
    descend(0);
  }

  bool rel(int x, int y) const { return (lt[x] >> y) & 1u; }

  bool triples_ok(int a, int b) {
    // Triples {x, a, b} with x < a are now fully decided.
    for (int x = 0; x < a; ++x) {
      int e[3] = {x, a, b};
      for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
          for (int m = 0; m < 3; ++m) {
            if (i != j && j != m && i != m && rel(e[i], e[j]) && rel(e[j], e[m]) &&
                !rel(e[i], e[m])) {
              return false;
            }
          }
        }
      }
    }
    return true;
  }

  void descend(size_t idx) {
    if (idx == pairs.size()) {
      std::vector<std::pair<int, int>> rels;
      for (int a = 0; a < k; ++a) {
        for (int b = 0; b < k; ++b) {
          if ((lt[a] >> b) & 1u) rels.emplace_back(a + 1, b + 1);
        }
      }
      fn(Poset(k, rels));
      return;
    }
    auto [a, b] = pairs[idx];
    // Incomparability can also break transitivity (a chain through a third
    // element forces the pair), so every state is checked.
    if (triples_ok(a, b)) descend(idx + 1);
    lt[a] |= 1u << b;
    if (triples_ok(a, b)) descend(idx + 1);
    lt[a] &= ~(1u << b);
    lt[b] |= 1u << a;
    if (triples_ok(a, b)) descend(idx + 1);
    lt[b] &= ~(1u << a);
  }
};

}  // namespace

void for_each_poset(int k, const std::function<void(const Poset&)>& fn) {
  check_size(k);
  if (k > kMaxEnumerateSize) {
    throw std::invalid_argument("poset enumeration is bounded at size 5");
  }
  if (k <= 4) {
    // Brute force over all irreflexive relation candidates.
    const int npairs = k * (k - 1);
    std::vector<std::pair<int, int>> idx;
    for (int a = 0; a < k; ++a) {
      for (int b = 0; b < k; ++b) {
        if (a != b) idx.emplace_back(a, b);
      }
    }
    for (uint32_t mask = 0; mask < (1u << npairs); ++mask) {
      std::vector<uint32_t> lt(k, 0);
      for (int i = 0; i < npairs; ++i) {
        if ((mask >> i) & 1u) lt[idx[i].first] |= 1u << idx[i].second;
      }
      bool ok = true;
      for (int a = 0; a < k && ok; ++a) {
        for (int b = 0; b < k && ok; ++b) {
          if (!((lt[a] >> b) & 1u)) continue;
          if ((lt[b] >> a) & 1u) ok = false;  // antisymmetry
          if (lt[b] & ~lt[a]) ok = false;     // transitivity
        }
      }
      if (!ok) continue;
      std::vector<std::pair<int, int>> rels;
      for (int a = 0; a < k; ++a) {
        for (int b = 0; b < k; ++b) {
          if ((lt[a] >> b) & 1u) rels.emplace_back(a + 1, b + 1);
        }
      }
      fn(Poset(k, rels));
    }
    return;
  }
  PosetGen gen{k, fn};
  gen.run();
}

std::vector<Poset> enumerate_posets(int k) {
  std::vector<Poset> out;
  for_each_poset(k, [&](const Poset& p) { out.push_back(p); });
  return out;
}

}  // namespace pops
