#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pops/enumerate.hpp"
#include "pops/genfunc.hpp"

namespace pops {

struct OeisSequence {
  std::string anum;           // "A" + 6 digits
  long offset = 0;            // index of terms.front()
  std::vector<BigInt> terms;  // consecutive from offset

  friend bool operator==(const OeisSequence&, const OeisSequence&) = default;
};

class OeisError : public std::runtime_error {
 public:
  enum class Kind { bad_anum, cache_miss, network, malformed };
  OeisError(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

struct OeisOptions {
  // Cache directory; empty means $POPS_OEIS_CACHE, else "./oeis-cache".
  std::string cache_dir;
  bool allow_network = false;  // live fetch is opt-in
  int timeout_ms = 10000;
};

bool valid_anum(std::string_view anum);

// b-file content ("n a(n)" lines, '#' comments ignored) -> sequence.
OeisSequence parse_bfile(std::string_view anum, std::string_view content);
std::string to_bfile(const OeisSequence& seq);

std::string oeis_cache_path(const std::string& cache_dir, std::string_view anum);

// Consults the cache first; on a live fetch writes the cache atomically
// (write-temp-then-rename). Throws OeisError.
OeisSequence fetch_sequence(std::string_view anum, const OeisOptions& opts = {});

// Compares seq terms with the OEIS entry, folding the entry's offset into
// the shift: terms[n] is matched against a(n + shift).
MatchReport compare_with_oeis(const CountingSequence& seq, std::string_view anum,
                              int shift, const OeisOptions& opts = {});
MatchReport compare_with_oeis(const std::vector<BigInt>& terms, std::string_view anum,
                              int shift, const OeisOptions& opts = {});

}  // namespace pops
