#include "pops/oeis.hpp"

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <sstream>

#include <httplib.h>

namespace pops {

namespace {

namespace fs = std::filesystem;

// Cache writes are serialized; readers never need the lock because files
// appear atomically via rename.
std::mutex cache_write_mu;

std::string default_cache_dir() {
  if (const char* env = std::getenv("POPS_OEIS_CACHE")) return env;
  return "oeis-cache";
}

}  // namespace

bool valid_anum(std::string_view anum) {
  if (anum.size() != 7 || anum[0] != 'A') return false;
  for (size_t i = 1; i < anum.size(); ++i) {
    if (!isdigit(static_cast<unsigned char>(anum[i]))) return false;
  }
  return true;
}

OeisSequence parse_bfile(std::string_view anum, std::string_view content) {
  OeisSequence seq;
  seq.anum = std::string(anum);
  std::istringstream in{std::string(content)};
  std::string line;
  bool first = true;
  long expect = 0;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    size_t b = line.find_first_not_of(" \t\r");
    if (b == std::string::npos) continue;
    if (line[b] == '#') continue;
    std::istringstream fields(line);
    long n;
    std::string term;
    if (!(fields >> n >> term)) {
      throw OeisError(OeisError::Kind::malformed,
                      seq.anum + ": malformed b-file line " + std::to_string(lineno));
    }
    BigInt value;
    if (value.set_str(term, 10) != 0) {
      throw OeisError(OeisError::Kind::malformed,
                      seq.anum + ": malformed term on b-file line " + std::to_string(lineno));
    }
    if (first) {
      seq.offset = n;
      expect = n;
      first = false;
    }
    if (n != expect) {
      throw OeisError(OeisError::Kind::malformed,
                      seq.anum + ": b-file indices not consecutive at line " +
                          std::to_string(lineno));
    }
    ++expect;
    seq.terms.push_back(std::move(value));
  }
  if (seq.terms.empty()) {
    throw OeisError(OeisError::Kind::malformed, seq.anum + ": empty b-file");
  }
  return seq;
}

std::string to_bfile(const OeisSequence& seq) {
  std::string out;
  for (size_t i = 0; i < seq.terms.size(); ++i) {
    out += std::to_string(seq.offset + static_cast<long>(i));
    out.push_back(' ');
    out += seq.terms[i].get_str();
    out.push_back('\n');
  }
  return out;
}

std::string oeis_cache_path(const std::string& cache_dir, std::string_view anum) {
  const std::string dir = cache_dir.empty() ? default_cache_dir() : cache_dir;
  return (fs::path(dir) / ("b" + std::string(anum.substr(1)) + ".txt")).string();
}

namespace {

OeisSequence fetch_live(std::string_view anum, const OeisOptions& opts) {
  const std::string host = "oeis.org";
  const std::string path =
      "/" + std::string(anum) + "/b" + std::string(anum.substr(1)) + ".txt";
  httplib::Client client(host);
  client.set_connection_timeout(opts.timeout_ms / 1000, (opts.timeout_ms % 1000) * 1000);
  client.set_read_timeout(opts.timeout_ms / 1000, (opts.timeout_ms % 1000) * 1000);
  client.set_follow_location(true);
  auto res = client.Get(path);
  if (!res || res->status != 200) {
    throw OeisError(OeisError::Kind::network,
                    std::string(anum) + ": live fetch failed (" +
                        (res ? "HTTP " + std::to_string(res->status) : "no connection") +
                        ")");
  }
  return parse_bfile(anum, res->body);
}

void write_cache_atomic(const std::string& path, const std::string& content) {
  std::lock_guard<std::mutex> lock(cache_write_mu);
  fs::path target(path);
  if (!target.parent_path().empty()) {
    std::error_code ec;
    fs::create_directories(target.parent_path(), ec);
  }
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) throw OeisError(OeisError::Kind::network, "cannot write cache file " + tmp);
    out << content;
  }
  std::rename(tmp.c_str(), path.c_str());
}

}  // namespace

OeisSequence fetch_sequence(std::string_view anum, const OeisOptions& opts) {
  if (!valid_anum(anum)) {
    throw OeisError(OeisError::Kind::bad_anum,
                    "not an OEIS A-number: " + std::string(anum));
  }
  const std::string path = oeis_cache_path(opts.cache_dir, anum);
  if (fs::exists(path)) {
    std::ifstream in(path);
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_bfile(anum, buf.str());
  }
  if (!opts.allow_network) {
    throw OeisError(OeisError::Kind::cache_miss,
                    std::string(anum) + ": not cached at " + path +
                        " and live fetching is disabled");
  }
  OeisSequence seq = fetch_live(anum, opts);
  write_cache_atomic(path, to_bfile(seq));
  return seq;
}

MatchReport compare_with_oeis(const std::vector<BigInt>& terms, std::string_view anum,
                              int shift, const OeisOptions& opts) {
  OeisSequence seq = fetch_sequence(anum, opts);
  std::vector<BigRat> coeffs;
  coeffs.reserve(terms.size());
  for (const BigInt& t : terms) coeffs.emplace_back(t);
  // terms[n] is matched against a(n + shift) = seq.terms[n + shift - offset].
  return check_sequence_match(coeffs, seq.terms, shift - static_cast<int>(seq.offset));
}

MatchReport compare_with_oeis(const CountingSequence& seq, std::string_view anum,
                              int shift, const OeisOptions& opts) {
  return compare_with_oeis(seq.terms, anum, shift, opts);
}

}  // namespace pops
