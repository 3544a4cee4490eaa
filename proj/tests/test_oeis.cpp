#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>

#include "pops/catalog.hpp"
#include "pops/oeis.hpp"

using pops::BigInt;
using pops::compare_with_oeis;
using pops::fetch_sequence;
using pops::OeisError;
using pops::OeisOptions;
using pops::OeisSequence;
using pops::parse_bfile;

namespace {

std::string fixture_dir() {
  const char* dir = std::getenv("POPS_OEIS_CACHE");
  REQUIRE(dir != nullptr);
  return dir;
}

OeisOptions offline() { return OeisOptions{.cache_dir = fixture_dir()}; }

}  // namespace

TEST_CASE("A-number grammar") {
  CHECK(pops::valid_anum("A001035"));
  CHECK(pops::valid_anum("A000012"));
  CHECK_FALSE(pops::valid_anum("not-an-anum"));
  CHECK_FALSE(pops::valid_anum("A1035"));
  CHECK_FALSE(pops::valid_anum("A00103x"));
  CHECK_FALSE(pops::valid_anum("B001035"));
  CHECK_THROWS_AS(fetch_sequence("not-an-anum", offline()), OeisError);
}

TEST_CASE("b-file parsing handles comments and rejects damage") {
  OeisSequence seq = parse_bfile("A000045", "# header\n0 0\n1 1\n2 1\n3 2\n\n");
  CHECK(seq.offset == 0);
  CHECK(seq.terms == std::vector<BigInt>{0, 1, 1, 2});

  OeisSequence shifted = parse_bfile("A000001", "5 10\n6 11\n");
  CHECK(shifted.offset == 5);

  CHECK_THROWS_AS(parse_bfile("A000001", "1 2\n3 4\n"), OeisError);   // gap
  CHECK_THROWS_AS(parse_bfile("A000001", "1 two\n"), OeisError);      // bad term
  CHECK_THROWS_AS(parse_bfile("A000001", "oops\n"), OeisError);       // bad line
  CHECK_THROWS_AS(parse_bfile("A000001", "# only\n"), OeisError);     // empty
}

TEST_CASE("b-file writing round-trips") {
  OeisSequence seq;
  seq.anum = "A999000";
  seq.offset = 2;
  seq.terms = {BigInt(5), BigInt("123456789012345678901234567890"), BigInt(7)};
  CHECK(parse_bfile(seq.anum, pops::to_bfile(seq)) == seq);
}

TEST_CASE("cached fixtures carry the published values") {
  OeisSequence posets = fetch_sequence("A001035", offline());
  CHECK(posets.offset == 0);
  REQUIRE(posets.terms.size() >= 7);
  CHECK(posets.terms[0] == 1);
  CHECK(posets.terms[2] == 3);
  CHECK(posets.terms[3] == 19);
  CHECK(posets.terms[4] == 219);
  CHECK(posets.terms[5] == 4231);
  CHECK(posets.terms[6] == 130023);

  OeisSequence sym = fetch_sequence("A366705", offline());
  CHECK(sym.offset == 1);
  CHECK(sym.terms == std::vector<BigInt>{1, 2, 7, 64, 1068, 32651});

  for (const std::string& anum : pops::catalog::cited_anums()) {
    CAPTURE(anum);
    CHECK_NOTHROW(fetch_sequence(anum, offline()));
  }
}

TEST_CASE("a cache miss offline is a distinct error from a bad A-number") {
  try {
    fetch_sequence("A999999", offline());
    FAIL("expected a cache miss");
  } catch (const OeisError& e) {
    CHECK(e.kind() == OeisError::Kind::cache_miss);
  }
  try {
    fetch_sequence("junk", offline());
    FAIL("expected a grammar failure");
  } catch (const OeisError& e) {
    CHECK(e.kind() == OeisError::Kind::bad_anum);
  }
}

TEST_CASE("cache round-trips through a fresh directory") {
  OeisSequence seq = fetch_sequence("A000012", offline());
  auto tmp = std::filesystem::temp_directory_path() / "pops-oeis-test-cache";
  std::filesystem::create_directories(tmp);
  std::string path = pops::oeis_cache_path(tmp.string(), "A000012");
  std::ofstream(path) << pops::to_bfile(seq);
  OeisSequence again = fetch_sequence("A000012", OeisOptions{.cache_dir = tmp.string()});
  CHECK(again == seq);
  std::filesystem::remove_all(tmp);
}

TEST_CASE("comparisons fold the entry offset into the shift") {
  // All-ones: counts of the class avoiding 12.
  pops::CountingSequence ones = pops::counting_sequence(pops::PermClass::parse("12"), 9);
  CHECK(compare_with_oeis(ones, "A000012", 0, offline()).agree);

  // Offset-1 entry: term n pairs with sequence index n+1.
  std::vector<BigInt> sym_counts{1, 2, 7, 64, 1068, 32651};
  CHECK(compare_with_oeis(sym_counts, "A366705", 1, offline()).agree);
  CHECK_FALSE(compare_with_oeis(sym_counts, "A366705", 2, offline()).agree);
}

TEST_CASE("comparisons never mutate the cache") {
  std::string path = pops::oeis_cache_path(fixture_dir(), "A000012");
  std::ifstream before_in(path);
  std::string before((std::istreambuf_iterator<char>(before_in)),
                     std::istreambuf_iterator<char>());
  pops::CountingSequence ones = pops::counting_sequence(pops::PermClass::parse("12"), 6);
  compare_with_oeis(ones, "A000012", 0, offline());
  std::ifstream after_in(path);
  std::string after((std::istreambuf_iterator<char>(after_in)),
                    std::istreambuf_iterator<char>());
  CHECK(before == after);
}

TEST_CASE("insufficient overlap is rejected") {
  pops::CountingSequence tiny = pops::counting_sequence(pops::PermClass::parse("12"), 3);
  CHECK_THROWS_AS(compare_with_oeis(tiny, "A000012", 0, offline()),
                  std::invalid_argument);
}
