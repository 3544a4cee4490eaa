#include "pops/catalog.hpp"

#include <array>
#include <stdexcept>

namespace pops::catalog {

namespace {

PermClass cls(std::initializer_list<const char*> words) {
  std::vector<Permutation> elems;
  for (const char* w : words) elems.push_back(Permutation::parse(w));
  return PermClass(std::move(elems));
}

RationalGF gf(std::vector<long> num, std::vector<long> den) {
  RationalGF out;
  for (long c : num) out.num.emplace_back(c);
  for (long c : den) out.den.emplace_back(c);
  return out;
}

AlgebraicGF agf(std::vector<std::array<long, 3>> monomials, std::vector<long> seed) {
  AlgebraicGF out;
  for (const auto& m : monomials) {
    out.minpoly.push_back({static_cast<int>(m[0]), static_cast<int>(m[1]), BigInt(m[2])});
  }
  for (long s : seed) out.seed.emplace_back(s);
  return out;
}

// Poset shapes of the A212198 table: {a,b} < c < {d,e} and the three-layer
// {a,b} < {c,d} < e.
Poset bowtie(int a, int b, int c, int d, int e) {
  return Poset(5, {{a, c}, {b, c}, {c, d}, {c, e}});
}

Poset tower(int a, int b, int c, int d, int e) {
  return Poset(5, {{a, c}, {a, d}, {b, c}, {b, d}, {c, e}, {d, e}});
}

}  // namespace

const PermClass& conjecture_class(int i) {
  static const PermClass g1 = cls({"31425", "31524", "32415", "32514", "41235",
                                   "41325", "42135", "42315", "43125", "43215"});
  static const PermClass g2 = cls({"41235", "41325", "42135", "42315", "43125", "43215"});
  static const PermClass g3 = cls({"51423", "51432", "52413", "52431", "53412",
                                   "53421", "54312", "54321"});
  static const PermClass g4 = cls({"45123", "45213", "54123", "54213"});
  static const PermClass g5 = cls({"45123", "45132", "45213", "54123", "54132", "54213"});
  static const PermClass g6 = cls({"45123", "45213"});
  switch (i) {
    case 1: return g1;
    case 2: return g2;
    case 3: return g3;
    case 4: return g4;
    case 5: return g5;
    case 6: return g6;
  }
  throw std::invalid_argument("conjecture index must be 1..6");
}

const AlgebraicGF& conjecture_gf(int i) {
  // Seeds are small brute-force counts, never literature values.
  static const AlgebraicGF g1 = agf({{1, 4, 4},  {0, 4, -1},  {1, 3, -16}, {0, 3, 6},
                                     {2, 2, 1},  {1, 2, 24},  {0, 2, -13}, {1, 1, -16},
                                     {0, 1, 12}, {1, 0, 4},   {0, 0, -4}},
                                    {1, 1, 2, 6, 24});
  // Squared form of 1 + 2x - 2x^2 - x sqrt(1 - 8x + 4x^2).
  static const AlgebraicGF g2 = agf({{0, 2, 1}, {0, 1, -2}, {1, 1, -4}, {2, 1, 4},
                                     {0, 0, 1}, {1, 0, 4},  {2, 0, -1}},
                                    {1, 1, 2});
  // Squared form of (5 - 4x - sqrt(1 - 8x + 8x^2)) / (4 - 4x).
  static const AlgebraicGF g3 = agf({{0, 2, 2},  {1, 2, -4}, {2, 2, 2},
                                     {0, 1, -5}, {1, 1, 9},  {2, 1, -4},
                                     {0, 0, 3},  {1, 0, -4}, {2, 0, 1}},
                                    {1, 1, 2});
  // Squared form of (2 - x - x sqrt(1 - 8x)) / (2 (1 - 2x + 2x^2)).
  static const AlgebraicGF g4 = agf({{0, 2, 4},  {1, 2, -16}, {2, 2, 32}, {3, 2, -32},
                                     {4, 2, 16}, {0, 1, -8},  {1, 1, 20}, {2, 1, -24},
                                     {3, 1, 8},  {0, 0, 4},   {1, 0, -4}, {3, 0, 8}},
                                    {1, 1, 2});
  // x(x-1)F^3 - x(x-1)F^2 - (2x-1)F - 1; the class counts are 1 + x F.
  static const AlgebraicGF g5 = agf({{2, 3, 1},  {1, 3, -1}, {2, 2, -1}, {1, 2, 1},
                                     {1, 1, -2}, {0, 1, 1},  {0, 0, -1}},
                                    {1, 2, 6});
  switch (i) {
    case 1: return g1;
    case 2: return g2;
    case 3: return g3;
    case 4: return g4;
    case 5: return g5;
  }
  throw std::invalid_argument("no generating function is on file for that conjecture");
}

const PermClass& conjecture6_reference_class() {
  static const PermClass ref = cls({"12345", "12354"});
  return ref;
}

std::vector<PermClass> a054872_classes() {
  return {
      cls({"12345", "13245", "21345", "23145", "31245", "32145"}),
      cls({"12354", "13254", "21354", "23154", "31254", "32154"}),
      cls({"12435", "13425", "21435", "23415", "31425", "32415"}),
      cls({"12534", "12543", "13524", "13542", "14523", "14532"}),
      cls({"12453", "13452", "21453", "23451", "31452", "32451"}),
      cls({"12534", "13524", "21534", "23514", "31524", "32514"}),
      cls({"12543", "13542", "21543", "23541", "31542", "32541"}),
      cls({"14235", "14325", "24135", "24315", "34125", "34215"}),
      cls({"41235", "41325", "42135", "42315", "43125", "43215"}),
      cls({"14253", "14352", "24153", "24351", "34152", "34251"}),
  };
}

std::vector<PermClass> a118376_classes() {
  return {
      cls({"12345", "12435", "13425", "21345", "21435", "23415", "31425", "32415"}),
      cls({"12354", "12453", "13254", "13452", "14253", "14352", "15243", "15342"}),
      cls({"12354", "12453", "13254", "21354", "21453", "23154", "31254", "32154"}),
      cls({"12354", "12453", "13452", "21354", "21453", "23451", "31452", "32451"}),
      cls({"13245", "14235", "14325", "23145", "24135", "24315", "34125", "34215"}),
      cls({"31245", "32145", "41235", "41325", "42135", "42315", "43125", "43215"}),
      cls({"12534", "12543", "13524", "13542", "14523", "14532", "15423", "15432"}),
      cls({"45123", "45132", "52134", "52143", "53124", "53142", "54123", "54132"}),
      cls({"12534", "12543", "13524", "21534", "21543", "23514", "31524", "32514"}),
      cls({"13542", "14523", "14532", "23541", "24513", "24531", "34512", "34521"}),
      cls({"13254", "14253", "14352", "23154", "24153", "24351", "34152", "34251"}),
      cls({"41523", "41532", "51234", "51243", "51324", "51342", "51423", "51432"}),
      cls({"21534", "21543", "31524", "31542", "41523", "41532", "51423", "51432"}),
      cls({"13452", "14253", "14352", "23451", "24153", "24351", "34152", "34251"}),
      cls({"31254", "32154", "41253", "41352", "42153", "42351", "43152", "43251"}),
      cls({"21354", "21453", "31254", "31452", "41253", "41352", "51243", "51342"}),
  };
}

std::vector<Poset> a212198_posets() {
  return {
      bowtie(1, 2, 3, 4, 5), tower(1, 2, 3, 5, 4), bowtie(1, 2, 4, 3, 5),
      bowtie(1, 2, 5, 3, 4), bowtie(1, 3, 4, 2, 5), bowtie(1, 5, 2, 3, 4),
      tower(1, 3, 4, 5, 2),  bowtie(1, 3, 5, 2, 4), tower(1, 5, 2, 4, 3),
      bowtie(1, 5, 3, 2, 4),
  };
}

std::vector<PermClass> a212198_classes() {
  std::vector<PermClass> out;
  for (const Poset& p : a212198_posets()) out.push_back(basis_of_pop(p));
  return out;
}

const std::vector<MBox>& m_class_boxes() {
  static const std::vector<MBox> boxes = {
      {{{2, 4, 1, 5, 3}},
       gf({1, -4, -1, 3, -1, -2}, {1, -5, 2, 5, -4, -4})},
      {{{1, 4, 2, 5, 3}},
       gf({1, -5, 2, 8, 0, -2}, {1, -6, 6, 8, -8, -6})},
      {{{2, 5, 1, 4, 3}},
       gf({1, -5, 5, -7, 2}, {1, -6, 9, -10, 6})},
      {{{1, 4, 3, 5, 2}},
       gf({1, -7, 16, -19, 15, -6}, {1, -8, 22, -31, 26, -14, 2})},
      {{{1, 5, 3, 4, 2}},
       gf({1, -7, 15, -12, -1, 6, -2}, {1, -8, 21, -23, 4, 10, -4})},
      {{{3, 5, 2, 1, 4}},
       gf({1, -6, 9, -3, -4, 1}, {1, -7, 14, -9, -5, 4})},
      {{{1, 5, 3, 2, 4}},
       gf({1, -9, 28, -32, -1, 29, -27, 11, -2},
          {1, -10, 36, -54, 17, 40, -51, 40, -26, 4})},
      {{{1, 2, 3, 4, 5},
        {1, 2, 3, 5, 4},
        {1, 3, 2, 4, 5},
        {3, 2, 1, 4, 5},
        {2, 1, 3, 5, 4},
        {2, 3, 1, 5, 4}},
       gf({1, -7, 14, -6}, {1, -8, 20, -16})},
      {{{1, 3, 2, 5, 4}, {1, 5, 4, 3, 2}},
       gf({1, -12, 57, -136, 171, -108, 27}, {1, -13, 68, -184, 273, -213, 70})},
      {{{1, 2, 4, 5, 3}, {2, 3, 1, 4, 5}},
       gf({1, -8, 21, -21, 7}, {1, -9, 28, -37, 18})},
      {{{2, 5, 1, 3, 4}},
       gf({1, -7, 15, -13, 5, 1}, {1, -8, 21, -24, 11})},
      {{{1, 4, 3, 2, 5}, {3, 4, 1, 2, 5}, {1, 5, 2, 3, 4}},
       gf({1, -7, 16, -16, 4}, {1, -8, 22, -28, 12})},
      {{{1, 4, 2, 3, 5}},
       gf({1, -5, 5, -5}, {1, -6, 9, -8, 2})},
      {{{3, 2, 1, 5, 4}},
       gf({1, -13, 69, -189, 267, -123, -169, 289, -168, 36},
          {1, -14, 81, -248, 413, -294, -149, 482, -414, 158, -8})},
      {{{1, 3, 4, 5, 2}},
       gf({1, -10, 37, -63, 50, -15}, {1, -11, 46, -93, 93, -38})},
      {{{2, 5, 3, 1, 4}},
       gf({1, -3, -4, -4}, {1, -4, -2, 0, 4})},
      {{{2, 4, 1, 3, 5}},
       gf({1, -4, -1, 2}, {1, -5, 2, 4, -2, -2})},
      {{{3, 1, 2, 5, 4}},
       gf({1, -9, 30, -48, 39, -13, 2}, {1, -10, 38, -72, 71, -32, 4})},
      {{{1, 3, 5, 4, 2}},
       gf({1, -7, 15, -13, 5, -1}, {1, -8, 21, -24, 11, -2})},
      {{{1, 4, 5, 3, 2}},
       gf({1, -7, 15, -14, 5}, {1, -8, 21, -25, 12})},
      {{{3, 5, 1, 2, 4}},
       gf({1, -6, 8, 2, -7, 6}, {1, -7, 13, -3, -12, 10, -4})},
      {{{1, 5, 4, 2, 3}},
       gf({1, -13, 70, -200, 314, -218, -92, 320, -275, 111, -18},
          {1, -14, 82, -260, 470, -428, -4, 492, -619, 344, -54, 30})},
      {{{1, 5, 2, 4, 3}},
       gf({1, -5, 4, -2}, {1, -6, 8, -4})},
  };
  return boxes;
}

const std::vector<std::vector<std::vector<int>>>& zigzag6_nontrivial_groups() {
  static const std::vector<std::vector<std::vector<int>>> groups = {
      {{1, 2, 5, 4, 3, 6}, {3, 4, 1, 2, 5, 6}, {6, 5, 1, 4, 3, 2}, {5, 4, 3, 6, 1, 2}},
      {{1, 2, 3, 5, 6, 4}, {2, 3, 1, 4, 5, 6}, {4, 6, 5, 3, 1, 2}, {2, 3, 1, 4, 6, 5}},
      {{1, 2, 3, 4, 5, 6},
       {6, 5, 4, 3, 1, 2},
       {1, 3, 2, 4, 5, 6},
       {3, 2, 1, 4, 5, 6},
       {1, 2, 4, 3, 5, 6},
       {1, 3, 2, 4, 6, 5},
       {5, 6, 4, 3, 1, 2},
       {4, 5, 6, 3, 1, 2}},
      {{1, 4, 2, 3, 5, 6}, {1, 2, 5, 3, 4, 6}},
      {{5, 2, 1, 4, 3, 6}, {1, 6, 3, 4, 5, 2}},
  };
  return groups;
}

Poset chain_2314() { return Poset(4, {{2, 3}, {3, 1}, {1, 4}}); }

Poset intro_example_poset() { return Poset(4, {{3, 1}, {1, 2}, {1, 4}}); }

Poset five_example_poset() { return Poset(5, {{3, 1}, {1, 2}, {1, 4}, {1, 5}}); }

const PermClass& degree10_class() {
  static const PermClass c = cls({"13542", "14523", "14532", "15324", "15423",
                                  "15432", "24513", "25314", "25413"});
  return c;
}

const AlgebraicGF& degree10_gf() {
  static const AlgebraicGF g = agf(
      {{7, 10, 1},
       {7, 9, -3}, {6, 9, -2},
       {7, 8, 3},  {6, 8, 6},  {5, 8, -1},
       {7, 7, -1}, {6, 7, -6}, {5, 7, 3},  {4, 7, 4},
       {6, 6, 2},  {5, 6, -5}, {4, 6, -7}, {3, 6, -2},
       {5, 5, 3},  {4, 5, 7},  {3, 5, -3}, {2, 5, 1},
       {4, 4, -3}, {3, 4, 4},  {2, 4, 3},
       {3, 3, -1}, {2, 3, -3}, {1, 3, -2},
       {2, 2, 2},
       {1, 1, 1},  {0, 1, 1},
       {0, 0, -1}},
      {1, 1, 2});
  return g;
}

const std::vector<std::string>& cited_anums() {
  static const std::vector<std::string> anums = {
      "A000012", "A001035", "A054872", "A118376", "A212198", "A216879",
      "A224295", "A228907", "A262480", "A277086", "A366705", "A366706",
  };
  return anums;
}

}  // namespace pops::catalog
