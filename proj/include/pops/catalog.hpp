#pragma once

#include <string>
#include <vector>

#include "pops/genfunc.hpp"
#include "pops/perm_class.hpp"
#include "pops/poset.hpp"

namespace pops::catalog {

// Named inputs used by the reproduce pipelines and the verification suites:
// the six conjectured classes, the Wilf tables, and the published series data
// for size-5 zig-zag (M) classes.

// Conjectured classes 1..6, by their bases.
const PermClass& conjecture_class(int i);
// Their minimal polynomials / squared closed forms, seeded from small counts.
const AlgebraicGF& conjecture_gf(int i);  // i in 1..5 (no GF is known for 6)

// The class whose counting sequence defines the comparison target of
// conjecture 6: Av(12345, 12354).
const PermClass& conjecture6_reference_class();

// Rows of the three Wilf tables (classes sharing one counting sequence).
std::vector<PermClass> a054872_classes();  // 10 rows
std::vector<PermClass> a118376_classes();  // 16 rows
std::vector<PermClass> a212198_classes();  // 10 rows
std::vector<Poset> a212198_posets();

// Size-5 zig-zag (M) classes: the published grouping into 23 boxes, one
// zig-zag labeling per symmetry class, with each box's rational gf.
struct MBox {
  std::vector<std::vector<int>> labelings;
  RationalGF gf;
};
const std::vector<MBox>& m_class_boxes();

// The five nontrivial Wilf groups of size-6 zig-zag classes (labelings).
const std::vector<std::vector<std::vector<int>>>& zigzag6_nontrivial_groups();

// Worked-example posets: the 4-element chain 2<3<1<4, the 4-element example
// with relations 3<1, 1<2, 1<4, and the 5-element example with 3<1 under
// 2, 4, 5.
Poset chain_2314();
Poset intro_example_poset();
Poset five_example_poset();

// Degree-10 minimal polynomial example class (9 patterns of size 5).
const PermClass& degree10_class();
const AlgebraicGF& degree10_gf();

// Every OEIS A-number the artifact ships fixture b-files for.
const std::vector<std::string>& cited_anums();

}  // namespace pops::catalog
