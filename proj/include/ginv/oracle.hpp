#pragma once

#include "ginv/inverse.hpp"
#include "ginv/json_io.hpp"
#include "ginv/ring.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

// Brute-force ground truth over finite rings.  Everything here works from the
// definitions alone and never calls the inverse engine, so tests can compare
// the two sides without circularity.
namespace ginv::oracle {

struct ClassRow {
  Element element;
  bool in_group = false;
  bool in_one_three = false;
  bool in_one_four = false;
  bool in_core = false;
  bool in_dual_core = false;
  // first witness in canonical enumeration order, per class
  std::optional<Element> group, one_three, one_four, core, dual_core;
};

struct ClassificationReport {
  RingPtr ring;
  std::vector<ClassRow> rows;
};

// All x satisfying the definitional characterization of `kind` for a, in
// canonical enumeration order.
Result<std::vector<Element>> find_all(InverseKind kind, const Element& a);

Result<ClassificationReport> classify(const RingPtr& ring);

Json classification_to_json(const ClassificationReport& report);
std::string classification_to_text(const ClassificationReport& report);

// The nine equivalent decomposition conditions for core membership and their
// dual-core mirrors.  Variant 1 is membership itself; variants 2-9 pair a
// left/right ideal with an annihilator and test sum coverage plus, where the
// condition demands a direct sum, trivial intersection.
enum class DecompositionKind { core, dual_core };
Result<bool> decomposition_holds(const Element& a, int variant, DecompositionKind kind);

struct DirectFiniteness {
  bool direct_finite = false;
  std::optional<std::pair<Element, Element>> counterexample;  // x·y = 1 but y·x ≠ 1
};
Result<DirectFiniteness> is_direct_finite(const RingPtr& ring);

// The unique p with p² = p = p* and pR = aR, when a is {1,3}-invertible;
// empty otherwise.  More than one such p is a broken invariant.
Result<std::optional<Element>> unique_projection(const Element& a);

// First witness tuple (x1, u1, x2, u2, y1, v1, y2, v2) in canonical order
// satisfying the four unit decompositions, or empty if any part has none.
Result<std::optional<DecompositionWitness>> find_decomposition_witness(const Element& a);

}  // namespace ginv::oracle
