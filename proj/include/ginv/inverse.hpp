#pragma once

#include "ginv/ring.hpp"

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace ginv {

enum class InverseKind { inner, group, one_three, one_four, core, dual_core };

// Certificate shapes.  definitional states each inverse by its defining
// equations and ideal memberships; five_eq and three_eq are the equational
// systems available for the core and dual core inverses only.
enum class CertForm { definitional, five_eq, three_eq };

std::string_view inverse_kind_name(InverseKind k);
std::optional<InverseKind> inverse_kind_from(std::string_view s);
std::string_view cert_form_name(CertForm f);
std::optional<CertForm> cert_form_from(std::string_view s);

// One checked identity.  Equational entries carry both evaluated sides.
// Ideal-membership entries carry the tested element as lhs and, when the
// membership holds, the witness reconstruction (a*w or w*a) as rhs.
struct EquationCheck {
  std::string label;
  std::optional<Element> lhs;
  std::optional<Element> rhs;
  bool holds = false;
};

struct Certificate {
  InverseKind kind;
  CertForm form;
  Element subject;
  Element witness;
  std::vector<EquationCheck> equations;
  bool valid = false;
};

// Checks whether x certifies as the requested kind of inverse of a, in the
// requested form, and returns the full evaluation trace.  Fails with
// UnsupportedForm when the kind/form combination does not exist.
Result<Certificate> verify(InverseKind kind, const Element& a, const Element& x, CertForm form);

// Upper bound for exhaustive element scans, default 65536; the environment
// variable GINV_MAX_RING_SIZE overrides it.  Scans on larger rings fail with
// RingTooLarge.  Solver-backed rings (matrices over a field) never scan.
std::uint64_t exhaustive_scan_limit();

// Inner inverse: canonical rank-factorization solution on field matrix
// rings, first witness in canonical order on other finite rings.
Result<Element> inner_inverse(const Element& a);

// Two-sided inverse of a unit.
Result<Element> unit_inverse(const Element& u);

// Group inverse via inner inverse g: with u = a^2*g + 1 - a*g and
// v = g*a^2 + 1 - g*a, a is group invertible exactly when u (equivalently v)
// is a unit, and then a^# = u^-2 * a = a * v^-2.  Both routes are computed
// and checked against each other.
Result<Element> group_inverse(const Element& a);

// {1,3}-inverse: solves a*ax = a* on field matrix rings (the two defining
// conditions are equivalent to that linear system), scans in canonical order
// on other finite rings.
Result<Element> one_three_inverse(const Element& a);

// {1,4}-inverse, as the star of a {1,3}-inverse of a*.
Result<Element> one_four_inverse(const Element& a);

// Core inverse a^# * a * x for any {1,3}-inverse x; exists exactly when a is
// both group invertible and {1,3}-invertible.  The failure detail names the
// missing factor.
Result<Element> core_inverse(const Element& a);

// Dual core inverse x * a * a^# for any {1,4}-inverse x; cross-checked
// against the star of the core inverse of a*.
Result<Element> dual_core_inverse(const Element& a);

// Core inverse through the unit w = a + 1 - a*b, given b with a*b*a = a,
// (ab)* = ab, a*b^2 = b and a in Ra^2: the result is w^-1 * a * b, which is
// checked to equal both b and core_inverse(a).
Result<Element> core_via_unit(const Element& a, const Element& b);

// Two left-multiplication equation systems that pin down the core inverse.
//   reflexive: b*a*b = b, (a*b)* = a*b, b*a^2 = a, plus a in a^2R; the core
//              inverse is b itself.
//   inner:     a*b*a = a, (a*b)* = a*b, b*a^2 = a; the core inverse is b*a*b.
enum class LeftEquationVariant { reflexive, inner };
Result<Element> core_from_left_equations(const Element& a, const Element& b,
                                         LeftEquationVariant variant);

// Witness for the two-sided decomposition route to the core inverse:
//   1 = a*x1 + u1 with a**u1 = 0      1 = x2*a* + u2 with u2*a = 0
//   1 = a*y1 + v1 with a*v1 = 0       1 = y2*a + v2 with v2*a = 0
struct DecompositionWitness {
  Element x1, u1;
  Element x2, u2;
  Element y1, v1;
  Element y2, v2;
};

struct DecompositionResult {
  Element core;                        // common value of the four expressions
  Element group;                       // a*y1^2, checked equal to y2^2*a
  std::array<Element, 2> one_three;    // x1 and star(x2), both {1,3}-inverses
};

// Validates the witness identities, evaluates a*y1^2*a*x1, a*y1^2*a*x2*,
// y2*a*x1 and y2*a*x2*, asserts they agree pairwise and with core_inverse(a),
// and reports the group/{1,3} byproducts.
Result<DecompositionResult> core_from_decomposition(const Element& a,
                                                    const DecompositionWitness& w);

// Builds a decomposition witness from the computed {1,3} and group inverses
// (x1 = a^(1,3), x2 = (a^(1,3))*, y1 = y2 = a^#).
Result<DecompositionWitness> decomposition_witness_from_inverses(const Element& a);

// Given 1 = a*r + u with a**u = 0, every {1,3}-inverse of a has the form
// r + (1 - r*a)*w1; evaluates that family member.
Result<Element> one_three_family(const Element& a, const Element& r, const Element& u,
                                 const Element& w1);

// Mirrored family for {1,4}-inverses: given 1 = s*a + v with v*a* = 0, the
// member s + w1*(1 - a*s), evaluated by star-transport of one_three_family.
Result<Element> one_four_family(const Element& a, const Element& s, const Element& v,
                                const Element& w1);

// Additive formulas.  Hypotheses are checked and failures name the one that
// does not hold; each result is asserted against the directly computed
// inverse of a + b.
//   group_sum:            a, b group invertible, ab = 0
//                         -> (1 - b*b^#)*a^# + b^#*(1 - a*a^#)
//   core_sum:             a, b core invertible, ab = 0, a^*b = 0
//                         -> (1 - b^@*b)*a^@ + b^@        (@ = core)
//   core_sum_commuting:   additionally ba = 0 -> a^@ + b^@
//   dual_core_sum:        a, b dual core invertible, ab = 0, ab^* = 0
//                         -> a_@ + b_@*(1 - a*a_@)
//   dual_core_sum_commuting: additionally ba = 0 -> a_@ + b_@
Result<Element> group_sum(const Element& a, const Element& b);
Result<Element> core_sum(const Element& a, const Element& b);
Result<Element> core_sum_commuting(const Element& a, const Element& b);
Result<Element> dual_core_sum(const Element& a, const Element& b);
Result<Element> dual_core_sum_commuting(const Element& a, const Element& b);

// For a with a in a^2R, three equivalent descriptions of "b is the core
// inverse of a":
//   [0] core_inverse(a) succeeds and equals b
//   [1] b*a^2 = a, (a*b)* = a*b and b in aR
//   [2] a is {1,3}-invertible, b*a^2 = a and b = b*a*h for a {1,3}-inverse h
//       (the supplied one_three_witness, or a computed one)
// The three truth values are returned and asserted equal.
Result<std::array<bool, 3>> check_core_characterizations(
    const Element& a, const Element& b, const std::optional<Element>& one_three_witness);

}  // namespace ginv
