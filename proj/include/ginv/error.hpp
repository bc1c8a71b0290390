#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <variant>

namespace ginv {

// Failure codes surfaced by ring construction, the inverse engine and the
// exhaustive oracle.  Computations that can fail for a mathematical reason
// (the inverse does not exist, a hypothesis fails) report it through
// Result<T>; contract violations (mixing rings, malformed shapes) throw
// GinvError.
enum class Err {
  malformed_spec,
  involution_invalid,
  not_commutative,
  ring_mismatch,
  ring_too_large,
  infinite_ring,
  shape_mismatch,
  no_solution,
  not_a_unit,
  not_regular,
  not_group_invertible,
  not_one_three_invertible,
  not_one_four_invertible,
  not_core_invertible,
  not_dual_core_invertible,
  precondition_violated,
  unsupported_form,
  unknown_scenario,
  internal_error,
};

// Stable identifier used in JSON output and error messages.
inline std::string_view err_name(Err e) {
  switch (e) {
    case Err::malformed_spec: return "MalformedSpec";
    case Err::involution_invalid: return "InvolutionInvalid";
    case Err::not_commutative: return "NotCommutative";
    case Err::ring_mismatch: return "RingMismatch";
    case Err::ring_too_large: return "RingTooLarge";
    case Err::infinite_ring: return "InfiniteRing";
    case Err::shape_mismatch: return "ShapeMismatch";
    case Err::no_solution: return "NoSolution";
    case Err::not_a_unit: return "NotAUnit";
    case Err::not_regular: return "NotRegular";
    case Err::not_group_invertible: return "NotGroupInvertible";
    case Err::not_one_three_invertible: return "Not13Invertible";
    case Err::not_one_four_invertible: return "Not14Invertible";
    case Err::not_core_invertible: return "NotCoreInvertible";
    case Err::not_dual_core_invertible: return "NotDualCoreInvertible";
    case Err::precondition_violated: return "PreconditionViolated";
    case Err::unsupported_form: return "UnsupportedForm";
    case Err::unknown_scenario: return "UnknownScenario";
    case Err::internal_error: return "InternalError";
  }
  return "InternalError";
}

struct Failure {
  Err code = Err::internal_error;
  std::string detail;  // which hypothesis / factor / input failed
};

inline Failure fail(Err code, std::string detail = {}) {
  return Failure{code, std::move(detail)};
}

class GinvError : public std::runtime_error {
 public:
  GinvError(Err code, const std::string& detail)
      : std::runtime_error(detail.empty()
                               ? std::string(err_name(code))
                               : std::string(err_name(code)) + ": " + detail),
        code_(code) {}

  explicit GinvError(const Failure& f) : GinvError(f.code, f.detail) {}

  Err code() const { return code_; }

 private:
  Err code_;
};

// Minimal success-or-failure carrier.  value() throws GinvError when the
// result is a failure, so call sites that have already checked ok() stay
// terse and unchecked call sites still fail loudly.
template <class T>
class Result {
 public:
  Result(T value) : v_(std::move(value)) {}
  Result(Failure f) : v_(std::move(f)) {}

  bool ok() const { return std::holds_alternative<T>(v_); }
  explicit operator bool() const { return ok(); }

  const T& value() const& {
    if (!ok()) throw GinvError(failure());
    return std::get<T>(v_);
  }
  T&& take() && {
    if (!ok()) throw GinvError(failure());
    return std::move(std::get<T>(v_));
  }

  const Failure& failure() const {
    if (ok()) throw GinvError(Err::internal_error, "failure() on ok Result");
    return std::get<Failure>(v_);
  }

 private:
  std::variant<T, Failure> v_;
};

}  // namespace ginv
