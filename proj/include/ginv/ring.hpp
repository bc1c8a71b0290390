#pragma once

#include "ginv/error.hpp"
#include "ginv/rational.hpp"

#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace ginv {

class Ring;
using RingPtr = std::shared_ptr<const Ring>;

enum class IdealSide { left, right };

enum class RingKind {
  zmod,             // Z_n with the identity involution
  matrix_rational,  // d x d over Q, involution = transpose
  matrix_gf,        // d x d over GF(p), involution = transpose
  matrix_zmod,      // d x d over Z_n, involution = transpose
  table,            // explicit finite ring given by operation tables
};

enum class Involution { identity, transpose, table_map };

// Explicit finite ring presentation.  Entries are element indices.  An empty
// star vector requests the identity involution (valid only when the ring is
// commutative).
struct TableData {
  std::vector<std::vector<std::uint32_t>> add;
  std::vector<std::vector<std::uint32_t>> mul;
  std::vector<std::uint32_t> star;
  friend bool operator==(const TableData&, const TableData&) = default;
};

// Value-level description of a ring.  Two descriptors are equal when they
// describe the same structure (tables compare by content).
//
// Text grammar:
//   zmod:N           mat:rat:D           mat:gf:P:D          mat:zmod:N:D
// each optionally followed by ":inv=identity" or ":inv=transpose".
// Table rings have no text form; to_string() renders them as "table:<size>".
struct RingDescriptor {
  RingKind kind = RingKind::zmod;
  Involution involution = Involution::identity;
  std::uint64_t modulus = 0;  // zmod: n, matrix_gf: p, matrix_zmod: n
  int dim = 0;                // matrix kinds
  std::shared_ptr<const TableData> table;

  static std::optional<RingDescriptor> parse(std::string_view text);
  std::string to_string() const;
  friend bool operator==(const RingDescriptor& a, const RingDescriptor& b);
};

// Descriptor builders with the conventional involution for each kind.
RingDescriptor zmod_descriptor(std::uint64_t n);
RingDescriptor matrix_rational_descriptor(int dim);
RingDescriptor matrix_gf_descriptor(std::uint64_t p, int dim);
RingDescriptor matrix_zmod_descriptor(std::uint64_t n, int dim);
RingDescriptor table_descriptor(TableData data);

struct ModMatrix {
  int dim = 0;
  std::uint64_t mod = 0;
  std::vector<std::uint64_t> e;  // row-major residues in [0, mod)
  friend bool operator==(const ModMatrix&, const ModMatrix&) = default;
};

struct RatMatrix {
  int dim = 0;
  std::vector<Rational> e;  // row-major
  friend bool operator==(const RatMatrix&, const RatMatrix&) = default;
};

// Immutable ring element.  Carries a handle to its ring; arithmetic between
// elements of structurally different rings throws RingMismatch.
class Element {
 public:
  Element() = delete;

  const RingPtr& ring() const { return ring_; }

  std::uint64_t residue() const;         // zmod
  const ModMatrix& mod_matrix() const;   // matrix_gf / matrix_zmod
  const RatMatrix& rat_matrix() const;   // matrix_rational
  std::uint64_t table_index() const;     // table

  friend bool operator==(const Element& a, const Element& b);
  friend bool operator!=(const Element& a, const Element& b) { return !(a == b); }

 private:
  friend class Ring;
  using Payload = std::variant<std::uint64_t, ModMatrix, RatMatrix>;
  Element(RingPtr r, Payload p) : ring_(std::move(r)), payload_(std::move(p)) {}

  RingPtr ring_;
  Payload payload_;
};

// Index-level operation tables, built lazily for finite rings of size at
// most dense_limit().  Exhaustive scans use these instead of repeated
// element decode/encode.
struct DenseTables {
  std::uint32_t n = 0;
  std::uint32_t zero = 0;
  std::uint32_t one = 0;
  std::vector<std::uint32_t> add;   // n*n row-major
  std::vector<std::uint32_t> mul;   // n*n row-major
  std::vector<std::uint32_t> neg;   // n
  std::vector<std::uint32_t> star;  // n

  std::uint32_t plus(std::uint32_t a, std::uint32_t b) const { return add[static_cast<std::size_t>(a) * n + b]; }
  std::uint32_t times(std::uint32_t a, std::uint32_t b) const { return mul[static_cast<std::size_t>(a) * n + b]; }
};

class Ring : public std::enable_shared_from_this<Ring> {
  struct Key {};

 public:
  // Validates the descriptor and builds the ring.  Table presentations are
  // checked axiom by axiom (abelian group, associative unital multiplication,
  // distributivity, involution laws) up to table_validation_bound elements.
  static Result<RingPtr> make(RingDescriptor spec, std::uint64_t table_validation_bound = 64);
  static Result<RingPtr> make(std::string_view descriptor_text);

  Ring(Key, RingDescriptor spec);

  const RingDescriptor& descriptor() const { return spec_; }
  std::string descriptor_string() const { return spec_.to_string(); }
  RingKind kind() const { return spec_.kind; }
  bool is_finite() const { return spec_.kind != RingKind::matrix_rational; }
  // Rings whose elements are matrices over a field; the engine solves linear
  // systems on these instead of scanning.
  bool is_field_matrix() const {
    return spec_.kind == RingKind::matrix_rational || spec_.kind == RingKind::matrix_gf;
  }
  bool commutative() const { return commutative_; }
  // nullopt when infinite or when the cardinality overflows 64 bits.
  std::optional<std::uint64_t> size() const { return size_; }

  Element zero() const;
  Element one() const;
  Element add(const Element& a, const Element& b) const;
  Element sub(const Element& a, const Element& b) const;
  Element mul(const Element& a, const Element& b) const;
  Element neg(const Element& a) const;
  Element star(const Element& a) const;
  bool is_zero(const Element& a) const;
  bool is_one(const Element& a) const;

  // Canonical enumeration of finite rings: Z_n by residue, matrix rings in
  // row-major lexicographic order with entry (0,0) most significant, table
  // rings by table index.  Throws InfiniteRing on matrix_rational.
  Element element_at(std::uint64_t index) const;
  std::uint64_t index_of(const Element& a) const;

  // Element construction from external data; failures are MalformedSpec.
  Result<Element> from_integer(std::int64_t v) const;                                // zmod
  Result<Element> from_index(std::uint64_t idx) const;                               // finite rings
  Result<Element> from_entries(const std::vector<std::vector<Rational>>& rows) const;  // matrix rings

  struct IdealCheck {
    bool member = false;
    std::optional<Element> witness;  // x = a*w (right) or x = w*a (left)
  };
  // Membership of x in aR (right) or Ra (left), with witness.  Solver-backed
  // on field matrix rings, exhaustive scan on other finite rings.
  IdealCheck in_principal_ideal(const Element& x, const Element& a, IdealSide side) const;

  // Right annihilator {w : a*w = 0} or left annihilator {w : w*a = 0} in
  // canonical order.  Fails with InfiniteRing on matrix_rational.
  Result<std::vector<Element>> annihilator(const Element& a, IdealSide side) const;

  // Index tables for exhaustive work; nullptr when the ring is infinite or
  // larger than dense_limit().
  const DenseTables* dense_tables() const;
  static constexpr std::uint64_t dense_limit() { return 1024; }

 private:
  void check_same_ring(const Element& a) const;
  void check_compatible(const Element& a, const Element& b) const;

  RingDescriptor spec_;
  bool commutative_ = false;
  std::optional<std::uint64_t> size_;

  mutable std::once_flag dense_once_;
  mutable std::unique_ptr<DenseTables> dense_;
};

inline Element operator+(const Element& a, const Element& b) { return a.ring()->add(a, b); }
inline Element operator-(const Element& a, const Element& b) { return a.ring()->sub(a, b); }
inline Element operator*(const Element& a, const Element& b) { return a.ring()->mul(a, b); }
inline Element operator-(const Element& a) { return a.ring()->neg(a); }
inline Element star(const Element& a) { return a.ring()->star(a); }
inline Element sq(const Element& a) { return a.ring()->mul(a, a); }

}  // namespace ginv
