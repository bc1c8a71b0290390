#include "ginv/ring.hpp"

#include "ginv/linalg.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <numeric>
#include <utility>

namespace ginv {

namespace {

constexpr std::uint64_t kMaxModulus = std::uint64_t(1) << 31;
constexpr std::uint64_t kMatrixZmodStateLimit = 65536;
constexpr int kMaxDim = 64;
// Materializing annihilators or dense tables on enormous finite rings is
// refused rather than attempted.
constexpr std::uint64_t kSubsetLimit = std::uint64_t(1) << 20;

std::optional<std::uint64_t> checked_pow(std::uint64_t base, unsigned exp) {
  std::uint64_t r = 1;
  for (unsigned i = 0; i < exp; ++i) {
    if (base != 0 && r > std::numeric_limits<std::uint64_t>::max() / base)
      return std::nullopt;
    r *= base;
  }
  return r;
}

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  if (p % 2 == 0) return p == 2;
  for (std::uint64_t d = 3; d * d <= p; d += 2)
    if (p % d == 0) return false;
  return true;
}

std::optional<std::uint64_t> parse_u64(std::string_view s) {
  std::uint64_t v = 0;
  const char* b = s.data();
  const char* e = b + s.size();
  auto [ptr, ec] = std::from_chars(b, e, v);
  if (ec != std::errc{} || ptr != e || s.empty()) return std::nullopt;
  return v;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  std::size_t pos = 0;
  while (true) {
    auto next = s.find(sep, pos);
    if (next == std::string_view::npos) {
      parts.push_back(s.substr(pos));
      return parts;
    }
    parts.push_back(s.substr(pos, next - pos));
    pos = next + 1;
  }
}

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b) { return std::gcd(a, b); }

// Inverse of a mod m for gcd(a, m) = 1; m = 1 yields 0.
std::uint64_t modinv(std::uint64_t a, std::uint64_t m) {
  if (m == 1) return 0;
  long long t = 0, nt = 1;
  long long r = static_cast<long long>(m), nr = static_cast<long long>(a % m);
  while (nr != 0) {
    long long q = r / nr;
    t = std::exchange(nt, t - q * nt);
    r = std::exchange(nr, r - q * nr);
  }
  if (t < 0) t += static_cast<long long>(m);
  return static_cast<std::uint64_t>(t);
}

ModMatrix mod_add(const ModMatrix& a, const ModMatrix& b) {
  ModMatrix r = a;
  for (std::size_t i = 0; i < r.e.size(); ++i) r.e[i] = (a.e[i] + b.e[i]) % a.mod;
  return r;
}

ModMatrix mod_neg(const ModMatrix& a) {
  ModMatrix r = a;
  for (auto& x : r.e) x = (a.mod - x) % a.mod;
  return r;
}

ModMatrix mod_mul(const ModMatrix& a, const ModMatrix& b) {
  const int d = a.dim;
  const std::uint64_t m = a.mod;
  ModMatrix r{d, m, std::vector<std::uint64_t>(static_cast<std::size_t>(d) * d, 0)};
  for (int i = 0; i < d; ++i)
    for (int k = 0; k < d; ++k) {
      const std::uint64_t aik = a.e[static_cast<std::size_t>(i) * d + k];
      if (aik == 0) continue;
      for (int j = 0; j < d; ++j) {
        auto& acc = r.e[static_cast<std::size_t>(i) * d + j];
        acc = (acc + aik * b.e[static_cast<std::size_t>(k) * d + j]) % m;
      }
    }
  return r;
}

ModMatrix mod_transpose(const ModMatrix& a) {
  ModMatrix r = a;
  for (int i = 0; i < a.dim; ++i)
    for (int j = 0; j < a.dim; ++j)
      r.e[static_cast<std::size_t>(j) * a.dim + i] = a.e[static_cast<std::size_t>(i) * a.dim + j];
  return r;
}

RatMatrix rat_add(const RatMatrix& a, const RatMatrix& b) {
  RatMatrix r = a;
  for (std::size_t i = 0; i < r.e.size(); ++i) r.e[i] = a.e[i] + b.e[i];
  return r;
}

RatMatrix rat_neg(const RatMatrix& a) {
  RatMatrix r = a;
  for (auto& x : r.e) x = -x;
  return r;
}

RatMatrix rat_mul(const RatMatrix& a, const RatMatrix& b) {
  const int d = a.dim;
  RatMatrix r{d, std::vector<Rational>(static_cast<std::size_t>(d) * d, Rational(0))};
  for (int i = 0; i < d; ++i)
    for (int k = 0; k < d; ++k) {
      const Rational& aik = a.e[static_cast<std::size_t>(i) * d + k];
      if (aik == 0) continue;
      for (int j = 0; j < d; ++j) {
        auto& acc = r.e[static_cast<std::size_t>(i) * d + j];
        acc += aik * b.e[static_cast<std::size_t>(k) * d + j];
      }
    }
  return r;
}

RatMatrix rat_transpose(const RatMatrix& a) {
  RatMatrix r = a;
  for (int i = 0; i < a.dim; ++i)
    for (int j = 0; j < a.dim; ++j)
      r.e[static_cast<std::size_t>(j) * a.dim + i] = a.e[static_cast<std::size_t>(i) * a.dim + j];
  return r;
}

}  // namespace

RingDescriptor zmod_descriptor(std::uint64_t n) {
  RingDescriptor d;
  d.kind = RingKind::zmod;
  d.involution = Involution::identity;
  d.modulus = n;
  return d;
}

RingDescriptor matrix_rational_descriptor(int dim) {
  RingDescriptor d;
  d.kind = RingKind::matrix_rational;
  d.involution = Involution::transpose;
  d.dim = dim;
  return d;
}

RingDescriptor matrix_gf_descriptor(std::uint64_t p, int dim) {
  RingDescriptor d;
  d.kind = RingKind::matrix_gf;
  d.involution = Involution::transpose;
  d.modulus = p;
  d.dim = dim;
  return d;
}

RingDescriptor matrix_zmod_descriptor(std::uint64_t n, int dim) {
  RingDescriptor d;
  d.kind = RingKind::matrix_zmod;
  d.involution = Involution::transpose;
  d.modulus = n;
  d.dim = dim;
  return d;
}

RingDescriptor table_descriptor(TableData data) {
  RingDescriptor d;
  d.kind = RingKind::table;
  d.involution = data.star.empty() ? Involution::identity : Involution::table_map;
  d.table = std::make_shared<const TableData>(std::move(data));
  return d;
}

std::optional<RingDescriptor> RingDescriptor::parse(std::string_view text) {
  auto parts = split(text, ':');
  if (parts.empty()) return std::nullopt;

  std::optional<Involution> requested;
  if (parts.size() >= 2 && parts.back().rfind("inv=", 0) == 0) {
    auto val = parts.back().substr(4);
    if (val == "identity")
      requested = Involution::identity;
    else if (val == "transpose")
      requested = Involution::transpose;
    else
      return std::nullopt;
    parts.pop_back();
  }

  RingDescriptor d;
  if (parts.size() == 2 && parts[0] == "zmod") {
    auto n = parse_u64(parts[1]);
    if (!n) return std::nullopt;
    d = zmod_descriptor(*n);
  } else if (parts.size() == 3 && parts[0] == "mat" && parts[1] == "rat") {
    auto dim = parse_u64(parts[2]);
    if (!dim || *dim > kMaxDim) return std::nullopt;
    d = matrix_rational_descriptor(static_cast<int>(*dim));
  } else if (parts.size() == 4 && parts[0] == "mat" && parts[1] == "gf") {
    auto p = parse_u64(parts[2]);
    auto dim = parse_u64(parts[3]);
    if (!p || !dim || *dim > kMaxDim) return std::nullopt;
    d = matrix_gf_descriptor(*p, static_cast<int>(*dim));
  } else if (parts.size() == 4 && parts[0] == "mat" && parts[1] == "zmod") {
    auto n = parse_u64(parts[2]);
    auto dim = parse_u64(parts[3]);
    if (!n || !dim || *dim > kMaxDim) return std::nullopt;
    d = matrix_zmod_descriptor(*n, static_cast<int>(*dim));
  } else {
    return std::nullopt;
  }
  if (requested) d.involution = *requested;
  return d;
}

std::string RingDescriptor::to_string() const {
  switch (kind) {
    case RingKind::zmod:
      return "zmod:" + std::to_string(modulus);
    case RingKind::matrix_rational:
      return "mat:rat:" + std::to_string(dim) +
             (involution == Involution::identity ? ":inv=identity" : "");
    case RingKind::matrix_gf:
      return "mat:gf:" + std::to_string(modulus) + ":" + std::to_string(dim) +
             (involution == Involution::identity ? ":inv=identity" : "");
    case RingKind::matrix_zmod:
      return "mat:zmod:" + std::to_string(modulus) + ":" + std::to_string(dim) +
             (involution == Involution::identity ? ":inv=identity" : "");
    case RingKind::table:
      return "table:" + std::to_string(table ? table->add.size() : 0);
  }
  return "?";
}

bool operator==(const RingDescriptor& a, const RingDescriptor& b) {
  if (a.kind != b.kind || a.involution != b.involution || a.modulus != b.modulus ||
      a.dim != b.dim)
    return false;
  if (a.kind != RingKind::table) return true;
  if (a.table == b.table) return true;
  if (!a.table || !b.table) return false;
  return *a.table == *b.table;
}

std::uint64_t Element::residue() const {
  if (ring_->kind() != RingKind::zmod)
    throw GinvError(Err::internal_error, "residue() on non-zmod element");
  return std::get<std::uint64_t>(payload_);
}

const ModMatrix& Element::mod_matrix() const {
  if (!std::holds_alternative<ModMatrix>(payload_))
    throw GinvError(Err::internal_error, "mod_matrix() on non-modular-matrix element");
  return std::get<ModMatrix>(payload_);
}

const RatMatrix& Element::rat_matrix() const {
  if (!std::holds_alternative<RatMatrix>(payload_))
    throw GinvError(Err::internal_error, "rat_matrix() on non-rational-matrix element");
  return std::get<RatMatrix>(payload_);
}

std::uint64_t Element::table_index() const {
  if (ring_->kind() != RingKind::table)
    throw GinvError(Err::internal_error, "table_index() on non-table element");
  return std::get<std::uint64_t>(payload_);
}

bool operator==(const Element& a, const Element& b) {
  if (a.ring_.get() != b.ring_.get() && !(a.ring_->descriptor() == b.ring_->descriptor()))
    return false;
  return a.payload_ == b.payload_;
}

Ring::Ring(Key, RingDescriptor spec) : spec_(std::move(spec)) {
  switch (spec_.kind) {
    case RingKind::zmod:
      commutative_ = true;
      size_ = spec_.modulus;
      break;
    case RingKind::matrix_rational:
      commutative_ = spec_.dim == 1;
      size_ = std::nullopt;
      break;
    case RingKind::matrix_gf:
    case RingKind::matrix_zmod:
      commutative_ = spec_.dim == 1;
      size_ = checked_pow(spec_.modulus, static_cast<unsigned>(spec_.dim) * spec_.dim);
      break;
    case RingKind::table:
      // commutativity established during validation; make() patches the flag
      size_ = spec_.table->add.size();
      break;
  }
}

Result<RingPtr> Ring::make(std::string_view descriptor_text) {
  auto d = RingDescriptor::parse(descriptor_text);
  if (!d)
    return fail(Err::malformed_spec,
                "unrecognized ring descriptor '" + std::string(descriptor_text) + "'");
  return make(std::move(*d));
}

Result<RingPtr> Ring::make(RingDescriptor spec, std::uint64_t table_validation_bound) {
  switch (spec.kind) {
    case RingKind::zmod: {
      if (spec.modulus < 2) return fail(Err::malformed_spec, "modulus must be at least 2");
      if (spec.modulus > kMaxModulus) return fail(Err::malformed_spec, "modulus exceeds 2^31");
      if (spec.involution != Involution::identity)
        return fail(Err::malformed_spec, "zmod supports the identity involution only");
      spec.dim = 0;
      spec.table.reset();
      return RingPtr(std::make_shared<Ring>(Key{}, std::move(spec)));
    }
    case RingKind::matrix_rational:
    case RingKind::matrix_gf:
    case RingKind::matrix_zmod: {
      if (spec.dim < 1 || spec.dim > kMaxDim)
        return fail(Err::malformed_spec, "matrix dimension out of range");
      if (spec.kind == RingKind::matrix_gf) {
        if (spec.modulus > kMaxModulus || !is_prime(spec.modulus))
          return fail(Err::malformed_spec, "matrix_gf modulus is not a prime up to 2^31");
      }
      if (spec.kind == RingKind::matrix_zmod) {
        if (spec.modulus < 2) return fail(Err::malformed_spec, "modulus must be at least 2");
        auto states = checked_pow(spec.modulus, static_cast<unsigned>(spec.dim) * spec.dim);
        if (!states || *states > kMatrixZmodStateLimit)
          return fail(Err::ring_too_large,
                      "matrix_zmod state space exceeds " + std::to_string(kMatrixZmodStateLimit) +
                          " elements");
      }
      if (spec.involution == Involution::table_map)
        return fail(Err::malformed_spec, "matrix rings use identity or transpose involutions");
      if (spec.involution == Involution::identity && spec.dim > 1)
        return fail(Err::not_commutative,
                    "identity involution requires a commutative ring");
      spec.table.reset();
      return RingPtr(std::make_shared<Ring>(Key{}, std::move(spec)));
    }
    case RingKind::table:
      break;
  }

  // table ring validation
  if (!spec.table) return fail(Err::malformed_spec, "table ring without tables");
  const TableData& t = *spec.table;
  const std::size_t n = t.add.size();
  if (n == 0) return fail(Err::malformed_spec, "table ring must be nonempty");
  if (n > table_validation_bound)
    return fail(Err::malformed_spec, "table ring size exceeds the validation bound of " +
                                         std::to_string(table_validation_bound));
  auto shape_ok = [n](const std::vector<std::vector<std::uint32_t>>& tab) {
    if (tab.size() != n) return false;
    for (const auto& row : tab) {
      if (row.size() != n) return false;
      for (auto v : row)
        if (v >= n) return false;
    }
    return true;
  };
  if (!shape_ok(t.add)) return fail(Err::malformed_spec, "addition table is not n x n over 0..n-1");
  if (!shape_ok(t.mul))
    return fail(Err::malformed_spec, "multiplication table is not n x n over 0..n-1");
  if (!t.star.empty()) {
    if (t.star.size() != n) return fail(Err::malformed_spec, "star map has wrong length");
    for (auto v : t.star)
      if (v >= n) return fail(Err::malformed_spec, "star map entry out of range");
  }

  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (t.add[a][b] != t.add[b][a])
        return fail(Err::malformed_spec, "addition is not commutative");
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c) {
        if (t.add[t.add[a][b]][c] != t.add[a][t.add[b][c]])
          return fail(Err::malformed_spec, "addition is not associative");
        if (t.mul[t.mul[a][b]][c] != t.mul[a][t.mul[b][c]])
          return fail(Err::malformed_spec, "multiplication is not associative");
        if (t.mul[a][t.add[b][c]] != t.add[t.mul[a][b]][t.mul[a][c]])
          return fail(Err::malformed_spec, "left distributivity fails");
        if (t.mul[t.add[a][b]][c] != t.add[t.mul[a][c]][t.mul[b][c]])
          return fail(Err::malformed_spec, "right distributivity fails");
      }

  std::optional<std::size_t> zero_idx;
  for (std::size_t e = 0; e < n && !zero_idx; ++e) {
    bool ok = true;
    for (std::size_t a = 0; a < n && ok; ++a) ok = t.add[e][a] == a;
    if (ok) zero_idx = e;
  }
  if (!zero_idx) return fail(Err::malformed_spec, "no additive identity");
  for (std::size_t a = 0; a < n; ++a) {
    bool has_neg = false;
    for (std::size_t b = 0; b < n && !has_neg; ++b) has_neg = t.add[a][b] == *zero_idx;
    if (!has_neg) return fail(Err::malformed_spec, "missing additive inverse");
  }

  std::optional<std::size_t> one_idx;
  for (std::size_t e = 0; e < n && !one_idx; ++e) {
    bool ok = true;
    for (std::size_t a = 0; a < n && ok; ++a) ok = t.mul[e][a] == a && t.mul[a][e] == a;
    if (ok) one_idx = e;
  }
  if (!one_idx) return fail(Err::malformed_spec, "no multiplicative identity");

  bool commutative = true;
  for (std::size_t a = 0; a < n && commutative; ++a)
    for (std::size_t b = 0; b < n && commutative; ++b)
      commutative = t.mul[a][b] == t.mul[b][a];

  if (t.star.empty()) {
    if (!commutative)
      return fail(Err::not_commutative,
                  "identity involution requires a commutative ring");
    spec.involution = Involution::identity;
  } else {
    spec.involution = Involution::table_map;
    for (std::size_t a = 0; a < n; ++a)
      if (t.star[t.star[a]] != a)
        return fail(Err::involution_invalid, "star is not self-inverse");
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) {
        if (t.star[t.add[a][b]] != t.add[t.star[a]][t.star[b]])
          return fail(Err::involution_invalid, "star is not additive");
        if (t.star[t.mul[a][b]] != t.mul[t.star[b]][t.star[a]])
          return fail(Err::involution_invalid, "star does not reverse products");
      }
  }

  auto ring = std::make_shared<Ring>(Key{}, std::move(spec));
  ring->commutative_ = commutative;
  return RingPtr(std::move(ring));
}

void Ring::check_same_ring(const Element& a) const {
  if (a.ring_.get() == this) return;
  if (!a.ring_ || !(a.ring_->spec_ == spec_))
    throw GinvError(Err::ring_mismatch, "element belongs to " +
                                            (a.ring_ ? a.ring_->descriptor_string() : "?") +
                                            ", expected " + descriptor_string());
}

void Ring::check_compatible(const Element& a, const Element& b) const {
  check_same_ring(a);
  check_same_ring(b);
}

Element Ring::zero() const {
  switch (spec_.kind) {
    case RingKind::zmod:
      return Element(shared_from_this(), std::uint64_t{0});
    case RingKind::matrix_rational:
      return Element(shared_from_this(),
                     RatMatrix{spec_.dim, std::vector<Rational>(
                                              static_cast<std::size_t>(spec_.dim) * spec_.dim,
                                              Rational(0))});
    case RingKind::matrix_gf:
    case RingKind::matrix_zmod:
      return Element(shared_from_this(),
                     ModMatrix{spec_.dim, spec_.modulus,
                               std::vector<std::uint64_t>(
                                   static_cast<std::size_t>(spec_.dim) * spec_.dim, 0)});
    case RingKind::table: {
      const TableData& t = *spec_.table;
      for (std::size_t e = 0; e < t.add.size(); ++e) {
        bool ok = true;
        for (std::size_t a = 0; a < t.add.size() && ok; ++a) ok = t.add[e][a] == a;
        if (ok) return Element(shared_from_this(), static_cast<std::uint64_t>(e));
      }
      throw GinvError(Err::internal_error, "validated table lost its zero");
    }
  }
  throw GinvError(Err::internal_error, "unknown ring kind");
}

Element Ring::one() const {
  switch (spec_.kind) {
    case RingKind::zmod:
      return Element(shared_from_this(), std::uint64_t{1 % spec_.modulus});
    case RingKind::matrix_rational: {
      RatMatrix m{spec_.dim, std::vector<Rational>(
                                 static_cast<std::size_t>(spec_.dim) * spec_.dim, Rational(0))};
      for (int i = 0; i < spec_.dim; ++i)
        m.e[static_cast<std::size_t>(i) * spec_.dim + i] = 1;
      return Element(shared_from_this(), std::move(m));
    }
    case RingKind::matrix_gf:
    case RingKind::matrix_zmod: {
      ModMatrix m{spec_.dim, spec_.modulus,
                  std::vector<std::uint64_t>(static_cast<std::size_t>(spec_.dim) * spec_.dim, 0)};
      for (int i = 0; i < spec_.dim; ++i)
        m.e[static_cast<std::size_t>(i) * spec_.dim + i] = 1 % spec_.modulus;
      return Element(shared_from_this(), std::move(m));
    }
    case RingKind::table: {
      const TableData& t = *spec_.table;
      for (std::size_t e = 0; e < t.mul.size(); ++e) {
        bool ok = true;
        for (std::size_t a = 0; a < t.mul.size() && ok; ++a)
          ok = t.mul[e][a] == a && t.mul[a][e] == a;
        if (ok) return Element(shared_from_this(), static_cast<std::uint64_t>(e));
      }
      throw GinvError(Err::internal_error, "validated table lost its one");
    }
  }
  throw GinvError(Err::internal_error, "unknown ring kind");
}

Element Ring::add(const Element& a, const Element& b) const {
  check_compatible(a, b);
  switch (spec_.kind) {
    case RingKind::zmod:
      return Element(shared_from_this(),
                     (std::get<std::uint64_t>(a.payload_) + std::get<std::uint64_t>(b.payload_)) %
                         spec_.modulus);
    case RingKind::matrix_rational:
      return Element(shared_from_this(),
                     rat_add(std::get<RatMatrix>(a.payload_), std::get<RatMatrix>(b.payload_)));
    case RingKind::matrix_gf:
    case RingKind::matrix_zmod:
      return Element(shared_from_this(),
                     mod_add(std::get<ModMatrix>(a.payload_), std::get<ModMatrix>(b.payload_)));
    case RingKind::table:
      return Element(shared_from_this(),
                     static_cast<std::uint64_t>(
                         spec_.table->add[std::get<std::uint64_t>(a.payload_)]
                                         [std::get<std::uint64_t>(b.payload_)]));
  }
  throw GinvError(Err::internal_error, "unknown ring kind");
}

Element Ring::mul(const Element& a, const Element& b) const {
  check_compatible(a, b);
  switch (spec_.kind) {
    case RingKind::zmod:
      return Element(shared_from_this(),
                     (std::get<std::uint64_t>(a.payload_) * std::get<std::uint64_t>(b.payload_)) %
                         spec_.modulus);
    case RingKind::matrix_rational:
      return Element(shared_from_this(),
                     rat_mul(std::get<RatMatrix>(a.payload_), std::get<RatMatrix>(b.payload_)));
    case RingKind::matrix_gf:
    case RingKind::matrix_zmod:
      return Element(shared_from_this(),
                     mod_mul(std::get<ModMatrix>(a.payload_), std::get<ModMatrix>(b.payload_)));
    case RingKind::table:
      return Element(shared_from_this(),
                     static_cast<std::uint64_t>(
                         spec_.table->mul[std::get<std::uint64_t>(a.payload_)]
                                         [std::get<std::uint64_t>(b.payload_)]));
  }
  throw GinvError(Err::internal_error, "unknown ring kind");
}

Element Ring::neg(const Element& a) const {
  check_same_ring(a);
  switch (spec_.kind) {
    case RingKind::zmod:
      return Element(shared_from_this(),
                     (spec_.modulus - std::get<std::uint64_t>(a.payload_)) % spec_.modulus);
    case RingKind::matrix_rational:
      return Element(shared_from_this(), rat_neg(std::get<RatMatrix>(a.payload_)));
    case RingKind::matrix_gf:
    case RingKind::matrix_zmod:
      return Element(shared_from_this(), mod_neg(std::get<ModMatrix>(a.payload_)));
    case RingKind::table: {
      const TableData& t = *spec_.table;
      const auto ai = std::get<std::uint64_t>(a.payload_);
      const auto zi = std::get<std::uint64_t>(zero().payload_);
      for (std::size_t b = 0; b < t.add.size(); ++b)
        if (t.add[ai][b] == zi) return Element(shared_from_this(), static_cast<std::uint64_t>(b));
      throw GinvError(Err::internal_error, "validated table lost an additive inverse");
    }
  }
  throw GinvError(Err::internal_error, "unknown ring kind");
}

Element Ring::sub(const Element& a, const Element& b) const { return add(a, neg(b)); }

Element Ring::star(const Element& a) const {
  check_same_ring(a);
  switch (spec_.kind) {
    case RingKind::zmod:
      return a;
    case RingKind::matrix_rational:
      if (spec_.involution == Involution::identity) return a;
      return Element(shared_from_this(), rat_transpose(std::get<RatMatrix>(a.payload_)));
    case RingKind::matrix_gf:
    case RingKind::matrix_zmod:
      if (spec_.involution == Involution::identity) return a;
      return Element(shared_from_this(), mod_transpose(std::get<ModMatrix>(a.payload_)));
    case RingKind::table:
      if (spec_.involution == Involution::identity) return a;
      return Element(shared_from_this(),
                     static_cast<std::uint64_t>(
                         spec_.table->star[std::get<std::uint64_t>(a.payload_)]));
  }
  throw GinvError(Err::internal_error, "unknown ring kind");
}

bool Ring::is_zero(const Element& a) const { return a == zero(); }
bool Ring::is_one(const Element& a) const { return a == one(); }

Element Ring::element_at(std::uint64_t index) const {
  if (!is_finite()) throw GinvError(Err::infinite_ring, "enumeration of an infinite ring");
  if (!size_ || index >= *size_)
    throw GinvError(Err::internal_error, "enumeration index out of range");
  switch (spec_.kind) {
    case RingKind::zmod:
    case RingKind::table:
      return Element(shared_from_this(), index);
    case RingKind::matrix_gf:
    case RingKind::matrix_zmod: {
      const int d2 = spec_.dim * spec_.dim;
      ModMatrix m{spec_.dim, spec_.modulus, std::vector<std::uint64_t>(d2, 0)};
      for (int i = d2 - 1; i >= 0; --i) {
        m.e[static_cast<std::size_t>(i)] = index % spec_.modulus;
        index /= spec_.modulus;
      }
      return Element(shared_from_this(), std::move(m));
    }
    case RingKind::matrix_rational:
      break;
  }
  throw GinvError(Err::internal_error, "unknown ring kind");
}

std::uint64_t Ring::index_of(const Element& a) const {
  check_same_ring(a);
  if (!is_finite()) throw GinvError(Err::infinite_ring, "enumeration of an infinite ring");
  switch (spec_.kind) {
    case RingKind::zmod:
    case RingKind::table:
      return std::get<std::uint64_t>(a.payload_);
    case RingKind::matrix_gf:
    case RingKind::matrix_zmod: {
      const auto& m = std::get<ModMatrix>(a.payload_);
      std::uint64_t idx = 0;
      for (auto v : m.e) idx = idx * spec_.modulus + v;
      return idx;
    }
    case RingKind::matrix_rational:
      break;
  }
  throw GinvError(Err::internal_error, "unknown ring kind");
}

Result<Element> Ring::from_integer(std::int64_t v) const {
  if (spec_.kind != RingKind::zmod)
    return fail(Err::malformed_spec,
                "integer elements are for zmod rings; got " + descriptor_string());
  const auto n = static_cast<std::int64_t>(spec_.modulus);
  const std::int64_t r = ((v % n) + n) % n;
  return Element(shared_from_this(), static_cast<std::uint64_t>(r));
}

Result<Element> Ring::from_index(std::uint64_t idx) const {
  if (!is_finite()) return fail(Err::infinite_ring, "index elements need a finite ring");
  if (!size_ || idx >= *size_)
    return fail(Err::malformed_spec, "element index out of range");
  return element_at(idx);
}

Result<Element> Ring::from_entries(const std::vector<std::vector<Rational>>& rows) const {
  const int d = spec_.dim;
  if (spec_.kind == RingKind::zmod || spec_.kind == RingKind::table)
    return fail(Err::malformed_spec,
                "matrix elements are for matrix rings; got " + descriptor_string());
  if (static_cast<int>(rows.size()) != d)
    return fail(Err::malformed_spec, "expected " + std::to_string(d) + " rows");
  for (const auto& row : rows)
    if (static_cast<int>(row.size()) != d)
      return fail(Err::malformed_spec, "expected " + std::to_string(d) + " columns per row");

  if (spec_.kind == RingKind::matrix_rational) {
    RatMatrix m{d, {}};
    m.e.reserve(static_cast<std::size_t>(d) * d);
    for (const auto& row : rows)
      for (const auto& v : row) m.e.push_back(v);
    return Element(shared_from_this(), std::move(m));
  }

  ModMatrix m{d, spec_.modulus, {}};
  m.e.reserve(static_cast<std::size_t>(d) * d);
  const Integer mod(spec_.modulus);
  for (const auto& row : rows)
    for (const auto& v : row) {
      if (denominator(v) != 1)
        return fail(Err::malformed_spec, "entries of a modular matrix must be integers");
      Integer r = numerator(v) % mod;
      if (r < 0) r += mod;
      m.e.push_back(r.convert_to<std::uint64_t>());
    }
  return Element(shared_from_this(), std::move(m));
}

Ring::IdealCheck Ring::in_principal_ideal(const Element& x, const Element& a,
                                          IdealSide side) const {
  check_compatible(x, a);

  if (spec_.kind == RingKind::matrix_rational) {
    linalg::RationalField f;
    const auto& am = std::get<RatMatrix>(a.payload_);
    const auto& xm = std::get<RatMatrix>(x.payload_);
    linalg::Mat<linalg::RationalField> A(spec_.dim, spec_.dim, f.zero()), X = A;
    A.e = am.e;
    X.e = xm.e;
    auto w = side == IdealSide::right ? linalg::solve_right(f, A, X)
                                      : linalg::solve_left(f, A, X);
    if (!w) return {false, std::nullopt};
    return {true, Element(shared_from_this(), RatMatrix{spec_.dim, std::move(w->e)})};
  }
  if (spec_.kind == RingKind::matrix_gf) {
    linalg::PrimeField f{spec_.modulus};
    const auto& am = std::get<ModMatrix>(a.payload_);
    const auto& xm = std::get<ModMatrix>(x.payload_);
    linalg::Mat<linalg::PrimeField> A(spec_.dim, spec_.dim, 0), X = A;
    A.e = am.e;
    X.e = xm.e;
    auto w = side == IdealSide::right ? linalg::solve_right(f, A, X)
                                      : linalg::solve_left(f, A, X);
    if (!w) return {false, std::nullopt};
    return {true,
            Element(shared_from_this(), ModMatrix{spec_.dim, spec_.modulus, std::move(w->e)})};
  }
  if (spec_.kind == RingKind::zmod) {
    // aZ_n = (gcd(a, n))Z_n, so membership reduces to divisibility.
    const std::uint64_t n = spec_.modulus;
    const std::uint64_t av = std::get<std::uint64_t>(a.payload_);
    const std::uint64_t xv = std::get<std::uint64_t>(x.payload_);
    const std::uint64_t g = av == 0 ? n : gcd_u64(av, n);
    if (g == n) {
      if (xv != 0) return {false, std::nullopt};
      return {true, Element(shared_from_this(), std::uint64_t{0})};
    }
    if (xv % g != 0) return {false, std::nullopt};
    const std::uint64_t m = n / g;
    const std::uint64_t w = ((xv / g) % m) * modinv((av / g) % m, m) % m;
    return {true, Element(shared_from_this(), w)};
  }

  // bounded finite rings: scan for a witness in canonical order
  if (const DenseTables* dt = dense_tables()) {
    const auto ai = static_cast<std::uint32_t>(index_of(a));
    const auto xi = static_cast<std::uint32_t>(index_of(x));
    for (std::uint32_t w = 0; w < dt->n; ++w) {
      const std::uint32_t prod = side == IdealSide::right ? dt->times(ai, w) : dt->times(w, ai);
      if (prod == xi) return {true, element_at(w)};
    }
    return {false, std::nullopt};
  }
  const std::uint64_t n = size_.value();
  for (std::uint64_t w = 0; w < n; ++w) {
    Element we = element_at(w);
    if ((side == IdealSide::right ? mul(a, we) : mul(we, a)) == x) return {true, std::move(we)};
  }
  return {false, std::nullopt};
}

Result<std::vector<Element>> Ring::annihilator(const Element& a, IdealSide side) const {
  check_same_ring(a);
  if (!is_finite())
    return fail(Err::infinite_ring, "annihilators are only materialized for finite rings");
  if (!size_ || *size_ > kSubsetLimit)
    return fail(Err::ring_too_large, "annihilator materialization over " +
                                         std::to_string(kSubsetLimit) + " elements");
  std::vector<Element> out;
  if (const DenseTables* dt = dense_tables()) {
    const auto ai = static_cast<std::uint32_t>(index_of(a));
    for (std::uint32_t w = 0; w < dt->n; ++w) {
      const std::uint32_t prod = side == IdealSide::right ? dt->times(ai, w) : dt->times(w, ai);
      if (prod == dt->zero) out.push_back(element_at(w));
    }
    return out;
  }
  const Element z = zero();
  for (std::uint64_t w = 0; w < *size_; ++w) {
    Element we = element_at(w);
    if ((side == IdealSide::right ? mul(a, we) : mul(we, a)) == z) out.push_back(std::move(we));
  }
  return out;
}

const DenseTables* Ring::dense_tables() const {
  if (!size_ || *size_ > dense_limit()) return nullptr;
  std::call_once(dense_once_, [this] {
    const auto n = static_cast<std::uint32_t>(*size_);
    auto dt = std::make_unique<DenseTables>();
    dt->n = n;
    dt->add.resize(static_cast<std::size_t>(n) * n);
    dt->mul.resize(static_cast<std::size_t>(n) * n);
    dt->neg.resize(n);
    dt->star.resize(n);
    if (spec_.kind == RingKind::zmod) {
      for (std::uint32_t i = 0; i < n; ++i) {
        dt->neg[i] = (n - i) % n;
        dt->star[i] = i;
        for (std::uint32_t j = 0; j < n; ++j) {
          dt->add[static_cast<std::size_t>(i) * n + j] = (i + j) % n;
          dt->mul[static_cast<std::size_t>(i) * n + j] =
              static_cast<std::uint32_t>((static_cast<std::uint64_t>(i) * j) % n);
        }
      }
      dt->zero = 0;
      dt->one = 1 % n;
    } else if (spec_.kind == RingKind::table) {
      const TableData& t = *spec_.table;
      for (std::uint32_t i = 0; i < n; ++i)
        for (std::uint32_t j = 0; j < n; ++j) {
          dt->add[static_cast<std::size_t>(i) * n + j] = t.add[i][j];
          dt->mul[static_cast<std::size_t>(i) * n + j] = t.mul[i][j];
        }
      dt->zero = static_cast<std::uint32_t>(std::get<std::uint64_t>(zero().payload_));
      dt->one = static_cast<std::uint32_t>(std::get<std::uint64_t>(one().payload_));
      for (std::uint32_t i = 0; i < n; ++i) {
        dt->star[i] = t.star.empty() ? i : t.star[i];
        for (std::uint32_t j = 0; j < n; ++j)
          if (t.add[i][j] == dt->zero) {
            dt->neg[i] = j;
            break;
          }
      }
    } else {
      std::vector<Element> elems;
      elems.reserve(n);
      for (std::uint32_t i = 0; i < n; ++i) elems.push_back(element_at(i));
      for (std::uint32_t i = 0; i < n; ++i) {
        dt->neg[i] = static_cast<std::uint32_t>(index_of(neg(elems[i])));
        dt->star[i] = static_cast<std::uint32_t>(index_of(star(elems[i])));
        for (std::uint32_t j = 0; j < n; ++j) {
          dt->add[static_cast<std::size_t>(i) * n + j] =
              static_cast<std::uint32_t>(index_of(add(elems[i], elems[j])));
          dt->mul[static_cast<std::size_t>(i) * n + j] =
              static_cast<std::uint32_t>(index_of(mul(elems[i], elems[j])));
        }
      }
      dt->zero = static_cast<std::uint32_t>(index_of(zero()));
      dt->one = static_cast<std::uint32_t>(index_of(one()));
    }
    dense_ = std::move(dt);
  });
  return dense_.get();
}

}  // namespace ginv
