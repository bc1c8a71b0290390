#include "ginv/oracle.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <sstream>

namespace ginv::oracle {

namespace {

constexpr std::uint64_t kPairLimit = 1u << 20;  // bound on |R|² for pair-quantified scans

// Index-space view of a finite ring.  Uses the ring's dense tables when they
// exist and falls back to cached Element arithmetic otherwise.
struct Scan {
  RingPtr ring;
  const DenseTables* dt = nullptr;
  std::uint32_t n = 0;
  std::uint32_t zero = 0, one = 0;
  std::vector<Element> elems;  // populated only on the fallback path

  static Result<Scan> make(const RingPtr& ring) {
    if (!ring->is_finite())
      return fail(Err::infinite_ring, "oracle scans require a finite ring");
    auto sz = ring->size();
    if (!sz || *sz > exhaustive_scan_limit())
      return fail(Err::ring_too_large, "ring size exceeds the exhaustive scan limit of " +
                                           std::to_string(exhaustive_scan_limit()));
    Scan s;
    s.ring = ring;
    s.n = static_cast<std::uint32_t>(*sz);
    s.dt = ring->dense_tables();
    if (s.dt) {
      s.zero = s.dt->zero;
      s.one = s.dt->one;
    } else {
      s.elems.reserve(s.n);
      for (std::uint32_t i = 0; i < s.n; ++i) s.elems.push_back(ring->element_at(i));
      s.zero = static_cast<std::uint32_t>(ring->index_of(ring->zero()));
      s.one = static_cast<std::uint32_t>(ring->index_of(ring->one()));
    }
    return s;
  }

  std::uint32_t mul(std::uint32_t x, std::uint32_t y) const {
    if (dt) return dt->times(x, y);
    return static_cast<std::uint32_t>(ring->index_of(ring->mul(elems[x], elems[y])));
  }
  std::uint32_t add(std::uint32_t x, std::uint32_t y) const {
    if (dt) return dt->plus(x, y);
    return static_cast<std::uint32_t>(ring->index_of(ring->add(elems[x], elems[y])));
  }
  std::uint32_t neg(std::uint32_t x) const {
    if (dt) return dt->neg[x];
    return static_cast<std::uint32_t>(ring->index_of(ring->neg(elems[x])));
  }
  std::uint32_t star(std::uint32_t x) const {
    if (dt) return dt->star[x];
    return static_cast<std::uint32_t>(ring->index_of(ring->star(elems[x])));
  }
  Element el(std::uint32_t i) const { return dt ? ring->element_at(i) : elems[i]; }
};

std::vector<char> right_ideal(const Scan& s, std::uint32_t g) {
  std::vector<char> in(s.n, 0);
  for (std::uint32_t x = 0; x < s.n; ++x) in[s.mul(g, x)] = 1;
  return in;
}

std::vector<char> left_ideal(const Scan& s, std::uint32_t g) {
  std::vector<char> in(s.n, 0);
  for (std::uint32_t x = 0; x < s.n; ++x) in[s.mul(x, g)] = 1;
  return in;
}

// g° = {x : g·x = 0}
std::vector<char> right_annihilator(const Scan& s, std::uint32_t g) {
  std::vector<char> in(s.n, 0);
  for (std::uint32_t x = 0; x < s.n; ++x)
    if (s.mul(g, x) == s.zero) in[x] = 1;
  return in;
}

// °g = {x : x·g = 0}
std::vector<char> left_annihilator(const Scan& s, std::uint32_t g) {
  std::vector<char> in(s.n, 0);
  for (std::uint32_t x = 0; x < s.n; ++x)
    if (s.mul(x, g) == s.zero) in[x] = 1;
  return in;
}

bool sum_covers(const Scan& s, const std::vector<char>& lhs, const std::vector<char>& rhs) {
  std::vector<char> hit(s.n, 0);
  std::uint32_t remaining = s.n;
  for (std::uint32_t x = 0; x < s.n; ++x) {
    if (!lhs[x]) continue;
    for (std::uint32_t y = 0; y < s.n; ++y) {
      if (!rhs[y]) continue;
      const std::uint32_t z = s.add(x, y);
      if (!hit[z]) {
        hit[z] = 1;
        if (--remaining == 0) return true;
      }
    }
  }
  return remaining == 0;
}

bool trivial_intersection(const Scan& s, const std::vector<char>& lhs,
                          const std::vector<char>& rhs) {
  for (std::uint32_t x = 0; x < s.n; ++x)
    if (lhs[x] && rhs[x] && x != s.zero) return false;
  return true;
}

bool in_set(const std::vector<char>& set, std::uint32_t x) { return set[x] != 0; }

// Definitional predicate for one candidate; the core/dual cases receive the
// precomputed one-sided ideals of a.
struct CorePrecomp {
  std::vector<char> aR, Ra_star;        // core: x ∈ aR, x ∈ Ra*
  std::vector<char> a_star_R, Ra;       // dual: x ∈ a*R, x ∈ Ra
};

bool candidate_matches(const Scan& s, InverseKind kind, std::uint32_t ai, std::uint32_t x,
                       const CorePrecomp& pre) {
  const std::uint32_t ax = s.mul(ai, x);
  const std::uint32_t xa = s.mul(x, ai);
  switch (kind) {
    case InverseKind::inner:
      return s.mul(ax, ai) == ai;
    case InverseKind::group:
      return s.mul(ax, ai) == ai && s.mul(xa, x) == x && ax == xa;
    case InverseKind::one_three:
      return s.mul(ax, ai) == ai && s.star(ax) == ax;
    case InverseKind::one_four:
      return s.mul(ax, ai) == ai && s.star(xa) == xa;
    case InverseKind::core: {
      if (s.mul(ax, ai) != ai) return false;
      if (!in_set(pre.aR, x) || !in_set(pre.Ra_star, x)) return false;
      const std::uint32_t a_star = s.star(ai);
      bool a_in_xR = false, astar_in_Rx = false;
      for (std::uint32_t y = 0; y < s.n && !(a_in_xR && astar_in_Rx); ++y) {
        if (!a_in_xR && s.mul(x, y) == ai) a_in_xR = true;
        if (!astar_in_Rx && s.mul(y, x) == a_star) astar_in_Rx = true;
      }
      return a_in_xR && astar_in_Rx;
    }
    case InverseKind::dual_core: {
      if (s.mul(ax, ai) != ai) return false;
      if (!in_set(pre.a_star_R, x) || !in_set(pre.Ra, x)) return false;
      const std::uint32_t a_star = s.star(ai);
      bool astar_in_xR = false, a_in_Rx = false;
      for (std::uint32_t y = 0; y < s.n && !(astar_in_xR && a_in_Rx); ++y) {
        if (!astar_in_xR && s.mul(x, y) == a_star) astar_in_xR = true;
        if (!a_in_Rx && s.mul(y, x) == ai) a_in_Rx = true;
      }
      return astar_in_xR && a_in_Rx;
    }
  }
  return false;
}

CorePrecomp precompute(const Scan& s, InverseKind kind, std::uint32_t ai) {
  CorePrecomp pre;
  if (kind == InverseKind::core) {
    pre.aR = right_ideal(s, ai);
    pre.Ra_star = left_ideal(s, s.star(ai));
  } else if (kind == InverseKind::dual_core) {
    pre.a_star_R = right_ideal(s, s.star(ai));
    pre.Ra = left_ideal(s, ai);
  }
  return pre;
}

std::vector<std::uint32_t> find_all_indices(const Scan& s, InverseKind kind, std::uint32_t ai) {
  const CorePrecomp pre = precompute(s, kind, ai);
  std::vector<std::uint32_t> out;
  for (std::uint32_t x = 0; x < s.n; ++x)
    if (candidate_matches(s, kind, ai, x, pre)) out.push_back(x);
  return out;
}

}  // namespace

Result<std::vector<Element>> find_all(InverseKind kind, const Element& a) {
  auto scan = Scan::make(a.ring());
  if (!scan.ok()) return scan.failure();
  const Scan& s = scan.value();
  const auto ai = static_cast<std::uint32_t>(a.ring()->index_of(a));
  std::vector<Element> out;
  for (std::uint32_t x : find_all_indices(s, kind, ai)) out.push_back(s.el(x));
  return out;
}

Result<ClassificationReport> classify(const RingPtr& ring) {
  auto scan = Scan::make(ring);
  if (!scan.ok()) return scan.failure();
  const Scan& s = scan.value();
  ClassificationReport report{ring, {}};
  report.rows.reserve(s.n);
  for (std::uint32_t ai = 0; ai < s.n; ++ai) {
    ClassRow row{s.el(ai), false, false, false, false, false, {}, {}, {}, {}, {}};
    auto fill = [&](InverseKind kind, bool& flag, std::optional<Element>& witness) {
      const CorePrecomp pre = precompute(s, kind, ai);
      for (std::uint32_t x = 0; x < s.n; ++x)
        if (candidate_matches(s, kind, ai, x, pre)) {
          flag = true;
          witness = s.el(x);
          break;
        }
    };
    fill(InverseKind::group, row.in_group, row.group);
    fill(InverseKind::one_three, row.in_one_three, row.one_three);
    fill(InverseKind::one_four, row.in_one_four, row.one_four);
    fill(InverseKind::core, row.in_core, row.core);
    fill(InverseKind::dual_core, row.in_dual_core, row.dual_core);
    report.rows.push_back(std::move(row));
  }
  return report;
}

Json classification_to_json(const ClassificationReport& report) {
  Json rows = Json::array();
  for (const ClassRow& row : report.rows) {
    Json is;
    is["group"] = row.in_group;
    is["one_three"] = row.in_one_three;
    is["one_four"] = row.in_one_four;
    is["core"] = row.in_core;
    is["dual_core"] = row.in_dual_core;
    Json witness;
    witness["group"] = row.group ? element_to_json(*row.group) : Json(nullptr);
    witness["one_three"] = row.one_three ? element_to_json(*row.one_three) : Json(nullptr);
    witness["one_four"] = row.one_four ? element_to_json(*row.one_four) : Json(nullptr);
    witness["core"] = row.core ? element_to_json(*row.core) : Json(nullptr);
    witness["dual_core"] = row.dual_core ? element_to_json(*row.dual_core) : Json(nullptr);
    Json item;
    item["element"] = element_to_json(row.element);
    item["is"] = std::move(is);
    item["witness"] = std::move(witness);
    rows.push_back(std::move(item));
  }
  Json out;
  out["ring"] = report.ring->descriptor_string();
  out["size"] = report.rows.size();
  out["rows"] = std::move(rows);
  return out;
}

std::string classification_to_text(const ClassificationReport& report) {
  static constexpr const char* kHeaders[6] = {"element",   "group", "one_three",
                                              "one_four", "core",  "dual_core"};
  std::vector<std::array<std::string, 6>> cells;
  cells.reserve(report.rows.size());
  for (const ClassRow& row : report.rows) {
    auto show = [](const std::optional<Element>& w) {
      return w ? element_to_text(*w) : std::string("-");
    };
    cells.push_back({element_to_text(row.element), show(row.group), show(row.one_three),
                     show(row.one_four), show(row.core), show(row.dual_core)});
  }
  std::array<std::size_t, 6> width{};
  for (int c = 0; c < 6; ++c) width[c] = std::string(kHeaders[c]).size();
  for (const auto& row : cells)
    for (int c = 0; c < 6; ++c) width[c] = std::max(width[c], row[c].size());
  std::ostringstream out;
  out << "ring " << report.ring->descriptor_string() << " (" << report.rows.size()
      << " elements)\n";
  auto emit = [&](const std::array<std::string, 6>& row) {
    for (int c = 0; c < 6; ++c) {
      out << row[c];
      if (c < 5) out << std::string(width[c] - row[c].size() + 2, ' ');
    }
    out << '\n';
  };
  emit({kHeaders[0], kHeaders[1], kHeaders[2], kHeaders[3], kHeaders[4], kHeaders[5]});
  for (const auto& row : cells) emit(row);
  return out.str();
}

Result<bool> decomposition_holds(const Element& a, int variant, DecompositionKind kind) {
  if (variant < 1 || variant > 9)
    return fail(Err::malformed_spec, "decomposition variant must be between 1 and 9");
  if (variant == 1) {
    auto all = find_all(
        kind == DecompositionKind::core ? InverseKind::core : InverseKind::dual_core, a);
    if (!all.ok()) return all.failure();
    return !all.value().empty();
  }
  auto scan = Scan::make(a.ring());
  if (!scan.ok()) return scan.failure();
  const Scan& s = scan.value();
  const auto ai = static_cast<std::uint32_t>(a.ring()->index_of(a));
  const std::uint32_t as = s.star(ai);

  // First component: two ideal/annihilator pairings, each in a direct-sum and
  // a plain-sum variant.  Second component: the group-membership condition,
  // always a direct sum.
  std::vector<char> first_lhs, first_rhs;
  const int fc = (variant - 2) % 4;
  if (kind == DecompositionKind::core) {
    if (fc < 2) {
      first_lhs = right_ideal(s, ai);            // aR
      first_rhs = right_annihilator(s, as);      // (a*)°
    } else {
      first_lhs = left_ideal(s, as);             // Ra*
      first_rhs = left_annihilator(s, ai);       // °a
    }
  } else {
    if (fc < 2) {
      first_lhs = right_ideal(s, as);            // a*R
      first_rhs = right_annihilator(s, ai);      // a°
    } else {
      first_lhs = left_ideal(s, ai);             // Ra
      first_rhs = left_annihilator(s, as);       // °(a*)
    }
  }
  const bool first_direct = fc % 2 == 0;

  std::vector<char> second_lhs, second_rhs;
  if (variant <= 5) {
    second_lhs = right_ideal(s, ai);             // aR
    second_rhs = right_annihilator(s, ai);       // a°
  } else {
    second_lhs = left_ideal(s, ai);              // Ra
    second_rhs = left_annihilator(s, ai);        // °a
  }

  bool ok = sum_covers(s, first_lhs, first_rhs);
  if (ok && first_direct) ok = trivial_intersection(s, first_lhs, first_rhs);
  if (ok) ok = sum_covers(s, second_lhs, second_rhs) &&
               trivial_intersection(s, second_lhs, second_rhs);
  return ok;
}

Result<DirectFiniteness> is_direct_finite(const RingPtr& ring) {
  auto scan = Scan::make(ring);
  if (!scan.ok()) return scan.failure();
  const Scan& s = scan.value();
  if (static_cast<std::uint64_t>(s.n) * s.n > kPairLimit)
    return fail(Err::ring_too_large, "pair scan exceeds the 2^20 pair limit");
  for (std::uint32_t x = 0; x < s.n; ++x)
    for (std::uint32_t y = 0; y < s.n; ++y)
      if (s.mul(x, y) == s.one && s.mul(y, x) != s.one)
        return DirectFiniteness{false, std::make_pair(s.el(x), s.el(y))};
  return DirectFiniteness{true, std::nullopt};
}

Result<std::optional<Element>> unique_projection(const Element& a) {
  auto scan = Scan::make(a.ring());
  if (!scan.ok()) return scan.failure();
  const Scan& s = scan.value();
  const auto ai = static_cast<std::uint32_t>(a.ring()->index_of(a));
  const std::vector<char> aR = right_ideal(s, ai);
  std::optional<Element> found;
  for (std::uint32_t p = 0; p < s.n; ++p) {
    if (s.star(p) != p || s.mul(p, p) != p) continue;
    if (right_ideal(s, p) != aR) continue;
    if (found)
      throw GinvError(Err::internal_error, "two distinct projections generate aR");
    found = s.el(p);
  }
  return found;
}

Result<std::optional<DecompositionWitness>> find_decomposition_witness(const Element& a) {
  auto scan = Scan::make(a.ring());
  if (!scan.ok()) return scan.failure();
  const Scan& s = scan.value();
  const auto ai = static_cast<std::uint32_t>(a.ring()->index_of(a));
  const std::uint32_t as = s.star(ai);

  // complement of t relative to 1, i.e. 1 - t
  auto co = [&](std::uint32_t t) { return s.add(s.one, s.neg(t)); };

  std::optional<std::uint32_t> x1, x2, y1, y2;
  for (std::uint32_t x = 0; x < s.n && !x1; ++x)
    if (s.mul(as, co(s.mul(ai, x))) == s.zero) x1 = x;
  for (std::uint32_t x = 0; x < s.n && !x2; ++x)
    if (s.mul(co(s.mul(x, as)), ai) == s.zero) x2 = x;
  for (std::uint32_t y = 0; y < s.n && !y1; ++y)
    if (s.mul(ai, co(s.mul(ai, y))) == s.zero) y1 = y;
  for (std::uint32_t y = 0; y < s.n && !y2; ++y)
    if (s.mul(co(s.mul(y, ai)), ai) == s.zero) y2 = y;
  if (!x1 || !x2 || !y1 || !y2) return std::optional<DecompositionWitness>{};

  return std::optional<DecompositionWitness>(DecompositionWitness{
      s.el(*x1), s.el(co(s.mul(ai, *x1))), s.el(*x2), s.el(co(s.mul(*x2, as))),
      s.el(*y1), s.el(co(s.mul(ai, *y1))), s.el(*y2), s.el(co(s.mul(*y2, ai)))});
}

}  // namespace ginv::oracle
