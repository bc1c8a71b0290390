// Acceptance gate: eight criteria, one line each, all exact (zero tolerance).
// Exits 0 only if every criterion passes.

#include "ginv/corpus.hpp"
#include "ginv/inverse.hpp"
#include "ginv/json_io.hpp"
#include "ginv/linalg.hpp"
#include "ginv/oracle.hpp"
#include "ginv/ring.hpp"

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <vector>

using namespace ginv;
namespace orc = ginv::oracle;

namespace {

struct Check {
  bool pass = true;
  std::string note;

  void fail(std::string msg) {
    if (pass) note = std::move(msg);
    pass = false;
  }
  void require(bool ok, const std::string& msg) {
    if (!ok) fail(msg);
  }
};

template <class T>
T take(Result<T> r) {
  if (!r.ok()) throw GinvError(r.failure());
  return std::move(r).take();
}

RingPtr ring(const std::string& d) { return take(Ring::make(d)); }

std::vector<Element> all_elements(const RingPtr& r) {
  std::vector<Element> out;
  const std::uint64_t n = r->size().value();
  out.reserve(n);
  for (std::uint64_t i = 0; i < n; ++i) out.push_back(r->element_at(i));
  return out;
}

std::vector<std::string> scan_rings() {
  std::vector<std::string> out;
  for (int n = 2; n <= 16; ++n) out.push_back("zmod:" + std::to_string(n));
  out.insert(out.end(),
             {"mat:zmod:2:2", "mat:zmod:3:2", "mat:zmod:4:2", "mat:gf:2:2", "mat:gf:3:2"});
  return out;
}

Result<Element> by_kind(InverseKind k, const Element& a) {
  switch (k) {
    case InverseKind::inner: return inner_inverse(a);
    case InverseKind::group: return group_inverse(a);
    case InverseKind::one_three: return one_three_inverse(a);
    case InverseKind::one_four: return one_four_inverse(a);
    case InverseKind::core: return core_inverse(a);
    case InverseKind::dual_core: return dual_core_inverse(a);
  }
  throw GinvError(Err::internal_error, "unreachable");
}

std::string where(const RingPtr& r, const Element& a) {
  return r->descriptor_string() + ", element " + element_to_text(a);
}

// ---------------------------------------------------------------- criterion 1
// Engine results match the oracle's exhaustive sets for every element of every
// small test ring, for all five inverse kinds.
Check criterion_oracle_equivalence() {
  Check c;
  const InverseKind kinds[] = {InverseKind::group, InverseKind::one_three, InverseKind::one_four,
                               InverseKind::core, InverseKind::dual_core};
  for (const auto& desc : scan_rings()) {
    auto r = ring(desc);
    for (const auto& a : all_elements(r)) {
      for (InverseKind k : kinds) {
        auto all = take(orc::find_all(k, a));
        auto eng = by_kind(k, a);
        if (eng.ok() != !all.empty()) {
          c.fail("existence mismatch ('" + std::string(inverse_kind_name(k)) + "') at " +
                 where(r, a));
          continue;
        }
        if (!eng.ok()) continue;
        const Element got = eng.value();
        const bool unique =
            k == InverseKind::group || k == InverseKind::core || k == InverseKind::dual_core;
        if (unique) {
          c.require(all.size() == 1 && all[0] == got,
                    "unique inverse set mismatch at " + where(r, a));
        } else {
          bool member = false;
          for (const auto& x : all) member = member || x == got;
          c.require(member, "engine result outside the oracle set at " + where(r, a));
        }
      }
    }
  }
  return c;
}

// ---------------------------------------------------------------- criterion 2
// For every a and candidate x: the definitional characterization, the five
// equations, and the three equations accept exactly the same x, and at most
// one x per a.
Check criterion_characterizations() {
  Check c;
  for (const auto& desc : scan_rings()) {
    auto r = ring(desc);
    const DenseTables* dt = r->dense_tables();
    if (!dt) {
      c.fail("no dense tables for " + desc);
      continue;
    }
    const std::uint32_t n = dt->n;
    auto member_right = [&](std::uint32_t x, std::uint32_t g) {
      for (std::uint32_t w = 0; w < n; ++w)
        if (dt->times(g, w) == x) return true;
      return false;
    };
    auto member_left = [&](std::uint32_t x, std::uint32_t g) {
      for (std::uint32_t w = 0; w < n; ++w)
        if (dt->times(w, g) == x) return true;
      return false;
    };
    for (std::uint32_t a = 0; a < n; ++a) {
      const std::uint32_t as = dt->star[a];
      const std::uint32_t aa = dt->times(a, a);
      std::uint32_t solutions = 0;
      for (std::uint32_t x = 0; x < n; ++x) {
        const std::uint32_t ax = dt->times(a, x);
        const bool def = dt->times(ax, a) == a && member_right(x, a) && member_right(a, x) &&
                         member_left(x, as) && member_left(as, x);
        const bool five = dt->times(ax, a) == a && dt->times(x, dt->times(a, x)) == x &&
                          dt->star[ax] == ax && dt->times(x, aa) == a &&
                          dt->times(a, dt->times(x, x)) == x;
        const bool three = dt->star[ax] == ax && dt->times(x, aa) == a &&
                           dt->times(a, dt->times(x, x)) == x;
        if (def != five || five != three) {
          c.fail("characterizations disagree at " + where(r, r->element_at(a)) + ", candidate " +
                 element_to_text(r->element_at(x)));
        }
        if (def) ++solutions;
      }
      c.require(solutions <= 1, "more than one core inverse at " + where(r, r->element_at(a)));
    }
  }
  return c;
}

// ---------------------------------------------------------------- criterion 3
// Core exists iff group and {1,3} both exist; the group inverse is the square
// of the core inverse times a; and the core inverse is a^# a x for EVERY
// {1,3}-inverse x.
Check criterion_existence_and_products() {
  Check c;
  for (const auto& desc : scan_rings()) {
    auto r = ring(desc);
    for (const auto& a : all_elements(r)) {
      auto core = core_inverse(a);
      auto grp = group_inverse(a);
      auto ot = one_three_inverse(a);
      c.require(core.ok() == (grp.ok() && ot.ok()), "existence mismatch at " + where(r, a));
      if (!core.ok()) continue;
      const Element k = core.value();
      const Element g = grp.value();
      c.require(g == k * k * a, "group formula fails at " + where(r, a));
      const Element ga = g * a;
      for (const auto& x : take(orc::find_all(InverseKind::one_three, a)))
        c.require(ga * x == k, "product formula fails at " + where(r, a));
    }
  }
  return c;
}

// ---------------------------------------------------------------- criterion 4
// Additive formulas over all ordered pairs: whenever the orthogonality
// hypotheses hold, the closed forms equal the directly computed inverses.
Check criterion_additive() {
  Check c;
  for (const char* desc : {"zmod:8", "zmod:12", "mat:zmod:2:2", "mat:gf:2:2", "mat:zmod:4:2"}) {
    auto r = ring(desc);
    auto elems = all_elements(r);
    const Element one = r->one();
    const Element zero = r->zero();

    std::vector<std::optional<Element>> core(elems.size()), dual(elems.size()),
        grp(elems.size());
    for (std::size_t i = 0; i < elems.size(); ++i) {
      if (auto v = core_inverse(elems[i]); v.ok()) core[i] = v.value();
      if (auto v = dual_core_inverse(elems[i]); v.ok()) dual[i] = v.value();
      if (auto v = group_inverse(elems[i]); v.ok()) grp[i] = v.value();
    }

    for (std::size_t i = 0; i < elems.size(); ++i) {
      const Element& a = elems[i];
      const Element sa = star(a);
      for (std::size_t j = 0; j < elems.size(); ++j) {
        const Element& b = elems[j];
        const bool ab0 = a * b == zero;
        if (!ab0) continue;
        const Element s = a + b;

        if (core[i] && core[j] && sa * b == zero) {
          const Element formula = (one - *core[j] * b) * *core[i] + *core[j];
          auto direct = core_inverse(s);
          if (!direct.ok() || !(direct.value() == formula))
            c.fail("core sum mismatch at " + where(r, a) + " + " + element_to_text(b));
          auto via_engine = core_sum(a, b);
          if (!via_engine.ok() || !(via_engine.value() == formula))
            c.fail("core_sum disagrees at " + where(r, a) + " + " + element_to_text(b));
          if (!take(verify(InverseKind::core, s, formula, CertForm::five_eq)).valid)
            c.fail("core sum certificate invalid at " + where(r, a));
        }

        if (dual[i] && dual[j] && a * star(b) == zero) {
          const Element formula = *dual[i] + *dual[j] * (one - a * *dual[i]);
          auto direct = dual_core_inverse(s);
          if (!direct.ok() || !(direct.value() == formula))
            c.fail("dual core sum mismatch at " + where(r, a) + " + " + element_to_text(b));
          auto via_engine = dual_core_sum(a, b);
          if (!via_engine.ok() || !(via_engine.value() == formula))
            c.fail("dual_core_sum disagrees at " + where(r, a) + " + " + element_to_text(b));
        }

        if (grp[i] && grp[j]) {
          const Element formula =
              (one - b * *grp[j]) * *grp[i] + *grp[j] * (one - a * *grp[i]);
          auto direct = group_inverse(s);
          if (!direct.ok() || !(direct.value() == formula))
            c.fail("group sum mismatch at " + where(r, a) + " + " + element_to_text(b));
          auto via_engine = group_sum(a, b);
          if (!via_engine.ok() || !(via_engine.value() == formula))
            c.fail("group_sum disagrees at " + where(r, a) + " + " + element_to_text(b));
        }
      }
    }
  }
  return c;
}

// ---------------------------------------------------------------- criterion 5
// The four corpus scenarios pass every assertion, with byte-stable reports.
Check criterion_corpus() {
  Check c;
  for (const auto& id : corpus::builtin_scenario_ids()) {
    auto run = [&] {
      return corpus::report_to_json(take(corpus::run_scenario(take(corpus::load_builtin(id)))));
    };
    auto first = run();
    c.require(first["pass"] == true, "scenario " + id + " fails");
    c.require(first.dump() == run().dump(), "scenario " + id + " report is unstable");
  }
  return c;
}

// ---------------------------------------------------------------- criterion 6
// Random rational 3x3 matrices: conditioned on rank(A) = rank(A^2) the core
// inverse always exists with an exactly valid five-equation certificate;
// unconditioned, the engine agrees with the group/{1,3} conjunction.
Check criterion_random_rational() {
  Check c;
  auto mq = ring("mat:rat:3");
  std::mt19937_64 rng(20260817u);

  linalg::RationalField f;
  auto to_mat = [&](const Element& e) {
    linalg::Mat<linalg::RationalField> m(3, 3, f.zero());
    m.e = e.rat_matrix().e;
    return m;
  };
  auto random_matrix = [&]() {
    // random rank profile: a sum of up to three outer products
    const int rank_target = static_cast<int>(rng() % 4);
    std::vector<std::vector<Rational>> rows(3, std::vector<Rational>(3, Rational(0)));
    for (int k = 0; k < rank_target; ++k) {
      std::array<long, 3> u, v;
      for (int i = 0; i < 3; ++i) u[i] = static_cast<long>(rng() % 7) - 3;
      for (int i = 0; i < 3; ++i) v[i] = static_cast<long>(rng() % 7) - 3;
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) rows[i][j] += Rational(u[i]) * Rational(v[j]);
    }
    return take(mq->from_entries(rows));
  };
  auto group_condition = [&](const Element& a) {
    return linalg::rank(f, to_mat(a)) == linalg::rank(f, to_mat(sq(a)));
  };

  int conditioned = 0;
  while (conditioned < 500) {
    Element a = random_matrix();
    if (!group_condition(a)) continue;
    ++conditioned;
    auto core = core_inverse(a);
    if (!core.ok()) {
      c.fail("core inverse missing for a conditioned sample: " + element_to_text(a));
      continue;
    }
    auto cert = take(verify(InverseKind::core, a, core.value(), CertForm::five_eq));
    c.require(cert.valid, "invalid certificate for " + element_to_text(a));
    c.require(take(group_inverse(a)) == core.value() * core.value() * a,
              "group formula fails for " + element_to_text(a));
  }

  for (int i = 0; i < 500; ++i) {
    Element a = random_matrix();
    auto core = core_inverse(a);
    auto grp = group_inverse(a);
    auto ot = one_three_inverse(a);
    c.require(core.ok() == (grp.ok() && ot.ok()),
              "existence disagreement for " + element_to_text(a));
    if (core.ok()) {
      c.require(core.value() == grp.value() * a * ot.value(),
                "value disagreement for " + element_to_text(a));
      c.require(take(verify(InverseKind::core, a, core.value(), CertForm::five_eq)).valid,
                "invalid certificate for " + element_to_text(a));
    }
  }
  return c;
}

// ---------------------------------------------------------------- criterion 7
// Wherever the core inverse exists, every computation route returns the same
// element: the unit route, both left-equation systems, and the decomposition
// route (engine-built and scan-found witnesses alike).
Check criterion_cross_formula() {
  Check c;
  for (const char* desc :
       {"zmod:8", "zmod:12", "mat:zmod:2:2", "mat:gf:2:2", "mat:zmod:4:2", "mat:gf:3:2"}) {
    auto r = ring(desc);
    for (const auto& a : all_elements(r)) {
      auto core = core_inverse(a);
      if (!core.ok()) continue;
      const Element b = core.value();
      auto check_route = [&](const char* route, const Result<Element>& got) {
        if (!got.ok() || !(got.value() == b))
          c.fail(std::string(route) + " diverges at " + where(r, a));
      };
      check_route("unit route", core_via_unit(a, b));
      check_route("reflexive equations",
                  core_from_left_equations(a, b, LeftEquationVariant::reflexive));
      check_route("inner equations", core_from_left_equations(a, b, LeftEquationVariant::inner));

      auto w = take(decomposition_witness_from_inverses(a));
      auto dec = core_from_decomposition(a, w);
      if (!dec.ok() || !(dec.value().core == b))
        c.fail("decomposition route diverges at " + where(r, a));

      auto scanned = take(orc::find_decomposition_witness(a));
      if (!scanned) {
        c.fail("no scan witness at " + where(r, a));
      } else {
        auto dec2 = core_from_decomposition(a, *scanned);
        if (!dec2.ok() || !(dec2.value().core == b))
          c.fail("scanned decomposition diverges at " + where(r, a));
      }
    }
  }

  // sampled rational matrices
  auto mq = ring("mat:rat:3");
  std::mt19937_64 rng(77001u);
  linalg::RationalField f;
  auto to_mat = [&](const Element& e) {
    linalg::Mat<linalg::RationalField> m(3, 3, f.zero());
    m.e = e.rat_matrix().e;
    return m;
  };
  int samples = 0;
  while (samples < 50) {
    std::vector<std::vector<Rational>> rows(3, std::vector<Rational>(3, Rational(0)));
    const int rank_target = static_cast<int>(rng() % 4);
    for (int k = 0; k < rank_target; ++k) {
      std::array<long, 3> u, v;
      for (int i = 0; i < 3; ++i) u[i] = static_cast<long>(rng() % 7) - 3;
      for (int i = 0; i < 3; ++i) v[i] = static_cast<long>(rng() % 7) - 3;
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) rows[i][j] += Rational(u[i]) * Rational(v[j]);
    }
    Element a = take(mq->from_entries(rows));
    if (linalg::rank(f, to_mat(a)) != linalg::rank(f, to_mat(sq(a)))) continue;
    ++samples;
    auto core = core_inverse(a);
    if (!core.ok()) {
      c.fail("core inverse missing for sampled matrix " + element_to_text(a));
      continue;
    }
    const Element b = core.value();
    c.require(take(core_via_unit(a, b)) == b, "unit route diverges on " + element_to_text(a));
    c.require(take(core_from_left_equations(a, b, LeftEquationVariant::reflexive)) == b,
              "reflexive route diverges on " + element_to_text(a));
    c.require(take(core_from_left_equations(a, b, LeftEquationVariant::inner)) == b,
              "inner route diverges on " + element_to_text(a));
    auto w = take(decomposition_witness_from_inverses(a));
    c.require(take(core_from_decomposition(a, w)).core == b,
              "decomposition route diverges on " + element_to_text(a));
  }
  return c;
}

// ---------------------------------------------------------------- criterion 8
// For every {1,3}-invertible a and every decomposition 1 = ar + u with
// a* u = 0, the parametrized family r + (1 - ra) w sweeps out exactly the
// exhaustive set of {1,3}-inverses.
Check criterion_family_completeness() {
  Check c;
  for (const char* desc : {"zmod:8", "mat:zmod:2:2"}) {
    auto r = ring(desc);
    auto elems = all_elements(r);
    const Element one = r->one();
    const Element zero = r->zero();
    for (const auto& a : elems) {
      auto expected = take(orc::find_all(InverseKind::one_three, a));
      if (expected.empty()) continue;
      std::set<std::uint64_t> want;
      for (const auto& x : expected) want.insert(r->index_of(x));

      bool found_decomposition = false;
      for (const auto& cand : elems) {
        const Element u = one - a * cand;
        if (!(star(a) * u == zero)) continue;
        found_decomposition = true;
        std::set<std::uint64_t> got;
        for (const auto& w : elems)
          got.insert(r->index_of(take(one_three_family(a, cand, u, w))));
        if (got != want) c.fail("family mismatch at " + where(r, a));
      }
      c.require(found_decomposition, "no decomposition found at " + where(r, a));
    }
  }
  return c;
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    std::function<Check()> run;
  };
  const std::vector<Criterion> criteria = {
      {"engine matches the exhaustive oracle on 20 finite rings",
       criterion_oracle_equivalence},
      {"definitional, five-equation and three-equation solution sets coincide",
       criterion_characterizations},
      {"core exists iff group and {1,3} exist, with exact product formulas",
       criterion_existence_and_products},
      {"additive formulas hold for all orthogonal pairs", criterion_additive},
      {"corpus scenarios pass with byte-stable reports", criterion_corpus},
      {"random rational 3x3 spot checks are exact", criterion_random_rational},
      {"all core computation routes agree", criterion_cross_formula},
      {"the {1,3} family parametrization is complete", criterion_family_completeness},
  };

  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Check c;
    try {
      c = criteria[i].run();
    } catch (const std::exception& e) {
      c.fail(std::string("exception: ") + e.what());
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.pass) {
      std::printf("[%zu/%zu] %s ... PASS (%.1fs)\n", i + 1, criteria.size(), criteria[i].name,
                  secs);
    } else {
      ++failures;
      std::printf("[%zu/%zu] %s ... FAIL (%.1fs): %s\n", i + 1, criteria.size(),
                  criteria[i].name, secs, c.note.c_str());
    }
    std::fflush(stdout);
  }
  if (failures == 0) {
    std::printf("acceptance: all %zu criteria passed\n", criteria.size());
    return 0;
  }
  std::printf("acceptance: %d of %zu criteria FAILED\n", failures, criteria.size());
  return 1;
}
