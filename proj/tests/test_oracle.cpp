#include "ginv/oracle.hpp"

#include <doctest.h>

#include "ginv/inverse.hpp"
#include "support.hpp"

#include <string>
#include <vector>

using namespace ginv;
using namespace ginv::test;
namespace orc = ginv::oracle;

TEST_CASE("find_all: frozen sets on the integers mod 8") {
  auto z8 = ring("zmod:8");
  auto core3 = take(orc::find_all(InverseKind::core, el(z8, 3)));
  REQUIRE(core3.size() == 1);
  CHECK(core3[0] == el(z8, 3));

  CHECK(take(orc::find_all(InverseKind::core, el(z8, 4))).empty());

  // every x satisfies 0*x*0 = 0
  auto inner0 = take(orc::find_all(InverseKind::inner, el(z8, 0)));
  REQUIRE(inner0.size() == 8);
  for (int i = 0; i < 8; ++i) CHECK(inner0[i] == el(z8, i));

  // infinite rings are refused
  auto mq = ring("mat:rat:2");
  auto inf = orc::find_all(InverseKind::core, mq->one());
  REQUIRE_FALSE(inf.ok());
  CHECK(inf.failure().code == Err::infinite_ring);
}

TEST_CASE("group, core, and dual core inverses are unique when they exist") {
  for (const char* desc : {"zmod:8", "zmod:12", "mat:gf:2:2"}) {
    auto r = ring(desc);
    for (const auto& a : all_elements(r)) {
      CHECK(take(orc::find_all(InverseKind::group, a)).size() <= 1);
      CHECK(take(orc::find_all(InverseKind::core, a)).size() <= 1);
      CHECK(take(orc::find_all(InverseKind::dual_core, a)).size() <= 1);
    }
  }
}

TEST_CASE("classification of the integers mod 8") {
  auto z8 = ring("zmod:8");
  auto rep = take(orc::classify(z8));
  REQUIRE(rep.rows.size() == 8);

  std::vector<int> core_members;
  for (int i = 0; i < 8; ++i) {
    const auto& row = rep.rows[i];
    CHECK(row.element == el(z8, i));
    CHECK(row.in_core == (row.in_group && row.in_one_three));
    if (row.in_core) core_members.push_back(i);
  }
  CHECK(core_members == std::vector<int>{0, 1, 3, 5, 7});

  // recorded witnesses pass a definitional verify
  for (const auto& row : rep.rows) {
    if (row.group) CHECK(take(verify(InverseKind::group, row.element, *row.group,
                                     CertForm::definitional)).valid);
    if (row.core)
      CHECK(take(verify(InverseKind::core, row.element, *row.core, CertForm::definitional)).valid);
    if (row.one_three) CHECK(take(verify(InverseKind::one_three, row.element, *row.one_three,
                                         CertForm::definitional)).valid);
    if (row.one_four) CHECK(take(verify(InverseKind::one_four, row.element, *row.one_four,
                                        CertForm::definitional)).valid);
    if (row.dual_core) CHECK(take(verify(InverseKind::dual_core, row.element, *row.dual_core,
                                         CertForm::definitional)).valid);
  }

  // rendering is stable and carries the header
  auto text = orc::classification_to_text(rep);
  CHECK(text.find("ring zmod:8 (8 elements)") != std::string::npos);
  CHECK(text == orc::classification_to_text(take(orc::classify(z8))));
  auto j = orc::classification_to_json(rep);
  CHECK(j["ring"] == "zmod:8");
  CHECK(j["size"] == 8);
  CHECK(j["rows"].size() == 8);
}

TEST_CASE("classification rows match the published matrix-ring facts") {
  auto m4 = ring("mat:zmod:4:2");
  auto rep = take(orc::classify(m4));
  auto a = mat(m4, {{3, 1}, {0, 0}});
  auto s = mat(m4, {{3, 1}, {1, 1}});  // a + [[0,0],[1,1]]
  bool saw_a = false, saw_s = false;
  for (const auto& row : rep.rows) {
    if (row.element == a) {
      CHECK(row.in_core);
      saw_a = true;
    }
    if (row.element == s) {
      CHECK_FALSE(row.in_one_three);
      CHECK_FALSE(row.in_core);
      saw_s = true;
    }
  }
  CHECK(saw_a);
  CHECK(saw_s);
}

TEST_CASE("decomposition variants: frozen cases") {
  auto z8 = ring("zmod:8");
  for (int v = 1; v <= 9; ++v) {
    CHECK(take(orc::decomposition_holds(el(z8, 3), v, orc::DecompositionKind::core)));
    CHECK(take(orc::decomposition_holds(el(z8, 3), v, orc::DecompositionKind::dual_core)));
  }
  CHECK_FALSE(take(orc::decomposition_holds(el(z8, 4), 2, orc::DecompositionKind::core)));
  CHECK(take(orc::decomposition_holds(el(z8, 0), 2, orc::DecompositionKind::core)));

  auto bad = orc::decomposition_holds(el(z8, 3), 10, orc::DecompositionKind::core);
  REQUIRE_FALSE(bad.ok());
  CHECK(bad.failure().code == Err::malformed_spec);
}

TEST_CASE("all nine decomposition variants characterize membership") {
  for (const char* desc : {"zmod:8", "zmod:12", "mat:gf:2:2"}) {
    auto r = ring(desc);
    for (const auto& a : all_elements(r)) {
      const bool in_core = !take(orc::find_all(InverseKind::core, a)).empty();
      const bool in_dual = !take(orc::find_all(InverseKind::dual_core, a)).empty();
      for (int v = 1; v <= 9; ++v) {
        CHECK(take(orc::decomposition_holds(a, v, orc::DecompositionKind::core)) == in_core);
        CHECK(take(orc::decomposition_holds(a, v, orc::DecompositionKind::dual_core)) == in_dual);
      }
    }
  }
}

TEST_CASE("finite rings are direct finite") {
  for (const char* desc : {"zmod:8", "mat:gf:2:2", "mat:zmod:4:2"}) {
    auto res = take(orc::is_direct_finite(ring(desc)));
    CHECK(res.direct_finite);
    CHECK_FALSE(res.counterexample.has_value());
  }
}

TEST_CASE("unique projection generating aR exists exactly for {1,3}-invertible a") {
  for (const char* desc : {"zmod:8", "mat:gf:2:2"}) {
    auto r = ring(desc);
    for (const auto& a : all_elements(r)) {
      auto p = take(orc::unique_projection(a));
      const bool has13 = !take(orc::find_all(InverseKind::one_three, a)).empty();
      CHECK(p.has_value() == has13);
      if (p) {
        CHECK(sq(*p) == *p);
        CHECK(star(*p) == *p);
      }
      auto core = core_inverse(a);
      if (core.ok() && p) CHECK(*p == a * core.value());
    }
  }
}

TEST_CASE("decomposition witnesses found by scan feed the engine") {
  auto z8 = ring("zmod:8");
  auto w3 = take(orc::find_decomposition_witness(el(z8, 3)));
  REQUIRE(w3.has_value());
  CHECK(take(core_from_decomposition(el(z8, 3), *w3)).core == el(z8, 3));

  CHECK_FALSE(take(orc::find_decomposition_witness(el(z8, 4))).has_value());

  // every core invertible element of a small matrix ring has a scan witness
  auto m2 = ring("mat:gf:2:2");
  for (const auto& a : all_elements(m2)) {
    auto core = core_inverse(a);
    auto w = take(orc::find_decomposition_witness(a));
    if (core.ok()) {
      REQUIRE(w.has_value());
      auto res = take(core_from_decomposition(a, *w));
      CHECK(res.core == core.value());
    } else {
      // all four split equations together force core invertibility
      CHECK_FALSE(w.has_value());
    }
  }
}
