#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "blowup.hpp"
#include "error.hpp"
#include "support/models.hpp"

#include <map>

using namespace qtorb;
using namespace qtorb::testing;

namespace {

Face face_of(const CharacteristicModel& m, std::initializer_list<const char*> names) {
  std::vector<int> idx;
  for (const char* n : names) {
    idx.push_back(m.polytope.facet_index(n));
  }
  return make_face(m.polytope, std::move(idx));
}

std::map<Rat, Int> table_of(std::initializer_list<std::pair<long long, long long>> entries) {
  std::map<Rat, Int> out;
  for (const auto& [d, r] : entries) {
    out[Rat(d)] = Int(r);
  }
  return out;
}

} // namespace

TEST_CASE("blowup spec on the weighted projective model") {
  const auto m = simplex4_model();
  const Face f = face_of(m, {"F1", "F5"});

  SUBCASE("crepant vector") {
    const auto spec = make_blowup_spec(m, f, iv({1, 1, 1, 1}));
    CHECK(spec.b == RatVec{make_rat(2, 3), make_rat(1, 3)});
    CHECK(spec.crepant);
    CHECK(spec.resolution_step);
    CHECK(spec.coefficient_sum() == 1);
  }
  SUBCASE("non-crepant vector") {
    const auto spec = make_blowup_spec(m, f, iv({2, 3, 3, 3}));
    CHECK(spec.b == RatVec{Rat(1), Rat(1)});
    CHECK_FALSE(spec.crepant);
    CHECK_FALSE(spec.resolution_step);
    CHECK(spec.coefficient_sum() == 2);
  }
  SUBCASE("vector outside the span is rejected") {
    CHECK_THROWS_AS(make_blowup_spec(m, f, iv({0, 0, 1, 0})), Error);
  }
  SUBCASE("vector on the cone boundary is rejected") {
    // lambda_5 itself: b = (0, 1), not strictly positive.
    CHECK_THROWS_AS(make_blowup_spec(m, f, iv({1, 3, 3, 3})), Error);
  }
  SUBCASE("imprimitive vector is rejected") {
    CHECK_THROWS_AS(make_blowup_spec(m, f, iv({2, 2, 2, 2})), Error);
  }
  SUBCASE("facets and the whole polytope are rejected") {
    CHECK_THROWS_AS(make_blowup_spec(m, face_of(m, {"F1"}), iv({1, 0, 0, 0})), Error);
    CHECK_THROWS_AS(make_blowup_spec(m, make_face(m.polytope, {}), iv({1, 0, 0, 0})),
                    Error);
  }
}

TEST_CASE("crepant blowup of the weighted projective model and its resolution") {
  const auto x = simplex4_model();
  const Face f = face_of(x, {"F1", "F5"});
  const auto spec = make_blowup_spec(x, f, iv({1, 1, 1, 1}));

  std::string new_name;
  const auto y = blow_up(x, spec, &new_name);
  CHECK(new_name == "F0");
  CHECK(validate_model(y).empty());
  CHECK(y.polytope.facet_count() == 6);
  CHECK(y.polytope.vertices().size() == 8);
  CHECK(y.charvecs.back() == iv({1, 1, 1, 1}));
  REQUIRE(y.normals.has_value());
  CHECK(y.normals->back() == RatVec{Rat(0), Rat(-3), Rat(-3), Rat(-3)});
  CHECK(euler_cr(y) == 11);
  CHECK_FALSE(is_manifold(y));

  // Exactly one twisted sector remains, age 1 over the face {F0, F5}.
  const auto sectors = twisted_sectors(y);
  REQUIRE(sectors.size() == 2);
  const Face yf = face_of(y, {"F5", "F0"});
  CHECK(sectors[1].face == yf);
  CHECK(sectors[1].element.coeffs == RatVec{make_rat(1, 2), make_rat(1, 2)});
  CHECK(sectors[1].element.lattice_point == iv({1, 2, 2, 2}));
  CHECK(sectors[1].element.age == 1);

  // The table is unchanged by the crepant blowup.
  CHECK(cr_betti(y).entries == table_of({{0, 1}, {2, 3}, {4, 3}, {6, 3}, {8, 1}}));

  // Second crepant blowup resolves to a manifold with the same table.
  const auto spec2 = make_blowup_spec(y, yf, iv({1, 2, 2, 2}));
  CHECK(spec2.b == RatVec{make_rat(1, 2), make_rat(1, 2)});
  CHECK(spec2.crepant);
  const auto z = blow_up(y, spec2);
  CHECK(validate_model(z).empty());
  CHECK(is_manifold(z));
  CHECK(z.polytope.vertices().size() == 11);
  CHECK(euler_cr(z) == 11);
  CHECK(cr_betti(z).entries == table_of({{0, 1}, {2, 3}, {4, 3}, {6, 3}, {8, 1}}));
}

TEST_CASE("crepant candidates") {
  SUBCASE("weighted projective model: both interior elements have age 1") {
    const auto m = simplex4_model();
    const auto report = crepant_candidates(m, face_of(m, {"F1", "F5"}));
    REQUIRE(report.candidates.size() == 2);
    CHECK(report.candidates[0].lattice_point == iv({1, 2, 2, 2}));
    CHECK(report.candidates[1].lattice_point == iv({1, 1, 1, 1}));
    // One dual vector per vertex of the face; each evaluates to 1 on every
    // characteristic vector of its vertex.
    REQUIRE(report.vertex_duals.size() == 3);
    for (const auto& [vi, dual] : report.vertex_duals) {
      const auto& vset = m.polytope.vertices()[static_cast<std::size_t>(vi)];
      for (int facet : vset) {
        Rat pairing = 0;
        const auto& lambda = m.charvecs[static_cast<std::size_t>(facet)];
        for (std::size_t c = 0; c < dual.size(); ++c) {
          pairing += dual[c] * Rat(lambda[c]);
        }
        CHECK(pairing == 1);
      }
    }
  }
  SUBCASE("triangle orbifold") {
    const auto m = w2_model();
    const auto report = crepant_candidates(m, face_of(m, {"F1", "F3"}));
    REQUIRE(report.candidates.size() == 1);
    CHECK(report.candidates[0].lattice_point == iv({1, 1}));
  }
  SUBCASE("threefold vertex: the age-2 element is not a candidate") {
    const auto m = w3_model();
    const auto report = crepant_candidates(m, face_of(m, {"F1", "F2", "F3"}));
    REQUIRE(report.candidates.size() == 1);
    CHECK(report.candidates[0].lattice_point == iv({0, 0, 1}));
  }
  SUBCASE("smooth faces have no candidates") {
    const auto m = w2_model();
    const auto report = crepant_candidates(m, face_of(m, {"F1", "F2"}));
    CHECK(report.candidates.empty());
  }
}

TEST_CASE("McKay verification in low dimensions: tables are conserved") {
  SUBCASE("triangle orbifold resolves to the square") {
    const auto m = w2_model();
    const auto spec = make_blowup_spec(m, face_of(m, {"F1", "F3"}), iv({1, 1}));
    CHECK(spec.b == RatVec{make_rat(1, 2), make_rat(1, 2)});
    const auto report = verify_mckay(m, spec);
    CHECK(report.dim == 2);
    CHECK(report.crepant);
    CHECK(report.quasi_sl_before);
    CHECK(report.quasi_sl_after);
    CHECK(report.in_theorem_scope);
    CHECK(report.euler_before == 4);
    CHECK(report.euler_after == 4);
    CHECK(report.euler_conserved);
    CHECK(report.betti_before.entries == table_of({{0, 1}, {2, 2}, {4, 1}}));
    CHECK(report.betti_after.entries == table_of({{0, 1}, {2, 2}, {4, 1}}));
    CHECK(report.betti_equal);
    CHECK(report.betti_equality_expected);
    CHECK_FALSE(report.h2_growth_expected);
  }
  SUBCASE("threefold vertex") {
    const auto m = w3_model();
    const auto spec = make_blowup_spec(m, face_of(m, {"F1", "F2", "F3"}), iv({0, 0, 1}));
    CHECK(spec.b == RatVec{make_rat(1, 3), make_rat(1, 3), make_rat(1, 3)});
    const auto report = verify_mckay(m, spec);
    CHECK(report.dim == 3);
    CHECK(report.in_theorem_scope);
    CHECK(report.euler_before == 6);
    CHECK(report.euler_after == 6);
    CHECK(report.euler_conserved);
    CHECK(report.betti_before.entries == table_of({{0, 1}, {2, 2}, {4, 2}, {6, 1}}));
    CHECK(report.betti_after.entries == table_of({{0, 1}, {2, 2}, {4, 2}, {6, 1}}));
    CHECK(report.betti_equal);
    CHECK(report.betti_equality_expected);
  }
}

TEST_CASE("McKay verification in dimension four: euler conserved, h2 monotone") {
  const auto m = simplex4_model();
  const auto spec = make_blowup_spec(m, face_of(m, {"F1", "F5"}), iv({1, 1, 1, 1}));
  const auto report = verify_mckay(m, spec);
  CHECK(report.dim == 4);
  CHECK(report.in_theorem_scope);
  CHECK(report.euler_conserved);
  CHECK(report.euler_before == 11);
  CHECK(report.euler_after == 11);
  CHECK_FALSE(report.betti_equality_expected); // real dimension 8 > 6
  CHECK(report.h2_growth_expected);
  CHECK(report.h2_before == 3);
  CHECK(report.h2_after == 3);
  CHECK(report.h2_monotone);
}

TEST_CASE("McKay verification flags a non-crepant blowup as out of scope") {
  const auto m = simplex4_model();
  const auto spec = make_blowup_spec(m, face_of(m, {"F1", "F5"}), iv({2, 3, 3, 3}));
  const auto report = verify_mckay(m, spec);
  CHECK_FALSE(report.crepant);
  CHECK_FALSE(report.in_theorem_scope);
  CHECK_FALSE(report.betti_equality_expected);
  CHECK_FALSE(report.h2_growth_expected);
  // The invariants genuinely move: the Euler characteristic jumps.
  CHECK(report.euler_before == 11);
  CHECK(report.euler_after == 20);
  CHECK_FALSE(report.euler_conserved);
}

TEST_CASE("greedy resolution of the weighted projective model") {
  const auto m = simplex4_model();
  const auto res = resolve(m);
  REQUIRE(res.steps.size() == 2);

  CHECK(res.steps[0].face == std::vector<std::string>{"F1", "F5"});
  CHECK(res.steps[0].lambda0 == iv({1, 1, 1, 1}));
  CHECK(res.steps[0].b == RatVec{make_rat(2, 3), make_rat(1, 3)});
  CHECK(res.steps[0].crepant);
  CHECK(res.steps[0].new_facet == "F0");
  CHECK(res.steps[0].max_order_before == 3);

  CHECK(res.steps[1].face == std::vector<std::string>{"F5", "F0"});
  CHECK(res.steps[1].lambda0 == iv({1, 2, 2, 2}));
  CHECK(res.steps[1].b == RatVec{make_rat(1, 2), make_rat(1, 2)});
  CHECK(res.steps[1].crepant);
  CHECK(res.steps[1].new_facet == "F0_2");
  CHECK(res.steps[1].max_order_before == 2);

  CHECK(is_manifold(res.final_model));
  CHECK(res.final_model.polytope.vertices().size() == 11);
  CHECK(euler_cr(res.final_model) == 11);
  CHECK(cr_betti(res.final_model).entries ==
        table_of({{0, 1}, {2, 3}, {4, 3}, {6, 3}, {8, 1}}));
}

TEST_CASE("greedy resolution of the small fixtures") {
  SUBCASE("triangle orbifold: one step") {
    const auto res = resolve(w2_model());
    REQUIRE(res.steps.size() == 1);
    CHECK(res.steps[0].lambda0 == iv({1, 1}));
    CHECK(is_manifold(res.final_model));
    CHECK(euler_cr(res.final_model) == 4);
  }
  SUBCASE("threefold vertex: one step") {
    const auto res = resolve(w3_model());
    REQUIRE(res.steps.size() == 1);
    CHECK(res.steps[0].lambda0 == iv({0, 0, 1}));
    CHECK(res.steps[0].b ==
          RatVec{make_rat(1, 3), make_rat(1, 3), make_rat(1, 3)});
    CHECK(is_manifold(res.final_model));
    CHECK(cr_betti(res.final_model).entries ==
          table_of({{0, 1}, {2, 2}, {4, 2}, {6, 1}}));
  }
  SUBCASE("manifolds need no steps") {
    const auto res = resolve(cp2_model());
    CHECK(res.steps.empty());
    CHECK(res.final_model == cp2_model());
  }
  SUBCASE("fan variant: a single non-crepant step suffices") {
    const auto res = resolve(simplex4_fan_model());
    REQUIRE(res.steps.size() == 1);
    CHECK(res.steps[0].lambda0 == iv({0, -1, -1, -1}));
    CHECK_FALSE(res.steps[0].crepant);
    CHECK(is_manifold(res.final_model));
  }
}

TEST_CASE("blowup preserves positive omniorientation on the projective plane orbifold") {
  const auto m = wp112_model();
  CHECK(is_positively_omnioriented(m));
  const Face f = face_of(m, {"F1", "F3"});
  const auto candidates = crepant_candidates(m, f);
  REQUIRE(candidates.candidates.size() == 1);
  CHECK(candidates.candidates[0].lattice_point == iv({0, -1}));
  const auto spec = make_blowup_spec(m, f, iv({0, -1}));
  CHECK(spec.crepant);
  const auto after = blow_up(m, spec);
  REQUIRE(after.normals.has_value());
  CHECK(after.normals->back() == RatVec{Rat(0), Rat(-2)});
  CHECK(is_positively_omnioriented(after));
  CHECK(is_manifold(after));
  CHECK(euler_cr(after) == 4);
}
