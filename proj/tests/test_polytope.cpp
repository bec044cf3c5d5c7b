#include "oack/polytope.hpp"
#include "oack/rng.hpp"

#include "oracles.hpp"

#include <doctest.h>

using namespace oack;
using oack::testing::make;

namespace {

HRep body(int k, Role role, std::vector<std::pair<std::vector<int>, int>> rows) {
  HRep h{Space{k}, role, {}};
  for (auto& [normal, rhs] : rows) {
    HalfSpace hs;
    for (int c : normal) hs.normal.push_back(Rational(c));
    hs.rhs = Rational(rhs);
    h.rows.push_back(std::move(hs));
  }
  return h;
}

} // namespace

TEST_CASE("facet counts of the four unit balls") {
  CHECK(ball_hrep(NormId::sup, 3).rows.size() == 6);
  CHECK(ball_hrep(NormId::d, 3).rows.size() == 12);
  CHECK(ball_hrep(NormId::var, 3).rows.size() == 8);
  CHECK(ball_hrep(NormId::zero, 2).rows.size() == 6);
  CHECK(ball_hrep(NormId::sup, 2).role == Role::function);
  CHECK(ball_hrep(NormId::zero, 2).role == Role::measure);
  CHECK_THROWS_AS(ball_hrep(NormId::var, 40), CapacityError);
  CHECK_THROWS_AS(ball_hrep(NormId::zero, 40), CapacityError);
  CHECK_THROWS_AS(ball_hrep(NormId::d, 0), std::invalid_argument);
}

TEST_CASE("frozen vertex sets in two dimensions") {
  auto d2 = enumerate_vertices(ball_hrep(NormId::d, 2));
  std::vector<LatticeVector> expected_d = {
      make(Role::function, {"-1", "-1"}), make(Role::function, {"-1", "0"}),
      make(Role::function, {"0", "-1"}),  make(Role::function, {"0", "1"}),
      make(Role::function, {"1", "0"}),   make(Role::function, {"1", "1"}),
  };
  CHECK(d2.vertices == expected_d);

  auto z2 = enumerate_vertices(ball_hrep(NormId::zero, 2));
  std::vector<LatticeVector> expected_z = {
      make(Role::measure, {"-1", "0"}), make(Role::measure, {"-1", "1"}),
      make(Role::measure, {"0", "-1"}), make(Role::measure, {"0", "1"}),
      make(Role::measure, {"1", "-1"}), make(Role::measure, {"1", "0"}),
  };
  CHECK(z2.vertices == expected_z);

  CHECK(enumerate_vertices(ball_hrep(NormId::var, 2)).vertices.size() == 4);
  CHECK(enumerate_vertices(ball_hrep(NormId::sup, 2)).vertices.size() == 4);
}

TEST_CASE("enumeration matches the closed forms") {
  for (int k = 1; k <= 3; ++k) {
    for (NormId id : {NormId::sup, NormId::d, NormId::var, NormId::zero}) {
      auto enumerated = enumerate_vertices(ball_hrep(id, k));
      auto predicted = predicted_extremes(id, k);
      CHECK(enumerated.vertices == predicted.vertices);
    }
  }
  CHECK(predicted_extremes(NormId::d, 3).vertices.size() == 14);
  CHECK(predicted_extremes(NormId::zero, 3).vertices.size() == 12);
  CHECK(predicted_extremes(NormId::var, 5).vertices.size() == 10);
  CHECK(predicted_extremes(NormId::sup, 4).vertices.size() == 16);
}

TEST_CASE("membership positions") {
  auto ball = ball_hrep(NormId::d, 2);
  CHECK(membership(ball, make(Role::function, {"0", "0"})) == Position::interior);
  CHECK(membership(ball, make(Role::function, {"1", "1"})) == Position::boundary);
  CHECK(membership(ball, make(Role::function, {"1/3", "-1/4"})) == Position::interior);
  CHECK(membership(ball, make(Role::function, {"2", "0"})) == Position::outside);
  CHECK(membership(ball, make(Role::function, {"1", "-1/2"})) == Position::outside);
}

TEST_CASE("support values recover the dual norms") {
  CHECK(support_value(ball_hrep(NormId::d, 2), make(Role::measure, {"3", "-1"})) == Rational(3));
  CHECK(support_value(ball_hrep(NormId::zero, 2), make(Role::function, {"1", "-2"})) ==
        Rational(3));
  // Direction role must oppose the body role.
  CHECK_THROWS_AS(support_value(ball_hrep(NormId::d, 2), make(Role::function, {"1", "0"})),
                  std::invalid_argument);
}

TEST_CASE("degenerate bodies are rejected") {
  // Unbounded: nothing caps x1 from below.
  auto open_strip = body(2, Role::function, {{{1, 0}, 1}, {{-1, 0}, 1}, {{0, 1}, 1}});
  CHECK_THROWS_AS(enumerate_vertices(open_strip), std::invalid_argument);
  // Rank deficient.
  auto slab = body(2, Role::function, {{{1, 0}, 1}, {{-1, 0}, 1}});
  CHECK_THROWS_AS(enumerate_vertices(slab), std::invalid_argument);
  // 0 not interior.
  auto shifted = body(1, Role::function, {{{1}, 1}, {{-1}, 0}});
  CHECK_THROWS_AS(enumerate_vertices(shifted), std::invalid_argument);
  CHECK_THROWS_AS(enumerate_vertices(ball_hrep(NormId::d, 2), 1), CapacityError);
}

TEST_CASE("an asymmetric bounded body enumerates correctly") {
  // Simplex with vertices (-1,-1), (-1,2), (2,-1); 0 interior, no symmetry.
  auto simplex = body(2, Role::function, {{{-1, 0}, 1}, {{0, -1}, 1}, {{1, 1}, 1}});
  auto v = enumerate_vertices(simplex);
  std::vector<LatticeVector> expected = {
      make(Role::function, {"-1", "-1"}),
      make(Role::function, {"-1", "2"}),
      make(Role::function, {"2", "-1"}),
  };
  CHECK(v.vertices == expected);
  CHECK(membership(simplex, make(Role::function, {"-1", "2"})) == Position::boundary);
}
