#include "oack/expose.hpp"
#include "oack/norms.hpp"
#include "oack/polytope.hpp"
#include "oack/rng.hpp"

#include "oracles.hpp"

#include <doctest.h>

using namespace oack;
using oack::testing::make;

TEST_CASE("norming faces of frozen points") {
  auto face1 = norming_face(make(Role::function, {"1", "1/2"}));
  REQUIRE(face1.extremes.size() == 1);
  CHECK(face1.extremes.front() == make(Role::measure, {"1", "0"}));

  auto face2 = norming_face(make(Role::function, {"1", "0"}));
  CHECK(face2.extremes.size() == 2);

  auto face3 = norming_face(make(Role::function, {"1/2", "-1/2"}));
  REQUIRE(face3.extremes.size() == 1);
  CHECK(face3.extremes.front() == make(Role::measure, {"1", "-1"}));

  auto face4 = norming_face(make(Role::function, {"1", "1"}));
  CHECK(face4.extremes.size() == 2);

  CHECK_THROWS_AS(norming_face(make(Role::function, {"2", "0"})), std::invalid_argument);
  CHECK_THROWS_AS(norming_face(make(Role::function, {"0", "0"})), std::invalid_argument);
}

TEST_CASE("smoothness routes agree on frozen points") {
  auto smooth_pt = make(Role::function, {"1", "1/2"});
  auto g = is_gateaux(smooth_pt);
  auto f = is_frechet(smooth_pt);
  CHECK(g.smooth);
  CHECK(f.smooth);
  REQUIRE(g.derivative.has_value());
  CHECK(*g.derivative == make(Role::measure, {"1", "0"}));
  CHECK(*f.derivative == *g.derivative);

  auto kink = make(Role::function, {"1", "0"});
  CHECK_FALSE(is_gateaux(kink).smooth);
  CHECK_FALSE(is_frechet(kink).smooth);
  CHECK_FALSE(gateaux_closed_form(kink).smooth);

  auto gap_pt = make(Role::function, {"1/2", "-1/2"});
  auto gg = is_gateaux(gap_pt);
  CHECK(gg.smooth);
  REQUIRE(gg.derivative.has_value());
  CHECK(*gg.derivative == make(Role::measure, {"1", "-1"}));

  auto one = make(Role::function, {"1"});
  CHECK(is_gateaux(one).smooth);
  CHECK(*is_gateaux(one).derivative == make(Role::measure, {"1"}));

  auto low = make(Role::function, {"-1", "-1/2"});
  auto gl = is_gateaux(low);
  CHECK(gl.smooth);
  CHECK(*gl.derivative == make(Role::measure, {"-1", "0"}));
}

TEST_CASE("the three routes agree on random unit vectors") {
  Rng rng(51);
  int smooth_seen = 0, kink_seen = 0;
  for (int i = 0; i < 200; ++i) {
    Space space{rng.range(1, 4)};
    auto x = rng.vector(space, Role::function);
    Rational norm = d_norm(x);
    if (norm == 0) x = LatticeVector::unit(space, Role::function, 0);
    else x = x.scaled(Rational(1) / norm);
    auto g = is_gateaux(x);
    auto f = is_frechet(x);
    auto c = gateaux_closed_form(x);
    CHECK(g.smooth == f.smooth);
    CHECK(g.smooth == c.smooth);
    CHECK(g.smooth == (norming_face(x).extremes.size() == 1));
    if (g.smooth) {
      CHECK(*g.derivative == *f.derivative);
      CHECK(*g.derivative == *c.derivative);
      ++smooth_seen;
    } else {
      ++kink_seen;
    }
  }
  // The corpus must exercise both outcomes to mean anything.
  CHECK(smooth_seen > 10);
  CHECK(kink_seen > 10);
}

TEST_CASE("peaking functions strongly expose the dual extremes") {
  CHECK(peaking_function(Space{3}, 0) == make(Role::function, {"1", "1/2", "1/2"}));
  CHECK(pair_peaking(Space{3}, 0, 1) == make(Role::function, {"1/2", "-1/2", "0"}));

  for (int k = 1; k <= 4; ++k) {
    for (const auto& extreme : predicted_extremes(NormId::zero, k).vertices) {
      auto witness = exposing_witness(extreme);
      CHECK(d_norm(witness) == Rational(1));
      CHECK(exposes(witness, extreme));
      CHECK(strongly_exposes(witness, extreme));
    }
  }

  auto delta0 = make(Role::measure, {"1", "0"});
  auto delta1 = make(Role::measure, {"0", "1"});
  auto w = exposing_witness(delta0);
  CHECK(exposes(w, delta0));
  CHECK_FALSE(exposes(w, delta1));

  // Non-extremes are refused.
  CHECK_THROWS_AS(exposes(w, make(Role::measure, {"1/2", "0"})), std::invalid_argument);
  CHECK_THROWS_AS(exposing_witness(make(Role::measure, {"1/2", "1/2"})), std::invalid_argument);
  CHECK_THROWS_AS(pair_peaking(Space{2}, 1, 1), std::invalid_argument);
}
