#include "oack/isometry.hpp"
#include "oack/norms.hpp"
#include "oack/rng.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <set>

using namespace oack;
using oack::testing::make;

namespace {

Mat mat2(int a, int b, int c, int d) {
  return Mat::from_rows({{Rational(a), Rational(b)}, {Rational(c), Rational(d)}});
}

const Mat kShear = mat2(1, 0, 1, -1);

} // namespace

TEST_CASE("group orders") {
  CHECK(enumerate_isometries(NormId::d, 1).size() == 2);
  CHECK(enumerate_isometries(NormId::d, 2).size() == 12);
  CHECK(enumerate_isometries(NormId::d, 3).size() == 48);
  CHECK(enumerate_isometries(NormId::sup, 2).size() == 8);
  CHECK(enumerate_isometries(NormId::var, 2).size() == 8);
  CHECK(enumerate_isometries(NormId::zero, 2).size() == 12);
}

TEST_CASE("the d group is a group and contains the shear") {
  auto maps = enumerate_isometries(NormId::d, 2);
  std::set<Mat> group(maps.begin(), maps.end());
  CHECK(group.count(kShear) == 1);
  CHECK(group.count(Mat::identity(2)) == 1);
  for (const auto& a : maps) {
    auto inv = inverse(a);
    REQUIRE(inv.has_value());
    CHECK(group.count(*inv) == 1);
    for (const auto& b : maps) CHECK(group.count(a.mul(b)) == 1);
  }
}

TEST_CASE("classification splits the two structural forms") {
  auto id_report = classify(Mat::identity(2));
  CHECK(id_report.kind == IsoKind::canonical);
  CHECK(id_report.sign == 1);
  CHECK(id_report.phi == std::vector<int>{0, 1});

  auto neg_report = classify(mat2(-1, 0, 0, -1));
  CHECK(neg_report.kind == IsoKind::canonical);
  CHECK(neg_report.sign == -1);

  auto swap_report = classify(mat2(0, 1, 1, 0));
  CHECK(swap_report.kind == IsoKind::canonical);
  CHECK(swap_report.phi == std::vector<int>{1, 0});

  auto shear_report = classify(kShear);
  CHECK(shear_report.kind == IsoKind::noncanonical);
  CHECK(shear_report.sign == 1);
  CHECK(shear_report.p == 0);
  CHECK(shear_report.t == 0);
  CHECK(shear_report.phi == std::vector<int>{-1, 1});

  // Mixed signs and scalings are not d isometries.
  CHECK_THROWS_AS(classify(mat2(1, 0, 0, -1)), ClassificationError);
  CHECK_THROWS_AS(classify(mat2(2, 0, 0, 1)), ClassificationError);
  CHECK_THROWS_AS(classify(mat2(1, 1, 1, -1)), ClassificationError);

  // Every enumerated element classifies, and the counts split as predicted.
  int canonical = 0, noncanonical = 0;
  for (const auto& m : enumerate_isometries(NormId::d, 2)) {
    (classify(m).kind == IsoKind::canonical ? canonical : noncanonical) += 1;
  }
  CHECK(canonical == 4);
  CHECK(noncanonical == 8);
}

TEST_CASE("classified maps really preserve the norm") {
  Rng rng(41);
  for (int k : {2, 3}) {
    auto maps = enumerate_isometries(NormId::d, k);
    for (const auto& m : maps) {
      auto x = rng.vector(Space{k}, Role::function);
      CHECK(d_norm(m.apply(x)) == d_norm(x));
    }
  }
}

TEST_CASE("induced action on measures") {
  auto shear_report = classify(kShear);
  CHECK(induced_measure_map(shear_report, make(Role::measure, {"3", "5"})) ==
        make(Role::measure, {"8", "-5"}));

  auto swap_report = classify(mat2(0, 1, 1, 0));
  CHECK(induced_measure_map(swap_report, make(Role::measure, {"3", "5"})) ==
        make(Role::measure, {"5", "3"}));

  // The induced action is the transpose in every case.
  Rng rng(42);
  for (const auto& m : enumerate_isometries(NormId::d, 3)) {
    auto mu = rng.vector(Space{3}, Role::measure);
    CHECK(induced_measure_map(classify(m), mu) == m.transpose().apply(mu));
  }
}

TEST_CASE("even-degree polynomial isometries") {
  auto shear_report = classify(kShear);
  PolyIsometry action = induced_poly_isometry(shear_report, 2);
  OAPoly p(2, make(Role::measure, {"3", "5"}));
  OAPoly image = action.apply(p);
  CHECK(image.mu == make(Role::measure, {"8", "-5"}));
  CHECK(sup_norm_poly(image) == sup_norm_poly(p));
  CHECK(sup_norm_poly(p) == Rational(8));

  CHECK_THROWS_AS(induced_poly_isometry(shear_report, 3), std::invalid_argument);

  Rng rng(43);
  for (const auto& m : enumerate_isometries(NormId::d, 2)) {
    PolyIsometry a = induced_poly_isometry(classify(m), 4);
    auto mu = rng.vector(Space{2}, Role::measure);
    OAPoly q(4, mu);
    CHECK(sup_norm_poly(a.apply(q)) == sup_norm_poly(q));
  }
}

TEST_CASE("regular pushforward needs a lattice map") {
  auto swap_report = classify(mat2(0, -1, -1, 0));
  auto mu = make(Role::measure, {"3", "-5"});
  auto pushed = regular_pushforward(swap_report, mu);
  CHECK(reg_norm_poly(OAPoly(3, pushed)) == reg_norm_poly(OAPoly(3, mu)));
  CHECK(pushed == make(Role::measure, {"5", "-3"}));

  auto shear_report = classify(kShear);
  CHECK_THROWS_AS(regular_pushforward(shear_report, mu), std::invalid_argument);
}
