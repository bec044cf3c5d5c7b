#include "oack/norms.hpp"
#include "oack/oapoly.hpp"
#include "oack/rng.hpp"

#include "oracles.hpp"

#include <doctest.h>

using namespace oack;
using oack::testing::make;
using oack::testing::oracle_local_sup;

TEST_CASE("evaluation and absolute value") {
  OAPoly p(3, make(Role::measure, {"2", "-1"}));
  CHECK(eval(p, make(Role::function, {"1", "2"})) == Rational(-6));
  CHECK(abs_poly(p).mu == make(Role::measure, {"2", "1"}));
  CHECK(abs_eval(p, make(Role::function, {"1", "2"})) == Rational(10));
  CHECK_THROWS_AS(abs_eval(p, make(Role::function, {"1", "-2"})), std::invalid_argument);
  CHECK_THROWS_AS(OAPoly(0, make(Role::measure, {"1"})), std::invalid_argument);
  CHECK_THROWS_AS(OAPoly(2, make(Role::function, {"1"})), std::invalid_argument);
  CHECK_THROWS_AS(eval(p, make(Role::function, {"1", "2", "3"})), std::invalid_argument);
}

TEST_CASE("sup norm formula equals the exhaustive scan") {
  OAPoly q2(2, make(Role::measure, {"1", "-1"}));
  OAPoly q3(3, make(Role::measure, {"1", "-1"}));
  CHECK(sup_norm_bruteforce(q2) == Rational(1));
  CHECK(sup_norm_bruteforce(q3) == Rational(2));
  CHECK(sup_norm_poly(q2) == Rational(1));
  CHECK(sup_norm_poly(q3) == Rational(2));
  Rng rng(21);
  for (int i = 0; i < 80; ++i) {
    OAPoly p(rng.range(1, 6), rng.vector(Space{rng.range(1, 5)}, Role::measure));
    CHECK(sup_norm_poly(p) == sup_norm_bruteforce(p));
    CHECK(reg_norm_poly(p) == var_norm(p.mu));
  }
}

TEST_CASE("parity dichotomy between the two polynomial norms") {
  Rng rng(22);
  for (int i = 0; i < 80; ++i) {
    OAPoly p(rng.range(1, 6), rng.vector(Space{rng.range(1, 5)}, Role::measure));
    Rational sup = sup_norm_poly(p);
    Rational reg = reg_norm_poly(p);
    if (p.degree % 2 == 1) {
      CHECK(sup == reg);
    } else {
      CHECK(sup <= reg);
      CHECK(reg <= 2 * sup);
    }
  }
  // The even-degree factor two is attained.
  OAPoly witness(2, make(Role::measure, {"1", "-1"}));
  CHECK(reg_norm_poly(witness) == 2 * sup_norm_poly(witness));
}

TEST_CASE("local bound in closed form equals the box scan") {
  Rng rng(23);
  for (int i = 0; i < 80; ++i) {
    Space space{rng.range(1, 5)};
    OAPoly p(rng.range(1, 6), rng.vector(space, Role::measure));
    auto x = rng.nonneg_vector(space, Role::function);
    CHECK(local_sup(p, x) == oracle_local_sup(p, x));
  }
  OAPoly p(2, make(Role::measure, {"1", "-1"}));
  CHECK_THROWS_AS(local_sup(p, make(Role::function, {"1", "-1"})), std::invalid_argument);
}

TEST_CASE("absolute value against the local bound") {
  OAPoly witness(2, make(Role::measure, {"1", "-1"}));
  BasicReport r = check_basic(witness, make(Role::function, {"1", "1"}));
  CHECK(r.abs_value == Rational(2));
  CHECK(r.local_bound == Rational(1));
  CHECK(r.even);
  REQUIRE(r.ratio.has_value());
  CHECK(*r.ratio == Rational(2));

  OAPoly odd(3, make(Role::measure, {"2", "-1"}));
  BasicReport ro = check_basic(odd, make(Role::function, {"1", "1"}));
  CHECK(ro.abs_value == ro.local_bound);
  CHECK_FALSE(ro.even);
  REQUIRE(ro.ratio.has_value());
  CHECK(*ro.ratio == Rational(1));

  Rng rng(24);
  for (int i = 0; i < 60; ++i) {
    Space space{rng.range(1, 5)};
    OAPoly p(rng.range(1, 6), rng.vector(space, Role::measure));
    auto x = rng.nonneg_vector(space, Role::function);
    BasicReport rep = check_basic(p, x);
    CHECK(rep.local_bound <= rep.abs_value);
    CHECK(rep.abs_value <= 2 * rep.local_bound);
  }
}

TEST_CASE("splitting supremum reaches the absolute value") {
  OAPoly witness(2, make(Role::measure, {"1", "-1"}));
  auto ones = make(Role::function, {"1", "1"});
  CHECK(partition_oracle(witness, ones, 3, 1) == Rational(2));
  CHECK(partition_oracle(witness, ones, 3, 1) == abs_eval(witness, ones));

  OAPoly plain(2, make(Role::measure, {"2", "3"}));
  CHECK(partition_oracle(plain, ones, 3, 1) == Rational(5));

  auto zero = make(Role::function, {"0", "0"});
  CHECK(partition_oracle(witness, zero, 3, 1) == Rational(0));

  Rng rng(25);
  for (int i = 0; i < 20; ++i) {
    Space space{rng.range(1, 3)};
    OAPoly p(rng.range(1, 4), rng.vector(space, Role::measure));
    auto x = rng.nonneg_vector(space, Role::function);
    CHECK(partition_oracle(p, x, 2, rng.next()) == abs_eval(p, x));
  }
}

TEST_CASE("black-box additivity detector") {
  Space space{2};
  OAPoly p(2, make(Role::measure, {"1", "-3"}));
  CHECK(is_orthogonally_additive_eval(
      space, [&](const LatticeVector& x) { return eval(p, x); }, 8, 5));
  // A cross term breaks additivity on disjoint pairs.
  auto cross = [](const LatticeVector& x) { return x[0] * x[0] * x[1]; };
  CHECK_FALSE(is_orthogonally_additive_eval(space, cross, 8, 5));
  CHECK_THROWS_AS(is_orthogonally_additive_eval(
                      Space{11}, [](const LatticeVector&) { return Rational(0); }, 1, 1),
                  CapacityError);
}
