#include "oack/genpoly.hpp"
#include "oack/rng.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <functional>

using namespace oack;
using oack::testing::basis_tuple;
using oack::testing::form_on_basis_expected;
using oack::testing::make;

namespace {

SymPoly cross_term() {
  // x0 * x1 in two variables.
  return SymPoly(2, Space{2}, {{MultiIndex{1, 1}, Rational(1)}});
}

} // namespace

TEST_CASE("sympoly construction and evaluation") {
  SymPoly p = cross_term();
  CHECK(eval(p, make(Role::function, {"2", "3"})) == Rational(6));
  // Zero coefficients are dropped, so the representation is canonical.
  SymPoly q(2, Space{2}, {{MultiIndex{1, 1}, Rational(1)}, {MultiIndex{2, 0}, Rational(0)}});
  CHECK(p == q);
  CHECK_THROWS_AS(SymPoly(2, Space{2}, {{MultiIndex{1, 1, 1}, Rational(1)}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(SymPoly(2, Space{2}, {{MultiIndex{3, 0}, Rational(1)}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(SymPoly(0, Space{2}, {}), std::invalid_argument);
}

TEST_CASE("polarization on frozen inputs") {
  Space space{2};
  SymPoly p = cross_term();
  auto e0 = LatticeVector::unit(space, Role::function, 0);
  auto e1 = LatticeVector::unit(space, Role::function, 1);
  std::vector<LatticeVector> mixed = {e0, e1};
  CHECK(polarize(p, mixed) == Rational(1) / 2);
  SymPoly square(2, space, {{MultiIndex{2, 0}, Rational(1)}});
  std::vector<LatticeVector> repeated = {e0, e0};
  CHECK(polarize(square, repeated) == Rational(1));
  std::vector<LatticeVector> wrong_arity = {e0};
  CHECK_THROWS_AS(polarize(p, wrong_arity), std::invalid_argument);
}

TEST_CASE("polarization matches the closed form on basis tuples") {
  Rng rng(31);
  for (int i = 0; i < 40; ++i) {
    int k = rng.range(1, 3);
    int n = rng.range(1, 4);
    Space space{k};
    std::map<MultiIndex, Rational> coeffs;
    int terms = rng.range(1, 3);
    for (int t = 0; t < terms; ++t) {
      MultiIndex alpha(static_cast<std::size_t>(k), 0);
      for (int j = 0; j < n; ++j) ++alpha[static_cast<std::size_t>(rng.below(k))];
      coeffs[alpha] = rng.rational();
    }
    SymPoly p(n, space, coeffs);
    // Every pattern of total degree n, present in the polynomial or not.
    std::vector<MultiIndex> patterns;
    MultiIndex probe(static_cast<std::size_t>(k), 0);
    std::function<void(int, int)> fill = [&](int slot, int left) {
      if (slot == k - 1) {
        probe[static_cast<std::size_t>(slot)] = static_cast<unsigned>(left);
        patterns.push_back(probe);
        return;
      }
      for (int take = 0; take <= left; ++take) {
        probe[static_cast<std::size_t>(slot)] = static_cast<unsigned>(take);
        fill(slot + 1, left - take);
      }
    };
    fill(0, n);
    for (const auto& alpha : patterns) {
      auto tuple = basis_tuple(space, alpha);
      CHECK(polarize(p, tuple) == form_on_basis_expected(p, alpha));
    }
  }
}

TEST_CASE("additivity of a general polynomial is its support shape") {
  CHECK_FALSE(is_orthogonally_additive(cross_term()));
  SymPoly single(3, Space{2}, {{MultiIndex{3, 0}, Rational(2)}});
  CHECK(is_orthogonally_additive(single));
  SymPoly diag(2, Space{2},
               {{MultiIndex{2, 0}, Rational(1)}, {MultiIndex{0, 2}, Rational(-5)}});
  CHECK(is_orthogonally_additive(diag));
  CHECK(is_orthosymmetric(diag));
  CHECK_FALSE(is_orthosymmetric(cross_term()));
  Rng rng(32);
  for (int i = 0; i < 50; ++i) {
    int k = rng.range(1, 3);
    int n = rng.range(1, 4);
    std::map<MultiIndex, Rational> coeffs;
    for (int t = 0, terms = rng.range(1, 4); t < terms; ++t) {
      MultiIndex alpha(static_cast<std::size_t>(k), 0);
      for (int j = 0; j < n; ++j) ++alpha[static_cast<std::size_t>(rng.below(k))];
      coeffs[alpha] = rng.rational();
    }
    SymPoly p(n, Space{k}, coeffs);
    CHECK(is_orthogonally_additive(p) == is_orthosymmetric(p));
  }
}

TEST_CASE("powers of a functional") {
  SymPoly sq = power_functional(make(Role::measure, {"1", "1"}), 2);
  SymPoly expected(2, Space{2},
                   {{MultiIndex{2, 0}, Rational(1)},
                    {MultiIndex{1, 1}, Rational(2)},
                    {MultiIndex{0, 2}, Rational(1)}});
  CHECK(sq == expected);

  PowerReport wide = power_functional_test(make(Role::measure, {"1", "1"}), 2);
  CHECK_FALSE(wide.orthogonally_additive);
  CHECK_FALSE(wide.lattice_homomorphism);
  PowerReport atom = power_functional_test(make(Role::measure, {"0", "3"}), 2);
  CHECK(atom.orthogonally_additive);
  CHECK(atom.lattice_homomorphism);
  PowerReport zero = power_functional_test(make(Role::measure, {"0", "0"}), 3);
  CHECK(zero.orthogonally_additive);
  CHECK_THROWS_AS(power_functional_test(make(Role::measure, {"1", "1"}), 1),
                  std::invalid_argument);
}

TEST_CASE("diagonal polynomials embed and atoms witness nonvanishing") {
  OAPoly p(2, make(Role::measure, {"1", "-5"}));
  SymPoly diag = diagonal_sympoly(p);
  CHECK(is_orthogonally_additive(diag));
  CHECK(eval(diag, make(Role::function, {"2", "1"})) == Rational(-1));

  AtomReport report = al_atom_check({Rational(2), Rational(3)}, 2);
  CHECK(report.has_atom);
  CHECK(is_orthogonally_additive(report.witness));
  CHECK(report.witness_sup_norm == Rational(1) / 4);
  CHECK_THROWS_AS(al_atom_check({}, 2), std::invalid_argument);
  CHECK_THROWS_AS(al_atom_check({Rational(0)}, 2), std::invalid_argument);
  CHECK_THROWS_AS(al_atom_check({Rational(1)}, 1), std::invalid_argument);

  CHECK(weighted_l1_sup_norm({Rational(1), Rational(0)}, {Rational(2), Rational(1)}, 2) ==
        Rational(1) / 4);
  CHECK(weighted_l1_sup_norm({Rational(1), Rational(16)}, {Rational(1), Rational(2)}, 4) ==
        Rational(1));
}
