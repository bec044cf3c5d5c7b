// Independent recomputations used by the unit tests. Each takes a different
// route than the library code it pins, so agreement is evidence, not an echo.
#pragma once

#include "oack/genpoly.hpp"
#include "oack/lattice.hpp"
#include "oack/oapoly.hpp"
#include "oack/rational.hpp"

#include <string>
#include <vector>

namespace oack::testing {

inline LatticeVector make(Role role, const std::vector<std::string>& entries) {
  std::vector<Rational> coords;
  coords.reserve(entries.size());
  for (const auto& e : entries) coords.push_back(parse_rational(e));
  Space space{static_cast<int>(entries.size())};
  return LatticeVector(space, role, std::move(coords));
}

// max |mu(S)| over nonempty index subsets S, by direct subset scan.
inline Rational oracle_zero_norm(const LatticeVector& mu) {
  int k = mu.dim();
  Rational best(0);
  for (unsigned mask = 1; mask < (1u << k); ++mask) {
    Rational sum(0);
    for (int i = 0; i < k; ++i) {
      if (mask & (1u << i)) sum += mu[i];
    }
    Rational a = abs_rational(sum);
    if (a > best) best = a;
  }
  return best;
}

// sup of |P(y)| over the order interval |y| <= x, by scanning box corners:
// y_i in {-x_i, x_i} for odd degree, {0, x_i} for even degree.
inline Rational oracle_local_sup(const OAPoly& p, const LatticeVector& x) {
  int k = x.dim();
  bool odd = p.degree % 2 == 1;
  Rational best(0);
  for (unsigned mask = 0; mask < (1u << k); ++mask) {
    Rational sum(0);
    for (int i = 0; i < k; ++i) {
      Rational power = pow_rational(x[i], static_cast<unsigned>(p.degree));
      if (mask & (1u << i)) sum += p.mu[i] * power;
      else if (odd) sum -= p.mu[i] * power;
    }
    Rational a = abs_rational(sum);
    if (a > best) best = a;
  }
  return best;
}

// Basis tuple whose multiplicities follow alpha: alpha[i] copies of e_i.
inline std::vector<LatticeVector> basis_tuple(Space space, const MultiIndex& alpha) {
  std::vector<LatticeVector> out;
  for (int i = 0; i < space.k; ++i) {
    for (unsigned c = 0; c < alpha[static_cast<std::size_t>(i)]; ++c) {
      out.push_back(LatticeVector::unit(space, Role::function, i));
    }
  }
  return out;
}

// Value the symmetric form must take on that tuple: c_alpha * alpha! / n!.
inline Rational form_on_basis_expected(const SymPoly& p, const MultiIndex& alpha) {
  auto it = p.coeffs().find(alpha);
  Rational c = it == p.coeffs().end() ? Rational(0) : it->second;
  Int weight(1);
  for (unsigned e : alpha) weight *= factorial(e);
  return c * Rational(weight) / Rational(factorial(static_cast<unsigned>(p.degree())));
}

} // namespace oack::testing
