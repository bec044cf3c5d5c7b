#ifndef OACK_OAPOLY_HPP
#define OACK_OAPOLY_HPP

#include "oack/common.hpp"
#include "oack/lattice.hpp"
#include "oack/rational.hpp"

#include <cstdint>
#include <functional>
#include <optional>

namespace oack {

// A diagonal n-homogeneous polynomial: P(x) = sum_i mu_i x_i^n. The measure
// mu determines P and every norm of it; n >= 1.
struct OAPoly {
  int degree;
  LatticeVector mu;

  OAPoly(int degree, LatticeVector mu);
  Space space() const { return mu.space(); }
};

Rational eval(const OAPoly& p, const LatticeVector& x);

// The polynomial whose measure is |mu|. On x >= 0 it computes the lattice
// absolute value |P| of P.
OAPoly abs_poly(const OAPoly& p);

// |P|(x) for x >= 0, evaluated directly as sum_i |mu_i| x_i^n.
Rational abs_eval(const OAPoly& p, const LatticeVector& x);

// Independent route to |P|(x): sup over enumerated splittings of x into
// positive pieces of the total |symmetric form| mass. Never exceeds
// abs_eval, and reaches it whenever the coordinate-atomic splitting is
// enumerated (budget >= 0 always includes it).
Rational partition_oracle(const OAPoly& p, const LatticeVector& x, int budget,
                          std::uint64_t seed);

// Norm of P as a polynomial on (functions, sup norm): var_norm(mu) for odd
// degree, zero_norm(mu) for even degree.
Rational sup_norm_poly(const OAPoly& p);

// Norm of P in the regular (lattice) sense: var_norm(mu) for every degree.
Rational reg_norm_poly(const OAPoly& p);

// Exhaustive optimizer for the sup norm: substituting t_i = x_i^n turns
// P over the sup ball into a linear functional over a box ([-1,1]^k for odd
// n, [0,1]^k for even n), whose extreme values sit at the 2^k box vertices.
Rational sup_norm_bruteforce(const OAPoly& p, int cap = kDefaultCap);

// sup of |P(y)| over |y| <= x, for x >= 0, in closed form.
Rational local_sup(const OAPoly& p, const LatticeVector& x);

struct BasicReport {
  Rational abs_value;
  Rational local_bound;
  std::optional<Rational> ratio; // abs_value / local_bound when defined
  bool even;
};

// Compares |P|(x) with local_sup: equal for odd degree, within a factor of
// two for even degree. Throws std::logic_error if either bound fails.
BasicReport check_basic(const OAPoly& p, const LatticeVector& x);

// Black-box additivity test on disjointly supported pairs: a deterministic
// grid of indicator-style pairs plus `trials` random ones.
bool is_orthogonally_additive_eval(
    Space space, const std::function<Rational(const LatticeVector&)>& poly,
    int trials, std::uint64_t seed);

} // namespace oack

#endif
