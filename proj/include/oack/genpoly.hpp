#ifndef OACK_GENPOLY_HPP
#define OACK_GENPOLY_HPP

#include "oack/lattice.hpp"
#include "oack/oapoly.hpp"
#include "oack/rational.hpp"

#include <map>
#include <span>
#include <vector>

namespace oack {

// Exponent vector over the k coordinates; entries sum to the degree.
using MultiIndex = std::vector<unsigned>;

// A general n-homogeneous polynomial in k variables, stored as a sparse
// map from exponent vectors to coefficients. Zero coefficients are dropped,
// so the representation is canonical.
class SymPoly {
public:
  SymPoly(int degree, Space space, std::map<MultiIndex, Rational> coeffs);

  int degree() const { return degree_; }
  Space space() const { return space_; }
  const std::map<MultiIndex, Rational>& coeffs() const { return coeffs_; }

  bool operator==(const SymPoly&) const = default;

private:
  int degree_;
  Space space_;
  std::map<MultiIndex, Rational> coeffs_;
};

Rational eval(const SymPoly& p, const LatticeVector& x);

// The symmetric multilinear form of P on an n-tuple, via the sign-averaged
// evaluation over {-1,+1}^n combinations of the arguments.
Rational polarize(const SymPoly& p, std::span<const LatticeVector> args);

// Whether every monomial involves a single variable.
bool is_orthogonally_additive(const SymPoly& p);

// Whether the symmetric form vanishes on every basis tuple that touches two
// distinct coordinates. By multilinearity this decides vanishing on all
// disjoint pairs, so it must agree with is_orthogonally_additive.
bool is_orthosymmetric(const SymPoly& p);

// The n-th power of the linear functional phi, expanded to a SymPoly.
SymPoly power_functional(const LatticeVector& phi, int n);

struct PowerReport {
  bool orthogonally_additive;
  bool lattice_homomorphism; // phi supported on at most one point
};

// For n >= 2 the two flags must coincide; a mismatch is an internal error.
PowerReport power_functional_test(const LatticeVector& phi, int n);

// Diagonal polynomial of an OAPoly as a SymPoly.
SymPoly diagonal_sympoly(const OAPoly& p);

struct AtomReport {
  bool has_atom;
  SymPoly witness;          // nonzero, orthogonally additive, diagonal
  Rational witness_sup_norm; // over the weighted-l1 unit ball
};

// On a weighted-l1 space of finite dimension every coordinate is an atom, so
// a nonzero orthogonally additive n-homogeneous polynomial always exists;
// the nonatomic contrast case has no finite-dimensional instance. Returns a
// diagonal monomial witness together with its sup norm over the unit ball.
AtomReport al_atom_check(const std::vector<Rational>& weights, int n);

// sup over the weighted-l1 unit ball of |sum_j a_j x_j^n|, in closed form:
// max_j |a_j| / w_j^n.
Rational weighted_l1_sup_norm(const std::vector<Rational>& diag,
                              const std::vector<Rational>& weights, int n);

} // namespace oack

#endif
