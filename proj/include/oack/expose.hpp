#ifndef OACK_EXPOSE_HPP
#define OACK_EXPOSE_HPP

#include "oack/lattice.hpp"
#include "oack/rational.hpp"

#include <optional>
#include <vector>

namespace oack {

// Extreme points of the dual (zero-norm) unit ball pairing to exactly 1
// against x. Nonempty whenever d_norm(x) = 1, which is required.
struct NormingFace {
  LatticeVector x;
  std::vector<LatticeVector> extremes;
};

NormingFace norming_face(const LatticeVector& x);

struct Smoothness {
  bool smooth;
  std::optional<LatticeVector> derivative;
};

// Smoothness of the d norm at x (d_norm(x) = 1 required), decided by the
// norming face being a single extreme point. Cross-checked internally
// against the closed-form criteria route; disagreement is an internal error.
Smoothness is_gateaux(const LatticeVector& x);

// Same decision through the closed-form criteria alone: a unique coordinate
// at height +/-1 with diameter below 1, or a unique pair at gap 1 with sup
// norm below 1. Exposed separately so the two routes can be compared.
Smoothness gateaux_closed_form(const LatticeVector& x);

// The stronger differentiability notion collapses onto the weaker one over
// a finite point set: approximate maximizers are eventually exact, so the
// criterion reduces to the same uniqueness checks. Computed through that
// reduction, independently of the face route.
Smoothness is_frechet(const LatticeVector& x);

// Whether x pairs to 1 with mu and below 1 with every other extreme of the
// dual ball. mu must be such an extreme.
bool exposes(const LatticeVector& x, const LatticeVector& mu);

// On a finite-dimensional polytopal ball the strong and plain notions
// coincide; computed via exposes and asserted against it.
bool strongly_exposes(const LatticeVector& x, const LatticeVector& mu);

// Unit vector peaking at t: 1 there, 1/2 elsewhere. Strongly exposes the
// point mass at t; verified before returning.
LatticeVector peaking_function(Space space, int t);

// Unit vector with 1/2 at t, -1/2 at s, 0 elsewhere. Strongly exposes the
// difference of point masses at (t, s); verified before returning.
LatticeVector pair_peaking(Space space, int t, int s);

// Witness dispatch: a unit vector strongly exposing the given extreme of
// the dual ball, whichever of the three shapes it has.
LatticeVector exposing_witness(const LatticeVector& extreme);

} // namespace oack

#endif
