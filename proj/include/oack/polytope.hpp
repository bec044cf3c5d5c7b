#ifndef OACK_POLYTOPE_HPP
#define OACK_POLYTOPE_HPP

#include "oack/common.hpp"
#include "oack/lattice.hpp"
#include "oack/norms.hpp"
#include "oack/rational.hpp"

#include <vector>

namespace oack {

struct HalfSpace {
  std::vector<Rational> normal;
  Rational rhs;
};

// Finite intersection of half-spaces normal . x <= rhs. The role records
// whether the points of the body are functions or measures.
struct HRep {
  Space space;
  Role role;
  std::vector<HalfSpace> rows;
};

// Finite vertex set, sorted ascending in the vectors' canonical order.
struct VRep {
  Space space;
  Role role;
  std::vector<LatticeVector> vertices;
};

// Facet description of the unit ball of the given norm in dimension k.
// var and zero need exponentially many facets, so those two enforce the cap
// at construction.
HRep ball_hrep(NormId id, int k, int cap = kDefaultCap);

// All vertices, by scanning basic solutions: every k-subset of facets with
// an invertible coefficient matrix contributes its intersection point if
// feasible. Rejects inputs that are unbounded, empty-dimensioned, or do not
// contain 0 in the interior.
VRep enumerate_vertices(const HRep& h, int cap = kDefaultCap);

// Closed-form extreme point sets for the four unit balls.
VRep predicted_extremes(NormId id, int k);

enum class Position { interior, boundary, outside };

Position membership(const HRep& h, const LatticeVector& v);

// max of direction . v over the body, computed over its vertex set. The
// direction pairs against the body's points, so its role is the opposite of
// the body's.
Rational support_value(const HRep& h, const LatticeVector& direction, int cap = kDefaultCap);

} // namespace oack

#endif
