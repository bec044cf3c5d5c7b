#ifndef OACK_LATTICE_HPP
#define OACK_LATTICE_HPP

#include "oack/rational.hpp"

#include <compare>
#include <utility>
#include <vector>

namespace oack {

// A finite discrete base space with points {0, ..., k-1}. Functions on it and
// measures over it are both coordinate vectors; only their pairing differs.
struct Space {
  int k = 0;
  bool operator==(const Space&) const = default;
};

enum class Role { function, measure };

// A coordinate vector in the vector lattice over a Space, tagged with the
// role it plays. The tag is semantic: operations that only make sense for
// one role (total mass, norm pairings) enforce it.
class LatticeVector {
public:
  LatticeVector(Space space, Role role, std::vector<Rational> coords);

  static LatticeVector zero(Space space, Role role);
  // Indicator of a single point: e_t as a function, the point mass at t as
  // a measure.
  static LatticeVector unit(Space space, Role role, int index);
  static LatticeVector constant(Space space, Role role, const Rational& value);

  int dim() const { return space_.k; }
  Space space() const { return space_; }
  Role role() const { return role_; }
  const Rational& operator[](int i) const { return coords_[static_cast<std::size_t>(i)]; }
  const std::vector<Rational>& coords() const { return coords_; }

  // Explicit relabeling between the two roles (same coordinates).
  LatticeVector with_role(Role role) const;

  LatticeVector operator+(const LatticeVector& other) const;
  LatticeVector operator-(const LatticeVector& other) const;
  LatticeVector operator-() const;
  LatticeVector scaled(const Rational& c) const;

  bool operator==(const LatticeVector& other) const;
  // Total order: dimension, then role, then lexicographic on coordinates.
  // Canonical output orderings everywhere are ascending in this order.
  bool operator<(const LatticeVector& other) const;

private:
  Space space_;
  Role role_;
  std::vector<Rational> coords_;
};

// v = positive part - negative part, with the two parts disjoint. This is
// the only decomposition v = a - b with a, b >= 0 and a ^ b = 0.
std::pair<LatticeVector, LatticeVector> jordan_decompose(const LatticeVector& v);

LatticeVector meet(const LatticeVector& a, const LatticeVector& b);
LatticeVector join(const LatticeVector& a, const LatticeVector& b);
LatticeVector abs(const LatticeVector& v);
bool is_disjoint(const LatticeVector& a, const LatticeVector& b);
bool is_nonnegative(const LatticeVector& v);

// Sum of all coordinates of a measure.
Rational total_mass(const LatticeVector& mu);

// Integral of a function against a measure.
Rational pairing(const LatticeVector& mu, const LatticeVector& x);

void require_same_space(const LatticeVector& a, const LatticeVector& b);

} // namespace oack

#endif
