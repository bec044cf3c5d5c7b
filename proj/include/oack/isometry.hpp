#ifndef OACK_ISOMETRY_HPP
#define OACK_ISOMETRY_HPP

#include "oack/common.hpp"
#include "oack/lattice.hpp"
#include "oack/linalg.hpp"
#include "oack/norms.hpp"
#include "oack/oapoly.hpp"

#include <vector>

namespace oack {

// Thrown when a map claimed to be a d-norm isometry fails to match either
// of the two structural forms every such isometry must take.
class ClassificationError : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

enum class IsoKind { canonical, noncanonical };

// Structure of a surjective linear isometry T of (functions, d norm).
// canonical:     (Tx)(s) = sign * x(phi[s])          for all s
// noncanonical:  (Tx)(t) = sign * x(p)  and
//                (Tx)(s) = sign * (x(p) - x(phi[s])) for s != t, phi[t] = -1
struct IsometryReport {
  Mat map;
  IsoKind kind;
  int sign;
  std::vector<int> phi;
  int p = -1;
  int t = -1;
};

// Every linear map permuting the vertex set of the unit ball, found by
// solving for the image of a fixed reference basis of vertices and keeping
// the candidates that map the vertex set onto itself. For a polytopal ball
// this is exactly the linear isometry group of the norm.
std::vector<Mat> enumerate_isometries(NormId id, int k, int cap = kDefaultCap);

// Splits a d-norm isometry into its structural form, keyed by which rows of
// the matrix are signed point evaluations. Throws ClassificationError when
// the input fits neither form (i.e. it was not a d-norm isometry).
IsometryReport classify(const Mat& map);

// The action on measures transposed from an isometry of functions.
LatticeVector induced_measure_map(const IsometryReport& report, const LatticeVector& mu);

// Isometry of the even-degree polynomial space carried by a d-norm isometry
// of the underlying function space.
class PolyIsometry {
public:
  PolyIsometry(IsometryReport report, int degree);

  LatticeVector apply_measure(const LatticeVector& mu) const;
  OAPoly apply(const OAPoly& p) const;
  const IsometryReport& report() const { return report_; }
  int degree() const { return degree_; }

private:
  IsometryReport report_;
  int degree_;
};

// Requires even degree (the sup and zero norms pair only then). The returned
// action is verified to preserve the polynomial sup norm on a deterministic
// grid of measures before it is handed back.
PolyIsometry induced_poly_isometry(const IsometryReport& report, int degree);

// The trivial odd-degree path: a canonical isometry pushes the measure
// forward along its permutation, with its sign. Preserves the regular norm
// in every degree.
LatticeVector regular_pushforward(const IsometryReport& report, const LatticeVector& mu);

} // namespace oack

#endif
