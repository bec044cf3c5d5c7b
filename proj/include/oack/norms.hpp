#ifndef OACK_NORMS_HPP
#define OACK_NORMS_HPP

#include "oack/common.hpp"
#include "oack/lattice.hpp"
#include "oack/rational.hpp"

#include <string_view>

namespace oack {

// The four norms in play. The first two live on functions, the last two on
// measures; d and zero are dual to each other, as are sup and var.
enum class NormId { sup, d, var, zero };

NormId parse_norm_id(std::string_view name);
const char* norm_name(NormId id);

Rational sup_norm(const LatticeVector& x);

// max over pairs of x_i - x_j. Internally cross-checked against twice the
// best sup-distance to a constant, minimized over midpoint candidates.
Rational diameter(const LatticeVector& x);

// Computed both as |positive part| + |negative part| in sup norm and as
// max(sup_norm, diameter); the two must agree.
Rational d_norm(const LatticeVector& x);

Rational var_norm(const LatticeVector& mu);

// Computed both as max of the positive/negative part masses and as
// (var_norm + |total mass|) / 2; the two must agree.
Rational zero_norm(const LatticeVector& mu);

// Dispatch by id, enforcing the role the norm applies to.
Rational norm_value(NormId id, const LatticeVector& v);

// Norm of mu as a functional on (functions, primal norm), computed by
// scanning the vertices of the primal unit ball. primal must be sup or d.
// Independent of the measure-norm formulas by construction.
Rational dual_norm_oracle(const LatticeVector& mu, NormId primal, int cap = kDefaultCap);

} // namespace oack

#endif
