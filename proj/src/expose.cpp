#include "oack/expose.hpp"

#include "oack/norms.hpp"
#include "oack/polytope.hpp"

#include <stdexcept>

namespace oack {

namespace {

void require_unit(const LatticeVector& x, const char* what) {
  if (x.role() != Role::function) {
    throw std::invalid_argument(std::string(what) + ": expected a function");
  }
  if (d_norm(x) != 1) {
    throw std::invalid_argument(std::string(what) + ": vector must have d norm 1");
  }
}

bool same_smoothness(const Smoothness& a, const Smoothness& b) {
  if (a.smooth != b.smooth) return false;
  if (!a.smooth) return true;
  return *a.derivative == *b.derivative;
}

} // namespace

NormingFace norming_face(const LatticeVector& x) {
  require_unit(x, "norming_face");
  NormingFace face{x, {}};
  for (const auto& mu : predicted_extremes(NormId::zero, x.dim()).vertices) {
    if (pairing(mu, x) == 1) face.extremes.push_back(mu);
  }
  if (face.extremes.empty()) {
    throw std::logic_error("norming_face: a unit vector must be normed somewhere");
  }
  return face;
}

Smoothness gateaux_closed_form(const LatticeVector& x) {
  require_unit(x, "gateaux_closed_form");
  Space space = x.space();
  int k = x.dim();

  // Height case: some coordinate sits at +1 or -1 (both cannot happen, the
  // gap would break the norm). Smooth iff that coordinate is unique and the
  // diameter stays below 1.
  int high = -1;
  int high_count = 0;
  int high_sign = 0;
  for (int t = 0; t < k; ++t) {
    if (x[t] == 1 || x[t] == -1) {
      high = t;
      high_sign = x[t] == 1 ? 1 : -1;
      ++high_count;
    }
  }
  if (high_count > 0) {
    if (high_count == 1 && diameter(x) < 1) {
      LatticeVector d = LatticeVector::unit(space, Role::measure, high);
      return Smoothness{true, high_sign == 1 ? d : -d};
    }
    return Smoothness{false, std::nullopt};
  }

  // Gap case: sup norm below 1, so the norm is the diameter and some pair
  // realizes gap 1. Smooth iff exactly one ordered pair does.
  int gap_t = -1;
  int gap_s = -1;
  int gap_count = 0;
  for (int t = 0; t < k; ++t) {
    for (int s = 0; s < k; ++s) {
      if (t != s && x[t] - x[s] == 1) {
        gap_t = t;
        gap_s = s;
        ++gap_count;
      }
    }
  }
  if (gap_count == 1) {
    return Smoothness{true, LatticeVector::unit(space, Role::measure, gap_t) -
                                LatticeVector::unit(space, Role::measure, gap_s)};
  }
  return Smoothness{false, std::nullopt};
}

Smoothness is_gateaux(const LatticeVector& x) {
  NormingFace face = norming_face(x);
  Smoothness by_face{false, std::nullopt};
  if (face.extremes.size() == 1) {
    by_face = Smoothness{true, face.extremes.front()};
  }
  if (!same_smoothness(by_face, gateaux_closed_form(x))) {
    throw std::logic_error("is_gateaux: face route and criteria route disagree");
  }
  return by_face;
}

Smoothness is_frechet(const LatticeVector& x) {
  require_unit(x, "is_frechet");
  int k = x.dim();

  // Over a finite point set an approximating sequence of near-maximizers is
  // eventually an exact maximizer, so the sequence criterion degenerates to:
  // every exact maximizer of the relevant kind coincides with the candidate.
  // Collect all of them; differentiability means there is exactly one.
  std::vector<LatticeVector> maximizers;
  for (int t = 0; t < k; ++t) {
    if (x[t] == 1) {
      maximizers.push_back(LatticeVector::unit(x.space(), Role::measure, t));
    }
    if (x[t] == -1) {
      maximizers.push_back(-LatticeVector::unit(x.space(), Role::measure, t));
    }
  }
  for (int t = 0; t < k; ++t) {
    for (int s = 0; s < k; ++s) {
      if (t != s && x[t] - x[s] == 1) {
        maximizers.push_back(LatticeVector::unit(x.space(), Role::measure, t) -
                             LatticeVector::unit(x.space(), Role::measure, s));
      }
    }
  }
  if (maximizers.size() == 1) {
    return Smoothness{true, maximizers.front()};
  }
  return Smoothness{false, std::nullopt};
}

bool exposes(const LatticeVector& x, const LatticeVector& mu) {
  require_unit(x, "exposes");
  VRep extremes = predicted_extremes(NormId::zero, x.dim());
  bool found = false;
  for (const auto& nu : extremes.vertices) found = found || nu == mu;
  if (!found) {
    throw std::invalid_argument("exposes: mu is not an extreme point of the dual ball");
  }
  if (pairing(mu, x) != 1) return false;
  for (const auto& nu : extremes.vertices) {
    if (nu != mu && pairing(nu, x) >= 1) return false;
  }
  return true;
}

bool strongly_exposes(const LatticeVector& x, const LatticeVector& mu) {
  bool plain = exposes(x, mu);
  // Strong exposure asks that near-norming sequences converge to mu. With
  // finitely many extreme points that holds exactly when the second-best
  // pairing sits strictly below 1, leaving a positive margin.
  bool strong = false;
  if (pairing(mu, x) == 1) {
    Rational second(-2);
    for (const auto& nu : predicted_extremes(NormId::zero, x.dim()).vertices) {
      if (nu == mu) continue;
      Rational value = pairing(nu, x);
      if (value > second) second = value;
    }
    strong = second < 1;
  }
  if (strong != plain) {
    throw std::logic_error("strongly_exposes: the two notions must coincide here");
  }
  return strong;
}

LatticeVector peaking_function(Space space, int t) {
  if (t < 0 || t >= space.k) throw std::invalid_argument("peaking_function: bad index");
  std::vector<Rational> coords(static_cast<std::size_t>(space.k), Rational(1) / 2);
  coords[static_cast<std::size_t>(t)] = 1;
  LatticeVector x(space, Role::function, std::move(coords));
  if (!strongly_exposes(x, LatticeVector::unit(space, Role::measure, t))) {
    throw std::logic_error("peaking_function: witness failed to expose its target");
  }
  return x;
}

LatticeVector pair_peaking(Space space, int t, int s) {
  if (t < 0 || t >= space.k || s < 0 || s >= space.k || t == s) {
    throw std::invalid_argument("pair_peaking: bad index pair");
  }
  std::vector<Rational> coords(static_cast<std::size_t>(space.k));
  coords[static_cast<std::size_t>(t)] = Rational(1) / 2;
  coords[static_cast<std::size_t>(s)] = Rational(-1) / 2;
  LatticeVector x(space, Role::function, std::move(coords));
  LatticeVector target = LatticeVector::unit(space, Role::measure, t) -
                         LatticeVector::unit(space, Role::measure, s);
  if (!strongly_exposes(x, target)) {
    throw std::logic_error("pair_peaking: witness failed to expose its target");
  }
  return x;
}

LatticeVector exposing_witness(const LatticeVector& extreme) {
  if (extreme.role() != Role::measure) {
    throw std::invalid_argument("exposing_witness: expected a measure");
  }
  int plus = -1;
  int minus = -1;
  for (int i = 0; i < extreme.dim(); ++i) {
    if (extreme[i] == 1 && plus < 0) {
      plus = i;
    } else if (extreme[i] == -1 && minus < 0) {
      minus = i;
    } else if (extreme[i] != 0) {
      throw std::invalid_argument("exposing_witness: not an extreme of the dual ball");
    }
  }
  Space space = extreme.space();
  if (plus >= 0 && minus >= 0) return pair_peaking(space, plus, minus);
  if (plus >= 0) return peaking_function(space, plus);
  if (minus >= 0) return -peaking_function(space, minus);
  throw std::invalid_argument("exposing_witness: zero is not an extreme point");
}

} // namespace oack
