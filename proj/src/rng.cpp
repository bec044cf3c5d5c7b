#include "oack/rng.hpp"

#include <stdexcept>

namespace oack {

int Rng::below(int m) {
  if (m <= 0) throw std::invalid_argument("below: empty range");
  return static_cast<int>(next() % static_cast<std::uint64_t>(m));
}

int Rng::range(int lo, int hi) {
  if (hi < lo) throw std::invalid_argument("range: empty range");
  return lo + below(hi - lo + 1);
}

Rational Rng::rational(int max_num, int max_den) {
  // One case in five is an exact zero so that degenerate coordinates and
  // masses show up routinely in random corpora.
  if (below(5) == 0) return Rational(0);
  int num = range(-max_num, max_num);
  int den = range(1, max_den);
  return Rational(num) / Rational(den);
}

Rational Rng::nonneg_rational(int max_num, int max_den) {
  if (below(5) == 0) return Rational(0);
  int num = range(0, max_num);
  int den = range(1, max_den);
  return Rational(num) / Rational(den);
}

Rational Rng::positive_rational(int max_num, int max_den) {
  int num = range(1, max_num);
  int den = range(1, max_den);
  return Rational(num) / Rational(den);
}

LatticeVector Rng::vector(Space space, Role role, int max_num, int max_den) {
  std::vector<Rational> c(static_cast<std::size_t>(space.k));
  for (auto& v : c) v = rational(max_num, max_den);
  return LatticeVector(space, role, std::move(c));
}

LatticeVector Rng::nonneg_vector(Space space, Role role, int max_num, int max_den) {
  std::vector<Rational> c(static_cast<std::size_t>(space.k));
  for (auto& v : c) v = nonneg_rational(max_num, max_den);
  return LatticeVector(space, role, std::move(c));
}

} // namespace oack
