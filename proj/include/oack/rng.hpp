#ifndef OACK_RNG_HPP
#define OACK_RNG_HPP

#include "oack/lattice.hpp"
#include "oack/rational.hpp"

#include <cstdint>
#include <random>

namespace oack {

// Deterministic generator for test corpora. Values are derived from the
// engine output directly (no std distributions, whose mapping varies across
// standard libraries), so a seed pins the corpus byte for byte.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t next() { return eng_(); }

  // Uniform-ish integer in [0, m). Modulo bias is irrelevant here.
  int below(int m);
  // Integer in [lo, hi], inclusive.
  int range(int lo, int hi);
  bool coin() { return (next() & 1u) != 0; }

  // Rational with numerator in [-max_num, max_num] and denominator in
  // [1, max_den], reduced. Zero comes up deliberately often.
  Rational rational(int max_num = 9, int max_den = 6);
  Rational nonneg_rational(int max_num = 9, int max_den = 6);
  Rational positive_rational(int max_num = 9, int max_den = 6);

  LatticeVector vector(Space space, Role role, int max_num = 9, int max_den = 6);
  LatticeVector nonneg_vector(Space space, Role role, int max_num = 9, int max_den = 6);

private:
  std::mt19937_64 eng_;
};

} // namespace oack

#endif
