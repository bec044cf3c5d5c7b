#ifndef OACK_LINALG_HPP
#define OACK_LINALG_HPP

#include "oack/lattice.hpp"
#include "oack/rational.hpp"

#include <optional>
#include <vector>

namespace oack {

// Square matrix over the rationals, row-major.
class Mat {
public:
  Mat(int n, std::vector<Rational> entries);
  static Mat identity(int n);
  static Mat from_rows(const std::vector<std::vector<Rational>>& rows);

  int n() const { return n_; }
  const Rational& at(int i, int j) const {
    return a_[static_cast<std::size_t>(i * n_ + j)];
  }
  Rational& at(int i, int j) { return a_[static_cast<std::size_t>(i * n_ + j)]; }
  std::vector<Rational> row(int i) const;

  Mat mul(const Mat& other) const;
  Mat transpose() const;
  LatticeVector apply(const LatticeVector& v) const;
  std::vector<Rational> apply_raw(const std::vector<Rational>& v) const;

  bool operator==(const Mat& other) const;
  bool operator<(const Mat& other) const;

private:
  int n_;
  std::vector<Rational> a_;
};

// Unique solution of A x = b, or nullopt when A is singular.
std::optional<std::vector<Rational>> solve_square(std::vector<std::vector<Rational>> a,
                                                  std::vector<Rational> b);

std::optional<Mat> inverse(const Mat& m);

int rank_of(std::vector<std::vector<Rational>> rows, int width);

// For a row set of rank width-1, a nonzero direction annihilated by every
// row; nullopt when the rank is anything else.
std::optional<std::vector<Rational>> nullspace_direction(
    std::vector<std::vector<Rational>> rows, int width);

} // namespace oack

#endif
