#include "oack/linalg.hpp"

#include <stdexcept>
#include <utility>

namespace oack {

namespace {

// Gauss-Jordan elimination. Returns the pivot column per pivot row; the
// matrix is left in reduced row echelon form. Exact arithmetic, so the pivot
// choice is simply the first nonzero entry.
std::vector<int> reduce(std::vector<std::vector<Rational>>& rows, int width) {
  std::vector<int> pivot_cols;
  std::size_t r = 0;
  for (int c = 0; c < width && r < rows.size(); ++c) {
    std::size_t p = r;
    while (p < rows.size() && rows[p][static_cast<std::size_t>(c)] == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[r], rows[p]);
    Rational piv = rows[r][static_cast<std::size_t>(c)];
    for (auto& v : rows[r]) v /= piv;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r) continue;
      Rational f = rows[i][static_cast<std::size_t>(c)];
      if (f == 0) continue;
      for (std::size_t j = 0; j < rows[i].size(); ++j) {
        rows[i][j] -= f * rows[r][j];
      }
    }
    pivot_cols.push_back(c);
    ++r;
  }
  return pivot_cols;
}

} // namespace

Mat::Mat(int n, std::vector<Rational> entries) : n_(n), a_(std::move(entries)) {
  if (n_ <= 0 || a_.size() != static_cast<std::size_t>(n_) * static_cast<std::size_t>(n_)) {
    throw std::invalid_argument("matrix entry count does not match size");
  }
}

Mat Mat::identity(int n) {
  Mat m(n, std::vector<Rational>(static_cast<std::size_t>(n) * static_cast<std::size_t>(n)));
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

Mat Mat::from_rows(const std::vector<std::vector<Rational>>& rows) {
  int n = static_cast<int>(rows.size());
  std::vector<Rational> entries;
  entries.reserve(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
  for (const auto& row : rows) {
    if (row.size() != static_cast<std::size_t>(n)) {
      throw std::invalid_argument("matrix rows must be square");
    }
    entries.insert(entries.end(), row.begin(), row.end());
  }
  return Mat(n, std::move(entries));
}

std::vector<Rational> Mat::row(int i) const {
  std::vector<Rational> out(static_cast<std::size_t>(n_));
  for (int j = 0; j < n_; ++j) out[static_cast<std::size_t>(j)] = at(i, j);
  return out;
}

Mat Mat::mul(const Mat& other) const {
  if (n_ != other.n_) throw std::invalid_argument("matrix size mismatch");
  Mat out(n_, std::vector<Rational>(a_.size()));
  for (int i = 0; i < n_; ++i) {
    for (int j = 0; j < n_; ++j) {
      Rational s(0);
      for (int l = 0; l < n_; ++l) s += at(i, l) * other.at(l, j);
      out.at(i, j) = s;
    }
  }
  return out;
}

Mat Mat::transpose() const {
  Mat out(n_, std::vector<Rational>(a_.size()));
  for (int i = 0; i < n_; ++i) {
    for (int j = 0; j < n_; ++j) out.at(j, i) = at(i, j);
  }
  return out;
}

LatticeVector Mat::apply(const LatticeVector& v) const {
  if (v.dim() != n_) throw std::invalid_argument("matrix/vector size mismatch");
  std::vector<Rational> out(static_cast<std::size_t>(n_));
  for (int i = 0; i < n_; ++i) {
    Rational s(0);
    for (int j = 0; j < n_; ++j) s += at(i, j) * v[j];
    out[static_cast<std::size_t>(i)] = s;
  }
  return LatticeVector(v.space(), v.role(), std::move(out));
}

std::vector<Rational> Mat::apply_raw(const std::vector<Rational>& v) const {
  if (v.size() != static_cast<std::size_t>(n_)) {
    throw std::invalid_argument("matrix/vector size mismatch");
  }
  std::vector<Rational> out(static_cast<std::size_t>(n_));
  for (int i = 0; i < n_; ++i) {
    Rational s(0);
    for (int j = 0; j < n_; ++j) s += at(i, j) * v[static_cast<std::size_t>(j)];
    out[static_cast<std::size_t>(i)] = s;
  }
  return out;
}

bool Mat::operator==(const Mat& other) const {
  return n_ == other.n_ && a_ == other.a_;
}

bool Mat::operator<(const Mat& other) const {
  if (n_ != other.n_) return n_ < other.n_;
  for (std::size_t i = 0; i < a_.size(); ++i) {
    if (a_[i] != other.a_[i]) return a_[i] < other.a_[i];
  }
  return false;
}

std::optional<std::vector<Rational>> solve_square(std::vector<std::vector<Rational>> a,
                                                  std::vector<Rational> b) {
  std::size_t n = a.size();
  if (b.size() != n) throw std::invalid_argument("solve_square: size mismatch");
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i].size() != n) throw std::invalid_argument("solve_square: not square");
    a[i].push_back(b[i]);
  }
  auto pivots = reduce(a, static_cast<int>(n));
  if (pivots.size() != n) return std::nullopt;
  std::vector<Rational> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = a[i][n];
  return x;
}

std::optional<Mat> inverse(const Mat& m) {
  int n = m.n();
  std::vector<std::vector<Rational>> rows;
  rows.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    auto row = m.row(i);
    row.resize(static_cast<std::size_t>(2 * n));
    row[static_cast<std::size_t>(n + i)] = 1;
    rows.push_back(std::move(row));
  }
  auto pivots = reduce(rows, n);
  if (pivots.size() != static_cast<std::size_t>(n)) return std::nullopt;
  Mat out(n, std::vector<Rational>(static_cast<std::size_t>(n) * static_cast<std::size_t>(n)));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      out.at(i, j) = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(n + j)];
    }
  }
  return out;
}

int rank_of(std::vector<std::vector<Rational>> rows, int width) {
  return static_cast<int>(reduce(rows, width).size());
}

std::optional<std::vector<Rational>> nullspace_direction(
    std::vector<std::vector<Rational>> rows, int width) {
  auto pivots = reduce(rows, width);
  if (static_cast<int>(pivots.size()) != width - 1) return std::nullopt;
  std::vector<bool> is_pivot(static_cast<std::size_t>(width), false);
  for (int c : pivots) is_pivot[static_cast<std::size_t>(c)] = true;
  int free_col = 0;
  while (is_pivot[static_cast<std::size_t>(free_col)]) ++free_col;
  std::vector<Rational> dir(static_cast<std::size_t>(width));
  dir[static_cast<std::size_t>(free_col)] = 1;
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    dir[static_cast<std::size_t>(pivots[r])] = -rows[r][static_cast<std::size_t>(free_col)];
  }
  return dir;
}

} // namespace oack
