#include "oack/lattice.hpp"

#include <stdexcept>

namespace oack {

namespace {

void require_compatible(const LatticeVector& a, const LatticeVector& b) {
  require_same_space(a, b);
  if (a.role() != b.role()) {
    throw std::invalid_argument("role mismatch");
  }
}

void require_role(const LatticeVector& v, Role role, const char* what) {
  if (v.role() != role) {
    throw std::invalid_argument(std::string(what) + ": wrong role");
  }
}

} // namespace

void require_same_space(const LatticeVector& a, const LatticeVector& b) {
  if (!(a.space() == b.space())) {
    throw std::invalid_argument("space mismatch");
  }
}

LatticeVector::LatticeVector(Space space, Role role, std::vector<Rational> coords)
    : space_(space), role_(role), coords_(std::move(coords)) {
  if (space_.k < 0 || coords_.size() != static_cast<std::size_t>(space_.k)) {
    throw std::invalid_argument("coordinate count does not match space dimension");
  }
}

LatticeVector LatticeVector::zero(Space space, Role role) {
  return LatticeVector(space, role, std::vector<Rational>(static_cast<std::size_t>(space.k)));
}

LatticeVector LatticeVector::unit(Space space, Role role, int index) {
  if (index < 0 || index >= space.k) {
    throw std::invalid_argument("unit index out of range");
  }
  std::vector<Rational> c(static_cast<std::size_t>(space.k));
  c[static_cast<std::size_t>(index)] = 1;
  return LatticeVector(space, role, std::move(c));
}

LatticeVector LatticeVector::constant(Space space, Role role, const Rational& value) {
  return LatticeVector(space, role,
                       std::vector<Rational>(static_cast<std::size_t>(space.k), value));
}

LatticeVector LatticeVector::with_role(Role role) const {
  return LatticeVector(space_, role, coords_);
}

LatticeVector LatticeVector::operator+(const LatticeVector& other) const {
  require_compatible(*this, other);
  std::vector<Rational> c(coords_.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = coords_[i] + other.coords_[i];
  return LatticeVector(space_, role_, std::move(c));
}

LatticeVector LatticeVector::operator-(const LatticeVector& other) const {
  require_compatible(*this, other);
  std::vector<Rational> c(coords_.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = coords_[i] - other.coords_[i];
  return LatticeVector(space_, role_, std::move(c));
}

LatticeVector LatticeVector::operator-() const {
  std::vector<Rational> c(coords_.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = -coords_[i];
  return LatticeVector(space_, role_, std::move(c));
}

LatticeVector LatticeVector::scaled(const Rational& c) const {
  std::vector<Rational> out(coords_.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = coords_[i] * c;
  return LatticeVector(space_, role_, std::move(out));
}

bool LatticeVector::operator==(const LatticeVector& other) const {
  return space_ == other.space_ && role_ == other.role_ && coords_ == other.coords_;
}

bool LatticeVector::operator<(const LatticeVector& other) const {
  if (space_.k != other.space_.k) return space_.k < other.space_.k;
  if (role_ != other.role_) return role_ < other.role_;
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (coords_[i] != other.coords_[i]) return coords_[i] < other.coords_[i];
  }
  return false;
}

std::pair<LatticeVector, LatticeVector> jordan_decompose(const LatticeVector& v) {
  std::vector<Rational> pos(static_cast<std::size_t>(v.dim()));
  std::vector<Rational> neg(static_cast<std::size_t>(v.dim()));
  for (int i = 0; i < v.dim(); ++i) {
    if (v[i] > 0) {
      pos[static_cast<std::size_t>(i)] = v[i];
    } else {
      neg[static_cast<std::size_t>(i)] = -v[i];
    }
  }
  return {LatticeVector(v.space(), v.role(), std::move(pos)),
          LatticeVector(v.space(), v.role(), std::move(neg))};
}

LatticeVector meet(const LatticeVector& a, const LatticeVector& b) {
  require_compatible(a, b);
  std::vector<Rational> c(static_cast<std::size_t>(a.dim()));
  for (int i = 0; i < a.dim(); ++i) {
    c[static_cast<std::size_t>(i)] = a[i] < b[i] ? a[i] : b[i];
  }
  return LatticeVector(a.space(), a.role(), std::move(c));
}

LatticeVector join(const LatticeVector& a, const LatticeVector& b) {
  require_compatible(a, b);
  std::vector<Rational> c(static_cast<std::size_t>(a.dim()));
  for (int i = 0; i < a.dim(); ++i) {
    c[static_cast<std::size_t>(i)] = a[i] < b[i] ? b[i] : a[i];
  }
  return LatticeVector(a.space(), a.role(), std::move(c));
}

LatticeVector abs(const LatticeVector& v) {
  std::vector<Rational> c(static_cast<std::size_t>(v.dim()));
  for (int i = 0; i < v.dim(); ++i) {
    c[static_cast<std::size_t>(i)] = abs_rational(v[i]);
  }
  return LatticeVector(v.space(), v.role(), std::move(c));
}

bool is_disjoint(const LatticeVector& a, const LatticeVector& b) {
  require_compatible(a, b);
  for (int i = 0; i < a.dim(); ++i) {
    if (a[i] != 0 && b[i] != 0) return false;
  }
  return true;
}

bool is_nonnegative(const LatticeVector& v) {
  for (int i = 0; i < v.dim(); ++i) {
    if (v[i] < 0) return false;
  }
  return true;
}

Rational total_mass(const LatticeVector& mu) {
  require_role(mu, Role::measure, "total_mass");
  Rational sum(0);
  for (int i = 0; i < mu.dim(); ++i) sum += mu[i];
  return sum;
}

Rational pairing(const LatticeVector& mu, const LatticeVector& x) {
  require_same_space(mu, x);
  require_role(mu, Role::measure, "pairing");
  require_role(x, Role::function, "pairing");
  Rational sum(0);
  for (int i = 0; i < mu.dim(); ++i) sum += mu[i] * x[i];
  return sum;
}

} // namespace oack
