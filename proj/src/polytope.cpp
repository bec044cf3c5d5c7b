#include "oack/polytope.hpp"

#include "oack/linalg.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace oack {

namespace {

Rational raw_dot(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  Rational s(0);
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

long long subset_count(int m, int k) {
  // C(m, k) saturated against the search guard.
  if (k < 0 || k > m) return 0;
  long long c = 1;
  for (int i = 1; i <= k; ++i) {
    c = c * (m - k + i) / i;
    if (c > 4 * kMaxBasisSubsets) return 4 * kMaxBasisSubsets;
  }
  return c;
}

// Visits every size-subsets of {0..m-1} in lexicographic order.
template <typename F>
void for_each_subset(int m, int size, F&& f) {
  if (size == 0) {
    std::vector<int> empty;
    f(empty);
    return;
  }
  if (size > m) return;
  std::vector<int> idx(static_cast<std::size_t>(size));
  for (int i = 0; i < size; ++i) idx[static_cast<std::size_t>(i)] = i;
  while (true) {
    f(idx);
    int i = size - 1;
    while (i >= 0 && idx[static_cast<std::size_t>(i)] == m - size + i) --i;
    if (i < 0) break;
    ++idx[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < size; ++j) {
      idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
    }
  }
}

bool satisfies_all(const HRep& h, const std::vector<Rational>& x) {
  for (const auto& row : h.rows) {
    if (raw_dot(row.normal, x) > row.rhs) return false;
  }
  return true;
}

// The recession cone {dir : normal . dir <= 0 for all rows} is nonzero iff
// some direction spanned by a rank-(k-1) subset of rows survives the sign
// test, given that the rows span. Exact, but exponential in the facet count.
bool has_recession_direction(const HRep& h) {
  int k = h.space.k;
  long long scans = subset_count(static_cast<int>(h.rows.size()), k - 1);
  if (scans > kMaxBasisSubsets) {
    throw CapacityError("boundedness scan too large for this facet count");
  }
  bool found = false;
  for_each_subset(static_cast<int>(h.rows.size()), k - 1, [&](const std::vector<int>& idx) {
    if (found) return;
    std::vector<std::vector<Rational>> rows;
    rows.reserve(idx.size());
    for (int i : idx) rows.push_back(h.rows[static_cast<std::size_t>(i)].normal);
    auto dir = nullspace_direction(std::move(rows), k);
    if (!dir) return;
    for (int flip = 0; flip < 2 && !found; ++flip) {
      bool inward = true;
      for (const auto& row : h.rows) {
        if (raw_dot(row.normal, *dir) > 0) {
          inward = false;
          break;
        }
      }
      if (inward) found = true;
      for (auto& c : *dir) c = -c;
    }
  });
  return found;
}

void validate_body(const HRep& h) {
  int k = h.space.k;
  if (k < 1) throw std::invalid_argument("body dimension must be at least 1");
  for (const auto& row : h.rows) {
    if (row.normal.size() != static_cast<std::size_t>(k)) {
      throw std::invalid_argument("facet normal has wrong dimension");
    }
    if (row.rhs <= 0) {
      throw std::invalid_argument("body must contain 0 in its interior");
    }
  }
  std::vector<std::vector<Rational>> normals;
  normals.reserve(h.rows.size());
  for (const auto& row : h.rows) normals.push_back(row.normal);
  if (rank_of(std::move(normals), k) != k) {
    throw std::invalid_argument("degenerate body: facet normals do not span");
  }

  // A row set closed under negation pins the recession cone to the kernel of
  // the normals, which the rank check has already ruled out. Likewise a full
  // coordinate box among the rows bounds everything. Only bodies with
  // neither structure need the recession scan.
  std::set<std::vector<Rational>> normal_set;
  for (const auto& row : h.rows) normal_set.insert(row.normal);
  bool symmetric = true;
  for (const auto& row : h.rows) {
    std::vector<Rational> negated(row.normal.size());
    for (std::size_t i = 0; i < negated.size(); ++i) negated[i] = -row.normal[i];
    if (normal_set.find(negated) == normal_set.end()) {
      symmetric = false;
      break;
    }
  }
  if (symmetric) return;

  bool boxed = true;
  for (int i = 0; i < k && boxed; ++i) {
    for (int sign = 0; sign < 2 && boxed; ++sign) {
      std::vector<Rational> axis(static_cast<std::size_t>(k));
      axis[static_cast<std::size_t>(i)] = sign == 0 ? 1 : -1;
      if (normal_set.find(axis) == normal_set.end()) boxed = false;
    }
  }
  if (boxed) return;

  if (has_recession_direction(h)) {
    throw std::invalid_argument("unbounded body");
  }
}

} // namespace

HRep ball_hrep(NormId id, int k, int cap) {
  if (k < 1) throw std::invalid_argument("ball dimension must be at least 1");
  HRep h;
  h.space = Space{k};
  auto axis = [&](int i, int sign) {
    std::vector<Rational> n(static_cast<std::size_t>(k));
    n[static_cast<std::size_t>(i)] = sign;
    return n;
  };
  switch (id) {
    case NormId::sup:
      h.role = Role::function;
      for (int i = 0; i < k; ++i) {
        h.rows.push_back({axis(i, 1), Rational(1)});
        h.rows.push_back({axis(i, -1), Rational(1)});
      }
      break;
    case NormId::d:
      h.role = Role::function;
      for (int i = 0; i < k; ++i) {
        h.rows.push_back({axis(i, 1), Rational(1)});
        h.rows.push_back({axis(i, -1), Rational(1)});
      }
      for (int i = 0; i < k; ++i) {
        for (int j = 0; j < k; ++j) {
          if (i == j) continue;
          std::vector<Rational> n(static_cast<std::size_t>(k));
          n[static_cast<std::size_t>(i)] = 1;
          n[static_cast<std::size_t>(j)] = -1;
          h.rows.push_back({std::move(n), Rational(1)});
        }
      }
      break;
    case NormId::var: {
      if (k > cap) throw CapacityError("var ball needs 2^k facets; k exceeds cap");
      h.role = Role::measure;
      for (long long mask = 0; mask < (1LL << k); ++mask) {
        std::vector<Rational> n(static_cast<std::size_t>(k));
        for (int i = 0; i < k; ++i) {
          n[static_cast<std::size_t>(i)] = (mask >> i) & 1 ? -1 : 1;
        }
        h.rows.push_back({std::move(n), Rational(1)});
      }
      break;
    }
    case NormId::zero: {
      if (k > cap) throw CapacityError("zero ball needs 2(2^k - 1) facets; k exceeds cap");
      h.role = Role::measure;
      for (long long mask = 1; mask < (1LL << k); ++mask) {
        for (int sign = 0; sign < 2; ++sign) {
          std::vector<Rational> n(static_cast<std::size_t>(k));
          for (int i = 0; i < k; ++i) {
            if ((mask >> i) & 1) n[static_cast<std::size_t>(i)] = sign == 0 ? 1 : -1;
          }
          h.rows.push_back({std::move(n), Rational(1)});
        }
      }
      break;
    }
  }
  return h;
}

VRep enumerate_vertices(const HRep& h, int cap) {
  int k = h.space.k;
  if (k > cap) throw CapacityError("vertex enumeration dimension exceeds cap");
  validate_body(h);
  int m = static_cast<int>(h.rows.size());
  if (subset_count(m, k) > kMaxBasisSubsets) {
    throw CapacityError("facet subset count exceeds the basic-solution guard");
  }
  std::set<LatticeVector> found;
  for_each_subset(m, k, [&](const std::vector<int>& idx) {
    std::vector<std::vector<Rational>> a;
    std::vector<Rational> b;
    a.reserve(idx.size());
    b.reserve(idx.size());
    for (int i : idx) {
      a.push_back(h.rows[static_cast<std::size_t>(i)].normal);
      b.push_back(h.rows[static_cast<std::size_t>(i)].rhs);
    }
    auto x = solve_square(std::move(a), std::move(b));
    if (!x) return;
    if (!satisfies_all(h, *x)) return;
    found.insert(LatticeVector(h.space, h.role, std::move(*x)));
  });
  VRep out;
  out.space = h.space;
  out.role = h.role;
  out.vertices.assign(found.begin(), found.end());
  return out;
}

VRep predicted_extremes(NormId id, int k) {
  if (k < 1) throw std::invalid_argument("dimension must be at least 1");
  Space space{k};
  VRep out;
  out.space = space;
  std::vector<LatticeVector> vs;
  switch (id) {
    case NormId::sup: {
      if (k > 30) throw CapacityError("sup extreme set needs 2^k points; k too large");
      out.role = Role::function;
      for (long long mask = 0; mask < (1LL << k); ++mask) {
        std::vector<Rational> c(static_cast<std::size_t>(k));
        for (int i = 0; i < k; ++i) {
          c[static_cast<std::size_t>(i)] = (mask >> i) & 1 ? 1 : -1;
        }
        vs.emplace_back(space, out.role, std::move(c));
      }
      break;
    }
    case NormId::d: {
      if (k > 30) throw CapacityError("d extreme set needs 2(2^k - 1) points; k too large");
      out.role = Role::function;
      for (long long mask = 1; mask < (1LL << k); ++mask) {
        for (int sign = 0; sign < 2; ++sign) {
          std::vector<Rational> c(static_cast<std::size_t>(k));
          for (int i = 0; i < k; ++i) {
            if ((mask >> i) & 1) c[static_cast<std::size_t>(i)] = sign == 0 ? 1 : -1;
          }
          vs.emplace_back(space, out.role, std::move(c));
        }
      }
      break;
    }
    case NormId::var:
      out.role = Role::measure;
      for (int t = 0; t < k; ++t) {
        vs.push_back(LatticeVector::unit(space, out.role, t));
        vs.push_back(-LatticeVector::unit(space, out.role, t));
      }
      break;
    case NormId::zero:
      out.role = Role::measure;
      for (int t = 0; t < k; ++t) {
        vs.push_back(LatticeVector::unit(space, out.role, t));
        vs.push_back(-LatticeVector::unit(space, out.role, t));
      }
      for (int s = 0; s < k; ++s) {
        for (int t = 0; t < k; ++t) {
          if (s == t) continue;
          vs.push_back(LatticeVector::unit(space, out.role, s) -
                       LatticeVector::unit(space, out.role, t));
        }
      }
      break;
  }
  std::sort(vs.begin(), vs.end());
  out.vertices = std::move(vs);
  return out;
}

Position membership(const HRep& h, const LatticeVector& v) {
  if (!(v.space() == h.space)) throw std::invalid_argument("space mismatch");
  if (v.role() != h.role) throw std::invalid_argument("membership: wrong role");
  bool tight = false;
  for (const auto& row : h.rows) {
    Rational value = raw_dot(row.normal, v.coords());
    if (value > row.rhs) return Position::outside;
    if (value == row.rhs) tight = true;
  }
  return tight ? Position::boundary : Position::interior;
}

Rational support_value(const HRep& h, const LatticeVector& direction, int cap) {
  if (!(direction.space() == h.space)) throw std::invalid_argument("space mismatch");
  if (direction.role() == h.role) {
    throw std::invalid_argument("support_value: direction must pair against the body");
  }
  VRep body = enumerate_vertices(h, cap);
  if (body.vertices.empty()) throw std::invalid_argument("empty body");
  Rational best = raw_dot(direction.coords(), body.vertices.front().coords());
  for (const auto& v : body.vertices) {
    Rational value = raw_dot(direction.coords(), v.coords());
    if (value > best) best = value;
  }
  return best;
}

} // namespace oack
