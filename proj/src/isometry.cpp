#include "oack/isometry.hpp"

#include "oack/polytope.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace oack {

namespace {

// First linearly independent k-subset of the vertex list, in canonical
// order. The vertex set of a full-dimensional ball always contains one.
std::vector<const LatticeVector*> reference_basis(const std::vector<LatticeVector>& vs,
                                                  int k) {
  std::vector<const LatticeVector*> basis;
  std::vector<std::vector<Rational>> rows;
  for (const auto& v : vs) {
    rows.push_back(v.coords());
    if (rank_of(rows, k) == static_cast<int>(rows.size())) {
      basis.push_back(&v);
    } else {
      rows.pop_back();
    }
    if (static_cast<int>(basis.size()) == k) break;
  }
  if (static_cast<int>(basis.size()) != k) {
    throw std::invalid_argument("vertex set does not span");
  }
  return basis;
}

Mat columns_from(const std::vector<const LatticeVector*>& cols, int k) {
  Mat m(k, std::vector<Rational>(static_cast<std::size_t>(k) * static_cast<std::size_t>(k)));
  for (int j = 0; j < k; ++j) {
    for (int i = 0; i < k; ++i) {
      m.at(i, j) = (*cols[static_cast<std::size_t>(j)])[i];
    }
  }
  return m;
}

long long tuple_count(std::size_t n, int k) {
  long long c = 1;
  for (int i = 0; i < k; ++i) {
    c *= static_cast<long long>(n) - i;
    if (c <= 0 || c > 4 * kMaxBasisTuples) return 4 * kMaxBasisTuples;
  }
  return c;
}

struct UnitRow {
  int column;
  int sign;
};

// Detects rows of the form +/- e_j.
std::optional<UnitRow> as_unit_row(const Mat& m, int row) {
  std::optional<UnitRow> found;
  for (int j = 0; j < m.n(); ++j) {
    const Rational& v = m.at(row, j);
    if (v == 0) continue;
    if (found || (v != 1 && v != -1)) return std::nullopt;
    found = UnitRow{j, v == 1 ? 1 : -1};
  }
  return found;
}

} // namespace

std::vector<Mat> enumerate_isometries(NormId id, int k, int cap) {
  if (k < 1) throw std::invalid_argument("dimension must be at least 1");
  if (k > cap) throw CapacityError("isometry search dimension exceeds cap");
  VRep ball = enumerate_vertices(ball_hrep(id, k, cap), cap);
  const auto& vs = ball.vertices;
  if (tuple_count(vs.size(), k) > kMaxBasisTuples) {
    throw CapacityError("isometry search tuple count exceeds the guard");
  }
  std::set<LatticeVector> vertex_set(vs.begin(), vs.end());

  auto basis = reference_basis(vs, k);
  Mat ref = columns_from(basis, k);
  auto ref_inv = inverse(ref);
  if (!ref_inv) throw std::logic_error("reference basis must be invertible");

  std::set<Mat> result;
  std::vector<const LatticeVector*> image(static_cast<std::size_t>(k), nullptr);
  std::vector<bool> used(vs.size(), false);
  auto rec = [&](auto&& self, int slot) -> void {
    if (slot == k) {
      Mat candidate = columns_from(image, k).mul(*ref_inv);
      std::set<LatticeVector> mapped;
      for (const auto& v : vs) {
        LatticeVector tv = candidate.apply(v);
        if (vertex_set.find(tv) == vertex_set.end()) return;
        mapped.insert(std::move(tv));
      }
      if (mapped.size() == vs.size()) result.insert(std::move(candidate));
      return;
    }
    for (std::size_t i = 0; i < vs.size(); ++i) {
      if (used[i]) continue;
      used[i] = true;
      image[static_cast<std::size_t>(slot)] = &vs[i];
      self(self, slot + 1);
      used[i] = false;
    }
  };
  rec(rec, 0);
  return std::vector<Mat>(result.begin(), result.end());
}

IsometryReport classify(const Mat& map) {
  int k = map.n();
  std::vector<std::optional<UnitRow>> units;
  units.reserve(static_cast<std::size_t>(k));
  int unit_rows = 0;
  for (int t = 0; t < k; ++t) {
    units.push_back(as_unit_row(map, t));
    if (units.back()) ++unit_rows;
  }

  if (unit_rows == k) {
    int sign = units[0]->sign;
    std::vector<int> phi(static_cast<std::size_t>(k));
    std::vector<bool> hit(static_cast<std::size_t>(k), false);
    for (int t = 0; t < k; ++t) {
      if (units[static_cast<std::size_t>(t)]->sign != sign) {
        throw ClassificationError("point-evaluation rows carry mixed signs");
      }
      int s = units[static_cast<std::size_t>(t)]->column;
      if (hit[static_cast<std::size_t>(s)]) {
        throw ClassificationError("point-evaluation rows repeat a coordinate");
      }
      hit[static_cast<std::size_t>(s)] = true;
      phi[static_cast<std::size_t>(t)] = s;
    }
    return IsometryReport{map, IsoKind::canonical, sign, std::move(phi)};
  }

  if (unit_rows == 1) {
    int t = 0;
    while (!units[static_cast<std::size_t>(t)]) ++t;
    int p = units[static_cast<std::size_t>(t)]->column;
    int sign = units[static_cast<std::size_t>(t)]->sign;
    std::vector<int> phi(static_cast<std::size_t>(k), -1);
    std::vector<bool> hit(static_cast<std::size_t>(k), false);
    for (int s = 0; s < k; ++s) {
      if (s == t) continue;
      int target = -1;
      for (int j = 0; j < k; ++j) {
        const Rational& v = map.at(s, j);
        if (j == p) {
          if (v != sign) throw ClassificationError("difference row misses the base point");
        } else if (v != 0) {
          if (target >= 0 || v != -sign) {
            throw ClassificationError("difference row is not a signed pair");
          }
          target = j;
        }
      }
      if (target < 0) throw ClassificationError("difference row has no second point");
      if (hit[static_cast<std::size_t>(target)]) {
        throw ClassificationError("difference rows repeat a coordinate");
      }
      hit[static_cast<std::size_t>(target)] = true;
      phi[static_cast<std::size_t>(s)] = target;
    }
    IsometryReport report{map, IsoKind::noncanonical, sign, std::move(phi)};
    report.p = p;
    report.t = t;
    return report;
  }

  throw ClassificationError("map fits neither isometry form");
}

LatticeVector induced_measure_map(const IsometryReport& report, const LatticeVector& mu) {
  if (mu.role() != Role::measure) {
    throw std::invalid_argument("induced_measure_map: expected a measure");
  }
  int k = report.map.n();
  if (mu.dim() != k) throw std::invalid_argument("induced_measure_map: space mismatch");
  std::vector<Rational> out(static_cast<std::size_t>(k));
  Rational sign(report.sign);
  if (report.kind == IsoKind::canonical) {
    for (int s = 0; s < k; ++s) {
      out[static_cast<std::size_t>(report.phi[static_cast<std::size_t>(s)])] += sign * mu[s];
    }
  } else {
    out[static_cast<std::size_t>(report.p)] = sign * total_mass(mu);
    for (int s = 0; s < k; ++s) {
      if (s == report.t) continue;
      out[static_cast<std::size_t>(report.phi[static_cast<std::size_t>(s)])] -= sign * mu[s];
    }
  }
  return LatticeVector(mu.space(), Role::measure, std::move(out));
}

PolyIsometry::PolyIsometry(IsometryReport report, int degree)
    : report_(std::move(report)), degree_(degree) {}

LatticeVector PolyIsometry::apply_measure(const LatticeVector& mu) const {
  return induced_measure_map(report_, mu);
}

OAPoly PolyIsometry::apply(const OAPoly& p) const {
  if (p.degree != degree_) {
    throw std::invalid_argument("polynomial degree does not match the isometry");
  }
  return OAPoly(degree_, apply_measure(p.mu));
}

PolyIsometry induced_poly_isometry(const IsometryReport& report, int degree) {
  if (degree < 2 || degree % 2 != 0) {
    throw std::invalid_argument(
        "induced_poly_isometry: degree must be even (odd degrees reduce to the "
        "canonical pushforward)");
  }
  int k = report.map.n();
  Space space{k};

  // Guard grid: measures with entries in {-1, 0, 1} (axis vectors only when
  // the full grid would be large). The action must preserve the dual norm on
  // all of them.
  std::vector<LatticeVector> grid;
  if (k <= 5) {
    long long total = 1;
    for (int i = 0; i < k; ++i) total *= 3;
    for (long long code = 0; code < total; ++code) {
      long long c = code;
      std::vector<Rational> coords(static_cast<std::size_t>(k));
      for (int i = 0; i < k; ++i) {
        coords[static_cast<std::size_t>(i)] = Rational(static_cast<int>(c % 3) - 1);
        c /= 3;
      }
      grid.emplace_back(space, Role::measure, std::move(coords));
    }
  } else {
    for (int i = 0; i < k; ++i) {
      grid.push_back(LatticeVector::unit(space, Role::measure, i));
      grid.push_back(-LatticeVector::unit(space, Role::measure, i));
    }
  }
  for (const auto& mu : grid) {
    if (zero_norm(induced_measure_map(report, mu)) != zero_norm(mu)) {
      throw std::logic_error("induced action failed to preserve the dual norm");
    }
  }
  return PolyIsometry(report, degree);
}

LatticeVector regular_pushforward(const IsometryReport& report, const LatticeVector& mu) {
  if (report.kind != IsoKind::canonical) {
    throw std::invalid_argument("regular_pushforward: requires a canonical isometry");
  }
  return induced_measure_map(report, mu);
}

} // namespace oack
