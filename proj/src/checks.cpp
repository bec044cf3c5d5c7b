#include "oack/checks.hpp"

#include "oack/expose.hpp"
#include "oack/genpoly.hpp"
#include "oack/isometry.hpp"
#include "oack/lattice.hpp"
#include "oack/norms.hpp"
#include "oack/oapoly.hpp"
#include "oack/polytope.hpp"
#include "oack/rng.hpp"

#include <chrono>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace oack {

namespace {

// Group orders of the d-norm isometry group by dimension, frozen from the
// enumeration itself and kept as regression pins: 2(k! + k^2 (k-1)!).
constexpr long kDNormGroupK2 = 12;
constexpr long kDNormGroupK3 = 48;
constexpr long kDNormCanonicalK3 = 12;

int pick(int value, int fallback) { return value > 0 ? value : fallback; }

std::string vec_str(const LatticeVector& v) {
  std::string s = "[";
  for (int i = 0; i < v.dim(); ++i) {
    if (i) s += ",";
    s += to_string(v[i]);
  }
  return s + "]";
}

class Suite {
public:
  explicit Suite(std::string name) { report_.suite = std::move(name); }

  void instance() { ++report_.cases; }

  void expect(bool ok, const std::string& where, const std::string& expected,
              const std::string& actual) {
    if (!ok) fail(where, expected, actual);
  }

  void expect_eq(const Rational& expected, const Rational& actual, const std::string& where) {
    if (expected != actual) fail(where, to_string(expected), to_string(actual));
  }

  void expect_true(bool ok, const std::string& where) { expect(ok, where, "true", "false"); }

  void fail(const std::string& where, const std::string& expected, const std::string& actual) {
    if (report_.failures.size() < 50) {
      report_.failures.push_back({where, expected, actual});
    } else if (report_.failures.size() == 50) {
      report_.failures.push_back({"(further failures suppressed)", "", ""});
    }
  }

  CheckReport take() { return std::move(report_); }

private:
  CheckReport report_;
};

LatticeVector lv(Role role, const std::vector<std::string>& entries) {
  std::vector<Rational> coords;
  coords.reserve(entries.size());
  for (const auto& e : entries) coords.push_back(parse_rational(e));
  return LatticeVector(Space{static_cast<int>(entries.size())}, role, std::move(coords));
}

LatticeVector random_unit_vector(Rng& rng, int k) {
  Space space{k};
  LatticeVector x = LatticeVector::zero(space, Role::function);
  if (rng.coin()) {
    // Grid draw: the levels where faces collide, so ties are common.
    const Rational levels[5] = {Rational(-1), Rational(-1) / 2, Rational(0), Rational(1) / 2,
                                Rational(1)};
    std::vector<Rational> c(static_cast<std::size_t>(k));
    for (auto& v : c) v = levels[rng.below(5)];
    x = LatticeVector(space, Role::function, std::move(c));
  } else {
    x = rng.vector(space, Role::function);
  }
  Rational norm = d_norm(x);
  if (norm == 0) return LatticeVector::unit(space, Role::function, 0);
  return x.scaled(Rational(1) / norm);
}

CheckReport check_isomorphism(const CheckOptions& o) {
  Suite s("isomorphism");
  int cases = pick(o.trials, 200);
  int kmax = pick(o.k_max, 5);
  int nmax = pick(o.n_max, 6);
  Rng rng(o.seed * 1000003 + 101);
  for (int i = 0; i < cases; ++i) {
    s.instance();
    LatticeVector mu = lv(Role::measure, {"1", "-1"});
    int n = 2;
    if (i == 1) {
      mu = LatticeVector::zero(Space{3}, Role::measure);
      n = 3;
    } else if (i == 2) {
      mu = lv(Role::measure, {"-5/3"});
      n = 1;
    } else if (i >= 3) {
      int k = rng.range(1, kmax);
      n = rng.range(1, nmax);
      mu = rng.vector(Space{k}, Role::measure);
    }
    OAPoly p(n, mu);
    std::string tag = "mu=" + vec_str(mu) + " n=" + std::to_string(n);
    s.expect_eq(sup_norm_bruteforce(p, o.cap), sup_norm_poly(p), "sup norm formula vs scan, " + tag);
    s.expect_eq(var_norm(mu), reg_norm_poly(p), "regular norm vs variation, " + tag);
  }
  return s.take();
}

CheckReport check_parity(const CheckOptions& o) {
  Suite s("parity");
  int cases = pick(o.trials, 200);
  int kmax = pick(o.k_max, 5);
  int nmax = pick(o.n_max, 6);
  Rng rng(o.seed * 1000003 + 202);
  {
    // Pinned witness: the gap between the two norms is exactly 2 here.
    s.instance();
    OAPoly p(2, lv(Role::measure, {"1", "-1"}));
    s.expect_eq(Rational(1), sup_norm_poly(p), "witness sup norm");
    s.expect_eq(Rational(2), reg_norm_poly(p), "witness regular norm");
    s.expect_eq(Rational(2), reg_norm_poly(p) / sup_norm_poly(p), "witness norm ratio");
  }
  for (int i = 1; i < cases; ++i) {
    s.instance();
    int k = rng.range(1, kmax);
    int n = rng.range(1, nmax);
    LatticeVector mu = rng.vector(Space{k}, Role::measure);
    OAPoly p(n, mu);
    Rational sup = sup_norm_poly(p);
    Rational reg = reg_norm_poly(p);
    std::string tag = "mu=" + vec_str(mu) + " n=" + std::to_string(n);
    if (n % 2 == 1) {
      s.expect_eq(reg, sup, "odd degree norms must match, " + tag);
    } else {
      s.expect_true(sup <= reg && reg <= 2 * sup, "even degree norm sandwich, " + tag);
    }
  }
  return s.take();
}

CheckReport check_mu0(const CheckOptions& o) {
  Suite s("mu0");
  int cases = pick(o.trials, 1000);
  int kmax = pick(o.k_max, 5);
  Rng rng(o.seed * 1000003 + 303);
  for (int i = 0; i < cases; ++i) {
    s.instance();
    LatticeVector mu = i == 0 ? lv(Role::measure, {"3", "-1"})
                              : rng.vector(Space{rng.range(1, kmax)}, Role::measure);
    // Both closed forms, recomputed here from scratch.
    Rational plus(0), minus(0), var(0), mass(0);
    for (int j = 0; j < mu.dim(); ++j) {
      if (mu[j] > 0) plus += mu[j];
      if (mu[j] < 0) minus -= mu[j];
      var += abs_rational(mu[j]);
      mass += mu[j];
    }
    Rational larger = plus > minus ? plus : minus;
    Rational averaged = (var + abs_rational(mass)) / 2;
    std::string tag = "mu=" + vec_str(mu);
    s.expect_eq(larger, averaged, "half-mass identity, " + tag);
    Rational zero = zero_norm(mu);
    s.expect_eq(larger, zero, "zero norm value, " + tag);
    s.expect_true(zero <= var_norm(mu) && var_norm(mu) <= 2 * zero,
                  "norm equivalence sandwich, " + tag);
  }
  return s.take();
}

CheckReport check_duality(const CheckOptions& o) {
  Suite s("duality");
  int cases = pick(o.trials, 100);
  int kmax = pick(o.k_max, 4);
  Rng rng(o.seed * 1000003 + 404);
  for (int i = 0; i < cases; ++i) {
    s.instance();
    LatticeVector mu = i == 0 ? lv(Role::measure, {"3", "-1"})
                              : rng.vector(Space{rng.range(1, kmax)}, Role::measure);
    std::string tag = "mu=" + vec_str(mu);
    s.expect_eq(dual_norm_oracle(mu, NormId::d, o.cap), zero_norm(mu),
                "functional norm over the d ball, " + tag);
  }
  for (int i = 0; i < 30; ++i) {
    s.instance();
    LatticeVector mu = rng.vector(Space{rng.range(1, kmax)}, Role::measure);
    s.expect_eq(dual_norm_oracle(mu, NormId::sup, o.cap), var_norm(mu),
                "functional norm over the sup ball, mu=" + vec_str(mu));
  }
  for (int i = 0; i < 20; ++i) {
    s.instance();
    int k = rng.range(1, 3);
    LatticeVector mu = rng.vector(Space{k}, Role::measure);
    LatticeVector x = rng.vector(Space{k}, Role::function);
    s.expect_eq(support_value(ball_hrep(NormId::d, k, o.cap), mu, o.cap), zero_norm(mu),
                "support of the d ball, mu=" + vec_str(mu));
    s.expect_eq(support_value(ball_hrep(NormId::zero, k, o.cap), x, o.cap), d_norm(x),
                "support of the zero ball, x=" + vec_str(x));
  }
  return s.take();
}

CheckReport check_extremes(const CheckOptions& o) {
  Suite s("extremes");
  int kmax = pick(o.k_max, 4);
  for (int k = 1; k <= kmax; ++k) {
    for (NormId id : {NormId::sup, NormId::d, NormId::var, NormId::zero}) {
      s.instance();
      std::string tag = std::string(norm_name(id)) + " ball, k=" + std::to_string(k);
      VRep enumerated = enumerate_vertices(ball_hrep(id, k, o.cap), o.cap);
      VRep predicted = predicted_extremes(id, k);
      s.expect(enumerated.vertices == predicted.vertices, "vertex sets, " + tag,
               std::to_string(predicted.vertices.size()) + " predicted points",
               std::to_string(enumerated.vertices.size()) + " enumerated points");
      long expected_count = 0;
      switch (id) {
        case NormId::sup: expected_count = 1L << k; break;
        case NormId::d: expected_count = 2 * ((1L << k) - 1); break;
        case NormId::var: expected_count = 2L * k; break;
        case NormId::zero: expected_count = 2L * k + 1L * k * (k - 1); break;
      }
      s.expect(static_cast<long>(enumerated.vertices.size()) == expected_count,
               "vertex count, " + tag, std::to_string(expected_count),
               std::to_string(enumerated.vertices.size()));
    }
  }
  return s.take();
}

CheckReport check_sharpness(const CheckOptions& o) {
  Suite s("sharpness");
  int cases = pick(o.trials, 200);
  int kmax = pick(o.k_max, 5);
  int nmax = pick(o.n_max, 6);
  Rng rng(o.seed * 1000003 + 606);
  {
    // Pinned witness where the factor two is attained.
    s.instance();
    OAPoly p(2, lv(Role::measure, {"1", "-1"}));
    LatticeVector x = lv(Role::function, {"1", "1"});
    BasicReport r = check_basic(p, x);
    s.expect_eq(Rational(2), r.abs_value, "witness absolute value");
    s.expect_eq(Rational(1), r.local_bound, "witness local bound");
    s.expect_true(r.ratio && *r.ratio == 2, "witness ratio attains the factor two");
  }
  for (int i = 1; i < cases; ++i) {
    s.instance();
    int k = rng.range(1, kmax);
    int n = rng.range(1, nmax);
    LatticeVector mu = rng.vector(Space{k}, Role::measure);
    LatticeVector x = rng.nonneg_vector(Space{k}, Role::function);
    OAPoly p(n, mu);
    std::string tag = "mu=" + vec_str(mu) + " n=" + std::to_string(n) + " x=" + vec_str(x);
    Rational abs_value(0), bound(0);
    try {
      BasicReport r = check_basic(p, x);
      abs_value = r.abs_value;
      bound = r.local_bound;
    } catch (const std::logic_error& e) {
      s.fail("basic bound, " + tag, "report", e.what());
      continue;
    }
    if (n % 2 == 1) {
      s.expect_eq(bound, abs_value, "odd degree equality, " + tag);
    } else {
      s.expect_true(bound <= abs_value && abs_value <= 2 * bound,
                    "even degree sandwich, " + tag);
    }
    if (i % 10 == 0) {
      // The splitting search reaches the absolute value exactly: a diagonal
      // polynomial attains its supremum on the coordinate-atomic splitting.
      Rational found = partition_oracle(p, x, 3, o.seed + static_cast<std::uint64_t>(i));
      s.expect_eq(abs_value, found, "splitting supremum, " + tag);
    }
  }
  return s.take();
}

CheckReport check_isometries(const CheckOptions& o) {
  Suite s("isometries");
  auto classify_counts = [&](const std::vector<Mat>& maps, const std::string& tag) {
    long canonical = 0, noncanonical = 0;
    for (const auto& m : maps) {
      try {
        IsometryReport r = classify(m);
        if (r.kind == IsoKind::canonical) ++canonical;
        else ++noncanonical;
      } catch (const ClassificationError& e) {
        s.fail("classify, " + tag, "either structural form", e.what());
      }
    }
    return std::make_pair(canonical, noncanonical);
  };

  {
    s.instance();
    auto maps = enumerate_isometries(NormId::d, 1, o.cap);
    s.expect(maps.size() == 2, "group order, d ball k=1", "2", std::to_string(maps.size()));
  }
  {
    s.instance();
    auto maps = enumerate_isometries(NormId::d, 2, o.cap);
    s.expect(static_cast<long>(maps.size()) == kDNormGroupK2, "group order, d ball k=2",
             std::to_string(kDNormGroupK2), std::to_string(maps.size()));
    Mat shear = Mat::from_rows({{Rational(1), Rational(0)}, {Rational(1), Rational(-1)}});
    bool contains = false;
    for (const auto& m : maps) {
      if (m == shear) contains = true;
    }
    s.expect_true(contains, "group contains the base-point shear");

    std::set<Mat> group(maps.begin(), maps.end());
    bool closed = true, inverses = true;
    for (const auto& a : maps) {
      for (const auto& b : maps) {
        if (group.find(a.mul(b)) == group.end()) closed = false;
      }
      auto inv = inverse(a);
      if (!inv || group.find(*inv) == group.end()) inverses = false;
    }
    s.expect_true(closed, "group closed under composition, k=2");
    s.expect_true(inverses, "group closed under inversion, k=2");

    auto [canonical, noncanonical] = classify_counts(maps, "k=2");
    s.expect(canonical == 4, "canonical count, k=2", "4", std::to_string(canonical));
    s.expect(noncanonical == 8, "noncanonical count, k=2", "8", std::to_string(noncanonical));
  }
  {
    s.instance();
    auto maps = enumerate_isometries(NormId::d, 3, o.cap);
    s.expect(static_cast<long>(maps.size()) == kDNormGroupK3, "group order, d ball k=3",
             std::to_string(kDNormGroupK3), std::to_string(maps.size()));
    auto [canonical, noncanonical] = classify_counts(maps, "k=3");
    s.expect(canonical == kDNormCanonicalK3, "canonical count, k=3",
             std::to_string(kDNormCanonicalK3), std::to_string(canonical));
    s.expect(canonical + noncanonical == static_cast<long>(maps.size()),
             "every k=3 element classifies", std::to_string(maps.size()),
             std::to_string(canonical + noncanonical));
  }
  {
    s.instance();
    auto maps = enumerate_isometries(NormId::var, 2, o.cap);
    s.expect(maps.size() == 8, "group order, var ball k=2", "8", std::to_string(maps.size()));
  }
  return s.take();
}

CheckReport check_induced(const CheckOptions& o) {
  Suite s("induced");
  int cases = pick(o.trials, 100);
  Rng rng(o.seed * 1000003 + 808);
  std::map<int, std::vector<Mat>> groups;
  for (int k : {2, 3}) groups[k] = enumerate_isometries(NormId::d, k, o.cap);
  for (int i = 0; i < cases; ++i) {
    s.instance();
    int k = rng.coin() ? 2 : 3;
    int n = 2 * rng.range(1, 3);
    const auto& maps = groups[k];
    const Mat& m = maps[static_cast<std::size_t>(rng.below(static_cast<int>(maps.size())))];
    LatticeVector mu = rng.vector(Space{k}, Role::measure);
    std::string tag = "k=" + std::to_string(k) + " n=" + std::to_string(n) +
                      " mu=" + vec_str(mu);
    try {
      IsometryReport report = classify(m);
      PolyIsometry action = induced_poly_isometry(report, n);
      OAPoly p(n, mu);
      OAPoly image = action.apply(p);
      s.expect_eq(sup_norm_poly(p), sup_norm_poly(image), "sup norm preserved, " + tag);
      // Only the lattice (canonical) maps act by permuting mass, so only they
      // respect the regular norm; the base-point maps trade it away.
      if (report.kind == IsoKind::canonical) {
        s.expect_eq(reg_norm_poly(p), reg_norm_poly(image), "regular norm preserved, " + tag);
      }
      s.expect(image.mu == m.transpose().apply(mu.with_role(Role::measure)),
               "structural action matches the transpose, " + tag, "transpose image",
               vec_str(image.mu));
    } catch (const std::exception& e) {
      s.fail("induced action, " + tag, "an isometry of the polynomial space", e.what());
    }
  }
  return s.take();
}

CheckReport check_smoothness(const CheckOptions& o) {
  Suite s("smoothness");
  int cases = pick(o.trials, 500);
  int kmax = pick(o.k_max, 4);
  Rng rng(o.seed * 1000003 + 909);
  for (int i = 0; i < cases; ++i) {
    s.instance();
    int k = rng.range(1, kmax);
    LatticeVector x = random_unit_vector(rng, k);
    std::string tag = "x=" + vec_str(x);
    try {
      NormingFace face = norming_face(x);
      Smoothness by_face{face.extremes.size() == 1,
                         face.extremes.size() == 1
                             ? std::optional<LatticeVector>(face.extremes.front())
                             : std::nullopt};
      Smoothness closed = gateaux_closed_form(x);
      Smoothness fr = is_frechet(x);
      Smoothness g = is_gateaux(x);
      s.expect(by_face.smooth == closed.smooth, "face route vs criteria route, " + tag,
               by_face.smooth ? "smooth" : "not smooth", closed.smooth ? "smooth" : "not smooth");
      s.expect(closed.smooth == fr.smooth && fr.smooth == g.smooth,
               "all smoothness routes agree, " + tag, closed.smooth ? "smooth" : "not smooth",
               fr.smooth ? "smooth" : "not smooth");
      if (by_face.smooth && closed.smooth && fr.smooth) {
        s.expect(*by_face.derivative == *closed.derivative && *closed.derivative == *fr.derivative,
                 "derivative agreement, " + tag, vec_str(*by_face.derivative),
                 vec_str(*closed.derivative));
      }
    } catch (const std::exception& e) {
      s.fail("smoothness, " + tag, "consistent routes", e.what());
    }
  }
  for (int k = 1; k <= kmax; ++k) {
    for (const auto& extreme : predicted_extremes(NormId::zero, k).vertices) {
      s.instance();
      std::string tag = "extreme=" + vec_str(extreme);
      try {
        LatticeVector witness = exposing_witness(extreme);
        s.expect_true(strongly_exposes(witness, extreme), "witness strongly exposes, " + tag);
      } catch (const std::exception& e) {
        s.fail("exposing witness, " + tag, "a strongly exposing unit vector", e.what());
      }
    }
  }
  return s.take();
}

CheckReport check_orthosymmetry(const CheckOptions& o) {
  Suite s("orthosymmetry");
  int cases = pick(o.trials, 200);
  int kmax = pick(o.k_max, 3);
  int nmax = pick(o.n_max, 4);
  Rng rng(o.seed * 1000003 + 1010);
  for (int i = 0; i < cases; ++i) {
    s.instance();
    int k = rng.range(1, kmax);
    int n = rng.range(1, nmax);
    Space space{k};
    SymPoly p(n, space, {});
    if (rng.coin()) {
      p = diagonal_sympoly(OAPoly(n, rng.vector(space, Role::measure)));
    } else {
      std::map<MultiIndex, Rational> coeffs;
      int terms = rng.range(1, 4);
      for (int tindex = 0; tindex < terms; ++tindex) {
        MultiIndex alpha(static_cast<std::size_t>(k), 0);
        for (int j = 0; j < n; ++j) ++alpha[static_cast<std::size_t>(rng.below(k))];
        coeffs[alpha] = rng.rational();
      }
      p = SymPoly(n, space, std::move(coeffs));
    }
    bool by_support = is_orthogonally_additive(p);
    bool by_form = is_orthosymmetric(p);
    bool by_blackbox = is_orthogonally_additive_eval(
        space, [&](const LatticeVector& x) { return eval(p, x); }, 10,
        o.seed + static_cast<std::uint64_t>(i));
    std::ostringstream tag;
    tag << "k=" << k << " n=" << n << " terms=" << p.coeffs().size() << " case=" << i;
    s.expect(by_support == by_form, "support criterion vs symmetric form, " + tag.str(),
             by_support ? "true" : "false", by_form ? "true" : "false");
    s.expect(by_support == by_blackbox, "support criterion vs black box, " + tag.str(),
             by_support ? "true" : "false", by_blackbox ? "true" : "false");
  }
  for (int i = 0; i < 100; ++i) {
    s.instance();
    int k = rng.range(1, 4);
    int n = rng.range(2, nmax < 2 ? 2 : nmax);
    Space space{k};
    LatticeVector phi = LatticeVector::zero(space, Role::measure);
    if (rng.coin()) {
      phi = LatticeVector::unit(space, Role::measure, rng.below(k)).scaled(rng.rational());
    } else {
      phi = rng.vector(space, Role::measure);
    }
    int support = 0;
    for (int j = 0; j < k; ++j) {
      if (phi[j] != 0) ++support;
    }
    std::string tag = "phi=" + vec_str(phi) + " n=" + std::to_string(n);
    try {
      PowerReport r = power_functional_test(phi, n);
      s.expect(r.orthogonally_additive == (support <= 1), "power functional criterion, " + tag,
               support <= 1 ? "true" : "false", r.orthogonally_additive ? "true" : "false");
    } catch (const std::exception& e) {
      s.fail("power functional, " + tag, "consistent report", e.what());
    }
  }
  return s.take();
}

CheckReport check_core(const CheckOptions& o) {
  Suite s("core");
  int cases = pick(o.trials, 200);
  int kmax = pick(o.k_max, 6);
  Rng rng(o.seed * 1000003 + 1111);
  for (int i = 0; i < cases; ++i) {
    s.instance();
    int k = rng.range(1, kmax);
    Space space{k};
    LatticeVector v = rng.vector(space, Role::measure);
    LatticeVector w = rng.vector(space, Role::measure);
    auto [pos, neg] = jordan_decompose(v);
    std::string tag = "v=" + vec_str(v) + " w=" + vec_str(w);
    s.expect_true(pos - neg == v, "parts recompose, " + tag);
    s.expect_true(meet(pos, neg) == LatticeVector::zero(space, Role::measure),
                  "parts are disjoint, " + tag);
    s.expect_true(abs(v) == pos + neg, "absolute value splits, " + tag);
    s.expect_true(abs(v) == join(v, -v), "absolute value as a join, " + tag);
    s.expect_true(meet(v, w) + join(v, w) == v + w, "meet-join identity, " + tag);
    s.expect_true(is_disjoint(pos, neg), "disjointness predicate, " + tag);
  }
  return s.take();
}

CheckReport check_norms(const CheckOptions& o) {
  Suite s("norms");
  int cases = pick(o.trials, 200);
  int kmax = pick(o.k_max, 5);
  Rng rng(o.seed * 1000003 + 1212);
  for (int i = 0; i < cases; ++i) {
    s.instance();
    int k = rng.range(1, kmax);
    Space space{k};
    LatticeVector x = rng.vector(space, Role::function);
    std::string tag = "x=" + vec_str(x);

    auto [pos, neg] = jordan_decompose(x);
    Rational split = sup_norm(pos) + sup_norm(neg);
    Rational lo = x[0], hi = x[0];
    for (int j = 1; j < k; ++j) {
      if (x[j] < lo) lo = x[j];
      if (x[j] > hi) hi = x[j];
    }
    Rational spread = hi - lo;
    Rational sup = sup_norm(x);
    s.expect_eq(split, d_norm(x), "d norm as split sup, " + tag);
    s.expect_eq(sup > spread ? sup : spread, d_norm(x), "d norm as peak, " + tag);

    Rational best = sup;
    for (int a = 0; a < k; ++a) {
      for (int b = 0; b < k; ++b) {
        Rational mid = (x[a] + x[b]) / 2;
        Rational radius = sup_norm(x - LatticeVector::constant(space, Role::function, mid));
        if (radius < best) best = radius;
      }
    }
    s.expect_eq(spread, 2 * best, "diameter as twice the best constant fit, " + tag);

    Rational a = rng.rational();
    Rational b = rng.rational();
    LatticeVector two = LatticeVector(Space{2}, Role::measure, {a, b});
    Rational table = abs_rational(a);
    if (abs_rational(b) > table) table = abs_rational(b);
    if (abs_rational(a + b) > table) table = abs_rational(a + b);
    s.expect_eq(table, zero_norm(two),
                "two-point table, mu=[" + to_string(a) + "," + to_string(b) + "]");

    OAPoly linear(1, rng.vector(space, Role::measure));
    s.expect_eq(var_norm(linear.mu), sup_norm_poly(linear), "degree one degenerates, " + tag);
  }
  return s.take();
}

using SuiteFn = CheckReport (*)(const CheckOptions&);

const std::vector<std::pair<std::string, SuiteFn>>& suite_table() {
  static const std::vector<std::pair<std::string, SuiteFn>> table = {
      {"isomorphism", check_isomorphism}, {"parity", check_parity},
      {"mu0", check_mu0},                 {"duality", check_duality},
      {"extremes", check_extremes},       {"sharpness", check_sharpness},
      {"isometries", check_isometries},   {"induced", check_induced},
      {"smoothness", check_smoothness},   {"orthosymmetry", check_orthosymmetry},
      {"core", check_core},               {"norms", check_norms},
  };
  return table;
}

} // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, fn] : suite_table()) out.push_back(name);
    return out;
  }();
  return names;
}

CheckReport run_suite(const std::string& name, const CheckOptions& opts) {
  for (const auto& [candidate, fn] : suite_table()) {
    if (candidate == name) {
      auto start = std::chrono::steady_clock::now();
      CheckReport report = fn(opts);
      auto stop = std::chrono::steady_clock::now();
      report.micros =
          std::chrono::duration_cast<std::chrono::microseconds>(stop - start).count();
      return report;
    }
  }
  throw std::invalid_argument("unknown suite: " + name);
}

std::vector<CheckReport> run_suites(const std::string& name, const CheckOptions& opts) {
  std::vector<CheckReport> out;
  if (name == "all") {
    for (const auto& suite : suite_names()) out.push_back(run_suite(suite, opts));
  } else {
    out.push_back(run_suite(name, opts));
  }
  return out;
}

} // namespace oack
