#include "oack/oapoly.hpp"

#include "oack/norms.hpp"
#include "oack/rng.hpp"

#include <stdexcept>
#include <vector>

namespace oack {

namespace {

void require_function_arg(const OAPoly& p, const LatticeVector& x, const char* what) {
  if (!(x.space() == p.space())) {
    throw std::invalid_argument(std::string(what) + ": space mismatch");
  }
  if (x.role() != Role::function) {
    throw std::invalid_argument(std::string(what) + ": argument must be a function");
  }
}

void require_nonneg_arg(const OAPoly& p, const LatticeVector& x, const char* what) {
  require_function_arg(p, x, what);
  if (!is_nonnegative(x)) {
    throw std::invalid_argument(std::string(what) + ": argument must be nonnegative");
  }
}

// Splitting of a nonnegative vector into nonzero nonnegative pieces.
using Splitting = std::vector<LatticeVector>;

Splitting atomic_splitting(const LatticeVector& x) {
  Splitting out;
  for (int i = 0; i < x.dim(); ++i) {
    if (x[i] == 0) continue;
    out.push_back(LatticeVector::unit(x.space(), x.role(), i).scaled(x[i]));
  }
  return out;
}

// Random coordinatewise weight split of x into `pieces` parts.
Splitting random_splitting(const LatticeVector& x, int pieces, Rng& rng) {
  std::vector<std::vector<Rational>> parts(
      static_cast<std::size_t>(pieces),
      std::vector<Rational>(static_cast<std::size_t>(x.dim())));
  for (int i = 0; i < x.dim(); ++i) {
    if (x[i] == 0) continue;
    // Random positive weights, normalized to sum to 1.
    std::vector<Rational> w(static_cast<std::size_t>(pieces));
    Rational sum(0);
    for (auto& v : w) {
      v = Rational(rng.range(1, 8));
      sum += v;
    }
    for (int j = 0; j < pieces; ++j) {
      parts[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] =
          x[i] * w[static_cast<std::size_t>(j)] / sum;
    }
  }
  Splitting out;
  for (auto& part : parts) {
    LatticeVector piece(x.space(), x.role(), std::move(part));
    if (!(piece == LatticeVector::zero(x.space(), x.role()))) out.push_back(piece);
  }
  return out;
}

// Symmetric multilinear form of P on an n-tuple of vectors, evaluated from
// the diagonal coefficients directly.
Rational sym_form(const OAPoly& p, const std::vector<const LatticeVector*>& args) {
  Rational total(0);
  for (int j = 0; j < p.mu.dim(); ++j) {
    if (p.mu[j] == 0) continue;
    Rational prod = p.mu[j];
    for (const auto* a : args) {
      prod *= (*a)[j];
      if (prod == 0) break;
    }
    total += prod;
  }
  return total;
}

// Total |A| mass over all ways of picking one piece per argument slot.
Rational splitting_mass(const OAPoly& p, const std::vector<const Splitting*>& slots) {
  int n = p.degree;
  std::vector<std::size_t> pick(static_cast<std::size_t>(n), 0);
  for (const auto* s : slots) {
    if (s->empty()) return Rational(0);
  }
  Rational total(0);
  while (true) {
    std::vector<const LatticeVector*> args;
    args.reserve(static_cast<std::size_t>(n));
    for (int s = 0; s < n; ++s) {
      args.push_back(&(*slots[static_cast<std::size_t>(s)])[pick[static_cast<std::size_t>(s)]]);
    }
    total += abs_rational(sym_form(p, args));
    int s = n - 1;
    while (s >= 0) {
      auto& idx = pick[static_cast<std::size_t>(s)];
      if (idx + 1 < slots[static_cast<std::size_t>(s)]->size()) {
        ++idx;
        break;
      }
      idx = 0;
      --s;
    }
    if (s < 0) break;
  }
  return total;
}

} // namespace

OAPoly::OAPoly(int degree, LatticeVector mu_in) : degree(degree), mu(std::move(mu_in)) {
  if (degree < 1) throw std::invalid_argument("degree must be at least 1");
  if (mu.role() != Role::measure) {
    throw std::invalid_argument("polynomial coefficients must form a measure");
  }
}

Rational eval(const OAPoly& p, const LatticeVector& x) {
  require_function_arg(p, x, "eval");
  Rational total(0);
  for (int i = 0; i < p.mu.dim(); ++i) {
    if (p.mu[i] == 0) continue;
    total += p.mu[i] * pow_rational(x[i], static_cast<unsigned>(p.degree));
  }
  return total;
}

OAPoly abs_poly(const OAPoly& p) { return OAPoly(p.degree, abs(p.mu)); }

Rational abs_eval(const OAPoly& p, const LatticeVector& x) {
  require_nonneg_arg(p, x, "abs_eval");
  return eval(abs_poly(p), x);
}

Rational partition_oracle(const OAPoly& p, const LatticeVector& x, int budget,
                          std::uint64_t seed) {
  require_nonneg_arg(p, x, "partition_oracle");
  if (budget < 0) throw std::invalid_argument("budget must be nonnegative");
  if (x == LatticeVector::zero(x.space(), x.role())) return Rational(0);

  std::vector<Splitting> pool;
  pool.push_back({x});
  pool.push_back(atomic_splitting(x));
  Rng rng(seed);
  for (int i = 0; i < budget; ++i) {
    pool.push_back(random_splitting(x, rng.range(2, 3), rng));
  }

  Rational best(0);
  // One splitting across all argument slots, for each pool member.
  for (const auto& s : pool) {
    std::vector<const Splitting*> slots(static_cast<std::size_t>(p.degree), &s);
    Rational mass = splitting_mass(p, slots);
    if (mass > best) best = mass;
  }
  // Mixed tuples, drawn from the pool at random.
  for (int trial = 0; trial < budget; ++trial) {
    std::vector<const Splitting*> slots;
    slots.reserve(static_cast<std::size_t>(p.degree));
    for (int s = 0; s < p.degree; ++s) {
      slots.push_back(&pool[static_cast<std::size_t>(rng.below(static_cast<int>(pool.size())))]);
    }
    Rational mass = splitting_mass(p, slots);
    if (mass > best) best = mass;
  }
  return best;
}

Rational sup_norm_poly(const OAPoly& p) {
  return p.degree % 2 == 1 ? var_norm(p.mu) : zero_norm(p.mu);
}

Rational reg_norm_poly(const OAPoly& p) { return var_norm(p.mu); }

Rational sup_norm_bruteforce(const OAPoly& p, int cap) {
  int k = p.mu.dim();
  if (k > cap) throw CapacityError("sup_norm_bruteforce scans 2^k patterns; k exceeds cap");
  bool odd = p.degree % 2 == 1;
  Rational best(0);
  for (long long mask = 0; mask < (1LL << k); ++mask) {
    Rational value(0);
    for (int i = 0; i < k; ++i) {
      if ((mask >> i) & 1) {
        value += p.mu[i];
      } else if (odd) {
        value -= p.mu[i];
      }
    }
    Rational a = abs_rational(value);
    if (a > best) best = a;
  }
  return best;
}

Rational local_sup(const OAPoly& p, const LatticeVector& x) {
  require_nonneg_arg(p, x, "local_sup");
  unsigned n = static_cast<unsigned>(p.degree);
  if (p.degree % 2 == 1) {
    Rational total(0);
    for (int i = 0; i < x.dim(); ++i) {
      total += abs_rational(p.mu[i]) * pow_rational(x[i], n);
    }
    return total;
  }
  auto [pos, neg] = jordan_decompose(p.mu);
  Rational up(0);
  Rational down(0);
  for (int i = 0; i < x.dim(); ++i) {
    Rational xi = pow_rational(x[i], n);
    up += pos[i] * xi;
    down += neg[i] * xi;
  }
  return up > down ? up : down;
}

BasicReport check_basic(const OAPoly& p, const LatticeVector& x) {
  Rational abs_value = abs_eval(p, x);
  Rational bound = local_sup(p, x);
  bool even = p.degree % 2 == 0;
  if (!even && abs_value != bound) {
    throw std::logic_error("check_basic: odd degree must give equality");
  }
  if (even && abs_value > 2 * bound) {
    throw std::logic_error("check_basic: even degree must stay within factor two");
  }
  if (abs_value < bound) {
    throw std::logic_error("check_basic: absolute value fell below the local bound");
  }
  BasicReport report{abs_value, bound, std::nullopt, even};
  if (bound != 0) report.ratio = abs_value / bound;
  return report;
}

bool is_orthogonally_additive_eval(
    Space space, const std::function<Rational(const LatticeVector&)>& poly,
    int trials, std::uint64_t seed) {
  int k = space.k;
  if (k > 10) throw CapacityError("additivity grid needs 3^k cases; k too large");
  auto disjoint_additive = [&](const LatticeVector& u, const LatticeVector& v) {
    return poly(u + v) == poly(u) + poly(v);
  };

  const Rational half = Rational(1) / 2;
  const Rational third = Rational(1) / 3;
  const std::vector<std::pair<Rational, Rational>> levels = {
      {Rational(1), Rational(1)},
      {Rational(1), Rational(-1)},
      {half, Rational(2)},
      {Rational(-3) / 2, third},
  };
  long long total = 1;
  for (int i = 0; i < k; ++i) total *= 3;
  for (long long code = 0; code < total; ++code) {
    long long c = code;
    std::vector<int> side(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) {
      side[static_cast<std::size_t>(i)] = static_cast<int>(c % 3);
      c /= 3;
    }
    for (const auto& [a, b] : levels) {
      std::vector<Rational> u(static_cast<std::size_t>(k));
      std::vector<Rational> v(static_cast<std::size_t>(k));
      for (int i = 0; i < k; ++i) {
        if (side[static_cast<std::size_t>(i)] == 1) u[static_cast<std::size_t>(i)] = a;
        if (side[static_cast<std::size_t>(i)] == 2) v[static_cast<std::size_t>(i)] = b;
      }
      if (!disjoint_additive(LatticeVector(space, Role::function, std::move(u)),
                             LatticeVector(space, Role::function, std::move(v)))) {
        return false;
      }
    }
  }

  Rng rng(seed);
  for (int t = 0; t < trials; ++t) {
    std::vector<Rational> u(static_cast<std::size_t>(k));
    std::vector<Rational> v(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) {
      switch (rng.below(3)) {
        case 1: u[static_cast<std::size_t>(i)] = rng.rational(); break;
        case 2: v[static_cast<std::size_t>(i)] = rng.rational(); break;
        default: break;
      }
    }
    if (!disjoint_additive(LatticeVector(space, Role::function, std::move(u)),
                           LatticeVector(space, Role::function, std::move(v)))) {
      return false;
    }
  }
  return true;
}

} // namespace oack
