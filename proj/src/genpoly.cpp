#include "oack/genpoly.hpp"

#include <algorithm>
#include <stdexcept>

namespace oack {

namespace {

int support_size(const MultiIndex& alpha) {
  int s = 0;
  for (unsigned e : alpha) {
    if (e > 0) ++s;
  }
  return s;
}

// Visits every exponent vector of total weight n over width slots.
template <typename F>
void for_each_multiindex(int width, unsigned n, F&& f) {
  MultiIndex alpha(static_cast<std::size_t>(width), 0);
  auto rec = [&](auto&& self, int slot, unsigned left) -> void {
    if (slot == width - 1) {
      alpha[static_cast<std::size_t>(slot)] = left;
      f(alpha);
      alpha[static_cast<std::size_t>(slot)] = 0;
      return;
    }
    for (unsigned e = 0; e <= left; ++e) {
      alpha[static_cast<std::size_t>(slot)] = e;
      self(self, slot + 1, left - e);
    }
    alpha[static_cast<std::size_t>(slot)] = 0;
  };
  if (width > 0) rec(rec, 0, n);
}

} // namespace

SymPoly::SymPoly(int degree, Space space, std::map<MultiIndex, Rational> coeffs)
    : degree_(degree), space_(space), coeffs_(std::move(coeffs)) {
  if (degree_ < 1) throw std::invalid_argument("degree must be at least 1");
  for (auto it = coeffs_.begin(); it != coeffs_.end();) {
    const auto& [alpha, c] = *it;
    if (alpha.size() != static_cast<std::size_t>(space_.k)) {
      throw std::invalid_argument("exponent vector has wrong width");
    }
    unsigned total = 0;
    for (unsigned e : alpha) total += e;
    if (total != static_cast<unsigned>(degree_)) {
      throw std::invalid_argument("exponent vector has wrong total degree");
    }
    it = c == 0 ? coeffs_.erase(it) : std::next(it);
  }
}

Rational eval(const SymPoly& p, const LatticeVector& x) {
  if (!(x.space() == p.space())) throw std::invalid_argument("eval: space mismatch");
  if (x.role() != Role::function) {
    throw std::invalid_argument("eval: argument must be a function");
  }
  Rational total(0);
  for (const auto& [alpha, c] : p.coeffs()) {
    Rational term = c;
    for (int i = 0; i < x.dim() && term != 0; ++i) {
      unsigned e = alpha[static_cast<std::size_t>(i)];
      if (e > 0) term *= pow_rational(x[i], e);
    }
    total += term;
  }
  return total;
}

Rational polarize(const SymPoly& p, std::span<const LatticeVector> args) {
  unsigned n = static_cast<unsigned>(p.degree());
  if (args.size() != n) {
    throw std::invalid_argument("polarize: argument count must equal the degree");
  }
  for (const auto& a : args) {
    if (!(a.space() == p.space())) throw std::invalid_argument("polarize: space mismatch");
    if (a.role() != Role::function) {
      throw std::invalid_argument("polarize: arguments must be functions");
    }
  }
  Rational total(0);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    LatticeVector combo = LatticeVector::zero(p.space(), Role::function);
    int parity = 0;
    for (unsigned i = 0; i < n; ++i) {
      if ((mask >> i) & 1u) {
        combo = combo + args[i];
      } else {
        combo = combo - args[i];
        ++parity;
      }
    }
    Rational value = eval(p, combo);
    total += parity % 2 == 0 ? value : -value;
  }
  Rational divisor = Rational(Int(1) << n) * Rational(factorial(n));
  return total / divisor;
}

bool is_orthogonally_additive(const SymPoly& p) {
  for (const auto& [alpha, c] : p.coeffs()) {
    if (support_size(alpha) > 1) return false;
  }
  return true;
}

bool is_orthosymmetric(const SymPoly& p) {
  int k = p.space().k;
  unsigned n = static_cast<unsigned>(p.degree());
  std::vector<LatticeVector> basis;
  basis.reserve(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) {
    basis.push_back(LatticeVector::unit(p.space(), Role::function, i));
  }
  // The form is symmetric, so tuples are scanned as multisets: exponent
  // vectors of weight n with at least two coordinates in play.
  bool clean = true;
  for_each_multiindex(k, n, [&](const MultiIndex& alpha) {
    if (!clean || support_size(alpha) < 2) return;
    std::vector<LatticeVector> args;
    args.reserve(n);
    for (int i = 0; i < k; ++i) {
      for (unsigned rep = 0; rep < alpha[static_cast<std::size_t>(i)]; ++rep) {
        args.push_back(basis[static_cast<std::size_t>(i)]);
      }
    }
    if (polarize(p, args) != 0) clean = false;
  });
  return clean;
}

SymPoly power_functional(const LatticeVector& phi, int n) {
  if (phi.role() != Role::measure) {
    throw std::invalid_argument("power_functional: phi must be a measure");
  }
  if (n < 1) throw std::invalid_argument("power_functional: degree must be at least 1");
  int k = phi.dim();
  std::map<MultiIndex, Rational> coeffs;
  Int n_fact = factorial(static_cast<unsigned>(n));
  for_each_multiindex(k, static_cast<unsigned>(n), [&](const MultiIndex& alpha) {
    Rational c(n_fact);
    for (int i = 0; i < k; ++i) {
      unsigned e = alpha[static_cast<std::size_t>(i)];
      if (e == 0) continue;
      c /= Rational(factorial(e));
      c *= pow_rational(phi[i], e);
      if (c == 0) return;
    }
    if (c != 0) coeffs[alpha] = c;
  });
  return SymPoly(n, phi.space(), std::move(coeffs));
}

PowerReport power_functional_test(const LatticeVector& phi, int n) {
  if (n < 2) throw std::invalid_argument("power_functional_test: degree must be at least 2");
  SymPoly p = power_functional(phi, n);
  int support = 0;
  for (int i = 0; i < phi.dim(); ++i) {
    if (phi[i] != 0) ++support;
  }
  PowerReport report{is_orthogonally_additive(p), support <= 1};
  if (report.orthogonally_additive != report.lattice_homomorphism) {
    throw std::logic_error("power_functional_test: the two criteria disagree");
  }
  return report;
}

SymPoly diagonal_sympoly(const OAPoly& p) {
  int k = p.mu.dim();
  std::map<MultiIndex, Rational> coeffs;
  for (int i = 0; i < k; ++i) {
    if (p.mu[i] == 0) continue;
    MultiIndex alpha(static_cast<std::size_t>(k), 0);
    alpha[static_cast<std::size_t>(i)] = static_cast<unsigned>(p.degree);
    coeffs[alpha] = p.mu[i];
  }
  return SymPoly(p.degree, p.space(), std::move(coeffs));
}

AtomReport al_atom_check(const std::vector<Rational>& weights, int n) {
  if (weights.empty()) throw std::invalid_argument("al_atom_check: no coordinates");
  if (n < 2) throw std::invalid_argument("al_atom_check: degree must be at least 2");
  for (const auto& w : weights) {
    if (w <= 0) throw std::invalid_argument("al_atom_check: weights must be positive");
  }
  int k = static_cast<int>(weights.size());
  Space space{k};
  MultiIndex alpha(static_cast<std::size_t>(k), 0);
  alpha[0] = static_cast<unsigned>(n);
  SymPoly witness(n, space, {{alpha, Rational(1)}});
  std::vector<Rational> diag(static_cast<std::size_t>(k));
  diag[0] = 1;
  return AtomReport{true, std::move(witness), weighted_l1_sup_norm(diag, weights, n)};
}

Rational weighted_l1_sup_norm(const std::vector<Rational>& diag,
                              const std::vector<Rational>& weights, int n) {
  if (diag.size() != weights.size()) {
    throw std::invalid_argument("weighted_l1_sup_norm: size mismatch");
  }
  if (n < 1) throw std::invalid_argument("weighted_l1_sup_norm: degree must be at least 1");
  Rational best(0);
  for (std::size_t j = 0; j < diag.size(); ++j) {
    if (weights[j] <= 0) {
      throw std::invalid_argument("weighted_l1_sup_norm: weights must be positive");
    }
    Rational value =
        abs_rational(diag[j]) / pow_rational(weights[j], static_cast<unsigned>(n));
    if (value > best) best = value;
  }
  return best;
}

} // namespace oack
