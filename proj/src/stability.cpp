#include "mixeddet/stability.hpp"

#include <bit>
#include <stdexcept>

namespace mixeddet {

std::string to_string(StabilityStatus s) {
  switch (s) {
    case StabilityStatus::CertifiedUnstable:
      return "CERTIFIED_UNSTABLE";
    case StabilityStatus::SampledStable:
      return "SAMPLED_STABLE";
    case StabilityStatus::CertifiedStable:
      return "CERTIFIED_STABLE";
  }
  return "SAMPLED_STABLE";
}

Rational RationalSampler::any() {
  std::uniform_int_distribution<int> num(-bound_, bound_);
  std::uniform_int_distribution<int> den(1, bound_);
  const int p = num(rng_);
  const int q = den(rng_);
  return Rational(p, q);
}

Rational RationalSampler::positive() {
  std::uniform_int_distribution<int> num(1, bound_);
  std::uniform_int_distribution<int> den(1, bound_);
  const int p = num(rng_);
  const int q = den(rng_);
  return Rational(p, q);
}

std::vector<Rational> RationalSampler::vector(int n) {
  std::vector<Rational> v;
  v.reserve(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) v.push_back(any());
  return v;
}

std::vector<Rational> RationalSampler::positive_vector(int n) {
  std::vector<Rational> v;
  v.reserve(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) v.push_back(positive());
  return v;
}

MultiPoly delta_ij(const MultiPoly& f, int i, int j) {
  if (!f.is_multiaffine()) throw std::invalid_argument("delta_ij: polynomial is not multi-affine");
  if (i == j) throw std::invalid_argument("delta_ij: indices must differ");
  const MultiPoly fi = partial_derivative(f, i);
  const MultiPoly fj = partial_derivative(f, j);
  return fi * fj - partial_derivative(fi, j) * f;
}

namespace {

/// Splits a bivariate polynomial into coefficients of x^0, x^1, x^2 (x = variable 0)
/// as univariate polynomials in y (variable 1).
std::vector<UniPoly> coefficients_in_first(const MultiPoly& p) {
  std::vector<std::vector<Rational>> parts(3);
  for (const auto& [e, c] : p.terms()) {
    if (e[0] > 2) throw std::invalid_argument("bivariate check: degree in x exceeds 2");
    auto& v = parts[static_cast<std::size_t>(e[0])];
    if (v.size() <= static_cast<std::size_t>(e[1])) v.resize(static_cast<std::size_t>(e[1]) + 1, Rational(0));
    v[static_cast<std::size_t>(e[1])] += c;
  }
  return {UniPoly(parts[0]), UniPoly(parts[1]), UniPoly(parts[2])};
}

}  // namespace

std::optional<std::vector<Rational>> bivariate_negativity_witness(const MultiPoly& delta) {
  if (delta.nvars() != 2) throw std::invalid_argument("bivariate check needs two variables");
  const std::vector<UniPoly> q = coefficients_in_first(delta);
  const UniPoly& c = q[0];
  const UniPoly& b = q[1];
  const UniPoly& a = q[2];
  // q(x) = a x^2 + b x + c is nonnegative for every x iff a >= 0, c >= 0 and 4ac - b^2 >= 0.
  std::optional<std::vector<Rational>> point;
  if (auto y = negativity_witness(a)) {
    const Rational a0 = a(*y);
    const Rational x = Rational(1) + (abs(b(*y)) + abs(c(*y))) / abs(a0);
    point = std::vector<Rational>{x, *y};
  } else if (auto y = negativity_witness(c)) {
    point = std::vector<Rational>{Rational(0), *y};
  } else if (auto y = negativity_witness(Rational(4) * a * c - b * b)) {
    const Rational a0 = a(*y);
    const Rational b0 = b(*y);
    const Rational x = a0.sign() > 0 ? Rational(-b0 / (2 * a0)) : Rational(-(c(*y) + 1) / b0);
    point = std::vector<Rational>{x, *y};
  }
  if (point && eval(delta, *point).sign() >= 0)
    throw std::logic_error("bivariate check produced a non-witness point");
  return point;
}

StabilityVerdict multiaffine_stability_check(const MultiPoly& f, int samples, std::uint64_t seed) {
  if (!f.is_multiaffine()) throw std::invalid_argument("multiaffine check: polynomial is not multi-affine");
  if (f.is_zero()) throw std::invalid_argument("multiaffine check: zero polynomial");
  StabilityVerdict verdict;
  verdict.trials_requested = samples;
  verdict.seed = seed;
  const int n = f.nvars();
  if (n <= 1) {
    verdict.status = StabilityStatus::CertifiedStable;
    return verdict;
  }
  if (n == 2) {
    const MultiPoly d = delta_ij(f, 0, 1);
    if (auto p = bivariate_negativity_witness(d)) {
      verdict.status = StabilityStatus::CertifiedUnstable;
      verdict.witness = StabilityWitness{StabilityWitness::Kind::NegativeDelta, *p, {}, 0, 1, eval(d, *p), {}};
    } else {
      verdict.status = StabilityStatus::CertifiedStable;
    }
    return verdict;
  }
  std::vector<std::pair<std::pair<int, int>, MultiPoly>> deltas;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) deltas.push_back({{i, j}, delta_ij(f, i, j)});
  RationalSampler sampler(seed);
  verdict.status = StabilityStatus::SampledStable;
  for (int t = 0; t < samples; ++t) {
    const std::vector<Rational> x = sampler.vector(n);
    ++verdict.trials_run;
    for (const auto& [ij, d] : deltas) {
      Rational v = eval(d, x);
      if (v.sign() < 0) {
        verdict.status = StabilityStatus::CertifiedUnstable;
        verdict.witness = StabilityWitness{StabilityWitness::Kind::NegativeDelta, x, {}, ij.first, ij.second, v, {}};
        verdict.witness_trial = t;
        return verdict;
      }
    }
  }
  return verdict;
}

StabilityVerdict line_restriction_test(const MultiPoly& f, int trials, std::uint64_t seed) {
  if (f.is_zero()) throw std::invalid_argument("line restriction test: zero polynomial");
  StabilityVerdict verdict;
  verdict.trials_requested = trials;
  verdict.seed = seed;
  verdict.status = StabilityStatus::SampledStable;
  RationalSampler sampler(seed);
  const int n = f.nvars();
  for (int t = 0; t < trials; ++t) {
    std::vector<Rational> base = sampler.vector(n);
    std::vector<Rational> dir = sampler.positive_vector(n);
    ++verdict.trials_run;
    UniPoly g = restrict_to_line(f, base, dir);
    if (hyperbolicity(g) != Hyperbolicity::Hyperbolic) {
      verdict.status = StabilityStatus::CertifiedUnstable;
      const auto kind = g.is_zero() ? StabilityWitness::Kind::VanishingLine
                                    : StabilityWitness::Kind::NonrealLineRoot;
      verdict.witness = StabilityWitness{kind, std::move(base), std::move(dir), -1, -1, Rational(0), std::move(g)};
      verdict.witness_trial = t;
      return verdict;
    }
  }
  return verdict;
}

bool hermite_biehler_stable(const UniPoly& f, const UniPoly& g) {
  if (f.is_zero() && g.is_zero()) throw std::invalid_argument("Hermite-Biehler: both parts are zero");
  for (const UniPoly* p : {&f, &g})
    if (hyperbolicity(*p) == Hyperbolicity::NotHyperbolic) return false;
  if (!interlaces(f, g)) return false;
  return is_globally_nonnegative(f.derivative() * g - f * g.derivative());
}

MultiPoly gws_lift(const UniPoly& p, int n) {
  if (n < 0 || p.degree() > n)
    throw std::invalid_argument("gws_lift: degree " + std::to_string(p.degree()) + " exceeds " + std::to_string(n));
  if (n > 24) throw std::invalid_argument("gws_lift: too many variables");
  MultiPoly out(n);
  ExponentVector e(static_cast<std::size_t>(n));
  for (std::uint32_t s = 0; s < (1u << n); ++s) {
    const int k = std::popcount(s);
    if (k > p.degree()) continue;
    const Rational a = p.coeff(k);
    if (a.is_zero()) continue;
    for (int i = 0; i < n; ++i) e[static_cast<std::size_t>(i)] = static_cast<int>((s >> i) & 1u);
    out.add_term(e, a / Rational(binomial(n, k)));
  }
  return out;
}

StabilityVerdict hyperbolic_in_direction(const MultiPoly& p, const std::vector<Rational>& e,
                                         int trials, std::uint64_t seed) {
  if (!p.is_homogeneous()) throw std::invalid_argument("direction test: polynomial is not homogeneous");
  if (static_cast<int>(e.size()) != p.nvars()) throw std::invalid_argument("direction test: dimension mismatch");
  if (eval(p, e).is_zero()) throw std::invalid_argument("direction test: p(e) = 0");
  StabilityVerdict verdict;
  verdict.trials_requested = trials;
  verdict.seed = seed;
  verdict.status = StabilityStatus::SampledStable;
  RationalSampler sampler(seed);
  for (int t = 0; t < trials; ++t) {
    std::vector<Rational> alpha = sampler.vector(p.nvars());
    ++verdict.trials_run;
    UniPoly g = restrict_to_line(p, alpha, e);
    if (!is_hyperbolic(g)) {
      verdict.status = StabilityStatus::CertifiedUnstable;
      verdict.witness = StabilityWitness{StabilityWitness::Kind::NonrealLineRoot, std::move(alpha), e, -1, -1, Rational(0), std::move(g)};
      verdict.witness_trial = t;
      return verdict;
    }
  }
  return verdict;
}

}  // namespace mixeddet
