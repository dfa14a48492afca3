#pragma once

// Real-stability predicates with an honest verdict taxonomy: exact certificates
// where a decision procedure exists, sampled verdicts elsewhere, and a
// concrete witness for every instability claim.

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "mixeddet/multipoly.hpp"
#include "mixeddet/unipoly.hpp"

namespace mixeddet {

enum class StabilityStatus { CertifiedUnstable, SampledStable, CertifiedStable };

std::string to_string(StabilityStatus s);

struct StabilityWitness {
  enum class Kind {
    /// Delta_ij(point) < 0.
    NegativeDelta,
    /// f(base + direction * t) has a nonreal root (restriction recorded).
    NonrealLineRoot,
    /// f vanishes identically on the line base + direction * t.
    VanishingLine,
  };
  Kind kind = Kind::NegativeDelta;
  std::vector<Rational> point;      // delta point, or line base
  std::vector<Rational> direction;  // line direction (NonrealLineRoot only)
  int i = -1;
  int j = -1;
  Rational value{0};  // Delta_ij(point) for NegativeDelta
  UniPoly restriction;
};

struct StabilityVerdict {
  StabilityStatus status = StabilityStatus::SampledStable;
  std::optional<StabilityWitness> witness;
  int trials_requested = 0;
  int trials_run = 0;
  /// Trial index that produced the witness, -1 for exact decisions or none.
  int witness_trial = -1;
  std::uint64_t seed = 0;
};

/// Draws rationals p/q with p uniform in [-bound, bound], q uniform in [1, bound].
class RationalSampler {
 public:
  explicit RationalSampler(std::uint64_t seed, int bound = 100) : rng_(seed), bound_(bound) {}
  Rational any();
  /// Strictly positive.
  Rational positive();
  std::vector<Rational> vector(int n);
  std::vector<Rational> positive_vector(int n);

 private:
  std::mt19937_64 rng_;
  int bound_;
};

/// d_i f * d_j f - f * d_i d_j f. Throws std::invalid_argument for
/// non-multi-affine f or i == j.
MultiPoly delta_ij(const MultiPoly& f, int i, int j);

/// Samples Delta_ij at `samples` points over all pairs i < j. With two or fewer
/// variables the decision is exact.
StabilityVerdict multiaffine_stability_check(const MultiPoly& f, int samples, std::uint64_t seed);

/// Exact decision of Delta_12 >= 0 on R^2 for a bivariate f whose Delta has
/// degree <= 2 in each variable. Returns a negativity point, if any.
std::optional<std::vector<Rational>> bivariate_negativity_witness(const MultiPoly& delta);

/// Checks hyperbolicity of t -> f(alpha + v t) for random alpha and positive v.
StabilityVerdict line_restriction_test(const MultiPoly& f, int trials, std::uint64_t seed);

/// f + i g is stable: both hyperbolic (or zero), interlacing, and f'g - fg' >= 0 on R.
bool hermite_biehler_stable(const UniPoly& f, const UniPoly& g);

/// sum_k a_k binom(n, k)^{-1} e_k(z_1, ..., z_n)
MultiPoly gws_lift(const UniPoly& p, int n);

/// Garding hyperbolicity of homogeneous p along e, sampled over alpha.
StabilityVerdict hyperbolic_in_direction(const MultiPoly& p, const std::vector<Rational>& e,
                                         int trials, std::uint64_t seed);

}  // namespace mixeddet
