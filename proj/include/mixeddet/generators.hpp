#pragma once

// Seeded random instance generators for the verification suites.
//   PSD        = G G^*           (G may be rank deficient)
//   PD         = G G^* + I
//   Hermitian  = (H + H^*) / 2
// Entry numerators lie in [-bound, bound], denominators in [1, bound].

#include <cstdint>
#include <random>

#include "mixeddet/matcore.hpp"
#include "mixeddet/unipoly.hpp"

namespace mixeddet {

class InstanceGenerator {
 public:
  explicit InstanceGenerator(std::uint64_t seed, int bound = 10) : rng_(seed), bound_(bound) {}

  Rational rational();
  GaussianRational gaussian();
  /// rows x cols with Gaussian-rational entries; `real` drops imaginary parts.
  ComplexMatrix matrix(Index rows, Index cols, bool real = false);

  /// G G^* with G of size n x rank.
  HermitianMatrix psd(Index n, Index rank);
  HermitianMatrix psd(Index n) { return psd(n, n); }
  HermitianMatrix pd(Index n);
  HermitianMatrix hermitian(Index n);
  /// Hermitian with determinant zero: G D G^* with D = diag(+-1, ..., 0).
  HermitianMatrix singular_hermitian(Index n);
  /// prod (z - r_k) with rational roots.
  UniPoly hyperbolic_polynomial(int degree);

  int uniform_int(int lo, int hi);
  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
  int bound_;
};

/// Seed for the k-th instance of a batch, decorrelated from neighbours.
std::uint64_t instance_seed(std::uint64_t base, std::uint64_t k);

}  // namespace mixeddet
