#include "mixeddet/generators.hpp"

namespace mixeddet {

int InstanceGenerator::uniform_int(int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng_);
}

Rational InstanceGenerator::rational() {
  const int p = uniform_int(-bound_, bound_);
  const int q = uniform_int(1, bound_);
  return Rational(p, q);
}

GaussianRational InstanceGenerator::gaussian() {
  Rational re = rational();
  Rational im = rational();
  return {std::move(re), std::move(im)};
}

ComplexMatrix InstanceGenerator::matrix(Index rows, Index cols, bool real) {
  ComplexMatrix m(rows, cols);
  for (Index i = 0; i < rows; ++i)
    for (Index j = 0; j < cols; ++j) m(i, j) = real ? GaussianRational(rational()) : gaussian();
  return m;
}

HermitianMatrix InstanceGenerator::psd(Index n, Index rank) {
  if (rank == 0) return HermitianMatrix::zero(n);
  return HermitianMatrix::from_dense(gram(matrix(n, rank)));
}

HermitianMatrix InstanceGenerator::pd(Index n) { return psd(n) + HermitianMatrix::identity(n); }

HermitianMatrix InstanceGenerator::hermitian(Index n) { return HermitianMatrix::symmetrized(matrix(n, n)); }

HermitianMatrix InstanceGenerator::singular_hermitian(Index n) {
  if (n == 0) return HermitianMatrix::zero(0);
  const Index rank = uniform_int(0, static_cast<int>(n) - 1);
  const ComplexMatrix g = matrix(n, n);
  ComplexMatrix d = ComplexMatrix::Zero(n, n);
  for (Index k = 0; k < rank; ++k) d(k, k) = GaussianRational(uniform_int(0, 1) == 0 ? -1 : 1);
  return HermitianMatrix::from_dense(g * d * adjoint(g));
}

UniPoly InstanceGenerator::hyperbolic_polynomial(int degree) {
  std::vector<Rational> roots;
  for (int k = 0; k < degree; ++k) roots.push_back(rational());
  UniPoly p = UniPoly::from_roots(roots);
  const Rational scale(uniform_int(1, bound_) * (uniform_int(0, 1) == 0 ? -1 : 1));
  return p * scale;
}

std::uint64_t instance_seed(std::uint64_t base, std::uint64_t k) {
  // splitmix64 step
  std::uint64_t z = base + 0x9E3779B97F4A7C15ull * (k + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

}  // namespace mixeddet
