#include "mixeddet/matcore.hpp"

#include <cassert>

namespace mixeddet {

std::pair<DenseMatrix<GaussianInteger>, Integer> clear_denominators(const ComplexMatrix& m) {
  Integer scale(1);
  for (Index i = 0; i < m.rows(); ++i) {
    for (Index j = 0; j < m.cols(); ++j) {
      scale = boost::multiprecision::lcm(scale, denominator(m(i, j).re()));
      scale = boost::multiprecision::lcm(scale, denominator(m(i, j).im()));
    }
  }
  DenseMatrix<GaussianInteger> out(m.rows(), m.cols());
  const Rational s(scale);
  for (Index i = 0; i < m.rows(); ++i) {
    for (Index j = 0; j < m.cols(); ++j) {
      const Rational re = m(i, j).re() * s;
      const Rational im = m(i, j).im() * s;
      assert(denominator(re) == 1 && denominator(im) == 1);
      out(i, j) = GaussianInteger(numerator(re), numerator(im));
    }
  }
  return {std::move(out), std::move(scale)};
}

Rational det(const HermitianMatrix& a) {
  const GaussianRational d = determinant(a.dense());
  if (!d.is_real()) throw std::logic_error("determinant of a Hermitian matrix has nonzero imaginary part");
  return d.re();
}

std::string to_string(Definiteness d) {
  switch (d) {
    case Definiteness::PositiveDefinite:
      return "PD";
    case Definiteness::PositiveSemidefinite:
      return "PSD";
    case Definiteness::Indefinite:
      return "INDEFINITE";
  }
  return "INDEFINITE";
}

Definiteness definiteness_by_elimination(const HermitianMatrix& a) {
  ComplexMatrix m = a.dense();
  const Index n = m.rows();
  std::vector<bool> eliminated(static_cast<std::size_t>(n), false);
  Index pivots = 0;
  for (;;) {
    Index k = -1;
    bool negative_diagonal = false;
    for (Index i = 0; i < n; ++i) {
      if (eliminated[i]) continue;
      const int s = m(i, i).re().sign();
      if (s > 0 && k < 0) k = i;
      if (s < 0) negative_diagonal = true;
    }
    if (negative_diagonal) return Definiteness::Indefinite;
    if (k < 0) break;
    eliminated[k] = true;
    ++pivots;
    const GaussianRational pivot = m(k, k);
    for (Index i = 0; i < n; ++i) {
      if (eliminated[i] || m(i, k).is_zero()) continue;
      const GaussianRational factor = m(i, k) / pivot;
      for (Index j = 0; j < n; ++j) {
        if (!eliminated[j]) m(i, j) -= factor * m(k, j);
      }
    }
  }
  if (pivots == n) return Definiteness::PositiveDefinite;
  // Remaining block has zero diagonal; PSD forces it to vanish entirely.
  for (Index i = 0; i < n; ++i) {
    if (eliminated[i]) continue;
    for (Index j = 0; j < n; ++j) {
      if (!eliminated[j] && !m(i, j).is_zero()) return Definiteness::Indefinite;
    }
  }
  return Definiteness::PositiveSemidefinite;
}

Definiteness definiteness(const HermitianMatrix& a) {
  const int n = static_cast<int>(a.order());
  bool leading_positive = true;
  for (int k = 1; k <= n && leading_positive; ++k) {
    leading_positive = det(principal_submatrix(a, IndexSet(n, IndexSet::full_mask(k)))) > 0;
  }
  if (leading_positive) return Definiteness::PositiveDefinite;
  if (n > 12) return definiteness_by_elimination(a);
  const MinorTable<GaussianRational> minors = all_principal_minors(a);
  for (const auto& m : minors.values)
    if (m.re().sign() < 0) return Definiteness::Indefinite;
  return Definiteness::PositiveSemidefinite;
}

Pencil::Pencil(std::vector<HermitianMatrix> a, HermitianMatrix b)
    : coeffs(std::move(a)), constant(std::move(b)) {
  for (const auto& m : coeffs) {
    if (m.order() != constant.order())
      throw std::invalid_argument("pencil matrices must share one order");
  }
}

Pencil Pencil::scalar_multiple(const HermitianMatrix& a) {
  return Pencil({a}, HermitianMatrix::zero(a.order()));
}

Pencil Pencil::principal(IndexSet s) const {
  std::vector<HermitianMatrix> sub;
  sub.reserve(coeffs.size());
  for (const auto& m : coeffs) sub.push_back(principal_submatrix(m, s));
  return Pencil(std::move(sub), principal_submatrix(constant, s));
}

HermitianMatrix pencil_eval(const Pencil& pencil, const std::vector<Rational>& z) {
  if (static_cast<int>(z.size()) != pencil.ell())
    throw std::invalid_argument("pencil_eval: expected " + std::to_string(pencil.ell()) +
                                " values, got " + std::to_string(z.size()));
  HermitianMatrix out = pencil.constant;
  for (std::size_t k = 0; k < z.size(); ++k) out = out + scaled(pencil.coeffs[k], z[k]);
  return out;
}

ComplexMatrix gram(const ComplexMatrix& g) {
  ComplexMatrix out = g * adjoint(g);
  return out;
}

}  // namespace mixeddet
