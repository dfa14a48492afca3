#pragma once

// Dense Hermitian matrices over exact (or machine) scalars, principal
// submatrices, fraction-free determinants and linear matrix pencils.

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "mixeddet/scalar.hpp"

namespace mixeddet {

template <typename Scalar>
using DenseMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

using Index = Eigen::Index;

/// Subset of {0, ..., n-1} stored as a bitmask (bit i set <=> i in the set).
class IndexSet {
 public:
  static constexpr int kMaxOrder = 30;

  IndexSet() = default;
  IndexSet(int n, std::uint32_t mask) : n_(n), mask_(mask) {
    if (n < 0 || n > kMaxOrder) throw std::invalid_argument("IndexSet: order out of range");
    if ((mask & ~full_mask(n)) != 0) throw std::invalid_argument("IndexSet: mask exceeds order");
  }
  static IndexSet empty(int n) { return {n, 0}; }
  static IndexSet full(int n) { return {n, full_mask(n)}; }
  static IndexSet of(int n, std::initializer_list<int> elements) {
    std::uint32_t m = 0;
    for (int e : elements) {
      if (e < 0 || e >= n) throw std::invalid_argument("IndexSet: element out of range");
      m |= 1u << e;
    }
    return {n, m};
  }

  int order() const { return n_; }
  std::uint32_t mask() const { return mask_; }
  int size() const { return std::popcount(mask_); }
  bool empty() const { return mask_ == 0; }
  bool contains(int i) const { return (mask_ >> i) & 1u; }

  IndexSet complement() const { return {n_, full_mask(n_) & ~mask_}; }
  IndexSet with(int i) const { return {n_, mask_ | (1u << i)}; }
  IndexSet without(int i) const { return {n_, mask_ & ~(1u << i)}; }

  std::vector<int> elements() const {
    std::vector<int> out;
    for (std::uint32_t m = mask_; m != 0; m &= m - 1) out.push_back(std::countr_zero(m));
    return out;
  }

  friend IndexSet operator|(IndexSet a, IndexSet b) { return {a.n_, a.mask_ | b.mask_}; }
  friend IndexSet operator&(IndexSet a, IndexSet b) { return {a.n_, a.mask_ & b.mask_}; }
  friend bool operator==(IndexSet a, IndexSet b) = default;

  static constexpr std::uint32_t full_mask(int n) {
    return n >= 32 ? ~0u : ((1u << n) - 1u);
  }

 private:
  int n_ = 0;
  std::uint32_t mask_ = 0;
};

template <typename Scalar>
Scalar conjugate(const Scalar& x) {
  if constexpr (std::is_same_v<Scalar, GaussianRational>) {
    return x.conj();
  } else if constexpr (std::is_arithmetic_v<Scalar> || is_exact_v<Scalar>) {
    return x;
  } else {
    return std::conj(x);
  }
}

/// Conjugate transpose (Eigen's adjoint() does not know our complex scalar).
template <typename Derived>
auto adjoint(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  return m.transpose().unaryExpr([](const Scalar& x) { return conjugate(x); }).eval();
}

/// Square matrix with entries(i, j) == conj(entries(j, i)); enforced on construction.
template <typename Scalar>
class BasicHermitian {
 public:
  BasicHermitian() = default;

  /// Validates exact Hermitian symmetry; the error names the first offending entry.
  static BasicHermitian from_dense(DenseMatrix<Scalar> m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("matrix is not square");
    for (Index i = 0; i < m.rows(); ++i) {
      for (Index j = i; j < m.cols(); ++j) {
        if (m(i, j) != conjugate(m(j, i))) {
          throw std::invalid_argument("matrix is not Hermitian at entry (" + std::to_string(i + 1) +
                                      ", " + std::to_string(j + 1) + ")");
        }
      }
    }
    return BasicHermitian(std::move(m));
  }

  /// (M + M*) / 2
  static BasicHermitian symmetrized(const DenseMatrix<Scalar>& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("matrix is not square");
    DenseMatrix<Scalar> h = m;
    const Scalar half = Scalar(1) / Scalar(2);
    for (Index i = 0; i < m.rows(); ++i)
      for (Index j = 0; j < m.cols(); ++j) h(i, j) = (m(i, j) + conjugate(m(j, i))) * half;
    return BasicHermitian(std::move(h));
  }

  static BasicHermitian identity(Index n) {
    return BasicHermitian(DenseMatrix<Scalar>::Identity(n, n));
  }
  static BasicHermitian zero(Index n) { return BasicHermitian(DenseMatrix<Scalar>::Zero(n, n)); }
  static BasicHermitian diagonal(const std::vector<Scalar>& d) {
    const auto n = static_cast<Index>(d.size());
    DenseMatrix<Scalar> m = DenseMatrix<Scalar>::Zero(n, n);
    for (Index i = 0; i < n; ++i) m(i, i) = d[static_cast<std::size_t>(i)];
    return from_dense(std::move(m));
  }

  Index order() const { return m_.rows(); }
  const DenseMatrix<Scalar>& dense() const { return m_; }
  const Scalar& operator()(Index i, Index j) const { return m_(i, j); }

  friend BasicHermitian operator+(const BasicHermitian& a, const BasicHermitian& b) {
    return BasicHermitian(a.m_ + b.m_);
  }
  friend BasicHermitian operator-(const BasicHermitian& a) { return BasicHermitian(-a.m_); }
  friend BasicHermitian operator-(const BasicHermitian& a, const BasicHermitian& b) {
    return BasicHermitian(a.m_ - b.m_);
  }
  /// Scaling by a real factor keeps the matrix Hermitian.
  friend BasicHermitian scaled(const BasicHermitian& a, const Rational& s) {
    return BasicHermitian(a.m_ * Scalar(s));
  }
  friend bool operator==(const BasicHermitian& a, const BasicHermitian& b) {
    return a.m_.rows() == b.m_.rows() && a.m_ == b.m_;
  }

 private:
  explicit BasicHermitian(DenseMatrix<Scalar> m) : m_(std::move(m)) {}
  DenseMatrix<Scalar> m_;
};

using HermitianMatrix = BasicHermitian<GaussianRational>;
using ComplexMatrix = DenseMatrix<GaussianRational>;

/// A[S] for a plain dense matrix.
template <typename Derived>
DenseMatrix<typename Derived::Scalar> principal_submatrix(const Eigen::MatrixBase<Derived>& a,
                                                          IndexSet s) {
  if (a.rows() != a.cols() || s.order() != a.rows())
    throw std::invalid_argument("principal_submatrix: index set order does not match matrix");
  const std::vector<int> idx = s.elements();
  return a(idx, idx);
}

template <typename Scalar>
BasicHermitian<Scalar> principal_submatrix(const BasicHermitian<Scalar>& a, IndexSet s) {
  return BasicHermitian<Scalar>::from_dense(principal_submatrix(a.dense(), s));
}

/// Fraction-free (Bareiss) determinant for exact rings where every Bareiss
/// quotient is exact; partial-pivot LU for floating scalars. det of 0x0 is 1.
template <typename Scalar>
Scalar bareiss_determinant(DenseMatrix<Scalar> m) {
  const Index n = m.rows();
  if (m.cols() != n) throw std::invalid_argument("determinant of a non-square matrix");
  if (n == 0) return Scalar(1);
  bool negate = false;
  Scalar previous(1);
  for (Index k = 0; k + 1 < n; ++k) {
    if (m(k, k) == Scalar(0)) {
      Index pivot = k + 1;
      while (pivot < n && m(pivot, k) == Scalar(0)) ++pivot;
      if (pivot == n) return Scalar(0);
      m.row(k).swap(m.row(pivot));
      negate = !negate;
    }
    for (Index i = k + 1; i < n; ++i) {
      for (Index j = k + 1; j < n; ++j) {
        m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / previous;
      }
    }
    previous = m(k, k);
  }
  Scalar det = m(n - 1, n - 1);
  return negate ? Scalar(-det) : det;
}

/// Multiplies a Gaussian-rational matrix by the lcm of its denominators.
/// Returns the integer matrix and the scale factor.
std::pair<DenseMatrix<GaussianInteger>, Integer> clear_denominators(const ComplexMatrix& m);

template <typename Scalar>
Scalar determinant(const DenseMatrix<Scalar>& m) {
  if constexpr (std::is_same_v<Scalar, GaussianRational>) {
    if (m.rows() == 0) return Scalar(1);
    auto [integral, scale] = clear_denominators(m);
    const GaussianInteger d = bareiss_determinant(std::move(integral));
    Rational denom = Rational(power(scale, static_cast<unsigned>(m.rows())));
    return GaussianRational(Rational(d.re()) / denom, Rational(d.im()) / denom);
  } else if constexpr (is_exact_v<Scalar>) {
    return bareiss_determinant(m);
  } else {
    if (m.rows() == 0) return Scalar(1);
    return m.partialPivLu().determinant();
  }
}

/// Exact determinant of a Hermitian matrix; the imaginary part is zero.
Rational det(const HermitianMatrix& a);

enum class Definiteness {
  PositiveDefinite,
  PositiveSemidefinite,
  /// Indefinite, or negative (semi)definite.
  Indefinite,
};

std::string to_string(Definiteness d);

/// PD by leading principal minors; PSD by all principal minors (n <= 12) or by
/// symmetric-pivot elimination above that.
Definiteness definiteness(const HermitianMatrix& a);
/// Elimination-only PSD/PD decision, exposed so the two routes can be compared.
Definiteness definiteness_by_elimination(const HermitianMatrix& a);

/// values[mask] = det(A[S]) for every subset S, values[0] = 1.
template <typename Scalar>
struct MinorTable {
  int n = 0;
  std::vector<Scalar> values;

  const Scalar& operator[](IndexSet s) const { return values[s.mask()]; }
  const Scalar& at(std::uint32_t mask) const { return values[mask]; }
};

template <typename Scalar>
MinorTable<Scalar> all_principal_minors(const DenseMatrix<Scalar>& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("all_principal_minors: non-square");
  const int n = static_cast<int>(a.rows());
  if (n > 24) throw std::invalid_argument("all_principal_minors: order too large");
  MinorTable<Scalar> table{n, std::vector<Scalar>(std::size_t{1} << n)};
  if constexpr (std::is_same_v<Scalar, GaussianRational>) {
    // Clear once; each minor of order k divides by scale^k.
    auto [integral, scale] = clear_denominators(a);
    std::vector<Rational> scale_power(static_cast<std::size_t>(n) + 1, Rational(1));
    for (int k = 1; k <= n; ++k) scale_power[k] = scale_power[k - 1] * Rational(scale);
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
      const IndexSet s(n, mask);
      const GaussianInteger d = bareiss_determinant(principal_submatrix(integral, s));
      const Rational& denom = scale_power[s.size()];
      table.values[mask] = GaussianRational(Rational(d.re()) / denom, Rational(d.im()) / denom);
    }
  } else {
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask)
      table.values[mask] = determinant(principal_submatrix(a, IndexSet(n, mask)));
  }
  return table;
}

template <typename Scalar>
MinorTable<Scalar> all_principal_minors(const BasicHermitian<Scalar>& a) {
  return all_principal_minors(a.dense());
}

/// L(z) = sum_k z_k A_k + B.
struct Pencil {
  std::vector<HermitianMatrix> coeffs;
  HermitianMatrix constant;

  Pencil() = default;
  Pencil(std::vector<HermitianMatrix> a, HermitianMatrix b);

  int ell() const { return static_cast<int>(coeffs.size()); }
  Index order() const { return constant.order(); }

  /// z * A: one variable, no constant term.
  static Pencil scalar_multiple(const HermitianMatrix& a);
  Pencil principal(IndexSet s) const;
};

HermitianMatrix pencil_eval(const Pencil& pencil, const std::vector<Rational>& z);

/// G * G^*
ComplexMatrix gram(const ComplexMatrix& g);

}  // namespace mixeddet
