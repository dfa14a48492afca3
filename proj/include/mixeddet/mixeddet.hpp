#pragma once

// Mixed determinants
//
//   eta(A_1, ..., A_m) = sum over ordered partitions (S_1, ..., S_m) of
//                        {1..n} of det(A_1[S_1]) * ... * det(A_m[S_m]),
//
// by direct enumeration (reference route) and by subset convolution of the
// per-matrix principal-minor tables, where eta is (-1)^n times the
// w_1...w_n coefficient of prod_j det(I - W A_j), W = diag(w).

#include <complex>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "mixeddet/matcore.hpp"
#include "mixeddet/multipoly.hpp"
#include "mixeddet/subset_convolution.hpp"
#include "mixeddet/unipoly.hpp"

namespace mixeddet {

using FloatHermitian = BasicHermitian<std::complex<double>>;

FloatHermitian to_floating(const HermitianMatrix& a);

namespace detail {

template <typename Scalar>
Index common_order(const std::vector<BasicHermitian<Scalar>>& matrices) {
  if (matrices.empty()) throw std::invalid_argument("mixed determinant of an empty tuple");
  const Index n = matrices.front().order();
  for (const auto& m : matrices)
    if (m.order() != n) throw std::invalid_argument("mixed determinant: matrix orders differ");
  return n;
}

}  // namespace detail

/// Reference enumeration over all m^n block assignments. Minors are computed
/// directly from det(A_j[S_j]) on first use.
template <typename Scalar>
Scalar eta_naive(const std::vector<BasicHermitian<Scalar>>& matrices) {
  const int n = static_cast<int>(detail::common_order(matrices));
  const std::size_t m = matrices.size();
  std::vector<std::vector<std::optional<Scalar>>> cache(m, std::vector<std::optional<Scalar>>(std::size_t{1} << n));
  auto minor = [&](std::size_t j, std::uint32_t mask) -> const Scalar& {
    auto& slot = cache[j][mask];
    if (!slot) slot = determinant(principal_submatrix(matrices[j].dense(), IndexSet(n, mask)));
    return *slot;
  };
  std::vector<std::size_t> block(static_cast<std::size_t>(n), 0);
  std::vector<std::uint32_t> masks(m);
  Scalar total(0);
  for (;;) {
    std::fill(masks.begin(), masks.end(), 0u);
    for (int i = 0; i < n; ++i) masks[block[static_cast<std::size_t>(i)]] |= 1u << i;
    Scalar term(1);
    for (std::size_t j = 0; j < m && term != Scalar(0); ++j) term *= minor(j, masks[j]);
    total += term;
    int pos = 0;
    while (pos < n && ++block[static_cast<std::size_t>(pos)] == m) block[static_cast<std::size_t>(pos++)] = 0;
    if (pos == n) break;
  }
  return total;
}

/// Signed minor table (-1)^{|S|} det(A[S]), the coefficient vector of det(I - W A).
template <typename Scalar>
std::vector<Scalar> signed_minor_table(const MinorTable<Scalar>& minors) {
  std::vector<Scalar> out = minors.values;
  for (std::uint32_t s = 0; s < out.size(); ++s)
    if (std::popcount(s) % 2 == 1) out[s] = -out[s];
  return out;
}

/// Combines signed tables of m factors and extracts the full-set coefficient
/// with the (-1)^n correction.
template <typename T>
T eta_from_signed_tables(std::vector<std::vector<T>> tables, int n, const T& zero) {
  if (tables.empty()) throw std::invalid_argument("mixed determinant of an empty tuple");
  T full = zero;
  if (tables.size() == 1) {
    full = tables.front().back();
  } else {
    std::vector<T> acc = std::move(tables.front());
    for (std::size_t j = 1; j + 1 < tables.size(); ++j) acc = subset_convolution(acc, tables[j], n, zero);
    full = subset_convolution_full(acc, tables.back(), n, zero);
  }
  if (n % 2 == 1) full = zero - full;
  return full;
}

template <typename Scalar>
Scalar eta_fast(const std::vector<BasicHermitian<Scalar>>& matrices) {
  const int n = static_cast<int>(detail::common_order(matrices));
  std::vector<std::vector<Scalar>> tables;
  tables.reserve(matrices.size());
  for (const auto& a : matrices) tables.push_back(signed_minor_table(all_principal_minors(a)));
  return eta_from_signed_tables(std::move(tables), n, Scalar(0));
}

/// eta(zA, -B) = sum_S z^{|S|} det(A[S]) (-1)^{n-|S|} det(B[S']). May be zero.
UniPoly eta_char(const HermitianMatrix& a, const HermitianMatrix& b);

/// det(zI - B), as eta(zI, -B).
inline UniPoly characteristic_polynomial(const HermitianMatrix& b) {
  return eta_char(HermitianMatrix::identity(b.order()), b);
}

enum class PencilMethod {
  /// Symbolic for n <= 8, interpolation above.
  Automatic,
  /// Minor recursion on polynomial entries, then subset convolution of polynomial tables.
  Symbolic,
  /// Exact evaluation on the grid {0..n}^ell followed by tensor interpolation.
  Interpolation,
};

/// eta(L_1, ..., L_m) as a polynomial in the ell pencil variables.
MultiPoly eta_pencil(const std::vector<Pencil>& pencils, PencilMethod method = PencilMethod::Automatic);

/// eta(L_1, ..., L_m) + v * eta(L_1[{j}'], ..., L_m[{j}']) in ell + 1 variables, v last,
/// computed as eta(V_j, L_1, ..., L_m) with V_j = v * E_jj. j is 0-based.
MultiPoly eta_pencil_augmented(const std::vector<Pencil>& pencils, int j,
                               PencilMethod method = PencilMethod::Automatic);

/// det(L[S]) for every S, as real polynomials in the pencil variables.
std::vector<MultiPoly> pencil_minor_polynomials(const Pencil& pencil);

/// f = eta(z_1 A, ..., z_k A): homogeneous of degree n; its z^alpha coefficient is S_alpha(A).
MultiPoly scaled_copies_eta(const HermitianMatrix& a, int copies);

}  // namespace mixeddet
