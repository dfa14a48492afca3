#include "mixeddet/mixeddet.hpp"

#include <bit>

namespace mixeddet {

FloatHermitian to_floating(const HermitianMatrix& a) {
  DenseMatrix<std::complex<double>> m(a.order(), a.order());
  for (Index i = 0; i < a.order(); ++i)
    for (Index j = 0; j < a.order(); ++j) m(i, j) = to_complex_double(a(i, j));
  return FloatHermitian::from_dense(std::move(m));
}

UniPoly eta_char(const HermitianMatrix& a, const HermitianMatrix& b) {
  if (a.order() != b.order()) throw std::invalid_argument("eta_char: matrix orders differ");
  const int n = static_cast<int>(a.order());
  const MinorTable<GaussianRational> ma = all_principal_minors(a);
  const MinorTable<GaussianRational> mb = all_principal_minors(b);
  const std::uint32_t full = IndexSet::full_mask(n);
  std::vector<Rational> coeffs(static_cast<std::size_t>(n) + 1, Rational(0));
  for (std::uint32_t s = 0; s <= full; ++s) {
    const int k = std::popcount(s);
    Rational term = ma.at(s).re() * mb.at(full & ~s).re();
    if ((n - k) % 2 == 1) term = -term;
    coeffs[static_cast<std::size_t>(k)] += term;
  }
  return UniPoly(std::move(coeffs));
}

namespace {

/// Polynomial with Gaussian-rational coefficients, stored as re + i*im.
struct ComplexPoly {
  MultiPoly re;
  MultiPoly im;

  explicit ComplexPoly(int nvars) : re(nvars), im(nvars) {}

  ComplexPoly& operator+=(const ComplexPoly& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  ComplexPoly& operator-=(const ComplexPoly& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  friend ComplexPoly operator*(const ComplexPoly& a, const ComplexPoly& b) {
    ComplexPoly out(a.re.nvars());
    out.re = a.re * b.re;
    out.im = a.re * b.im;
    if (!a.im.is_zero()) {
      out.re -= a.im * b.im;
      out.im += a.im * b.re;
    }
    return out;
  }
};

ComplexPoly pencil_entry(const Pencil& pencil, Index r, Index c) {
  const int ell = pencil.ell();
  ComplexPoly out(ell);
  const GaussianRational& b = pencil.constant(r, c);
  out.re = MultiPoly::constant(ell, b.re());
  out.im = MultiPoly::constant(ell, b.im());
  for (int k = 0; k < ell; ++k) {
    const GaussianRational& a = pencil.coeffs[static_cast<std::size_t>(k)](r, c);
    const MultiPoly z = MultiPoly::variable(ell, k);
    out.re += z * a.re();
    out.im += z * a.im();
  }
  return out;
}

/// Laplace expansion along successive rows, memoized over column subsets.
MultiPoly symbolic_principal_minor(const std::vector<std::vector<ComplexPoly>>& entries,
                                   const std::vector<int>& idx, int ell) {
  const int s = static_cast<int>(idx.size());
  if (s == 0) return MultiPoly::constant(ell, Rational(1));
  std::vector<ComplexPoly> dp(std::size_t{1} << s, ComplexPoly(ell));
  dp[0].re = MultiPoly::constant(ell, Rational(1));
  for (std::uint32_t cols = 1; cols < (1u << s); ++cols) {
    const int row = s - std::popcount(cols);
    ComplexPoly acc(ell);
    int before = 0;
    for (int c = 0; c < s; ++c) {
      if (!((cols >> c) & 1u)) continue;
      const ComplexPoly& prev = dp[cols & ~(1u << c)];
      if (!prev.re.is_zero() || !prev.im.is_zero()) {
        const ComplexPoly term =
            entries[static_cast<std::size_t>(idx[row])][static_cast<std::size_t>(idx[c])] * prev;
        if (before % 2 == 0) {
          acc += term;
        } else {
          acc -= term;
        }
      }
      ++before;
    }
    dp[cols] = std::move(acc);
  }
  const ComplexPoly& det = dp.back();
  if (!det.im.is_zero()) throw std::logic_error("principal minor of a Hermitian pencil is not real");
  return det.re;
}

void check_pencils(const std::vector<Pencil>& pencils) {
  if (pencils.empty()) throw std::invalid_argument("eta_pencil: no pencils");
  for (const auto& p : pencils) {
    if (p.ell() != pencils.front().ell() || p.order() != pencils.front().order())
      throw std::invalid_argument("eta_pencil: pencils differ in order or variable count");
  }
}

MultiPoly eta_pencil_symbolic(const std::vector<Pencil>& pencils) {
  const int n = static_cast<int>(pencils.front().order());
  const int ell = pencils.front().ell();
  std::vector<std::vector<MultiPoly>> tables;
  for (const auto& p : pencils) {
    std::vector<MultiPoly> t = pencil_minor_polynomials(p);
    for (std::uint32_t s = 0; s < t.size(); ++s)
      if (std::popcount(s) % 2 == 1) t[s] = -t[s];
    tables.push_back(std::move(t));
  }
  return eta_from_signed_tables(std::move(tables), n, MultiPoly(ell));
}

MultiPoly eta_pencil_interpolated(const std::vector<Pencil>& pencils) {
  const int n = static_cast<int>(pencils.front().order());
  const int ell = pencils.front().ell();
  const int nodes = n + 1;
  std::size_t grid = 1;
  for (int k = 0; k < ell; ++k) grid *= static_cast<std::size_t>(nodes);

  // values[idx] with idx = sum_k x_k * nodes^k
  std::vector<Rational> values(grid);
  std::vector<Rational> point(static_cast<std::size_t>(ell));
  for (std::size_t idx = 0; idx < grid; ++idx) {
    std::size_t rest = idx;
    for (int k = 0; k < ell; ++k) {
      point[static_cast<std::size_t>(k)] = Rational(static_cast<long>(rest % nodes));
      rest /= nodes;
    }
    std::vector<HermitianMatrix> evaluated;
    for (const auto& p : pencils) evaluated.push_back(pencil_eval(p, point));
    values[idx] = eta_fast(evaluated).re();
  }

  // basis[i] = coefficients of the Lagrange polynomial for node i.
  std::vector<std::vector<Rational>> basis;
  for (int i = 0; i < nodes; ++i) {
    UniPoly l = UniPoly::constant(Rational(1));
    for (int j = 0; j < nodes; ++j)
      if (j != i) l = l * UniPoly{Rational(-j), Rational(1)} * (Rational(1) / Rational(i - j));
    std::vector<Rational> c(static_cast<std::size_t>(nodes), Rational(0));
    for (int k = 0; k <= l.degree(); ++k) c[static_cast<std::size_t>(k)] = l.coeff(k);
    basis.push_back(std::move(c));
  }

  std::size_t stride = 1;
  std::vector<Rational> fiber(static_cast<std::size_t>(nodes));
  for (int axis = 0; axis < ell; ++axis) {
    for (std::size_t base = 0; base < grid; ++base) {
      if ((base / stride) % nodes != 0) continue;
      for (int i = 0; i < nodes; ++i) fiber[static_cast<std::size_t>(i)] = values[base + i * stride];
      for (int k = 0; k < nodes; ++k) {
        Rational acc(0);
        for (int i = 0; i < nodes; ++i) acc += fiber[static_cast<std::size_t>(i)] * basis[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)];
        values[base + k * stride] = acc;
      }
    }
    stride *= static_cast<std::size_t>(nodes);
  }

  MultiPoly out(ell);
  ExponentVector e(static_cast<std::size_t>(ell));
  for (std::size_t idx = 0; idx < grid; ++idx) {
    if (values[idx].is_zero()) continue;
    std::size_t rest = idx;
    for (int k = 0; k < ell; ++k) {
      e[static_cast<std::size_t>(k)] = static_cast<int>(rest % nodes);
      rest /= nodes;
    }
    out.add_term(e, values[idx]);
  }
  return out;
}

}  // namespace

std::vector<MultiPoly> pencil_minor_polynomials(const Pencil& pencil) {
  const int n = static_cast<int>(pencil.order());
  const int ell = pencil.ell();
  std::vector<std::vector<ComplexPoly>> entries(static_cast<std::size_t>(n));
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) entries[static_cast<std::size_t>(r)].push_back(pencil_entry(pencil, r, c));
  std::vector<MultiPoly> out;
  out.reserve(std::size_t{1} << n);
  for (std::uint32_t s = 0; s < (1u << n); ++s)
    out.push_back(symbolic_principal_minor(entries, IndexSet(n, s).elements(), ell));
  return out;
}

MultiPoly eta_pencil(const std::vector<Pencil>& pencils, PencilMethod method) {
  check_pencils(pencils);
  if (method == PencilMethod::Automatic)
    method = pencils.front().order() <= 8 ? PencilMethod::Symbolic : PencilMethod::Interpolation;
  return method == PencilMethod::Symbolic ? eta_pencil_symbolic(pencils) : eta_pencil_interpolated(pencils);
}

MultiPoly eta_pencil_augmented(const std::vector<Pencil>& pencils, int j, PencilMethod method) {
  check_pencils(pencils);
  const Index n = pencils.front().order();
  if (j < 0 || j >= n) throw std::invalid_argument("eta_pencil_augmented: index out of range");
  const HermitianMatrix zero = HermitianMatrix::zero(n);
  std::vector<Pencil> extended;
  std::vector<HermitianMatrix> v_coeffs(static_cast<std::size_t>(pencils.front().ell()), zero);
  ComplexMatrix ejj = ComplexMatrix::Zero(n, n);
  ejj(j, j) = GaussianRational(1);
  v_coeffs.push_back(HermitianMatrix::from_dense(ejj));
  extended.emplace_back(std::move(v_coeffs), zero);
  for (const auto& p : pencils) {
    std::vector<HermitianMatrix> c = p.coeffs;
    c.push_back(zero);
    extended.emplace_back(std::move(c), p.constant);
  }
  return eta_pencil(extended, method);
}

MultiPoly scaled_copies_eta(const HermitianMatrix& a, int copies) {
  if (copies < 1) throw std::invalid_argument("scaled_copies_eta: need at least one copy");
  const HermitianMatrix zero = HermitianMatrix::zero(a.order());
  std::vector<Pencil> pencils;
  for (int j = 0; j < copies; ++j) {
    std::vector<HermitianMatrix> c(static_cast<std::size_t>(copies), zero);
    c[static_cast<std::size_t>(j)] = a;
    pencils.emplace_back(std::move(c), zero);
  }
  return eta_pencil(pencils, PencilMethod::Symbolic);
}

}  // namespace mixeddet
