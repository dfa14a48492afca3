#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <numeric>

#include "mixeddet/generators.hpp"
#include "mixeddet/mixeddet.hpp"
#include "mixeddet/subset_convolution.hpp"
#include "mixeddet/theorems.hpp"
#include "support.hpp"

using namespace testing;

namespace {

std::vector<HermitianMatrix> random_tuple(InstanceGenerator& gen, int n, int m) {
  std::vector<HermitianMatrix> out;
  for (int j = 0; j < m; ++j) out.push_back(gen.hermitian(n));
  return out;
}

HermitianMatrix permuted(const HermitianMatrix& a, const std::vector<int>& perm) {
  const Index n = a.order();
  ComplexMatrix m(n, n);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) m(i, j) = a(perm[i], perm[j]);
  return HermitianMatrix::from_dense(m);
}

MultiPoly var(int nvars, int j) { return MultiPoly::variable(nvars, j); }

}  // namespace

TEST_CASE("subset convolution against direct enumeration") {
  std::mt19937_64 rng(5);
  for (int n = 0; n <= 6; ++n) {
    const std::size_t size = std::size_t{1} << n;
    std::vector<Rational> f(size), g(size);
    for (auto& x : f) x = Rational(static_cast<long long>(rng() % 21) - 10);
    for (auto& x : g) x = Rational(static_cast<long long>(rng() % 21) - 10);
    const auto h = subset_convolution(f, g, n, Rational(0));
    bool ok = true;
    for (std::uint32_t s = 0; s < size; ++s) {
      Rational direct(0);
      for (std::uint32_t t = s;; t = (t - 1) & s) {
        direct += f[t] * g[s ^ t];
        if (t == 0) break;
      }
      ok = ok && direct == h[s];
    }
    CHECK(ok);
    CHECK(subset_convolution_full(f, g, n, Rational(0)) == h[size - 1]);
  }
}

TEST_CASE("mixed determinant examples") {
  const auto i2 = HermitianMatrix::identity(2);
  CHECK(eta_naive<GaussianRational>({i2, i2, i2}) == GaussianRational(9));
  CHECK(eta_fast<GaussianRational>({i2, i2, i2}) == GaussianRational(9));
  CHECK(eta_naive<GaussianRational>({diag({1, 0}), diag({0, 1})}) == GaussianRational(1));
  CHECK(eta_fast<GaussianRational>({diag({1, 0}), diag({0, 1})}) == GaussianRational(1));
  CHECK(eta_fast<GaussianRational>({i2, i2}) == GaussianRational(4));
  CHECK(eta_fast<GaussianRational>({diag({2, 3}), diag({5, 7})}) == GaussianRational(70));
  CHECK(eta_naive<GaussianRational>({diag({2, 3}), diag({5, 7})}) == GaussianRational(70));
  for (int n = 1; n <= 5; ++n)
    for (int m = 1; m <= 4; ++m) {
      std::vector<HermitianMatrix> ms(m, HermitianMatrix::identity(n));
      CHECK(eta_fast(ms) == GaussianRational(static_cast<long long>(std::pow(m, n))));
    }
  // one matrix: its determinant
  const auto a = real_matrix({{1, 2}, {2, 1}});
  CHECK(eta_fast<GaussianRational>({a}) == GaussianRational(-3));
  CHECK_THROWS_AS(eta_fast<GaussianRational>({i2, HermitianMatrix::identity(3)}), std::invalid_argument);
  CHECK_THROWS_AS(eta_naive<GaussianRational>({}), std::invalid_argument);
}

TEST_CASE("fast and naive agree") {
  InstanceGenerator gen(101);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 1 + trial % 6, m = 1 + trial % 3;
    const auto ms = random_tuple(gen, n, m);
    const GaussianRational fast = eta_fast(ms);
    CHECK(fast == eta_naive(ms));
    CHECK(fast.is_real());
  }
}

TEST_CASE("floating mode tracks exact values") {
  InstanceGenerator gen(103);
  for (int trial = 0; trial < 20; ++trial) {
    const auto ms = random_tuple(gen, 5, 2);
    std::vector<FloatHermitian> fs;
    for (const auto& m : ms) fs.push_back(to_floating(m));
    const double exact = to_complex_double(eta_fast(ms)).real();
    CHECK(std::abs(eta_fast(fs).real() - exact) <= 1e-8 * (1 + std::abs(exact)));
    CHECK(std::abs(eta_naive(fs).real() - exact) <= 1e-8 * (1 + std::abs(exact)));
  }
}

TEST_CASE("invariance under relabeling and reordering") {
  InstanceGenerator gen(107);
  for (int trial = 0; trial < 10; ++trial) {
    const int n = 2 + trial % 4;
    auto ms = random_tuple(gen, n, 3);
    const GaussianRational base = eta_fast(ms);
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), gen.engine());
    std::vector<HermitianMatrix> relabeled;
    for (const auto& m : ms) relabeled.push_back(permuted(m, perm));
    CHECK(eta_fast(relabeled) == base);
    std::reverse(ms.begin(), ms.end());
    CHECK(eta_fast(ms) == base);
  }
}

TEST_CASE("eta_char") {
  CHECK(eta_char(HermitianMatrix::identity(2), diag({2, 3})) == poly({6, -5, 1}));
  const auto b = real_matrix({{1, 2}, {2, 1}});
  CHECK(eta_char(HermitianMatrix::zero(2), b) == poly({-3}));
  CHECK(eta_char(HermitianMatrix::zero(3), diag({1, 2, 3})) == poly({-6}));
  CHECK(eta_char(HermitianMatrix::zero(2), HermitianMatrix::zero(2)).is_zero());

  const auto a = diag({1, 0});
  const auto bb = diag({0, 1});
  const UniPoly p = eta_char(a, bb);
  for (long long zv : {-2, 1, 5}) {
    const Rational zq(zv);
    CHECK(p(zq) == eta_naive<GaussianRational>({scaled(a, zq), -bb}).re());
  }

  InstanceGenerator gen(109);
  for (int n = 1; n <= 7; ++n) {
    const auto bh = gen.hermitian(n);
    CHECK(characteristic_polynomial(bh) == charpoly_leibniz(bh));
    const auto ah = gen.hermitian(n);
    const UniPoly e = eta_char(ah, bh);
    const Rational zq = gen.rational();
    CHECK(e(zq) == eta_fast<GaussianRational>({scaled(ah, zq), -bh}).re());
  }
}

TEST_CASE("pencil polynomials") {
  const Pencil zi = Pencil::scalar_multiple(HermitianMatrix::identity(2));
  const MultiPoly z1 = var(1, 0);
  CHECK(eta_pencil({zi}) == z1 * z1);
  // eta(zI, I) = sum_S det(zI[S]) = (1 + z)^2
  const Pencil id({HermitianMatrix::zero(2)}, HermitianMatrix::identity(2));
  const MultiPoly one_plus = z1 + MultiPoly::constant(1, Rational(1));
  CHECK(eta_pencil({zi, id}) == one_plus * one_plus);

  const Pencil l1({HermitianMatrix::identity(2), HermitianMatrix::zero(2)}, HermitianMatrix::zero(2));
  const Pencil l2({HermitianMatrix::zero(2), HermitianMatrix::identity(2)}, HermitianMatrix::zero(2));
  const MultiPoly s = var(2, 0) + var(2, 1);
  CHECK(eta_pencil({l1, l2}) == s * s);
  CHECK(eta_pencil({l1, l2}, PencilMethod::Interpolation) == s * s);

  CHECK_THROWS_AS(eta_pencil({zi, l1}), std::invalid_argument);
}

TEST_CASE("pencil polynomials at points") {
  InstanceGenerator gen(113);
  for (int trial = 0; trial < 25; ++trial) {
    const int n = 1 + trial % 4, ell = 1 + trial % 3, m = 1 + trial % 2;
    std::vector<Pencil> ps;
    for (int j = 0; j < m; ++j) {
      std::vector<HermitianMatrix> coeffs;
      for (int k = 0; k < ell; ++k) coeffs.push_back(gen.psd(n));
      ps.emplace_back(std::move(coeffs), gen.hermitian(n));
    }
    const MultiPoly sym = eta_pencil(ps, PencilMethod::Symbolic);
    CHECK(sym == eta_pencil(ps, PencilMethod::Interpolation));
    CHECK(sym.total_degree() <= n);
    std::vector<Rational> zpt;
    for (int k = 0; k < ell; ++k) zpt.push_back(gen.rational());
    std::vector<HermitianMatrix> evaluated;
    for (const auto& p : ps) evaluated.push_back(pencil_eval(p, zpt));
    CHECK(eval(sym, zpt) == eta_naive(evaluated).re());

    const int j = trial % n;
    const MultiPoly aug = eta_pencil_augmented(ps, j);
    CHECK(aug.nvars() == ell + 1);
    std::vector<Pencil> deleted;
    for (const auto& p : ps) deleted.push_back(p.principal(IndexSet::full(n).without(j)));
    MultiPoly expect(ell + 1);
    for (const auto& [e, c] : sym.terms()) {
      auto ee = e;
      ee.push_back(0);
      expect.add_term(ee, c);
    }
    const MultiPoly del = n == 1 ? MultiPoly::constant(ell, Rational(1)) : eta_pencil(deleted);
    for (const auto& [e, c] : del.terms()) {
      auto ee = e;
      ee.push_back(1);
      expect.add_term(ee, c);
    }
    CHECK(aug == expect);
  }
}

TEST_CASE("scaled copies give Fischer products") {
  const MultiPoly f = scaled_copies_eta(diag({1, 2}), 2);
  // S_(2,0) = 2, S_(1,1) = 4, S_(0,2) = 2
  CHECK(f.coeff({2, 0}) == 2);
  CHECK(f.coeff({1, 1}) == 4);
  CHECK(f.coeff({0, 2}) == 2);
  InstanceGenerator gen(127);
  const auto a = gen.psd(4);
  const MultiPoly g = scaled_copies_eta(a, 3);
  const FischerProducts fp(a);
  for (const auto& alpha : compositions(4, 3)) CHECK(g.coeff(alpha) == fp.of(alpha).sum);
}
