#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <random>
#include <set>

#include "mixeddet/generators.hpp"
#include "mixeddet/multipoly.hpp"
#include "mixeddet/unipoly.hpp"
#include "support.hpp"

using namespace testing;

namespace {

UniPoly from_int_roots(std::initializer_list<long long> roots) {
  std::vector<Rational> r;
  for (long long x : roots) r.emplace_back(x);
  return UniPoly::from_roots(r);
}

MultiPoly z(int nvars, int j) { return MultiPoly::variable(nvars, j); }
MultiPoly c(int nvars, long long v) { return MultiPoly::constant(nvars, Rational(v)); }

}  // namespace

TEST_CASE("univariate basics") {
  const UniPoly p = poly({1, 0, 0});
  CHECK(p.degree() == 0);
  CHECK(UniPoly().is_zero());
  CHECK(UniPoly().degree() == -1);
  CHECK(poly({-1, 0, 1}) == from_int_roots({1, -1}));
  CHECK(poly({0, 0, 0, 1}).derivative() == poly({0, 0, 3}));
  const auto [qt, r] = divmod(poly({-1, 0, 0, 1}), poly({-1, 1}));
  CHECK(qt == poly({1, 1, 1}));
  CHECK(r.is_zero());
  CHECK(gcd(from_int_roots({1, 2, 3}), from_int_roots({2, 3, 4})) == from_int_roots({2, 3}));
  CHECK(square_free_part(from_int_roots({1, 1, 2})) == from_int_roots({1, 2}));
}

TEST_CASE("square-free decomposition") {
  const UniPoly p = from_int_roots({1, 2, 2, 3, 3, 3});
  const auto parts = square_free_decomposition(p);
  REQUIRE(parts.size() == 3);
  CHECK(parts[0] == from_int_roots({1}));
  CHECK(parts[1] == from_int_roots({2}));
  CHECK(parts[2] == from_int_roots({3}));
}

TEST_CASE("sturm counts") {
  CHECK(sturm_count(poly({1, 0, 1}), std::nullopt, std::nullopt) == 0);
  CHECK(sturm_count(poly({-1, 0, 1}), std::nullopt, std::nullopt) == 2);
  CHECK(sturm_count(poly({0, -1, 0, 1}), Rational(0), std::nullopt) == 1);
  // half-open (a, b]
  CHECK(sturm_count(poly({0, -1, 0, 1}), Rational(-1), Rational(1)) == 2);
  CHECK_THROWS(sturm_count(UniPoly(), std::nullopt, std::nullopt));

  SUBCASE("random products of linear factors") {
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 40; ++trial) {
      const int k = 1 + static_cast<int>(rng() % 10);
      std::vector<Rational> roots;
      std::set<Rational> distinct;
      for (int i = 0; i < k; ++i) {
        Rational r(static_cast<long long>(rng() % 13) - 6, static_cast<long long>(1 + rng() % 3));
        roots.push_back(r);
        distinct.insert(r);
      }
      const UniPoly p = UniPoly::from_roots(roots) * UniPoly{Rational(1), Rational(0), Rational(1)};
      CHECK(sturm_count(p, std::nullopt, std::nullopt) == static_cast<int>(distinct.size()));
      const int positive = static_cast<int>(std::count_if(distinct.begin(), distinct.end(), [](const Rational& x) { return x > 0; }));
      CHECK(sturm_count(p, Rational(0), std::nullopt) == positive);
    }
  }
}

TEST_CASE("hyperbolicity") {
  CHECK(is_hyperbolic(poly({2, -3, 1})));
  CHECK_FALSE(is_hyperbolic(poly({1, 0, 1})));
  CHECK(is_hyperbolic(from_int_roots({1, 1})));
  CHECK_FALSE(is_hyperbolic(UniPoly()));
  CHECK(hyperbolicity(UniPoly()) == Hyperbolicity::Zero);
  CHECK(is_hyperbolic(poly({5})));
}

TEST_CASE("inertia") {
  auto same = [](const Inertia& a, int p, int z0, int m) { return a.plus == p && a.zero == z0 && a.minus == m; };
  CHECK(same(inertia(poly({0, -1, 0, 1})), 1, 1, 1));
  CHECK(same(inertia(from_int_roots({2, 2})), 2, 0, 0));
  CHECK(same(inertia(from_int_roots({1, 0, -2})), 1, 1, 1));
  CHECK(same(inertia(from_int_roots({0, 0, 0, -1, -1, 3})), 1, 3, 2));
  CHECK_THROWS_AS(inertia(poly({1, 0, 1})), std::domain_error);

  InstanceGenerator gen(7);
  for (int trial = 0; trial < 30; ++trial) {
    const UniPoly p = gen.hyperbolic_polynomial(1 + trial % 10);
    const Inertia i = inertia(p);
    CHECK(i.plus + i.zero + i.minus == p.degree());
  }
}

TEST_CASE("interlacing") {
  CHECK(interlaces(from_int_roots({1, 3}), from_int_roots({2})));
  CHECK(interlaces(from_int_roots({2}), from_int_roots({1, 3})));
  CHECK_FALSE(interlaces(from_int_roots({1, 4}), from_int_roots({2, 3})));
  CHECK(interlaces(from_int_roots({1, 3}), UniPoly()));
  CHECK(interlaces(UniPoly(), from_int_roots({1, 3})));
  // equal degrees, either ordering
  CHECK(interlaces(from_int_roots({1, 3}), from_int_roots({2, 4})));
  CHECK(interlaces(from_int_roots({2, 4}), from_int_roots({1, 3})));
  // shared and repeated roots
  CHECK(interlaces(from_int_roots({1, 1}), from_int_roots({1})));
  CHECK(interlaces(from_int_roots({1, 1, 2}), from_int_roots({1, 2})));
  CHECK_FALSE(interlaces(from_int_roots({1, 1}), from_int_roots({2})));
  CHECK_FALSE(interlaces(from_int_roots({1, 2, 3, 4}), from_int_roots({2})));
  CHECK_THROWS_AS(interlaces(poly({1, 0, 1}), from_int_roots({1})), std::domain_error);

  SUBCASE("Rolle: p interlaces p'") {
    InstanceGenerator gen(13);
    for (int trial = 0; trial < 40; ++trial) {
      const UniPoly p = gen.hyperbolic_polynomial(1 + trial % 10);
      CHECK(interlaces(p, p.derivative()));
      CHECK(interlaces(p.derivative(), p));
    }
  }

  SUBCASE("residue test agrees with root isolation") {
    InstanceGenerator gen(19, 4);
    int positives = 0;
    for (int trial = 0; trial < 300; ++trial) {
      const UniPoly p = gen.hyperbolic_polynomial(gen.uniform_int(0, 5));
      const UniPoly r = gen.hyperbolic_polynomial(gen.uniform_int(0, 5));
      const bool fast = interlaces(p, r);
      CHECK(fast == interlaces_by_isolation(p, r));
      positives += fast;
    }
    CHECK(positives > 10);
  }
}

TEST_CASE("root isolation and nonnegativity") {
  const UniPoly p = from_int_roots({-2, 1, 1, 5}) * Rational(3);
  const auto ivs = isolate_real_roots(p);
  CHECK(ivs.size() == 3);
  for (std::size_t k = 0; k + 1 < ivs.size(); ++k) CHECK(ivs[k].hi <= ivs[k + 1].lo);
  CHECK(is_globally_nonnegative(from_int_roots({1, 1, 2, 2})));
  CHECK(is_globally_nonnegative(poly({1, 0, 1})));
  CHECK(is_globally_nonnegative(UniPoly()));
  const auto w = negativity_witness(from_int_roots({1, 2}));
  REQUIRE(w);
  CHECK(from_int_roots({1, 2})(*w) < 0);
  CHECK(negativity_witness(poly({-1})));

  SUBCASE("Laguerre inequality for hyperbolic polynomials") {
    InstanceGenerator gen(31);
    for (int trial = 0; trial < 30; ++trial) {
      const UniPoly f = gen.hyperbolic_polynomial(1 + trial % 8);
      const UniPoly d1 = f.derivative();
      CHECK(is_globally_nonnegative(d1 * d1 - f * d1.derivative()));
    }
    const UniPoly g = poly({1, 0, 1});  // not hyperbolic: Laguerre fails
    CHECK_FALSE(is_globally_nonnegative(g.derivative() * g.derivative() - g * g.derivative().derivative()));
  }
}

TEST_CASE("multivariate arithmetic") {
  const MultiPoly z1 = z(2, 0), z2 = z(2, 1);
  CHECK(partial_derivative(z1 * z2, 0) == z2);
  CHECK(restrict_variable(z1 * z2 + z1, 1, Rational(1)) == MultiPoly::variable(1, 0) * Rational(2));
  CHECK(eval(z1 * z1 + z2, {Rational(2), Rational(3)}) == 7);
  CHECK((z1 - z1).is_zero());
  CHECK((z1 + z2) * (z1 - z2) == z1 * z1 - z2 * z2);
  CHECK((z1 * z2 + c(2, 1)).is_multiaffine());
  CHECK_FALSE((z1 * z1).is_multiaffine());
  CHECK_THROWS(z1 + MultiPoly::variable(3, 0));
}

TEST_CASE("homogenization") {
  const MultiPoly f = MultiPoly::variable(1, 0) - MultiPoly::constant(1, Rational(1));
  CHECK(homogenize(f, 1) == z(2, 1) - z(2, 0));
  const MultiPoly g = z(2, 0) * z(2, 1) + c(2, 1);
  CHECK(homogenize(g, 2) == z(3, 1) * z(3, 2) + z(3, 0) * z(3, 0));
  CHECK_THROWS_AS(homogenize(g, 1), std::invalid_argument);

  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    MultiPoly h(3);
    for (int t = 0; t < 6; ++t)
      h.add_term({static_cast<int>(rng() % 3), static_cast<int>(rng() % 3), static_cast<int>(rng() % 3)},
                 Rational(static_cast<long long>(rng() % 11) - 5));
    const int d = std::max(h.total_degree(), 0) + static_cast<int>(rng() % 2);
    const MultiPoly p = homogenize(h, d);
    CHECK(p.is_homogeneous());
    CHECK(restrict_variable(p, 0, Rational(1)) == h);
  }
}

TEST_CASE("normalized coefficients") {
  const MultiPoly s = z(2, 0) + z(2, 1);
  CHECK(normalized_coeff(s * s, {1, 1}) == 1);
  CHECK(normalized_coeff(s * s, {2, 0}) == 1);
  CHECK(normalized_coeff(z(2, 0) * z(2, 0) * z(2, 1), {2, 1}) == q("1/3"));
  CHECK_THROWS_AS(normalized_coeff(s * s, {2, 1}), std::invalid_argument);
  CHECK_THROWS_AS(normalized_coeff(s * s + c(2, 1), {1, 1}), std::invalid_argument);
  CHECK(multinomial({2, 1, 1}) == 12);
  CHECK(binomial(6, 3) == 20);
}

TEST_CASE("line restriction") {
  const MultiPoly f = z(2, 0) * z(2, 1) - c(2, 1);
  const UniPoly r = restrict_to_line(f, {Rational(1), Rational(0)}, {Rational(1), Rational(1)});
  // (1 + t) t - 1
  CHECK(r == poly({-1, 1, 1}));
  CHECK(diagonal_restriction(z(3, 0) * z(3, 1) * z(3, 2)) == poly({0, 0, 0, 1}));
}
