#pragma once

// Dense univariate polynomials over Q and exact real-root predicates built on
// Sturm sequences: root counting, hyperbolicity, inertia, interlacing and
// global nonnegativity.

#include <optional>
#include <ostream>
#include <utility>
#include <vector>

#include "mixeddet/scalar.hpp"

namespace mixeddet {

class UniPoly {
 public:
  UniPoly() = default;
  /// Coefficients low to high; trailing zeros are trimmed.
  explicit UniPoly(std::vector<Rational> coeffs);
  UniPoly(std::initializer_list<Rational> coeffs) : UniPoly(std::vector<Rational>(coeffs)) {}

  static UniPoly constant(Rational c) { return UniPoly(std::vector<Rational>{std::move(c)}); }
  static UniPoly monomial(Rational c, int k);
  /// z
  static UniPoly identity() { return monomial(Rational(1), 1); }
  /// prod (z - r)
  static UniPoly from_roots(const std::vector<Rational>& roots);

  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  Rational coeff(int k) const;
  const Rational& leading() const;

  Rational operator()(const Rational& x) const;
  int sign_at(const Rational& x) const { return (*this)(x).sign(); }

  UniPoly derivative() const;
  UniPoly monic() const;
  /// p(z) / z^k for the largest such k, together with k.
  std::pair<UniPoly, int> strip_zero_roots() const;

  UniPoly& operator+=(const UniPoly& o);
  UniPoly& operator-=(const UniPoly& o);
  UniPoly& operator*=(const Rational& s);
  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator-(UniPoly a) { return a *= Rational(-1); }
  friend UniPoly operator*(UniPoly a, const Rational& s) { return a *= s; }
  friend UniPoly operator*(const Rational& s, UniPoly a) { return a *= s; }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.coeffs_ == b.coeffs_; }

  friend std::ostream& operator<<(std::ostream& os, const UniPoly& p);

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

/// Quotient and remainder; throws std::domain_error on a zero divisor.
std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b);
/// Monic gcd; gcd(0, 0) = 0.
UniPoly gcd(const UniPoly& a, const UniPoly& b);
/// Exact division; throws std::domain_error if b does not divide a.
UniPoly exact_quotient(const UniPoly& a, const UniPoly& b);
/// p / gcd(p, p'), monic.
UniPoly square_free_part(const UniPoly& p);
/// Yun's decomposition: factors[k] is monic square-free with
/// p = lc(p) * prod_k factors[k]^(k+1), pairwise coprime.
std::vector<UniPoly> square_free_decomposition(const UniPoly& p);

/// Sturm chain of the square-free part of p, evaluated on demand.
class SturmChain {
 public:
  explicit SturmChain(const UniPoly& p);

  int variations_at(const Rational& x) const;
  int variations_at_neg_infinity() const;
  int variations_at_pos_infinity() const;
  /// Distinct roots in (lo, hi]; nullopt bounds mean -inf / +inf.
  int count(const std::optional<Rational>& lo, const std::optional<Rational>& hi) const;
  const std::vector<UniPoly>& sequence() const { return chain_; }

 private:
  std::vector<UniPoly> chain_;
};

/// Number of distinct real roots of p in (lo, hi]. nullopt lo is -inf, nullopt hi is +inf.
int sturm_count(const UniPoly& p, const std::optional<Rational>& lo,
                const std::optional<Rational>& hi);

enum class Hyperbolicity { Zero, Hyperbolic, NotHyperbolic };

Hyperbolicity hyperbolicity(const UniPoly& p);
/// All roots real. The zero polynomial is not hyperbolic (see hyperbolicity()).
inline bool is_hyperbolic(const UniPoly& p) { return hyperbolicity(p) == Hyperbolicity::Hyperbolic; }

/// Root counts with multiplicity: (positive, zero, negative).
struct Inertia {
  int plus = 0;
  int zero = 0;
  int minus = 0;
  friend bool operator==(const Inertia&, const Inertia&) = default;
};

/// Throws std::domain_error for non-hyperbolic input.
Inertia inertia(const UniPoly& p);

/// Either a single exact root (lo == hi) or an open interval (lo, hi) whose
/// endpoints are not roots and which holds exactly one root.
struct IsolatingInterval {
  Rational lo;
  Rational hi;
  bool exact = false;
};

/// Isolates the distinct real roots of a nonzero p, sorted increasingly.
std::vector<IsolatingInterval> isolate_real_roots(const UniPoly& p);

/// Rational points with no root of p, one in every gap between consecutive
/// roots and one beyond each end. p must be nonzero.
std::vector<Rational> sign_sample_points(const UniPoly& p);

/// A point where p < 0, if any. The zero polynomial has none.
std::optional<Rational> negativity_witness(const UniPoly& p);
inline bool is_globally_nonnegative(const UniPoly& p) { return !negativity_witness(p).has_value(); }

/// Interlacing of root multisets. A zero argument interlaces everything;
/// nonzero non-hyperbolic input throws std::domain_error.
bool interlaces(const UniPoly& p, const UniPoly& q);
/// Same predicate by isolating the roots of the product and checking that owners alternate.
bool interlaces_by_isolation(const UniPoly& p, const UniPoly& q);

}  // namespace mixeddet
