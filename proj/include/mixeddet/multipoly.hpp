#pragma once

// Sparse multivariate polynomials over Q keyed by exponent vectors.

#include <map>
#include <ostream>
#include <vector>

#include "mixeddet/scalar.hpp"
#include "mixeddet/unipoly.hpp"

namespace mixeddet {

using ExponentVector = std::vector<int>;

int total_degree(const ExponentVector& alpha);

/// Total degree first, then lexicographic.
struct GradedLexLess {
  bool operator()(const ExponentVector& a, const ExponentVector& b) const;
};

class MultiPoly {
 public:
  using TermMap = std::map<ExponentVector, Rational, GradedLexLess>;

  explicit MultiPoly(int nvars = 0) : nvars_(nvars) {}

  static MultiPoly constant(int nvars, const Rational& c);
  /// z_j (0-based)
  static MultiPoly variable(int nvars, int j);
  static MultiPoly monomial(const ExponentVector& alpha, const Rational& c);

  int nvars() const { return nvars_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  /// -1 for the zero polynomial.
  int total_degree() const;
  int degree_in(int j) const;
  bool is_homogeneous() const;
  bool is_multiaffine() const;
  Rational coeff(const ExponentVector& alpha) const;

  /// Adds c * z^alpha, dropping the term if it cancels.
  void add_term(const ExponentVector& alpha, const Rational& c);

  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly& operator*=(const Rational& s);
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator-(MultiPoly a) { return a *= Rational(-1); }
  friend MultiPoly operator*(MultiPoly a, const Rational& s) { return a *= s; }
  friend MultiPoly operator*(const Rational& s, MultiPoly a) { return a *= s; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }

  friend std::ostream& operator<<(std::ostream& os, const MultiPoly& p);

 private:
  void check_compatible(const MultiPoly& o) const;

  int nvars_ = 0;
  TermMap terms_;
};

MultiPoly partial_derivative(const MultiPoly& f, int j);
/// Substitutes z_j := value and drops the variable.
MultiPoly restrict_variable(const MultiPoly& f, int j, const Rational& value);
Rational eval(const MultiPoly& f, const std::vector<Rational>& point);
/// t -> f(base + direction * t)
UniPoly restrict_to_line(const MultiPoly& f, const std::vector<Rational>& base,
                         const std::vector<Rational>& direction);
/// t -> f(t, ..., t)
UniPoly diagonal_restriction(const MultiPoly& f);

/// Homogeneous p of degree d in a new leading variable z0 with p(1, z) = f(z).
/// Throws std::invalid_argument when d < deg f.
MultiPoly homogenize(const MultiPoly& f, int d);

/// a(alpha) * alpha_1! ... alpha_n! / d!  for f homogeneous of degree |alpha|.
Rational normalized_coeff(const MultiPoly& f, const ExponentVector& alpha);

/// d! / (alpha_1! ... alpha_n!)
Integer multinomial(const ExponentVector& alpha);
Integer binomial(int n, int k);

}  // namespace mixeddet
