#pragma once

// Exact scalar types: arbitrary-precision rationals, Gaussian rationals and
// Gaussian integers, with the Eigen NumTraits needed to use them as matrix
// scalars.

#include <complex>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>
#include <type_traits>

#include <Eigen/Core>
#include <boost/multiprecision/eigen.hpp>
#include <boost/multiprecision/gmp.hpp>

namespace mixeddet {

using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;

/// Parses "p/q", "-p/q" or an integer literal. Throws std::invalid_argument.
Rational parse_rational(std::string_view text);
/// Canonical "p/q" or "p" form.
std::string format_rational(const Rational& q);

inline int sign(const Rational& q) { return q.sign(); }

/// q^e by repeated squaring.
inline Rational power(Rational q, unsigned e) {
  Rational r(1);
  while (e) {
    if (e & 1u) r *= q;
    e >>= 1;
    if (e) q *= q;
  }
  return r;
}

/// re + i*im with both parts exact rationals in reduced form.
class GaussianRational {
 public:
  GaussianRational() = default;
  GaussianRational(Rational re) : re_(std::move(re)) {}  // NOLINT(google-explicit-constructor)
  GaussianRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}
  GaussianRational(long long re) : re_(re) {}  // NOLINT(google-explicit-constructor)
  GaussianRational(int re) : re_(re) {}        // NOLINT(google-explicit-constructor)

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }
  bool is_real() const { return im_.is_zero(); }
  bool is_zero() const { return re_.is_zero() && im_.is_zero(); }

  GaussianRational conj() const { return {re_, -im_}; }
  /// |z|^2
  Rational norm() const { return re_ * re_ + im_ * im_; }

  GaussianRational& operator+=(const GaussianRational& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
  }
  GaussianRational& operator-=(const GaussianRational& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
  }
  GaussianRational& operator*=(const GaussianRational& o) {
    if (im_.is_zero() && o.im_.is_zero()) {
      re_ *= o.re_;
      return *this;
    }
    Rational r = re_ * o.re_ - im_ * o.im_;
    im_ = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(r);
    return *this;
  }
  GaussianRational& operator/=(const GaussianRational& o);

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
  friend GaussianRational operator-(const GaussianRational& a) { return {-a.re_, -a.im_}; }
  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }

  friend std::ostream& operator<<(std::ostream& os, const GaussianRational& z);

 private:
  Rational re_{0};
  Rational im_{0};
};

inline GaussianRational conj(const GaussianRational& z) { return z.conj(); }

/// re + i*im over the integers; division is exact-only (used by Bareiss).
class GaussianInteger {
 public:
  GaussianInteger() = default;
  GaussianInteger(Integer re, Integer im = Integer(0)) : re_(std::move(re)), im_(std::move(im)) {}  // NOLINT
  GaussianInteger(int re) : re_(re) {}  // NOLINT(google-explicit-constructor)

  const Integer& re() const { return re_; }
  const Integer& im() const { return im_; }
  bool is_zero() const { return re_.is_zero() && im_.is_zero(); }

  GaussianInteger& operator+=(const GaussianInteger& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
  }
  GaussianInteger& operator-=(const GaussianInteger& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
  }
  GaussianInteger& operator*=(const GaussianInteger& o) {
    if (im_.is_zero() && o.im_.is_zero()) {
      re_ *= o.re_;
      return *this;
    }
    Integer r = re_ * o.re_ - im_ * o.im_;
    im_ = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(r);
    return *this;
  }
  /// Exact quotient; the divisor must divide *this in Z[i].
  GaussianInteger& operator/=(const GaussianInteger& o);

  friend GaussianInteger operator+(GaussianInteger a, const GaussianInteger& b) { return a += b; }
  friend GaussianInteger operator-(GaussianInteger a, const GaussianInteger& b) { return a -= b; }
  friend GaussianInteger operator*(GaussianInteger a, const GaussianInteger& b) { return a *= b; }
  friend GaussianInteger operator/(GaussianInteger a, const GaussianInteger& b) { return a /= b; }
  friend GaussianInteger operator-(const GaussianInteger& a) { return {-a.re_, -a.im_}; }
  friend bool operator==(const GaussianInteger& a, const GaussianInteger& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  friend bool operator!=(const GaussianInteger& a, const GaussianInteger& b) { return !(a == b); }

 private:
  Integer re_{0};
  Integer im_{0};
};

/// True for scalar types whose arithmetic is exact (no rounding).
template <typename Scalar>
inline constexpr bool is_exact_v = std::is_same_v<Scalar, Rational> ||
                                   std::is_same_v<Scalar, GaussianRational> ||
                                   std::is_same_v<Scalar, Integer> ||
                                   std::is_same_v<Scalar, GaussianInteger>;

/// Machine-precision counterpart of a Gaussian rational.
inline std::complex<double> to_complex_double(const GaussianRational& z) {
  return {z.re().convert_to<double>(), z.im().convert_to<double>()};
}

}  // namespace mixeddet

namespace Eigen {

namespace detail_mixeddet {
template <typename T>
struct ExactTraits : GenericNumTraits<T> {
  using Real = T;
  using NonInteger = T;
  using Literal = T;
  using Nested = T;
  enum {
    IsInteger = 0,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 10,
    AddCost = 40,
    MulCost = 100
  };
  static inline T epsilon() { return T(0); }
  static inline T dummy_precision() { return T(0); }
  static inline int digits10() { return 0; }
};
}  // namespace detail_mixeddet

template <>
struct NumTraits<mixeddet::GaussianRational>
    : detail_mixeddet::ExactTraits<mixeddet::GaussianRational> {};
template <>
struct NumTraits<mixeddet::GaussianInteger>
    : detail_mixeddet::ExactTraits<mixeddet::GaussianInteger> {};

}  // namespace Eigen
