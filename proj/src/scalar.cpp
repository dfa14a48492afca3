#include "mixeddet/scalar.hpp"

#include <cctype>
#include <stdexcept>

namespace mixeddet {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const std::string_view original = text;
  bool negative = false;
  if (text.starts_with("\xE2\x88\x92")) {  // U+2212 minus sign
    negative = true;
    text.remove_prefix(3);
  } else if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? std::string_view("1")
                                                               : text.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den))
    throw std::invalid_argument("malformed rational '" + std::string(original) + "'");
  Integer p{std::string(num)};
  Integer q{std::string(den)};
  if (q.is_zero())
    throw std::invalid_argument("zero denominator in '" + std::string(original) + "'");
  if (negative) p = -p;
  return Rational(p, q);
}

std::string format_rational(const Rational& q) { return q.str(); }

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
  if (o.is_zero()) throw std::domain_error("division by zero");
  if (o.im_.is_zero()) {
    re_ /= o.re_;
    im_ /= o.re_;
    return *this;
  }
  const Rational n = o.norm();
  Rational r = (re_ * o.re_ + im_ * o.im_) / n;
  im_ = (im_ * o.re_ - re_ * o.im_) / n;
  re_ = std::move(r);
  return *this;
}

std::ostream& operator<<(std::ostream& os, const GaussianRational& z) {
  os << format_rational(z.re_);
  if (!z.im_.is_zero()) os << (z.im_.sign() < 0 ? " - " : " + ") << format_rational(abs(z.im_)) << "i";
  return os;
}

GaussianInteger& GaussianInteger::operator/=(const GaussianInteger& o) {
  if (o.is_zero()) throw std::domain_error("division by zero");
  if (o.im_.is_zero()) {
    re_ /= o.re_;
    im_ /= o.re_;
    return *this;
  }
  const Integer n = o.re_ * o.re_ + o.im_ * o.im_;
  Integer r = (re_ * o.re_ + im_ * o.im_) / n;
  im_ = (im_ * o.re_ - re_ * o.im_) / n;
  re_ = std::move(r);
  return *this;
}

}  // namespace mixeddet
