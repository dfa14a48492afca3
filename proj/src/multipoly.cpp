#include "mixeddet/multipoly.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace mixeddet {

int total_degree(const ExponentVector& alpha) { return std::accumulate(alpha.begin(), alpha.end(), 0); }

bool GradedLexLess::operator()(const ExponentVector& a, const ExponentVector& b) const {
  const int da = total_degree(a);
  const int db = total_degree(b);
  if (da != db) return da < db;
  return a < b;
}

MultiPoly MultiPoly::constant(int nvars, const Rational& c) {
  MultiPoly p(nvars);
  p.add_term(ExponentVector(static_cast<std::size_t>(nvars), 0), c);
  return p;
}

MultiPoly MultiPoly::variable(int nvars, int j) {
  if (j < 0 || j >= nvars) throw std::invalid_argument("variable index out of range");
  ExponentVector e(static_cast<std::size_t>(nvars), 0);
  e[static_cast<std::size_t>(j)] = 1;
  return monomial(e, Rational(1));
}

MultiPoly MultiPoly::monomial(const ExponentVector& alpha, const Rational& c) {
  MultiPoly p(static_cast<int>(alpha.size()));
  p.add_term(alpha, c);
  return p;
}

int MultiPoly::total_degree() const {
  if (terms_.empty()) return -1;
  return mixeddet::total_degree(terms_.rbegin()->first);
}

int MultiPoly::degree_in(int j) const {
  int d = terms_.empty() ? -1 : 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e[static_cast<std::size_t>(j)]);
  return d;
}

bool MultiPoly::is_homogeneous() const {
  if (terms_.empty()) return true;
  return mixeddet::total_degree(terms_.begin()->first) == mixeddet::total_degree(terms_.rbegin()->first);
}

bool MultiPoly::is_multiaffine() const {
  for (const auto& [e, c] : terms_)
    for (int x : e)
      if (x > 1) return false;
  return true;
}

Rational MultiPoly::coeff(const ExponentVector& alpha) const {
  const auto it = terms_.find(alpha);
  return it == terms_.end() ? Rational(0) : it->second;
}

void MultiPoly::add_term(const ExponentVector& alpha, const Rational& c) {
  if (static_cast<int>(alpha.size()) != nvars_)
    throw std::invalid_argument("exponent vector length " + std::to_string(alpha.size()) +
                                " does not match " + std::to_string(nvars_) + " variables");
  for (int x : alpha)
    if (x < 0) throw std::invalid_argument("negative exponent");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(alpha, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void MultiPoly::check_compatible(const MultiPoly& o) const {
  if (nvars_ != o.nvars_)
    throw std::invalid_argument("polynomials in " + std::to_string(nvars_) + " and " +
                                std::to_string(o.nvars_) + " variables");
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  check_compatible(o);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  check_compatible(o);
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

MultiPoly& MultiPoly::operator*=(const Rational& s) {
  if (s.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, c] : terms_) c *= s;
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  a.check_compatible(b);
  MultiPoly out(a.nvars_);
  ExponentVector e(static_cast<std::size_t>(a.nvars_));
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t k = 0; k < e.size(); ++k) e[k] = ea[k] + eb[k];
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const MultiPoly& p) {
  if (p.is_zero()) return os << "0";
  bool first = true;
  for (const auto& [e, c] : p.terms_) {
    if (!first) os << " + ";
    first = false;
    os << format_rational(c);
    for (std::size_t k = 0; k < e.size(); ++k) {
      if (e[k] == 0) continue;
      os << "*z" << k + 1;
      if (e[k] > 1) os << '^' << e[k];
    }
  }
  return os;
}

MultiPoly partial_derivative(const MultiPoly& f, int j) {
  if (j < 0 || j >= f.nvars()) throw std::invalid_argument("variable index out of range");
  MultiPoly out(f.nvars());
  for (const auto& [e, c] : f.terms()) {
    const int power = e[static_cast<std::size_t>(j)];
    if (power == 0) continue;
    ExponentVector d = e;
    d[static_cast<std::size_t>(j)] -= 1;
    out.add_term(d, c * Rational(power));
  }
  return out;
}

MultiPoly restrict_variable(const MultiPoly& f, int j, const Rational& value) {
  if (j < 0 || j >= f.nvars()) throw std::invalid_argument("variable index out of range");
  MultiPoly out(f.nvars() - 1);
  for (const auto& [e, c] : f.terms()) {
    ExponentVector r;
    r.reserve(e.size() - 1);
    for (std::size_t k = 0; k < e.size(); ++k)
      if (static_cast<int>(k) != j) r.push_back(e[k]);
    out.add_term(r, c * power(value, static_cast<unsigned>(e[static_cast<std::size_t>(j)])));
  }
  return out;
}

Rational eval(const MultiPoly& f, const std::vector<Rational>& point) {
  if (static_cast<int>(point.size()) != f.nvars())
    throw std::invalid_argument("eval: point has wrong dimension");
  std::vector<std::vector<Rational>> powers(point.size());
  for (std::size_t k = 0; k < point.size(); ++k) {
    const int d = std::max(0, f.degree_in(static_cast<int>(k)));
    powers[k].assign(static_cast<std::size_t>(d) + 1, Rational(1));
    for (int p = 1; p <= d; ++p) powers[k][p] = powers[k][p - 1] * point[k];
  }
  Rational acc(0);
  for (const auto& [e, c] : f.terms()) {
    Rational t = c;
    for (std::size_t k = 0; k < e.size(); ++k)
      if (e[k] != 0) t *= powers[k][static_cast<std::size_t>(e[k])];
    acc += t;
  }
  return acc;
}

UniPoly restrict_to_line(const MultiPoly& f, const std::vector<Rational>& base,
                         const std::vector<Rational>& direction) {
  const auto n = static_cast<std::size_t>(f.nvars());
  if (base.size() != n || direction.size() != n)
    throw std::invalid_argument("restrict_to_line: dimension mismatch");
  std::vector<std::vector<UniPoly>> powers(n);
  for (std::size_t k = 0; k < n; ++k) {
    const int d = std::max(0, f.degree_in(static_cast<int>(k)));
    const UniPoly linear{base[k], direction[k]};
    powers[k].assign(static_cast<std::size_t>(d) + 1, UniPoly::constant(Rational(1)));
    for (int p = 1; p <= d; ++p) powers[k][p] = powers[k][p - 1] * linear;
  }
  UniPoly acc;
  for (const auto& [e, c] : f.terms()) {
    UniPoly t = UniPoly::constant(c);
    for (std::size_t k = 0; k < n; ++k)
      if (e[k] != 0) t = t * powers[k][static_cast<std::size_t>(e[k])];
    acc += t;
  }
  return acc;
}

UniPoly diagonal_restriction(const MultiPoly& f) {
  std::vector<Rational> out(static_cast<std::size_t>(std::max(0, f.total_degree()) + 1), Rational(0));
  for (const auto& [e, c] : f.terms()) out[static_cast<std::size_t>(total_degree(e))] += c;
  return UniPoly(std::move(out));
}

MultiPoly homogenize(const MultiPoly& f, int d) {
  if (d < f.total_degree())
    throw std::invalid_argument("homogenize: degree " + std::to_string(d) + " below deg f = " +
                                std::to_string(f.total_degree()));
  MultiPoly out(f.nvars() + 1);
  for (const auto& [e, c] : f.terms()) {
    ExponentVector h;
    h.reserve(e.size() + 1);
    h.push_back(d - total_degree(e));
    h.insert(h.end(), e.begin(), e.end());
    out.add_term(h, c);
  }
  return out;
}

Integer binomial(int n, int k) {
  if (k < 0 || k > n) return Integer(0);
  Integer r(1);
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

Integer multinomial(const ExponentVector& alpha) {
  Integer r(1);
  int running = 0;
  for (int a : alpha) {
    if (a < 0) throw std::invalid_argument("multinomial: negative part");
    running += a;
    r *= binomial(running, a);
  }
  return r;
}

Rational normalized_coeff(const MultiPoly& f, const ExponentVector& alpha) {
  if (static_cast<int>(alpha.size()) != f.nvars())
    throw std::invalid_argument("normalized_coeff: exponent vector has wrong length");
  if (!f.is_homogeneous() || (!f.is_zero() && f.total_degree() != total_degree(alpha)))
    throw std::invalid_argument("normalized_coeff: f is not homogeneous of degree |alpha|");
  return f.coeff(alpha) / Rational(multinomial(alpha));
}

}  // namespace mixeddet
