#include "mixeddet/unipoly.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

namespace mixeddet {

UniPoly::UniPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

void UniPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

UniPoly UniPoly::monomial(Rational c, int k) {
  if (k < 0) throw std::invalid_argument("negative monomial degree");
  std::vector<Rational> v(static_cast<std::size_t>(k) + 1, Rational(0));
  v.back() = std::move(c);
  return UniPoly(std::move(v));
}

UniPoly UniPoly::from_roots(const std::vector<Rational>& roots) {
  UniPoly p = constant(Rational(1));
  for (const auto& r : roots) p = p * UniPoly{-r, Rational(1)};
  return p;
}

Rational UniPoly::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(coeffs_.size())) return Rational(0);
  return coeffs_[static_cast<std::size_t>(k)];
}

const Rational& UniPoly::leading() const {
  if (coeffs_.empty()) throw std::domain_error("leading coefficient of the zero polynomial");
  return coeffs_.back();
}

Rational UniPoly::operator()(const Rational& x) const {
  Rational acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= x;
    acc += *it;
  }
  return acc;
}

UniPoly UniPoly::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Rational> d(coeffs_.size() - 1);
  for (std::size_t k = 1; k < coeffs_.size(); ++k) d[k - 1] = coeffs_[k] * Rational(static_cast<long>(k));
  return UniPoly(std::move(d));
}

UniPoly UniPoly::monic() const {
  if (is_zero()) return {};
  return *this * (Rational(1) / leading());
}

std::pair<UniPoly, int> UniPoly::strip_zero_roots() const {
  if (is_zero()) return {UniPoly(), 0};
  std::size_t k = 0;
  while (coeffs_[k].is_zero()) ++k;
  return {UniPoly(std::vector<Rational>(coeffs_.begin() + static_cast<long>(k), coeffs_.end())),
          static_cast<int>(k)};
}

UniPoly& UniPoly::operator+=(const UniPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rational(0));
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
  trim();
  return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rational(0));
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
  trim();
  return *this;
}

UniPoly& UniPoly::operator*=(const Rational& s) {
  if (s.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  for (auto& c : coeffs_) c *= s;
  return *this;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return UniPoly(std::move(out));
}

std::ostream& operator<<(std::ostream& os, const UniPoly& p) {
  os << '[';
  for (std::size_t k = 0; k < p.coeffs_.size(); ++k) {
    if (k) os << ", ";
    os << format_rational(p.coeffs_[k]);
  }
  return os << ']';
}

std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  std::vector<Rational> rem = a.coeffs();
  const int db = b.degree();
  if (a.degree() < db) return {UniPoly(), a};
  std::vector<Rational> quot(static_cast<std::size_t>(a.degree() - db) + 1, Rational(0));
  const Rational inv_lead = Rational(1) / b.leading();
  for (int k = a.degree(); k >= db; --k) {
    const Rational& top = rem[static_cast<std::size_t>(k)];
    if (top.is_zero()) continue;
    const Rational factor = top * inv_lead;
    quot[static_cast<std::size_t>(k - db)] = factor;
    for (int j = 0; j <= db; ++j)
      rem[static_cast<std::size_t>(k - db + j)] -= factor * b.coeffs()[static_cast<std::size_t>(j)];
  }
  return {UniPoly(std::move(quot)), UniPoly(std::move(rem))};
}

UniPoly gcd(const UniPoly& a, const UniPoly& b) {
  UniPoly x = a.monic();
  UniPoly y = b.monic();
  while (!y.is_zero()) {
    UniPoly r = divmod(x, y).second;
    x = std::move(y);
    y = r.monic();
  }
  return x.monic();
}

UniPoly exact_quotient(const UniPoly& a, const UniPoly& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw std::domain_error("polynomial division is not exact");
  return q;
}

UniPoly square_free_part(const UniPoly& p) {
  if (p.is_zero()) return {};
  return exact_quotient(p, gcd(p, p.derivative())).monic();
}

std::vector<UniPoly> square_free_decomposition(const UniPoly& p) {
  std::vector<UniPoly> factors;
  if (p.degree() <= 0) return factors;
  const UniPoly f = p.monic();
  const UniPoly fp = f.derivative();
  const UniPoly a0 = gcd(f, fp);
  UniPoly b = exact_quotient(f, a0);
  UniPoly c = exact_quotient(fp, a0);
  UniPoly d = c - b.derivative();
  while (b.degree() > 0) {
    UniPoly a = gcd(b, d);
    b = exact_quotient(b, a);
    c = exact_quotient(d, a);
    d = c - b.derivative();
    factors.push_back(std::move(a));
  }
  // Drop trailing trivial factors introduced by the last step.
  while (!factors.empty() && factors.back().degree() == 0) factors.pop_back();
  return factors;
}

namespace {

int count_variations(const std::vector<int>& signs) {
  int changes = 0;
  int last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

}  // namespace

SturmChain::SturmChain(const UniPoly& p) {
  if (p.is_zero()) throw std::domain_error("Sturm chain of the zero polynomial");
  UniPoly p0 = square_free_part(p);
  UniPoly p1 = p0.derivative();
  chain_.push_back(p0);
  while (!p1.is_zero()) {
    // Positive rescaling keeps the sign pattern and tames coefficient growth.
    p1 *= Rational(1) / abs(p1.leading());
    chain_.push_back(p1);
    UniPoly r = -divmod(chain_[chain_.size() - 2], chain_.back()).second;
    p1 = std::move(r);
  }
}

int SturmChain::variations_at(const Rational& x) const {
  std::vector<int> signs;
  signs.reserve(chain_.size());
  for (const auto& q : chain_) signs.push_back(q.sign_at(x));
  return count_variations(signs);
}

int SturmChain::variations_at_pos_infinity() const {
  std::vector<int> signs;
  for (const auto& q : chain_) signs.push_back(q.leading().sign());
  return count_variations(signs);
}

int SturmChain::variations_at_neg_infinity() const {
  std::vector<int> signs;
  for (const auto& q : chain_) signs.push_back(q.degree() % 2 == 0 ? q.leading().sign() : -q.leading().sign());
  return count_variations(signs);
}

int SturmChain::count(const std::optional<Rational>& lo, const std::optional<Rational>& hi) const {
  if (lo && hi && !(*lo < *hi)) throw std::invalid_argument("sturm_count: empty interval");
  const int v_lo = lo ? variations_at(*lo) : variations_at_neg_infinity();
  const int v_hi = hi ? variations_at(*hi) : variations_at_pos_infinity();
  return v_lo - v_hi;
}

int sturm_count(const UniPoly& p, const std::optional<Rational>& lo,
                const std::optional<Rational>& hi) {
  return SturmChain(p).count(lo, hi);
}

Hyperbolicity hyperbolicity(const UniPoly& p) {
  if (p.is_zero()) return Hyperbolicity::Zero;
  if (p.degree() == 0) return Hyperbolicity::Hyperbolic;
  const SturmChain chain(p);
  const int distinct = chain.sequence().front().degree();
  return chain.count(std::nullopt, std::nullopt) == distinct ? Hyperbolicity::Hyperbolic
                                                             : Hyperbolicity::NotHyperbolic;
}

Inertia inertia(const UniPoly& p) {
  if (!is_hyperbolic(p)) throw std::domain_error("inertia of a non-hyperbolic polynomial");
  auto [rest, zeros] = p.strip_zero_roots();
  Inertia out;
  out.zero = zeros;
  const std::vector<UniPoly> factors = square_free_decomposition(rest);
  for (std::size_t k = 0; k < factors.size(); ++k) {
    if (factors[k].degree() <= 0) continue;
    const int mult = static_cast<int>(k) + 1;
    const SturmChain chain(factors[k]);
    out.plus += mult * chain.count(Rational(0), std::nullopt);
    out.minus += mult * chain.count(std::nullopt, Rational(0));
  }
  return out;
}

namespace {

Rational cauchy_bound(const UniPoly& p) {
  Rational m(0);
  const Rational& lead = p.leading();
  for (int k = 0; k < p.degree(); ++k) {
    Rational r = abs(p.coeffs()[static_cast<std::size_t>(k)] / lead);
    if (r > m) m = r;
  }
  return m + 1;
}

void isolate(const UniPoly& p, const SturmChain& chain, Rational lo, Rational hi, int count,
             std::vector<IsolatingInterval>& out) {
  if (count == 0) return;
  if (count == 1) {
    if (p.sign_at(hi) == 0) {
      out.push_back({hi, hi, true});
      return;
    }
    while (p.sign_at(lo) == 0) {
      Rational mid = (lo + hi) / 2;
      if (p.sign_at(mid) == 0) {
        out.push_back({mid, mid, true});
        return;
      }
      if (chain.count(mid, hi) == 1) {
        lo = std::move(mid);
      } else {
        hi = std::move(mid);
      }
    }
    out.push_back({std::move(lo), std::move(hi), false});
    return;
  }
  Rational mid = (lo + hi) / 2;
  const int left = chain.count(lo, mid);
  isolate(p, chain, lo, mid, left, out);
  isolate(p, chain, mid, hi, count - left, out);
}

}  // namespace

std::vector<IsolatingInterval> isolate_real_roots(const UniPoly& p) {
  if (p.is_zero()) throw std::domain_error("root isolation of the zero polynomial");
  std::vector<IsolatingInterval> out;
  if (p.degree() == 0) return out;
  const UniPoly q = square_free_part(p);
  const SturmChain chain(q);
  const Rational bound = cauchy_bound(q);
  const Rational lo = -bound;
  isolate(q, chain, lo, bound, chain.count(lo, bound), out);
  return out;
}

std::vector<Rational> sign_sample_points(const UniPoly& p) {
  const std::vector<IsolatingInterval> roots = isolate_real_roots(p);
  std::vector<Rational> points;
  if (roots.empty()) {
    points.emplace_back(0);
    return points;
  }
  points.push_back(roots.front().lo - 1);
  for (std::size_t k = 0; k + 1 < roots.size(); ++k) {
    const Rational& upper = roots[k].hi;
    const Rational& lower = roots[k + 1].lo;
    points.push_back(upper < lower ? Rational((upper + lower) / 2) : upper);
  }
  points.push_back(roots.back().hi + 1);
  return points;
}

std::optional<Rational> negativity_witness(const UniPoly& p) {
  if (p.is_zero()) return std::nullopt;
  for (const auto& x : sign_sample_points(p))
    if (p.sign_at(x) < 0) return x;
  return std::nullopt;
}

namespace {

// Cauchy index of num/den over R from the signed remainder sequence.
int cauchy_index(const UniPoly& den, const UniPoly& num) {
  std::vector<UniPoly> seq{den, num};
  while (!seq.back().is_zero()) {
    const auto& a = seq[seq.size() - 2];
    const auto& b = seq.back();
    UniPoly r = divmod(a, b).second;
    if (r.is_zero()) break;
    seq.push_back(-r);
  }
  auto variations = [&](bool at_plus) {
    int v = 0, prev = 0;
    for (const auto& f : seq) {
      if (f.is_zero()) continue;
      int s = f.leading().sign();
      if (!at_plus && f.degree() % 2 == 1) s = -s;
      if (prev != 0 && s != prev) ++v;
      prev = s;
    }
    return v;
  };
  return variations(false) - variations(true);
}

}  // namespace

bool interlaces(const UniPoly& p, const UniPoly& q) {
  if (p.is_zero() || q.is_zero()) return true;
  if (!is_hyperbolic(p) || !is_hyperbolic(q))
    throw std::domain_error("interlaces: non-hyperbolic argument");
  const UniPoly g = gcd(p, q);
  UniPoly num = exact_quotient(p, g);
  UniPoly den = exact_quotient(q, g);
  if (num.degree() > den.degree()) std::swap(num, den);
  if (den.degree() <= 0) return true;
  // Coprime remainders interlace iff all residues of num/den share a sign.
  return std::abs(cauchy_index(den, num)) == den.degree();
}

bool interlaces_by_isolation(const UniPoly& p, const UniPoly& q) {
  if (p.is_zero() || q.is_zero()) return true;
  if (!is_hyperbolic(p) || !is_hyperbolic(q))
    throw std::domain_error("interlaces: non-hyperbolic argument");
  const UniPoly g = gcd(p, q);
  const UniPoly pr = exact_quotient(p, g);
  const UniPoly qr = exact_quotient(q, g);
  // A repeated root not shared with the other polynomial cannot be separated.
  if (square_free_part(pr).degree() != pr.degree()) return false;
  if (square_free_part(qr).degree() != qr.degree()) return false;
  const UniPoly product = pr * qr;
  if (product.degree() <= 0) return true;
  const SturmChain p_chain(pr);
  int previous = -1;  // 0 = root of p, 1 = root of q
  for (const auto& iv : isolate_real_roots(product)) {
    int owner;
    if (iv.exact) {
      owner = pr.sign_at(iv.lo) == 0 ? 0 : 1;
    } else {
      owner = p_chain.count(iv.lo, iv.hi) == 1 ? 0 : 1;
    }
    if (owner == previous) return false;
    previous = owner;
  }
  return true;
}

}  // namespace mixeddet
