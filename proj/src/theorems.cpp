#include "mixeddet/theorems.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <cstdlib>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <thread>

#include "mixeddet/generators.hpp"
#include "mixeddet/mixeddet.hpp"

namespace mixeddet {

namespace {

const char* kClaimNames[] = {"CONJ1", "CONJ2", "CONJ3", "COR31a", "COR31b", "COR31c", "THM32",
                             "COR34", "COR36a", "COR36b", "THM41", "COR42", "COR45"};

std::string lower(std::string s) {
  for (char& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return s;
}

// One report under construction: counts checks, keeps the first violation.
struct Tally {
  Claim claim;
  int checks = 0;
  Json witness;  // null until a violation
  Json detail = Json::object();

  explicit Tally(Claim c) : claim(c) {}

  void check(bool ok, const std::function<Json()>& make_witness) {
    ++checks;
    if (!ok && witness.is_null()) witness = make_witness();
  }
  bool failed() const { return !witness.is_null(); }

  VerificationReport finish(const Json& input, const std::string& id) {
    VerificationReport r;
    r.claim = claim;
    r.instance = id;
    r.input = input;
    r.verdict = failed() ? Verdict::Fail : Verdict::Pass;
    detail["checks"] = checks;
    r.detail = std::move(detail);
    r.witness = std::move(witness);
    return r;
  }
};

Json matrix_input(const HermitianMatrix& a) { return Json{{"A", to_json(a)}}; }

Json pair_input(const HermitianMatrix& a, const HermitianMatrix& b) {
  return Json{{"A", to_json(a)}, {"B", to_json(b)}};
}

void require_psd(const HermitianMatrix& a, const char* what) {
  if (definiteness(a) == Definiteness::Indefinite)
    throw std::invalid_argument(std::string(what) + ": A is not positive semidefinite");
}

ExponentVector shifted(ExponentVector alpha, int i, int j, int k) {
  alpha[static_cast<std::size_t>(i)] += k;
  alpha[static_cast<std::size_t>(j)] -= k;
  return alpha;
}

// Newton divided differences through (k, ys[k]), k = 0..n.
UniPoly interpolate_integers(const std::vector<Rational>& ys) {
  const int n = static_cast<int>(ys.size());
  std::vector<Rational> dd = ys;
  for (int level = 1; level < n; ++level)
    for (int k = n - 1; k >= level; --k)
      dd[static_cast<std::size_t>(k)] = (dd[static_cast<std::size_t>(k)] - dd[static_cast<std::size_t>(k - 1)]) /
                                        Rational(level);
  UniPoly out;
  UniPoly basis = UniPoly::constant(Rational(1));
  for (int k = 0; k < n; ++k) {
    out += basis * dd[static_cast<std::size_t>(k)];
    basis = basis * UniPoly{Rational(-k), Rational(1)};
  }
  return out;
}

}  // namespace

std::vector<Rational> hermitian_minors(const HermitianMatrix& a) {
  const auto table = all_principal_minors(a);
  std::vector<Rational> out;
  out.reserve(table.values.size());
  for (const auto& v : table.values) out.push_back(v.re());
  return out;
}

std::string to_string(Claim c) { return kClaimNames[static_cast<int>(c)]; }

std::optional<Claim> claim_from_string(const std::string& s) {
  for (Claim c : all_claims())
    if (lower(to_string(c)) == lower(s)) return c;
  return std::nullopt;
}

const std::vector<Claim>& all_claims() {
  static const std::vector<Claim> claims = {Claim::Conj1,  Claim::Conj2,  Claim::Conj3,  Claim::Cor31a, Claim::Cor31b,
                                            Claim::Cor31c, Claim::Thm32,  Claim::Cor34,  Claim::Cor36a, Claim::Cor36b,
                                            Claim::Thm41,  Claim::Cor42,  Claim::Cor45};
  return claims;
}

Json to_json(const VerificationReport& r) {
  Json out{{"claim", to_string(r.claim)},
           {"instance", r.instance},
           {"verdict", r.passed() ? "PASS" : "FAIL"},
           {"detail", r.detail},
           {"witness", r.witness}};
  if (!r.passed()) out["input"] = r.input;
  return out;
}

// ---------------------------------------------------------------- Fischer

FischerProducts::FischerProducts(const HermitianMatrix& a)
    : a_(a), d_(static_cast<int>(a.order())), minors_(hermitian_minors(a)) {}

FischerPair FischerProducts::k_th(int k) const {
  if (k < 0 || k > d_) throw std::invalid_argument("fischer_k: k out of range [0, " + std::to_string(d_) + "]");
  const std::uint32_t full = IndexSet::full_mask(d_);
  Rational s(0);
  for (std::uint32_t mask = 0; mask <= full; ++mask)
    if (std::popcount(mask) == k) s += minors_[mask] * minors_[full ^ mask];
  Rational avg = s / Rational(binomial(d_, k));
  return {std::move(s), std::move(avg)};
}

FischerPair FischerProducts::of(const ExponentVector& alpha) const {
  if (total_degree(alpha) != d_)
    throw std::invalid_argument("fischer_alpha: |alpha| = " + std::to_string(total_degree(alpha)) +
                                " differs from the order " + std::to_string(d_));
  for (int x : alpha)
    if (x < 0) throw std::invalid_argument("fischer_alpha: negative part");
  if (auto it = memo_.find(alpha); it != memo_.end()) return it->second;

  const std::uint32_t size = std::uint32_t{1} << d_;
  // g[X] = S_{(alpha_t, ..., alpha_n)}(A[X]) for |X| = alpha_t + ... + alpha_n.
  std::vector<Rational> g(size, Rational(0));
  g[0] = Rational(1);
  int used = 0;
  for (auto it = alpha.rbegin(); it != alpha.rend(); ++it) {
    const int part = *it;
    if (part == 0) continue;
    std::vector<Rational> next(size, Rational(0));
    for (std::uint32_t x = 0; x < size; ++x) {
      if (std::popcount(x) != used + part) continue;
      Rational acc(0);
      for (std::uint32_t s = x;; s = (s - 1) & x) {
        if (std::popcount(s) == part && !g[x ^ s].is_zero() && !minors_[s].is_zero()) acc += minors_[s] * g[x ^ s];
        if (s == 0) break;
      }
      next[x] = std::move(acc);
    }
    g = std::move(next);
    used += part;
  }
  Rational s = g[size - 1];
  Rational avg = s / Rational(multinomial(alpha));
  FischerPair out{std::move(s), std::move(avg)};
  memo_.emplace(alpha, out);
  return out;
}

FischerPair fischer_k(const HermitianMatrix& a, int k) { return FischerProducts(a).k_th(k); }

FischerPair fischer_alpha(const HermitianMatrix& a, const ExponentVector& alpha) { return FischerProducts(a).of(alpha); }

// ---------------------------------------------------------------- majorization

bool is_majorized_by(const ExponentVector& x, const ExponentVector& y) {
  if (x.size() != y.size()) throw std::invalid_argument("majorization: length mismatch");
  ExponentVector xs = x, ys = y;
  std::sort(xs.begin(), xs.end(), std::greater<>());
  std::sort(ys.begin(), ys.end(), std::greater<>());
  long long px = 0, py = 0;
  for (std::size_t k = 0; k < xs.size(); ++k) {
    px += xs[k];
    py += ys[k];
    if (px > py) return false;
  }
  return px == py;
}

ExponentVector pinch(const ExponentVector& y, int rank, int t) {
  const int n = static_cast<int>(y.size());
  if (rank < 0 || rank + 1 >= n) throw std::invalid_argument("pinch: position out of range");
  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return y[a] > y[b]; });
  const int hi = order[static_cast<std::size_t>(rank)], lo = order[static_cast<std::size_t>(rank + 1)];
  if (t <= 0 || 2 * t > y[hi] - y[lo])
    throw std::invalid_argument("pinch: t must lie in (0, (y[" + std::to_string(rank + 1) + "] - y[" +
                                std::to_string(rank + 2) + "]) / 2]");
  ExponentVector out = y;
  out[hi] -= t;
  out[lo] += t;
  return out;
}

std::vector<ExponentVector> compositions(int total, int parts) {
  std::vector<ExponentVector> out;
  if (parts <= 0) {
    if (total == 0) out.emplace_back();
    return out;
  }
  ExponentVector cur(static_cast<std::size_t>(parts), 0);
  std::function<void(int, int)> rec = [&](int pos, int left) {
    if (pos == parts - 1) {
      cur[static_cast<std::size_t>(pos)] = left;
      out.push_back(cur);
      return;
    }
    for (int v = left; v >= 0; --v) {
      cur[static_cast<std::size_t>(pos)] = v;
      rec(pos + 1, left - v);
    }
  };
  rec(0, total);
  return out;
}

// ---------------------------------------------------------------- char polys

UniPoly principal_charpoly(const std::vector<Rational>& minors, IndexSet x) {
  const int size = x.size();
  std::vector<Rational> c(static_cast<std::size_t>(size) + 1, Rational(0));
  const std::uint32_t xm = x.mask();
  for (std::uint32_t u = xm;; u = (u - 1) & xm) {
    const int k = std::popcount(u);
    if (k % 2 == 0)
      c[static_cast<std::size_t>(size - k)] += minors[u];
    else
      c[static_cast<std::size_t>(size - k)] -= minors[u];
    if (u == 0) break;
  }
  return UniPoly(std::move(c));
}

UniPoly charpoly_leibniz(const HermitianMatrix& b) {
  const int n = static_cast<int>(b.order());
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  UniPoly total;
  do {
    int inversions = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (perm[i] > perm[j]) ++inversions;
    // Fixed points contribute (z - b_ii); the rest contribute -b_{i, perm(i)}.
    GaussianRational c(inversions % 2 == 0 ? 1 : -1);
    UniPoly fixed = UniPoly::constant(Rational(1));
    for (int i = 0; i < n && !c.is_zero(); ++i) {
      if (perm[i] == i)
        fixed = fixed * UniPoly{-b(i, i).re(), Rational(1)};
      else
        c *= -b(i, perm[i]);
    }
    if (c.is_zero()) continue;
    // imaginary parts cancel between sigma and its inverse
    total += fixed * c.re();
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

UniPoly charpoly_reference(const HermitianMatrix& b) {
  const Index n = b.order();
  if (n <= 7) return charpoly_leibniz(b);
  std::vector<Rational> ys;
  for (Index k = 0; k <= n; ++k) {
    ComplexMatrix m = -b.dense();
    for (Index i = 0; i < n; ++i) m(i, i) += GaussianRational(Rational(static_cast<long long>(k)));
    ys.push_back(determinant(m).re());
  }
  return interpolate_integers(ys);
}

// ---------------------------------------------------------------- Johnson

VerificationReport verify_conj1(const HermitianMatrix& a, const HermitianMatrix& b) {
  const Json input = pair_input(a, b);
  Tally t(Claim::Conj1);
  const UniPoly p = eta_char(a, b);
  const Hyperbolicity h = hyperbolicity(p);
  t.detail["polynomial"] = to_json(p);
  t.detail["branch"] = h == Hyperbolicity::Zero ? "zero polynomial" : "sturm";
  t.check(h != Hyperbolicity::NotHyperbolic, [&] {
    return Json{{"polynomial", to_json(p)},
                {"degree", p.degree()},
                {"distinct_real_roots", sturm_count(square_free_part(p), std::nullopt, std::nullopt)},
                {"distinct_roots", square_free_part(p).degree()}};
  });
  return t.finish(input, digest(input));
}

VerificationReport verify_conj2(const HermitianMatrix& a, const HermitianMatrix& b) {
  if (a.order() != b.order()) throw std::invalid_argument("A and B must have the same order");
  const Json input = pair_input(a, b);
  const int n = static_cast<int>(a.order());
  Tally t(Claim::Conj2);
  const UniPoly q = eta_char(a, b);
  int degenerate = 0;
  for (int j = 0; j < n; ++j) {
    const IndexSet keep = IndexSet::full(n).without(j);
    const UniPoly p = eta_char(principal_submatrix(a, keep), principal_submatrix(b, keep));
    if (p.is_zero() || q.is_zero()) ++degenerate;
    bool ok = false;
    std::string why;
    try {
      ok = interlaces(p, q);
      if (!ok) why = "roots do not interlace";
    } catch (const std::domain_error& e) {
      why = e.what();
    }
    t.check(ok, [&] {
      return Json{{"j", j + 1}, {"reason", why}, {"deleted", to_json(p)}, {"full", to_json(q)}};
    });
  }
  t.detail["zero_polynomial_branches"] = degenerate;
  return t.finish(input, digest(input));
}

VerificationReport verify_conj3(const HermitianMatrix& a, const HermitianMatrix& b) {
  if (definiteness(a) != Definiteness::PositiveDefinite)
    throw std::invalid_argument("CONJ3: A is not positive definite");
  const Json input = pair_input(a, b);
  Tally t(Claim::Conj3);
  const UniPoly p = eta_char(a, b);
  const UniPoly ref = charpoly_reference(b);
  const Inertia got = inertia(p);
  const Inertia want = inertia(ref);
  t.detail["inertia"] = to_json(got);
  t.check(got.plus == want.plus && got.zero == want.zero && got.minus == want.minus, [&] {
    return Json{{"mixed", to_json(p)},
                {"mixed_inertia", to_json(got)},
                {"charpoly", to_json(ref)},
                {"charpoly_inertia", to_json(want)}};
  });
  return t.finish(input, digest(input));
}

std::vector<VerificationReport> verify_johnson(const HermitianMatrix& a, const HermitianMatrix& b) {
  if (a.order() != b.order()) throw std::invalid_argument("A and B must have the same order");
  const Definiteness d = definiteness(a);
  if (d == Definiteness::Indefinite) throw std::invalid_argument("A is not positive semidefinite");
  std::vector<VerificationReport> out{verify_conj1(a, b), verify_conj2(a, b)};
  if (d == Definiteness::PositiveDefinite) out.push_back(verify_conj3(a, b));
  return out;
}

// ---------------------------------------------------------------- Fischer suite

std::vector<VerificationReport> verify_cor31(const HermitianMatrix& a) {
  const Definiteness def = definiteness(a);
  if (def == Definiteness::Indefinite) throw std::invalid_argument("COR31: A is not positive semidefinite");
  const Json input = matrix_input(a);
  const std::string id = digest(input);
  const FischerProducts fp(a);
  const int d = fp.order();
  std::vector<Rational> avg;
  for (int k = 0; k <= d; ++k) avg.push_back(fp.k_th(k).average);

  Tally ta(Claim::Cor31a);
  for (int k = 0; k <= d / 2; ++k)
    for (int l = k; l <= d / 2; ++l)
      ta.check(avg[k] <= avg[l], [&] {
        return Json{{"k", k}, {"l", l}, {"avg_k", to_json(avg[k])}, {"avg_l", to_json(avg[l])}};
      });
  ta.detail["averages"] = to_json(avg);

  Tally tb(Claim::Cor31b);
  for (int k = 1; k + 1 <= d; ++k)
    tb.check(avg[k] * avg[k] >= avg[k - 1] * avg[k + 1], [&] {
      return Json{{"k", k},
                  {"square", to_json(avg[k] * avg[k])},
                  {"product", to_json(avg[k - 1] * avg[k + 1])}};
    });
  tb.detail["averages"] = to_json(avg);

  std::vector<VerificationReport> out{ta.finish(input, id), tb.finish(input, id)};
  if (def == Definiteness::PositiveDefinite) {
    Tally tc(Claim::Cor31c);
    const Rational det_a = fp.minor(IndexSet::full_mask(d));
    std::vector<Rational> r;
    for (int k = 0; k <= d; ++k) r.push_back(avg[k] / det_a);
    for (int k = 1; k + 1 <= d; ++k) {
      const Rational lhs = power(r[k], static_cast<unsigned>(k + 1));
      const Rational rhs = power(r[k + 1], static_cast<unsigned>(k));
      tc.check(lhs >= rhs, [&] {
        return Json{{"k", k}, {"ratio_k", to_json(r[k])}, {"ratio_k1", to_json(r[k + 1])},
                    {"lhs_power", to_json(lhs)}, {"rhs_power", to_json(rhs)}};
      });
    }
    if (d >= 1) tc.check(r[d] == Rational(1), [&] { return Json{{"k", d}, {"ratio", to_json(r[d])}}; });
    tc.detail["ratios"] = to_json(r);
    out.push_back(tc.finish(input, id));
  }
  return out;
}

// ---------------------------------------------------------------- majorization suite

namespace {

void check_shape(const MultiPoly& f, const ExponentVector& alpha) {
  if (static_cast<int>(alpha.size()) != f.nvars())
    throw std::invalid_argument("alpha has " + std::to_string(alpha.size()) + " entries for a polynomial in " +
                                std::to_string(f.nvars()) + " variables");
  if (f.is_zero()) return;
  if (!f.is_homogeneous()) throw std::invalid_argument("polynomial is not homogeneous");
  if (total_degree(alpha) != f.total_degree())
    throw std::invalid_argument("|alpha| = " + std::to_string(total_degree(alpha)) + " differs from deg f = " +
                                std::to_string(f.total_degree()));
}

// Log-concavity of coef(alpha + k(e_i - e_j)) for k in [-alpha_i + 1, alpha_j - 1].
template <typename Coef>
void log_concavity_checks(Tally& t, const ExponentVector& alpha, int i, int j, Coef coef) {
  const int ai = alpha[static_cast<std::size_t>(i)], aj = alpha[static_cast<std::size_t>(j)];
  for (int k = -ai + 1; k <= aj - 1; ++k) {
    const Rational mid = coef(shifted(alpha, i, j, k));
    const Rational left = coef(shifted(alpha, i, j, k - 1));
    const Rational right = coef(shifted(alpha, i, j, k + 1));
    t.check(mid * mid >= left * right, [&] {
      return Json{{"alpha", to_json(alpha)}, {"i", i + 1}, {"j", j + 1}, {"k", k},
                  {"center", to_json(mid)}, {"left", to_json(left)}, {"right", to_json(right)}};
    });
  }
}

void require_tlog_indices(const ExponentVector& alpha, int i, int j) {
  const int n = static_cast<int>(alpha.size());
  if (i < 0 || j < 0 || i >= n || j >= n || i == j) throw std::invalid_argument("i and j must be distinct indices");
  if (!(alpha[static_cast<std::size_t>(i)] >= alpha[static_cast<std::size_t>(j)] &&
        alpha[static_cast<std::size_t>(j)] > 0))
    throw std::invalid_argument("requires alpha_i >= alpha_j > 0");
}

}  // namespace

VerificationReport verify_tlog(const MultiPoly& f, const ExponentVector& alpha, int i, int j) {
  check_shape(f, alpha);
  require_tlog_indices(alpha, i, j);
  const Json input{{"f", Json{{"nvars", f.nvars()}, {"terms", to_json(f)}}},
                   {"alpha", to_json(alpha)}, {"i", i + 1}, {"j", j + 1}};
  Tally t(Claim::Thm32);
  log_concavity_checks(t, alpha, i, j, [&](const ExponentVector& e) { return normalized_coeff(f, e); });
  return t.finish(input, digest(input));
}

VerificationReport verify_cor34(const MultiPoly& f, const ExponentVector& alpha, const ExponentVector& beta) {
  check_shape(f, alpha);
  check_shape(f, beta);
  if (!is_majorized_by(beta, alpha)) throw std::invalid_argument("beta is not majorized by alpha");
  const Json input{{"f", Json{{"nvars", f.nvars()}, {"terms", to_json(f)}}},
                   {"alpha", to_json(alpha)}, {"beta", to_json(beta)}};
  Tally t(Claim::Cor34);
  const Rational a = normalized_coeff(f, alpha), b = normalized_coeff(f, beta);
  t.check(a <= b, [&] { return Json{{"alpha_coeff", to_json(a)}, {"beta_coeff", to_json(b)}}; });
  return t.finish(input, digest(input));
}

VerificationReport verify_cor36a(const FischerProducts& fp, const ExponentVector& alpha, const ExponentVector& beta) {
  if (!is_majorized_by(beta, alpha)) throw std::invalid_argument("beta is not majorized by alpha");
  const Json input{{"A", to_json(fp.matrix())}, {"alpha", to_json(alpha)}, {"beta", to_json(beta)}};
  Tally t(Claim::Cor36a);
  const Rational a = fp.of(alpha).average, b = fp.of(beta).average;
  t.check(a <= b, [&] { return Json{{"avg_alpha", to_json(a)}, {"avg_beta", to_json(b)}}; });
  return t.finish(input, digest(input));
}

VerificationReport verify_cor36b(const FischerProducts& fp, const ExponentVector& alpha) {
  if (total_degree(alpha) != fp.order()) throw std::invalid_argument("|alpha| differs from the matrix order");
  const Json input{{"A", to_json(fp.matrix())}, {"alpha", to_json(alpha)}};
  Tally t(Claim::Cor36b);
  const int n = static_cast<int>(alpha.size());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j && alpha[i] >= alpha[j] && alpha[j] > 0)
        log_concavity_checks(t, alpha, i, j, [&](const ExponentVector& e) { return fp.of(e).average; });
  return t.finish(input, digest(input));
}

std::vector<VerificationReport> verify_cmajor_cgen(const HermitianMatrix& a, const ExponentVector& alpha,
                                                   const ExponentVector& beta) {
  require_psd(a, "COR36");
  const int d = static_cast<int>(a.order());
  if (alpha.size() != beta.size()) throw std::invalid_argument("alpha and beta differ in length");
  if (total_degree(alpha) != d || total_degree(beta) != d)
    throw std::invalid_argument("|alpha| and |beta| must equal the order of A");
  if (!is_majorized_by(beta, alpha)) throw std::invalid_argument("beta is not majorized by alpha");
  const MultiPoly f = scaled_copies_eta(a, static_cast<int>(alpha.size()));
  const FischerProducts fp(a);
  return {verify_cor34(f, alpha, beta), verify_cor36a(fp, alpha, beta), verify_cor36b(fp, alpha)};
}

std::vector<VerificationReport> verify_majorization_suite(const HermitianMatrix& a, int parts) {
  require_psd(a, "majorization suite");
  const int d = static_cast<int>(a.order());
  const Json input{{"A", to_json(a)}, {"parts", parts}};
  const std::string id = digest(input);
  const MultiPoly f = scaled_copies_eta(a, parts);
  const FischerProducts fp(a);
  const auto alphas = compositions(d, parts);
  std::map<ExponentVector, Rational> fhat;
  for (const auto& alpha : alphas) fhat.emplace(alpha, normalized_coeff(f, alpha));
  auto fcoef = [&](const ExponentVector& e) { return fhat.at(e); };
  auto scoef = [&](const ExponentVector& e) { return fp.of(e).average; };

  Tally t32(Claim::Thm32), t34(Claim::Cor34), t36a(Claim::Cor36a), t36b(Claim::Cor36b);
  int pairs = 0;
  for (const auto& alpha : alphas) {
    for (int i = 0; i < parts; ++i)
      for (int j = 0; j < parts; ++j)
        if (i != j && alpha[i] >= alpha[j] && alpha[j] > 0) {
          log_concavity_checks(t32, alpha, i, j, fcoef);
          log_concavity_checks(t36b, alpha, i, j, scoef);
        }
    for (const auto& beta : alphas) {
      if (!is_majorized_by(beta, alpha)) continue;
      ++pairs;
      const Rational& fa = fhat.at(alpha);
      const Rational& fb = fhat.at(beta);
      t34.check(fa <= fb, [&] {
        return Json{{"alpha", to_json(alpha)}, {"beta", to_json(beta)}, {"alpha_coeff", to_json(fa)},
                    {"beta_coeff", to_json(fb)}};
      });
      const Rational sa = scoef(alpha), sb = scoef(beta);
      t36a.check(sa <= sb, [&] {
        return Json{{"alpha", to_json(alpha)}, {"beta", to_json(beta)}, {"avg_alpha", to_json(sa)},
                    {"avg_beta", to_json(sb)}};
      });
    }
  }
  t34.detail["majorization_pairs"] = pairs;
  t36a.detail["majorization_pairs"] = pairs;
  return {t32.finish(input, id), t34.finish(input, id), t36a.finish(input, id), t36b.finish(input, id)};
}

// ---------------------------------------------------------------- Laguerre / Koteljanskii

namespace {

void require_kotel_shape(int n, IndexSet s, IndexSet t) {
  if (s.order() != n || t.order() != n) throw std::invalid_argument("index sets do not match the matrix order");
  const int is = (s & t).size();
  if (!(is == s.size() - 1 && is == t.size() - 1))
    throw std::invalid_argument("requires |S & T| = |S| - 1 = |T| - 1");
}

void laguerre_checks(Tally& t41, Tally& t42, const std::vector<Rational>& minors, IndexSet s, IndexSet t) {
  const IndexSet u = s | t, i = s & t;
  const UniPoly diff = principal_charpoly(minors, s) * principal_charpoly(minors, t) -
                       principal_charpoly(minors, u) * principal_charpoly(minors, i);
  const auto neg = negativity_witness(diff);
  t41.check(!neg, [&] {
    return Json{{"S", to_json(s)}, {"T", to_json(t)}, {"difference", to_json(diff)},
                {"z", to_json(*neg)}, {"value", to_json(diff(*neg))}};
  });
  const Rational lhs = minors[u.mask()] * minors[i.mask()];
  const Rational rhs = minors[s.mask()] * minors[t.mask()];
  t42.check(lhs <= rhs, [&] {
    return Json{{"S", to_json(s)}, {"T", to_json(t)}, {"lhs", to_json(lhs)}, {"rhs", to_json(rhs)}};
  });
}

void cor45_checks(Tally& t, const std::vector<Rational>& minors, int n) {
  const std::uint32_t full = IndexSet::full_mask(n);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      const Rational& mi = minors[full ^ (1u << i)];
      const Rational& mj = minors[full ^ (1u << j)];
      t.check(mi * mj >= 0, [&] {
        return Json{{"i", i + 1}, {"j", j + 1}, {"minor_i", to_json(mi)}, {"minor_j", to_json(mj)}};
      });
    }
}

}  // namespace

std::vector<VerificationReport> verify_laguerre_kotel(const HermitianMatrix& a, const std::vector<Rational>& minors,
                                                      IndexSet s, IndexSet t) {
  const int n = static_cast<int>(a.order());
  require_kotel_shape(n, s, t);
  const Json input{{"A", to_json(a)}, {"S", to_json(s)}, {"T", to_json(t)}};
  const std::string id = digest(input);
  Tally t41(Claim::Thm41), t42(Claim::Cor42);
  laguerre_checks(t41, t42, minors, s, t);
  std::vector<VerificationReport> out{t41.finish(input, id), t42.finish(input, id)};
  if (minors.back().is_zero()) {
    Tally t45(Claim::Cor45);
    cor45_checks(t45, minors, n);
    out.push_back(t45.finish(input, id));
  }
  return out;
}

std::vector<VerificationReport> verify_laguerre_kotel(const HermitianMatrix& a, IndexSet s, IndexSet t) {
  return verify_laguerre_kotel(a, hermitian_minors(a), s, t);
}

VerificationReport verify_cor45(const HermitianMatrix& a) {
  const auto minors = hermitian_minors(a);
  if (!minors.back().is_zero()) throw std::invalid_argument("COR45: det(A) is not zero");
  const Json input = matrix_input(a);
  Tally t(Claim::Cor45);
  cor45_checks(t, minors, static_cast<int>(a.order()));
  return t.finish(input, digest(input));
}

std::vector<std::pair<IndexSet, IndexSet>> koteljanskii_pairs(int n, int max_size) {
  std::vector<std::pair<IndexSet, IndexSet>> out;
  for (std::uint32_t u = 0; u <= IndexSet::full_mask(n); ++u) {
    const int size = std::popcount(u);
    if (size < 2 || size > max_size + 1) continue;
    const IndexSet us(n, u);
    const auto elems = us.elements();
    for (std::size_t p = 0; p < elems.size(); ++p)
      for (std::size_t q = p + 1; q < elems.size(); ++q) out.emplace_back(us.without(elems[q]), us.without(elems[p]));
  }
  return out;
}

std::vector<VerificationReport> verify_laguerre_suite(const HermitianMatrix& a, int max_size) {
  const int n = static_cast<int>(a.order());
  const auto minors = hermitian_minors(a);
  const Json input{{"A", to_json(a)}, {"max_size", max_size}};
  const std::string id = digest(input);
  Tally t41(Claim::Thm41), t42(Claim::Cor42);
  int pairs = 0;
  for (const auto& [s, t] : koteljanskii_pairs(n, max_size)) {
    laguerre_checks(t41, t42, minors, s, t);
    ++pairs;
  }
  t41.detail["pairs"] = pairs;
  t42.detail["pairs"] = pairs;
  std::vector<VerificationReport> out{t41.finish(input, id), t42.finish(input, id)};
  if (minors.back().is_zero()) {
    Tally t45(Claim::Cor45);
    cor45_checks(t45, minors, n);
    out.push_back(t45.finish(input, id));
  }
  return out;
}

// ---------------------------------------------------------------- batches

namespace {

const VerificationReport& pick(const std::vector<VerificationReport>& reports, Claim c) {
  for (const auto& r : reports)
    if (r.claim == c) return r;
  throw std::logic_error("claim " + to_string(c) + " not produced");
}

VerificationReport run_instance(Claim claim, int n, std::uint64_t seed) {
  InstanceGenerator gen(seed);
  auto psd_any = [&] { return gen.psd(n, gen.uniform_int(1, std::max(n, 1))); };
  switch (claim) {
    case Claim::Conj1: {
      const auto a = psd_any();
      return verify_conj1(a, gen.hermitian(n));
    }
    case Claim::Conj2: {
      const auto a = psd_any();
      return verify_conj2(a, gen.hermitian(n));
    }
    case Claim::Conj3: {
      const auto a = gen.pd(n);
      return verify_conj3(a, gen.hermitian(n));
    }
    case Claim::Cor31a:
    case Claim::Cor31b:
      return pick(verify_cor31(psd_any()), claim);
    case Claim::Cor31c:
      return pick(verify_cor31(gen.pd(n)), claim);
    case Claim::Thm32:
    case Claim::Cor34:
    case Claim::Cor36a:
    case Claim::Cor36b:
      return pick(verify_majorization_suite(psd_any(), std::clamp(n, 2, 3)), claim);
    case Claim::Thm41:
    case Claim::Cor42:
      return pick(verify_laguerre_suite(gen.hermitian(n), 4), claim);
    case Claim::Cor45:
      return verify_cor45(gen.singular_hermitian(n));
  }
  throw std::logic_error("unknown claim");
}

int worker_count(int requested, int jobs) {
  int threads = requested;
  if (threads <= 0) {
    if (const char* env = std::getenv("MIXEDDET_THREADS")) threads = std::atoi(env);
    if (threads <= 0) threads = static_cast<int>(std::thread::hardware_concurrency());
  }
  return std::clamp(threads, 1, std::max(jobs, 1));
}

}  // namespace

std::vector<VerificationReport> verify_batch(Claim claim, const BatchOptions& options) {
  if (options.instances < 0) throw std::invalid_argument("instance count must be nonnegative");
  if (options.order < 1 || options.order > 12) throw std::invalid_argument("order must lie in [1, 12]");
  const int jobs = options.instances;
  std::vector<VerificationReport> out(static_cast<std::size_t>(jobs));
  std::vector<std::exception_ptr> errors(static_cast<std::size_t>(jobs));
  std::atomic<int> next{0};
  auto work = [&] {
    for (int k; (k = next++) < jobs;) {
      try {
        out[static_cast<std::size_t>(k)] =
            run_instance(claim, options.order, instance_seed(options.seed, static_cast<std::uint64_t>(k)));
      } catch (...) {
        errors[static_cast<std::size_t>(k)] = std::current_exception();
      }
    }
  };
  const int threads = worker_count(options.threads, jobs);
  if (threads == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < threads; ++w) pool.emplace_back(work);
    for (auto& th : pool) th.join();
  }
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
  return out;
}

}  // namespace mixeddet
