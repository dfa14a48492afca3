// Acceptance run: one PASS/FAIL line per criterion.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "mixeddet/generators.hpp"
#include "mixeddet/mixeddet.hpp"
#include "mixeddet/stability.hpp"
#include "mixeddet/theorems.hpp"

using namespace mixeddet;

namespace {

struct Outcome {
  bool ok = true;
  long checks = 0;
  std::string note;

  void expect(bool cond, const std::string& what) {
    ++checks;
    if (!cond && ok) {
      ok = false;
      note = what;
    }
  }
  void expect(const VerificationReport& r) {
    expect(r.passed(), to_string(r.claim) + " " + r.instance + " failed: " + r.detail.dump());
    if (r.detail.contains("checks")) checks += r.detail["checks"].get<long>() - 1;
  }
  void expect(const std::vector<VerificationReport>& rs) {
    for (const auto& r : rs) expect(r);
  }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::vector<HermitianMatrix> tuple(InstanceGenerator& gen, int n, int m) {
  std::vector<HermitianMatrix> out;
  for (int j = 0; j < m; ++j) out.push_back(gen.hermitian(n));
  return out;
}

// 1 <= n <= hi, cycling
int cycle(int k, int hi) { return 1 + k % hi; }

Outcome oracle_equivalence() {
  Outcome o;
  InstanceGenerator gen(1001);
  for (int k = 0; k < 200; ++k) {
    const auto ms = tuple(gen, cycle(k, 6), cycle(k / 6, 3));
    o.expect(eta_fast(ms) == eta_naive(ms), "eta_fast != eta_naive at tuple " + std::to_string(k));
  }
  for (int k = 0; k < 100; ++k) {
    const int n = cycle(k, 5), ell = cycle(k / 5, 3), m = cycle(k / 15, 3);
    std::vector<Pencil> ps;
    for (int j = 0; j < m; ++j) {
      std::vector<HermitianMatrix> coeffs;
      for (int c = 0; c < ell; ++c) coeffs.push_back(k % 2 ? gen.hermitian(n) : gen.psd(n));
      ps.emplace_back(std::move(coeffs), gen.hermitian(n));
    }
    const MultiPoly f = eta_pencil(ps);
    std::vector<Rational> z;
    for (int c = 0; c < ell; ++c) z.push_back(gen.rational());
    std::vector<HermitianMatrix> at;
    for (const auto& p : ps) at.push_back(pencil_eval(p, z));
    const GaussianRational direct = eta_naive(at);
    o.expect(direct.is_real() && eval(f, z) == direct.re(), "pencil value mismatch at instance " + std::to_string(k));
  }
  return o;
}

Outcome charpoly_identity() {
  Outcome o;
  InstanceGenerator gen(1002);
  for (int k = 0; k < 100; ++k) {
    const int n = cycle(k, 7);
    const auto b = gen.hermitian(n);
    o.expect(eta_char(HermitianMatrix::identity(n), b) == charpoly_leibniz(b),
             "eta_char(I, B) != det(zI - B) at instance " + std::to_string(k));
  }
  return o;
}

Outcome conj1_suite() {
  Outcome o;
  InstanceGenerator gen(1003);
  for (int k = 0; k < 500; ++k) {
    const int n = cycle(k, 8);
    // every third G is rank deficient
    const int rank = k % 3 == 0 ? gen.uniform_int(0, n - 1) : n;
    o.expect(verify_conj1(gen.psd(n, rank), gen.hermitian(n)));
  }
  return o;
}

Outcome conj2_suite() {
  Outcome o;
  InstanceGenerator gen(1004);
  for (int k = 0; k < 200; ++k) {
    const int n = cycle(k, 7);
    const int rank = k % 4 == 0 ? gen.uniform_int(0, n) : n;
    o.expect(verify_conj2(gen.psd(n, rank), gen.hermitian(n)));
  }
  return o;
}

Outcome conj3_suite() {
  Outcome o;
  InstanceGenerator gen(1005);
  for (int k = 0; k < 200; ++k) {
    const int n = cycle(k, 7);
    o.expect(verify_conj3(gen.pd(n), gen.hermitian(n)));
  }
  return o;
}

Outcome fischer_suite() {
  Outcome o;
  InstanceGenerator gen(1006);
  for (int k = 0; k < 100; ++k) {
    const int d = cycle(k, 8);
    const auto a = k % 2 ? gen.pd(d) : gen.psd(d, gen.uniform_int(0, d));
    o.expect(verify_cor31(a));
    const FischerProducts fp(a);
    for (int j = 0; j <= d; ++j) o.expect(fp.k_th(j).sum == fp.k_th(d - j).sum, "S_k != S_{d-k}");
    // Newton: c_k / C(d, k) log-concave for the coefficients of eta(zA, -A)
    const UniPoly e = eta_char(a, a);
    std::vector<Rational> b;
    for (int j = 0; j <= d; ++j) b.push_back(abs(e.coeff(j)) / Rational(binomial(d, j)));
    for (int j = 1; j < d; ++j) o.expect(b[j] * b[j] >= b[j - 1] * b[j + 1], "Newton inequality fails");
  }
  return o;
}

Outcome majorization_suite() {
  Outcome o;
  InstanceGenerator gen(1007);
  for (int d = 1; d <= 6; ++d)
    for (int parts = 2; parts <= 4; ++parts)
      for (int rep = 0; rep < 2; ++rep) {
        const auto a = rep == 0 ? gen.pd(d) : gen.psd(d, gen.uniform_int(1, d));
        o.expect(verify_majorization_suite(a, parts));
      }
  return o;
}

Outcome laguerre_suite() {
  Outcome o;
  InstanceGenerator gen(1008);
  for (int k = 0; k < 200; ++k) {
    const int n = 2 + k % 6;
    o.expect(verify_laguerre_suite(gen.hermitian(n), 4));
  }
  for (int k = 0; k < 50; ++k) {
    const auto a = gen.singular_hermitian(2 + k % 6);
    o.expect(verify_cor45(a));
    o.expect(verify_laguerre_suite(a, 3));
  }
  return o;
}

Outcome stability_suite() {
  Outcome o;
  InstanceGenerator gen(1009);
  for (int k = 0; k < 50; ++k) {
    const int n = 2 + k % 4;
    const auto a = gen.hermitian(n);
    // det(diag(z) - A)
    std::vector<HermitianMatrix> coeffs;
    for (int j = 0; j < n; ++j) {
      std::vector<GaussianRational> e(static_cast<std::size_t>(n), GaussianRational(0));
      e[static_cast<std::size_t>(j)] = GaussianRational(1);
      coeffs.push_back(HermitianMatrix::diagonal(e));
    }
    const MultiPoly f = eta_pencil({Pencil(std::move(coeffs), -a)});
    std::vector<MultiPoly> deltas;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) deltas.push_back(delta_ij(f, i, j));
    bool ok = true;
    for (int t = 0; t < 1000; ++t) {
      std::vector<Rational> x;
      for (int j = 0; j < n; ++j) x.push_back(gen.rational());
      for (const auto& d : deltas) ok = ok && eval(d, x) >= 0;
    }
    o.expect(ok, "negative Delta for det(Z - A) at instance " + std::to_string(k));
  }
  for (int k = 0; k < 50; ++k) {
    const int n = 2 + k % 3;
    MultiPoly f(n);
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
      ExponentVector e(static_cast<std::size_t>(n));
      for (int j = 0; j < n; ++j) e[static_cast<std::size_t>(j)] = (mask >> j) & 1u;
      f.add_term(e, gen.rational());
    }
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        if (i == j) continue;
        const MultiPoly fj = partial_derivative(f, j);
        const MultiPoly quotient = partial_derivative(fj, i) * f - fj * partial_derivative(f, i);
        o.expect(delta_ij(f, i, j) == -quotient, "Delta differs from the logarithmic form");
      }
  }
  for (int k = 0; k < 50; ++k) {
    const int deg = 1 + k % 5;
    const UniPoly p = gen.hyperbolic_polynomial(deg);
    const MultiPoly lift = gws_lift(p, deg + k % 2);
    const auto v = multiaffine_stability_check(lift, 200, static_cast<std::uint64_t>(k));
    o.expect(v.status != StabilityStatus::CertifiedUnstable, "gws_lift produced a witness at instance " + std::to_string(k));
    o.expect(diagonal_restriction(lift) == p, "gws_lift does not restrict to p");
  }
  return o;
}

Outcome performance() {
  Outcome o;
  InstanceGenerator gen(1010);
  {
    const auto ms = tuple(gen, 14, 2);
    std::vector<FloatHermitian> fs;
    for (const auto& m : ms) fs.push_back(to_floating(m));
    const auto t0 = Clock::now();
    const auto v = eta_fast(fs);
    const double s = seconds_since(t0);
    char buf[96];
    std::snprintf(buf, sizeof buf, "float n=14 m=2 %.2fs", s);
    o.note = buf;
    o.expect(std::isfinite(v.real()) && s <= 5.0, std::string(buf) + " exceeds 5s");
  }
  {
    const auto ms = tuple(gen, 10, 3);
    const auto t0 = Clock::now();
    const auto v = eta_fast(ms);
    const double s = seconds_since(t0);
    char buf[96];
    std::snprintf(buf, sizeof buf, ", exact n=10 m=3 %.2fs", s);
    const std::string first = o.note;
    o.expect(v.is_real() && s <= 30.0, std::string(buf) + " exceeds 30s");
    if (o.ok) o.note = first + buf;
  }
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {1, "eta_fast = eta_naive; pencil values", oracle_equivalence},
      {2, "eta_char(I, B) = det(zI - B)", charpoly_identity},
      {3, "CONJ1 real-rootedness, 500 instances", conj1_suite},
      {4, "CONJ2 interlacing, 200 instances", conj2_suite},
      {5, "CONJ3 inertia, 200 instances", conj3_suite},
      {6, "COR31 a/b/c, S_k symmetry, Newton", fischer_suite},
      {7, "THM32, COR34, COR36 majorization", majorization_suite},
      {8, "THM41, COR42, COR45", laguerre_suite},
      {9, "Delta criterion, log identity, GWS lift", stability_suite},
      {10, "performance targets", performance},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto t0 = Clock::now();
    const Outcome o = c.run();
    const double s = seconds_since(t0);
    std::printf("criterion %2d: %s  %s  (%ld checks, %.1fs)%s%s\n", c.id, o.ok ? "PASS" : "FAIL", c.name, o.checks, s,
                o.note.empty() ? "" : "  ", o.note.c_str());
    std::fflush(stdout);
    if (!o.ok) ++failed;
  }
  return failed == 0 ? 0 : 1;
}
