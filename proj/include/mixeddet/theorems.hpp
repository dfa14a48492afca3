#pragma once

// Symmetrized Fischer products, majorization, and executable checks of the
// real-rootedness, interlacing, inertia, unimodality and Laguerre-type
// determinantal inequalities for mixed determinants.
//
// Every verifier computes the claimed inequality exactly and returns a report
// whose FAIL verdict carries the full input and the violating data.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mixeddet/io.hpp"
#include "mixeddet/matcore.hpp"
#include "mixeddet/multipoly.hpp"
#include "mixeddet/unipoly.hpp"

namespace mixeddet {

enum class Claim {
  Conj1,   // eta(zA, -B) real-rooted, A PSD
  Conj2,   // eta(zA[j'], -B[j']) interlaces eta(zA, -B)
  Conj3,   // inertia(eta(zA, -B)) = inertia(det(zI - B)), A PD
  Cor31a,  // average Fischer products increase up to d/2
  Cor31b,  // average Fischer products are log-concave
  Cor31c,  // Maclaurin chain for (avg S_k / det A)^(1/k)
  Thm32,   // normalized coefficients log-concave along e_i - e_j
  Cor34,   // normalized coefficients Schur-concave
  Cor36a,  // average Fischer products Schur-concave in alpha
  Cor36b,  // average Fischer products log-concave along e_i - e_j
  Thm41,   // Laguerre-type char-poly inequality
  Cor42,   // Koteljanskii subset at z = 0
  Cor45,   // det(A[i'])det(A[j']) >= 0 when det A = 0
};

std::string to_string(Claim c);
std::optional<Claim> claim_from_string(const std::string& s);
const std::vector<Claim>& all_claims();

enum class Verdict { Pass, Fail };

struct VerificationReport {
  Claim claim = Claim::Conj1;
  std::string instance;  // digest of `input`
  Verdict verdict = Verdict::Pass;
  Json input;            // full reproduction bundle
  Json detail;           // values checked / degenerate branches taken
  Json witness;          // null unless FAIL

  bool passed() const { return verdict == Verdict::Pass; }
};

/// "input" is emitted only for FAIL reports.
Json to_json(const VerificationReport& r);

struct FischerPair {
  Rational sum;      // S
  Rational average;  // S / multinomial
};

/// Principal-minor table of one matrix with memoized Fischer products.
/// Not thread-safe (the memo is mutable); use one instance per thread.
class FischerProducts {
 public:
  explicit FischerProducts(const HermitianMatrix& a);

  int order() const { return d_; }
  const HermitianMatrix& matrix() const { return a_; }
  /// det(A[S]) from the table.
  const Rational& minor(std::uint32_t mask) const { return minors_[mask]; }

  /// S_k = sum_{|S| = k} det(A[S]) det(A[S']) and its binomial average.
  FischerPair k_th(int k) const;
  /// S_alpha over ordered partitions with block sizes alpha, |alpha| = d.
  FischerPair of(const ExponentVector& alpha) const;

 private:
  HermitianMatrix a_;
  int d_ = 0;
  std::vector<Rational> minors_;
  mutable std::map<ExponentVector, FischerPair> memo_;
};

FischerPair fischer_k(const HermitianMatrix& a, int k);
FischerPair fischer_alpha(const HermitianMatrix& a, const ExponentVector& alpha);

/// x is majorized by y (x < y in the majorization preorder).
bool is_majorized_by(const ExponentVector& x, const ExponentVector& y);

/// Moves t from the rank-th largest entry of y to the (rank+1)-th largest
/// (0-based rank; ties broken by position). Requires 0 < 2t <= y_[rank] - y_[rank+1].
ExponentVector pinch(const ExponentVector& y, int rank, int t);

/// All alpha in N^parts with |alpha| = total.
std::vector<ExponentVector> compositions(int total, int parts);

/// Real principal minors det(A[S]) indexed by mask.
std::vector<Rational> hermitian_minors(const HermitianMatrix& a);

/// det(zI - A[X]) = sum_{U subset X} (-1)^{|U|} det(A[U]) z^{|X|-|U|}, from a minor table.
UniPoly principal_charpoly(const std::vector<Rational>& minors, IndexSet x);

/// Reference det(zI - B): Leibniz expansion for n <= 7, exact interpolation of
/// Bareiss determinants above. Independent of the mixed-determinant code.
UniPoly charpoly_reference(const HermitianMatrix& b);
UniPoly charpoly_leibniz(const HermitianMatrix& b);

VerificationReport verify_conj1(const HermitianMatrix& a, const HermitianMatrix& b);
VerificationReport verify_conj2(const HermitianMatrix& a, const HermitianMatrix& b);
VerificationReport verify_conj3(const HermitianMatrix& a, const HermitianMatrix& b);
/// CONJ1 and CONJ2 (A PSD), plus CONJ3 when A is PD. Throws if A is not PSD.
std::vector<VerificationReport> verify_johnson(const HermitianMatrix& a, const HermitianMatrix& b);

/// COR31a/b for PSD A, plus COR31c when A is PD. Throws if A is not PSD.
std::vector<VerificationReport> verify_cor31(const HermitianMatrix& a);

/// Log-concavity of normalized coefficients at alpha along e_i - e_j, for every admissible shift k.
/// f must be homogeneous with |alpha| = deg f and alpha_i >= alpha_j > 0 (0-based i, j).
VerificationReport verify_tlog(const MultiPoly& f, const ExponentVector& alpha, int i, int j);

VerificationReport verify_cor34(const MultiPoly& f, const ExponentVector& alpha, const ExponentVector& beta);
VerificationReport verify_cor36a(const FischerProducts& fp, const ExponentVector& alpha,
                                 const ExponentVector& beta);
VerificationReport verify_cor36b(const FischerProducts& fp, const ExponentVector& alpha);
/// COR34 on f = eta(z_1 A, ..., z_n A), COR36a and COR36b; requires beta majorized by alpha, A PSD.
std::vector<VerificationReport> verify_cmajor_cgen(const HermitianMatrix& a, const ExponentVector& alpha,
                                                   const ExponentVector& beta);

/// THM32 and COR34 on f = eta(z_1 A, ..., z_parts A), COR36a and COR36b, over every
/// composition alpha of d into `parts` parts and every beta majorized by alpha.
std::vector<VerificationReport> verify_majorization_suite(const HermitianMatrix& a, int parts);

/// THM41 and COR42 for the pair (S, T), plus COR45 when det A = 0.
/// Requires |S & T| = |S| - 1 = |T| - 1.
std::vector<VerificationReport> verify_laguerre_kotel(const HermitianMatrix& a, IndexSet s, IndexSet t);
/// Same checks reusing a minor table of A.
std::vector<VerificationReport> verify_laguerre_kotel(const HermitianMatrix& a, const std::vector<Rational>& minors,
                                                      IndexSet s, IndexSet t);
VerificationReport verify_cor45(const HermitianMatrix& a);

/// THM41 and COR42 over koteljanskii_pairs(n, max_size), plus COR45 when det A = 0.
std::vector<VerificationReport> verify_laguerre_suite(const HermitianMatrix& a, int max_size);

/// All (S, T) with |S & T| = |S| - 1 = |T| - 1 and |S| <= max_size.
std::vector<std::pair<IndexSet, IndexSet>> koteljanskii_pairs(int n, int max_size);

struct BatchOptions {
  int instances = 10;
  std::uint64_t seed = 0;
  int order = 4;
  /// Worker threads; 0 reads MIXEDDET_THREADS (default: hardware concurrency).
  int threads = 0;
};

/// Generates `instances` random inputs for the claim and verifies each one.
/// One report per instance, in instance order; deterministic in the seed.
std::vector<VerificationReport> verify_batch(Claim claim, const BatchOptions& options);

}  // namespace mixeddet
