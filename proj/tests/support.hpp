#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "mixeddet/matcore.hpp"
#include "mixeddet/unipoly.hpp"

namespace testing {

using namespace mixeddet;

inline Rational q(const std::string& s) { return parse_rational(s); }

inline HermitianMatrix real_matrix(std::initializer_list<std::initializer_list<long long>> rows) {
  const auto n = static_cast<Index>(rows.size());
  ComplexMatrix m(n, n);
  Index i = 0;
  for (const auto& row : rows) {
    Index j = 0;
    for (long long v : row) m(i, j++) = GaussianRational(Rational(v));
    ++i;
  }
  return HermitianMatrix::from_dense(m);
}

inline HermitianMatrix diag(std::initializer_list<long long> d) {
  std::vector<GaussianRational> v;
  for (long long x : d) v.emplace_back(Rational(x));
  return HermitianMatrix::diagonal(v);
}

inline UniPoly poly(std::initializer_list<long long> c) {
  std::vector<Rational> v;
  for (long long x : c) v.emplace_back(x);
  return UniPoly(std::move(v));
}

}  // namespace testing
