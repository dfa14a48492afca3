#pragma once

// Disjoint-support subset convolution over the lattice of subsets of an
// n-element set, via ranked zeta and Moebius transforms:
//
//   (f * g)[S] = sum over T subset of S of f[T] * g[S \ T].
//
// Works over any commutative ring T; the caller supplies the ring zero so
// that polynomial coefficient types can carry their variable count.

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace mixeddet {

namespace detail {

template <typename T>
using Ranked = std::vector<std::vector<T>>;  // [rank][mask]

template <typename T>
Ranked<T> ranked_zeta(const std::vector<T>& f, int n, const T& zero) {
  const std::uint32_t size = 1u << n;
  Ranked<T> hat(static_cast<std::size_t>(n) + 1, std::vector<T>(size, zero));
  for (std::uint32_t s = 0; s < size; ++s) hat[std::popcount(s)][s] = f[s];
  for (int k = 0; k <= n; ++k) {
    auto& level = hat[static_cast<std::size_t>(k)];
    for (int bit = 0; bit < n; ++bit) {
      const std::uint32_t b = 1u << bit;
      for (std::uint32_t s = 0; s < size; ++s) {
        // Rank-k entries are supported on sets of size >= k.
        if ((s & b) && std::popcount(s) > k) level[s] += level[s ^ b];
      }
    }
  }
  return hat;
}

template <typename T>
T ranked_product_at(const Ranked<T>& f, const Ranked<T>& g, int k, std::uint32_t s, const T& zero) {
  T acc = zero;
  for (int i = 0; i <= k; ++i) acc += f[static_cast<std::size_t>(i)][s] * g[static_cast<std::size_t>(k - i)][s];
  return acc;
}

}  // namespace detail

/// Full table of (f * g)[S] for every S.
template <typename T>
std::vector<T> subset_convolution(const std::vector<T>& f, const std::vector<T>& g, int n,
                                  const T& zero) {
  const std::uint32_t size = 1u << n;
  if (f.size() != size || g.size() != size)
    throw std::invalid_argument("subset_convolution: tables must have 2^n entries");
  const auto fh = detail::ranked_zeta(f, n, zero);
  const auto gh = detail::ranked_zeta(g, n, zero);
  detail::Ranked<T> h(static_cast<std::size_t>(n) + 1, std::vector<T>(size, zero));
  for (int k = 0; k <= n; ++k)
    for (std::uint32_t s = 0; s < size; ++s)
      h[static_cast<std::size_t>(k)][s] = detail::ranked_product_at(fh, gh, k, s, zero);
  for (int k = 0; k <= n; ++k) {
    auto& level = h[static_cast<std::size_t>(k)];
    for (int bit = 0; bit < n; ++bit) {
      const std::uint32_t b = 1u << bit;
      for (std::uint32_t s = 0; s < size; ++s)
        if (s & b) level[s] -= level[s ^ b];
    }
  }
  std::vector<T> out(size, zero);
  for (std::uint32_t s = 0; s < size; ++s) out[s] = std::move(h[std::popcount(s)][s]);
  return out;
}

/// (f * g)[full set] only: the rank-n product Moebius-inverted at one point.
template <typename T>
T subset_convolution_full(const std::vector<T>& f, const std::vector<T>& g, int n, const T& zero) {
  const std::uint32_t size = 1u << n;
  if (f.size() != size || g.size() != size)
    throw std::invalid_argument("subset_convolution: tables must have 2^n entries");
  const auto fh = detail::ranked_zeta(f, n, zero);
  const auto gh = detail::ranked_zeta(g, n, zero);
  T acc = zero;
  for (std::uint32_t s = 0; s < size; ++s) {
    const T term = detail::ranked_product_at(fh, gh, n, s, zero);
    if ((n - std::popcount(s)) % 2 == 0) {
      acc += term;
    } else {
      acc -= term;
    }
  }
  return acc;
}

}  // namespace mixeddet
