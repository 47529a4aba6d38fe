#ifndef SUPERAL_PERMS_HPP
#define SUPERAL_PERMS_HPP

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace superal {

/// Permutation of {0,…,k-1} stored as the image list: perm[i] = sigma(i).
using Perm = std::vector<int>;
/// Parity bits (0 even, 1 odd) of an argument tuple.
using ParityWord = std::vector<int>;

inline Perm identity_perm(int k) {
  Perm p(k);
  std::iota(p.begin(), p.end(), 0);
  return p;
}

/// Ordinary signature (-1)^{inversions}.
inline int perm_sign(const Perm& sigma) {
  int inv = 0;
  for (std::size_t i = 0; i < sigma.size(); ++i)
    for (std::size_t j = i + 1; j < sigma.size(); ++j)
      if (sigma[i] > sigma[j]) ++inv;
  return (inv & 1) ? -1 : 1;
}

/// Super sign: (-1)^K where K counts inversions of sigma occurring between
/// two odd arguments, i.e. pairs i<j with sigma(i)>sigma(j) and both
/// X_{sigma(i)}, X_{sigma(j)} odd.
inline int super_sign(const Perm& sigma, const ParityWord& parities) {
  if (sigma.size() != parities.size()) throw std::invalid_argument("super_sign: length mismatch");
  int k = 0;
  for (std::size_t i = 0; i < sigma.size(); ++i)
    for (std::size_t j = i + 1; j < sigma.size(); ++j)
      if (sigma[i] > sigma[j] && parities[sigma[i]] == 1 && parities[sigma[j]] == 1) ++k;
  return (k & 1) ? -1 : 1;
}

/// Composition (sigma \circ tau)(i) = sigma(tau(i)).
inline Perm compose(const Perm& sigma, const Perm& tau) {
  Perm r(tau.size());
  for (std::size_t i = 0; i < tau.size(); ++i) r[i] = sigma[tau[i]];
  return r;
}

inline Perm inverse(const Perm& sigma) {
  Perm r(sigma.size());
  for (std::size_t i = 0; i < sigma.size(); ++i) r[sigma[i]] = static_cast<int>(i);
  return r;
}

/// Tuple action (sigma . X)_i = X_{sigma^{-1}(i)}: entry j moves to slot sigma(j).
template <class T>
std::vector<T> act_on_tuple(const Perm& sigma, const std::vector<T>& xs) {
  std::vector<T> out(xs.size());
  for (std::size_t j = 0; j < xs.size(); ++j) out[sigma[j]] = xs[j];
  return out;
}

/// Calls fn(sigma) for every permutation of {0,…,k-1} in lexicographic order.
template <class Fn>
void for_each_permutation(int k, Fn&& fn) {
  Perm sigma = identity_perm(k);
  do {
    fn(const_cast<const Perm&>(sigma));
  } while (std::next_permutation(sigma.begin(), sigma.end()));
}

/// Index tuple over a basis with d0 even elements (global indices 0..d0-1)
/// and d1 odd ones (d0..d0+d1-1): even indices strictly increasing, odd
/// indices non-decreasing, even block first.  Flattened, this is exactly a
/// non-decreasing sequence whose repeats all lie in the odd range.
struct CanonicalTupleIndex {
  std::vector<int> even;
  std::vector<int> odd;

  std::vector<int> flat() const {
    std::vector<int> v = even;
    v.insert(v.end(), odd.begin(), odd.end());
    return v;
  }
};

/// Closed-form count: sum over k0 of C(d0,k0) * C(k-k0+d1-1, d1-1).
inline std::uint64_t canonical_tuple_count(int d0, int d1, int k) {
  auto binom = [](std::uint64_t n, std::uint64_t r) -> std::uint64_t {
    if (r > n) return 0;
    r = std::min(r, n - r);
    unsigned __int128 acc = 1;
    for (std::uint64_t i = 1; i <= r; ++i) acc = acc * (n - r + i) / i;
    return static_cast<std::uint64_t>(acc);
  };
  std::uint64_t total = 0;
  for (int k0 = 0; k0 <= std::min(k, d0); ++k0) {
    int k1 = k - k0;
    std::uint64_t odd_ways = (k1 == 0) ? 1 : (d1 == 0 ? 0 : binom(k1 + d1 - 1, d1 - 1));
    total += binom(d0, k0) * odd_ways;
  }
  return total;
}

/// Enumerates canonical tuples in lexicographic order of the flattened
/// sequence, calling fn(flat_indices).
template <class Fn>
void enumerate_canonical_tuples(int d0, int d1, int k, Fn&& fn) {
  std::vector<int> cur(k);
  const int n = d0 + d1;
  auto rec = [&](auto&& self, int pos, int lo) -> void {
    if (pos == k) {
      fn(const_cast<const std::vector<int>&>(cur));
      return;
    }
    for (int v = lo; v < n; ++v) {
      cur[pos] = v;
      self(self, pos + 1, v < d0 ? v + 1 : v);
    }
  };
  rec(rec, 0, 0);
}

}  // namespace superal

#endif  // SUPERAL_PERMS_HPP
