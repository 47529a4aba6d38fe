#ifndef SUPERAL_SUPERPOLY_HPP
#define SUPERAL_SUPERPOLY_HPP

#include "superal/algebra.hpp"
#include "superal/graded.hpp"
#include "superal/perms.hpp"

#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

namespace superal {

/// Ordered tuple of homogeneous matrices together with its parity word.
/// The parity word is kept explicitly so that zero matrices occurring in a
/// slot intended as odd still contribute the odd sign bookkeeping (the
/// evaluated polynomials are multilinear, so the value is unaffected).
struct ArgTuple {
  std::vector<SuperMatrix<Rational>> mats;
  ParityWord parities;

  int size() const { return static_cast<int>(mats.size()); }

  static ArgTuple from(std::vector<SuperMatrix<Rational>> ms) {
    ParityWord par;
    par.reserve(ms.size());
    for (const auto& m : ms) par.push_back(m.parity_bit());
    return ArgTuple{std::move(ms), std::move(par)};
  }

  static ArgTuple from(std::vector<SuperMatrix<Rational>> ms, ParityWord par) {
    if (ms.size() != par.size()) throw std::invalid_argument("ArgTuple: parity word length mismatch");
    for (std::size_t i = 0; i < ms.size(); ++i)
      if (!ms[i].is_zero() && ms[i].parity_bit() != par[i])
        throw std::invalid_argument("ArgTuple: parity word inconsistent with entries");
    return ArgTuple{std::move(ms), std::move(par)};
  }

  static ArgTuple basis_tuple(const SuperAlgebra& g, const std::vector<int>& indices) {
    std::vector<SuperMatrix<Rational>> ms;
    ParityWord par;
    ms.reserve(indices.size());
    for (int i : indices) {
      ms.push_back(g.basis(i));
      par.push_back(g.parity_bit(i));
    }
    return ArgTuple{std::move(ms), std::move(par)};
  }
};

namespace detail {

/// Shared naive evaluator: sum over all permutations of the product
/// X_{sigma(1)} ... X_{sigma(k)} weighted by epsilon(sigma;X) and, for the
/// alternating polynomial, additionally by epsilon(sigma).
template <class S>
MatX<S> standard_naive(const std::vector<MatX<S>>& x, const ParityWord& par, bool alternating) {
  const int k = static_cast<int>(x.size());
  const auto n = x.front().rows();
  MatX<S> acc = MatX<S>::Zero(n, n);
  for_each_permutation(k, [&](const Perm& sigma) {
    int sign = super_sign(sigma, par);
    if (alternating) sign *= perm_sign(sigma);
    MatX<S> prod = x[sigma[0]];
    for (int i = 1; i < k; ++i) prod = prod.lazyProduct(x[sigma[i]]).eval();
    if (sign > 0)
      acc += prod;
    else
      acc -= prod;
  });
  return acc;
}

/// Dynamic program over position subsets.  T[mask] accumulates the value of
/// the standard polynomial on the sub-tuple selected by mask, by peeling the
/// leftmost factor: position j contributes with sign
/// (-1)^{r+1} (for the alternating variant, r = rank of j in mask)
/// times (-1)^{x_j * (sum of parities of earlier positions in mask)}.
/// Every entry, including singletons, costs one matrix multiplication
/// against the identity-seeded empty subset, so the total multiplication
/// count is exactly sum_m C(k,m)*m = k*2^{k-1}.
template <class S>
MatX<S> standard_dp(const std::vector<MatX<S>>& x, const ParityWord& par, bool alternating,
                    std::uint64_t* mul_count = nullptr) {
  const int k = static_cast<int>(x.size());
  const auto n = x.front().rows();
  std::vector<MatX<S>> table(std::size_t(1) << k);
  table[0] = MatX<S>::Identity(n, n);
  std::uint64_t muls = 0;
  for (std::uint32_t mask = 1; mask < (1u << k); ++mask) {
    MatX<S> acc = MatX<S>::Zero(n, n);
    int rank = 0;       // 1-based position of j within mask
    int parity_pre = 0; // parity sum of mask positions below j
    for (int j = 0; j < k; ++j) {
      if (((mask >> j) & 1u) == 0) continue;
      ++rank;
      int sign = 1;
      if (alternating && (rank & 1) == 0) sign = -sign;
      if ((par[j] & parity_pre) != 0) sign = -sign;
      MatX<S> term = x[j].lazyProduct(table[mask & ~(1u << j)]).eval();
      ++muls;
      if (sign > 0)
        acc += term;
      else
        acc -= term;
      parity_pre ^= par[j];
    }
    table[mask] = std::move(acc);
  }
  if (mul_count != nullptr) *mul_count = muls;
  return table[(std::size_t(1) << k) - 1];
}

template <class S>
std::vector<MatX<S>> raw_mats(const ArgTuple& args);

template <>
inline std::vector<MatX<Rational>> raw_mats<Rational>(const ArgTuple& args) {
  std::vector<MatX<Rational>> x;
  x.reserve(args.mats.size());
  for (const auto& m : args.mats) x.push_back(m.mat());
  return x;
}

}  // namespace detail

/// Alternating standard super polynomial, full k!-term sum.
inline SuperMatrix<Rational> standard_A_naive(const ArgTuple& args) {
  if (args.size() < 1) throw std::invalid_argument("standard_A_naive: k >= 1 required");
  return {args.mats.front().dim(), detail::standard_naive(detail::raw_mats<Rational>(args), args.parities, true)};
}

/// Symmetric standard super polynomial, full k!-term sum.
inline SuperMatrix<Rational> standard_P_naive(const ArgTuple& args) {
  if (args.size() < 1) throw std::invalid_argument("standard_P_naive: k >= 1 required");
  return {args.mats.front().dim(), detail::standard_naive(detail::raw_mats<Rational>(args), args.parities, false)};
}

/// Alternating standard super polynomial via the subset dynamic program.
inline SuperMatrix<Rational> standard_A_dp(const ArgTuple& args, std::uint64_t* mul_count = nullptr) {
  if (args.size() < 1) throw std::invalid_argument("standard_A_dp: k >= 1 required");
  return {args.mats.front().dim(), detail::standard_dp(detail::raw_mats<Rational>(args), args.parities, true, mul_count)};
}

/// Symmetric standard super polynomial via the same dynamic program
/// (the leftmost-factor recursion without the alternating sign).
inline SuperMatrix<Rational> standard_P_dp(const ArgTuple& args, std::uint64_t* mul_count = nullptr) {
  if (args.size() < 1) throw std::invalid_argument("standard_P_dp: k >= 1 required");
  return {args.mats.front().dim(), detail::standard_dp(detail::raw_mats<Rational>(args), args.parities, false, mul_count)};
}

/// P_k = str(standard P), Lambda_k = str(standard A).
inline Rational invariant_P(const ArgTuple& args) { return supertrace(standard_P_dp(args)); }
inline Rational invariant_Lambda(const ArgTuple& args) { return supertrace(standard_A_dp(args)); }

/// Identity checks relating the invariants, the bilinear form and
/// bracket-product expansions of the alternating polynomial.
///   a (length 2k+1): P_{2k+1} = (2k+1) B(PP_{2k}(X_1..X_{2k}) | X_{2k+1})
///                    and Lambda_{2k+1} = (2k+1) B(AA_{2k}(X_1..X_{2k}) | X_{2k+1});
///   b (length 2k):   sum_sigma eps(sigma)eps(sigma;X) [X.,X.]...[X.,X.] = 2^k AA_{2k};
///   c (length 2k+1): the analogous sum with one unbracketed factor equals
///                    2^k AA_{2k+1} for every fixed position of that factor.
enum class Prop41 { a, b, c };

inline bool prop41_check(Prop41 which, const ArgTuple& args) {
  const int k = args.size();
  const GradedDim d = args.mats.front().dim();

  if (which == Prop41::a) {
    if (k % 2 != 1) throw std::invalid_argument("prop41_check(a): tuple length must be odd");
    ArgTuple head{std::vector<SuperMatrix<Rational>>(args.mats.begin(), args.mats.end() - 1),
                  ParityWord(args.parities.begin(), args.parities.end() - 1)};
    Rational kk(k);
    bool p_ok = invariant_P(args) == kk * bilinear_form(standard_P_dp(head), args.mats.back());
    bool l_ok = invariant_Lambda(args) == kk * bilinear_form(standard_A_dp(head), args.mats.back());
    return p_ok && l_ok;
  }

  const int half = k / 2;
  auto bracket_product_sum = [&](int free_slot) {
    // free_slot in [0, half]: number of bracket pairs preceding the single
    // unbracketed factor; free_slot == -1 means no free factor (length 2k).
    MatX<Rational> acc = MatX<Rational>::Zero(d.total(), d.total());
    for_each_permutation(k, [&](const Perm& sigma) {
      int sign = perm_sign(sigma) * super_sign(sigma, args.parities);
      MatX<Rational> prod = MatX<Rational>::Identity(d.total(), d.total());
      int pos = 0;
      bool free_pending = free_slot >= 0;
      while (pos < k) {
        if (free_pending && pos == 2 * free_slot) {
          prod = prod.lazyProduct(args.mats[sigma[pos]].mat()).eval();
          ++pos;
          free_pending = false;
          continue;
        }
        SuperMatrix<Rational> br = superbracket(args.mats[sigma[pos]], args.mats[sigma[pos + 1]]);
        prod = prod.lazyProduct(br.mat()).eval();
        pos += 2;
      }
      if (sign > 0)
        acc += prod;
      else
        acc -= prod;
    });
    return acc;
  };

  Rational two_pow(1);
  for (int i = 0; i < half; ++i) two_pow *= Rational(2);

  if (which == Prop41::b) {
    if (k % 2 != 0) throw std::invalid_argument("prop41_check(b): tuple length must be even");
    return bracket_product_sum(-1) == two_pow * standard_A_dp(args).mat();
  }

  if (k % 2 != 1) throw std::invalid_argument("prop41_check(c): tuple length must be odd");
  MatX<Rational> rhs = two_pow * standard_A_dp(args).mat();
  for (int j = 0; j <= half; ++j)
    if (bracket_product_sum(j) != rhs) return false;
  return true;
}

/// Odd non-nilpotent element of gl(p,q) (1 in entries (0,p) and (p,0))
/// together with the nonzero value A_k(X,…,X) = k!·X^k, exhibiting that the
/// alternating identity fails on the full matrix superalgebra.
inline std::pair<SuperMatrix<Rational>, SuperMatrix<Rational>> counterexample_gl(int p, int q, int k) {
  if (p < 1 || q < 1) throw std::invalid_argument("counterexample_gl: need p >= 1 and q >= 1");
  if (k < 1) throw std::invalid_argument("counterexample_gl: k >= 1 required");
  GradedDim d(p, q);
  SuperMatrix<Rational> x = SuperMatrix<Rational>::unit(d, 0, p) + SuperMatrix<Rational>::unit(d, p, 0);
  ArgTuple args{std::vector<SuperMatrix<Rational>>(k, x), ParityWord(k, 1)};
  return {x, standard_A_dp(args)};
}

}  // namespace superal

#endif  // SUPERAL_SUPERPOLY_HPP
