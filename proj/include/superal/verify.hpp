#ifndef SUPERAL_VERIFY_HPP
#define SUPERAL_VERIFY_HPP

#include "superal/osp.hpp"
#include "superal/report.hpp"
#include "superal/rng.hpp"
#include "superal/superpoly.hpp"

#include <algorithm>
#include <cstdint>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>
#include <vector>

namespace superal {

enum class VerifyMode { exact, modular, random };

inline const char* mode_name(VerifyMode m) {
  switch (m) {
    case VerifyMode::exact: return "exact";
    case VerifyMode::modular: return "modular";
    default: return "random";
  }
}

struct VerifyOptions {
  VerifyMode mode = VerifyMode::exact;
  int samples = 1000;                           // random mode only
  std::uint64_t seed = 0;                       // random mode only
  int jobs = 1;                                 // worker threads; never affects output
  std::uint64_t prime = 2305843009213693951ull;  // 2^61 - 1, modular mode only
  std::size_t witness_cap = 5;
};

/// A-priori bound on |entries of A_k| over basis tuples: each of the k!
/// permutation terms is a product of k basis matrices, so its entries are
/// bounded by N^{k-1} M^k where N is the matrix size and M the largest
/// absolute basis entry.  For the osp bases M = 1 and this is the bound
/// k! N^{k-1} used to justify single-prime modular certification.
inline BigInt alternating_coefficient_bound(const SuperAlgebra& g, int k) {
  BigInt m(0);
  for (const auto& b : g.basis())
    for (int i = 0; i < g.space().total(); ++i)
      for (int j = 0; j < g.space().total(); ++j) {
        const Rational& e = b(i, j);
        BigInt a = boost::multiprecision::abs(e.numerator());
        if (!e.is_integer()) throw std::domain_error("coefficient bound: basis entries must be integers");
        if (a > m) m = a;
      }
  BigInt bound(1);
  for (int i = 2; i <= k; ++i) bound *= i;
  for (int i = 0; i < k - 1; ++i) bound *= BigInt(g.space().total());
  for (int i = 0; i < k; ++i) bound *= m;
  return bound;
}

namespace detail {

using PackedKey = unsigned __int128;

inline PackedKey pack_indices(const int* idx, int m) {
  PackedKey key = 0;
  for (int i = 0; i < m; ++i) key = (key << 6) | static_cast<unsigned>(idx[i]);
  return key;
}

/// Runs fn(chunk_begin, chunk_end) over [0,total) split across `jobs`
/// threads.  Chunks are fixed by (total, jobs) only; callers write disjoint
/// output slots, so results are independent of scheduling.
template <class Fn>
void parallel_ranges(std::uint64_t total, int jobs, Fn&& fn) {
  jobs = std::max(1, jobs);
  if (jobs == 1 || total < 2) {
    fn(std::uint64_t(0), total);
    return;
  }
  std::vector<std::thread> pool;
  std::uint64_t chunk = (total + jobs - 1) / jobs;
  for (int w = 0; w < jobs; ++w) {
    std::uint64_t lo = std::min(total, w * chunk);
    std::uint64_t hi = std::min(total, lo + chunk);
    if (lo >= hi) break;
    pool.emplace_back([lo, hi, &fn] { fn(lo, hi); });
  }
  for (auto& t : pool) t.join();
}

/// Evaluates the alternating standard polynomial on every canonical basis
/// tuple of length k, sharing work across tuples: canonical sub-tuples of
/// canonical tuples are canonical, so level m is computed from level m-1 by
/// peeling the leftmost factor.  on_final(ordinal, indices, value) is
/// invoked in lexicographic tuple order.
template <class S, class OnFinal>
void for_each_canonical_A(const std::vector<MatX<S>>& basis, int d0, int k, int jobs,
                          OnFinal&& on_final) {
  const int d1 = static_cast<int>(basis.size()) - d0;
  const auto nrows = basis.empty() ? 0 : basis.front().rows();
  const MatX<S> identity = MatX<S>::Identity(nrows, nrows);

  std::vector<PackedKey> prev_keys;     // level m-1, sorted == lex order
  std::vector<MatX<S>> prev_values;
  std::vector<PackedKey> keys;
  std::vector<MatX<S>> values;
  std::vector<int> flat_store;

  for (int m = 1; m <= k; ++m) {
    keys.clear();
    flat_store.clear();
    enumerate_canonical_tuples(d0, d1, m, [&](const std::vector<int>& t) {
      keys.push_back(pack_indices(t.data(), m));
      flat_store.insert(flat_store.end(), t.begin(), t.end());
    });
    const std::uint64_t count = keys.size();
    values.assign(count, MatX<S>());

    parallel_ranges(count, jobs, [&](std::uint64_t lo, std::uint64_t hi) {
      std::vector<int> sub(m > 1 ? m - 1 : 0);
      for (std::uint64_t t = lo; t < hi; ++t) {
        const int* idx = flat_store.data() + t * m;
        MatX<S> acc = MatX<S>::Zero(nrows, nrows);
        int parity_pre = 0;
        for (int r = 0; r < m; ++r) {
          int sign = (r & 1) ? -1 : 1;  // alternating part of the peel
          if (idx[r] >= d0 && (parity_pre & 1)) sign = -sign;
          const MatX<S>* tail = &identity;
          if (m > 1) {
            for (int l = 0, w = 0; l < m; ++l)
              if (l != r) sub[w++] = idx[l];
            PackedKey key = pack_indices(sub.data(), m - 1);
            auto it = std::lower_bound(prev_keys.begin(), prev_keys.end(), key);
            tail = &prev_values[static_cast<std::size_t>(it - prev_keys.begin())];
          }
          if (sign > 0)
            acc.noalias() += basis[idx[r]].lazyProduct(*tail);
          else
            acc.noalias() -= basis[idx[r]].lazyProduct(*tail);
          if (idx[r] >= d0) parity_pre ^= 1;
        }
        values[t] = std::move(acc);
      }
    });

    if (m == k) {
      std::vector<int> flat(k);
      for (std::uint64_t t = 0; t < count; ++t) {
        std::copy(flat_store.begin() + t * k, flat_store.begin() + (t + 1) * k, flat.begin());
        on_final(t, flat, values[t]);
      }
      return;
    }
    prev_keys.swap(keys);
    prev_values.swap(values);
  }
}

inline nlohmann::json matrix_witness(const MatX<Rational>& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (int i = 0; i < m.rows(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(m(i, j).str());
    rows.push_back(row);
  }
  return rows;
}

inline nlohmann::json matrix_witness(const MatX<Fp>& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (int i = 0; i < m.rows(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(std::to_string(m(i, j).value()));
    rows.push_back(row);
  }
  return rows;
}

inline nlohmann::json index_witness(const std::vector<int>& flat) {
  nlohmann::json a = nlohmann::json::array();
  for (int i : flat) a.push_back(std::to_string(i));
  return a;
}

}  // namespace detail

/// Verifies that the alternating standard polynomial of length k vanishes
/// identically on the given algebra.  Exact and modular modes sweep every
/// canonical basis tuple (sufficient by multilinearity and equivariance);
/// random mode evaluates k-tuples of random small-integer combinations
/// exactly.  A nonzero value is recorded as a falsification witness.
inline VerificationReport verify_alternating_on(const SuperAlgebra& g, int k, const VerifyOptions& opt) {
  VerificationReport rep;
  rep.claim = "alternating_identity";
  rep.parameters["algebra"] = g.name();
  rep.parameters["k"] = std::to_string(k);
  rep.parameters["mode"] = mode_name(opt.mode);
  const int d0 = g.even_dim();

  if (opt.mode == VerifyMode::random) {
    rep.parameters["samples"] = std::to_string(opt.samples);
    rep.seed = opt.seed;
    Rng rng(opt.seed);
    // All sampling happens up front from the seed, so the report does not
    // depend on how evaluation is scheduled.
    std::vector<std::vector<MatX<Rational>>> tuples(opt.samples);
    std::vector<ParityWord> parities(opt.samples);
    std::vector<nlohmann::json> coeff_logs(opt.samples);
    for (int s = 0; s < opt.samples; ++s) {
      nlohmann::json log = nlohmann::json::array();
      for (int slot = 0; slot < k; ++slot) {
        int par = rng.next_bool() ? 1 : 0;
        VecX<Rational> c = VecX<Rational>::Zero(g.dim());
        nlohmann::json centry = nlohmann::json::array();
        for (int i = 0; i < g.dim(); ++i) {
          if (g.parity_bit(i) == par) c[i] = Rational(rng.next_int(-3, 3));
          centry.push_back(c[i].str());
        }
        tuples[s].push_back(g.element(c).mat());
        parities[s].push_back(par);
        log.push_back(std::move(centry));
      }
      coeff_logs[s] = std::move(log);
    }
    std::vector<MatX<Rational>> results(opt.samples);
    detail::parallel_ranges(opt.samples, opt.jobs, [&](std::uint64_t lo, std::uint64_t hi) {
      for (std::uint64_t s = lo; s < hi; ++s)
        results[s] = detail::standard_dp(tuples[s], parities[s], true);
    });
    for (int s = 0; s < opt.samples; ++s) {
      ++rep.tuples_checked;
      if (!results[s].isZero(Rational(0)))
        rep.record_failure({{"sample", std::to_string(s)},
                            {"coefficients", coeff_logs[s]},
                            {"value", detail::matrix_witness(results[s])}},
                           opt.witness_cap);
    }
    return rep;
  }

  BigInt bound = alternating_coefficient_bound(g, k);
  rep.coefficient_bound = bound.str();

  if (opt.mode == VerifyMode::modular) {
    if (!is_prime_u64(opt.prime))
      throw std::invalid_argument("verify: modulus " + std::to_string(opt.prime) + " is not prime");
    if (bound >= BigInt(opt.prime))
      throw std::invalid_argument("verify: coefficient bound " + bound.str() +
                                  " is not below the prime " + std::to_string(opt.prime) +
                                  "; a single modular pass cannot certify zero");
    rep.primes.push_back(opt.prime);
    std::vector<MatX<Fp>> basis = g.basis_mod(opt.prime);
    detail::for_each_canonical_A<Fp>(basis, d0, k, opt.jobs,
                                     [&](std::uint64_t ord, const std::vector<int>& flat, const MatX<Fp>& v) {
                                       ++rep.tuples_checked;
                                       if (!v.isZero(Fp(0)))
                                         rep.record_failure({{"ordinal", std::to_string(ord)},
                                                             {"indices", detail::index_witness(flat)},
                                                             {"value", detail::matrix_witness(v)}},
                                                            opt.witness_cap);
                                     });
  } else {
    std::vector<MatX<Rational>> basis;
    for (const auto& b : g.basis()) basis.push_back(b.mat());
    detail::for_each_canonical_A<Rational>(basis, d0, k, opt.jobs,
                                           [&](std::uint64_t ord, const std::vector<int>& flat, const MatX<Rational>& v) {
                                             ++rep.tuples_checked;
                                             if (!v.isZero(Rational(0)))
                                               rep.record_failure({{"ordinal", std::to_string(ord)},
                                                                   {"indices", detail::index_witness(flat)},
                                                                   {"value", detail::matrix_witness(v)}},
                                                                  opt.witness_cap);
                                           });
  }

  std::uint64_t expected = canonical_tuple_count(d0, g.odd_dim(), k);
  if (rep.tuples_checked != expected)
    throw std::logic_error("verify: enumerated tuple count disagrees with the closed form");
  return rep;
}

/// Main verification entry point: the length-(4n+2) alternating identity on osp(1,2n).
inline VerificationReport verify_al(int n, const VerifyOptions& opt) {
  if (n < 1) throw std::invalid_argument("verify_al: n >= 1 required");
  SuperAlgebra osp = osp_algebra(n);
  VerificationReport rep = verify_alternating_on(osp, 4 * n + 2, opt);
  rep.parameters["n"] = std::to_string(n);
  return rep;
}

enum class SharpnessKind { mixed_even_block, full_length_odd_arity };

/// Search for nonzero values of the alternating polynomial just below the
/// vanishing threshold: either A_{4n} on tuples of 4n-1 distinct even basis
/// elements and one odd element, or A_{4n+1} on all canonical tuples.
/// Returns the lexicographically first witness.  The scan runs modulo
/// 2^61-1 (a nonzero residue certifies a nonzero integer) and the witness
/// is confirmed exactly before being returned.
inline std::optional<std::pair<std::vector<int>, SuperMatrix<Rational>>> sharpness_witness(
    int n, SharpnessKind kind, int jobs = 1) {
  if (n < 1) throw std::invalid_argument("sharpness_witness: n >= 1 required");
  if (kind == SharpnessKind::full_length_odd_arity && n > 2)
    throw std::invalid_argument("sharpness_witness: the odd-arity case is supported for n in {1,2}");
  SuperAlgebra osp = osp_algebra(n);
  const int k = (kind == SharpnessKind::mixed_even_block) ? 4 * n : 4 * n + 1;
  const std::uint64_t prime = 2305843009213693951ull;
  if (alternating_coefficient_bound(osp, k) >= BigInt(prime))
    throw std::logic_error("sharpness_witness: coefficient bound exceeds the scanning prime");

  std::optional<std::vector<int>> first;
  std::vector<MatX<Fp>> basis = osp.basis_mod(prime);
  detail::for_each_canonical_A<Fp>(basis, osp.even_dim(), k, jobs,
                                   [&](std::uint64_t, const std::vector<int>& flat, const MatX<Fp>& v) {
                                     if (first) return;
                                     if (kind == SharpnessKind::mixed_even_block) {
                                       int odd = 0;
                                       for (int i : flat)
                                         if (i >= osp.even_dim()) ++odd;
                                       if (odd != 1) return;
                                     }
                                     if (!v.isZero(Fp(0))) first = flat;
                                   });
  if (!first) return std::nullopt;

  SuperMatrix<Rational> exact = standard_A_dp(ArgTuple::basis_tuple(osp, *first));
  if (exact.is_zero()) throw std::logic_error("sharpness_witness: modular hit not confirmed exactly");
  return std::make_pair(*first, exact);
}

}  // namespace superal

#endif  // SUPERAL_VERIFY_HPP
