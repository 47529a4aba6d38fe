#ifndef SUPERAL_SUITES_HPP
#define SUPERAL_SUITES_HPP

#include "superal/forms.hpp"
#include "superal/osp.hpp"
#include "superal/report.hpp"
#include "superal/rng.hpp"
#include "superal/superpoly.hpp"
#include "superal/sympoly.hpp"
#include "superal/verify.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace superal {

/// Random homogeneous element: integer combination (coefficients in [-3,3])
/// of the basis vectors of one parity.
inline SuperMatrix<Rational> random_homogeneous(Rng& rng, const SuperAlgebra& g, int parity) {
  VecX<Rational> c = VecX<Rational>::Zero(g.dim());
  for (int i = 0; i < g.dim(); ++i)
    if (g.parity_bit(i) == parity) c[i] = Rational(rng.next_int(-3, 3));
  return g.element(c);
}

/// Uniform random permutation (Fisher-Yates).
inline Perm random_perm(Rng& rng, int k) {
  Perm p = identity_perm(k);
  for (int i = k - 1; i > 0; --i)
    std::swap(p[i], p[static_cast<std::size_t>(rng.next_below(static_cast<std::uint64_t>(i) + 1))]);
  return p;
}

/// Random homogeneous tuple with a uniformly random parity word.
inline ArgTuple random_arg_tuple(Rng& rng, const SuperAlgebra& g, int k) {
  std::vector<SuperMatrix<Rational>> mats;
  ParityWord par;
  for (int i = 0; i < k; ++i) {
    par.push_back(rng.next_bool() ? 1 : 0);
    mats.push_back(random_homogeneous(rng, g, par.back()));
  }
  return ArgTuple::from(std::move(mats), std::move(par));
}

/// Random form with small integer coefficients over the canonical keys.
inline MultilinearForm random_multilinear(Rng& rng, const SuperAlgebra& g, int arity, Variance v,
                                          int z2) {
  MultilinearForm f(g, arity, v, z2);
  enumerate_form_keys(g, arity, v, z2, [&](const std::vector<int>& key) {
    Rational c(rng.next_int(-2, 2));
    if (!c.is_zero()) f.add_term(key, c);
  });
  return f;
}

/// Random unimodular parity-preserving change of basis: integer column
/// operations applied to the identity, separately inside each parity block.
inline std::vector<SuperMatrix<Rational>> random_basis_change(Rng& rng, const SuperAlgebra& g) {
  MatX<Rational> u = MatX<Rational>::Identity(g.dim(), g.dim());
  for (int t = 0; t < 40; ++t) {
    bool even = rng.next_bool();
    int lo = even ? 0 : g.even_dim();
    int hi = even ? g.even_dim() : g.dim();
    if (hi - lo < 2) continue;
    int i = static_cast<int>(rng.next_int(lo, hi - 1));
    int j = static_cast<int>(rng.next_int(lo, hi - 1));
    if (i == j) continue;
    u.col(i) += Rational(rng.next_int(-2, 2)) * u.col(j);
  }
  std::vector<SuperMatrix<Rational>> out;
  for (int m = 0; m < g.dim(); ++m) out.push_back(g.element(u.col(m)));
  return out;
}

/// Odd elements of osp(1,2n) cube to zero (n <= 3, 100 samples each) and act
/// nilpotently in the adjoint representation (n <= 2, 25 samples each).
inline VerificationReport suite_prop21(std::uint64_t seed = 2025) {
  VerificationReport rep;
  rep.claim = "odd_elements_cube_to_zero";
  rep.seed = seed;
  rep.parameters["cube_samples"] = "300";
  rep.parameters["adjoint_samples"] = "50";
  Rng rng(seed);
  for (int n = 1; n <= 3; ++n) {
    SuperAlgebra g = osp_algebra(n);
    for (int t = 0; t < 100; ++t) {
      SuperMatrix<Rational> x = random_homogeneous(rng, g, 1);
      ++rep.tuples_checked;
      if (!(x * x * x).is_zero())
        rep.record_failure({{"check", "cube"}, {"n", std::to_string(n)}, {"trial", std::to_string(t)}});
    }
  }
  for (int n = 1; n <= 2; ++n) {
    SuperAlgebra g = osp_algebra(n);
    for (int t = 0; t < 25; ++t) {
      SuperMatrix<Rational> x = random_homogeneous(rng, g, 1);
      MatX<Rational> ad = g.ad_matrix(x);
      MatX<Rational> p = MatX<Rational>::Identity(g.dim(), g.dim());
      for (int e = 0; e < g.dim(); ++e) p = p.lazyProduct(ad).eval();
      ++rep.tuples_checked;
      if (!(p == MatX<Rational>::Zero(g.dim(), g.dim())))
        rep.record_failure(
            {{"check", "adjoint_power"}, {"n", std::to_string(n)}, {"trial", std::to_string(t)}});
    }
  }
  return rep;
}

/// Identity battery for the standard polynomials on random homogeneous
/// tuples: the supertrace/bilinear-form expansions of odd length, the
/// bracket-product expansions, and vanishing of the even-length alternating
/// supertrace invariant.
inline VerificationReport suite_prop41(std::uint64_t seed = 2025) {
  VerificationReport rep;
  rep.claim = "standard_polynomial_identities";
  rep.seed = seed;
  Rng rng(seed);
  SuperAlgebra g12 = gl_algebra(1, 2);
  const std::pair<Prop41, const char*> idents[] = {
      {Prop41::a, "a"}, {Prop41::b, "b"}, {Prop41::c, "c"}};
  for (int k = 1; k <= 2; ++k)
    for (const auto& [which, label] : idents) {
      int len = which == Prop41::b ? 2 * k : 2 * k + 1;
      for (int t = 0; t < 100; ++t) {
        ArgTuple args = random_arg_tuple(rng, g12, len);
        ++rep.tuples_checked;
        if (!prop41_check(which, args))
          rep.record_failure({{"check", std::string("identity_") + label},
                              {"k", std::to_string(k)},
                              {"trial", std::to_string(t)}});
      }
    }
  SuperAlgebra g22 = gl_algebra(2, 2);
  for (int k = 1; k <= 4; ++k)
    for (int t = 0; t < 50; ++t) {
      ArgTuple args = random_arg_tuple(rng, g22, 2 * k);
      ++rep.tuples_checked;
      if (!invariant_Lambda(args).is_zero())
        rep.record_failure({{"check", "even_alternating_invariant"},
                            {"k", std::to_string(k)},
                            {"trial", std::to_string(t)}});
    }
  rep.parameters["identity_samples_per_case"] = "100";
  rep.parameters["even_invariant_samples"] = "200";
  return rep;
}

/// Transgression output tables and structural laws: t carries the symmetric
/// invariants built from supertraces of powers onto the alternating ones
/// (t(P_1) = L_1, t(P_2) = -2 L_3), satisfies d(t(F)) = s(R(F)), is an
/// s-derivation of products, kills squares of positive-degree invariants,
/// and does not depend on the homogeneous basis used to expand the identity.
inline VerificationReport suite_thm41(std::uint64_t seed = 2025) {
  VerificationReport rep;
  rep.claim = "transgression_output_tables";
  rep.seed = seed;
  Rng rng(seed);

  auto check = [&](bool ok, const char* label, const std::string& where) {
    ++rep.tuples_checked;
    if (!ok) rep.record_failure({{"check", label}, {"algebra", where}});
  };

  for (auto make : {+[] { return gl_algebra(1, 2); }, +[] { return osp_algebra(1); }}) {
    SuperAlgebra g = make();
    MultilinearForm p1 = build_P_form(g, 1);
    MultilinearForm p2 = build_P_form(g, 2);
    check(transgress(p1) == build_Lambda_form(g, 1), "table_k1", g.name());
    check(transgress(p2) == Rational(-2) * build_Lambda_form(g, 3), "table_k2", g.name());
    check(differential_d(transgress(p2)) == s_map(degree_operator_R(p2)), "d_after_t", g.name());
    for (int rep_i = 0; rep_i < 3; ++rep_i) {
      MultilinearForm f = random_multilinear(rng, g, 2, Variance::supersym, rng.next_bool());
      check(differential_d(transgress(f)) == s_map(degree_operator_R(f)), "d_after_t_random",
            g.name());
    }
  }

  SuperAlgebra o = osp_algebra(1);
  for (int t = 0; t < 50; ++t) {
    MultilinearForm p = random_multilinear(rng, o, 1, Variance::supersym, rng.next_bool());
    MultilinearForm q = random_multilinear(rng, o, 1, Variance::supersym, rng.next_bool());
    check(transgress(dot(p, q)) ==
              wedge(transgress(p), s_map(q)) + wedge(s_map(p), transgress(q)),
          "product_rule", o.name());
  }

  MultilinearForm p2 = build_P_form(o, 2);
  check(s_map(p2).is_zero(), "s_kills_positive_invariant", o.name());
  check(transgress(dot(p2, p2)).is_zero(), "t_kills_squares", o.name());
  check(is_invariant(transgress(p2)), "t_preserves_invariance", o.name());

  MultilinearForm reference = transgress(p2);
  for (int t = 0; t < 20; ++t) {
    std::vector<SuperMatrix<Rational>> basis = random_basis_change(rng, o);
    check(transgress_via_tau(p2, basis) == reference, "basis_independence", o.name());
  }
  rep.parameters["product_rule_samples"] = "50";
  rep.parameters["basis_changes"] = "20";
  return rep;
}

/// Differential consistency: d squares to zero, the pairwise-bracket route
/// and the dual-basis route agree, and the contraction homotopy reproduces
/// the coadjoint action.
inline VerificationReport suite_cohomology(std::uint64_t seed = 2025) {
  VerificationReport rep;
  rep.claim = "differential_consistency";
  rep.seed = seed;
  Rng rng(seed);
  for (auto make : {+[] { return gl_algebra(1, 2); }, +[] { return osp_algebra(1); }}) {
    SuperAlgebra g = make();
    for (int i = 0; i < g.dim(); ++i) {
      MultilinearForm phi = dual_form(g, i, Variance::skew);
      ++rep.tuples_checked;
      if (!differential_d(differential_d(phi)).is_zero())
        rep.record_failure({{"check", "d_squared_dual"}, {"algebra", g.name()}, {"i", std::to_string(i)}});
      ++rep.tuples_checked;
      if (!(differential_d(phi) == differential_d_dual_route(phi)))
        rep.record_failure({{"check", "route_dual"}, {"algebra", g.name()}, {"i", std::to_string(i)}});
    }
    for (int t = 0; t < 25; ++t) {
      MultilinearForm f = random_multilinear(rng, g, 2, Variance::skew, t & 1);
      MultilinearForm df = differential_d(f);
      ++rep.tuples_checked;
      if (!differential_d(df).is_zero())
        rep.record_failure({{"check", "d_squared"}, {"algebra", g.name()}, {"trial", std::to_string(t)}});
      ++rep.tuples_checked;
      if (!(df == differential_d_dual_route(f)))
        rep.record_failure({{"check", "route"}, {"algebra", g.name()}, {"trial", std::to_string(t)}});
      SuperMatrix<Rational> x = random_homogeneous(rng, g, static_cast<int>(rng.next_bool()));
      ++rep.tuples_checked;
      if (!(lie_action(x, f) ==
            contraction_iota(x, df) + differential_d(contraction_iota(x, f))))
        rep.record_failure({{"check", "homotopy"}, {"algebra", g.name()}, {"trial", std::to_string(t)}});
    }
  }
  rep.parameters["random_two_forms_per_algebra"] = "25";
  return rep;
}

/// The (n+1)-st even power-sum invariant restricted to the diagonal torus is
/// a polynomial with no constant or linear part in the lower power sums.
inline VerificationReport suite_newton(std::uint64_t seed = 2025) {
  VerificationReport rep;
  rep.claim = "power_sum_reduction";
  rep.seed = seed;
  for (int n = 1; n <= 4; ++n) {
    VerificationReport sub = verify_squared_ideal(n, 100, seed + static_cast<std::uint64_t>(n));
    rep.absorb(sub);
    rep.parameters["certificate_n" + std::to_string(n)] = sub.parameters["certificate"];
  }
  rep.parameters["trials_per_rank"] = "100";
  return rep;
}

/// Standard polynomial evaluations on orthosymplectic tuples land back in
/// the algebra, so their supertraces vanish.
inline VerificationReport suite_membership(std::uint64_t seed = 2025) {
  VerificationReport rep;
  rep.claim = "evaluations_stay_in_algebra";
  rep.seed = seed;
  Rng rng(seed);

  auto prefix = [](const ArgTuple& args, int len) {
    return ArgTuple{std::vector<SuperMatrix<Rational>>(args.mats.begin(), args.mats.begin() + len),
                    ParityWord(args.parities.begin(), args.parities.begin() + len)};
  };
  auto run = [&](int n, int tuples, const std::vector<std::pair<bool, int>>& polys) {
    SuperAlgebra g = osp_algebra(n);
    int full = 0;
    for (const auto& [alt, len] : polys) full = std::max(full, len);
    for (int t = 0; t < tuples; ++t) {
      ArgTuple args = random_arg_tuple(rng, g, full);
      for (const auto& [alt, len] : polys) {
        ArgTuple sub = prefix(args, len);
        SuperMatrix<Rational> val = alt ? standard_A_dp(sub) : standard_P_dp(sub);
        ++rep.tuples_checked;
        if (!membership_check(val, n) || !supertrace(val).is_zero())
          rep.record_failure({{"check", alt ? "alternating" : "symmetric"},
                              {"n", std::to_string(n)},
                              {"length", std::to_string(len)},
                              {"trial", std::to_string(t)}});
      }
    }
  };

  run(1, 100, {{false, 3}, {false, 5}, {true, 5}, {true, 6}});
  run(2, 20, {{false, 3}, {true, 9}, {true, 10}});
  rep.parameters["tuples_rank1"] = "100";
  rep.parameters["tuples_rank2"] = "20";
  return rep;
}

/// On the full matrix superalgebra gl(1,1) the alternating identity fails:
/// an odd element X with A_k(X,...,X) = k! X^k != 0 for every 2 <= k <= 8,
/// confirmed against the full permutation sum.
inline VerificationReport suite_counterexample() {
  VerificationReport rep;
  rep.claim = "full_matrix_algebra_nonvanishing";
  for (int k = 2; k <= 8; ++k) {
    auto [x, val] = counterexample_gl(1, 1, k);
    Rational kfact(1);
    for (int i = 2; i <= k; ++i) kfact *= Rational(i);
    SuperMatrix<Rational> expected = kfact * x.pow(k);
    ArgTuple args{std::vector<SuperMatrix<Rational>>(static_cast<std::size_t>(k), x),
                  ParityWord(static_cast<std::size_t>(k), 1)};
    bool ok = !val.is_zero() && val == expected && val == standard_A_naive(args);
    ++rep.tuples_checked;
    if (!ok) rep.record_failure({{"check", "closed_form"}, {"k", std::to_string(k)}});
  }
  rep.parameters["k_range"] = "2..8";
  auto [x8, v8] = counterexample_gl(1, 1, 8);
  rep.parameters["value_at_k8_diag"] = v8(0, 0).str();
  return rep;
}

/// The vanishing degree is sharp: nonzero values exist at lengths 4n and
/// 4n+1 for n = 1, while the full sweep at length 4n+2 finds none.
inline VerificationReport suite_sharpness(int jobs = 1) {
  VerificationReport rep;
  rep.claim = "minimal_vanishing_length";
  auto w4 = sharpness_witness(1, SharpnessKind::mixed_even_block, jobs);
  ++rep.tuples_checked;
  if (!w4)
    rep.record_failure({{"check", "length4_witness_missing"}});
  else {
    std::string idx;
    for (int i : w4->first) idx += (idx.empty() ? "" : ",") + std::to_string(i);
    rep.parameters["length4_witness"] = idx;
  }
  auto w5 = sharpness_witness(1, SharpnessKind::full_length_odd_arity, jobs);
  ++rep.tuples_checked;
  if (!w5)
    rep.record_failure({{"check", "length5_witness_missing"}});
  else {
    std::string idx;
    for (int i : w5->first) idx += (idx.empty() ? "" : ",") + std::to_string(i);
    rep.parameters["length5_witness"] = idx;
  }
  VerifyOptions opt;
  opt.mode = VerifyMode::exact;
  opt.jobs = jobs;
  VerificationReport zero = verify_al(1, opt);
  rep.absorb(zero);
  rep.parameters["length6_tuples"] = std::to_string(zero.tuples_checked);
  return rep;
}

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"prop21",     "prop41",         "thm41",
                                                 "cohomology", "newton",         "membership",
                                                 "counterexample", "sharpness"};
  return names;
}

inline VerificationReport run_suite(const std::string& name, std::uint64_t seed = 2025,
                                    int jobs = 1) {
  VerificationReport rep;
  if (name == "prop21")
    rep = suite_prop21(seed);
  else if (name == "prop41")
    rep = suite_prop41(seed);
  else if (name == "thm41")
    rep = suite_thm41(seed);
  else if (name == "cohomology")
    rep = suite_cohomology(seed);
  else if (name == "newton")
    rep = suite_newton(seed);
  else if (name == "membership")
    rep = suite_membership(seed);
  else if (name == "counterexample")
    rep = suite_counterexample();
  else if (name == "sharpness")
    rep = suite_sharpness(jobs);
  else
    throw std::invalid_argument("run_suite: unknown suite '" + name + "'");
  rep.parameters["suite"] = name;
  return rep;
}

}  // namespace superal

#endif  // SUPERAL_SUITES_HPP
