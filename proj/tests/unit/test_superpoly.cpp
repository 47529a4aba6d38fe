#include "superal/superpoly.hpp"

#include "test_util.hpp"

#include <doctest.h>

using namespace superal;
using testutil::random_element;
using testutil::random_tuple;

namespace {

Perm random_perm(Rng& rng, int k) {
  Perm p = identity_perm(k);
  for (int i = k - 1; i > 0; --i) std::swap(p[i], p[rng.next_below(i + 1)]);
  return p;
}

}  // namespace

TEST_CASE("standard polynomials at tiny arity") {
  SuperAlgebra gl12 = gl_algebra(1, 2);
  Rng rng(53);

  ArgTuple one = random_tuple(rng, gl12, 1);
  CHECK(standard_A_naive(one) == one.mats[0]);
  CHECK(standard_P_naive(one) == one.mats[0]);

  ArgTuple two_odd = random_tuple(rng, gl12, ParityWord{1, 1});
  CHECK(standard_A_naive(two_odd) == two_odd.mats[0] * two_odd.mats[1] + two_odd.mats[1] * two_odd.mats[0]);

  ArgTuple two_even = random_tuple(rng, gl12, ParityWord{0, 0});
  CHECK(standard_P_naive(two_even) == two_even.mats[0] * two_even.mats[1] + two_even.mats[1] * two_even.mats[0]);
}

TEST_CASE("A_k(X,...,X) = k! X^k for odd X") {
  SuperAlgebra gl12 = gl_algebra(1, 2);
  Rng rng(59);
  for (int k = 1; k <= 5; ++k) {
    SuperMatrix<Rational> x = random_element(rng, gl12, 1);
    ArgTuple args{std::vector<SuperMatrix<Rational>>(k, x), ParityWord(k, 1)};
    Rational fact(1);
    for (int i = 2; i <= k; ++i) fact *= Rational(i);
    CHECK(standard_A_naive(args) == fact * x.pow(k));
  }
}

TEST_CASE("dynamic program agrees with the naive sums") {
  SuperAlgebra gl12 = gl_algebra(1, 2);
  Rng rng(61);
  for (int t = 0; t < 100; ++t) {
    int k = static_cast<int>(rng.next_int(1, 5));
    ArgTuple args = random_tuple(rng, gl12, k);
    CHECK(standard_A_dp(args) == standard_A_naive(args));
  }
  for (int t = 0; t < 60; ++t) {
    int k = static_cast<int>(rng.next_int(1, 4));
    ArgTuple args = random_tuple(rng, gl12, k);
    CHECK(standard_P_dp(args) == standard_P_naive(args));
  }
}

TEST_CASE("dynamic program performs exactly k 2^{k-1} multiplications") {
  SuperAlgebra gl11 = gl_algebra(1, 1);
  Rng rng(67);
  for (int k = 1; k <= 6; ++k) {
    ArgTuple args = random_tuple(rng, gl11, k);
    std::uint64_t muls = 0;
    standard_A_dp(args, &muls);
    CHECK(muls == std::uint64_t(k) << (k - 1));
  }
}

TEST_CASE("equivariance under the signed permutation action") {
  SuperAlgebra gl12 = gl_algebra(1, 2);
  Rng rng(71);
  for (int t = 0; t < 40; ++t) {
    int k = static_cast<int>(rng.next_int(2, 4));
    ArgTuple args = random_tuple(rng, gl12, k);
    Perm sigma = random_perm(rng, k);
    // Slot i of the permuted tuple holds X_{sigma(i)}; the compensating sign
    // is eps(sigma) eps(sigma, X) computed on the *original* parity word.
    ArgTuple permuted{act_on_tuple(inverse(sigma), args.mats), act_on_tuple(inverse(sigma), args.parities)};
    Rational sign(perm_sign(sigma) * super_sign(sigma, args.parities));
    CHECK(standard_A_naive(permuted).mat() == sign * standard_A_naive(args).mat());
  }
}

TEST_CASE("alternating polynomial kills repeated even entries") {
  SuperAlgebra gl12 = gl_algebra(1, 2);
  Rng rng(73);
  for (int t = 0; t < 20; ++t) {
    SuperMatrix<Rational> x = random_element(rng, gl12, 0);
    ArgTuple args = random_tuple(rng, gl12, 3);
    args.mats[0] = x;
    args.mats[2] = x;
    args.parities[0] = args.parities[2] = 0;
    CHECK(standard_A_dp(args).is_zero());
  }
}

TEST_CASE("Lambda vanishes in even arity") {
  SuperAlgebra gl22 = gl_algebra(2, 2);
  Rng rng(79);
  for (int t = 0; t < 100; ++t) {
    ArgTuple args = random_tuple(rng, gl22, 2);
    CHECK(invariant_Lambda(args) == Rational(0));
  }
  for (int t = 0; t < 25; ++t) {
    ArgTuple args = random_tuple(rng, gl22, 4);
    CHECK(invariant_Lambda(args) == Rational(0));
  }
}

TEST_CASE("P_3 against the bilinear-form contraction") {
  SuperAlgebra gl12 = gl_algebra(1, 2);
  Rng rng(83);
  for (int t = 0; t < 50; ++t) {
    ArgTuple args = random_tuple(rng, gl12, 3);
    ArgTuple head{{args.mats[0], args.mats[1]}, {args.parities[0], args.parities[1]}};
    CHECK(invariant_P(args) == Rational(3) * bilinear_form(standard_P_dp(head), args.mats[2]));
  }
}

TEST_CASE("bracket-product expansions (identities a, b, c)") {
  SuperAlgebra gl12 = gl_algebra(1, 2);
  Rng rng(89);

  // hand case: length 2, both odd
  for (int t = 0; t < 10; ++t) {
    ArgTuple args = random_tuple(rng, gl12, ParityWord{1, 1});
    CHECK(prop41_check(Prop41::b, args));
    SuperMatrix<Rational> lhs =
        superbracket(args.mats[0], args.mats[1]) + superbracket(args.mats[1], args.mats[0]);
    CHECK(lhs.mat() == Rational(2) * standard_A_dp(args).mat());
  }

  for (int t = 0; t < 50; ++t) {
    CHECK(prop41_check(Prop41::b, random_tuple(rng, gl12, 4)));   // k=2
    CHECK(prop41_check(Prop41::c, random_tuple(rng, gl12, 3)));   // k=1
    CHECK(prop41_check(Prop41::a, random_tuple(rng, gl12, 3)));
  }
  for (int t = 0; t < 5; ++t) {
    CHECK(prop41_check(Prop41::a, random_tuple(rng, gl12, 5)));
    CHECK(prop41_check(Prop41::c, random_tuple(rng, gl12, 5)));   // k=2
  }

  CHECK_THROWS_AS(prop41_check(Prop41::b, random_tuple(rng, gl12, 3)), std::invalid_argument);
  CHECK_THROWS_AS(prop41_check(Prop41::a, random_tuple(rng, gl12, 2)), std::invalid_argument);
}

TEST_CASE("gl(p,q) counterexample: A_k(X,...,X) = k! X^k never vanishes") {
  auto [x2, v2] = counterexample_gl(1, 1, 2);
  GradedDim d11(1, 1);
  CHECK(v2 == Rational(2) * SuperMatrix<Rational>(d11, MatX<Rational>::Identity(2, 2)));

  auto [x8, v8] = counterexample_gl(1, 1, 8);
  Rational fact8(1);
  for (int i = 2; i <= 8; ++i) fact8 *= Rational(i);
  CHECK(v8 == fact8 * SuperMatrix<Rational>(d11, MatX<Rational>::Identity(2, 2)));

  auto [x5, v5] = counterexample_gl(2, 3, 5);
  Rational fact5(120);
  CHECK(v5 == fact5 * x5);  // X^3 = X for this X, so X^5 = X
  CHECK_FALSE(v5.is_zero());

  CHECK_THROWS_AS(counterexample_gl(2, 0, 4), std::invalid_argument);
}

TEST_CASE("classical reduction: all-even tuples recover the standard polynomial") {
  SuperAlgebra gl20 = gl_algebra(2, 0);
  Rng rng(97);

  // Independent classical evaluator: sum of sgn(sigma) X_{sigma(1)}...X_{sigma(k)}.
  auto classical = [](const std::vector<SuperMatrix<Rational>>& xs) {
    MatX<Rational> acc = MatX<Rational>::Zero(xs[0].mat().rows(), xs[0].mat().cols());
    for_each_permutation(static_cast<int>(xs.size()), [&](const Perm& s) {
      MatX<Rational> prod = xs[s[0]].mat();
      for (std::size_t i = 1; i < xs.size(); ++i) prod = prod.lazyProduct(xs[s[i]].mat()).eval();
      if (perm_sign(s) > 0)
        acc += prod;
      else
        acc -= prod;
    });
    return acc;
  };

  for (int t = 0; t < 30; ++t) {
    int k = static_cast<int>(rng.next_int(2, 4));
    ArgTuple args = random_tuple(rng, gl20, ParityWord(k, 0));
    CHECK(standard_A_dp(args).mat() == classical(args.mats));
  }

  // Classical vanishing: the length-4 alternating polynomial is zero on 2x2 matrices.
  for (int t = 0; t < 50; ++t) {
    ArgTuple args = random_tuple(rng, gl20, ParityWord(4, 0));
    CHECK(standard_A_dp(args).is_zero());
  }
}
