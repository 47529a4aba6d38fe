#include "superal/algebra.hpp"
#include "superal/graded.hpp"
#include "superal/rng.hpp"

#include <doctest.h>

using namespace superal;

namespace {

using RMat = SuperMatrix<Rational>;

/// Random homogeneous matrix with entries in [-3,3] supported on one parity block.
RMat random_homogeneous(Rng& rng, GradedDim d, int parity) {
  MatX<Rational> m = MatX<Rational>::Zero(d.total(), d.total());
  for (int i = 0; i < d.total(); ++i)
    for (int j = 0; j < d.total(); ++j)
      if (((d.coordinate_parity(i) + d.coordinate_parity(j)) & 1) == parity)
        m(i, j) = Rational(rng.next_int(-3, 3));
  return RMat(d, std::move(m));
}

RMat identity(GradedDim d) {
  return RMat(d, MatX<Rational>::Identity(d.total(), d.total()));
}

}  // namespace

TEST_CASE("parity classification on graded blocks") {
  GradedDim d(1, 2);
  CHECK(RMat::zero(d).parity() == Parity::Even);
  CHECK(RMat::unit(d, 0, 0).parity() == Parity::Even);
  CHECK(RMat::unit(d, 1, 2).parity() == Parity::Even);
  CHECK(RMat::unit(d, 0, 1).parity() == Parity::Odd);
  CHECK(RMat::unit(d, 2, 0).parity() == Parity::Odd);
  RMat mixed = RMat::unit(d, 0, 0) + RMat::unit(d, 0, 1);
  CHECK(mixed.parity() == Parity::Mixed);
  CHECK(mixed.even_part() == RMat::unit(d, 0, 0));
  CHECK(mixed.odd_part() == RMat::unit(d, 0, 1));
  CHECK_THROWS_AS(mixed.parity_bit(), std::domain_error);
  CHECK_THROWS_AS(GradedDim(0, 0), std::invalid_argument);
}

TEST_CASE("supertrace block formula") {
  GradedDim d(1, 2);
  CHECK(supertrace(identity(d)) == Rational(-1));  // tr(A) - tr(D) = 1 - 2

  // Rank-one check: str(E_{z,w}) must match (-1)^{parity(w)parity(z)} * (dual of w)(e_z)
  // for all 9 elementary matrices on the (1|2) space.
  for (int z = 0; z < 3; ++z)
    for (int w = 0; w < 3; ++w) {
      Rational lhs = supertrace(RMat::unit(d, z, w));
      int sign_exp = d.coordinate_parity(w) * d.coordinate_parity(z);
      Rational rhs = (z == w) ? Rational(sign_exp ? -1 : 1) : Rational(0);
      CHECK(lhs == rhs);
    }

  Rng rng(3);
  for (int t = 0; t < 20; ++t) CHECK(supertrace(random_homogeneous(rng, d, 1)) == Rational(0));
}

TEST_CASE("superbracket signs and supertrace vanishing") {
  GradedDim d(2, 2);
  Rng rng(5);

  RMat diag = RMat::unit(d, 0, 0) + RMat::unit(d, 1, 1);
  CHECK(superbracket(diag, diag).is_zero());

  for (int t = 0; t < 20; ++t) {
    RMat x = random_homogeneous(rng, d, 1);
    RMat y = random_homogeneous(rng, d, 1);
    CHECK(superbracket(x, y) == x * y + y * x);  // odd-odd anticommutator
  }

  for (int t = 0; t < 100; ++t) {
    RMat x = random_homogeneous(rng, d, rng.next_bool() ? 1 : 0);
    RMat y = random_homogeneous(rng, d, rng.next_bool() ? 1 : 0);
    RMat br = superbracket(x, y);
    CHECK(supertrace(br) == Rational(0));
    if (!br.is_zero()) CHECK(br.parity_bit() == (x.parity_bit() ^ y.parity_bit()));
  }

  RMat mixed = RMat::unit(d, 0, 0) + RMat::unit(d, 0, 2);
  CHECK_THROWS_AS(superbracket(mixed, diag), std::domain_error);
}

TEST_CASE("twisted bracket sign table") {
  GradedDim d(1, 2);
  Rng rng(9);
  for (int t = 0; t < 30; ++t) {
    RMat even_a = random_homogeneous(rng, d, 0);
    RMat even_b = random_homogeneous(rng, d, 0);
    RMat odd_a = random_homogeneous(rng, d, 1);
    RMat odd_b = random_homogeneous(rng, d, 1);
    CHECK(twisted_bracket(even_a, even_b) == even_a * even_b - even_b * even_a);
    CHECK(twisted_bracket(odd_a, even_b) == odd_a * even_b + even_b * odd_a);
    CHECK(twisted_bracket(odd_a, odd_b) == odd_a * odd_b - odd_b * odd_a);
    CHECK(twisted_bracket(even_a, odd_b) == even_a * odd_b - odd_b * even_a);
  }
}

TEST_CASE("bilinear form B(X,Y) = str(XY) is supersymmetric") {
  GradedDim d(1, 2);
  CHECK(bilinear_form(identity(d), identity(d)) == Rational(-1));

  Rng rng(13);
  for (int t = 0; t < 100; ++t) {
    RMat x = random_homogeneous(rng, d, rng.next_bool() ? 1 : 0);
    RMat y = random_homogeneous(rng, d, rng.next_bool() ? 1 : 0);
    Rational sign = ((x.parity_bit() & y.parity_bit()) != 0) ? Rational(-1) : Rational(1);
    CHECK(bilinear_form(x, y) == sign * bilinear_form(y, x));
    CHECK(bilinear_form(x, y) == supertrace(x * y));
  }
}

TEST_CASE("supertranspose block formula and order four") {
  GradedDim d(2, 2);
  CHECK(supertranspose(identity(d)) == identity(d));

  Rng rng(17);
  for (int t = 0; t < 50; ++t) {
    RMat even = random_homogeneous(rng, d, 0);
    CHECK(supertranspose(even) == RMat(d, even.mat().transpose().eval()));

    RMat x = random_homogeneous(rng, d, 0) + random_homogeneous(rng, d, 1);
    RMat st1 = supertranspose(x);
    RMat st2 = supertranspose(st1);
    CHECK(st2 == x.even_part() - x.odd_part());  // square negates odd blocks
    CHECK(supertranspose(supertranspose(st2)) == x);
  }
}

TEST_CASE("X -> -X^st is an automorphism of the superbracket") {
  GradedDim d(2, 2);
  Rng rng(19);
  for (int t = 0; t < 50; ++t) {
    RMat x = random_homogeneous(rng, d, rng.next_bool() ? 1 : 0);
    RMat y = random_homogeneous(rng, d, rng.next_bool() ? 1 : 0);
    RMat lhs = -supertranspose(superbracket(x, y));
    RMat rhs = superbracket(-supertranspose(x), -supertranspose(y));
    CHECK(lhs == rhs);
  }
}

TEST_CASE("prime-field evaluation commutes with exact evaluation") {
  GradedDim d(2, 2);
  const std::uint64_t p = 1000003;
  Rng rng(23);
  for (int t = 0; t < 50; ++t) {
    RMat x = random_homogeneous(rng, d, rng.next_bool() ? 1 : 0);
    RMat y = random_homogeneous(rng, d, rng.next_bool() ? 1 : 0);
    CHECK(reduce_mod(superbracket(x, y), p) == superbracket(reduce_mod(x, p), reduce_mod(y, p)));
    CHECK(reduce_mod(twisted_bracket(x, y), p) == twisted_bracket(reduce_mod(x, p), reduce_mod(y, p)));
    CHECK(reduce_mod(supertrace(x * y), p) == supertrace(reduce_mod(x, p) * reduce_mod(y, p)));
    CHECK(reduce_mod(supertranspose(x), p) == supertranspose(reduce_mod(x, p)));
  }
}
