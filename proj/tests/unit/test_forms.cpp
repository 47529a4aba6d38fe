#include "superal/forms.hpp"

#include "superal/osp.hpp"
#include "test_util.hpp"

#include <doctest.h>

using namespace superal;

namespace {

/// Random form supported on canonical keys of the given shape.
MultilinearForm random_form(Rng& rng, const SuperAlgebra& g, int arity, Variance v, int z2) {
  MultilinearForm f(g, arity, v, z2);
  enumerate_form_keys(g, arity, v, z2, [&](const std::vector<int>& key) {
    Rational c(rng.next_int(-2, 2));
    if (!c.is_zero()) f.add_term(key, c);
  });
  return f;
}

Rational factorial(int n) {
  Rational r(1);
  for (int i = 2; i <= n; ++i) r *= Rational(i);
  return r;
}

/// Random unimodular parity-preserving basis of g (integer column operations
/// applied to the identity, separately inside the even and odd blocks).
std::vector<SuperMatrix<Rational>> random_unimodular_basis(Rng& rng, const SuperAlgebra& g) {
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

}  // namespace

TEST_CASE("canonical storage respects the two swap rules") {
  SuperAlgebra g = gl_algebra(1, 2);
  const int d0 = g.even_dim();

  MultilinearForm p(g, 2, Variance::supersym, 0);
  p.add_term({1, 0}, Rational(3));  // even-even swap: symmetric
  CHECK(p.value_at({0, 1}) == 3);
  CHECK(p.value_at({1, 0}) == 3);
  MultilinearForm p2(g, 2, Variance::supersym, 0);
  p2.add_term({d0 + 1, d0}, Rational(5));  // odd-odd swap: antisymmetric
  CHECK(p2.value_at({d0, d0 + 1}) == -5);
  CHECK(p2.value_at({d0 + 1, d0}) == 5);
  CHECK(p2.value_at({d0, d0}) == 0);  // repeated odd dies in the supersym algebra

  MultilinearForm a(g, 2, Variance::skew, 0);
  a.add_term({1, 0}, Rational(3));
  CHECK(a.value_at({0, 1}) == -3);
  CHECK(a.value_at({0, 0}) == 0);  // repeated even dies in the skew algebra
  MultilinearForm a2(g, 2, Variance::skew, 0);
  a2.add_term({d0, d0}, Rational(7));  // repeated odd survives
  CHECK(a2.value_at({d0, d0}) == 7);
  MultilinearForm a3(g, 2, Variance::skew, 0);
  a3.add_term({d0 + 1, d0}, Rational(1));
  CHECK(a3.value_at({d0, d0 + 1}) == 1);  // odd-odd swap is symmetric here

  // A key whose parity contradicts the declared Z2 degree is rejected.
  CHECK_THROWS_AS(p.add_term({0, d0}, Rational(1)), std::invalid_argument);
}

TEST_CASE("dual and coordinate 1-forms") {
  SuperAlgebra g = gl_algebra(1, 2);
  for (int i = 0; i < g.dim(); ++i) {
    MultilinearForm phi = dual_form(g, i, Variance::skew);
    for (int m = 0; m < g.dim(); ++m)
      CHECK(phi.value_at({m}) == (m == i ? Rational(1) : Rational(0)));
    CHECK(phi.z2_degree() == g.parity_bit(i));
  }
  // M_rs picks out the (r,s) entry of every basis matrix.
  GradedDim d = g.basis(0).dim();
  for (int r = 0; r < d.total(); ++r)
    for (int s = 0; s < d.total(); ++s) {
      MultilinearForm m_rs = coordinate_form(g, r, s, Variance::supersym);
      CHECK(m_rs.z2_degree() == (d.coordinate_parity(r) ^ d.coordinate_parity(s)));
      for (int m = 0; m < g.dim(); ++m) CHECK(m_rs.value_at({m}) == g.basis(m)(r, s));
    }
  // str as a 1-form equals the supertrace of each basis element.
  MultilinearForm p1 = build_P_form(g, 1);
  for (int m = 0; m < g.dim(); ++m) CHECK(p1.value_at({m}) == supertrace(g.basis(m)));
}

TEST_CASE("symmetrization operators") {
  SuperAlgebra g = osp_algebra(1);
  Rng rng(11);
  for (int z2 = 0; z2 <= 1; ++z2) {
    MultilinearForm f = random_form(rng, g, 2, Variance::supersym, z2);
    CHECK(symmetrize(f) == factorial(2) * f);  // S multiplies supersym input by k!
    MultilinearForm a = random_form(rng, g, 2, Variance::skew, z2);
    CHECK(antisymmetrize(a) == factorial(2) * a);
    MultilinearForm phi = dual_form(g, z2 ? 3 : 0, Variance::skew);
    CHECK(antisymmetrize(phi) == phi);  // arity 1: single permutation
  }
}

TEST_CASE("shuffle products agree with the fully symmetrized tensor") {
  for (auto make : {+[] { return gl_algebra(1, 2); }, +[] { return osp_algebra(1); }}) {
    SuperAlgebra g = make();
    Rng rng(23);
    for (int rep = 0; rep < 6; ++rep) {
      int f_z2 = rng.next_bool(), g_z2 = rng.next_bool();
      MultilinearForm f1 = random_form(rng, g, 1, Variance::supersym, f_z2);
      MultilinearForm f2 = random_form(rng, g, rep % 2 ? 2 : 1, Variance::supersym, g_z2);
      Rational norm = Rational(1) / (factorial(f1.arity()) * factorial(f2.arity()));
      CHECK(dot(f1, f2) == norm * symmetrize(super_tensor(to_plain(f1), to_plain(f2))));

      MultilinearForm a1 = random_form(rng, g, 1, Variance::skew, f_z2);
      MultilinearForm a2 = random_form(rng, g, rep % 2 ? 2 : 1, Variance::skew, g_z2);
      CHECK(wedge(a1, a2) == norm * antisymmetrize(super_tensor(to_plain(a1), to_plain(a2))));
    }
  }
}

TEST_CASE("product algebra laws") {
  SuperAlgebra g = gl_algebra(1, 2);
  Rng rng(31);
  // Squares of 1-forms: even wedge-squares vanish, odd ones do not.
  MultilinearForm omega = dual_form(g, 0, Variance::skew);
  CHECK(wedge(omega, omega).is_zero());
  MultilinearForm phi = dual_form(g, g.even_dim(), Variance::skew);
  CHECK_FALSE(wedge(phi, phi).is_zero());
  MultilinearForm phi_s = dual_form(g, g.even_dim(), Variance::supersym);
  CHECK(dot(phi_s, phi_s).is_zero());  // odd dot-square vanishes instead

  for (int rep = 0; rep < 8; ++rep) {
    int fz = rng.next_bool(), gz = rng.next_bool();
    int n = 1 + rep % 2, m = 1 + (rep / 2) % 2;
    MultilinearForm f = random_form(rng, g, n, Variance::skew, fz);
    MultilinearForm h = random_form(rng, g, m, Variance::skew, gz);
    int sign = ((n * m + fz * gz) & 1) ? -1 : 1;  // F^G = (-1)^{nm+fg} G^F
    CHECK(wedge(f, h) == Rational(sign) * wedge(h, f));

    MultilinearForm fs = random_form(rng, g, n, Variance::supersym, fz);
    MultilinearForm hs = random_form(rng, g, m, Variance::supersym, gz);
    int sign_s = (fz * gz & 1) ? -1 : 1;  // F.G = (-1)^{fg} G.F
    CHECK(dot(fs, hs) == Rational(sign_s) * dot(hs, fs));
  }

  // Associativity on random triples of 1-forms.
  for (int rep = 0; rep < 5; ++rep) {
    MultilinearForm x = random_form(rng, g, 1, Variance::skew, rng.next_bool());
    MultilinearForm y = random_form(rng, g, 1, Variance::skew, rng.next_bool());
    MultilinearForm z = random_form(rng, g, 1, Variance::skew, rng.next_bool());
    CHECK(wedge(wedge(x, y), z) == wedge(x, wedge(y, z)));
    MultilinearForm xs = random_form(rng, g, 1, Variance::supersym, rng.next_bool());
    MultilinearForm ys = random_form(rng, g, 1, Variance::supersym, rng.next_bool());
    MultilinearForm zs = random_form(rng, g, 1, Variance::supersym, rng.next_bool());
    CHECK(dot(dot(xs, ys), zs) == dot(xs, dot(ys, zs)));
  }
}

TEST_CASE("plug-in operators and their derivation laws") {
  SuperAlgebra g = gl_algebra(1, 2);
  Rng rng(47);
  for (int rep = 0; rep < 10; ++rep) {
    int x_par = rng.next_bool();
    SuperMatrix<Rational> x = testutil::random_element(rng, g, x_par);

    // D_X of a 1-form is the constant (-1)^{xf} phi(X).
    int fz = rng.next_bool();
    MultilinearForm phi = random_form(rng, g, 1, Variance::supersym, fz);
    VecX<Rational> xi = g.coordinates(x);
    Rational direct(0);
    for (int m = 0; m < g.dim(); ++m) direct += xi[m] * phi.value_at({m});
    if (x_par && fz) direct = -direct;
    CHECK(derivation_D(x, phi).value_at(std::vector<int>{}) == direct);

    // Super derivation law for D over the dot product.
    MultilinearForm f = random_form(rng, g, 1, Variance::supersym, rng.next_bool());
    MultilinearForm h = random_form(rng, g, 2, Variance::supersym, rng.next_bool());
    Rational sgn((x_par && f.z2_degree()) ? -1 : 1);
    CHECK(derivation_D(x, dot(f, h)) ==
          dot(derivation_D(x, f), h) + sgn * dot(f, derivation_D(x, h)));

    // Contraction is a super derivation of degree (-1, x) over the wedge.
    MultilinearForm af = random_form(rng, g, 1, Variance::skew, rng.next_bool());
    MultilinearForm ah = random_form(rng, g, 2, Variance::skew, rng.next_bool());
    Rational sgn_a(((af.arity() + x_par * af.z2_degree()) & 1) ? -1 : 1);
    CHECK(contraction_iota(x, wedge(af, ah)) ==
          wedge(contraction_iota(x, af), ah) + sgn_a * wedge(af, contraction_iota(x, ah)));

    // D_X twice against the two-argument expansion of F.
    MultilinearForm f2 = random_form(rng, g, 2, Variance::supersym, rng.next_bool());
    Rational fxx(0);
    for (int m = 0; m < g.dim(); ++m)
      for (int l = 0; l < g.dim(); ++l)
        if (!xi[m].is_zero() && !xi[l].is_zero()) fxx += xi[m] * xi[l] * f2.value_at({m, l});
    int expo = x_par * f2.z2_degree() + x_par * (f2.z2_degree() ^ x_par);
    if (expo & 1) fxx = -fxx;
    CHECK(derivation_D(x, derivation_D(x, f2)).value_at(std::vector<int>{}) == fxx);
  }
  MultilinearForm c = MultilinearForm::constant(g, Rational(4), Variance::supersym);
  CHECK_THROWS_AS(derivation_D(g.basis(0), c), std::invalid_argument);
}

TEST_CASE("coadjoint action: derivation law, invariants, non-invariants") {
  SuperAlgebra g = gl_algebra(1, 2);
  Rng rng(59);

  MultilinearForm c = MultilinearForm::constant(g, Rational(3), Variance::skew);
  for (int i = 0; i < g.dim(); ++i) CHECK(lie_action(g.basis(i), c).is_zero());

  for (int rep = 0; rep < 6; ++rep) {
    int x_par = rng.next_bool();
    SuperMatrix<Rational> x = testutil::random_element(rng, g, x_par);
    MultilinearForm f = random_form(rng, g, 1, Variance::skew, rng.next_bool());
    MultilinearForm h = random_form(rng, g, 2, Variance::skew, rng.next_bool());
    Rational sgn((x_par && f.z2_degree()) ? -1 : 1);
    CHECK(lie_action(x, wedge(f, h)) ==
          wedge(lie_action(x, f), h) + sgn * wedge(f, lie_action(x, h)));
    MultilinearForm fs = random_form(rng, g, 1, Variance::supersym, rng.next_bool());
    MultilinearForm hs = random_form(rng, g, 2, Variance::supersym, rng.next_bool());
    Rational sgn_s((x_par && fs.z2_degree()) ? -1 : 1);
    CHECK(lie_action(x, dot(fs, hs)) ==
          dot(lie_action(x, fs), hs) + sgn_s * dot(fs, lie_action(x, hs)));
  }

  CHECK(is_invariant(build_Lambda_form(g, 3)));
  CHECK(is_invariant(build_P_form(g, 2)));
  CHECK(is_invariant(build_P_form(osp_algebra(1), 2)));
  CHECK_FALSE(is_invariant(dual_form(g, 0, Variance::skew)));
}

TEST_CASE("differential: defining case, nilpotency, dual route, homotopy") {
  for (auto make : {+[] { return gl_algebra(1, 2); }, +[] { return osp_algebra(1); }}) {
    SuperAlgebra g = make();
    Rng rng(67);

    MultilinearForm c = MultilinearForm::constant(g, Rational(2), Variance::skew);
    CHECK(differential_d(c).is_zero());

    // d phi (X,Y) = -phi([X,Y]) on basis pairs.
    for (int i = 0; i < g.dim(); ++i) {
      MultilinearForm phi = dual_form(g, i, Variance::skew);
      MultilinearForm dphi = differential_d(phi);
      for (int a = 0; a < g.dim(); ++a)
        for (int b = 0; b < g.dim(); ++b) {
          Rational expect = -g.bracket_coords(a, b)[i];
          CHECK(dphi.value_at({a, b}) == expect);
        }
      CHECK(differential_d(dphi).is_zero());               // d^2 = 0 on 1-forms
      CHECK(differential_d_dual_route(phi) == dphi);       // both routes agree
    }

    for (int rep = 0; rep < 10; ++rep) {
      MultilinearForm f = random_form(rng, g, 2, Variance::skew, rng.next_bool());
      MultilinearForm df = differential_d(f);
      CHECK(differential_d(df).is_zero());
      CHECK(differential_d_dual_route(f) == df);

      SuperMatrix<Rational> x = testutil::random_element(rng, g, rng.next_bool() ? 1 : 0);
      CHECK(lie_action(x, f) ==
            contraction_iota(x, df) + differential_d(contraction_iota(x, f)));
    }
  }
}

TEST_CASE("multiplicative structure of the s homomorphism") {
  SuperAlgebra g = osp_algebra(1);
  Rng rng(83);

  MultilinearForm one = MultilinearForm::constant(g, Rational(1), Variance::supersym);
  MultilinearForm s_one = s_map(one);
  CHECK(s_one.value_at(std::vector<int>{}) == 1);

  // Defining property on dual 1-forms.
  for (int i = 0; i < g.dim(); ++i)
    CHECK(s_map(dual_form(g, i, Variance::supersym)) ==
          differential_d(dual_form(g, i, Variance::skew)));

  // Algebra homomorphism on random 1-forms, including repeated factors.
  for (int rep = 0; rep < 8; ++rep) {
    MultilinearForm f = random_form(rng, g, 1, Variance::supersym, rng.next_bool());
    MultilinearForm h = random_form(rng, g, 1, Variance::supersym, rng.next_bool());
    CHECK(s_map(dot(f, h)) == wedge(s_map(f), s_map(h)));
    if (f.z2_degree() == 0) CHECK(s_map(dot(f, f)) == wedge(s_map(f), s_map(f)));
    MultilinearForm f2 = random_form(rng, g, 2, Variance::supersym, rng.next_bool());
    CHECK(s_map(dot(f, f2)) == wedge(s_map(f), s_map(f2)));
    CHECK(differential_d(s_map(f2)).is_zero());  // d(s(P)) = 0
  }

  CHECK(s_map(build_P_form(g, 2)).is_zero());  // invariants without constant term die
}

TEST_CASE("degree operator") {
  SuperAlgebra g = gl_algebra(1, 2);
  Rng rng(97);
  MultilinearForm p2 = build_P_form(g, 2);
  CHECK(degree_operator_R(p2) == Rational(2) * p2);
  MultilinearForm c = MultilinearForm::constant(g, Rational(5), Variance::supersym);
  CHECK(degree_operator_R(c).is_zero());

  // The dual-basis expansion Omega_i D_{X_i} - phi_j D_{Y_j} recovers R.
  for (int z2 = 0; z2 <= 1; ++z2) {
    MultilinearForm f = random_form(rng, g, 2, Variance::supersym, z2);
    MultilinearForm acc(g, 2, Variance::supersym, z2);
    for (int i = 0; i < g.dim(); ++i) {
      MultilinearForm piece = dot(dual_form(g, i, Variance::supersym), derivation_D(g.basis(i), f));
      if (g.parity_bit(i)) acc -= piece;
      else acc += piece;
    }
    CHECK(acc == degree_operator_R(f));
  }
}

TEST_CASE("transgression fixes coordinate 1-forms") {
  SuperAlgebra g = gl_algebra(1, 2);
  GradedDim d = g.basis(0).dim();
  for (int r = 0; r < d.total(); ++r)
    for (int s = 0; s < d.total(); ++s)
      CHECK(transgress(coordinate_form(g, r, s, Variance::supersym)) ==
            coordinate_form(g, r, s, Variance::skew));
}

TEST_CASE("transgression of the supertrace invariants") {
  for (auto make : {+[] { return gl_algebra(1, 2); }, +[] { return osp_algebra(1); }}) {
    SuperAlgebra g = make();
    CHECK(transgress(build_P_form(g, 1)) == build_Lambda_form(g, 1));
    CHECK(transgress(build_P_form(g, 2)) == Rational(-2) * build_Lambda_form(g, 3));
  }
}

TEST_CASE("differential of a transgression equals s of the degree action") {
  SuperAlgebra g = gl_algebra(1, 2);
  Rng rng(103);
  MultilinearForm p2 = build_P_form(g, 2);
  CHECK(differential_d(transgress(p2)) == s_map(degree_operator_R(p2)));
  for (int z2 = 0; z2 <= 1; ++z2)
    for (int rep = 0; rep < 3; ++rep) {
      MultilinearForm f = random_form(rng, g, 2, Variance::supersym, z2);
      CHECK(differential_d(transgress(f)) == s_map(degree_operator_R(f)));
    }
  SuperAlgebra o = osp_algebra(1);
  Rng rng2(107);
  for (int rep = 0; rep < 6; ++rep) {
    MultilinearForm f = random_form(rng2, o, 2, Variance::supersym, rng2.next_bool());
    CHECK(differential_d(transgress(f)) == s_map(degree_operator_R(f)));
  }
}

TEST_CASE("transgression is an s-derivation of products") {
  SuperAlgebra g = osp_algebra(1);
  Rng rng(109);
  for (int rep = 0; rep < 12; ++rep) {
    MultilinearForm p = random_form(rng, g, 1, Variance::supersym, rng.next_bool());
    MultilinearForm q = random_form(rng, g, 1, Variance::supersym, rng.next_bool());
    CHECK(transgress(dot(p, q)) ==
          wedge(transgress(p), s_map(q)) + wedge(s_map(p), transgress(q)));
  }
}

TEST_CASE("squares of positive invariants transgress to zero") {
  SuperAlgebra g = osp_algebra(1);
  MultilinearForm p2 = build_P_form(g, 2);
  CHECK(transgress(dot(p2, p2)).is_zero());
  CHECK(is_invariant(transgress(p2)));  // t maps invariants to invariants
}

TEST_CASE("transgression is basis independent") {
  SuperAlgebra g = osp_algebra(1);
  MultilinearForm p2 = build_P_form(g, 2);
  MultilinearForm reference = transgress(p2);

  std::vector<SuperMatrix<Rational>> std_basis = g.basis();
  CHECK(transgress_via_tau(p2, std_basis) == reference);

  Rng rng(127);
  for (int rep = 0; rep < 6; ++rep)
    CHECK(transgress_via_tau(p2, random_unimodular_basis(rng, g)) == reference);

  // Scaled basis: doubled vectors, automatically halved duals.
  std::vector<SuperMatrix<Rational>> scaled;
  for (const auto& b : std_basis) scaled.push_back(Rational(2) * b);
  CHECK(transgress_via_tau(p2, scaled) == reference);

  // A rank-deficient choice is rejected.
  std::vector<SuperMatrix<Rational>> degenerate = std_basis;
  degenerate[1] = degenerate[0];
  CHECK_THROWS_AS(transgress_via_tau(p2, degenerate), std::invalid_argument);
}

TEST_CASE("even-length skew supertrace forms vanish") {
  SuperAlgebra g = gl_algebra(1, 2);
  CHECK(build_Lambda_form(g, 2).is_zero());
  CHECK(build_Lambda_form(g, 4).is_zero());
  CHECK_FALSE(build_Lambda_form(g, 3).is_zero());
}
