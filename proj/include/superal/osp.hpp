#ifndef SUPERAL_OSP_HPP
#define SUPERAL_OSP_HPP

#include "superal/algebra.hpp"
#include "superal/graded.hpp"
#include "superal/weyl.hpp"

#include <Eigen/LU>

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace superal {

/// The supersymmetric form G = (1) + J on the (1|2n) space, with the
/// symplectic part interleaved by pairs: odd coordinates are ordered
/// (p_1, q_1, ..., p_n, q_n) and J restricted to each pair is [[0,1],[-1,0]].
/// osp(1,2n) is the set of X with X^{st} G + G X = 0.
inline SuperMatrix<Rational> osp_form(int n) {
  if (n < 1) throw std::invalid_argument("osp_form: n >= 1 required");
  GradedDim d(1, 2 * n);
  MatX<Rational> g = MatX<Rational>::Zero(d.total(), d.total());
  g(0, 0) = Rational(1);
  for (int i = 0; i < n; ++i) {
    g(2 * i + 1, 2 * i + 2) = Rational(1);
    g(2 * i + 2, 2 * i + 1) = Rational(-1);
  }
  return SuperMatrix<Rational>(d, std::move(g));
}

/// Membership predicate X^{st} G + G X = 0 for the form above.
inline bool membership_check(const SuperMatrix<Rational>& x, int n) {
  SuperMatrix<Rational> g = osp_form(n);
  if (x.dim() != g.dim()) throw std::invalid_argument("membership_check: expected a (2n+1)x(2n+1) matrix");
  return (supertranspose(x) * g + g * x).is_zero();
}

/// Explicit integer basis of osp(1,2n); every element is validated against
/// membership_check, and SuperAlgebra::make re-validates independence and
/// closure under the superbracket.
///
/// Writing a_i = 2i-1 (coordinate of p_i) and b_i = 2i (coordinate of q_i):
///   even part (dimension n(2n+1)):
///     H_i = E_{a_i,a_i} - E_{b_i,b_i}               (Cartan, listed first)
///     X_i = E_{a_i,b_i},  Y_i = E_{b_i,a_i}          (within each pair)
///     M_{uv} = E_{uv} - s(u)s(v) E_{vbar,ubar}       (across pairs i<j,
///       u in {a_i,b_i}, v in {a_j,b_j}; bar swaps a and b within a pair,
///       s(a) = +1, s(b) = -1)
///   odd part (dimension 2n, interleaved):
///     U_i = E_{a_i,0} - E_{0,b_i},  W_i = E_{b_i,0} + E_{0,a_i}
inline SuperAlgebra osp_algebra(int n) {
  if (n < 1) throw std::invalid_argument("osp_algebra: n >= 1 required");
  GradedDim d(1, 2 * n);
  using Mat = SuperMatrix<Rational>;
  auto a = [](int i) { return 2 * i + 1; };  // 0-based pair index
  auto b = [](int i) { return 2 * i + 2; };

  std::vector<Mat> basis;
  for (int i = 0; i < n; ++i) basis.push_back(Mat::unit(d, a(i), a(i)) - Mat::unit(d, b(i), b(i)));
  for (int i = 0; i < n; ++i) {
    basis.push_back(Mat::unit(d, a(i), b(i)));
    basis.push_back(Mat::unit(d, b(i), a(i)));
  }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int u : {a(i), b(i)})
        for (int v : {a(j), b(j)}) {
          int ubar = (u == a(i)) ? b(i) : a(i);
          int vbar = (v == a(j)) ? b(j) : a(j);
          int s = ((u == a(i)) ? 1 : -1) * ((v == a(j)) ? 1 : -1);
          Mat m = Mat::unit(d, u, v) - Rational(s) * Mat::unit(d, vbar, ubar);
          basis.push_back(std::move(m));
        }
  for (int i = 0; i < n; ++i) {
    basis.push_back(Mat::unit(d, a(i), 0) - Mat::unit(d, 0, b(i)));
    basis.push_back(Mat::unit(d, b(i), 0) + Mat::unit(d, 0, a(i)));
  }

  for (const Mat& m : basis)
    if (!membership_check(m, n)) throw std::logic_error("osp_algebra: constructed element fails membership");
  if (static_cast<int>(basis.size()) != 2 * n * n + 3 * n)
    throw std::logic_error("osp_algebra: unexpected basis count");

  return SuperAlgebra::make("osp(1," + std::to_string(2 * n) + ")", std::move(basis), osp_form(n));
}

/// Dimension of the solution space of X^{st}G + GX = 0, computed
/// independently of the explicit basis by rank counts of the flattened
/// linear system.  The map preserves block parity, so the even and odd
/// column groups are eliminated separately.  Used as an oracle for osp_algebra.
inline int osp_kernel_dimension(int n) {
  GradedDim d(1, 2 * n);
  const int nn = d.total();
  const SuperMatrix<Rational> g = osp_form(n);
  int kernel = 0;
  for (int block_parity : {0, 1}) {
    std::vector<VecX<Rational>> cols;
    for (int i = 0; i < nn; ++i)
      for (int j = 0; j < nn; ++j) {
        if (((d.coordinate_parity(i) + d.coordinate_parity(j)) & 1) != block_parity) continue;
        SuperMatrix<Rational> e = SuperMatrix<Rational>::unit(d, i, j);
        SuperMatrix<Rational> img = supertranspose(e) * g + g * e;
        VecX<Rational> col(nn * nn);
        for (int r = 0; r < nn; ++r)
          for (int c = 0; c < nn; ++c) col[r * nn + c] = img(r, c);
        cols.push_back(std::move(col));
      }
    MatX<Rational> sys(nn * nn, static_cast<int>(cols.size()));
    for (int c = 0; c < static_cast<int>(cols.size()); ++c) sys.col(c) = cols[c];
    Eigen::FullPivLU<MatX<Rational>> lu(sys);
    kernel += static_cast<int>(cols.size()) - static_cast<int>(lu.rank());
  }
  return kernel;
}

/// Cartan element H(alpha) = diag(0, alpha_1, -alpha_1, ..., alpha_n, -alpha_n).
inline SuperMatrix<Rational> cartan_element(const std::vector<Rational>& alpha) {
  const int n = static_cast<int>(alpha.size());
  if (n < 1) throw std::invalid_argument("cartan_element: need at least one coefficient");
  GradedDim d(1, 2 * n);
  MatX<Rational> m = MatX<Rational>::Zero(d.total(), d.total());
  for (int i = 0; i < n; ++i) {
    m(2 * i + 1, 2 * i + 1) = alpha[i];
    m(2 * i + 2, 2 * i + 2) = -alpha[i];
  }
  return SuperMatrix<Rational>(d, std::move(m));
}

/// The diagonal change of basis aligning the Weyl realization with the
/// explicit osp basis: conjugation by S = diag(1, 2, -1, 2, -1, ...) carries
/// every weyl_realization(n) matrix into osp(1,2n) (in particular the image
/// of ad'(p_i) becomes U_i exactly, and ad'(q_i) becomes -2 W_i).
/// The two spans are asserted equal; failure throws std::logic_error.
inline SuperMatrix<Rational> weyl_osp_change_of_basis(int n) {
  GradedDim d(1, 2 * n);
  MatX<Rational> s = MatX<Rational>::Zero(d.total(), d.total());
  s(0, 0) = Rational(1);
  for (int i = 0; i < n; ++i) {
    s(2 * i + 1, 2 * i + 1) = Rational(2);
    s(2 * i + 2, 2 * i + 2) = Rational(-1);
  }
  SuperMatrix<Rational> smat(d, s);
  MatX<Rational> sinv = MatX<Rational>::Zero(d.total(), d.total());
  for (int i = 0; i < d.total(); ++i) sinv(i, i) = Rational(1) / s(i, i);
  SuperMatrix<Rational> sinv_mat(d, std::move(sinv));

  SuperAlgebra weyl = weyl_realization(n);
  SuperAlgebra osp = osp_algebra(n);
  if (weyl.dim() != osp.dim() || weyl.even_dim() != osp.even_dim())
    throw std::logic_error("weyl_osp_change_of_basis: dimension mismatch");
  for (int i = 0; i < weyl.dim(); ++i) {
    SuperMatrix<Rational> conj = sinv_mat * weyl.basis(i) * smat;
    if (!membership_check(conj, n))
      throw std::logic_error("weyl_osp_change_of_basis: conjugated element leaves osp");
    osp.coordinates(conj);  // throws if outside the explicit-basis span
  }
  return smat;
}

}  // namespace superal

#endif  // SUPERAL_OSP_HPP
