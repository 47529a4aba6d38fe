#ifndef SUPERAL_GRADED_HPP
#define SUPERAL_GRADED_HPP

#include "superal/scalar.hpp"

#include <Eigen/Core>

#include <stdexcept>
#include <utility>

namespace superal {

template <class Scalar>
using MatX = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <class Scalar>
using VecX = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

/// Z_2-graded dimension (p|q): p even coordinates followed by q odd ones.
struct GradedDim {
  int even = 0;
  int odd = 0;

  GradedDim() = default;
  GradedDim(int p, int q) : even(p), odd(q) {
    if (p < 0 || q < 0 || p + q < 1) throw std::invalid_argument("GradedDim: need p,q >= 0 and p+q >= 1");
  }
  int total() const { return even + odd; }
  /// Parity bit of coordinate index i: 0 for i < p, 1 otherwise.
  int coordinate_parity(int i) const { return i < even ? 0 : 1; }

  friend bool operator==(const GradedDim& a, const GradedDim& b) {
    return a.even == b.even && a.odd == b.odd;
  }
  friend bool operator!=(const GradedDim& a, const GradedDim& b) { return !(a == b); }
};

enum class Parity { Even, Odd, Mixed };

inline char parity_code(Parity p) {
  switch (p) {
    case Parity::Even: return 'e';
    case Parity::Odd: return 'o';
    default: return 'm';
  }
}

/// Square matrix on a graded space together with its block parity.
///
/// With coordinates split as (p|q), an entry at (i,j) sits in a diagonal
/// block when i and j have equal coordinate parity.  A matrix supported on
/// the diagonal blocks is Even, one supported on the off-diagonal blocks is
/// Odd, anything else is Mixed.  Parity is classified on construction; the
/// zero matrix counts as Even.
template <class Scalar>
class SuperMatrix {
 public:
  SuperMatrix() = default;
  SuperMatrix(GradedDim dim, MatX<Scalar> entries) : dim_(dim), mat_(std::move(entries)) {
    if (mat_.rows() != dim_.total() || mat_.cols() != dim_.total())
      throw std::invalid_argument("SuperMatrix: entry block does not match graded dimension");
    classify();
  }

  static SuperMatrix zero(GradedDim dim) {
    return SuperMatrix(dim, MatX<Scalar>::Zero(dim.total(), dim.total()));
  }
  /// Elementary matrix E_{ij} (single 1 entry), the basic homogeneous building block.
  static SuperMatrix unit(GradedDim dim, int i, int j) {
    MatX<Scalar> m = MatX<Scalar>::Zero(dim.total(), dim.total());
    m(i, j) = Scalar(1);
    return SuperMatrix(dim, std::move(m));
  }

  const GradedDim& dim() const { return dim_; }
  Parity parity() const { return parity_; }
  bool is_homogeneous() const { return parity_ != Parity::Mixed; }
  /// Parity bit for sign bookkeeping; rejects mixed matrices.
  int parity_bit() const {
    if (parity_ == Parity::Mixed) throw std::domain_error("SuperMatrix: mixed parity has no parity bit");
    return parity_ == Parity::Odd ? 1 : 0;
  }

  const MatX<Scalar>& mat() const { return mat_; }
  const Scalar& operator()(int i, int j) const { return mat_(i, j); }
  bool is_zero() const { return mat_.isZero(Scalar(0)); }

  /// Projection onto the diagonal (even) blocks.
  SuperMatrix even_part() const { return masked(0); }
  /// Projection onto the off-diagonal (odd) blocks.
  SuperMatrix odd_part() const { return masked(1); }

  SuperMatrix operator-() const { return SuperMatrix(dim_, -mat_); }
  friend SuperMatrix operator+(const SuperMatrix& a, const SuperMatrix& b) {
    a.check_same_space(b);
    return SuperMatrix(a.dim_, a.mat_ + b.mat_);
  }
  friend SuperMatrix operator-(const SuperMatrix& a, const SuperMatrix& b) {
    a.check_same_space(b);
    return SuperMatrix(a.dim_, a.mat_ - b.mat_);
  }
  friend SuperMatrix operator*(const Scalar& c, const SuperMatrix& a) {
    return SuperMatrix(a.dim_, (c * a.mat_).eval());
  }
  friend SuperMatrix operator*(const SuperMatrix& a, const SuperMatrix& b) {
    a.check_same_space(b);
    return SuperMatrix(a.dim_, a.mat_.lazyProduct(b.mat_).eval());
  }
  SuperMatrix pow(int k) const {
    SuperMatrix acc = SuperMatrix(dim_, MatX<Scalar>::Identity(dim_.total(), dim_.total()));
    for (int i = 0; i < k; ++i) acc = acc * *this;
    return acc;
  }

  friend bool operator==(const SuperMatrix& a, const SuperMatrix& b) {
    return a.dim_ == b.dim_ && a.mat_ == b.mat_;
  }
  friend bool operator!=(const SuperMatrix& a, const SuperMatrix& b) { return !(a == b); }

 private:
  void check_same_space(const SuperMatrix& o) const {
    if (dim_ != o.dim_) throw std::invalid_argument("SuperMatrix: graded dimensions differ");
  }
  void classify() {
    const int n = dim_.total();
    bool even_support = false, odd_support = false;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        if (mat_(i, j) == Scalar(0)) continue;
        (dim_.coordinate_parity(i) == dim_.coordinate_parity(j) ? even_support : odd_support) = true;
      }
    parity_ = odd_support ? (even_support ? Parity::Mixed : Parity::Odd) : Parity::Even;
  }
  SuperMatrix masked(int block_parity) const {
    MatX<Scalar> m = MatX<Scalar>::Zero(dim_.total(), dim_.total());
    for (int i = 0; i < dim_.total(); ++i)
      for (int j = 0; j < dim_.total(); ++j)
        if (((dim_.coordinate_parity(i) + dim_.coordinate_parity(j)) & 1) == block_parity) m(i, j) = mat_(i, j);
    return SuperMatrix(dim_, std::move(m));
  }

  GradedDim dim_;
  Parity parity_ = Parity::Even;
  MatX<Scalar> mat_;
};

/// str(X) = tr(A) - tr(D) for X = [[A,B],[C,D]]; defined for any parity.
template <class Scalar>
Scalar supertrace(const SuperMatrix<Scalar>& x) {
  Scalar acc = Scalar(0);
  for (int i = 0; i < x.dim().total(); ++i) {
    if (x.dim().coordinate_parity(i) == 0)
      acc += x(i, i);
    else
      acc -= x(i, i);
  }
  return acc;
}

/// Superbracket [X,Y] = XY - (-1)^{xy} YX of homogeneous matrices.
template <class Scalar>
SuperMatrix<Scalar> superbracket(const SuperMatrix<Scalar>& x, const SuperMatrix<Scalar>& y) {
  if (!x.is_homogeneous() || !y.is_homogeneous())
    throw std::domain_error("superbracket: arguments must be parity-homogeneous");
  if ((x.parity_bit() & y.parity_bit()) != 0) return x * y + y * x;
  return x * y - y * x;
}

/// Twisted adjoint action ad'(A)(B) = AB - (-1)^{a(b+1)} BA.
template <class Scalar>
SuperMatrix<Scalar> twisted_bracket(const SuperMatrix<Scalar>& a, const SuperMatrix<Scalar>& b) {
  if (!a.is_homogeneous() || !b.is_homogeneous())
    throw std::domain_error("twisted_bracket: arguments must be parity-homogeneous");
  if ((a.parity_bit() & (b.parity_bit() ^ 1)) != 0) return a * b + b * a;
  return a * b - b * a;
}

/// Invariant bilinear form B(X,Y) = str(XY).
template <class Scalar>
Scalar bilinear_form(const SuperMatrix<Scalar>& x, const SuperMatrix<Scalar>& y) {
  if (x.dim() != y.dim()) throw std::invalid_argument("bilinear_form: graded dimensions differ");
  Scalar acc = Scalar(0);
  const int n = x.dim().total();
  for (int i = 0; i < n; ++i) {
    Scalar diag = Scalar(0);
    for (int k = 0; k < n; ++k) diag += x(i, k) * y(k, i);
    if (x.dim().coordinate_parity(i) == 0)
      acc += diag;
    else
      acc -= diag;
  }
  return acc;
}

/// Supertranspose: [[A,B],[C,D]] -> [[A^T, C^T],[-B^T, D^T]].
/// An antiautomorphism of order four; its square negates the odd blocks.
template <class Scalar>
SuperMatrix<Scalar> supertranspose(const SuperMatrix<Scalar>& x) {
  const int n = x.dim().total();
  MatX<Scalar> m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const bool lower_left = x.dim().coordinate_parity(i) == 1 && x.dim().coordinate_parity(j) == 0;
      m(i, j) = lower_left ? Scalar(0) - x(j, i) : x(j, i);
    }
  return SuperMatrix<Scalar>(x.dim(), std::move(m));
}

/// Entrywise reduction of an exact matrix into Z/p.
inline SuperMatrix<Fp> reduce_mod(const SuperMatrix<Rational>& x, std::uint64_t p) {
  const int n = x.dim().total();
  MatX<Fp> m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = reduce_mod(x(i, j), p);
  return SuperMatrix<Fp>(x.dim(), std::move(m));
}

}  // namespace superal

#endif  // SUPERAL_GRADED_HPP
