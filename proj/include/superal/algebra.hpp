#ifndef SUPERAL_ALGEBRA_HPP
#define SUPERAL_ALGEBRA_HPP

#include "superal/graded.hpp"

#include <Eigen/LU>

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace superal {

/// A matrix Lie superalgebra presented by an explicit homogeneous basis,
/// with all even basis elements listed before all odd ones.
///
/// Construction validates that the basis is linearly independent and closed
/// under the superbracket, and precomputes structure constants plus the Gram
/// matrix of the invariant form B(X,Y) = str(XY).  Instances are immutable.
class SuperAlgebra {
 public:
  using Mat = SuperMatrix<Rational>;

  /// Validating factory; throws std::invalid_argument on an inconsistent basis.
  static SuperAlgebra make(std::string name, std::vector<Mat> basis,
                           std::optional<Mat> defining_form = std::nullopt) {
    return SuperAlgebra(std::move(name), std::move(basis), std::move(defining_form), true);
  }

  /// Non-validating factory for tests that need a deliberately corrupted
  /// algebra (e.g. falsification fixtures).  Never used by library code.
  static SuperAlgebra make_unchecked(std::string name, std::vector<Mat> basis,
                                     std::optional<Mat> defining_form = std::nullopt) {
    return SuperAlgebra(std::move(name), std::move(basis), std::move(defining_form), false);
  }

  const std::string& name() const { return name_; }
  /// Graded dimension of the representation space the basis matrices act on.
  const GradedDim& space() const { return basis_.front().dim(); }
  int dim() const { return static_cast<int>(basis_.size()); }
  int even_dim() const { return even_dim_; }
  int odd_dim() const { return dim() - even_dim_; }

  const Mat& basis(int i) const { return basis_.at(i); }
  const std::vector<Mat>& basis() const { return basis_; }
  int parity_bit(int i) const { return i < even_dim_ ? 0 : 1; }

  const MatX<Rational>& gram() const { return gram_; }
  const std::optional<Mat>& defining_form() const { return form_; }

  /// Exact coordinates of x in this basis; throws std::domain_error when x
  /// does not lie in the span.
  VecX<Rational> coordinates(const Mat& x) const {
    if (x.dim() != space()) throw std::invalid_argument("coordinates: wrong graded dimension");
    VecX<Rational> rhs = flatten(x.mat());
    VecX<Rational> c = lu_->solve(rhs);
    if (flat_ * c != rhs) throw std::domain_error("coordinates: element outside the algebra span");
    return c;
  }

  bool contains(const Mat& x) const {
    if (x.dim() != space()) return false;
    VecX<Rational> rhs = flatten(x.mat());
    VecX<Rational> c = lu_->solve(rhs);
    return flat_ * c == rhs;
  }

  /// Coordinates of [b_i, b_j] (precomputed structure constants).
  const VecX<Rational>& bracket_coords(int i, int j) const { return brackets_.at(index(i, j)); }

  /// Matrix of ad(x): column j holds the coordinates of [x, b_j].
  MatX<Rational> ad_matrix(const Mat& x) const {
    MatX<Rational> m(dim(), dim());
    for (int j = 0; j < dim(); ++j) m.col(j) = coordinates(superbracket(x, basis_[j]));
    return m;
  }

  /// Assembles an element from coordinates.
  Mat element(const VecX<Rational>& coords) const {
    if (coords.size() != dim()) throw std::invalid_argument("element: coordinate count mismatch");
    MatX<Rational> acc = MatX<Rational>::Zero(space().total(), space().total());
    for (int i = 0; i < dim(); ++i)
      if (!coords[i].is_zero()) acc += coords[i] * basis_[i].mat();
    return Mat(space(), std::move(acc));
  }

  /// Basis matrices reduced into Z/p, for modular evaluation passes.
  std::vector<MatX<Fp>> basis_mod(std::uint64_t p) const {
    std::vector<MatX<Fp>> out;
    out.reserve(basis_.size());
    for (const Mat& b : basis_) out.push_back(reduce_mod(b, p).mat());
    return out;
  }

 private:
  SuperAlgebra(std::string name, std::vector<Mat> basis, std::optional<Mat> form, bool validate)
      : name_(std::move(name)), basis_(std::move(basis)), form_(std::move(form)) {
    if (basis_.empty()) throw std::invalid_argument("SuperAlgebra: empty basis");
    const GradedDim d = basis_.front().dim();
    bool seen_odd = false;
    for (const Mat& b : basis_) {
      if (b.dim() != d) throw std::invalid_argument("SuperAlgebra: inconsistent graded dimensions");
      if (!b.is_homogeneous()) throw std::invalid_argument("SuperAlgebra: basis must be parity-homogeneous");
      if (b.parity() == Parity::Odd)
        seen_odd = true;
      else if (seen_odd)
        throw std::invalid_argument("SuperAlgebra: even basis elements must precede odd ones");
    }
    even_dim_ = 0;
    for (const Mat& b : basis_)
      if (b.parity() == Parity::Even) ++even_dim_;

    const int n2 = d.total() * d.total();
    flat_.resize(n2, dim());
    for (int i = 0; i < dim(); ++i) flat_.col(i) = flatten(basis_[i].mat());
    lu_ = std::make_shared<Eigen::FullPivLU<MatX<Rational>>>(flat_);
    if (validate && lu_->rank() != dim())
      throw std::invalid_argument("SuperAlgebra: basis is linearly dependent");

    gram_.resize(dim(), dim());
    for (int i = 0; i < dim(); ++i)
      for (int j = 0; j < dim(); ++j) gram_(i, j) = bilinear_form(basis_[i], basis_[j]);

    if (validate) {
      brackets_.reserve(static_cast<std::size_t>(dim()) * dim());
      for (int i = 0; i < dim(); ++i)
        for (int j = 0; j < dim(); ++j) {
          Mat br = superbracket(basis_[i], basis_[j]);
          VecX<Rational> rhs = flatten(br.mat());
          VecX<Rational> c = lu_->solve(rhs);
          if (flat_ * c != rhs)
            throw std::invalid_argument("SuperAlgebra: basis is not closed under the superbracket");
          brackets_.push_back(std::move(c));
        }
    }
  }

  std::size_t index(int i, int j) const { return static_cast<std::size_t>(i) * dim() + j; }

  static VecX<Rational> flatten(const MatX<Rational>& m) {
    VecX<Rational> v(m.rows() * m.cols());
    int k = 0;
    for (int i = 0; i < m.rows(); ++i)
      for (int j = 0; j < m.cols(); ++j) v[k++] = m(i, j);
    return v;
  }

  std::string name_;
  std::vector<Mat> basis_;
  std::optional<Mat> form_;
  int even_dim_ = 0;
  MatX<Rational> flat_;
  std::shared_ptr<Eigen::FullPivLU<MatX<Rational>>> lu_;
  MatX<Rational> gram_;
  std::vector<VecX<Rational>> brackets_;
};

/// Full matrix superalgebra gl(p,q): all (p+q) x (p+q) matrices.
/// Basis order: diagonal-block units row-major (A block, then D block),
/// followed by off-diagonal units row-major (B block, then C block).
inline SuperAlgebra gl_algebra(int p, int q) {
  GradedDim d(p, q);
  const int n = d.total();
  std::vector<SuperAlgebra::Mat> basis;
  basis.reserve(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (d.coordinate_parity(i) == d.coordinate_parity(j))
        basis.push_back(SuperAlgebra::Mat::unit(d, i, j));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (d.coordinate_parity(i) != d.coordinate_parity(j))
        basis.push_back(SuperAlgebra::Mat::unit(d, i, j));
  return SuperAlgebra::make("gl(" + std::to_string(p) + "," + std::to_string(q) + ")", std::move(basis));
}

}  // namespace superal

#endif  // SUPERAL_ALGEBRA_HPP
