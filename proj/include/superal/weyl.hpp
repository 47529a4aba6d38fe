#ifndef SUPERAL_WEYL_HPP
#define SUPERAL_WEYL_HPP

#include "superal/algebra.hpp"
#include "superal/scalar.hpp"

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace superal {

/// Normal-ordered monomial in the Weyl generators, stored as a sorted list
/// of generator ids.  With n pairs, id i < n is p_{i+1} and id n+i is
/// q_{i+1}; ascending id order therefore means "all q's after p's, indices
/// sorted", which is the normal form.
using WeylMonomial = std::vector<std::uint8_t>;

/// Element of the Weyl algebra on n generator pairs: a finite linear
/// combination of normal-ordered monomials.  The generators obey the
/// canonical commutation relation p_i q_i - q_i p_i = 1 (all other
/// generator pairs commute in the associative product).
///
/// Elements appearing in public API results are capped at degree 2 (the
/// span C·1 + V + quadratics that hosts the osp realization); intermediate
/// products inside bracket computations may reach degree 4.
class WeylElement {
 public:
  WeylElement() : n_(0) {}
  explicit WeylElement(int n) : n_(n) {
    if (n < 1) throw std::invalid_argument("WeylElement: n >= 1 required");
  }

  static WeylElement one(int n) {
    WeylElement e(n);
    e.terms_[{}] = Rational(1);
    return e;
  }
  /// Generator p_{i+1} (0-based i).
  static WeylElement p(int n, int i) { return monomial(n, {static_cast<std::uint8_t>(i)}); }
  /// Generator q_{i+1} (0-based i).
  static WeylElement q(int n, int i) { return monomial(n, {static_cast<std::uint8_t>(n + i)}); }
  static WeylElement monomial(int n, WeylMonomial ids) {
    WeylElement e(n);
    for (std::uint8_t id : ids)
      if (id >= 2 * n) throw std::invalid_argument("WeylElement: generator id out of range");
    for (std::size_t i = 1; i < ids.size(); ++i)
      if (ids[i - 1] > ids[i]) throw std::invalid_argument("WeylElement: monomial not normal-ordered");
    e.terms_[std::move(ids)] = Rational(1);
    return e;
  }

  int pairs() const { return n_; }
  const std::map<WeylMonomial, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  int degree() const {
    int d = 0;
    for (const auto& [m, c] : terms_) d = std::max<int>(d, static_cast<int>(m.size()));
    return d;
  }

  /// Parity = degree mod 2; defined only for parity-homogeneous elements.
  int parity_bit() const {
    int par = -1;
    for (const auto& [m, c] : terms_) {
      int p = static_cast<int>(m.size()) % 2;
      if (par == -1) par = p;
      if (par != p) throw std::domain_error("WeylElement: parity of an inhomogeneous element");
    }
    return par == -1 ? 0 : par;
  }

  Rational coefficient(const WeylMonomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  WeylElement operator-() const {
    WeylElement r(*this);
    for (auto& [m, c] : r.terms_) c = -c;
    return r;
  }
  friend WeylElement operator+(WeylElement a, const WeylElement& b) {
    a.check_same(b);
    for (const auto& [m, c] : b.terms_) a.add_term(m, c);
    return a;
  }
  friend WeylElement operator-(WeylElement a, const WeylElement& b) { return a + (-b); }
  friend WeylElement operator*(const Rational& c, WeylElement a) {
    if (c.is_zero()) return WeylElement(a.n_);
    for (auto& [m, coeff] : a.terms_) coeff *= c;
    return a;
  }
  friend bool operator==(const WeylElement& a, const WeylElement& b) {
    return a.n_ == b.n_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const WeylElement& a, const WeylElement& b) { return !(a == b); }

  /// Associative product without the public degree cap; intermediate values
  /// may have degree up to 4.  Reduction repeatedly rewrites the single
  /// nontrivial relation q_i p_i -> p_i q_i - 1 and sorts commuting factors.
  friend WeylElement product_raw(const WeylElement& u, const WeylElement& v) {
    u.check_same(v);
    if (u.degree() + v.degree() > 4)
      throw std::invalid_argument("WeylElement: product degree would exceed 4");
    WeylElement out(u.n_);
    for (const auto& [mu, cu] : u.terms_)
      for (const auto& [mv, cv] : v.terms_) {
        WeylMonomial concat = mu;
        concat.insert(concat.end(), mv.begin(), mv.end());
        out.reduce_into(std::move(concat), cu * cv);
      }
    return out;
  }

 private:
  void check_same(const WeylElement& o) const {
    if (n_ != o.n_) throw std::invalid_argument("WeylElement: mismatched generator counts");
  }
  void add_term(const WeylMonomial& m, const Rational& c) {
    Rational& slot = terms_[m];
    slot += c;
    if (slot.is_zero()) terms_.erase(m);
  }
  /// Normal-orders `mono` (not necessarily sorted) and accumulates it.
  void reduce_into(WeylMonomial mono, Rational coeff) {
    for (std::size_t i = 0; i + 1 < mono.size();) {
      std::uint8_t a = mono[i], b = mono[i + 1];
      if (a <= b) {
        ++i;
        continue;
      }
      if (a == b + n_ && b < n_) {
        // a = q_j, b = p_j adjacent out of order: q p = p q - 1.
        WeylMonomial dropped;
        dropped.reserve(mono.size() - 2);
        dropped.insert(dropped.end(), mono.begin(), mono.begin() + i);
        dropped.insert(dropped.end(), mono.begin() + i + 2, mono.end());
        reduce_into(std::move(dropped), -coeff);
      }
      std::swap(mono[i], mono[i + 1]);
      if (i > 0) --i;
    }
    add_term(mono, coeff);
  }

  int n_;
  std::map<WeylMonomial, Rational> terms_;
};

/// Associative product with the public degree-2 cap.
inline WeylElement weyl_product(const WeylElement& u, const WeylElement& v) {
  WeylElement r = product_raw(u, v);
  if (r.degree() > 2)
    throw std::domain_error("weyl_product: result degree exceeds 2 outside a bracket context");
  return r;
}

/// Lie bracket [u,v] = uv - vu in the associative algebra.
inline WeylElement weyl_lie_bracket(const WeylElement& u, const WeylElement& v) {
  return product_raw(u, v) - product_raw(v, u);
}

/// Super bracket [u,v] = uv - (-1)^{uv} vu of homogeneous elements.
inline WeylElement weyl_super_bracket(const WeylElement& u, const WeylElement& v) {
  if ((u.parity_bit() & v.parity_bit()) != 0) return product_raw(u, v) + product_raw(v, u);
  return product_raw(u, v) - product_raw(v, u);
}

/// Twisted adjoint action ad'(a)(b) = ab - (-1)^{a(b+1)} ba.
inline WeylElement weyl_twisted_ad(const WeylElement& a, const WeylElement& b) {
  if ((a.parity_bit() & (b.parity_bit() ^ 1)) != 0) return product_raw(a, b) + product_raw(b, a);
  return product_raw(a, b) - product_raw(b, a);
}

/// The twisted-adjoint realization of osp(1,2n) as matrices acting on
/// V = C·1 + span{p_i, q_i}, with V ordered (1, p_1, q_1, ..., p_n, q_n).
///
/// Basis order: the n diagonal quadratics p_i q_i first, then the remaining
/// degree-2 monomials in lexicographic id order (even part, n(2n+1) total),
/// then the odd generators interleaved p_1, q_1, ..., p_n, q_n.
inline SuperAlgebra weyl_realization(int n) {
  if (n < 1) throw std::invalid_argument("weyl_realization: n >= 1 required");
  const int nv = 2 * n + 1;
  GradedDim space(1, 2 * n);

  // V basis as Weyl elements; coordinate index of generator id g follows
  // the interleaved order: p_i -> 2i+1, q_i -> 2i+2 (0-based i).
  std::vector<WeylElement> v_basis(nv, WeylElement(n));
  v_basis[0] = WeylElement::one(n);
  std::vector<int> coord_of_id(2 * n);
  for (int i = 0; i < n; ++i) {
    coord_of_id[i] = 2 * i + 1;
    coord_of_id[n + i] = 2 * i + 2;
    v_basis[2 * i + 1] = WeylElement::p(n, i);
    v_basis[2 * i + 2] = WeylElement::q(n, i);
  }

  std::vector<WeylElement> h_basis;
  for (int i = 0; i < n; ++i)
    h_basis.push_back(WeylElement::monomial(n, {static_cast<std::uint8_t>(i), static_cast<std::uint8_t>(n + i)}));
  for (std::uint8_t a = 0; a < 2 * n; ++a)
    for (std::uint8_t b = a; b < 2 * n; ++b) {
      if (b == a + n && a < n) continue;  // p_i q_i already listed
      h_basis.push_back(WeylElement::monomial(n, {a, b}));
    }
  for (int i = 0; i < n; ++i) {
    h_basis.push_back(WeylElement::p(n, i));
    h_basis.push_back(WeylElement::q(n, i));
  }

  // Expand ad'(A)(w) in the V basis; anything outside V is a construction bug.
  auto matrix_of = [&](const WeylElement& a) {
    MatX<Rational> m = MatX<Rational>::Zero(nv, nv);
    for (int j = 0; j < nv; ++j) {
      WeylElement img = weyl_twisted_ad(a, v_basis[j]);
      for (const auto& [mono, c] : img.terms()) {
        if (mono.empty())
          m(0, j) = c;
        else if (mono.size() == 1)
          m(coord_of_id[mono[0]], j) = c;
        else
          throw std::domain_error("weyl_realization: twisted action leaves V");
      }
    }
    return SuperMatrix<Rational>(space, std::move(m));
  };

  std::vector<SuperMatrix<Rational>> basis;
  basis.reserve(h_basis.size());
  for (const WeylElement& a : h_basis) basis.push_back(matrix_of(a));
  return SuperAlgebra::make("weyl_osp(1," + std::to_string(2 * n) + ")", std::move(basis));
}

}  // namespace superal

#endif  // SUPERAL_WEYL_HPP
