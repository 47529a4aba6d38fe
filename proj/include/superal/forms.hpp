#ifndef SUPERAL_FORMS_HPP
#define SUPERAL_FORMS_HPP

#include "superal/algebra.hpp"
#include "superal/perms.hpp"
#include "superal/superpoly.hpp"

#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace superal {

/// Symmetry type of a multilinear form on a graded algebra.
///   supersym: swapping adjacent arguments costs -1 exactly when both are odd;
///   skew:     swapping adjacent arguments costs -1 unless both are odd;
///   plain:    no symmetry (scratch space for tensor/symmetrization oracles).
enum class Variance { supersym, skew, plain };

inline const char* variance_name(Variance v) {
  switch (v) {
    case Variance::supersym: return "supersym";
    case Variance::skew: return "skew";
    default: return "plain";
  }
}

/// Multilinear form on a SuperAlgebra, stored as a table of values on
/// canonical basis tuples.  Canonical keys are sorted index tuples (basis
/// indices are even-first, so sorting groups parities); a repeated odd index
/// is zero for supersym variance, a repeated even index is zero for skew.
/// The Z2 degree f pins the supported key parities: a scalar-valued form of
/// degree f vanishes on tuples with total parity != f.
class MultilinearForm {
 public:
  MultilinearForm(const SuperAlgebra& g, int arity, Variance v, int z2)
      : g_(&g), arity_(arity), variance_(v), z2_(z2 & 1) {
    if (arity < 0) throw std::invalid_argument("MultilinearForm: negative arity");
  }

  /// Arity-0 form with constant value c.
  static MultilinearForm constant(const SuperAlgebra& g, const Rational& c, Variance v) {
    MultilinearForm f(g, 0, v, 0);
    if (!c.is_zero()) f.table_[{}] = c;
    return f;
  }

  const SuperAlgebra& algebra() const { return *g_; }
  int arity() const { return arity_; }
  Variance variance() const { return variance_; }
  int z2_degree() const { return z2_; }
  const std::map<std::vector<int>, Rational>& table() const { return table_; }
  bool is_zero() const { return table_.empty(); }

  /// Sign picked up when sorting `key` into canonical order; sets `zero` when
  /// the sorted key contains a forbidden repeat.  Plain variance never sorts.
  int canonicalize(std::vector<int>& key, bool& zero) const {
    zero = false;
    if (variance_ == Variance::plain) return 1;
    int sign = 1;
    for (std::size_t i = 1; i < key.size(); ++i)
      for (std::size_t j = i; j > 0 && key[j] < key[j - 1]; --j) {
        bool both_odd = g_->parity_bit(key[j]) && g_->parity_bit(key[j - 1]);
        if (variance_ == Variance::supersym ? both_odd : !both_odd) sign = -sign;
        std::swap(key[j], key[j - 1]);
      }
    for (std::size_t i = 1; i < key.size(); ++i)
      if (key[i] == key[i - 1]) {
        bool odd = g_->parity_bit(key[i]);
        if (variance_ == Variance::supersym ? odd : !odd) zero = true;
      }
    return sign;
  }

  /// Accumulates `value(key) += c`, folding the key into canonical form.
  void add_term(std::vector<int> key, const Rational& c) {
    if (static_cast<int>(key.size()) != arity_)
      throw std::invalid_argument("add_term: key length != arity");
    int par = 0;
    for (int i : key) {
      if (i < 0 || i >= g_->dim()) throw std::invalid_argument("add_term: index out of range");
      par ^= g_->parity_bit(i);
    }
    if (par != z2_)
      throw std::invalid_argument("add_term: key parity contradicts the form's Z2 degree");
    if (c.is_zero()) return;
    bool zero = false;
    int sign = canonicalize(key, zero);
    if (zero) return;
    Rational& slot = table_[key];
    slot += (sign > 0) ? c : -c;
    if (slot.is_zero()) table_.erase(key);
  }

  /// Value on the basis tuple named by `key` (any order, repeats allowed).
  Rational value_at(std::vector<int> key) const {
    if (static_cast<int>(key.size()) != arity_)
      throw std::invalid_argument("value_at: key length != arity");
    bool zero = false;
    int sign = canonicalize(key, zero);
    if (zero) return Rational(0);
    auto it = table_.find(key);
    if (it == table_.end()) return Rational(0);
    return (sign > 0) ? it->second : -it->second;
  }

  MultilinearForm& operator+=(const MultilinearForm& o) {
    require_same_shape(o, "operator+=");
    for (const auto& [k, v] : o.table_) {
      Rational& slot = table_[k];
      slot += v;
      if (slot.is_zero()) table_.erase(k);
    }
    return *this;
  }
  MultilinearForm& operator-=(const MultilinearForm& o) {
    require_same_shape(o, "operator-=");
    for (const auto& [k, v] : o.table_) {
      Rational& slot = table_[k];
      slot -= v;
      if (slot.is_zero()) table_.erase(k);
    }
    return *this;
  }
  MultilinearForm& operator*=(const Rational& c) {
    if (c.is_zero()) {
      table_.clear();
      return *this;
    }
    for (auto& [k, v] : table_) v *= c;
    return *this;
  }

  friend MultilinearForm operator+(MultilinearForm a, const MultilinearForm& b) { return a += b; }
  friend MultilinearForm operator-(MultilinearForm a, const MultilinearForm& b) { return a -= b; }
  friend MultilinearForm operator*(const Rational& c, MultilinearForm f) { return f *= c; }
  friend MultilinearForm operator-(MultilinearForm f) { return f *= Rational(-1); }

  friend bool operator==(const MultilinearForm& a, const MultilinearForm& b) {
    return a.g_ == b.g_ && a.arity_ == b.arity_ && a.variance_ == b.variance_ &&
           a.z2_ == b.z2_ && a.table_ == b.table_;
  }
  friend bool operator!=(const MultilinearForm& a, const MultilinearForm& b) { return !(a == b); }

  std::string str() const {
    std::ostringstream os;
    os << variance_name(variance_) << " arity " << arity_ << " z2 " << z2_ << "\n";
    for (const auto& [k, v] : table_) {
      os << "  (";
      for (std::size_t i = 0; i < k.size(); ++i) os << (i ? "," : "") << k[i];
      os << ") -> " << v.str() << "\n";
    }
    return os.str();
  }

 private:
  void require_same_shape(const MultilinearForm& o, const char* who) const {
    if (g_ != o.g_ || arity_ != o.arity_ || variance_ != o.variance_ || z2_ != o.z2_)
      throw std::invalid_argument(std::string(who) + ": form shapes differ");
  }

  const SuperAlgebra* g_;
  int arity_;
  Variance variance_;
  int z2_;
  std::map<std::vector<int>, Rational> table_;
};

/// Enumerates the canonical keys of the given arity in lexicographic order.
/// z2_filter (-1 = all) keeps only keys of that total parity.
template <class Fn>
void enumerate_form_keys(const SuperAlgebra& g, int arity, Variance v, int z2_filter, Fn&& fn) {
  std::vector<int> key(arity);
  auto rec = [&](auto&& self, int slot, int start, int par) -> void {
    if (slot == arity) {
      if (z2_filter < 0 || par == z2_filter) fn(key);
      return;
    }
    for (int i = start; i < g.dim(); ++i) {
      key[slot] = i;
      bool repeat_ok = v == Variance::plain ||
                       (v == Variance::supersym ? g.parity_bit(i) == 0 : g.parity_bit(i) == 1);
      int next = v == Variance::plain ? 0 : i + (repeat_ok ? 0 : 1);
      self(self, slot + 1, next, par ^ g.parity_bit(i));
    }
  };
  rec(rec, 0, 0, 0);
}

/// Dual basis 1-form: value 1 on basis element i, 0 elsewhere.
inline MultilinearForm dual_form(const SuperAlgebra& g, int i, Variance v) {
  MultilinearForm f(g, 1, v, g.parity_bit(i));
  f.add_term({i}, Rational(1));
  return f;
}

/// Coordinate 1-form: X |-> entry (r,s) of the matrix X.
inline MultilinearForm coordinate_form(const SuperAlgebra& g, int r, int s, Variance v) {
  GradedDim d = g.basis(0).dim();
  int z2 = d.coordinate_parity(r) ^ d.coordinate_parity(s);
  MultilinearForm f(g, 1, v, z2);
  for (int m = 0; m < g.dim(); ++m) {
    const Rational& e = g.basis(m)(r, s);
    if (!e.is_zero()) f.add_term({m}, e);
  }
  return f;
}

/// Builds a form of the stated variance from its values on canonical keys.
template <class Fn>
MultilinearForm form_from_function(const SuperAlgebra& g, int arity, Variance v, int z2, Fn&& fn) {
  MultilinearForm out(g, arity, v, z2);
  enumerate_form_keys(g, arity, v, z2, [&](const std::vector<int>& key) {
    Rational val = fn(key);
    if (!val.is_zero()) out.add_term(key, val);
  });
  return out;
}

/// Expands a form to a plain table over every index tuple (oracle helper;
/// exponential in the arity, keep inputs small).
inline MultilinearForm to_plain(const MultilinearForm& f) {
  MultilinearForm out(f.algebra(), f.arity(), Variance::plain, f.z2_degree());
  enumerate_form_keys(f.algebra(), f.arity(), Variance::plain, f.z2_degree(),
                      [&](const std::vector<int>& key) {
                        Rational v = f.value_at(key);
                        if (!v.is_zero()) out.add_term(key, v);
                      });
  return out;
}

/// Super tensor product on plain tables:
///   (F (X) G)(X_1..X_{p+q}) = (-1)^{g(x_1+..+x_p)} F(X_1..X_p) G(X_{p+1}..).
inline MultilinearForm super_tensor(const MultilinearForm& f, const MultilinearForm& gf) {
  if (f.variance() != Variance::plain || gf.variance() != Variance::plain)
    throw std::domain_error("super_tensor: expects plain tables (use to_plain)");
  if (&f.algebra() != &gf.algebra()) throw std::invalid_argument("super_tensor: algebra mismatch");
  const SuperAlgebra& g = f.algebra();
  MultilinearForm out(g, f.arity() + gf.arity(), Variance::plain,
                      (f.z2_degree() + gf.z2_degree()) & 1);
  for (const auto& [kf, cf] : f.table())
    for (const auto& [kg, cg] : gf.table()) {
      int par_f = 0;
      for (int i : kf) par_f ^= g.parity_bit(i);
      std::vector<int> key = kf;
      key.insert(key.end(), kg.begin(), kg.end());
      Rational c = cf * cg;
      if (gf.z2_degree() && par_f) c = -c;
      out.add_term(std::move(key), c);
    }
  return out;
}

namespace detail {

/// Shared body of the two symmetrization operators: sums sign(sigma) * F over
/// all argument permutations, where slot l of the permuted tuple holds
/// argument sigma(l).
inline MultilinearForm symmetrize_impl(const MultilinearForm& f, Variance target) {
  MultilinearForm plain = f.variance() == Variance::plain ? f : to_plain(f);
  const SuperAlgebra& g = f.algebra();
  MultilinearForm out(g, f.arity(), target, f.z2_degree());
  ParityWord par(f.arity());
  enumerate_form_keys(g, f.arity(), target, f.z2_degree(), [&](const std::vector<int>& key) {
    for (int i = 0; i < f.arity(); ++i) par[i] = g.parity_bit(key[i]);
    Rational acc(0);
    for_each_permutation(f.arity(), [&](const Perm& sigma) {
      Rational v = plain.value_at(act_on_tuple(inverse(sigma), key));
      if (v.is_zero()) return;
      int s = super_sign(sigma, par);
      if (target == Variance::skew) s *= perm_sign(sigma);
      acc += (s > 0) ? v : -v;
    });
    if (!acc.is_zero()) out.add_term(key, acc);
  });
  return out;
}

}  // namespace detail

/// Sum over all permutations with the supersymmetric action; the result is
/// supersymmetric and equals arity! times the input when it already was.
inline MultilinearForm symmetrize(const MultilinearForm& f) {
  return detail::symmetrize_impl(f, Variance::supersym);
}

/// Sum over all permutations with the skew action (extra sign of sigma).
inline MultilinearForm antisymmetrize(const MultilinearForm& f) {
  return detail::symmetrize_impl(f, Variance::skew);
}

namespace detail {

/// Shuffle-sum product.  For F, G already of the target variance,
/// (F*G)(C) = sum over placements S of F's arguments inside C of
///   shuffle_sign * (-1)^{g * parity(C|_S)} * F(C|_S) * G(C|_rest),
/// where the shuffle sign counts cross inversions: odd-odd ones for
/// supersym, all of them (extra sign of the shuffle) for skew on top.
inline MultilinearForm product_impl(const MultilinearForm& f, const MultilinearForm& gf,
                                    Variance target) {
  if (f.variance() != target || gf.variance() != target)
    throw std::domain_error("product: variance mismatch");
  if (&f.algebra() != &gf.algebra()) throw std::invalid_argument("product: algebra mismatch");
  const SuperAlgebra& g = f.algebra();
  const int p = f.arity(), n = f.arity() + gf.arity();
  const int z2 = (f.z2_degree() + gf.z2_degree()) & 1;
  MultilinearForm out(g, n, target, z2);
  if (f.is_zero() || gf.is_zero()) return out;

  std::vector<char> in_s(n);
  std::vector<int> sel(p), rest(n - p);
  enumerate_form_keys(g, n, target, z2, [&](const std::vector<int>& key) {
    Rational acc(0);
    // Walk subsets of positions of size p via the combination vector `pos`.
    std::vector<int> pos(p);
    for (int i = 0; i < p; ++i) pos[i] = i;
    while (true) {
      std::fill(in_s.begin(), in_s.end(), 0);
      for (int i : pos) in_s[i] = 1;
      int si = 0, ri = 0;
      for (int i = 0; i < n; ++i) (in_s[i] ? sel[si++] : rest[ri++]) = key[i];
      Rational fv = f.value_at(sel);
      if (!fv.is_zero()) {
        Rational gv = gf.value_at(rest);
        if (!gv.is_zero()) {
          int sign = 1, par_sel = 0;
          for (int i = 0; i < n; ++i)
            if (in_s[i]) par_sel ^= g.parity_bit(key[i]);
          for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
              if (!in_s[i] && in_s[j]) {
                bool both_odd = g.parity_bit(key[i]) && g.parity_bit(key[j]);
                if (both_odd) sign = -sign;                      // super sign of the shuffle
                if (target == Variance::skew) sign = -sign;      // plus its plain sign
              }
          if (gf.z2_degree() && par_sel) sign = -sign;           // super tensor factor
          acc += (sign > 0) ? fv * gv : -(fv * gv);
        }
      }
      // next combination
      int i = p - 1;
      while (i >= 0 && pos[i] == n - p + i) --i;
      if (i < 0) break;
      ++pos[i];
      for (int j = i + 1; j < p; ++j) pos[j] = pos[j - 1] + 1;
    }
    if (!acc.is_zero()) out.add_term(key, acc);
  });
  return out;
}

}  // namespace detail

/// Product of supersymmetric forms (shuffle-optimized; the 1/(p!q!)
/// normalization of the full symmetrized tensor cancels against the
/// stabilizer, which the oracle tests confirm).
inline MultilinearForm dot(const MultilinearForm& f, const MultilinearForm& g) {
  return detail::product_impl(f, g, Variance::supersym);
}

/// Product of skew forms.
inline MultilinearForm wedge(const MultilinearForm& f, const MultilinearForm& g) {
  return detail::product_impl(f, g, Variance::skew);
}

namespace detail {

inline MultilinearForm plug_first_impl(const SuperMatrix<Rational>& x, const MultilinearForm& f,
                                       Variance need, const char* who) {
  if (f.variance() != need) throw std::domain_error(std::string(who) + ": variance mismatch");
  if (f.arity() == 0) throw std::invalid_argument(std::string(who) + ": arity 0 input");
  const SuperAlgebra& g = f.algebra();
  const int x_par = x.parity_bit();
  VecX<Rational> xi = g.coordinates(x);
  const int z2 = f.z2_degree() ^ x_par;
  MultilinearForm out(g, f.arity() - 1, f.variance(), z2);
  bool flip = x_par && f.z2_degree();  // (-1)^{x f}
  enumerate_form_keys(g, f.arity() - 1, f.variance(), z2, [&](const std::vector<int>& key) {
    Rational acc(0);
    std::vector<int> full(f.arity());
    std::copy(key.begin(), key.end(), full.begin() + 1);
    for (int m = 0; m < g.dim(); ++m) {
      if (xi[m].is_zero()) continue;
      full[0] = m;
      Rational v = f.value_at(full);
      if (!v.is_zero()) acc += xi[m] * v;
    }
    if (flip) acc = -acc;
    if (!acc.is_zero()) out.add_term(key, acc);
  });
  return out;
}

}  // namespace detail

/// Super derivation of the supersymmetric algebra:
///   D_X(F)(X_1..X_{p-1}) = (-1)^{x f} F(X, X_1, .., X_{p-1}).
inline MultilinearForm derivation_D(const SuperMatrix<Rational>& x, const MultilinearForm& f) {
  return detail::plug_first_impl(x, f, Variance::supersym, "derivation_D");
}

/// Super derivation of the skew algebra, same plug-the-first-slot formula.
inline MultilinearForm contraction_iota(const SuperMatrix<Rational>& x, const MultilinearForm& f) {
  return detail::plug_first_impl(x, f, Variance::skew, "contraction_iota");
}

/// Coadjoint action on forms (one formula serves both form algebras):
///   L_X F(X_1..X_n) = -(-1)^{x f} sum_j (-1)^{x(x_1+..+x_{j-1})}
///                     F(X_1, .., [X, X_j], .., X_n).
inline MultilinearForm lie_action(const SuperMatrix<Rational>& x, const MultilinearForm& f) {
  if (f.variance() == Variance::plain) throw std::domain_error("lie_action: plain input");
  const SuperAlgebra& g = f.algebra();
  const int x_par = x.parity_bit();
  VecX<Rational> xi = g.coordinates(x);
  // Columns of ad X in basis coordinates.
  std::vector<VecX<Rational>> ad_col(g.dim());
  for (int j = 0; j < g.dim(); ++j) {
    VecX<Rational> col = VecX<Rational>::Zero(g.dim());
    for (int i = 0; i < g.dim(); ++i)
      if (!xi[i].is_zero()) col += xi[i] * g.bracket_coords(i, j);
    ad_col[j] = std::move(col);
  }
  const int z2 = f.z2_degree() ^ x_par;
  MultilinearForm out(g, f.arity(), f.variance(), z2);
  bool flip = !(x_par && f.z2_degree());  // overall -(-1)^{x f}
  enumerate_form_keys(g, f.arity(), f.variance(), z2, [&](const std::vector<int>& key) {
    Rational acc(0);
    std::vector<int> work = key;
    int presum = 0;
    for (int j = 0; j < f.arity(); ++j) {
      const VecX<Rational>& col = ad_col[key[j]];
      Rational inner(0);
      for (int m = 0; m < g.dim(); ++m) {
        if (col[m].is_zero()) continue;
        work[j] = m;
        Rational v = f.value_at(work);
        if (!v.is_zero()) inner += col[m] * v;
      }
      work[j] = key[j];
      if (x_par && presum) inner = -inner;
      acc += inner;
      presum ^= g.parity_bit(key[j]);
    }
    if (flip) acc = -acc;
    if (!acc.is_zero()) out.add_term(key, acc);
  });
  return out;
}

/// Chevalley-Eilenberg differential on skew forms:
///   dF(X_1..X_{n+1}) = sum_{i<j} (-1)^{i+j} (-1)^{x_i(x_1+..+x_{i-1})}
///     (-1)^{x_j(x_1+..+^x_i+..+x_{j-1})} F([X_i,X_j], X_1, ..^i..^j.., X_{n+1}).
inline MultilinearForm differential_d(const MultilinearForm& f) {
  if (f.variance() != Variance::skew) throw std::domain_error("differential_d: skew input required");
  const SuperAlgebra& g = f.algebra();
  const int n1 = f.arity() + 1;
  MultilinearForm out(g, n1, Variance::skew, f.z2_degree());
  enumerate_form_keys(g, n1, Variance::skew, f.z2_degree(), [&](const std::vector<int>& key) {
    Rational acc(0);
    std::vector<int> rest(f.arity());
    for (int i = 0; i < n1; ++i)
      for (int j = i + 1; j < n1; ++j) {
        int pre_i = 0, pre_j = 0;
        for (int l = 0; l < i; ++l) pre_i ^= g.parity_bit(key[l]);
        for (int l = 0; l < j; ++l)
          if (l != i) pre_j ^= g.parity_bit(key[l]);
        int sign = ((i + j) & 1) ? -1 : 1;
        if (g.parity_bit(key[i]) && pre_i) sign = -sign;
        if (g.parity_bit(key[j]) && pre_j) sign = -sign;
        const VecX<Rational>& bc = g.bracket_coords(key[i], key[j]);
        Rational inner(0);
        for (int m = 0; m < g.dim(); ++m) {
          if (bc[m].is_zero()) continue;
          rest[0] = m;
          for (int l = 0, w = 1; l < n1; ++l)
            if (l != i && l != j) rest[w++] = key[l];
          Rational v = f.value_at(rest);
          if (!v.is_zero()) inner += bc[m] * v;
        }
        acc += (sign > 0) ? inner : -inner;
      }
    if (!acc.is_zero()) out.add_term(key, acc);
  });
  return out;
}

/// The same differential computed from the dual-basis expansion
///   d = 1/2 sum_i phi~_i ^ L_{X_i},  phi~_i = (-1)^{x_i} phi_i,
/// used as an independent cross-check of the pairwise formula.
inline MultilinearForm differential_d_dual_route(const MultilinearForm& f) {
  if (f.variance() != Variance::skew)
    throw std::domain_error("differential_d_dual_route: skew input required");
  const SuperAlgebra& g = f.algebra();
  MultilinearForm acc(g, f.arity() + 1, Variance::skew, f.z2_degree());
  for (int i = 0; i < g.dim(); ++i) {
    MultilinearForm phi = dual_form(g, i, Variance::skew);
    if (g.parity_bit(i)) phi *= Rational(-1);
    acc += wedge(phi, lie_action(g.basis(i), f));
  }
  acc *= Rational(1, 2);
  return acc;
}

/// Multiplies by the integer polynomial degree (here: the arity).
inline MultilinearForm degree_operator_R(const MultilinearForm& f) {
  if (f.variance() != Variance::supersym)
    throw std::domain_error("degree_operator_R: supersymmetric input required");
  MultilinearForm out = f;
  return out *= Rational(f.arity());
}

/// Algebra homomorphism from supersymmetric to skew forms determined by
/// phi |-> d(phi) on dual 1-forms.  The input table is first decomposed in
/// the monomial basis mu_K = phi_{K_1} * .. * phi_{K_k}; on its own canonical
/// tuple mu_K evaluates to (-1)^{C(o,2)} * (product of even multiplicities)!
/// with o the number of odd entries, which fixes the coefficients.
inline MultilinearForm s_map(const MultilinearForm& f) {
  if (f.variance() != Variance::supersym) throw std::domain_error("s_map: supersymmetric input required");
  const SuperAlgebra& g = f.algebra();
  if (f.arity() == 0) {
    // Preserve the declared Z2 degree (an arity-0 form of odd degree is zero).
    MultilinearForm out(g, 0, Variance::skew, f.z2_degree());
    Rational c = f.value_at(std::vector<int>{});
    if (!c.is_zero()) out.add_term({}, c);
    return out;
  }
  std::map<int, MultilinearForm> dphi;
  auto dphi_of = [&](int i) -> const MultilinearForm& {
    auto it = dphi.find(i);
    if (it == dphi.end())
      it = dphi.emplace(i, differential_d(dual_form(g, i, Variance::skew))).first;
    return it->second;
  };
  MultilinearForm out(g, 2 * f.arity(), Variance::skew, f.z2_degree());
  for (const auto& [key, c] : f.table()) {
    long long mult_fact = 1;
    int odd_count = 0;
    for (std::size_t i = 0; i < key.size();) {
      std::size_t j = i;
      while (j < key.size() && key[j] == key[i]) ++j;
      if (g.parity_bit(key[i]))
        ++odd_count;  // odd repeats are impossible in a canonical key
      else
        for (std::size_t m = 2; m <= j - i; ++m) mult_fact *= static_cast<long long>(m);
      i = j;
    }
    Rational norm = c / Rational(mult_fact);
    if ((odd_count * (odd_count - 1) / 2) & 1) norm = -norm;
    MultilinearForm prod = dphi_of(key[0]);
    for (std::size_t i = 1; i < key.size(); ++i) prod = wedge(prod, dphi_of(key[i]));
    out += norm * prod;
  }
  return out;
}

/// Transgression: with {X_i} the even basis, {Y_j} the odd basis and
/// Omega_i, phi_j their dual 1-forms,
///   t(P) = sum_i Omega_i ^ s(D_{X_i} P) - sum_j phi_j ^ s(D_{Y_j} P).
inline MultilinearForm transgress(const MultilinearForm& f) {
  if (f.variance() != Variance::supersym)
    throw std::domain_error("transgress: supersymmetric input required");
  const SuperAlgebra& g = f.algebra();
  if (f.arity() == 0) return MultilinearForm(g, 0, Variance::skew, f.z2_degree());
  MultilinearForm acc(g, 2 * f.arity() - 1, Variance::skew, f.z2_degree());
  for (int i = 0; i < g.dim(); ++i) {
    MultilinearForm piece = wedge(dual_form(g, i, Variance::skew), s_map(derivation_D(g.basis(i), f)));
    if (g.parity_bit(i)) acc -= piece;
    else acc += piece;
  }
  return acc;
}

/// Transgression computed from an alternative homogeneous basis {Z_m} with
/// dual forms rebuilt from the inverse coordinate matrix:
///   t(P) = sum_m (-1)^{z_m} psi_m ^ s(D_{Z_m} P).
/// Equality with transgress() for every choice shows basis independence.
inline MultilinearForm transgress_via_tau(const MultilinearForm& f,
                                          const std::vector<SuperMatrix<Rational>>& basis_choice) {
  if (f.variance() != Variance::supersym)
    throw std::domain_error("transgress_via_tau: supersymmetric input required");
  const SuperAlgebra& g = f.algebra();
  if (static_cast<int>(basis_choice.size()) != g.dim())
    throw std::invalid_argument("transgress_via_tau: basis size mismatch");
  MatX<Rational> c(g.dim(), g.dim());
  for (int m = 0; m < g.dim(); ++m) c.col(m) = g.coordinates(basis_choice[m]);
  Eigen::FullPivLU<MatX<Rational>> lu(c);
  if (!lu.isInvertible()) throw std::invalid_argument("transgress_via_tau: basis does not span");
  MatX<Rational> cinv = lu.inverse();

  if (f.arity() == 0) return MultilinearForm(g, 0, Variance::skew, f.z2_degree());
  MultilinearForm acc(g, 2 * f.arity() - 1, Variance::skew, f.z2_degree());
  for (int m = 0; m < g.dim(); ++m) {
    int zm = basis_choice[m].parity_bit();
    MultilinearForm psi(g, 1, Variance::skew, zm);
    for (int i = 0; i < g.dim(); ++i)
      if (!cinv(m, i).is_zero()) psi.add_term({i}, cinv(m, i));
    MultilinearForm piece = wedge(psi, s_map(derivation_D(basis_choice[m], f)));
    if (zm) acc -= piece;
    else acc += piece;
  }
  return acc;
}

/// True when the coadjoint action of every basis element annihilates f.
inline bool is_invariant(const MultilinearForm& f) {
  for (int i = 0; i < f.algebra().dim(); ++i)
    if (!lie_action(f.algebra().basis(i), f).is_zero()) return false;
  return true;
}

/// Supertrace invariants as forms: values of str(P_k) / str(A_k) on
/// canonical basis tuples.
inline MultilinearForm build_P_form(const SuperAlgebra& g, int k) {
  return form_from_function(g, k, Variance::supersym, 0, [&](const std::vector<int>& key) {
    return invariant_P(ArgTuple::basis_tuple(g, key));
  });
}

inline MultilinearForm build_Lambda_form(const SuperAlgebra& g, int k) {
  return form_from_function(g, k, Variance::skew, 0, [&](const std::vector<int>& key) {
    return invariant_Lambda(ArgTuple::basis_tuple(g, key));
  });
}

}  // namespace superal

#endif  // SUPERAL_FORMS_HPP
