#ifndef SUPERAL_SYMPOLY_HPP
#define SUPERAL_SYMPOLY_HPP

#include "superal/osp.hpp"
#include "superal/report.hpp"
#include "superal/rng.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace superal {

/// Sparse polynomial in a fixed number of variables with exact rational
/// coefficients, keyed by exponent vectors.  Used both for polynomials in
/// the squared Cartan coordinates y_i and for expressions in the power sums.
class SymPoly {
 public:
  explicit SymPoly(int nvars) : nvars_(nvars) {
    if (nvars < 1) throw std::invalid_argument("SymPoly: need at least one variable");
  }

  static SymPoly constant(int nvars, const Rational& c) {
    SymPoly p(nvars);
    p.add_term(std::vector<int>(nvars, 0), c);
    return p;
  }

  /// The i-th variable (0-based) as a polynomial.
  static SymPoly variable(int nvars, int i) {
    SymPoly p(nvars);
    std::vector<int> e(nvars, 0);
    e.at(i) = 1;
    p.add_term(e, Rational(1));
    return p;
  }

  int nvars() const { return nvars_; }
  const std::map<std::vector<int>, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(std::vector<int> exps, const Rational& c) {
    if (static_cast<int>(exps.size()) != nvars_)
      throw std::invalid_argument("SymPoly: exponent vector length mismatch");
    for (int e : exps)
      if (e < 0) throw std::invalid_argument("SymPoly: negative exponent");
    if (c.is_zero()) return;
    auto it = terms_.emplace(std::move(exps), Rational(0)).first;
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }

  SymPoly& operator+=(const SymPoly& o) {
    require_same(o);
    for (const auto& [e, c] : o.terms_) {
      Rational& slot = terms_[e];
      slot += c;
      if (slot.is_zero()) terms_.erase(e);
    }
    return *this;
  }
  SymPoly& operator-=(const SymPoly& o) {
    require_same(o);
    for (const auto& [e, c] : o.terms_) {
      Rational& slot = terms_[e];
      slot -= c;
      if (slot.is_zero()) terms_.erase(e);
    }
    return *this;
  }
  SymPoly& operator*=(const Rational& c) {
    if (c.is_zero()) terms_.clear();
    else
      for (auto& [e, v] : terms_) v *= c;
    return *this;
  }

  friend SymPoly operator+(SymPoly a, const SymPoly& b) { return a += b; }
  friend SymPoly operator-(SymPoly a, const SymPoly& b) { return a -= b; }
  friend SymPoly operator*(const Rational& c, SymPoly p) { return p *= c; }
  friend SymPoly operator*(const SymPoly& a, const SymPoly& b) {
    a.require_same(b);
    SymPoly out(a.nvars_);
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) {
        std::vector<int> e(a.nvars_);
        for (int i = 0; i < a.nvars_; ++i) e[i] = ea[i] + eb[i];
        out.add_term(std::move(e), ca * cb);
      }
    return out;
  }
  friend bool operator==(const SymPoly& a, const SymPoly& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const SymPoly& a, const SymPoly& b) { return !(a == b); }

  Rational eval(const std::vector<Rational>& x) const {
    if (static_cast<int>(x.size()) != nvars_)
      throw std::invalid_argument("SymPoly::eval: point dimension mismatch");
    Rational acc(0);
    for (const auto& [e, c] : terms_) {
      Rational term = c;
      for (int i = 0; i < nvars_; ++i)
        for (int rep = 0; rep < e[i]; ++rep) term *= x[i];
      acc += term;
    }
    return acc;
  }

  /// Smallest total degree over all monomials; INT_MAX for the zero polynomial.
  int min_total_degree() const {
    int best = std::numeric_limits<int>::max();
    for (const auto& [e, c] : terms_) {
      int d = 0;
      for (int v : e) d += v;
      best = std::min(best, d);
    }
    return best;
  }

  /// Invariance under all adjacent variable swaps (hence under all of S_n).
  bool is_symmetric() const {
    for (int i = 0; i + 1 < nvars_; ++i) {
      for (const auto& [e, c] : terms_) {
        std::vector<int> swapped = e;
        std::swap(swapped[i], swapped[i + 1]);
        auto it = terms_.find(swapped);
        if (it == terms_.end() || it->second != c) return false;
      }
    }
    return true;
  }

  /// Deterministic text rendering, e.g. "3/2*p1*p2 - 1/2*p1^3".
  std::string render(const std::string& var) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
      Rational a = c;
      if (first) {
        if (a < Rational(0)) {
          os << "-";
          a = -a;
        }
      } else {
        os << (a < Rational(0) ? " - " : " + ");
        if (a < Rational(0)) a = -a;
      }
      first = false;
      bool printed = false;
      if (a != Rational(1)) {
        os << a.str();
        printed = true;
      }
      for (int i = 0; i < nvars_; ++i) {
        if (e[i] == 0) continue;
        if (printed) os << "*";
        os << var << (i + 1);
        if (e[i] > 1) os << "^" << e[i];
        printed = true;
      }
      if (!printed) os << "1";
    }
    return os.str();
  }

 private:
  void require_same(const SymPoly& o) const {
    if (nvars_ != o.nvars_) throw std::invalid_argument("SymPoly: variable count mismatch");
  }

  int nvars_;
  std::map<std::vector<int>, Rational> terms_;
};

/// Power sum y_1^k + ... + y_n^k.
inline SymPoly power_sum(int n, int k) {
  SymPoly p(n);
  for (int i = 0; i < n; ++i) {
    std::vector<int> e(n, 0);
    e[i] = k;
    p.add_term(std::move(e), Rational(1));
  }
  return p;
}

/// The polynomial str(H(a)^k) on the diagonal family H(a) of osp(1,2n),
/// written in the squared coordinates y_i = a_i^2.  The diagonal of H(a)^k
/// is (0, a_1^k, (-a_1)^k, ...), so for even k the supertrace is
/// -2(a_1^k + ... + a_n^k); odd powers are rejected since they vanish.
inline SymPoly restrict_to_cartan(int k, int n) {
  if (n < 1) throw std::invalid_argument("restrict_to_cartan: n >= 1 required");
  if (k <= 0 || k % 2 != 0)
    throw std::invalid_argument("restrict_to_cartan: k must be a positive even integer");
  SymPoly p = power_sum(n, k / 2);
  p *= Rational(-2);
  return p;
}

namespace detail {

/// Elementary symmetric polynomials rewritten in the power sums:
///   i * e_i = sum_{j=1..i} (-1)^{j-1} e_{i-j} p_j.
/// Variables of the returned polynomials are p_1..p_n.
inline std::vector<SymPoly> elementary_in_power_sums(int n) {
  std::vector<SymPoly> e;
  e.push_back(SymPoly::constant(n, Rational(1)));  // e_0
  for (int i = 1; i <= n; ++i) {
    SymPoly acc(n);
    for (int j = 1; j <= i; ++j) {
      SymPoly term = e[i - j] * SymPoly::variable(n, j - 1);
      if (j % 2 == 0) term *= Rational(-1);
      acc += term;
    }
    acc *= Rational(1) / Rational(i);
    e.push_back(acc);
  }
  return e;
}

}  // namespace detail

/// Expresses the power sum p_{n+1} of n variables through p_1..p_n:
///   p_{n+1} = e_1 p_n - e_2 p_{n-1} + ... +- e_n p_1,
/// with every e_i itself expanded in the p_j.  Each e_i is constant-free, so
/// every monomial of the result has total p-degree >= 2: the (n+1)-st power
/// sum lies in the square of the augmentation ideal of the invariant ring.
inline SymPoly newton_reduction(int n) {
  if (n < 1) throw std::invalid_argument("newton_reduction: n >= 1 required");
  std::vector<SymPoly> e = detail::elementary_in_power_sums(n);
  SymPoly acc(n);
  for (int i = 1; i <= n; ++i) {
    SymPoly term = e[i] * SymPoly::variable(n, n - i);  // e_i * p_{n+1-i}
    if (i % 2 == 0) term *= Rational(-1);
    acc += term;
  }
  return acc;
}

/// Checks the reduction of p_{n+1} both syntactically (all monomials of
/// p-degree >= 2) and numerically: at random diagonal points, the power sums
/// are read off the actual matrices as p_j = -str(H(a)^{2j})/2 and the
/// (n+1)-st must match the certified expression in the lower ones.
inline VerificationReport verify_squared_ideal(int n, int trials, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("verify_squared_ideal: n >= 1 required");
  VerificationReport rep;
  rep.claim = "power_sum_squared_ideal";
  rep.parameters["n"] = std::to_string(n);
  rep.parameters["trials"] = std::to_string(trials);
  rep.seed = seed;

  SymPoly certificate = newton_reduction(n);
  rep.parameters["certificate"] = "p" + std::to_string(n + 1) + " = " + certificate.render("p");
  if (certificate.min_total_degree() < 2) {
    rep.record_failure({{"reason", "certificate contains a monomial of degree < 2"}});
    return rep;
  }

  Rng rng(seed);
  for (int t = 0; t < trials; ++t) {
    std::vector<Rational> alpha;
    for (int i = 0; i < n; ++i) alpha.push_back(rng.next_rational(6, 4));
    SuperMatrix<Rational> h = cartan_element(alpha);

    std::vector<Rational> y;
    for (const Rational& a : alpha) y.push_back(a * a);
    std::vector<Rational> p;  // p_j = -str(H^{2j})/2, matrix side
    SuperMatrix<Rational> pw = h;
    for (int j = 1; j <= n + 1; ++j) {
      pw = pw * h;  // pw = H^{2j} after this step
      Rational s = supertrace(pw);
      // Cross-check the closed form of the restriction at this point.
      if (s != restrict_to_cartan(2 * j, n).eval(y)) {
        rep.record_failure({{"trial", std::to_string(t)},
                            {"reason", "restriction closed form mismatch"},
                            {"power", std::to_string(2 * j)}});
        return rep;
      }
      p.push_back(s / Rational(-2));
      pw = pw * h;  // advance to H^{2j+1} for the next doubling
    }
    ++rep.tuples_checked;
    std::vector<Rational> lower(p.begin(), p.begin() + n);
    if (p[n] != certificate.eval(lower)) {
      nlohmann::json pt = nlohmann::json::array();
      for (const Rational& a : alpha) pt.push_back(a.str());
      rep.record_failure({{"trial", std::to_string(t)}, {"alpha", pt}});
    }
  }
  return rep;
}

}  // namespace superal

#endif  // SUPERAL_SYMPOLY_HPP
