#ifndef SUPERAL_SCALAR_HPP
#define SUPERAL_SCALAR_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <Eigen/Core>

#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>

namespace superal {

using BigInt = boost::multiprecision::cpp_int;

/// Arbitrary-precision rational number, always kept in lowest terms with a
/// positive denominator.  This is the exact scalar used throughout the
/// library; no floating point enters any computation.
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(long long value) : num_(value), den_(1) {}  // NOLINT: implicit by design
  explicit Rational(BigInt value) : num_(std::move(value)), den_(1) {}
  Rational(BigInt numerator, BigInt denominator)
      : num_(std::move(numerator)), den_(std::move(denominator)) {
    normalize();
  }

  const BigInt& numerator() const { return num_; }
  const BigInt& denominator() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_integer() const { return den_ == 1; }

  Rational operator-() const { return Rational(raw{}, -num_, den_); }

  Rational& operator+=(const Rational& o) {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ *= o.den_;
    normalize();
    return *this;
  }
  Rational& operator-=(const Rational& o) { return *this += -o; }
  Rational& operator*=(const Rational& o) {
    num_ *= o.num_;
    den_ *= o.den_;
    normalize();
    return *this;
  }
  Rational& operator/=(const Rational& o) {
    if (o.num_.is_zero()) throw std::domain_error("Rational: division by zero");
    num_ *= o.den_;
    den_ *= o.num_;
    normalize();
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b) {
    return a.num_ * b.den_ < b.num_ * a.den_;
  }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
  friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

  friend Rational abs(const Rational& a) {
    return a.num_ < 0 ? -a : a;
  }

  /// Renders "n" for integers and "n/d" otherwise.
  std::string str() const {
    std::string s = num_.str();
    if (den_ != 1) s += "/" + den_.str();
    return s;
  }

  /// Parses the format produced by str(): optional sign, digits, optional "/digits".
  static Rational parse(const std::string& text) {
    auto slash = text.find('/');
    if (slash == std::string::npos) return Rational(BigInt(text));
    return Rational(BigInt(text.substr(0, slash)), BigInt(text.substr(slash + 1)));
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& a) {
    return os << a.str();
  }

 private:
  struct raw {};  // tag: components already normalized
  Rational(raw, BigInt n, BigInt d) : num_(std::move(n)), den_(std::move(d)) {}

  void normalize() {
    if (den_.is_zero()) throw std::domain_error("Rational: zero denominator");
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    BigInt g = boost::multiprecision::gcd(num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
  }

  BigInt num_;
  BigInt den_;
};

namespace detail {

inline std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

inline std::uint64_t powmod_u64(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  std::uint64_t acc = 1 % m;
  base %= m;
  while (exp != 0) {
    if (exp & 1u) acc = mulmod_u64(acc, base, m);
    base = mulmod_u64(base, base, m);
    exp >>= 1;
  }
  return acc;
}

}  // namespace detail

/// Deterministic Miller-Rabin primality test, exact for all 64-bit inputs
/// (the fixed witness set below covers the full uint64 range).
inline bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  int r = 0;
  while ((d & 1u) == 0) {
    d >>= 1;
    ++r;
  }
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    std::uint64_t x = detail::powmod_u64(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (int i = 1; i < r; ++i) {
      x = detail::mulmod_u64(x, x, n);
      if (x == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

/// Element of the prime field Z/p for a runtime modulus p.
///
/// A default-constructed or integer-constructed value carries modulus 0 and
/// acts as an integer literal: it adopts the modulus of the first genuine
/// field element it meets.  (Eigen materializes constants such as Scalar(0)
/// and Scalar(1) with no way to thread a modulus through; the literal state
/// absorbs those.)  Mixing two distinct nonzero moduli throws.
class Fp {
 public:
  Fp() : v_(0), p_(0) {}
  Fp(long long value) : v_(static_cast<std::uint64_t>(value)), p_(0) {}  // NOLINT
  Fp(std::uint64_t value, std::uint64_t modulus) : v_(value % modulus), p_(modulus) {
    if (modulus < 2) throw std::invalid_argument("Fp: modulus must be >= 2");
  }

  std::uint64_t value() const { return v_; }
  std::uint64_t modulus() const { return p_; }
  bool is_zero() const { return v_ == 0; }

  friend Fp operator+(Fp a, Fp b) {
    join(a, b);
    if (a.p_ == 0) return Fp::literal(static_cast<std::int64_t>(a.v_) + static_cast<std::int64_t>(b.v_));
    std::uint64_t s = a.v_ + b.v_;
    if (s >= a.p_ || s < a.v_) s -= a.p_;
    return Fp::raw(s, a.p_);
  }
  friend Fp operator-(Fp a, Fp b) {
    join(a, b);
    if (a.p_ == 0) return Fp::literal(static_cast<std::int64_t>(a.v_) - static_cast<std::int64_t>(b.v_));
    return Fp::raw(a.v_ >= b.v_ ? a.v_ - b.v_ : a.v_ + (a.p_ - b.v_), a.p_);
  }
  friend Fp operator*(Fp a, Fp b) {
    join(a, b);
    if (a.p_ == 0) return Fp::literal(static_cast<std::int64_t>(a.v_) * static_cast<std::int64_t>(b.v_));
    return Fp::raw(detail::mulmod_u64(a.v_, b.v_, a.p_), a.p_);
  }
  friend Fp operator/(Fp a, Fp b) { return a * b.inverse(); }
  Fp operator-() const {
    if (p_ == 0) return Fp::literal(-static_cast<std::int64_t>(v_));
    return Fp::raw(v_ == 0 ? 0 : p_ - v_, p_);
  }
  Fp& operator+=(const Fp& o) { return *this = *this + o; }
  Fp& operator-=(const Fp& o) { return *this = *this - o; }
  Fp& operator*=(const Fp& o) { return *this = *this * o; }
  Fp& operator/=(const Fp& o) { return *this = *this / o; }

  friend bool operator==(Fp a, Fp b) {
    join(a, b);
    return a.v_ == b.v_;
  }
  friend bool operator!=(const Fp& a, const Fp& b) { return !(a == b); }

  // Ordering by residue value.  Not algebraically meaningful; it exists so
  // that exact LU pivoting (which only needs "zero < any nonzero") works.
  friend bool operator<(Fp a, Fp b) {
    join(a, b);
    return a.v_ < b.v_;
  }
  friend bool operator>(const Fp& a, const Fp& b) { return b < a; }
  friend bool operator<=(const Fp& a, const Fp& b) { return !(b < a); }
  friend bool operator>=(const Fp& a, const Fp& b) { return !(a < b); }
  friend Fp abs(const Fp& a) { return a; }

  Fp inverse() const {
    if (p_ == 0) throw std::domain_error("Fp: cannot invert a modulus-free literal");
    if (v_ == 0) throw std::domain_error("Fp: division by zero");
    // Extended Euclid on (v, p); p prime so gcd is 1.
    std::int64_t t = 0, new_t = 1;
    std::uint64_t r = p_, new_r = v_;
    while (new_r != 0) {
      std::uint64_t q = r / new_r;
      std::int64_t tmp_t = t - static_cast<std::int64_t>(q) * new_t;
      t = new_t;
      new_t = tmp_t;
      std::uint64_t tmp_r = r - q * new_r;
      r = new_r;
      new_r = tmp_r;
    }
    std::uint64_t inv = t < 0 ? static_cast<std::uint64_t>(t + static_cast<std::int64_t>(p_)) : static_cast<std::uint64_t>(t);
    return Fp::raw(inv, p_);
  }

  friend std::ostream& operator<<(std::ostream& os, const Fp& a) {
    return os << a.v_;
  }

 private:
  static Fp raw(std::uint64_t v, std::uint64_t p) {
    Fp f;
    f.v_ = v;
    f.p_ = p;
    return f;
  }
  static Fp literal(std::int64_t v) {
    Fp f;
    f.v_ = static_cast<std::uint64_t>(v);
    f.p_ = 0;
    return f;
  }
  /// Promotes literals to the common modulus; rejects genuinely mixed moduli.
  static void join(Fp& a, Fp& b) {
    if (a.p_ == b.p_) return;
    if (a.p_ == 0) {
      a = from_signed(static_cast<std::int64_t>(a.v_), b.p_);
    } else if (b.p_ == 0) {
      b = from_signed(static_cast<std::int64_t>(b.v_), a.p_);
    } else {
      throw std::invalid_argument("Fp: mixed moduli in arithmetic");
    }
  }
  static Fp from_signed(std::int64_t v, std::uint64_t p) {
    std::int64_t m = v % static_cast<std::int64_t>(p);
    if (m < 0) m += static_cast<std::int64_t>(p);
    return Fp::raw(static_cast<std::uint64_t>(m), p);
  }

  std::uint64_t v_;
  std::uint64_t p_;
};

/// Reduces an exact rational mod p; throws if the denominator vanishes mod p.
inline Fp reduce_mod(const Rational& a, std::uint64_t p) {
  BigInt n = a.numerator() % p;
  if (n < 0) n += p;
  BigInt d = a.denominator() % p;
  if (d.is_zero()) throw std::domain_error("reduce_mod: denominator divisible by modulus");
  Fp num(static_cast<std::uint64_t>(n), p);
  Fp den(static_cast<std::uint64_t>(d), p);
  return num / den;
}

}  // namespace superal

namespace Eigen {

template <>
struct NumTraits<superal::Rational> {
  using Self = superal::Rational;
  using Real = Self;
  using NonInteger = Self;
  using Nested = Self;
  using Literal = long long;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 8,
    AddCost = 40,
    MulCost = 40
  };
  static Self epsilon() { return Self(0); }          // exact: no pivot threshold
  static Self dummy_precision() { return Self(0); }  // exact comparisons
  static int digits10() { return 0; }
};

template <>
struct NumTraits<superal::Fp> {
  using Self = superal::Fp;
  using Real = Self;
  using NonInteger = Self;
  using Nested = Self;
  using Literal = long long;
  enum {
    IsComplex = 0,
    IsInteger = 0,  // Z/p is a field; LU solves must be allowed
    IsSigned = 0,
    RequireInitialization = 1,
    ReadCost = 2,
    AddCost = 4,
    MulCost = 8
  };
  static Self epsilon() { return Self(0); }
  static Self dummy_precision() { return Self(0); }
  static int digits10() { return 0; }
};

}  // namespace Eigen

#endif  // SUPERAL_SCALAR_HPP
