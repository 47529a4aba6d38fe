#ifndef SUPERAL_RNG_HPP
#define SUPERAL_RNG_HPP

#include "superal/scalar.hpp"

#include <cstdint>

namespace superal {

/// SplitMix64 generator.  Chosen over std::mt19937 + distributions because
/// its output stream is fully pinned by this header: reports built from a
/// seed must stay byte-identical across platforms and standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  /// Uniform value in [0, bound) by rejection; bound must be nonzero.
  std::uint64_t next_below(std::uint64_t bound) {
    const std::uint64_t limit = bound * (UINT64_MAX / bound);
    std::uint64_t x;
    do {
      x = next_u64();
    } while (x >= limit);
    return x % bound;
  }

  /// Uniform integer in the inclusive range [lo, hi].
  std::int64_t next_int(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(next_below(static_cast<std::uint64_t>(hi - lo + 1)));
  }

  bool next_bool() { return (next_u64() & 1u) != 0; }

  /// Small exact rational with numerator in [-bound, bound] and denominator in [1, den_bound].
  Rational next_rational(std::int64_t bound, std::int64_t den_bound = 1) {
    BigInt n(next_int(-bound, bound));
    BigInt d(next_int(1, den_bound));
    return Rational(std::move(n), std::move(d));
  }

 private:
  std::uint64_t state_;
};

}  // namespace superal

#endif  // SUPERAL_RNG_HPP
