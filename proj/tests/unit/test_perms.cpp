#include "superal/perms.hpp"
#include "superal/rng.hpp"

#include <doctest.h>

#include <algorithm>

using namespace superal;

namespace {

Perm random_perm(Rng& rng, int k) {
  Perm p = identity_perm(k);
  for (int i = k - 1; i > 0; --i) std::swap(p[i], p[rng.next_below(i + 1)]);
  return p;
}

}  // namespace

TEST_CASE("super sign basics") {
  CHECK(super_sign(identity_perm(4), {1, 1, 1, 1}) == 1);
  CHECK(super_sign({1, 0}, {1, 1}) == -1);  // one odd-odd inversion
  CHECK(super_sign({1, 0}, {0, 1}) == 1);
  CHECK(super_sign({1, 0}, {1, 0}) == 1);
  CHECK(perm_sign({1, 0}) == -1);
  CHECK(perm_sign({2, 0, 1}) == 1);
  CHECK_THROWS_AS(super_sign({0, 1}, {0}), std::invalid_argument);
}

TEST_CASE("super sign equals full signature on all-odd words") {
  Rng rng(41);
  for (int t = 0; t < 100; ++t) {
    Perm s = random_perm(rng, 6);
    CHECK(super_sign(s, ParityWord(6, 1)) == perm_sign(s));
    CHECK(super_sign(s, ParityWord(6, 0)) == 1);
  }
}

TEST_CASE("multiplier law for the super sign") {
  Rng rng(43);
  for (int t = 0; t < 300; ++t) {
    int k = static_cast<int>(rng.next_int(2, 6));
    Perm s = random_perm(rng, k);
    Perm s2 = random_perm(rng, k);
    ParityWord par(k);
    for (int i = 0; i < k; ++i) par[i] = rng.next_bool() ? 1 : 0;
    // eps(s s', X) = eps(s, X) * eps(s', s^{-1}.X)
    ParityWord pulled = act_on_tuple(inverse(s), par);
    CHECK(super_sign(compose(s, s2), par) == super_sign(s, par) * super_sign(s2, pulled));
  }
}

TEST_CASE("tuple action composes correctly") {
  Rng rng(47);
  for (int t = 0; t < 100; ++t) {
    int k = static_cast<int>(rng.next_int(2, 6));
    Perm s = random_perm(rng, k);
    Perm s2 = random_perm(rng, k);
    std::vector<int> xs(k);
    for (int i = 0; i < k; ++i) xs[i] = static_cast<int>(rng.next_int(0, 99));
    CHECK(act_on_tuple(compose(s, s2), xs) == act_on_tuple(s, act_on_tuple(s2, xs)));
    CHECK(act_on_tuple(inverse(s), act_on_tuple(s, xs)) == xs);
  }
}

TEST_CASE("canonical tuple counts") {
  CHECK(canonical_tuple_count(3, 2, 6) == 44);    // dim osp(1,2) split 3|2, length 6
  CHECK(canonical_tuple_count(10, 4, 10) == 66304);  // dim osp(1,4) split 10|4, length 10
  CHECK(canonical_tuple_count(1, 0, 2) == 0);     // cannot pick two distinct evens from one

  // Per-k0 breakdown for the 44: C(3,k0)*C(6-k0+1,1) = 7, 18, 15, 4.
  std::uint64_t by_k0[4] = {7, 18, 15, 4};
  std::uint64_t total = 0;
  for (std::uint64_t v : by_k0) total += v;
  CHECK(total == 44);
}

TEST_CASE("enumeration is lexicographic, canonical, and complete") {
  int d0 = 3, d1 = 2, k = 6;
  std::vector<std::vector<int>> seen;
  enumerate_canonical_tuples(d0, d1, k, [&](const std::vector<int>& t) { seen.push_back(t); });
  CHECK(seen.size() == canonical_tuple_count(d0, d1, k));
  CHECK(std::is_sorted(seen.begin(), seen.end()));
  CHECK(std::adjacent_find(seen.begin(), seen.end()) == seen.end());
  for (const auto& t : seen) {
    for (std::size_t i = 1; i < t.size(); ++i) {
      CHECK(t[i - 1] <= t[i]);
      if (t[i - 1] < d0) CHECK(t[i - 1] < t[i]);  // even indices strictly increase
      if (t[i] < d0) CHECK(t[i - 1] < d0);        // even block first
    }
  }

  std::uint64_t count10 = 0;
  enumerate_canonical_tuples(10, 4, 4, [&](const std::vector<int>&) { ++count10; });
  CHECK(count10 == canonical_tuple_count(10, 4, 4));
}
