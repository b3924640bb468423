#include <doctest.h>

#include <algorithm>
#include <functional>
#include <numeric>

#include "lawforge/errors.hpp"
#include "lawforge/numtheory.hpp"
#include "oracles.hpp"

using namespace lawforge;
using namespace lawforge::testing;

namespace {

bool trial_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

// Factorization oracle: n is a prime power iff it has exactly one prime factor.
bool factor_prime_power(std::uint64_t n) {
  if (n < 2) return false;
  std::uint64_t p = 2;
  while (n % p != 0) ++p;
  while (n % p == 0) n /= p;
  return n == 1;
}

unsigned partition_count(unsigned k) {
  std::function<unsigned(unsigned, unsigned)> rec = [&](unsigned left, unsigned max_part) -> unsigned {
    if (left == 0) return 1;
    unsigned c = 0;
    for (unsigned part = std::min(left, max_part); part >= 1; --part) c += rec(left - part, part);
    return c;
  };
  return rec(k, k);
}

}  // namespace

TEST_CASE("primes") {
  CHECK(primes_upto(10) == std::vector<std::uint64_t>{2, 3, 5, 7});
  CHECK(primes_upto(1).empty());
  CHECK(primes_upto(0).empty());
  const auto ps = primes_upto(10000);
  CHECK(ps.size() == 1229);
  std::uint64_t count = 0;
  for (std::uint64_t n = 0; n <= 10000; ++n) {
    if (trial_prime(n)) ++count;
    CHECK(is_prime(n) == trial_prime(n));
  }
  CHECK(count == ps.size());
  CHECK_THROWS_AS(primes_upto(100000001), ResourceLimit);
}

TEST_CASE("prime powers") {
  std::vector<std::uint64_t> qs;
  for (const auto& pp : prime_powers_upto(9)) qs.push_back(pp.q);
  CHECK(qs == std::vector<std::uint64_t>{2, 3, 4, 5, 7, 8, 9});
  CHECK(prime_powers_upto(1).empty());
  const auto all = prime_powers_upto(1000);
  CHECK(all.size() == 193);
  std::uint64_t oracle = 0;
  for (std::uint64_t n = 1; n <= 1000; ++n) oracle += factor_prime_power(n);
  CHECK(all.size() == oracle);
  for (std::size_t i = 0; i < all.size(); ++i) {
    std::uint64_t v = 1;
    for (unsigned j = 0; j < all[i].k; ++j) v *= all[i].p;
    CHECK(v == all[i].q);
    CHECK(trial_prime(all[i].p));
    if (i) CHECK(all[i - 1].q < all[i].q);
  }
  for (std::uint64_t p : primes_upto(1000)) {
    CHECK(std::any_of(all.begin(), all.end(), [&](const PrimePower& pp) { return pp.q == p; }));
  }
  for (std::uint64_t n = 0; n <= 5000; ++n) {
    const auto pp = as_prime_power(n);
    CHECK(pp.has_value() == factor_prime_power(n));
  }
  CHECK(as_prime_power(std::uint64_t{1} << 62)->k == 62);
  CHECK(as_prime_power(3486784401ull)->p == 3);  // 3^20
  CHECK_FALSE(as_prime_power(6).has_value());
}

TEST_CASE("integer roots") {
  for (std::uint64_t n = 0; n < 3000; ++n) {
    for (unsigned k = 1; k <= 5; ++k) {
      const std::uint64_t r = integer_root(n, k);
      auto pw = [&](std::uint64_t x) {
        std::uint64_t v = 1;
        for (unsigned i = 0; i < k; ++i) v *= x;
        return v;
      };
      CHECK(pw(r) <= n);
      CHECK(pw(r + 1) > n);
    }
    const std::uint64_t s = ceil_sqrt(n);
    CHECK(s * s >= n);
    if (s > 0) CHECK((s - 1) * (s - 1) < n);
  }
  CHECK(integer_root(std::numeric_limits<std::uint64_t>::max(), 2) == 4294967295ull);
}

TEST_CASE("partition lcm sets") {
  CHECK(partition_lcm_set(0) == std::set<std::uint64_t>{1});
  CHECK(partition_lcm_set(1) == std::set<std::uint64_t>{1});
  CHECK(partition_lcm_set(5) == std::set<std::uint64_t>{1, 2, 3, 4, 5, 6});
  CHECK(partition_count(5) == 7);
  CHECK(partition_count(10) == 42);
  CHECK(*partition_lcm_set(10).rbegin() == 30);
  for (unsigned k = 0; k <= 20; ++k) CHECK(partition_lcm_set(k) == brute_force_lcms(k));
}
