#include "lawforge/numtheory.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "lawforge/errors.hpp"

namespace lawforge {

std::vector<std::uint64_t> primes_upto(std::uint64_t bound) {
  constexpr std::uint64_t kCap = 100'000'000;
  if (bound > kCap) throw ResourceLimit("primes_upto bound exceeds 10^8");
  std::vector<std::uint64_t> primes;
  if (bound < 2) return primes;
  std::vector<bool> composite(bound + 1, false);
  for (std::uint64_t i = 2; i <= bound; ++i) {
    if (composite[i]) continue;
    primes.push_back(i);
    for (std::uint64_t j = i * i; j <= bound; j += i) composite[j] = true;
  }
  return primes;
}

std::vector<PrimePower> prime_powers_upto(std::uint64_t bound) {
  std::vector<PrimePower> out;
  for (std::uint64_t p : primes_upto(bound)) {
    std::uint64_t q = p;
    for (unsigned k = 1;; ++k) {
      out.push_back({p, k, q});
      if (q > bound / p) break;
      q *= p;
    }
  }
  std::sort(out.begin(), out.end(), [](const PrimePower& x, const PrimePower& y) { return x.q < y.q; });
  return out;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d <= n / d; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

namespace {

// x^k, or nullopt when it exceeds limit.
std::optional<std::uint64_t> bounded_pow(std::uint64_t x, unsigned k, std::uint64_t limit) {
  std::uint64_t r = 1;
  for (unsigned i = 0; i < k; ++i) {
    if (x != 0 && r > limit / x) return std::nullopt;
    r *= x;
  }
  return r <= limit ? std::optional(r) : std::nullopt;
}

}  // namespace

std::uint64_t integer_root(std::uint64_t n, unsigned k) {
  if (k == 0) throw InvalidArgument("integer_root with k = 0");
  if (k == 1 || n < 2) return n;
  std::uint64_t lo = 1;
  std::uint64_t hi = std::uint64_t{1} << (64 / k + 1);
  // invariant: lo^k <= n < hi^k
  while (hi - lo > 1) {
    std::uint64_t mid = lo + (hi - lo) / 2;
    if (bounded_pow(mid, k, n)) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return lo;
}

std::uint64_t ceil_sqrt(std::uint64_t n) {
  std::uint64_t r = integer_root(n, 2);
  return r * r == n ? r : r + 1;
}

std::optional<PrimePower> as_prime_power(std::uint64_t q) {
  if (q < 2) return std::nullopt;
  for (unsigned k = 63; k >= 1; --k) {
    std::uint64_t r = integer_root(q, k);
    if (r < 2) continue;
    auto back = bounded_pow(r, k, q);
    if (back && *back == q && is_prime(r)) return PrimePower{r, k, q};
  }
  return std::nullopt;
}

std::set<std::uint64_t> partition_lcm_set(unsigned k) {
  // table[r][m]: lcms of partitions of r with every part <= m.
  std::vector<std::vector<std::set<std::uint64_t>>> table(k + 1, std::vector<std::set<std::uint64_t>>(k + 1));
  for (unsigned m = 0; m <= k; ++m) table[0][m] = {1};
  for (unsigned r = 1; r <= k; ++r) {
    for (unsigned m = 1; m <= k; ++m) {
      auto& cell = table[r][m];
      cell = table[r][m - 1];
      if (m <= r) {
        for (std::uint64_t x : table[r - m][m]) cell.insert(std::lcm(x, std::uint64_t{m}));
      }
    }
  }
  return table[k][k];
}

}  // namespace lawforge
