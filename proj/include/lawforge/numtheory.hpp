#ifndef LAWFORGE_NUMTHEORY_HPP_
#define LAWFORGE_NUMTHEORY_HPP_

#include <cstdint>
#include <optional>
#include <set>
#include <vector>

namespace lawforge {

struct PrimePower {
  std::uint64_t p = 0;
  unsigned k = 0;
  std::uint64_t q = 0;  // p^k
  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

// Sieve of Eratosthenes; bound is capped at 10^8.
std::vector<std::uint64_t> primes_upto(std::uint64_t bound);

// All q = p^k <= bound with k >= 1, ascending by q.
std::vector<PrimePower> prime_powers_upto(std::uint64_t bound);

bool is_prime(std::uint64_t n);
std::optional<PrimePower> as_prime_power(std::uint64_t q);

// floor(n^(1/k)), exact.
std::uint64_t integer_root(std::uint64_t n, unsigned k);
std::uint64_t ceil_sqrt(std::uint64_t n);

// Element orders of Sym(k): { lcm(parts) : partitions of k }.
std::set<std::uint64_t> partition_lcm_set(unsigned k);

}  // namespace lawforge

#endif  // LAWFORGE_NUMTHEORY_HPP_
