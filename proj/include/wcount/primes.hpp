#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace wcount {

/// q = p^e with p prime.
struct PrimePower {
    std::uint64_t prime;
    unsigned exponent;
};

bool is_prime(std::uint64_t n);

/// Decomposes n as p^e by trial division; nullopt when n is 1 or has two distinct prime factors.
std::optional<PrimePower> prime_power_decomposition(std::uint64_t n);

inline bool is_prime_power(std::uint64_t n) { return prime_power_decomposition(n).has_value(); }

/// Distinct prime divisors of n in increasing order (trial division).
std::vector<std::uint64_t> prime_divisors(std::uint64_t n);

/// Smallest prime power >= max(t, 2).
std::uint64_t pp(std::uint64_t t);

/// Precomputed pp(t) for every t in [1, limit], built from a smallest-prime-factor sieve.
class PrimePowerSieve {
  public:
    explicit PrimePowerSieve(std::uint32_t limit);

    std::uint32_t limit() const { return limit_; }
    bool is_prime_power(std::uint32_t n) const;
    /// Requires 1 <= t <= limit.
    std::uint64_t pp(std::uint32_t t) const;

  private:
    std::uint32_t limit_;
    std::vector<bool> prime_power_;
    std::vector<std::uint64_t> next_;
};

}  // namespace wcount
