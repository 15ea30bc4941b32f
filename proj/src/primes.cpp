#include "wcount/primes.hpp"

#include "wcount/errors.hpp"

#include <string>

namespace wcount {

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint64_t d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

std::optional<PrimePower> prime_power_decomposition(std::uint64_t n) {
    if (n < 2) return std::nullopt;
    std::uint64_t p = 0;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            p = d;
            break;
        }
    }
    if (p == 0) return PrimePower{n, 1};
    unsigned e = 0;
    while (n % p == 0) {
        n /= p;
        ++e;
    }
    if (n != 1) return std::nullopt;
    return PrimePower{p, e};
}

std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d != 0) continue;
        out.push_back(d);
        while (n % d == 0) n /= d;
    }
    if (n > 1) out.push_back(n);
    return out;
}

std::uint64_t pp(std::uint64_t t) {
    std::uint64_t x = t < 2 ? 2 : t;
    while (!is_prime_power(x)) ++x;
    return x;
}

PrimePowerSieve::PrimePowerSieve(std::uint32_t limit) : limit_(limit) {
    if (limit < 1) throw OutOfRange("PrimePowerSieve: limit must be >= 1");
    // Bertrand: a prime lies in (limit, 2*limit], so the tail never runs past 2*limit.
    const std::uint64_t size = 2ull * limit + 1;
    std::vector<std::uint32_t> spf(size, 0);
    for (std::uint64_t i = 2; i < size; ++i) {
        if (spf[i] != 0) continue;
        for (std::uint64_t j = i; j < size; j += i)
            if (spf[j] == 0) spf[j] = static_cast<std::uint32_t>(i);
    }
    prime_power_.assign(size, false);
    for (std::uint64_t i = 2; i < size; ++i) {
        std::uint64_t m = i;
        while (m % spf[i] == 0) m /= spf[i];
        prime_power_[i] = (m == 1);
    }
    next_.assign(size, 0);
    std::uint64_t nxt = 0;
    for (std::uint64_t i = size; i-- > 2;) {
        if (prime_power_[i]) nxt = i;
        next_[i] = nxt;
    }
    next_[1] = next_[2];
    next_[0] = next_[2];
}

bool PrimePowerSieve::is_prime_power(std::uint32_t n) const {
    if (n > limit_) throw OutOfRange("PrimePowerSieve: " + std::to_string(n) + " beyond sieve limit");
    return prime_power_[n];
}

std::uint64_t PrimePowerSieve::pp(std::uint32_t t) const {
    if (t < 1 || t > limit_) throw OutOfRange("PrimePowerSieve: argument outside [1, limit]");
    return next_[t];
}

}  // namespace wcount
