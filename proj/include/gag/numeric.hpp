#ifndef GAG_NUMERIC_HPP
#define GAG_NUMERIC_HPP

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace gag {

inline bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

/// Distinct prime factors of n in increasing order.
inline std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d != 0) continue;
        out.push_back(d);
        while (n % d == 0) n /= d;
    }
    if (n > 1) out.push_back(n);
    return out;
}

inline std::vector<std::uint64_t> divisors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 1; d <= n; ++d)
        if (n % d == 0) out.push_back(d);
    return out;
}

inline int mobius(std::uint64_t n) {
    int sign = 1;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d != 0) continue;
        n /= d;
        if (n % d == 0) return 0;
        sign = -sign;
    }
    if (n > 1) sign = -sign;
    return sign;
}

/// base^exp, throwing on 64-bit overflow.
inline std::uint64_t checked_pow(std::uint64_t base, unsigned exp) {
    std::uint64_t r = 1;
    for (unsigned i = 0; i < exp; ++i) {
        if (base != 0 && r > UINT64_MAX / base) throw std::overflow_error("checked_pow: overflow");
        r *= base;
    }
    return r;
}

/// Number of monic irreducible polynomials of degree d over a field with q elements.
inline std::uint64_t count_irreducible(std::uint64_t q, unsigned d) {
    std::int64_t acc = 0;
    for (auto c : divisors(d)) acc += mobius(c) * static_cast<std::int64_t>(checked_pow(q, d / static_cast<unsigned>(c)));
    return static_cast<std::uint64_t>(acc) / d;
}

}  // namespace gag

#endif  // GAG_NUMERIC_HPP
