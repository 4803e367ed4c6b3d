#pragma once

#include <optional>
#include <stdexcept>

namespace eurhythm {

// Greatest common divisor by the division recursion. gcd(0, n) = n.
constexpr long long gcd(long long a, long long b) {
    if (a < 0 || b < 0) throw std::invalid_argument("gcd: negative input");
    return a == 0 ? b : gcd(b % a, a);
}

// Multiplicative inverse of x modulo m, in [1, m-1]. Empty when
// gcd(x, m) != 1; that is a classification result, not an error.
inline std::optional<int> mod_inverse(int x, int m) {
    if (m < 2) throw std::invalid_argument("mod_inverse: modulus must be >= 2");
    if (x < 0 || x >= m) throw std::invalid_argument("mod_inverse: x outside [0, m)");
    // Extended Euclid on (x, m).
    long long r0 = x, r1 = m;
    long long s0 = 1, s1 = 0;
    while (r1 != 0) {
        const long long q = r0 / r1;
        r0 -= q * r1;
        std::swap(r0, r1);
        s0 -= q * s1;
        std::swap(s0, s1);
    }
    if (r0 != 1) return std::nullopt;
    long long inv = s0 % m;
    if (inv < 0) inv += m;
    return static_cast<int>(inv);
}

// Trial division; intended for the small n this library deals in.
inline bool is_prime(int n) {
    if (n < 2) return false;
    for (int d = 2; static_cast<long long>(d) * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

}  // namespace eurhythm
