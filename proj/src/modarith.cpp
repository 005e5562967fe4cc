#include "ffkit/modarith.hpp"

namespace ffkit {

bool is_prime(std::int64_t m) noexcept {
    if (m < 2) return false;
    if (m < 4) return true;
    if (m % 2 == 0 || m % 3 == 0) return false;
    for (std::int64_t d = 5; d * d <= m; d += 6) {
        if (m % d == 0 || m % (d + 2) == 0) return false;
    }
    return true;
}

PrimeField::PrimeField(std::int64_t p) : p_(p) {
    if (p < 2 || p >= (std::int64_t{1} << 31) || !is_prime(p)) {
        throw DomainError("NotPrime",
                          "modulus " + std::to_string(p) + " is not a prime in [2, 2^31)");
    }
}

std::int64_t PrimeField::pow(std::int64_t a, std::uint64_t e) const noexcept {
    a = reduce(a);
    std::int64_t result = 1 % p_;
    while (e > 0) {
        if (e & 1) result = mul(result, a);
        a = mul(a, a);
        e >>= 1;
    }
    return result;
}

std::int64_t PrimeField::inv(std::int64_t a) const {
    a = reduce(a);
    if (a == 0) {
        throw DomainError("ZeroInverse", "0 has no inverse mod " + std::to_string(p_));
    }
    // Extended Euclid on (a, p); p prime so gcd is 1.
    std::int64_t r0 = a, r1 = p_, s0 = 1, s1 = 0;
    while (r1 != 0) {
        std::int64_t q = r0 / r1;
        std::int64_t r2 = r0 - q * r1;
        std::int64_t s2 = s0 - q * s1;
        r0 = r1; r1 = r2;
        s0 = s1; s1 = s2;
    }
    return reduce(s0);
}

int PrimeField::legendre(std::int64_t a) const {
    if (p_ == 2) {
        throw DomainError("EvenModulus", "quadratic character needs an odd modulus");
    }
    a = reduce(a);
    if (a == 0) return 0;
    std::int64_t r = pow(a, static_cast<std::uint64_t>((p_ - 1) / 2));
    return r == 1 ? 1 : -1;
}

} // namespace ffkit
