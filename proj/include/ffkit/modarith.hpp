#pragma once

#include <cstdint>

#include "ffkit/errors.hpp"

namespace ffkit {

// Deterministic primality by trial division; exact for m < 2^31.
bool is_prime(std::int64_t m) noexcept;

// The prime field F_p for a desk-scale prime 2 <= p < 2^31 (so products of
// two reduced residues fit in int64). Residue values are plain int64,
// always kept fully reduced to [0, p).
class PrimeField {
public:
    explicit PrimeField(std::int64_t p);

    std::int64_t p() const noexcept { return p_; }

    std::int64_t reduce(std::int64_t v) const noexcept {
        std::int64_t r = v % p_;
        return r < 0 ? r + p_ : r;
    }

    std::int64_t add(std::int64_t a, std::int64_t b) const noexcept {
        std::int64_t r = a + b;
        return r >= p_ ? r - p_ : r;
    }
    std::int64_t sub(std::int64_t a, std::int64_t b) const noexcept {
        std::int64_t r = a - b;
        return r < 0 ? r + p_ : r;
    }
    std::int64_t mul(std::int64_t a, std::int64_t b) const noexcept {
        return (a * b) % p_;
    }
    std::int64_t neg(std::int64_t a) const noexcept {
        return a == 0 ? 0 : p_ - a;
    }

    // a^e with 0^0 = 1 (polynomial-evaluation convention).
    std::int64_t pow(std::int64_t a, std::uint64_t e) const noexcept;

    // Multiplicative inverse by extended Euclid; throws ZeroInverse on a = 0.
    std::int64_t inv(std::int64_t a) const;

    // Quadratic character of a: 0, +1 (nonzero square) or -1.
    // Requires p odd; throws EvenModulus for p = 2.
    int legendre(std::int64_t a) const;

    friend bool operator==(const PrimeField& lhs, const PrimeField& rhs) noexcept {
        return lhs.p_ == rhs.p_;
    }

private:
    std::int64_t p_;
};

// A residue tagged with its modulus; the value is always in [0, p).
class FpResidue {
public:
    FpResidue(std::int64_t value, const PrimeField& field)
        : value_(field.reduce(value)), p_(field.p()) {}

    std::int64_t value() const noexcept { return value_; }
    std::int64_t modulus() const noexcept { return p_; }

    friend bool operator==(const FpResidue& a, const FpResidue& b) noexcept {
        return a.value_ == b.value_ && a.p_ == b.p_;
    }

private:
    std::int64_t value_;
    std::int64_t p_;
};

} // namespace ffkit
