#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ffkit/modarith.hpp"

namespace ffkit {

// Dense polynomial over F_p, little-endian coefficients (coeff(i) multiplies
// x^i). Canonical form: no trailing zero coefficient; the zero polynomial has
// an empty coefficient list. Canonical form makes equality structural.
class Poly {
public:
    Poly(const PrimeField& field, std::vector<std::int64_t> coeffs);

    static Poly zero(const PrimeField& field) { return Poly(field, {}); }
    static Poly constant(const PrimeField& field, std::int64_t c) { return Poly(field, {c}); }
    static Poly x(const PrimeField& field) { return Poly(field, {0, 1}); }
    // coeff * x^deg
    static Poly monomial(const PrimeField& field, std::int64_t coeff, std::size_t deg);

    const PrimeField& field() const noexcept { return field_; }
    std::int64_t p() const noexcept { return field_.p(); }

    bool is_zero() const noexcept { return c_.empty(); }
    // Degree of the zero polynomial is -1.
    int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
    std::int64_t coeff(std::size_t i) const noexcept { return i < c_.size() ? c_[i] : 0; }
    const std::vector<std::int64_t>& coeffs() const noexcept { return c_; }
    std::int64_t leading() const noexcept { return c_.empty() ? 0 : c_.back(); }
    bool is_monic() const noexcept { return leading() == 1; }

    friend bool operator==(const Poly& a, const Poly& b) noexcept {
        return a.p() == b.p() && a.c_ == b.c_;
    }

private:
    PrimeField field_;
    std::vector<std::int64_t> c_;
};

Poly poly_add(const Poly& a, const Poly& b);
Poly poly_sub(const Poly& a, const Poly& b);
Poly poly_neg(const Poly& a);
Poly poly_mul(const Poly& a, const Poly& b);
Poly poly_scale(const Poly& a, std::int64_t s);
Poly poly_monic(const Poly& a);

// Euclidean division: num = quotient * den + remainder, deg r < deg den.
// Throws DivisionByZeroPoly.
std::pair<Poly, Poly> poly_divmod(const Poly& num, const Poly& den);
Poly poly_rem(const Poly& num, const Poly& den);

// Monic greatest common divisor; gcd(a, 0) = monic(a). Throws BothZero.
Poly poly_gcd(const Poly& a, const Poly& b);

// Extended Euclid: returns (g, u, v), monic g = u*a + v*b.
struct PolyExtGcd {
    Poly g, u, v;
};
PolyExtGcd poly_extgcd(const Poly& a, const Poly& b);

Poly poly_derivative(const Poly& a);

std::int64_t poly_eval(const Poly& a, std::int64_t x);

// base^e reduced modulo `mod` at every step.
Poly poly_powmod(const Poly& base, std::uint64_t e, const Poly& mod);

// Composition a(x + t) (Taylor shift by t).
Poly poly_shift(const Poly& a, std::int64_t t);

// Irreducibility over F_p: f has no factor of degree <= deg(f)/2, tested via
// gcd(f, x^(p^k) - x) = 1 for k = 1..floor(deg/2), with x^(p^k) computed mod f
// by iterated p-th powers. Throws ConstantPolynomial for deg < 1.
bool is_irreducible(const Poly& f);

// The lexicographically smallest monic irreducible polynomial of degree n
// over F_p, comparing coefficient vectors (c0, c1, ..., c_{n-1}); exists for
// every n >= 1, and the search is deterministic.
Poly find_irreducible(const PrimeField& field, std::size_t n);

// Text format "c0 + c1*x + c2*x^2" with zero terms omitted; "0" when zero.
std::string poly_to_text(const Poly& a);
// Accepts the emitted format plus the usual shorthands ("x^2 + 1", "2x").
Poly poly_from_text(const PrimeField& field, std::string_view text);

} // namespace ffkit
