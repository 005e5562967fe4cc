#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ffkit/polyring.hpp"

namespace ffkit {

class Field;
using FieldPtr = std::shared_ptr<const Field>;

// Persistent map from "p:n" to the canonical modulus in polynomial text
// format. Writes go through a temp file followed by rename, so concurrent
// writers settle on last-writer-wins with every intermediate state valid.
class ModulusCache {
public:
    explicit ModulusCache(std::filesystem::path path);

    std::optional<std::string> lookup(std::int64_t p, std::size_t n) const;
    void store(std::int64_t p, std::size_t n, const std::string& poly_text);
    void save() const;

    const std::filesystem::path& path() const noexcept { return path_; }

private:
    std::filesystem::path path_;
    std::map<std::string, std::string> entries_;
};

// GF(p^n) built as F_p[x] modulo a monic irreducible of degree n. For n = 1
// the modulus is x and elements are plain residues. Immutable once built;
// share freely across threads.
class Field : public std::enable_shared_from_this<Field> {
public:
    // Canonical construction: modulus = find_irreducible(p, n), optionally
    // resolved through (and recorded into) a cache.
    static FieldPtr make(std::int64_t p, std::size_t n, ModulusCache* cache = nullptr);
    // Explicit modulus: must be monic, degree n, irreducible over F_p.
    static FieldPtr make(std::int64_t p, std::size_t n, const Poly& modulus);

    const PrimeField& base() const noexcept { return base_; }
    std::int64_t p() const noexcept { return base_.p(); }
    std::size_t degree() const noexcept { return n_; }
    std::int64_t q() const noexcept { return q_; }
    const Poly& modulus() const noexcept { return modulus_; }

    class Element;

    Element zero() const;
    Element one() const;
    // Embeds c into the prime subfield (a constant coefficient vector).
    Element from_int(std::int64_t c) const;
    Element from_coeffs(std::vector<std::int64_t> coeffs) const;

    // Enumeration index: index = sum coeff[j] * p^j, so prime-field elements
    // coincide with their values and constants come first.
    Element element(std::int64_t index) const;
    std::int64_t index(const Element& a) const;
    // Rank in lexicographic coefficient order (c0 compared first); used by
    // the deterministic smallest-element searches.
    std::int64_t lex_rank(const Element& a) const;
    Element element_by_lex_rank(std::int64_t rank) const;

    bool same_as(const Field& other) const noexcept {
        return p() == other.p() && n_ == other.n_ && modulus_ == other.modulus_;
    }

private:
    Field(PrimeField base, std::size_t n, Poly modulus, std::int64_t q);

    PrimeField base_;
    std::size_t n_;
    Poly modulus_;
    std::int64_t q_;
};

// Field element: coefficient vector of length n over F_p, coefficient of x^i
// at index i. Carries a handle to its field; all operations are pure.
class Field::Element {
public:
    Element(FieldPtr field, std::vector<std::int64_t> coeffs);

    const FieldPtr& field() const noexcept { return field_; }
    const std::vector<std::int64_t>& coeffs() const noexcept { return c_; }
    std::int64_t coeff(std::size_t i) const noexcept { return i < c_.size() ? c_[i] : 0; }

    bool is_zero() const noexcept;
    bool is_one() const noexcept;

    friend bool operator==(const Element& a, const Element& b) noexcept {
        return a.field_->same_as(*b.field_) && a.c_ == b.c_;
    }

private:
    FieldPtr field_;
    std::vector<std::int64_t> c_;
};

using GFElement = Field::Element;

GFElement gf_add(const GFElement& a, const GFElement& b);
GFElement gf_sub(const GFElement& a, const GFElement& b);
GFElement gf_neg(const GFElement& a);
GFElement gf_mul(const GFElement& a, const GFElement& b);
// Extended gcd with the modulus; throws ZeroInverse.
GFElement gf_inv(const GFElement& a);
// Binary exponentiation, a^0 = 1 (including 0^0 = 1).
GFElement gf_pow(const GFElement& a, std::uint64_t e);

inline GFElement operator+(const GFElement& a, const GFElement& b) { return gf_add(a, b); }
inline GFElement operator-(const GFElement& a, const GFElement& b) { return gf_sub(a, b); }
inline GFElement operator-(const GFElement& a) { return gf_neg(a); }
inline GFElement operator*(const GFElement& a, const GFElement& b) { return gf_mul(a, b); }

// a^(p^k); k defaults to one Frobenius application.
GFElement frobenius(const GFElement& a, std::size_t k = 1);

// Least t >= 1 with a^t = 1; divides q - 1. Throws ZeroElement.
std::int64_t element_order(const GFElement& a);

// The generator of the multiplicative group that is smallest in
// lexicographic coefficient order; deterministic.
GFElement primitive_element(const FieldPtr& field);

// True iff a lies in the unique subfield of order p^m (fixed-point test
// a^(p^m) = a); requires 1 <= m <= n.
bool subfield_member(const GFElement& a, std::size_t m);

// Verifies beta^q = beta for every element; exhaustive, q <= 10^6.
bool splitting_check(const FieldPtr& field);

// The multiplication-by-(y0/x0) permutation of the field, as a table over
// element indexes: perm[index(b)] = index((y0/x0) * b). Maps x0 to y0 and is
// a bijection; throws ZeroSource when x0 = 0.
std::vector<std::int64_t> translation_map(const GFElement& x0, const GFElement& y0);

std::string element_to_text(const GFElement& a);

// Quadratic character of the field: 0 for zero, +1 for nonzero squares,
// -1 otherwise (a^((q-1)/2) mapped to {-1,0,1}); requires odd q.
int quadratic_character(const GFElement& a);

// Prime factorization by trial division, ascending, with multiplicities.
std::vector<std::pair<std::int64_t, int>> factorize(std::int64_t m);

} // namespace ffkit
