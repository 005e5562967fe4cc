#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ffkit/galois.hpp"

namespace ffkit {

// Monic-cubic Weierstrass curve y^2 = x^3 + b x^2 + c x + d over a finite
// field of characteristic >= 5, nonsingular (discriminant != 0). The general
// leading coefficient A of y^2 = Ax^3 + Bx^2 + Cx + D is normalized away via
// X = A x, Y = A y, which gives Y^2 = X^3 + B X^2 + (CA) X + (DA^2).
class Curve {
public:
    static Curve make(const FieldPtr& field, std::int64_t A, std::int64_t B, std::int64_t C,
                      std::int64_t D);
    static Curve make(GFElement A, GFElement B, GFElement C, GFElement D);

    const FieldPtr& field() const noexcept { return b_.field(); }
    const GFElement& b() const noexcept { return b_; }
    const GFElement& c() const noexcept { return c_; }
    const GFElement& d() const noexcept { return d_; }

    // d + c x + b x^2 + x^3 evaluated at x.
    GFElement rhs(const GFElement& x) const;
    GFElement discriminant() const;

private:
    Curve(GFElement b, GFElement c, GFElement d) : b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {}
    GFElement b_, c_, d_;
};

// A point on a curve: affine (x, y) or the point at infinity (the identity).
class CurvePoint {
public:
    static CurvePoint infinity() { return CurvePoint(); }
    static CurvePoint affine(GFElement x, GFElement y) { return CurvePoint(std::move(x), std::move(y)); }

    bool is_infinity() const noexcept { return !xy_.has_value(); }
    const GFElement& x() const { return xy_->first; }
    const GFElement& y() const { return xy_->second; }

    friend bool operator==(const CurvePoint& a, const CurvePoint& b) {
        if (a.is_infinity() || b.is_infinity()) return a.is_infinity() == b.is_infinity();
        return a.x() == b.x() && a.y() == b.y();
    }

private:
    CurvePoint() = default;
    CurvePoint(GFElement x, GFElement y) : xy_(std::in_place, std::move(x), std::move(y)) {}
    std::optional<std::pair<GFElement, GFElement>> xy_;
};

bool on_curve(const Curve& curve, const CurvePoint& P);

// Chord-tangent addition with infinity as identity; -(x, y) = (x, -y).
// Throws PointNotOnCurve when an input fails the curve equation.
CurvePoint group_law(const Curve& curve, const CurvePoint& P, const CurvePoint& Q);
CurvePoint negate_point(const CurvePoint& P);

// k * P by double-and-add; 0 * P = infinity, (-k) * P = -(k * P).
CurvePoint scalar_mul(const Curve& curve, std::int64_t k, const CurvePoint& P);

// Number of points including infinity, via the quadratic-character sum
// 1 + sum_x (1 + chi(x^3 + b x^2 + c x + d)). Exhaustive in q; q <= 10^6.
std::int64_t count_points(const Curve& curve);

// Invariant factors (d1, d2), d1 | d2, d1 * d2 = #E, computed from element
// orders by brute force; requires #E <= 10^4.
std::pair<std::int64_t, std::int64_t> group_structure(const Curve& curve);

// |E[m](GF(p^k))| for a curve over F_p: the points over the degree-k
// extension killed by m. Requires gcd(m, p) = 1 and p^k <= 10^6.
std::int64_t division_points(const Curve& curve, std::int64_t m, std::size_t ext_k);

// Scans k = 1..max_ext until |E[m]| reaches its full size m^2 (the group is
// Z/m x Z/m once the field is large enough); per-k counts are returned for
// inspection. Throws ExtensionBoundExceeded when the bound passes without
// attainment.
struct TorsionScan {
    std::int64_t m = 0;
    std::vector<std::pair<std::size_t, std::int64_t>> counts; // (k, |E[m]|)
    std::size_t attained_k = 0;
};
TorsionScan torsion_scan(const Curve& curve, std::int64_t m, std::size_t max_ext = 12);

// ---------------------------------------------------------------------------
// Integer curves for reduction studies. Coefficients are kept small enough
// (|b|,|c|,|d| <= 10^9) that the discriminant fits comfortably in 128 bits.
class IntCurve {
public:
    static IntCurve make(std::int64_t A, std::int64_t B, std::int64_t C, std::int64_t D);
    // Expanded (x - r1)(x - r2)(x - r3).
    static IntCurve from_roots(std::int64_t r1, std::int64_t r2, std::int64_t r3);
    // y^2 = x(x - a^n)(x + b^n) attached to a putative solution a^n + b^n = c^n.
    static IntCurve frey(std::int64_t a, std::int64_t b, std::int64_t n);

    std::int64_t b() const noexcept { return b_; }
    std::int64_t c() const noexcept { return c_; }
    std::int64_t d() const noexcept { return d_; }

    __int128 discriminant() const noexcept;

    // The curve with coefficients reduced mod p; requires good reduction.
    Curve reduce(const FieldPtr& field) const;

private:
    IntCurve(std::int64_t b, std::int64_t c, std::int64_t d) : b_(b), c_(c), d_(d) {}
    std::int64_t b_, c_, d_;
};

enum class ReductionKind { Good, Multiplicative, Additive };

const char* reduction_kind_name(ReductionKind kind);

struct ReductionReport {
    std::int64_t p = 0;
    ReductionKind type = ReductionKind::Good;
    int conductor_exponent = 0; // 0 good, 1 node, 2 cusp (p >= 5)
    std::optional<std::int64_t> point_count;
    std::optional<std::int64_t> a_p; // p + 1 - point_count, |a_p| <= 2 sqrt(p)
};

// Classifies reduction at a prime p >= 5: Good iff p does not divide the
// discriminant; otherwise Multiplicative (double root of the reduced cubic)
// or Additive (triple root), found via gcd of the cubic and its derivative.
ReductionReport reduction_type(const IntCurve& curve, std::int64_t p);

// a_p = p + 1 - #E(F_p); requires good reduction at p (p >= 5).
std::int64_t trace_ap(const IntCurve& curve, std::int64_t p);

struct SemistabilityReport {
    std::vector<ReductionReport> bad_primes; // primes 5 <= p <= bound dividing the discriminant
    bool semistable = true;                  // no additive reduction in range
    std::string conductor_part;              // product over the range, factored form
};

// Surveys bad reduction over 5 <= p <= p_bound for the given model.
SemistabilityReport semistability(const IntCurve& curve, std::int64_t p_bound, int jobs = 1);

struct ApEntry {
    std::int64_t p = 0;
    std::optional<std::int64_t> a_p;                     // present for good primes
    std::optional<ReductionKind> bad_reduction;          // tag for omitted primes
};

// (p, a_p) over good primes 5 <= p <= p_max in ascending order; bad primes
// appear tagged with their reduction type instead of a coefficient.
std::vector<ApEntry> ap_series(const IntCurve& curve, std::int64_t p_max, int jobs = 1);

std::string int128_to_string(__int128 v);

} // namespace ffkit
