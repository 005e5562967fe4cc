#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "ffkit/errors.hpp"

namespace ffkit {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Exact rational plane point, so every identity check below is decidable.
struct PlanePoint {
    Rational x, y;

    friend bool operator==(const PlanePoint& a, const PlanePoint& b) {
        return a.x == b.x && a.y == b.y;
    }
};

// Plane metrics. PNorm(1) is Taxicab and PNorm(2) is Euclidean; other
// exponents give transcendental distances and are only sampled numerically.
struct Metric {
    enum class Kind { Euclidean, Taxicab, Chebyshev, PNorm };

    Kind kind = Kind::Euclidean;
    Rational r = 2; // PNorm exponent

    static Metric euclidean() { return {Kind::Euclidean, 2}; }
    static Metric taxicab() { return {Kind::Taxicab, 1}; }
    static Metric chebyshev() { return {Kind::Chebyshev, 0}; }
    static Metric pnorm(Rational r);

    std::string name() const;
};

// Exact distance value. Euclidean distances are carried in squared form
// (squared = true) so comparisons stay inside the rationals; Taxicab and
// Chebyshev are exact as-is.
struct Distance {
    Rational value;
    bool squared = false;
};

// Throws InexactMetric for PNorm exponents other than 1 and 2.
Distance dist(const Metric& metric, const PlanePoint& a, const PlanePoint& b);

// Floating-point distance for sampling-only metrics (any positive exponent).
double dist_approx(const Metric& metric, const PlanePoint& a, const PlanePoint& b);

struct PythagorasCheck {
    Rational lhs; // d(A,B)^2 + d(A,C)^2
    Rational rhs; // d(B,C)^2
    bool holds = false;
};

// Exact d(A,B)^2 + d(A,C)^2 vs d(B,C)^2 under the given metric.
PythagorasCheck pythagoras_identity(const Metric& metric, const PlanePoint& a,
                                    const PlanePoint& b, const PlanePoint& c);

// A grid triple satisfying d(A,B)^n + d(A,C)^n = d(B,C)^n exactly.
// Distances are reported in the metric's exact measure (squared for
// Euclidean, plain otherwise).
struct GridTriple {
    std::int64_t ax, ay, bx, by, cx, cy;
    BigInt d_ab, d_ac, d_bc;
    bool squared = false;
};

// Exhaustive search over integer grid points in [-bound, bound]^2 for
// triples with all three distances positive, deduplicated up to swapping B
// and C; output sorted by (A, B, C). Euclidean requires n even so powers
// stay rational (InexactMetricForOddExponent otherwise).
std::vector<GridTriple> fermat_triple_search(const Metric& metric, std::int64_t n,
                                             std::int64_t bound, int jobs = 1);

} // namespace ffkit
