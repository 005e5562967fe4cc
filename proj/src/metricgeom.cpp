#include "ffkit/metricgeom.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>

#include "ffkit/parallel.hpp"

namespace ffkit {

namespace {

constexpr std::int64_t kGridBoundLimit = 64; // (2*64+1)^2 grid points per axis pair

Rational rat_abs(const Rational& v) { return v < 0 ? Rational(-v) : v; }

} // namespace

Metric Metric::pnorm(Rational r) {
    if (r <= 0) {
        throw DomainError("ExponentOutOfRange", "p-norm exponent must be positive");
    }
    if (r == 1) return taxicab();
    if (r == 2) return euclidean();
    return {Kind::PNorm, std::move(r)};
}

std::string Metric::name() const {
    switch (kind) {
        case Kind::Euclidean: return "euclidean";
        case Kind::Taxicab: return "taxicab";
        case Kind::Chebyshev: return "chebyshev";
        case Kind::PNorm: return "pnorm(" + r.str() + ")";
    }
    return "unknown";
}

Distance dist(const Metric& metric, const PlanePoint& a, const PlanePoint& b) {
    Rational dx = rat_abs(a.x - b.x);
    Rational dy = rat_abs(a.y - b.y);
    switch (metric.kind) {
        case Metric::Kind::Taxicab:
            return {dx + dy, false};
        case Metric::Kind::Chebyshev:
            return {std::max(dx, dy), false};
        case Metric::Kind::Euclidean:
            return {dx * dx + dy * dy, true};
        case Metric::Kind::PNorm:
            // PNorm(1)/PNorm(2) are constructed as Taxicab/Euclidean, so an
            // exponent reaching here is genuinely transcendental.
            throw DomainError("InexactMetric",
                              "p-norm distances for r = " + metric.r.str() +
                                  " are not exact; identity checks are undefined");
    }
    throw DomainError("InexactMetric", "unreachable metric kind");
}

double dist_approx(const Metric& metric, const PlanePoint& a, const PlanePoint& b) {
    double dx = std::abs(static_cast<double>(a.x - b.x));
    double dy = std::abs(static_cast<double>(a.y - b.y));
    switch (metric.kind) {
        case Metric::Kind::Taxicab: return dx + dy;
        case Metric::Kind::Chebyshev: return std::max(dx, dy);
        case Metric::Kind::Euclidean: return std::hypot(dx, dy);
        case Metric::Kind::PNorm: {
            double r = static_cast<double>(metric.r);
            return std::pow(std::pow(dx, r) + std::pow(dy, r), 1.0 / r);
        }
    }
    return 0.0;
}

PythagorasCheck pythagoras_identity(const Metric& metric, const PlanePoint& a,
                                    const PlanePoint& b, const PlanePoint& c) {
    auto square = [](const Distance& d) {
        return d.squared ? d.value : Rational(d.value * d.value);
    };
    PythagorasCheck out;
    out.lhs = square(dist(metric, a, b)) + square(dist(metric, a, c));
    out.rhs = square(dist(metric, b, c));
    out.holds = (out.lhs == out.rhs);
    return out;
}

namespace {

struct GridPoint {
    std::int64_t x, y;
};

// Exact measure between grid points in the metric's comparison scale:
// plain distance for taxicab/chebyshev, squared distance for euclidean.
std::int64_t grid_measure(Metric::Kind kind, const GridPoint& a, const GridPoint& b) {
    std::int64_t dx = std::llabs(a.x - b.x);
    std::int64_t dy = std::llabs(a.y - b.y);
    switch (kind) {
        case Metric::Kind::Taxicab: return dx + dy;
        case Metric::Kind::Chebyshev: return std::max(dx, dy);
        default: return dx * dx + dy * dy;
    }
}

} // namespace

std::vector<GridTriple> fermat_triple_search(const Metric& metric, std::int64_t n,
                                             std::int64_t bound, int jobs) {
    if (n < 2) {
        throw DomainError("ExponentOutOfRange", "triple search needs exponent n >= 2");
    }
    if (bound < 0 || bound > kGridBoundLimit) {
        throw BoundError("GridTooLarge",
                         "grid radius must lie in [0, " + std::to_string(kGridBoundLimit) + "]");
    }
    Metric::Kind kind = metric.kind;
    std::int64_t power_exp = n;
    if (kind == Metric::Kind::Euclidean) {
        if (n % 2 != 0) {
            throw DomainError("InexactMetricForOddExponent",
                              "euclidean grid distances are irrational; use an even exponent");
        }
        power_exp = n / 2; // measures are squared distances
    } else if (kind == Metric::Kind::PNorm) {
        throw DomainError("InexactMetric", "grid search needs an exact metric");
    }

    const std::int64_t side = 2 * bound + 1;
    std::vector<GridPoint> pts;
    pts.reserve(static_cast<std::size_t>(side * side));
    for (std::int64_t x = -bound; x <= bound; ++x) {
        for (std::int64_t y = -bound; y <= bound; ++y) pts.push_back({x, y});
    }

    // Largest possible measure, for the power table.
    std::int64_t max_measure = (kind == Metric::Kind::Taxicab)    ? 4 * bound
                               : (kind == Metric::Kind::Chebyshev) ? 2 * bound
                                                                   : 8 * bound * bound;
    std::vector<BigInt> powers(static_cast<std::size_t>(max_measure) + 1);
    for (std::int64_t v = 0; v <= max_measure; ++v) {
        powers[static_cast<std::size_t>(v)] = boost::multiprecision::pow(
            BigInt(v), static_cast<unsigned>(power_exp));
    }

    const std::size_t count = pts.size();
    // One slab per A-point; slab results concatenate in A order, so the
    // output is identical for every parallelism degree.
    auto slabs = parallel_map<std::vector<GridTriple>>(count, jobs, [&](std::size_t ai) {
        std::vector<GridTriple> found;
        const GridPoint& A = pts[ai];
        for (std::size_t bi = 0; bi < count; ++bi) {
            const GridPoint& B = pts[bi];
            std::int64_t dab = grid_measure(kind, A, B);
            if (dab == 0) continue;
            for (std::size_t ci = bi + 1; ci < count; ++ci) {
                const GridPoint& C = pts[ci];
                std::int64_t dac = grid_measure(kind, A, C);
                if (dac == 0) continue;
                std::int64_t dbc = grid_measure(kind, B, C);
                if (dbc == 0) continue;
                if (powers[static_cast<std::size_t>(dab)] + powers[static_cast<std::size_t>(dac)] !=
                    powers[static_cast<std::size_t>(dbc)]) {
                    continue;
                }
                GridTriple t{A.x, A.y, B.x, B.y, C.x, C.y,
                             BigInt(dab), BigInt(dac), BigInt(dbc),
                             kind == Metric::Kind::Euclidean};
                found.push_back(std::move(t));
            }
        }
        return found;
    });

    std::vector<GridTriple> out;
    for (auto& slab : slabs) {
        for (auto& t : slab) out.push_back(std::move(t));
    }
    return out;
}

} // namespace ffkit
