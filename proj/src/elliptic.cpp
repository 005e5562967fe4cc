#include "ffkit/elliptic.hpp"

#include <algorithm>
#include <numeric>

#include "ffkit/parallel.hpp"

namespace ffkit {

namespace {

constexpr std::int64_t kPointCountBound = 1'000'000; // exhaustive q bound
constexpr std::int64_t kStructureBound = 10'000;     // brute-force group-order bound
constexpr std::int64_t kCoefficientBound = 1'000'000'000;
constexpr std::int64_t kTorsionOrderBound = 64;

void require_char_ge5(const FieldPtr& field) {
    if (field->p() < 5) {
        throw DomainError("SmallCharacteristic",
                          "curve-group operations need characteristic >= 5, got " +
                              std::to_string(field->p()));
    }
}

GFElement disc_of(const GFElement& b, const GFElement& c, const GFElement& d) {
    const Field& K = *b.field();
    auto k = [&](std::int64_t v) { return K.from_int(v); };
    GFElement t1 = k(18) * b * c * d;
    GFElement t2 = k(4) * b * b * b * d;
    GFElement t3 = b * b * c * c;
    GFElement t4 = k(4) * c * c * c;
    GFElement t5 = k(27) * d * d;
    return gf_sub(gf_add(gf_sub(t1, t2), t3), gf_add(t4, t5));
}

} // namespace

// ---------------------------------------------------------------------------
// Curve

Curve Curve::make(GFElement A, GFElement B, GFElement C, GFElement D) {
    const FieldPtr& field = A.field();
    require_char_ge5(field);
    if (A.is_zero()) {
        throw DomainError("NonInvertibleLeadingCoefficient",
                          "leading coefficient must be invertible");
    }
    // X = A x, Y = A y turns y^2 = Ax^3 + Bx^2 + Cx + D into
    // Y^2 = X^3 + B X^2 + (CA) X + (DA^2).
    GFElement b = B;
    GFElement c = C * A;
    GFElement d = D * A * A;
    GFElement disc = disc_of(b, c, d);
    if (disc.is_zero()) {
        throw DomainError("SingularCurve", "cubic has a repeated root (discriminant 0)");
    }
    return Curve(std::move(b), std::move(c), std::move(d));
}

Curve Curve::make(const FieldPtr& field, std::int64_t A, std::int64_t B, std::int64_t C,
                  std::int64_t D) {
    return make(field->from_int(A), field->from_int(B), field->from_int(C), field->from_int(D));
}

GFElement Curve::rhs(const GFElement& x) const {
    return ((x + b_) * x + c_) * x + d_;
}

GFElement Curve::discriminant() const { return disc_of(b_, c_, d_); }

// ---------------------------------------------------------------------------
// Group law

bool on_curve(const Curve& curve, const CurvePoint& P) {
    if (P.is_infinity()) return true;
    return P.y() * P.y() == curve.rhs(P.x());
}

namespace {

void require_on_curve(const Curve& curve, const CurvePoint& P) {
    if (!on_curve(curve, P)) {
        throw DomainError("PointNotOnCurve", "point does not satisfy the curve equation");
    }
}

CurvePoint add_unchecked(const Curve& curve, const CurvePoint& P, const CurvePoint& Q) {
    if (P.is_infinity()) return Q;
    if (Q.is_infinity()) return P;
    const Field& K = *curve.field();
    const GFElement& x1 = P.x();
    const GFElement& y1 = P.y();
    const GFElement& x2 = Q.x();
    const GFElement& y2 = Q.y();

    if (x1 == x2 && gf_add(y1, y2).is_zero()) return CurvePoint::infinity();

    GFElement slope = K.zero();
    if (x1 == x2) {
        // Tangent: (3x^2 + 2bx + c) / (2y).
        GFElement num = K.from_int(3) * x1 * x1 + K.from_int(2) * curve.b() * x1 + curve.c();
        slope = num * gf_inv(K.from_int(2) * y1);
    } else {
        slope = (y2 - y1) * gf_inv(x2 - x1);
    }
    // x1 + x2 + x3 = slope^2 - b; the sum is the reflected third intersection.
    GFElement x3 = slope * slope - curve.b() - x1 - x2;
    GFElement y3 = slope * (x1 - x3) - y1;
    return CurvePoint::affine(std::move(x3), std::move(y3));
}

} // namespace

CurvePoint group_law(const Curve& curve, const CurvePoint& P, const CurvePoint& Q) {
    require_on_curve(curve, P);
    require_on_curve(curve, Q);
    return add_unchecked(curve, P, Q);
}

CurvePoint negate_point(const CurvePoint& P) {
    if (P.is_infinity()) return P;
    return CurvePoint::affine(P.x(), gf_neg(P.y()));
}

CurvePoint scalar_mul(const Curve& curve, std::int64_t k, const CurvePoint& P) {
    require_on_curve(curve, P);
    CurvePoint base = P;
    if (k < 0) {
        base = negate_point(base);
        k = -k;
    }
    CurvePoint acc = CurvePoint::infinity();
    while (k > 0) {
        if (k & 1) acc = add_unchecked(curve, acc, base);
        base = add_unchecked(curve, base, base);
        k >>= 1;
    }
    return acc;
}

// ---------------------------------------------------------------------------
// Point counting

namespace {

// chi[i] = quadratic character of element(i): 0, +1, -1.
std::vector<signed char> character_table(const FieldPtr& field) {
    const std::int64_t q = field->q();
    std::vector<signed char> chi(static_cast<std::size_t>(q), -1);
    chi[0] = 0;
    if (field->degree() == 1) {
        const std::int64_t p = q;
        for (std::int64_t y = 1; y < p; ++y) chi[static_cast<std::size_t>((y * y) % p)] = 1;
    } else {
        for (std::int64_t i = 1; i < q; ++i) {
            GFElement y = field->element(i);
            chi[static_cast<std::size_t>(field->index(y * y))] = 1;
        }
    }
    return chi;
}

} // namespace

std::int64_t count_points(const Curve& curve) {
    const FieldPtr& field = curve.field();
    const std::int64_t q = field->q();
    if (q > kPointCountBound) {
        throw BoundError("FieldTooLarge",
                         "point counting is exhaustive in q; q <= 10^6 required");
    }
    std::vector<signed char> chi = character_table(field);
    std::int64_t total = 1; // infinity
    if (field->degree() == 1) {
        const std::int64_t p = q;
        const std::int64_t b = curve.b().coeff(0);
        const std::int64_t c = curve.c().coeff(0);
        const std::int64_t d = curve.d().coeff(0);
        for (std::int64_t x = 0; x < p; ++x) {
            std::int64_t v = (((x + b) % p) * x + c) % p;
            v = (v * x + d) % p;
            total += 1 + chi[static_cast<std::size_t>(v)];
        }
    } else {
        for (std::int64_t i = 0; i < q; ++i) {
            GFElement v = curve.rhs(field->element(i));
            total += 1 + chi[static_cast<std::size_t>(field->index(v))];
        }
    }
    return total;
}

// ---------------------------------------------------------------------------
// Group structure

namespace {

std::vector<CurvePoint> enumerate_points(const Curve& curve) {
    const FieldPtr& field = curve.field();
    const std::int64_t q = field->q();
    // y-indexes keyed by index(y^2).
    std::vector<std::vector<std::int64_t>> roots(static_cast<std::size_t>(q));
    for (std::int64_t i = 0; i < q; ++i) {
        GFElement y = field->element(i);
        roots[static_cast<std::size_t>(field->index(y * y))].push_back(i);
    }
    std::vector<CurvePoint> pts;
    pts.push_back(CurvePoint::infinity());
    for (std::int64_t i = 0; i < q; ++i) {
        GFElement x = field->element(i);
        std::int64_t v = field->index(curve.rhs(x));
        for (std::int64_t yi : roots[static_cast<std::size_t>(v)]) {
            pts.push_back(CurvePoint::affine(x, field->element(yi)));
        }
    }
    return pts;
}

std::int64_t point_order(const Curve& curve, const CurvePoint& P, std::int64_t group_order,
                         const std::vector<std::pair<std::int64_t, int>>& factors) {
    std::int64_t t = group_order;
    for (auto [r, e] : factors) {
        (void)e;
        while (t % r == 0 && scalar_mul(curve, t / r, P).is_infinity()) t /= r;
    }
    return t;
}

} // namespace

std::pair<std::int64_t, std::int64_t> group_structure(const Curve& curve) {
    std::int64_t order = count_points(curve);
    if (order > kStructureBound) {
        throw BoundError("FieldTooLarge",
                         "group structure is brute force; #E <= 10^4 required");
    }
    auto factors = factorize(order);
    std::vector<CurvePoint> pts = enumerate_points(curve);
    // The group has rank <= 2, so the exponent (= max element order) is the
    // larger invariant factor.
    std::int64_t exponent = 1;
    for (const CurvePoint& P : pts) {
        if (P.is_infinity()) continue;
        exponent = std::max(exponent, point_order(curve, P, order, factors));
        if (exponent == order) break; // cyclic; cannot grow further
    }
    std::int64_t d1 = order / exponent;
    if (d1 * exponent != order || exponent % d1 != 0) {
        throw DomainError("InternalError", "invariant factors do not divide as expected");
    }
    return {d1, exponent};
}

// ---------------------------------------------------------------------------
// Division points

namespace {

// g_m over F_p for the short curve y^2 = x^3 + Ax + B, where the m-th
// division polynomial is psi_m = g_m(x) * y^(m+1 mod 2) after substituting
// y^2 -> f(x). Roots of g_m (plus the 2-torsion cubic when m is even) are
// exactly the x-coordinates of the nonzero m-torsion.
std::vector<Poly> division_g_polys(const PrimeField& F, const Poly& fshort, std::int64_t m) {
    const std::int64_t A = fshort.coeff(1);
    const std::int64_t B = fshort.coeff(0);
    std::vector<Poly> g(static_cast<std::size_t>(m) + 1, Poly::zero(F));
    if (m >= 1) g[1] = Poly::constant(F, 1);
    if (m >= 2) g[2] = Poly::constant(F, 2);
    if (m >= 3) {
        g[3] = Poly(F, {F.neg(F.mul(A, A)), F.reduce(12 * B % F.p()), F.reduce(6 * A % F.p()), 0, 3});
    }
    if (m >= 4) {
        const std::int64_t A2 = F.mul(A, A);
        const std::int64_t A3 = F.mul(A2, A);
        const std::int64_t B2 = F.mul(B, B);
        Poly inner(F, {F.sub(F.neg(F.mul(8, B2)), A3), F.neg(F.mul(F.mul(4, A), B)),
                       F.neg(F.mul(5, A2)), F.mul(20, B), F.mul(5, A), 0, 1});
        g[4] = poly_scale(inner, 4);
    }
    const Poly f2 = poly_mul(fshort, fshort);
    const std::int64_t inv2 = F.inv(2);
    for (std::int64_t i = 5; i <= m; ++i) {
        std::size_t k = static_cast<std::size_t>(i);
        if (i % 2 == 1) {
            std::size_t j = static_cast<std::size_t>((i - 1) / 2);
            Poly t1 = poly_mul(g[j + 2], poly_mul(g[j], poly_mul(g[j], g[j])));
            Poly t2 = poly_mul(g[j - 1], poly_mul(g[j + 1], poly_mul(g[j + 1], g[j + 1])));
            if (j % 2 == 0) {
                g[k] = poly_sub(poly_mul(f2, t1), t2);
            } else {
                g[k] = poly_sub(t1, poly_mul(f2, t2));
            }
        } else {
            std::size_t j = static_cast<std::size_t>(i / 2);
            Poly t1 = poly_mul(g[j + 2], poly_mul(g[j - 1], g[j - 1]));
            Poly t2 = poly_mul(g[j - 2], poly_mul(g[j + 1], g[j + 1]));
            g[k] = poly_scale(poly_mul(g[j], poly_sub(t1, t2)), inv2);
        }
    }
    return g;
}

std::int64_t checked_ext_order(std::int64_t p, std::size_t k) {
    std::int64_t q = 1;
    for (std::size_t i = 0; i < k; ++i) {
        if (q > kPointCountBound / p) {
            throw BoundError("FieldTooLarge",
                             "p^k exceeds the exhaustive bound 10^6 for division points");
        }
        q *= p;
    }
    return q;
}

} // namespace

std::int64_t division_points(const Curve& curve, std::int64_t m, std::size_t ext_k) {
    const FieldPtr& field = curve.field();
    if (field->degree() != 1) {
        throw DomainError("DegreeMismatch", "division point counting takes a curve over F_p");
    }
    const std::int64_t p = field->p();
    if (m < 1) throw DomainError("ExponentOutOfRange", "m must be >= 1");
    if (m % p == 0) {
        throw DomainError("CharacteristicDividesM",
                          "m must be coprime to the characteristic " + std::to_string(p));
    }
    if (m > kTorsionOrderBound) {
        throw BoundError("TorsionOrderTooLarge", "m <= 64 required");
    }
    if (ext_k < 1) throw DomainError("DegreeMismatch", "extension degree must be >= 1");
    const std::int64_t q = checked_ext_order(p, ext_k);
    if (m == 1) return 1;

    const PrimeField& F = field->base();
    // Complete the cube: x -> x + t with t = -b/3 preserves torsion counts.
    Poly f(F, {curve.d().coeff(0), curve.c().coeff(0), curve.b().coeff(0), 1});
    std::int64_t t = F.mul(F.neg(curve.b().coeff(0)), F.inv(3));
    Poly fshort = poly_shift(f, t);

    auto g = division_g_polys(F, fshort, m);
    Poly radical = (m % 2 == 1) ? g[static_cast<std::size_t>(m)]
                                : poly_mul(g[static_cast<std::size_t>(m)], fshort);
    if (radical.degree() <= 0) return 1;

    // Distinct roots of the radical inside GF(q) = gcd with x^q - x.
    Poly x = Poly::x(F);
    Poly xq = poly_powmod(x, static_cast<std::uint64_t>(q), radical);
    Poly G = poly_gcd(radical, poly_sub(xq, x));
    if (G.degree() <= 0) return 1;

    // Split the roots by the GF(q)-square class of f(x0): y = 0 roots give one
    // point each, square classes two, nonsquares none.
    Poly zero_y = poly_gcd(G, fshort);
    Poly s = poly_powmod(fshort, static_cast<std::uint64_t>((q - 1) / 2), G);
    Poly square_class = poly_gcd(G, poly_sub(s, Poly::constant(F, 1)));
    return 1 + zero_y.degree() + 2 * square_class.degree();
}

TorsionScan torsion_scan(const Curve& curve, std::int64_t m, std::size_t max_ext) {
    TorsionScan scan;
    scan.m = m;
    const std::int64_t target = m * m;
    for (std::size_t k = 1; k <= max_ext; ++k) {
        std::int64_t count = division_points(curve, m, k);
        scan.counts.emplace_back(k, count);
        if (count == target) {
            scan.attained_k = k;
            return scan;
        }
    }
    throw DomainError("ExtensionBoundExceeded",
                      "E[" + std::to_string(m) + "] did not reach order " + std::to_string(target) +
                          " within extension degree " + std::to_string(max_ext));
}

// ---------------------------------------------------------------------------
// Integer curves

namespace {

void check_coeff_bounds(std::int64_t b, std::int64_t c, std::int64_t d) {
    if (std::abs(b) > kCoefficientBound || std::abs(c) > kCoefficientBound ||
        std::abs(d) > kCoefficientBound) {
        throw BoundError("CoefficientTooLarge", "integer curve coefficients are bounded by 10^9");
    }
}

std::int64_t checked_int_pow(std::int64_t base, std::int64_t e) {
    std::int64_t r = 1;
    for (std::int64_t i = 0; i < e; ++i) {
        if (std::abs(r) > kCoefficientBound / std::max<std::int64_t>(std::abs(base), 1)) {
            throw BoundError("CoefficientTooLarge", "power exceeds the coefficient bound");
        }
        r *= base;
    }
    return r;
}

} // namespace

IntCurve IntCurve::make(std::int64_t A, std::int64_t B, std::int64_t C, std::int64_t D) {
    if (A != 1 && A != -1) {
        throw DomainError("NonInvertibleLeadingCoefficient",
                          "integer leading coefficient must be +-1");
    }
    std::int64_t b = B, c = C * A, d = D * A * A;
    check_coeff_bounds(b, c, d);
    return IntCurve(b, c, d);
}

IntCurve IntCurve::from_roots(std::int64_t r1, std::int64_t r2, std::int64_t r3) {
    std::int64_t b = -(r1 + r2 + r3);
    std::int64_t c = r1 * r2 + r1 * r3 + r2 * r3;
    std::int64_t d = -(r1 * r2 * r3);
    check_coeff_bounds(b, c, d);
    return IntCurve(b, c, d);
}

IntCurve IntCurve::frey(std::int64_t a, std::int64_t b, std::int64_t n) {
    if (a == 0 || b == 0) {
        throw DomainError("ZeroParameter", "Frey parameters must be nonzero");
    }
    if (n < 1) throw DomainError("ExponentOutOfRange", "exponent must be >= 1");
    std::int64_t an = checked_int_pow(a, n);
    std::int64_t bn = checked_int_pow(b, n);
    return from_roots(0, an, -bn);
}

__int128 IntCurve::discriminant() const noexcept {
    const __int128 b = b_, c = c_, d = d_;
    return 18 * b * c * d - 4 * b * b * b * d + b * b * c * c - 4 * c * c * c - 27 * d * d;
}

Curve IntCurve::reduce(const FieldPtr& field) const {
    return Curve::make(field, 1, b_, c_, d_);
}

const char* reduction_kind_name(ReductionKind kind) {
    switch (kind) {
        case ReductionKind::Good: return "Good";
        case ReductionKind::Multiplicative: return "Multiplicative";
        case ReductionKind::Additive: return "Additive";
    }
    return "Unknown";
}

namespace {

std::int64_t mod_i128(__int128 v, std::int64_t p) {
    __int128 r = v % p;
    if (r < 0) r += p;
    return static_cast<std::int64_t>(r);
}

} // namespace

ReductionReport reduction_type(const IntCurve& curve, std::int64_t p) {
    if (!is_prime(p)) {
        throw DomainError("NotPrime", std::to_string(p) + " is not prime");
    }
    if (p < 5) {
        throw DomainError("SmallPrime", "reduction classification is defined for p >= 5");
    }
    ReductionReport report;
    report.p = p;
    if (mod_i128(curve.discriminant(), p) != 0) {
        report.type = ReductionKind::Good;
        report.conductor_exponent = 0;
        FieldPtr field = Field::make(p, 1);
        std::int64_t count = count_points(curve.reduce(field));
        report.point_count = count;
        std::int64_t ap = p + 1 - count;
        if (ap * ap > 4 * p) {
            throw DomainError("InternalError", "Hasse bound violated; point count is wrong");
        }
        report.a_p = ap;
        return report;
    }
    PrimeField F(p);
    Poly cubic(F, {curve.d(), curve.c(), curve.b(), 1});
    Poly g = poly_gcd(cubic, poly_derivative(cubic));
    if (g.degree() == 1) {
        report.type = ReductionKind::Multiplicative; // node: double root
        report.conductor_exponent = 1;
    } else if (g.degree() == 2) {
        report.type = ReductionKind::Additive; // cusp: triple root
        report.conductor_exponent = 2;
    } else {
        throw DomainError("InternalError", "singular reduction with unexpected gcd degree");
    }
    return report;
}

std::int64_t trace_ap(const IntCurve& curve, std::int64_t p) {
    ReductionReport report = reduction_type(curve, p);
    if (report.type != ReductionKind::Good) {
        throw DomainError("BadReduction",
                          "a_p is defined only at good primes; " + std::to_string(p) + " is bad");
    }
    return *report.a_p;
}

SemistabilityReport semistability(const IntCurve& curve, std::int64_t p_bound, int jobs) {
    if (p_bound < 5) {
        throw DomainError("SmallPrime", "semistability range needs a bound >= 5");
    }
    if (p_bound > kPointCountBound) {
        throw BoundError("FieldTooLarge", "semistability bound exceeds 10^6");
    }
    std::vector<std::int64_t> primes;
    for (std::int64_t p = 5; p <= p_bound; ++p) {
        if (is_prime(p) && mod_i128(curve.discriminant(), p) == 0) primes.push_back(p);
    }
    std::vector<ReductionReport> reports = parallel_map<ReductionReport>(
        primes.size(), jobs, [&](std::size_t i) { return reduction_type(curve, primes[i]); });

    SemistabilityReport out;
    out.bad_primes = std::move(reports);
    out.semistable = std::none_of(out.bad_primes.begin(), out.bad_primes.end(),
                                  [](const ReductionReport& r) {
                                      return r.type == ReductionKind::Additive;
                                  });
    if (out.bad_primes.empty()) {
        out.conductor_part = "1";
    } else {
        std::string s;
        for (const auto& r : out.bad_primes) {
            if (!s.empty()) s += " * ";
            s += std::to_string(r.p);
            if (r.conductor_exponent > 1) s += "^" + std::to_string(r.conductor_exponent);
        }
        out.conductor_part = s;
    }
    return out;
}

std::vector<ApEntry> ap_series(const IntCurve& curve, std::int64_t p_max, int jobs) {
    if (p_max > kPointCountBound) {
        throw BoundError("FieldTooLarge", "a_p series bound exceeds 10^6");
    }
    std::vector<std::int64_t> primes;
    for (std::int64_t p = 5; p <= p_max; ++p) {
        if (is_prime(p)) primes.push_back(p);
    }
    return parallel_map<ApEntry>(primes.size(), jobs, [&](std::size_t i) {
        ReductionReport r = reduction_type(curve, primes[i]);
        ApEntry entry;
        entry.p = primes[i];
        if (r.type == ReductionKind::Good) {
            entry.a_p = r.a_p;
        } else {
            entry.bad_reduction = r.type;
        }
        return entry;
    });
}

std::string int128_to_string(__int128 v) {
    if (v == 0) return "0";
    bool neg = v < 0;
    unsigned __int128 u = neg ? static_cast<unsigned __int128>(-(v + 1)) + 1
                              : static_cast<unsigned __int128>(v);
    std::string digits;
    while (u > 0) {
        digits += static_cast<char>('0' + static_cast<int>(u % 10));
        u /= 10;
    }
    if (neg) digits += '-';
    std::reverse(digits.begin(), digits.end());
    return digits;
}

} // namespace ffkit
