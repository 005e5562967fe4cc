#include "oracles.hpp"

using namespace ffkit;

namespace oracle {

std::int64_t fermat_count(std::int64_t p, std::int64_t n) {
    auto powmod = [&](std::int64_t base, std::int64_t e) {
        std::int64_t r = 1 % p;
        base %= p;
        for (std::int64_t i = 0; i < e; ++i) r = (r * base) % p;
        return r;
    };
    std::int64_t count = 0;
    for (std::int64_t x = 1; x < p; ++x) {
        for (std::int64_t y = 1; y < p; ++y) {
            for (std::int64_t z = 1; z < p; ++z) {
                if ((powmod(x, n) + powmod(y, n)) % p == powmod(z, n)) ++count;
            }
        }
    }
    return count;
}

std::int64_t fermat_count_field(const FieldPtr& field, std::int64_t n) {
    const std::int64_t q = field->q();
    auto pow_rep = [&](GFElement e) {
        GFElement r = field->one();
        for (std::int64_t i = 0; i < n; ++i) r = r * e;
        return r;
    };
    std::vector<GFElement> powers;
    powers.push_back(field->zero()); // placeholder for index 0
    for (std::int64_t i = 1; i < q; ++i) powers.push_back(pow_rep(field->element(i)));
    std::int64_t count = 0;
    for (std::int64_t x = 1; x < q; ++x) {
        for (std::int64_t y = 1; y < q; ++y) {
            GFElement sum = powers[static_cast<std::size_t>(x)] + powers[static_cast<std::size_t>(y)];
            for (std::int64_t z = 1; z < q; ++z) {
                if (sum == powers[static_cast<std::size_t>(z)]) ++count;
            }
        }
    }
    return count;
}

bool is_prime_naive(std::int64_t m) {
    if (m < 2) return false;
    for (std::int64_t d = 2; d < m; ++d) {
        if (m % d == 0) return false;
    }
    return true;
}

int legendre_naive(std::int64_t a, std::int64_t p) {
    a %= p;
    if (a < 0) a += p;
    if (a == 0) return 0;
    for (std::int64_t y = 1; y < p; ++y) {
        if ((y * y) % p == a) return 1;
    }
    return -1;
}

bool irreducible_naive(const Poly& f) {
    const std::int64_t p = f.p();
    const int deg = f.degree();
    if (deg <= 1) return deg == 1;
    PrimeField F(p);
    for (int d = 1; d < deg; ++d) {
        std::int64_t total = 1;
        for (int i = 0; i < d; ++i) total *= p;
        for (std::int64_t idx = 0; idx < total; ++idx) {
            std::vector<std::int64_t> c;
            std::int64_t v = idx;
            for (int i = 0; i < d; ++i) {
                c.push_back(v % p);
                v /= p;
            }
            c.push_back(1);
            if (poly_rem(f, Poly(F, c)).is_zero()) return false;
        }
    }
    return true;
}

std::vector<CurvePoint> curve_points_naive(const Curve& curve) {
    const FieldPtr& field = curve.field();
    std::vector<CurvePoint> pts;
    pts.push_back(CurvePoint::infinity());
    for (std::int64_t i = 0; i < field->q(); ++i) {
        GFElement x = field->element(i);
        GFElement rhs = curve.rhs(x);
        for (std::int64_t j = 0; j < field->q(); ++j) {
            GFElement y = field->element(j);
            if (y * y == rhs) pts.push_back(CurvePoint::affine(x, y));
        }
    }
    return pts;
}

std::int64_t point_order_naive(const Curve& curve, const CurvePoint& P) {
    if (P.is_infinity()) return 1;
    std::int64_t order = 1;
    CurvePoint acc = P;
    while (!acc.is_infinity()) {
        acc = group_law(curve, acc, P);
        ++order;
    }
    return order;
}

std::int64_t torsion_count_naive(const Curve& curve, std::int64_t m) {
    std::int64_t count = 0;
    for (const CurvePoint& P : curve_points_naive(curve)) {
        CurvePoint acc = CurvePoint::infinity();
        for (std::int64_t i = 0; i < m; ++i) acc = group_law(curve, acc, P);
        if (acc.is_infinity()) ++count;
    }
    return count;
}

namespace {

__int128 det(std::vector<std::vector<__int128>> m) {
    const std::size_t n = m.size();
    if (n == 1) return m[0][0];
    __int128 total = 0;
    int sign = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::vector<std::vector<__int128>> minor;
        for (std::size_t r = 1; r < n; ++r) {
            std::vector<__int128> row;
            for (std::size_t c = 0; c < n; ++c) {
                if (c != col) row.push_back(m[r][c]);
            }
            minor.push_back(std::move(row));
        }
        total += sign * m[0][col] * det(std::move(minor));
        sign = -sign;
    }
    return total;
}

} // namespace

__int128 cubic_disc_resultant(std::int64_t b, std::int64_t c, std::int64_t d) {
    // Sylvester matrix of f = x^3 + bx^2 + cx + d and f' = 3x^2 + 2bx + c.
    std::vector<std::vector<__int128>> m = {
        {1, b, c, d, 0},
        {0, 1, b, c, d},
        {3, 2 * b, c, 0, 0},
        {0, 3, 2 * b, c, 0},
        {0, 0, 3, 2 * b, c},
    };
    return -det(std::move(m));
}

} // namespace oracle
