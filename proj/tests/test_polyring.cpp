#include <doctest.h>

#include <random>

#include "ffkit/polyring.hpp"
#include "oracles.hpp"
#include "test_util.hpp"

using namespace ffkit;
using testutil::error_code;

namespace {

Poly from_text(std::int64_t p, const char* text) {
    return poly_from_text(PrimeField(p), text);
}

Poly random_poly(const PrimeField& F, int max_deg, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> deg_dist(0, max_deg);
    std::uniform_int_distribution<std::int64_t> coeff_dist(0, F.p() - 1);
    int deg = deg_dist(rng);
    std::vector<std::int64_t> c(static_cast<std::size_t>(deg) + 1);
    for (auto& v : c) v = coeff_dist(rng);
    return Poly(F, std::move(c));
}

} // namespace

TEST_CASE("canonical form and text round-trip") {
    PrimeField f5(5);
    Poly a(f5, {1, 0, 2, 0, 0});
    CHECK(a.degree() == 2);
    CHECK(a.coeffs() == std::vector<std::int64_t>{1, 0, 2});
    CHECK(Poly(f5, {0, 0}).is_zero());
    CHECK(Poly(f5, {5, 10}).is_zero());
    CHECK(poly_to_text(a) == "1 + 2*x^2");
    CHECK(poly_to_text(Poly::zero(f5)) == "0");
    CHECK(poly_to_text(Poly::x(f5)) == "1*x");
    CHECK(poly_from_text(f5, "1 + 2*x^2") == a);
    CHECK(poly_from_text(f5, "x^2 + x + 1") == Poly(f5, {1, 1, 1}));
    CHECK(poly_from_text(f5, "0") == Poly::zero(f5));
    CHECK(poly_from_text(f5, "3x") == Poly(f5, {0, 3}));
    CHECK(poly_from_text(f5, "x^2 - 1") == Poly(f5, {4, 0, 1}));
}

TEST_CASE("divmod examples") {
    PrimeField f5(5);
    // (x^6 - 1) / (x^2 - 1) = x^4 + x^2 + 1 exactly (m | n case of the
    // divisibility theorem)
    auto [q1, r1] = poly_divmod(from_text(5, "x^6 - 1"), from_text(5, "x^2 - 1"));
    CHECK(q1 == from_text(5, "x^4 + x^2 + 1"));
    CHECK(r1.is_zero());

    auto [q2, r2] = poly_divmod(from_text(5, "x^3"), from_text(5, "x^3"));
    CHECK(q2 == Poly::constant(f5, 1));
    CHECK(r2.is_zero());

    auto [q3, r3] = poly_divmod(from_text(5, "x^3 - 1"), from_text(5, "x^2 - 1"));
    CHECK(q3 == Poly::x(f5));
    CHECK(r3 == from_text(5, "x - 1"));
    // multiply back
    CHECK(poly_add(poly_mul(q3, from_text(5, "x^2 - 1")), r3) == from_text(5, "x^3 - 1"));

    CHECK(error_code([&] { poly_divmod(Poly::x(f5), Poly::zero(f5)); }) == "DivisionByZeroPoly");
}

TEST_CASE("divmod round-trip on random pairs") {
    std::mt19937_64 rng(20260810);
    for (std::int64_t p : {2, 3, 5, 7}) {
        PrimeField F(p);
        int done = 0;
        while (done < 125) {
            Poly num = random_poly(F, 8, rng);
            Poly den = random_poly(F, 8, rng);
            if (den.is_zero()) continue;
            auto [q, r] = poly_divmod(num, den);
            CHECK(poly_add(poly_mul(q, den), r) == num);
            CHECK(r.degree() < den.degree());
            ++done;
        }
    }
}

TEST_CASE("gcd examples") {
    PrimeField f5(5);
    CHECK(poly_gcd(from_text(5, "x^2 - 1"), from_text(5, "x^3 - 1")) == from_text(5, "x - 1"));
    Poly f = from_text(5, "2*x^2 + 2");
    CHECK(poly_gcd(f, f) == poly_monic(f));
    CHECK(poly_gcd(f, Poly::zero(f5)) == poly_monic(f));
    CHECK(error_code([&] { poly_gcd(Poly::zero(f5), Poly::zero(f5)); }) == "BothZero");
}

TEST_CASE("x^(p^n) - x is squarefree: gcd with derivative is 1") {
    for (auto [p, n] : {std::pair<std::int64_t, int>{2, 4}, {3, 3}, {5, 3}, {7, 2}}) {
        PrimeField F(p);
        std::int64_t q = 1;
        for (int i = 0; i < n; ++i) q *= p;
        std::vector<std::int64_t> c(static_cast<std::size_t>(q) + 1, 0);
        c[1] = p - 1; // -x
        c[static_cast<std::size_t>(q)] = 1;
        Poly f(F, std::move(c));
        CHECK(poly_derivative(f) == Poly::constant(F, -1));
        CHECK(poly_gcd(f, poly_derivative(f)) == Poly::constant(F, 1));
    }
}

TEST_CASE("extended gcd produces Bezout cofactors") {
    std::mt19937_64 rng(7);
    PrimeField F(7);
    for (int i = 0; i < 200; ++i) {
        Poly a = random_poly(F, 6, rng);
        Poly b = random_poly(F, 6, rng);
        if (a.is_zero() && b.is_zero()) continue;
        auto ext = poly_extgcd(a, b);
        CHECK(poly_add(poly_mul(ext.u, a), poly_mul(ext.v, b)) == ext.g);
    }
}

TEST_CASE("irreducibility examples") {
    CHECK(is_irreducible(from_text(2, "x^2 + x + 1")));
    CHECK(is_irreducible(from_text(3, "x^2 + 1")));
    CHECK_FALSE(is_irreducible(from_text(2, "x^2 + 1"))); // (x+1)^2
    PrimeField f3(3);
    CHECK(error_code([&] { is_irreducible(Poly::constant(f3, 2)); }) == "ConstantPolynomial");
}

TEST_CASE("irreducibility agrees with trial division, deg <= 4") {
    for (std::int64_t p : {2, 3}) {
        PrimeField F(p);
        for (int deg = 1; deg <= 4; ++deg) {
            std::int64_t total = 1;
            for (int i = 0; i < deg; ++i) total *= p;
            for (std::int64_t idx = 0; idx < total; ++idx) {
                std::vector<std::int64_t> c;
                std::int64_t v = idx;
                for (int i = 0; i < deg; ++i) {
                    c.push_back(v % p);
                    v /= p;
                }
                c.push_back(1);
                Poly f(F, c);
                CHECK(is_irreducible(f) == oracle::irreducible_naive(f));
            }
        }
    }
}

TEST_CASE("canonical irreducible search") {
    CHECK(find_irreducible(PrimeField(2), 2) == from_text(2, "x^2 + x + 1"));
    CHECK(find_irreducible(PrimeField(2), 1) == from_text(2, "x"));
    CHECK(find_irreducible(PrimeField(3), 2) == from_text(3, "x^2 + 1"));
    // constant term of any irreducible of degree >= 2 is nonzero
    for (std::int64_t p : {2, 3, 5}) {
        for (std::size_t n = 2; n <= 4; ++n) {
            Poly f = find_irreducible(PrimeField(p), n);
            CHECK(f.is_monic());
            CHECK(f.degree() == static_cast<int>(n));
            CHECK(f.coeff(0) != 0);
        }
    }
}

TEST_CASE("(x^m - 1) | (x^n - 1) iff m | n") {
    for (std::int64_t p : {2, 3, 5}) {
        PrimeField F(p);
        for (int m = 1; m <= 12; ++m) {
            std::vector<std::int64_t> cm(static_cast<std::size_t>(m) + 1, 0);
            cm[0] = p - 1;
            cm[static_cast<std::size_t>(m)] = 1;
            Poly fm(F, cm);
            for (int n = 1; n <= 12; ++n) {
                std::vector<std::int64_t> cn(static_cast<std::size_t>(n) + 1, 0);
                cn[0] = p - 1;
                cn[static_cast<std::size_t>(n)] = 1;
                Poly fn(F, cn);
                CHECK(poly_rem(fn, fm).is_zero() == (n % m == 0));
            }
        }
    }
}

TEST_CASE("count of monic irreducible quadratics is (p^2 - p)/2") {
    for (std::int64_t p : {2, 3, 5}) {
        PrimeField F(p);
        std::int64_t count = 0, count_naive = 0;
        for (std::int64_t c0 = 0; c0 < p; ++c0) {
            for (std::int64_t c1 = 0; c1 < p; ++c1) {
                Poly f(F, {c0, c1, 1});
                if (is_irreducible(f)) ++count;
                if (oracle::irreducible_naive(f)) ++count_naive;
            }
        }
        CHECK(count == (p * p - p) / 2);
        CHECK(count == count_naive);
    }
}

TEST_CASE("taylor shift") {
    PrimeField f7(7);
    // f(x) = x^3 + 1, f(x + 2) = x^3 + 6x^2 + 12x + 9
    Poly f = from_text(7, "x^3 + 1");
    Poly shifted = poly_shift(f, 2);
    CHECK(shifted == from_text(7, "x^3 + 6*x^2 + 5*x + 2"));
    for (std::int64_t x = 0; x < 7; ++x) {
        CHECK(poly_eval(shifted, x) == poly_eval(f, f7.add(f7.reduce(x), 2)));
    }
}
