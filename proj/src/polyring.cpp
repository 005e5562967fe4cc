#include "ffkit/polyring.hpp"

#include <algorithm>
#include <cctype>

namespace ffkit {

namespace {

void require_same_modulus(const Poly& a, const Poly& b) {
    if (a.p() != b.p()) {
        throw DomainError("ModulusMismatch",
                          "polynomials over F_" + std::to_string(a.p()) + " and F_" +
                              std::to_string(b.p()) + " cannot be combined");
    }
}

std::vector<std::int64_t> trimmed(std::vector<std::int64_t> c) {
    while (!c.empty() && c.back() == 0) c.pop_back();
    return c;
}

} // namespace

Poly::Poly(const PrimeField& field, std::vector<std::int64_t> coeffs) : field_(field) {
    c_.reserve(coeffs.size());
    for (std::int64_t v : coeffs) c_.push_back(field_.reduce(v));
    c_ = trimmed(std::move(c_));
}

Poly Poly::monomial(const PrimeField& field, std::int64_t coeff, std::size_t deg) {
    std::vector<std::int64_t> c(deg + 1, 0);
    c[deg] = coeff;
    return Poly(field, std::move(c));
}

Poly poly_add(const Poly& a, const Poly& b) {
    require_same_modulus(a, b);
    const PrimeField& F = a.field();
    std::vector<std::int64_t> c(std::max(a.coeffs().size(), b.coeffs().size()), 0);
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = F.add(a.coeff(i), b.coeff(i));
    return Poly(F, std::move(c));
}

Poly poly_sub(const Poly& a, const Poly& b) {
    require_same_modulus(a, b);
    const PrimeField& F = a.field();
    std::vector<std::int64_t> c(std::max(a.coeffs().size(), b.coeffs().size()), 0);
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = F.sub(a.coeff(i), b.coeff(i));
    return Poly(F, std::move(c));
}

Poly poly_neg(const Poly& a) {
    const PrimeField& F = a.field();
    std::vector<std::int64_t> c(a.coeffs());
    for (auto& v : c) v = F.neg(v);
    return Poly(F, std::move(c));
}

Poly poly_mul(const Poly& a, const Poly& b) {
    require_same_modulus(a, b);
    const PrimeField& F = a.field();
    if (a.is_zero() || b.is_zero()) return Poly::zero(F);
    std::vector<std::int64_t> c(a.coeffs().size() + b.coeffs().size() - 1, 0);
    for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
        std::int64_t ai = a.coeff(i);
        if (ai == 0) continue;
        for (std::size_t j = 0; j < b.coeffs().size(); ++j) {
            c[i + j] = F.add(c[i + j], F.mul(ai, b.coeff(j)));
        }
    }
    return Poly(F, std::move(c));
}

Poly poly_scale(const Poly& a, std::int64_t s) {
    const PrimeField& F = a.field();
    s = F.reduce(s);
    std::vector<std::int64_t> c(a.coeffs());
    for (auto& v : c) v = F.mul(v, s);
    return Poly(F, std::move(c));
}

Poly poly_monic(const Poly& a) {
    if (a.is_zero() || a.is_monic()) return a;
    return poly_scale(a, a.field().inv(a.leading()));
}

std::pair<Poly, Poly> poly_divmod(const Poly& num, const Poly& den) {
    require_same_modulus(num, den);
    const PrimeField& F = num.field();
    if (den.is_zero()) {
        throw DomainError("DivisionByZeroPoly", "division by the zero polynomial");
    }
    if (num.degree() < den.degree()) return {Poly::zero(F), num};

    std::vector<std::int64_t> r(num.coeffs());
    const std::size_t dd = static_cast<std::size_t>(den.degree());
    std::vector<std::int64_t> q(r.size() - dd, 0);
    const std::int64_t lead_inv = F.inv(den.leading());
    for (std::size_t i = r.size(); i-- > dd;) {
        std::int64_t factor = F.mul(r[i], lead_inv);
        if (factor == 0) continue;
        q[i - dd] = factor;
        for (std::size_t j = 0; j <= dd; ++j) {
            r[i - dd + j] = F.sub(r[i - dd + j], F.mul(factor, den.coeff(j)));
        }
    }
    return {Poly(F, std::move(q)), Poly(F, std::move(r))};
}

Poly poly_rem(const Poly& num, const Poly& den) { return poly_divmod(num, den).second; }

Poly poly_gcd(const Poly& a, const Poly& b) {
    require_same_modulus(a, b);
    if (a.is_zero() && b.is_zero()) {
        throw DomainError("BothZero", "gcd(0, 0) is undefined");
    }
    Poly r0 = a, r1 = b;
    while (!r1.is_zero()) {
        Poly r2 = poly_rem(r0, r1);
        r0 = r1;
        r1 = r2;
    }
    return poly_monic(r0);
}

PolyExtGcd poly_extgcd(const Poly& a, const Poly& b) {
    require_same_modulus(a, b);
    if (a.is_zero() && b.is_zero()) {
        throw DomainError("BothZero", "gcd(0, 0) is undefined");
    }
    const PrimeField& F = a.field();
    Poly r0 = a, r1 = b;
    Poly s0 = Poly::constant(F, 1), s1 = Poly::zero(F);
    Poly t0 = Poly::zero(F), t1 = Poly::constant(F, 1);
    while (!r1.is_zero()) {
        auto [q, r2] = poly_divmod(r0, r1);
        Poly s2 = poly_sub(s0, poly_mul(q, s1));
        Poly t2 = poly_sub(t0, poly_mul(q, t1));
        r0 = r1; r1 = r2;
        s0 = s1; s1 = s2;
        t0 = t1; t1 = t2;
    }
    // Normalize so the gcd is monic.
    std::int64_t lead = r0.leading();
    if (lead != 0 && lead != 1) {
        std::int64_t inv = F.inv(lead);
        r0 = poly_scale(r0, inv);
        s0 = poly_scale(s0, inv);
        t0 = poly_scale(t0, inv);
    }
    return {r0, s0, t0};
}

Poly poly_derivative(const Poly& a) {
    const PrimeField& F = a.field();
    if (a.degree() < 1) return Poly::zero(F);
    std::vector<std::int64_t> c(static_cast<std::size_t>(a.degree()), 0);
    for (std::size_t i = 1; i < a.coeffs().size(); ++i) {
        c[i - 1] = F.mul(a.coeff(i), F.reduce(static_cast<std::int64_t>(i)));
    }
    return Poly(F, std::move(c));
}

std::int64_t poly_eval(const Poly& a, std::int64_t x) {
    const PrimeField& F = a.field();
    x = F.reduce(x);
    std::int64_t acc = 0;
    for (std::size_t i = a.coeffs().size(); i-- > 0;) {
        acc = F.add(F.mul(acc, x), a.coeff(i));
    }
    return acc;
}

Poly poly_powmod(const Poly& base, std::uint64_t e, const Poly& mod) {
    require_same_modulus(base, mod);
    const PrimeField& F = base.field();
    if (mod.is_zero()) {
        throw DomainError("DivisionByZeroPoly", "reduction modulo the zero polynomial");
    }
    Poly result = poly_rem(Poly::constant(F, 1), mod);
    Poly b = poly_rem(base, mod);
    while (e > 0) {
        if (e & 1) result = poly_rem(poly_mul(result, b), mod);
        b = poly_rem(poly_mul(b, b), mod);
        e >>= 1;
    }
    return result;
}

Poly poly_shift(const Poly& a, std::int64_t t) {
    const PrimeField& F = a.field();
    t = F.reduce(t);
    if (t == 0 || a.is_zero()) return a;
    // Repeated synthetic division by (x - (-t)) yields the Taylor
    // coefficients of a(x + t).
    std::vector<std::int64_t> work(a.coeffs());
    std::vector<std::int64_t> out(work.size(), 0);
    for (std::size_t k = 0; k < out.size(); ++k) {
        // Divide work by (x - t'): remainder is work evaluated at t' = t.
        std::int64_t rem = 0;
        for (std::size_t i = work.size(); i-- > 0;) {
            std::int64_t next = F.add(F.mul(rem, t), work[i]);
            work[i] = rem;
            rem = next;
        }
        out[k] = rem;
        // The quotient occupies work[0..size-2]; the top slot is spent.
        if (!work.empty()) work.pop_back();
    }
    return Poly(F, std::move(out));
}

bool is_irreducible(const Poly& f) {
    if (f.degree() < 1) {
        throw DomainError("ConstantPolynomial", "irreducibility needs degree >= 1");
    }
    const PrimeField& F = f.field();
    const int deg = f.degree();
    if (deg == 1) return true;

    const Poly x = poly_rem(Poly::x(F), f);
    Poly h = x; // x^(p^k) mod f, advanced one Frobenius step per round
    for (int k = 1; k <= deg / 2; ++k) {
        h = poly_powmod(h, static_cast<std::uint64_t>(F.p()), f);
        Poly g = poly_gcd(f, poly_sub(h, x));
        if (g.degree() != 0) return false;
    }
    return true;
}

Poly find_irreducible(const PrimeField& field, std::size_t n) {
    const std::int64_t p = field.p();
    // Candidates are monic of degree n; iterate coefficient vectors
    // (c0, ..., c_{n-1}) in lexicographic order, c_{n-1} varying fastest.
    std::vector<std::int64_t> c(n, 0);
    for (;;) {
        std::vector<std::int64_t> coeffs(c);
        coeffs.push_back(1);
        Poly f(field, std::move(coeffs));
        if (is_irreducible(f)) return f;
        // Increment the lex counter.
        std::size_t i = n;
        while (i-- > 0) {
            if (++c[i] < p) break;
            c[i] = 0;
            if (i == 0) {
                // Exhausted; unreachable, an irreducible of every degree exists.
                throw DomainError("NoIrreducible", "no irreducible polynomial found");
            }
        }
    }
}

std::string poly_to_text(const Poly& a) {
    if (a.is_zero()) return "0";
    std::string out;
    for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
        std::int64_t ci = a.coeff(i);
        if (ci == 0) continue;
        if (!out.empty()) out += " + ";
        out += std::to_string(ci);
        if (i == 1) {
            out += "*x";
        } else if (i >= 2) {
            out += "*x^" + std::to_string(i);
        }
    }
    return out;
}

Poly poly_from_text(const PrimeField& field, std::string_view text) {
    std::vector<std::int64_t> coeffs;
    std::size_t pos = 0;
    auto fail = [&]() -> void {
        throw DomainError("PolyParse", "cannot parse polynomial: " + std::string(text));
    };
    auto skip_ws = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    auto read_int = [&]() -> std::int64_t {
        std::size_t start = pos;
        if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == start || (pos == start + 1 && !std::isdigit(static_cast<unsigned char>(text[start])))) fail();
        return std::stoll(std::string(text.substr(start, pos - start)));
    };

    bool first = true;
    for (;;) {
        skip_ws();
        if (pos >= text.size()) {
            if (first) fail();
            break;
        }
        std::int64_t sign = 1;
        if (!first) {
            if (text[pos] == '+') {
                ++pos;
            } else if (text[pos] == '-') {
                sign = -1;
                ++pos;
            } else {
                fail();
            }
            skip_ws();
        } else if (text[pos] == '-') {
            sign = -1;
            ++pos;
            skip_ws();
        }

        std::int64_t coeff = 1;
        bool have_coeff = false;
        if (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            coeff = read_int();
            have_coeff = true;
            skip_ws();
            if (pos < text.size() && text[pos] == '*') {
                ++pos;
                skip_ws();
            }
        }
        std::size_t deg = 0;
        if (pos < text.size() && text[pos] == 'x') {
            ++pos;
            deg = 1;
            skip_ws();
            if (pos < text.size() && text[pos] == '^') {
                ++pos;
                skip_ws();
                std::int64_t d = read_int();
                if (d < 0 || d > 64) fail();
                deg = static_cast<std::size_t>(d);
            }
        } else if (!have_coeff) {
            fail();
        }
        if (coeffs.size() < deg + 1) coeffs.resize(deg + 1, 0);
        coeffs[deg] += sign * coeff;
        first = false;
    }
    return Poly(field, std::move(coeffs));
}

} // namespace ffkit
