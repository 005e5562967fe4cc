#include "ffkit/galois.hpp"

#include <fstream>

#include <json.hpp>

namespace ffkit {

namespace {

constexpr std::int64_t kEnumerationBound = 1'000'000; // exhaustive-scan limit

void require_same_field(const GFElement& a, const GFElement& b) {
    if (!a.field()->same_as(*b.field())) {
        throw DomainError("FieldMismatch", "elements belong to different fields");
    }
}

} // namespace

// ---------------------------------------------------------------------------
// ModulusCache

ModulusCache::ModulusCache(std::filesystem::path path) : path_(std::move(path)) {
    std::ifstream in(path_);
    if (!in.good()) return;
    nlohmann::json doc = nlohmann::json::parse(in, nullptr, /*allow_exceptions=*/false);
    if (!doc.is_object()) return; // unreadable cache: start empty, entries recompute
    for (auto& [key, value] : doc.items()) {
        if (value.is_string()) entries_[key] = value.get<std::string>();
    }
}

std::optional<std::string> ModulusCache::lookup(std::int64_t p, std::size_t n) const {
    auto it = entries_.find(std::to_string(p) + ":" + std::to_string(n));
    if (it == entries_.end()) return std::nullopt;
    return it->second;
}

void ModulusCache::store(std::int64_t p, std::size_t n, const std::string& poly_text) {
    entries_[std::to_string(p) + ":" + std::to_string(n)] = poly_text;
}

void ModulusCache::save() const {
    nlohmann::json doc(entries_);
    std::filesystem::path tmp = path_;
    tmp += ".tmp";
    if (path_.has_parent_path()) {
        std::filesystem::create_directories(path_.parent_path());
    }
    {
        std::ofstream out(tmp, std::ios::trunc);
        if (!out.good()) {
            throw DomainError("IoFailure", "cannot write modulus cache " + tmp.string());
        }
        out << doc.dump(2) << '\n';
    }
    std::filesystem::rename(tmp, path_);
}

// ---------------------------------------------------------------------------
// Field

Field::Field(PrimeField base, std::size_t n, Poly modulus, std::int64_t q)
    : base_(base), n_(n), modulus_(std::move(modulus)), q_(q) {}

namespace {

std::int64_t checked_power(std::int64_t p, std::size_t n) {
    std::int64_t q = 1;
    for (std::size_t i = 0; i < n; ++i) {
        if (q > (std::int64_t{1} << 62) / p) {
            throw BoundError("FieldTooLarge", "p^n exceeds the representable range");
        }
        q *= p;
    }
    return q;
}

} // namespace

FieldPtr Field::make(std::int64_t p, std::size_t n, ModulusCache* cache) {
    PrimeField base(p);
    if (n < 1) throw DomainError("DegreeMismatch", "extension degree must be >= 1");
    std::int64_t q = checked_power(p, n);

    if (cache != nullptr) {
        if (auto text = cache->lookup(p, n)) {
            Poly f = poly_from_text(base, *text);
            if (f.degree() == static_cast<int>(n) && f.is_monic() && is_irreducible(f)) {
                return FieldPtr(new Field(base, n, std::move(f), q));
            }
            // Invalid entry: fall through and recompute.
        }
    }
    Poly f = find_irreducible(base, n);
    if (cache != nullptr) cache->store(p, n, poly_to_text(f));
    return FieldPtr(new Field(base, n, std::move(f), q));
}

FieldPtr Field::make(std::int64_t p, std::size_t n, const Poly& modulus) {
    PrimeField base(p);
    if (n < 1) throw DomainError("DegreeMismatch", "extension degree must be >= 1");
    std::int64_t q = checked_power(p, n);
    if (modulus.p() != p) {
        throw DomainError("ModulusMismatch", "modulus is over a different prime field");
    }
    if (modulus.degree() != static_cast<int>(n)) {
        throw DomainError("DegreeMismatch", "modulus degree " + std::to_string(modulus.degree()) +
                                                " does not match extension degree " + std::to_string(n));
    }
    if (!modulus.is_monic()) {
        throw DomainError("NotMonic", "modulus must be monic");
    }
    if (!is_irreducible(modulus)) {
        throw DomainError("ReduciblePolynomial", "modulus " + poly_to_text(modulus) +
                                                     " is reducible over F_" + std::to_string(p));
    }
    return FieldPtr(new Field(base, n, modulus, q));
}

Field::Element Field::zero() const { return from_coeffs({}); }
Field::Element Field::one() const { return from_coeffs({1}); }
Field::Element Field::from_int(std::int64_t c) const { return from_coeffs({base_.reduce(c)}); }

Field::Element Field::from_coeffs(std::vector<std::int64_t> coeffs) const {
    coeffs.resize(n_, 0);
    return Element(shared_from_this(), std::move(coeffs));
}

Field::Element Field::element(std::int64_t index) const {
    std::vector<std::int64_t> c(n_, 0);
    for (std::size_t j = 0; j < n_ && index > 0; ++j) {
        c[j] = index % p();
        index /= p();
    }
    return Element(shared_from_this(), std::move(c));
}

std::int64_t Field::index(const Element& a) const {
    std::int64_t idx = 0;
    for (std::size_t j = n_; j-- > 0;) idx = idx * p() + a.coeff(j);
    return idx;
}

std::int64_t Field::lex_rank(const Element& a) const {
    std::int64_t r = 0;
    for (std::size_t j = 0; j < n_; ++j) r = r * p() + a.coeff(j);
    return r;
}

Field::Element Field::element_by_lex_rank(std::int64_t rank) const {
    std::vector<std::int64_t> c(n_, 0);
    for (std::size_t j = n_; j-- > 0;) {
        c[j] = rank % p();
        rank /= p();
    }
    // Digits were produced least-significant-first over reversed positions,
    // so c[0] now holds the most significant digit as lex order requires.
    return Element(shared_from_this(), std::move(c));
}

// ---------------------------------------------------------------------------
// Element

Field::Element::Element(FieldPtr field, std::vector<std::int64_t> coeffs)
    : field_(std::move(field)), c_(std::move(coeffs)) {
    c_.resize(field_->degree(), 0);
    for (auto& v : c_) v = field_->base().reduce(v);
}

bool Field::Element::is_zero() const noexcept {
    for (std::int64_t v : c_)
        if (v != 0) return false;
    return true;
}

bool Field::Element::is_one() const noexcept {
    if (c_.empty() || c_[0] != 1) return false;
    for (std::size_t i = 1; i < c_.size(); ++i)
        if (c_[i] != 0) return false;
    return true;
}

GFElement gf_add(const GFElement& a, const GFElement& b) {
    require_same_field(a, b);
    const PrimeField& F = a.field()->base();
    std::vector<std::int64_t> c(a.coeffs());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = F.add(c[i], b.coeff(i));
    return GFElement(a.field(), std::move(c));
}

GFElement gf_sub(const GFElement& a, const GFElement& b) {
    require_same_field(a, b);
    const PrimeField& F = a.field()->base();
    std::vector<std::int64_t> c(a.coeffs());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = F.sub(c[i], b.coeff(i));
    return GFElement(a.field(), std::move(c));
}

GFElement gf_neg(const GFElement& a) {
    const PrimeField& F = a.field()->base();
    std::vector<std::int64_t> c(a.coeffs());
    for (auto& v : c) v = F.neg(v);
    return GFElement(a.field(), std::move(c));
}

GFElement gf_mul(const GFElement& a, const GFElement& b) {
    require_same_field(a, b);
    const Field& K = *a.field();
    const PrimeField& F = K.base();
    const std::size_t n = K.degree();
    if (n == 1) {
        return GFElement(a.field(), {F.mul(a.coeff(0), b.coeff(0))});
    }
    // Schoolbook product, then fold degrees >= n down through the monic
    // modulus: x^i = -(lower modulus terms) * x^(i-n).
    std::vector<std::int64_t> prod(2 * n - 1, 0);
    for (std::size_t i = 0; i < n; ++i) {
        std::int64_t ai = a.coeff(i);
        if (ai == 0) continue;
        for (std::size_t j = 0; j < n; ++j) {
            prod[i + j] = F.add(prod[i + j], F.mul(ai, b.coeff(j)));
        }
    }
    const Poly& m = K.modulus();
    for (std::size_t i = 2 * n - 2; i >= n; --i) {
        std::int64_t top = prod[i];
        if (top != 0) {
            prod[i] = 0;
            for (std::size_t j = 0; j < n; ++j) {
                prod[i - n + j] = F.sub(prod[i - n + j], F.mul(top, m.coeff(j)));
            }
        }
        if (i == n) break;
    }
    prod.resize(n);
    return GFElement(a.field(), std::move(prod));
}

GFElement gf_inv(const GFElement& a) {
    const Field& K = *a.field();
    if (a.is_zero()) {
        throw DomainError("ZeroInverse", "0 has no inverse in GF(" + std::to_string(K.q()) + ")");
    }
    if (K.degree() == 1) {
        return GFElement(a.field(), {K.base().inv(a.coeff(0))});
    }
    Poly ap(K.base(), a.coeffs());
    auto ext = poly_extgcd(ap, K.modulus());
    // gcd is 1 since the modulus is irreducible and a != 0.
    Poly u = poly_rem(ext.u, K.modulus());
    return K.from_coeffs(u.coeffs());
}

GFElement gf_pow(const GFElement& a, std::uint64_t e) {
    GFElement result = a.field()->one();
    GFElement base = a;
    while (e > 0) {
        if (e & 1) result = gf_mul(result, base);
        base = gf_mul(base, base);
        e >>= 1;
    }
    return result;
}

GFElement frobenius(const GFElement& a, std::size_t k) {
    const Field& K = *a.field();
    k %= K.degree(); // a^(p^n) = a, so Frobenius has period n
    std::uint64_t e = 1;
    for (std::size_t i = 0; i < k; ++i) e *= static_cast<std::uint64_t>(K.p());
    return gf_pow(a, e);
}

std::vector<std::pair<std::int64_t, int>> factorize(std::int64_t m) {
    std::vector<std::pair<std::int64_t, int>> out;
    for (std::int64_t d = 2; d * d <= m; d == 2 ? d = 3 : d += 2) {
        if (m % d == 0) {
            int e = 0;
            while (m % d == 0) {
                m /= d;
                ++e;
            }
            out.emplace_back(d, e);
        }
    }
    if (m > 1) out.emplace_back(m, 1);
    return out;
}

std::int64_t element_order(const GFElement& a) {
    if (a.is_zero()) {
        throw DomainError("ZeroElement", "0 has no multiplicative order");
    }
    const std::int64_t group = a.field()->q() - 1;
    std::int64_t t = group;
    for (auto [r, e] : factorize(group)) {
        (void)e;
        while (t % r == 0 && gf_pow(a, static_cast<std::uint64_t>(t / r)).is_one()) {
            t /= r;
        }
    }
    return t;
}

GFElement primitive_element(const FieldPtr& field) {
    const std::int64_t group = field->q() - 1;
    auto factors = factorize(group);
    for (std::int64_t rank = 0; rank < field->q(); ++rank) {
        GFElement cand = field->element_by_lex_rank(rank);
        if (cand.is_zero()) continue;
        bool generator = true;
        for (auto [r, e] : factors) {
            (void)e;
            if (gf_pow(cand, static_cast<std::uint64_t>(group / r)).is_one()) {
                generator = false;
                break;
            }
        }
        if (generator) return cand;
    }
    // Unreachable: the multiplicative group is cyclic.
    throw DomainError("NoPrimitiveElement", "no generator found");
}

bool subfield_member(const GFElement& a, std::size_t m) {
    const Field& K = *a.field();
    if (m < 1 || m > K.degree()) {
        throw DomainError("DegreeMismatch", "subfield degree out of range");
    }
    std::uint64_t e = 1;
    for (std::size_t i = 0; i < m; ++i) e *= static_cast<std::uint64_t>(K.p());
    return gf_pow(a, e) == a;
}

bool splitting_check(const FieldPtr& field) {
    if (field->q() > kEnumerationBound) {
        throw BoundError("FieldTooLarge", "splitting check is exhaustive; q <= 10^6 required");
    }
    for (std::int64_t i = 0; i < field->q(); ++i) {
        GFElement b = field->element(i);
        if (!(gf_pow(b, static_cast<std::uint64_t>(field->q())) == b)) return false;
    }
    return true;
}

std::vector<std::int64_t> translation_map(const GFElement& x0, const GFElement& y0) {
    require_same_field(x0, y0);
    if (x0.is_zero()) {
        throw DomainError("ZeroSource", "translation source must be nonzero");
    }
    const Field& K = *x0.field();
    if (K.q() > kEnumerationBound) {
        throw BoundError("FieldTooLarge", "translation table is exhaustive; q <= 10^6 required");
    }
    GFElement t = gf_mul(y0, gf_inv(x0));
    std::vector<std::int64_t> perm(static_cast<std::size_t>(K.q()), 0);
    for (std::int64_t i = 0; i < K.q(); ++i) {
        perm[static_cast<std::size_t>(i)] = K.index(gf_mul(t, K.element(i)));
    }
    return perm;
}

std::string element_to_text(const GFElement& a) {
    return poly_to_text(Poly(a.field()->base(), a.coeffs()));
}

int quadratic_character(const GFElement& a) {
    const Field& K = *a.field();
    if (K.p() == 2) {
        throw DomainError("EvenModulus", "quadratic character needs odd characteristic");
    }
    if (a.is_zero()) return 0;
    return gf_pow(a, static_cast<std::uint64_t>((K.q() - 1) / 2)).is_one() ? 1 : -1;
}

} // namespace ffkit
