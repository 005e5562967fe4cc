#include "ffkit/fermat.hpp"

#include <algorithm>
#include <numeric>

#include "ffkit/parallel.hpp"

namespace ffkit {

namespace {

constexpr std::int64_t kExhaustiveFieldBound = 512;

} // namespace

SurveyRecord count_solutions(const FieldPtr& field, std::int64_t n) {
    if (n < 1) {
        throw DomainError("ExponentOutOfRange", "exponent must be >= 1");
    }
    const std::int64_t q = field->q();
    if (q > kExhaustiveFieldBound) {
        throw BoundError("FieldTooLarge",
                         "exhaustive solution counting requires q <= " +
                             std::to_string(kExhaustiveFieldBound));
    }

    // Multiplicity of each value among { e^n : e nonzero }, indexed by the
    // field's element index. The nonzero n-th powers form the subgroup of
    // index gcd(n, q-1), each value hit gcd(n, q-1) times.
    std::vector<std::int64_t> mult(static_cast<std::size_t>(q), 0);
    std::vector<GFElement> elems;
    elems.reserve(static_cast<std::size_t>(q));
    for (std::int64_t i = 0; i < q; ++i) elems.push_back(field->element(i));
    for (std::int64_t i = 1; i < q; ++i) {
        GFElement power = gf_pow(elems[static_cast<std::size_t>(i)], static_cast<std::uint64_t>(n));
        ++mult[static_cast<std::size_t>(field->index(power))];
    }

    std::int64_t count = 0;
    for (std::int64_t u = 0; u < q; ++u) {
        if (mult[static_cast<std::size_t>(u)] == 0) continue;
        for (std::int64_t v = 0; v < q; ++v) {
            if (mult[static_cast<std::size_t>(v)] == 0) continue;
            std::int64_t w = field->index(
                gf_add(elems[static_cast<std::size_t>(u)], elems[static_cast<std::size_t>(v)]));
            count += mult[static_cast<std::size_t>(u)] * mult[static_cast<std::size_t>(v)] *
                     mult[static_cast<std::size_t>(w)];
        }
    }

    SurveyRecord rec;
    rec.p = field->p();
    rec.ext_deg = field->degree();
    rec.q = q;
    rec.n = n;
    rec.gcd_class = std::gcd(n, q - 1);
    rec.nontrivial_count = count;
    rec.flt_holds = (count == 0);
    return rec;
}

bool flt_holds(const FieldPtr& field, std::int64_t n) {
    return count_solutions(field, n).flt_holds;
}

std::vector<SurveyRecord> survey(std::int64_t p_max, std::size_t ext_deg,
                                 std::optional<std::int64_t> n_max, int jobs) {
    if (p_max < 2) return {};
    if (ext_deg < 1) {
        throw DomainError("DegreeMismatch", "extension degree must be >= 1");
    }
    // Validate every field bound up front; no partial surveys.
    std::vector<std::int64_t> primes;
    for (std::int64_t p = 2; p <= p_max; ++p) {
        if (is_prime(p)) primes.push_back(p);
    }
    for (std::int64_t p : primes) {
        std::int64_t q = 1;
        for (std::size_t i = 0; i < ext_deg; ++i) q *= p;
        if (q > kExhaustiveFieldBound) {
            throw BoundError("FieldTooLarge",
                             "survey cell GF(" + std::to_string(p) + "^" + std::to_string(ext_deg) +
                                 ") exceeds the exhaustive bound " +
                                 std::to_string(kExhaustiveFieldBound));
        }
    }

    struct Cell {
        FieldPtr field;
        std::int64_t n;
    };
    std::vector<Cell> cells;
    for (std::int64_t p : primes) {
        FieldPtr field = Field::make(p, ext_deg);
        std::int64_t top = field->q() - 1;
        if (n_max) top = std::min(top, *n_max);
        for (std::int64_t n = 1; n <= top; ++n) cells.push_back({field, n});
    }

    return parallel_map<SurveyRecord>(cells.size(), jobs, [&](std::size_t i) {
        return count_solutions(cells[i].field, cells[i].n);
    });
}

ClaimVerdict claim_eval(std::span<const SurveyRecord> records, std::int64_t p) {
    if (!is_prime(p)) {
        throw DomainError("NotPrime", std::to_string(p) + " is not prime");
    }
    std::vector<const SurveyRecord*> byn(static_cast<std::size_t>(p), nullptr);
    for (const auto& rec : records) {
        if (rec.p == p && rec.ext_deg == 1 && rec.n >= 1 && rec.n <= p - 1) {
            byn[static_cast<std::size_t>(rec.n)] = &rec;
        }
    }
    for (std::int64_t n = 1; n <= p - 1; ++n) {
        if (byn[static_cast<std::size_t>(n)] == nullptr) {
            throw DomainError("IncompleteSurvey",
                              "claim evaluation for p = " + std::to_string(p) +
                                  " needs records for every n in 1.." + std::to_string(p - 1) +
                                  "; missing n = " + std::to_string(n));
        }
    }

    ClaimVerdict verdict;
    verdict.p = p;
    if (p % 2 == 1) verdict.predicted_set.push_back((p - 1) / 2);
    verdict.predicted_set.push_back(p - 1);
    std::sort(verdict.predicted_set.begin(), verdict.predicted_set.end());
    verdict.predicted_set.erase(
        std::unique(verdict.predicted_set.begin(), verdict.predicted_set.end()),
        verdict.predicted_set.end());

    for (std::int64_t n = 1; n <= p - 1; ++n) {
        const SurveyRecord& rec = *byn[static_cast<std::size_t>(n)];
        if (!rec.flt_holds) continue;
        verdict.observed_free_set.push_back(n);
        // gcd-class closure: n behaves exactly like gcd(n, p-1).
        bool class_match = false;
        for (std::int64_t pred : verdict.predicted_set) {
            if (rec.gcd_class == std::gcd(pred, p - 1)) class_match = true;
        }
        if (!class_match) verdict.counterexamples.push_back(n);
    }
    for (std::int64_t pred : verdict.predicted_set) {
        if (std::find(verdict.observed_free_set.begin(), verdict.observed_free_set.end(), pred) ==
            verdict.observed_free_set.end()) {
            verdict.predicted_but_solvable.push_back(pred);
        }
    }
    verdict.holds_only_if = verdict.counterexamples.empty();
    verdict.holds_only_if_literal =
        std::all_of(verdict.observed_free_set.begin(), verdict.observed_free_set.end(),
                    [&](std::int64_t n) {
                        return std::find(verdict.predicted_set.begin(), verdict.predicted_set.end(),
                                         n) != verdict.predicted_set.end();
                    });
    return verdict;
}

std::int64_t core_exponent(std::int64_t n) {
    if (n < 3) {
        throw DomainError("NoCoreExponent", "core exponent is defined for n >= 3");
    }
    std::int64_t best = 0;
    for (std::int64_t d = 3; d * d <= n; d += 2) {
        if (n % d == 0) {
            best = d;
            break;
        }
    }
    if (best == 0 && n % 2 == 1) best = n; // n itself is an odd prime
    if (best == 0) {
        // Even n with no odd prime factor found by the loop: either an odd
        // prime cofactor remains, or n is a power of two (then 4 divides it).
        std::int64_t m = n;
        while (m % 2 == 0) m /= 2;
        if (m > 1) {
            best = m; // m is the smallest (and only) odd prime factor > sqrt(n)
        } else {
            best = 4;
        }
    }
    if (n % 4 == 0 && 4 < best) best = 4;
    return best;
}

} // namespace ffkit
