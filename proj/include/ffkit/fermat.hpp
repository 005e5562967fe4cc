#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "ffkit/galois.hpp"

namespace ffkit {

// Result of exhaustively testing x^n + y^n = z^n over one field and one
// exponent. "Nontrivial" means x, y, z all nonzero; with zeros allowed,
// (x, 0, x) would satisfy every exponent.
struct SurveyRecord {
    std::int64_t p = 0;
    std::size_t ext_deg = 1;
    std::int64_t q = 0;
    std::int64_t n = 0;
    std::int64_t gcd_class = 0; // gcd(n, q-1); solvability depends only on this
    std::int64_t nontrivial_count = 0;
    bool flt_holds = false; // nontrivial_count == 0
};

// Evaluation of "in F_p, FLT is true only if n = (p-1) or (p-1)/2" against
// the observed solution-free exponents, both literally and up to gcd-class.
struct ClaimVerdict {
    std::int64_t p = 0;
    std::vector<std::int64_t> predicted_set;          // {(p-1)/2, p-1} (p odd), {p-1} for p = 2
    std::vector<std::int64_t> observed_free_set;      // n in 1..p-1 with flt_holds
    std::vector<std::int64_t> counterexamples;        // observed n with gcd-class outside the predicted classes
    std::vector<std::int64_t> predicted_but_solvable; // predicted exponents that are not solution-free
    bool holds_only_if = false;                       // counterexamples empty (gcd-class reading)
    bool holds_only_if_literal = false;               // observed set inside the literal predicted set
};

// Counts nontrivial solutions by pair-summing the multiset of n-th powers of
// the nonzero elements. Exhaustive mode requires q <= 512.
SurveyRecord count_solutions(const FieldPtr& field, std::int64_t n);

bool flt_holds(const FieldPtr& field, std::int64_t n);

// One record per (prime p <= p_max, exponent n); n runs over 1..q-1 unless
// n_max caps it. Deterministic ordering by (p, ext_deg, n); cells are
// independent and evaluated with up to `jobs` threads.
std::vector<SurveyRecord> survey(std::int64_t p_max, std::size_t ext_deg = 1,
                                 std::optional<std::int64_t> n_max = std::nullopt, int jobs = 1);

// Verdict for one prime from its survey records (ext_deg 1); requires
// records covering every n in 1..p-1 (IncompleteSurvey otherwise).
ClaimVerdict claim_eval(std::span<const SurveyRecord> records, std::int64_t p);

// The smallest d in {4} union {odd primes} dividing n; every n >= 3 has one.
// Proving the equation unsolvable for d settles every multiple of d.
std::int64_t core_exponent(std::int64_t n);

} // namespace ffkit
