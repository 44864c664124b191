#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "rsss/field.hpp"
#include "rsss/poly.hpp"
#include "rsss/random.hpp"
#include "rsss/rational.hpp"
#include "rsss/shamir.hpp"

namespace rsss {

// Parameters for the recursive multi-secret scheme: k-1 secrets in n shares,
// any k of which recover everything. Same structural constraints as the
// single-secret case.
struct RecursiveParams {
    RecursiveParams(PrimeModulus modulus, std::uint32_t threshold, std::uint32_t share_count);

    PrimeModulus p;
    std::uint32_t k;
    std::uint32_t n;
};

// The ordered secrets handed to one dealing. A (k, n) dealing carries exactly
// k-1 of them; for k = 2 that degenerates to a single secret.
class SecretVector {
public:
    explicit SecretVector(std::vector<FieldElement> secrets);

    static SecretVector from_integers(std::span<const std::uint64_t> values, PrimeModulus modulus);
    static SecretVector from_integers(std::initializer_list<std::uint64_t> values,
                                      PrimeModulus modulus) {
        return from_integers(std::span<const std::uint64_t>(values.begin(), values.size()),
                             modulus);
    }

    std::size_t size() const noexcept { return secrets_.size(); }
    const FieldElement& operator[](std::size_t i) const { return secrets_.at(i); }
    const std::vector<FieldElement>& elements() const noexcept { return secrets_; }
    PrimeModulus modulus() const noexcept { return secrets_.front().modulus(); }

    bool operator==(const SecretVector&) const = default;

private:
    std::vector<FieldElement> secrets_;
};

// A complete dealing output: n shares with indices exactly 1..n.
struct ShareSet {
    std::vector<Share> shares;
    RecursiveParams params;
};

// Optional record of every intermediate level of a dealing, for tests and
// diagnostics. Normal callers leave it off; intermediate shares are meant to
// be dropped once the next level absorbs them.
struct DealTranscript {
    std::vector<Polynomial> level_polys;             // p_1 .. p_{k-1}
    std::vector<std::vector<Share>> level_shares;    // samples per level; last entry is final
};

// Dealing with the level-1 slope fixed. The whole transcript is a
// deterministic function of (secrets, slope), which is what makes exhaustive
// enumeration of the candidate space possible.
//
// Level 1 shares the first secret with a line through it; each later level i
// re-uses the previous level's i share values as the coefficients of
// x^1..x^i, puts the next secret in the free term, and samples one point
// more. The last level is sampled at all n indices instead.
ShareSet recursive_deal_deterministic(const SecretVector& secrets, const FieldElement& slope,
                                      const RecursiveParams& params,
                                      DealTranscript* transcript = nullptr);

// Production entry point: draws a fresh uniform slope from rng. The slope is
// never stored or returned.
ShareSet recursive_deal(const SecretVector& secrets, const RecursiveParams& params,
                        RandomSource& rng, DealTranscript* transcript = nullptr);

// Recovers all k-1 secrets from any k shares. Interpolates the top-level
// polynomial, takes its free term as the last secret, then repeatedly turns
// the non-free coefficients (coefficient of x^j becomes the point (j, .))
// into the points of the level below. Secrets come back last-in first-out
// internally and are returned in dealt order.
SecretVector recursive_reconstruct(std::span<const Share> shares, const RecursiveParams& params);

// Storage expansion of the scheme: n shares carrying k-1 secrets of the same
// size, i.e. n/(k-1). For k = 2 this is the conventional single-secret
// factor n.
Rational blowup_factor(const RecursiveParams& params);

} // namespace rsss
