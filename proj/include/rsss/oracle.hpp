#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "rsss/rational.hpp"
#include "rsss/recursive.hpp"
#include "rsss/shamir.hpp"

namespace rsss {

enum class SchemeKind { shamir, recursive };

// Exhaustively measured conditional distribution of the secrets given a set
// of observed shares, at toy field sizes. Probabilities are exact counts
// over candidate_count; the entropy is derived for display and stays
// bit-exact against log2(candidate_count) whenever the consistent candidates
// are equiprobable with distinct secret tuples.
struct ConditionalReport {
    SchemeKind scheme = SchemeKind::shamir;
    std::uint64_t prime = 0;
    std::uint32_t threshold = 0;
    std::uint32_t share_count = 0;
    std::vector<Share> observed;

    // Size of the enumerated space: every (secret-assignment,
    // randomness-assignment) pair, p^k for both schemes.
    std::uint64_t total_assignments = 0;
    // Pairs consistent with every observed share.
    std::uint64_t candidate_count = 0;

    // Counts over consistent candidates; probability of a tuple or value is
    // its count over candidate_count.
    std::map<std::vector<std::uint64_t>, std::uint64_t> joint_counts;
    std::vector<std::map<std::uint64_t, std::uint64_t>> marginal_counts;

    double joint_entropy_bits = 0.0;

    // Secrets of the dealing that produced the observed shares, when known.
    std::optional<std::vector<std::uint64_t>> true_secrets;

    Rational joint_probability(const std::vector<std::uint64_t>& tuple) const;
    Rational marginal_probability(std::size_t position, std::uint64_t value) const;
};

// Enumerates every (free term, coefficient vector) polynomial consistent
// with the observed shares and reports the distribution of the free term.
// Guarded to p <= 31 and p^k <= 2^26; observing k shares is allowed as a
// diagnostic and collapses the report to a point mass.
ConditionalReport enumerate_shamir(const ShamirParams& params, const FieldElement& true_secret,
                                   std::span<const Share> observed);

// Enumerates every (secret vector, slope) pair consistent with the observed
// final shares. Guarded to p <= 13, k <= 4. Consistent candidates form an
// affine subspace of Z_p^k, so candidate_count is always a power of p.
ConditionalReport enumerate_recursive(const RecursiveParams& params,
                                      std::span<const Share> observed);

// Storage expansion families, by total share size over total secret size:
// conventional single-secret sharing costs n, the recursive scheme n/(k-1),
// and n/k is the information-theoretic floor.
enum class BlowupScheme { conventional, recursive_multi, optimal };

Rational nominal_blowup(BlowupScheme scheme, std::uint32_t k, std::uint32_t n);

// Exact ratio of measured sizes, reduced.
Rational measured_blowup(std::uint64_t total_secret_bits, std::uint64_t total_share_bits);

} // namespace rsss
