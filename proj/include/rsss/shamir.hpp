#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "rsss/field.hpp"
#include "rsss/random.hpp"

namespace rsss {

// Parameters for a (k, n) threshold sharing over Z_p. Evaluation points are
// fixed at x = 1..n, so n must stay below p to keep them distinct and
// nonzero.
struct ShamirParams {
    ShamirParams(PrimeModulus modulus, std::uint32_t threshold, std::uint32_t share_count);

    PrimeModulus p;
    std::uint32_t k;
    std::uint32_t n;
};

// One participant's share. The x-coordinate is the index; only y is secret.
struct Share {
    std::uint32_t index;
    FieldElement y;

    bool operator==(const Share&) const = default;
};

// Classic single-secret dealing: a degree-(k-1) polynomial with the secret
// as free term and k-1 fresh uniform coefficients, sampled at x = 1..n. The
// leading coefficient may legitimately be zero; excluding it would skew the
// coefficient distribution the secrecy argument relies on.
std::vector<Share> shamir_deal(const FieldElement& secret, const ShamirParams& params,
                               RandomSource& rng);

// Recovers the secret from any k of the shares. When more than k are given,
// the k lowest indices are used (deterministic, documented tie-break).
FieldElement shamir_reconstruct(std::span<const Share> shares, const ShamirParams& params);

namespace detail {

// Validates index range and uniqueness, then returns the k lowest-indexed
// shares in index order. Shared selection rule for both schemes.
std::vector<Share> lowest_k_shares(std::span<const Share> shares, std::uint32_t k,
                                   std::uint32_t n);

} // namespace detail

} // namespace rsss
