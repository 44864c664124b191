#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "rsss/field.hpp"

namespace rsss {

// Coefficient vector c0..cd over Z_p, free term first. Length is part of the
// value: trailing zeros are kept, because a dealt polynomial with a zero
// leading coefficient must survive a round trip at its declared length.
class Polynomial {
public:
    explicit Polynomial(std::vector<FieldElement> coefficients);

    static Polynomial from_values(std::span<const std::uint64_t> values, PrimeModulus modulus);
    static Polynomial from_values(std::initializer_list<std::uint64_t> values,
                                  PrimeModulus modulus) {
        return from_values(std::span<const std::uint64_t>(values.begin(), values.size()),
                           modulus);
    }

    std::size_t length() const noexcept { return coeffs_.size(); }
    const FieldElement& coefficient(std::size_t i) const { return coeffs_.at(i); }
    const std::vector<FieldElement>& coefficients() const noexcept { return coeffs_; }
    PrimeModulus modulus() const noexcept { return coeffs_.front().modulus(); }

    // The constant coefficient c0, which carries the secret.
    const FieldElement& free_term() const noexcept { return coeffs_.front(); }

    // Horner evaluation at x (reduced mod p).
    FieldElement evaluate(std::uint64_t x) const;

    bool operator==(const Polynomial&) const = default;

private:
    std::vector<FieldElement> coeffs_;
};

// One sampled point: x is the public participant index, y the evaluation
// held by that participant. x must be nonzero mod p so the free term stays
// off the sampled set.
struct SharePoint {
    std::uint64_t x;
    FieldElement y;
};

// The unique polynomial with exactly `length` coefficients through `length`
// points with distinct nonzero x mod p. Lagrange basis expanded to
// coefficient form in O(length^2); the full coefficient vector is needed, not
// just the free term, because higher coefficients feed the next level of the
// recursive scheme.
Polynomial interpolate(std::span<const SharePoint> points, std::size_t length);

} // namespace rsss
