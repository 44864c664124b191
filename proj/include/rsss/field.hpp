#pragma once

#include <cstdint>

#include "rsss/random.hpp"

namespace rsss {

// Prime modulus below 2^61. The bound keeps the product of any two residues
// inside unsigned __int128, so every operation is exact. Construction runs a
// deterministic Miller-Rabin check and rejects composites.
class PrimeModulus {
public:
    explicit PrimeModulus(std::uint64_t p);

    std::uint64_t value() const noexcept { return p_; }
    unsigned bit_length() const noexcept;

    bool operator==(const PrimeModulus&) const = default;

private:
    std::uint64_t p_;
};

// Canonical residue in [0, p). The constructor is strict: values at or above
// the modulus are rejected rather than silently reduced, so out-of-range
// secrets fail loudly at the boundary. Use reduced() where wraparound is the
// intended meaning (e.g. evaluation points).
class FieldElement {
public:
    FieldElement(std::uint64_t value, PrimeModulus modulus);

    static FieldElement reduced(std::uint64_t value, PrimeModulus modulus);
    static FieldElement zero(PrimeModulus modulus) { return {0, modulus}; }
    static FieldElement one(PrimeModulus modulus);

    std::uint64_t value() const noexcept { return v_; }
    PrimeModulus modulus() const noexcept { return m_; }

    FieldElement operator+(const FieldElement& other) const;
    FieldElement operator-(const FieldElement& other) const;
    FieldElement operator*(const FieldElement& other) const;
    FieldElement operator-() const;

    // Multiplicative inverse by extended Euclid; zero has none.
    FieldElement inverse() const;

    // Square-and-multiply. x^0 == 1 for every x, including 0^0.
    FieldElement pow(std::uint64_t exponent) const;

    bool operator==(const FieldElement&) const = default;

private:
    std::uint64_t v_;
    PrimeModulus m_;
};

// Uniform residue in [0, p), bias-free via rejection sampling.
FieldElement uniform_element(PrimeModulus modulus, RandomSource& rng);

} // namespace rsss
