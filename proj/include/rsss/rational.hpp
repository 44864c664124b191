#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace rsss {

// Exact non-negative rational, always stored in lowest terms.
struct Rational {
    std::uint64_t num = 0;
    std::uint64_t den = 1;

    Rational() = default;

    Rational(std::uint64_t numerator, std::uint64_t denominator)
        : num(numerator), den(denominator) {
        if (den == 0) {
            throw std::invalid_argument("rational: zero denominator");
        }
        const std::uint64_t g = std::gcd(num, den);
        if (g > 1) {
            num /= g;
            den /= g;
        }
        if (num == 0) {
            den = 1;
        }
    }

    bool operator==(const Rational&) const = default;

    std::string str() const {
        if (den == 1) {
            return std::to_string(num);
        }
        return std::to_string(num) + "/" + std::to_string(den);
    }
};

} // namespace rsss
