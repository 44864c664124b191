#include "rsss/field.hpp"

#include <bit>
#include <stdexcept>
#include <string>
#include <utility>

namespace rsss {

namespace {

using u128 = unsigned __int128;

constexpr std::uint64_t kModulusLimit = std::uint64_t{1} << 61;

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>((static_cast<u128>(a) * b) % p);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exponent, std::uint64_t p) {
    std::uint64_t result = 1 % p;
    std::uint64_t acc = base % p;
    while (exponent > 0) {
        if (exponent & 1) {
            result = mul_mod(result, acc, p);
        }
        acc = mul_mod(acc, acc, p);
        exponent >>= 1;
    }
    return result;
}

// Deterministic Miller-Rabin for 64-bit inputs; the fixed base set is a
// proven witness set for everything below 3.3 * 10^24.
bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t small : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull,
                                19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n == small) return true;
        if (n % small == 0) return false;
    }
    std::uint64_t d = n - 1;
    unsigned r = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++r;
    }
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull,
                            19ull, 23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = pow_mod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (unsigned i = 1; i < r; ++i) {
            x = mul_mod(x, x, n);
            if (x == n - 1) {
                witness = false;
                break;
            }
        }
        if (witness) return false;
    }
    return true;
}

void require_same_modulus(const FieldElement& a, const FieldElement& b) {
    if (a.modulus() != b.modulus()) {
        throw std::invalid_argument("field: modulus mismatch");
    }
}

} // namespace

PrimeModulus::PrimeModulus(std::uint64_t p) : p_(p) {
    if (p >= kModulusLimit) {
        throw std::invalid_argument("modulus must be below 2^61, got " + std::to_string(p));
    }
    if (!is_prime_u64(p)) {
        throw std::invalid_argument("modulus must be prime, got " + std::to_string(p));
    }
}

unsigned PrimeModulus::bit_length() const noexcept {
    return static_cast<unsigned>(std::bit_width(p_));
}

FieldElement::FieldElement(std::uint64_t value, PrimeModulus modulus)
    : v_(value), m_(modulus) {
    if (v_ >= m_.value()) {
        throw std::domain_error("field element " + std::to_string(value) +
                                " not below modulus " + std::to_string(m_.value()));
    }
}

FieldElement FieldElement::reduced(std::uint64_t value, PrimeModulus modulus) {
    return {value % modulus.value(), modulus};
}

FieldElement FieldElement::one(PrimeModulus modulus) {
    return reduced(1, modulus);
}

FieldElement FieldElement::operator+(const FieldElement& other) const {
    require_same_modulus(*this, other);
    std::uint64_t s = v_ + other.v_;
    if (s >= m_.value()) {
        s -= m_.value();
    }
    return {s, m_};
}

FieldElement FieldElement::operator-(const FieldElement& other) const {
    require_same_modulus(*this, other);
    const std::uint64_t s = v_ >= other.v_ ? v_ - other.v_ : v_ + m_.value() - other.v_;
    return {s, m_};
}

FieldElement FieldElement::operator*(const FieldElement& other) const {
    require_same_modulus(*this, other);
    return {mul_mod(v_, other.v_, m_.value()), m_};
}

FieldElement FieldElement::operator-() const {
    return {v_ == 0 ? 0 : m_.value() - v_, m_};
}

FieldElement FieldElement::inverse() const {
    if (v_ == 0) {
        throw std::domain_error("field: zero has no inverse");
    }
    // Extended Euclid on (v, p); p prime guarantees gcd 1.
    std::int64_t t = 0, new_t = 1;
    std::int64_t r = static_cast<std::int64_t>(m_.value());
    std::int64_t new_r = static_cast<std::int64_t>(v_);
    while (new_r != 0) {
        const std::int64_t q = r / new_r;
        t = std::exchange(new_t, t - q * new_t);
        r = std::exchange(new_r, r - q * new_r);
    }
    if (t < 0) {
        t += static_cast<std::int64_t>(m_.value());
    }
    return {static_cast<std::uint64_t>(t), m_};
}

FieldElement FieldElement::pow(std::uint64_t exponent) const {
    return {pow_mod(v_, exponent, m_.value()), m_};
}

FieldElement uniform_element(PrimeModulus modulus, RandomSource& rng) {
    return {uniform_below(rng, modulus.value()), modulus};
}

} // namespace rsss
