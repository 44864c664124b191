#include "rsss/poly.hpp"

#include <set>
#include <stdexcept>

namespace rsss {

Polynomial::Polynomial(std::vector<FieldElement> coefficients)
    : coeffs_(std::move(coefficients)) {
    if (coeffs_.empty()) {
        throw std::invalid_argument("polynomial: empty coefficient vector");
    }
    for (const auto& c : coeffs_) {
        if (c.modulus() != coeffs_.front().modulus()) {
            throw std::invalid_argument("polynomial: mixed moduli");
        }
    }
}

Polynomial Polynomial::from_values(std::span<const std::uint64_t> values, PrimeModulus modulus) {
    std::vector<FieldElement> coeffs;
    coeffs.reserve(values.size());
    for (std::uint64_t v : values) {
        coeffs.emplace_back(v, modulus);
    }
    return Polynomial(std::move(coeffs));
}

FieldElement Polynomial::evaluate(std::uint64_t x) const {
    const FieldElement xe = FieldElement::reduced(x, modulus());
    FieldElement acc = coeffs_.back();
    for (std::size_t i = coeffs_.size() - 1; i-- > 0;) {
        acc = acc * xe + coeffs_[i];
    }
    return acc;
}

Polynomial interpolate(std::span<const SharePoint> points, std::size_t length) {
    if (points.empty()) {
        throw std::invalid_argument("interpolate: no points");
    }
    if (points.size() != length) {
        throw std::invalid_argument("interpolate: expected exactly " + std::to_string(length) +
                                    " points, got " + std::to_string(points.size()));
    }
    const PrimeModulus p = points.front().y.modulus();
    if (length > p.value() - 1) {
        throw std::invalid_argument("interpolate: more points than nonzero residues");
    }
    std::set<std::uint64_t> seen;
    for (const auto& pt : points) {
        if (pt.y.modulus() != p) {
            throw std::invalid_argument("interpolate: mixed moduli");
        }
        if (pt.x == 0 || pt.x % p.value() == 0) {
            throw std::invalid_argument("interpolate: evaluation point is zero mod p");
        }
        if (!seen.insert(pt.x % p.value()).second) {
            throw std::invalid_argument("interpolate: duplicate evaluation point " +
                                        std::to_string(pt.x));
        }
    }

    const FieldElement zero = FieldElement::zero(p);
    const FieldElement one = FieldElement::one(p);

    // Master polynomial M(x) = prod (x - x_i), degree `length`.
    std::vector<FieldElement> master(length + 1, zero);
    master[0] = one;
    std::size_t degree = 0;
    for (const auto& pt : points) {
        const FieldElement neg_x = -FieldElement::reduced(pt.x, p);
        ++degree;
        for (std::size_t j = degree; j > 0; --j) {
            master[j] = master[j - 1] + neg_x * master[j];
        }
        master[0] = master[0] * neg_x;
    }

    std::vector<FieldElement> result(length, zero);
    std::vector<FieldElement> basis(length, zero);
    for (const auto& pt : points) {
        const FieldElement xi = FieldElement::reduced(pt.x, p);
        // Synthetic division: basis = M / (x - x_i).
        basis[length - 1] = master[length];
        for (std::size_t j = length - 1; j-- > 0;) {
            basis[j] = master[j + 1] + xi * basis[j + 1];
        }
        // Denominator prod_{j != i} (x_i - x_j) is the basis evaluated at x_i.
        FieldElement denom = basis[length - 1];
        for (std::size_t j = length - 1; j-- > 0;) {
            denom = denom * xi + basis[j];
        }
        const FieldElement scale = pt.y * denom.inverse();
        for (std::size_t j = 0; j < length; ++j) {
            result[j] = result[j] + scale * basis[j];
        }
    }
    return Polynomial(std::move(result));
}

} // namespace rsss
