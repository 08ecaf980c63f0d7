#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "orbifold/chow_ring.hpp"
#include "orbifold/model_ring.hpp"
#include "orbifold/rational.hpp"

namespace orbifold {

/// Structure constants of a ring in its ordered basis. In both rings every
/// basis product is either zero or a single basis element with coefficient
/// one, so products are stored as target positions; kZero marks a vanishing
/// product. The Gram matrix holds the exact pairing values.
struct FrobeniusTable {
    static constexpr std::size_t kZero = static_cast<std::size_t>(-1);

    std::string ring; // "chow" or "model"
    std::vector<std::int64_t> weights;
    std::vector<std::string> labels;
    std::vector<Rational> degrees;
    std::size_t unit = 0;
    std::vector<std::size_t> product; // row-major dim x dim
    std::vector<Rational> gram;       // row-major dim x dim

    std::size_t dim() const { return labels.size(); }

    std::size_t product_at(std::size_t i, std::size_t j) const { return product[i * dim() + j]; }
    std::size_t& product_at(std::size_t i, std::size_t j) { return product[i * dim() + j]; }
    const Rational& gram_at(std::size_t i, std::size_t j) const { return gram[i * dim() + j]; }
    Rational& gram_at(std::size_t i, std::size_t j) { return gram[i * dim() + j]; }
};

FrobeniusTable structure_table(const ChowRing& ring);
FrobeniusTable structure_table(const ModelRing& ring);

/// True when the Gram matrix is invertible over the rationals (exact
/// Gaussian elimination).
bool gram_invertible(const FrobeniusTable& table);

} // namespace orbifold
