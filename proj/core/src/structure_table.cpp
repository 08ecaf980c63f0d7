#include "orbifold/structure_table.hpp"

#include <stdexcept>

namespace orbifold {

namespace {

// Both cup products send basis pairs to a lone basis element with
// coefficient one, or to zero. Anything else is a programming error.
template <typename Element, typename Position>
std::size_t single_target(const Element& e, Position&& position) {
    if (e.is_zero()) return FrobeniusTable::kZero;
    if (e.terms().size() != 1 || e.terms().begin()->second != Rational(1))
        throw std::logic_error("basis product is not a single unit-coefficient term");
    return position(e.terms().begin()->first);
}

} // namespace

FrobeniusTable structure_table(const ChowRing& ring) {
    FrobeniusTable t;
    t.ring = "chow";
    t.weights = ring.weights().entries();
    const auto& basis = ring.basis();
    std::size_t dim = basis.size();
    t.labels.reserve(dim);
    t.degrees.reserve(dim);
    for (const ChowBasisIndex& b : basis) {
        t.labels.push_back(b.label());
        t.degrees.push_back(ring.degree(b));
    }
    t.unit = ring.position(ring.unit_index());
    t.product.resize(dim * dim);
    t.gram.resize(dim * dim);
    for (std::size_t i = 0; i < dim; ++i) {
        for (std::size_t j = 0; j < dim; ++j) {
            t.product_at(i, j) = single_target(
                ring.cup(basis[i], basis[j]),
                [&](const ChowBasisIndex& b) { return ring.position(b); });
            t.gram_at(i, j) = ring.pairing(basis[i], basis[j]);
        }
    }
    return t;
}

FrobeniusTable structure_table(const ModelRing& ring) {
    FrobeniusTable t;
    t.ring = "model";
    t.weights = ring.weights().entries();
    std::size_t dim = ring.dim();
    t.labels.reserve(dim);
    t.degrees.reserve(dim);
    for (std::size_t j = 0; j < dim; ++j) {
        t.labels.push_back(ModelRing::label(static_cast<std::int64_t>(j)));
        t.degrees.push_back(ring.degree(static_cast<std::int64_t>(j)));
    }
    t.unit = 0;
    t.product.resize(dim * dim);
    t.gram.resize(dim * dim);
    for (std::size_t i = 0; i < dim; ++i) {
        for (std::size_t j = 0; j < dim; ++j) {
            t.product_at(i, j) = single_target(
                ring.cup(static_cast<std::int64_t>(i), static_cast<std::int64_t>(j)),
                [](std::int64_t m) { return static_cast<std::size_t>(m); });
            t.gram_at(i, j) =
                ring.pairing(static_cast<std::int64_t>(i), static_cast<std::int64_t>(j));
        }
    }
    return t;
}

bool gram_invertible(const FrobeniusTable& table) {
    std::size_t dim = table.dim();
    std::vector<Rational> m = table.gram;
    auto at = [&](std::size_t i, std::size_t j) -> Rational& { return m[i * dim + j]; };
    for (std::size_t col = 0; col < dim; ++col) {
        std::size_t pivot = col;
        while (pivot < dim && at(pivot, col).is_zero()) ++pivot;
        if (pivot == dim) return false;
        if (pivot != col) {
            for (std::size_t j = 0; j < dim; ++j) std::swap(at(pivot, j), at(col, j));
        }
        Rational inv = Rational(1) / at(col, col);
        for (std::size_t row = col + 1; row < dim; ++row) {
            if (at(row, col).is_zero()) continue;
            Rational factor = at(row, col) * inv;
            for (std::size_t j = col; j < dim; ++j) at(row, j) -= factor * at(col, j);
        }
    }
    return true;
}

} // namespace orbifold
