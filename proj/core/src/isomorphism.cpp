#include "orbifold/isomorphism.hpp"

#include <stdexcept>

#include "orbifold/unity.hpp"

namespace orbifold {

XiMap::XiMap(const Weights& w) : chow_(w), model_(w) {
    std::size_t dim = chow_.dim();
    exponents_.reserve(dim);
    chow_position_.assign(dim, static_cast<std::size_t>(-1));
    for (std::size_t i = 0; i < dim; ++i) {
        const ChowBasisIndex& b = chow_.basis()[i];
        std::int64_t j = k_min(b.g.inverse(), w) + b.d;
        if (j < 0 || j >= static_cast<std::int64_t>(dim) ||
            chow_position_[static_cast<std::size_t>(j)] != static_cast<std::size_t>(-1))
            throw std::logic_error("basis images fail to enumerate the exponents");
        exponents_.push_back(j);
        chow_position_[static_cast<std::size_t>(j)] = i;
    }
}

std::int64_t XiMap::image_exponent(const ChowBasisIndex& b) const {
    return exponents_[chow_.position(b)];
}

const ChowBasisIndex& XiMap::preimage(std::int64_t j) const {
    if (j < 0 || j >= static_cast<std::int64_t>(chow_position_.size()))
        throw std::out_of_range("exponent " + std::to_string(j) + " outside [0, " +
                                std::to_string(chow_position_.size()) + ")");
    return chow_.basis()[chow_position_[static_cast<std::size_t>(j)]];
}

ModelElement XiMap::apply(const ChowElement& x) const {
    ModelElement out;
    for (const auto& [b, c] : x.terms()) out.add_term(image_exponent(b), c);
    return out;
}

ChowElement XiMap::invert(const ModelElement& z) const {
    ChowElement out;
    for (const auto& [j, c] : z.terms()) out.add_term(preimage(j), c);
    return out;
}

} // namespace orbifold
