#include "orbifold/weights.hpp"

#include <stdexcept>

#include "orbifold/rational.hpp"

namespace orbifold {

Weights Weights::make(std::vector<std::int64_t> entries) {
    if (entries.empty())
        throw std::invalid_argument("weight vector must be non-empty");
    std::int64_t total = 0;
    std::int64_t product = 1;
    for (std::int64_t w : entries) {
        if (w <= 0)
            throw std::invalid_argument("weights must be positive, got " + std::to_string(w));
        total = detail::checked_add(total, w);
        product = detail::checked_mul(product, w);
    }
    return Weights(std::move(entries), total, product);
}

Weights Weights::of(std::initializer_list<std::int64_t> entries) {
    return make(std::vector<std::int64_t>(entries));
}

std::string Weights::str() const {
    std::string out = "(";
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(entries_[i]);
    }
    out += ")";
    return out;
}

} // namespace orbifold
