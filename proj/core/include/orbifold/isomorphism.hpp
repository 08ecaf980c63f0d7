#pragma once

#include <cstdint>
#include <vector>

#include "orbifold/chow_ring.hpp"
#include "orbifold/model_ring.hpp"
#include "orbifold/weights.hpp"

namespace orbifold {

/// The basis bijection eta_g^d -> xi^{k_min(g^-1) + d} between the Chow
/// ring and the model ring, together with its linear extension and inverse.
class XiMap {
public:
    explicit XiMap(const Weights& w);

    const ChowRing& chow() const { return chow_; }
    const ModelRing& model() const { return model_; }

    /// Exponent of the image of a valid basis symbol.
    std::int64_t image_exponent(const ChowBasisIndex& b) const;

    /// Image exponents ordered by Chow basis position (a permutation of
    /// [0, |w|) ).
    const std::vector<std::int64_t>& exponents() const { return exponents_; }

    /// The basis symbol mapping onto xi^j.
    const ChowBasisIndex& preimage(std::int64_t j) const;

    ModelElement apply(const ChowElement& x) const;
    ChowElement invert(const ModelElement& z) const;

private:
    ChowRing chow_;
    ModelRing model_;
    std::vector<std::int64_t> exponents_;   // chow position -> exponent
    std::vector<std::size_t> chow_position_; // exponent -> chow position
};

} // namespace orbifold
