#pragma once

#include <cstdint>
#include <initializer_list>
#include <map>
#include <string>
#include <utility>

#include "orbifold/rational.hpp"
#include "orbifold/unity.hpp"
#include "orbifold/weights.hpp"

namespace orbifold {

/// Finite rational linear combination of the powers xi^j, 0 <= j < |w|,
/// of the primitive |w|-th root of unity. Zero coefficients are dropped.
class ModelElement {
public:
    ModelElement() = default;

    static ModelElement basis(std::int64_t j);
    static ModelElement combination(std::initializer_list<std::pair<Rational, std::int64_t>> terms);

    bool is_zero() const { return terms_.empty(); }
    const std::map<std::int64_t, Rational>& terms() const { return terms_; }
    Rational coeff(std::int64_t j) const;

    void add_term(std::int64_t j, const Rational& c);

    ModelElement& operator+=(const ModelElement& o);
    ModelElement& operator-=(const ModelElement& o);
    ModelElement& operator*=(const Rational& c);

    friend ModelElement operator+(ModelElement a, const ModelElement& b) { return a += b; }
    friend ModelElement operator-(ModelElement a, const ModelElement& b) { return a -= b; }
    friend ModelElement operator*(const Rational& c, ModelElement x) { return x *= c; }
    ModelElement operator-() const;

    friend bool operator==(const ModelElement&, const ModelElement&) = default;

private:
    std::map<std::int64_t, Rational> terms_;
};

/// The graded group algebra on the |w|-th roots of unity: each basis power
/// xi^j carries the rational degree j - |w|*gamma_s(j), the product of two
/// powers survives exactly when degrees add, and the integral extracts the
/// xi^n coefficient scaled by 1/<w>.
class ModelRing {
public:
    explicit ModelRing(Weights w);

    const Weights& weights() const { return w_; }
    std::size_t dim() const { return static_cast<std::size_t>(w_.total()); }
    const SectorEnumeration& sectors() const { return sectors_; }

    static std::string label(std::int64_t j) { return "xi^" + std::to_string(j); }

    /// deg(xi^j); throws std::out_of_range unless 0 <= j < |w|.
    const Rational& degree(std::int64_t j) const;

    ModelElement unit() const { return ModelElement::basis(0); }

    ModelElement cup(std::int64_t j, std::int64_t k) const;
    ModelElement cup(const ModelElement& x, const ModelElement& y) const;

    Rational integral(const ModelElement& z) const;

    Rational pairing(std::int64_t j, std::int64_t k) const;
    Rational pairing(const ModelElement& x, const ModelElement& y) const;

    /// The unique k with <xi^j, xi^k> = 1/<w>; an involution satisfying
    /// j + dual_index(j) = n modulo |w|.
    std::int64_t dual_index(std::int64_t j) const;

    /// Multiplicity of each occurring degree; total mass |w|.
    std::map<Rational, int> poincare_polynomial() const;

private:
    void check_range(std::int64_t j) const;

    Weights w_;
    SectorEnumeration sectors_;
    std::vector<Rational> degrees_;
};

/// True when every weight divides |w|; in that case all model degrees are
/// integers.
bool is_gorenstein(const Weights& w);

} // namespace orbifold
