#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "orbifold/rational.hpp"
#include "orbifold/unity.hpp"
#include "orbifold/weights.hpp"

namespace orbifold {

/// Basis symbol eta_g^d of the orbifold Chow ring: g an element of the
/// sector union, d a power below the dimension of the component fixed by g.
struct ChowBasisIndex {
    UnityRational g;
    int d = 0;

    std::string label() const;

    friend bool operator==(const ChowBasisIndex&, const ChowBasisIndex&) = default;
    friend std::strong_ordering operator<=>(const ChowBasisIndex& a, const ChowBasisIndex& b) {
        if (auto c = a.g.arg() <=> b.g.arg(); c != 0) return c;
        return a.d <=> b.d;
    }
};

/// Finite rational linear combination of Chow basis symbols. Zero
/// coefficients are never stored; the empty combination is the zero element.
class ChowElement {
public:
    ChowElement() = default;

    static ChowElement basis(ChowBasisIndex b);
    static ChowElement combination(
        std::initializer_list<std::pair<Rational, ChowBasisIndex>> terms);

    bool is_zero() const { return terms_.empty(); }
    const std::map<ChowBasisIndex, Rational>& terms() const { return terms_; }
    Rational coeff(const ChowBasisIndex& b) const;

    void add_term(const ChowBasisIndex& b, const Rational& c);

    ChowElement& operator+=(const ChowElement& o);
    ChowElement& operator-=(const ChowElement& o);
    ChowElement& operator*=(const Rational& c);

    friend ChowElement operator+(ChowElement a, const ChowElement& b) { return a += b; }
    friend ChowElement operator-(ChowElement a, const ChowElement& b) { return a -= b; }
    friend ChowElement operator*(const Rational& c, ChowElement x) { return x *= c; }
    ChowElement operator-() const;

    friend bool operator==(const ChowElement&, const ChowElement&) = default;

private:
    std::map<ChowBasisIndex, Rational> terms_;
};

/// The orbifold Chow ring of P(w) over exact rationals: eta-basis, rational
/// grading deg(eta_g^d) = d + a(g), cup product and Poincare pairing. The
/// basis is ordered by (argument of g, then d), so positions are stable.
class ChowRing {
public:
    explicit ChowRing(Weights w);

    const Weights& weights() const { return w_; }
    std::size_t dim() const { return basis_.size(); } // == |w|
    const std::vector<ChowBasisIndex>& basis() const { return basis_; }

    bool valid(const ChowBasisIndex& b) const;
    /// Position of a valid basis index in basis(); throws std::invalid_argument.
    std::size_t position(const ChowBasisIndex& b) const;

    Rational degree(const ChowBasisIndex& b) const;

    ChowBasisIndex unit_index() const { return ChowBasisIndex{UnityRational(), 0}; }
    ChowElement unit() const { return ChowElement::basis(unit_index()); }

    /// Cup product on basis symbols: lands in the sector of g0*g1 with the
    /// degree-matching power, and vanishes when that sector is empty or the
    /// power exceeds the component dimension.
    ChowElement cup(const ChowBasisIndex& a, const ChowBasisIndex& b) const;
    ChowElement cup(const ChowElement& x, const ChowElement& y) const;

    /// Poincare pairing: 1/<w> on dual pairs (inverse sectors, complementary
    /// degrees summing to n), zero otherwise.
    Rational pairing(const ChowBasisIndex& a, const ChowBasisIndex& b) const;
    Rational pairing(const ChowElement& x, const ChowElement& y) const;

private:
    Weights w_;
    std::vector<ChowBasisIndex> basis_;
    std::map<ChowBasisIndex, std::size_t> positions_;
};

} // namespace orbifold
