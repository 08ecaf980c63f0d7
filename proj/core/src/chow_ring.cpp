#include "orbifold/chow_ring.hpp"

#include <cassert>
#include <stdexcept>

namespace orbifold {

std::string ChowBasisIndex::label() const {
    return "eta(gamma=" + g.arg().str() + ", d=" + std::to_string(d) + ")";
}

ChowElement ChowElement::basis(ChowBasisIndex b) {
    ChowElement e;
    e.terms_.emplace(std::move(b), Rational(1));
    return e;
}

ChowElement ChowElement::combination(
    std::initializer_list<std::pair<Rational, ChowBasisIndex>> terms) {
    ChowElement e;
    for (const auto& [c, b] : terms) e.add_term(b, c);
    return e;
}

Rational ChowElement::coeff(const ChowBasisIndex& b) const {
    auto it = terms_.find(b);
    return it == terms_.end() ? Rational() : it->second;
}

void ChowElement::add_term(const ChowBasisIndex& b, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(b, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

ChowElement& ChowElement::operator+=(const ChowElement& o) {
    for (const auto& [b, c] : o.terms_) add_term(b, c);
    return *this;
}

ChowElement& ChowElement::operator-=(const ChowElement& o) {
    for (const auto& [b, c] : o.terms_) add_term(b, -c);
    return *this;
}

ChowElement& ChowElement::operator*=(const Rational& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [b, coeff] : terms_) coeff *= c;
    return *this;
}

ChowElement ChowElement::operator-() const {
    ChowElement e(*this);
    for (auto& [b, coeff] : e.terms_) coeff = -coeff;
    return e;
}

ChowRing::ChowRing(Weights w) : w_(std::move(w)) {
    SectorEnumeration sectors(w_);
    for (const UnityRational& g : sectors.distinct_args()) {
        int count = fixed_set(g, w_).size();
        for (int d = 0; d < count; ++d) {
            positions_.emplace(ChowBasisIndex{g, d}, basis_.size());
            basis_.push_back(ChowBasisIndex{g, d});
        }
    }
    assert(basis_.size() == static_cast<std::size_t>(w_.total()));
}

bool ChowRing::valid(const ChowBasisIndex& b) const {
    return positions_.contains(b);
}

std::size_t ChowRing::position(const ChowBasisIndex& b) const {
    auto it = positions_.find(b);
    if (it == positions_.end())
        throw std::invalid_argument("invalid Chow basis index " + b.label() +
                                    " for w = " + w_.str());
    return it->second;
}

Rational ChowRing::degree(const ChowBasisIndex& b) const {
    position(b); // validate
    return Rational(b.d) + age(b.g, w_);
}

ChowElement ChowRing::cup(const ChowBasisIndex& a, const ChowBasisIndex& b) const {
    UnityRational g = a.g * b.g;
    if (!in_sector_union(g, w_)) return ChowElement();
    Rational d = degree(a) + degree(b) - age(g, w_);
    // The degree excess is a non-negative integer whenever the target sector
    // is non-empty. That is an invariant, not a case: enforce it outright.
    std::int64_t power = d.as_integer();
    if (power < 0)
        throw std::logic_error("negative degree excess " + d.str() + " in cup of " + a.label() +
                               " and " + b.label());
    if (power > fixed_set(g, w_).size() - 1) return ChowElement();
    return ChowElement::basis(ChowBasisIndex{g, static_cast<int>(power)});
}

ChowElement ChowRing::cup(const ChowElement& x, const ChowElement& y) const {
    ChowElement out;
    for (const auto& [bx, cx] : x.terms()) {
        for (const auto& [by, cy] : y.terms()) {
            ChowElement term = cup(bx, by);
            for (const auto& [bt, ct] : term.terms()) out.add_term(bt, cx * cy * ct);
        }
    }
    return out;
}

Rational ChowRing::pairing(const ChowBasisIndex& a, const ChowBasisIndex& b) const {
    if (!(a.g * b.g).is_identity()) return Rational();
    if (degree(a) + degree(b) != Rational(w_.n())) return Rational();
    return Rational(1, w_.product());
}

Rational ChowRing::pairing(const ChowElement& x, const ChowElement& y) const {
    Rational out;
    for (const auto& [bx, cx] : x.terms()) {
        for (const auto& [by, cy] : y.terms()) {
            out += cx * cy * pairing(bx, by);
        }
    }
    return out;
}

} // namespace orbifold
