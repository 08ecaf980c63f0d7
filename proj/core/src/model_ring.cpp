#include "orbifold/model_ring.hpp"

#include <stdexcept>

namespace orbifold {

ModelElement ModelElement::basis(std::int64_t j) {
    ModelElement e;
    e.terms_.emplace(j, Rational(1));
    return e;
}

ModelElement ModelElement::combination(
    std::initializer_list<std::pair<Rational, std::int64_t>> terms) {
    ModelElement e;
    for (const auto& [c, j] : terms) e.add_term(j, c);
    return e;
}

Rational ModelElement::coeff(std::int64_t j) const {
    auto it = terms_.find(j);
    return it == terms_.end() ? Rational() : it->second;
}

void ModelElement::add_term(std::int64_t j, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(j, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

ModelElement& ModelElement::operator+=(const ModelElement& o) {
    for (const auto& [j, c] : o.terms_) add_term(j, c);
    return *this;
}

ModelElement& ModelElement::operator-=(const ModelElement& o) {
    for (const auto& [j, c] : o.terms_) add_term(j, -c);
    return *this;
}

ModelElement& ModelElement::operator*=(const Rational& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [j, coeff] : terms_) coeff *= c;
    return *this;
}

ModelElement ModelElement::operator-() const {
    ModelElement e(*this);
    for (auto& [j, coeff] : e.terms_) coeff = -coeff;
    return e;
}

ModelRing::ModelRing(Weights w) : w_(std::move(w)), sectors_(w_) {
    degrees_.reserve(dim());
    for (std::int64_t j = 0; j < w_.total(); ++j) {
        degrees_.push_back(Rational(j) -
                           Rational(w_.total()) * sectors_.arg(static_cast<int>(j)).arg());
    }
}

void ModelRing::check_range(std::int64_t j) const {
    if (j < 0 || j >= w_.total())
        throw std::out_of_range("exponent " + std::to_string(j) + " outside [0, " +
                                std::to_string(w_.total()) + ")");
}

const Rational& ModelRing::degree(std::int64_t j) const {
    check_range(j);
    return degrees_[static_cast<std::size_t>(j)];
}

ModelElement ModelRing::cup(std::int64_t j, std::int64_t k) const {
    check_range(j);
    check_range(k);
    std::int64_t m = (j + k) % w_.total();
    if (degrees_[static_cast<std::size_t>(j)] + degrees_[static_cast<std::size_t>(k)] !=
        degrees_[static_cast<std::size_t>(m)])
        return ModelElement();
    return ModelElement::basis(m);
}

ModelElement ModelRing::cup(const ModelElement& x, const ModelElement& y) const {
    ModelElement out;
    for (const auto& [jx, cx] : x.terms()) {
        for (const auto& [jy, cy] : y.terms()) {
            ModelElement term = cup(jx, jy);
            for (const auto& [jt, ct] : term.terms()) out.add_term(jt, cx * cy * ct);
        }
    }
    return out;
}

Rational ModelRing::integral(const ModelElement& z) const {
    return z.coeff(w_.n()) * Rational(1, w_.product());
}

Rational ModelRing::pairing(std::int64_t j, std::int64_t k) const {
    return integral(cup(j, k));
}

Rational ModelRing::pairing(const ModelElement& x, const ModelElement& y) const {
    return integral(cup(x, y));
}

std::int64_t ModelRing::dual_index(std::int64_t j) const {
    check_range(j);
    UnityRational g = sectors_.arg(static_cast<int>(j));
    std::int64_t d = j - k_min(g, w_);
    std::int64_t d_dual = fixed_set(g, w_).size() - 1 - d;
    return k_min(g.inverse(), w_) + d_dual;
}

std::map<Rational, int> ModelRing::poincare_polynomial() const {
    std::map<Rational, int> out;
    for (const Rational& d : degrees_) ++out[d];
    return out;
}

bool is_gorenstein(const Weights& w) {
    for (std::int64_t wi : w.entries()) {
        if (w.total() % wi != 0) return false;
    }
    return true;
}

} // namespace orbifold
