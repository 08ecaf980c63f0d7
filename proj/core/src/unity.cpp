#include "orbifold/unity.hpp"

#include <algorithm>
#include <stdexcept>

namespace orbifold {

IndexSet::IndexSet(std::initializer_list<int> xs) : values_(xs) {
    std::sort(values_.begin(), values_.end());
    values_.erase(std::unique(values_.begin(), values_.end()), values_.end());
}

bool IndexSet::contains(int i) const {
    return std::binary_search(values_.begin(), values_.end(), i);
}

IndexSet IndexSet::unioned(const IndexSet& o) const {
    std::vector<int> out;
    std::set_union(values_.begin(), values_.end(), o.values_.begin(), o.values_.end(),
                   std::back_inserter(out));
    return IndexSet(std::move(out));
}

IndexSet IndexSet::intersected(const IndexSet& o) const {
    std::vector<int> out;
    std::set_intersection(values_.begin(), values_.end(), o.values_.begin(), o.values_.end(),
                          std::back_inserter(out));
    return IndexSet(std::move(out));
}

IndexSet IndexSet::minus(const IndexSet& o) const {
    std::vector<int> out;
    std::set_difference(values_.begin(), values_.end(), o.values_.begin(), o.values_.end(),
                        std::back_inserter(out));
    return IndexSet(std::move(out));
}

SectorEnumeration::SectorEnumeration(const Weights& w) {
    table_.reserve(static_cast<std::size_t>(w.total()));
    for (int i = 0; i <= w.n(); ++i) {
        for (std::int64_t k = 0; k < w[i]; ++k) {
            table_.push_back(Entry{UnityRational::fraction(k, w[i]), i});
        }
    }
    // Ties between equal arguments are broken by the origin index, matching
    // the lexicographic order on [0,1) x [0,n].
    std::sort(table_.begin(), table_.end(), [](const Entry& a, const Entry& b) {
        if (a.arg != b.arg) return a.arg.arg() < b.arg.arg();
        return a.origin < b.origin;
    });
    for (const Entry& e : table_) {
        if (distinct_.empty() || distinct_.back() != e.arg) distinct_.push_back(e.arg);
    }
}

IndexSet fixed_set(const UnityRational& g, const Weights& w) {
    std::vector<int> out;
    std::int64_t q = g.order();
    for (int i = 0; i <= w.n(); ++i) {
        if (w[i] % q == 0) out.push_back(i);
    }
    return IndexSet::from_sorted(std::move(out));
}

bool in_sector_union(const UnityRational& g, const Weights& w) {
    std::int64_t q = g.order();
    for (int i = 0; i <= w.n(); ++i) {
        if (w[i] % q == 0) return true;
    }
    return false;
}

Rational age(const UnityRational& g, const Weights& w) {
    Rational sum;
    for (int i = 0; i <= w.n(); ++i) {
        sum += (g.arg() * Rational(w[i])).frac();
    }
    return sum;
}

std::int64_t k_min(const UnityRational& g, const Weights& w) {
    Rational value = age(g.inverse(), w) + Rational(w.total()) * g.arg();
    return value.as_integer();
}

std::int64_t k_max(const UnityRational& g, const Weights& w) {
    if (!in_sector_union(g, w))
        throw std::domain_error("k_max undefined: argument " + g.arg().str() +
                                " fixes no coordinate of w = " + w.str());
    Rational value = Rational(w.n()) + Rational(w.total()) * g.arg() - age(g, w);
    return value.as_integer();
}

IndexSet j_set(const UnityRational& g, const UnityRational& h, const Weights& w) {
    UnityRational product_inv = (g * h).inverse();
    std::vector<int> out;
    for (int i = 0; i <= w.n(); ++i) {
        Rational wi(w[i]);
        Rational sum = (g.arg() * wi).frac() + (h.arg() * wi).frac() + (product_inv.arg() * wi).frac();
        if (sum == Rational(2)) out.push_back(i);
    }
    return IndexSet::from_sorted(std::move(out));
}

SectorPartition sector_partition(const UnityRational& g, const UnityRational& h, const Weights& w) {
    IndexSet ig = fixed_set(g, w);
    IndexSet ih = fixed_set(h, w);
    IndexSet igh = fixed_set(g * h, w);
    SectorPartition parts;
    parts.fixed_union = ig.unioned(ih);
    parts.product_only = igh.minus(ig.intersected(ih));
    parts.j_gh = j_set(g, h, w);
    parts.j_inv = j_set(g.inverse(), h.inverse(), w);
    return parts;
}

} // namespace orbifold
