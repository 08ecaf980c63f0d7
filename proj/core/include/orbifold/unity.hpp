#pragma once

#include <cstdint>
#include <initializer_list>
#include <vector>

#include "orbifold/rational.hpp"
#include "orbifold/weights.hpp"

namespace orbifold {

/// A root of unity stored by its reduced argument fraction in [0, 1): the
/// value represents exp(2*i*pi * arg). The group law is addition of
/// arguments modulo 1, so every computation stays in exact rationals.
class UnityRational {
public:
    UnityRational() = default; // identity, arg 0

    explicit UnityRational(const Rational& turns) : arg_(turns.frac()) {}

    static UnityRational fraction(std::int64_t p, std::int64_t q) {
        return UnityRational(Rational(p, q));
    }

    const Rational& arg() const { return arg_; }
    bool is_identity() const { return arg_.is_zero(); }

    /// Smallest l >= 1 with g^l = 1 (the denominator of the argument).
    std::int64_t order() const { return arg_.den(); }

    UnityRational inverse() const { return UnityRational(-arg_); }

    UnityRational pow(std::int64_t k) const { return UnityRational(arg_ * Rational(k)); }

    friend UnityRational operator*(const UnityRational& a, const UnityRational& b) {
        return UnityRational(a.arg_ + b.arg_);
    }

    // Equality only; where an order is needed (the enumeration sort), it is
    // the one induced by the argument, spelled g.arg() at the call site.
    friend bool operator==(const UnityRational&, const UnityRational&) = default;

private:
    Rational arg_;
};

/// Subset of the coordinate indices [0, n], kept sorted.
class IndexSet {
public:
    IndexSet() = default;
    IndexSet(std::initializer_list<int> xs);
    static IndexSet from_sorted(std::vector<int> xs) { return IndexSet(std::move(xs)); }

    int size() const { return static_cast<int>(values_.size()); }
    bool empty() const { return values_.empty(); }
    bool contains(int i) const;
    const std::vector<int>& values() const { return values_; }

    auto begin() const { return values_.begin(); }
    auto end() const { return values_.end(); }

    IndexSet unioned(const IndexSet& o) const;
    IndexSet intersected(const IndexSet& o) const;
    IndexSet minus(const IndexSet& o) const;

    friend bool operator==(const IndexSet&, const IndexSet&) = default;

private:
    explicit IndexSet(std::vector<int> sorted) : values_(std::move(sorted)) {}
    std::vector<int> values_;
};

/// The ordered disjoint union of the groups U_{w_0}, ..., U_{w_n}: all pairs
/// (k/w_i, i) sorted lexicographically by (argument, origin index). Entry k
/// realizes the increasing enumeration s(k); its argument is gamma(s(k)).
class SectorEnumeration {
public:
    explicit SectorEnumeration(const Weights& w);

    int size() const { return static_cast<int>(table_.size()); } // == |w|
    const UnityRational& arg(int k) const { return table_[static_cast<std::size_t>(k)].arg; }
    int origin(int k) const { return table_[static_cast<std::size_t>(k)].origin; }

    /// Sorted distinct arguments; exactly the elements of the sector union.
    const std::vector<UnityRational>& distinct_args() const { return distinct_; }

private:
    struct Entry {
        UnityRational arg;
        int origin;
    };
    std::vector<Entry> table_;
    std::vector<UnityRational> distinct_;
};

/// I(g): indices i with g^{w_i} = 1, i.e. the order of g divides w_i.
IndexSet fixed_set(const UnityRational& g, const Weights& w);

/// True when g fixes at least one coordinate (g lies in some U_{w_i}).
bool in_sector_union(const UnityRational& g, const Weights& w);

/// Age a(g): the sum over i of the fractional parts {gamma(g) * w_i}.
Rational age(const UnityRational& g, const Weights& w);

/// First enumeration index whose argument reaches gamma(g), computed in
/// closed form as a(g^{-1}) + |w|*gamma(g). Defined for every g: when g
/// lies in the sector union this is min{k : gamma_s(k) = gamma(g)};
/// otherwise it counts the entries with argument below gamma(g).
std::int64_t k_min(const UnityRational& g, const Weights& w);

/// Last enumeration index with argument gamma(g), in closed form
/// n + |w|*gamma(g) - a(g). Only defined on the sector union; throws
/// std::domain_error when g fixes no coordinate.
std::int64_t k_max(const UnityRational& g, const Weights& w);

/// J(g, h): indices where {gamma(g)w_i} + {gamma(h)w_i} + {gamma((gh)^-1)w_i}
/// equals 2.
IndexSet j_set(const UnityRational& g, const UnityRational& h, const Weights& w);

/// The four disjoint parts of [0, n] classifying how the fractional parts of
/// g, h and gh interact. The excess {gamma(g)w_i} + {gamma(h)w_i} -
/// {gamma(gh)w_i} is 0 on fixed_union and j_inv, 1 on product_only and j_gh.
struct SectorPartition {
    IndexSet fixed_union;  // I(g) union I(h)
    IndexSet product_only; // I(gh) minus (I(g) intersect I(h))
    IndexSet j_gh;         // J(g, h)
    IndexSet j_inv;        // J(g^-1, h^-1)
};

SectorPartition sector_partition(const UnityRational& g, const UnityRational& h, const Weights& w);

} // namespace orbifold
