#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace orbifold {

/// Validated weight vector (w_0, ..., w_n) of positive integers, with the
/// derived quantities n, |w| (the sum) and <w> (the product) computed once
/// under overflow checks.
class Weights {
public:
    static Weights make(std::vector<std::int64_t> entries);
    static Weights of(std::initializer_list<std::int64_t> entries);

    int n() const { return static_cast<int>(entries_.size()) - 1; }
    std::int64_t total() const { return total_; }     // |w|
    std::int64_t product() const { return product_; } // <w>

    std::int64_t operator[](int i) const { return entries_[static_cast<std::size_t>(i)]; }
    const std::vector<std::int64_t>& entries() const { return entries_; }
    std::size_t size() const { return entries_.size(); }

    /// "(w0,w1,...)" -- used in diagnostics and document headers.
    std::string str() const;

    friend bool operator==(const Weights&, const Weights&) = default;

private:
    Weights(std::vector<std::int64_t> entries, std::int64_t total, std::int64_t product)
        : entries_(std::move(entries)), total_(total), product_(product) {}

    std::vector<std::int64_t> entries_;
    std::int64_t total_ = 0;
    std::int64_t product_ = 1;
};

} // namespace orbifold
