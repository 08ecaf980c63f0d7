#include <doctest.h>

#include <stdexcept>
#include <utility>
#include <vector>

#include "orbifold/unity.hpp"

using namespace orbifold;

namespace {

UnityRational u(std::int64_t p, std::int64_t q) { return UnityRational::fraction(p, q); }

// Enumeration-scan oracles for the closed-form index formulas.
std::pair<int, int> scan_window(const SectorEnumeration& s, const UnityRational& g) {
    int lo = -1, hi = -1;
    for (int k = 0; k < s.size(); ++k) {
        if (s.arg(k) == g) {
            if (lo < 0) lo = k;
            hi = k;
        }
    }
    return {lo, hi};
}

int count_below(const SectorEnumeration& s, const UnityRational& g) {
    int c = 0;
    for (int k = 0; k < s.size(); ++k)
        if (s.arg(k).arg() < g.arg()) ++c;
    return c;
}

} // namespace

TEST_CASE("group law on arguments") {
    CHECK(u(1, 3) * u(1, 3) == u(2, 3));
    CHECK(u(1, 2) * u(2, 3) == u(1, 6)); // 7/6 wraps around
    for (std::int64_t p = 0; p < 5; ++p) CHECK(UnityRational() * u(p, 5) == u(p, 5));
}

TEST_CASE("inverse") {
    CHECK(UnityRational().inverse() == UnityRational());
    CHECK(u(1, 3).inverse() == u(2, 3));
    CHECK(u(1, 2).inverse() == u(1, 2));
    for (std::int64_t q = 1; q <= 8; ++q)
        for (std::int64_t p = 0; p < q; ++p) CHECK(u(p, q).inverse().inverse() == u(p, q));
}

TEST_CASE("powers and order") {
    CHECK(u(1, 6).pow(4) == u(2, 3));
    CHECK(u(1, 6).pow(-1) == u(1, 6).inverse());
    CHECK(u(2, 6).order() == 3); // stored reduced
    CHECK(UnityRational().order() == 1);
    CHECK(u(1, 6).pow(6).is_identity());
}

TEST_CASE("fixed coordinate sets") {
    Weights w = Weights::of({1, 2, 3});
    CHECK(fixed_set(u(1, 3), w) == IndexSet{2});
    CHECK(fixed_set(UnityRational(), w) == IndexSet{0, 1, 2});
    CHECK(fixed_set(u(1, 2), w) == IndexSet{1});
    CHECK(in_sector_union(u(1, 3), w));
    CHECK_FALSE(in_sector_union(u(1, 6), w));
    for (std::int64_t q = 1; q <= 12; ++q)
        for (std::int64_t p = 0; p < q; ++p)
            CHECK(fixed_set(u(p, q), w) == fixed_set(u(p, q).inverse(), w));
}

TEST_CASE("index set operations") {
    IndexSet a{0, 2};
    IndexSet b{1, 2};
    CHECK(a.unioned(b) == IndexSet{0, 1, 2});
    CHECK(a.intersected(b) == IndexSet{2});
    CHECK(a.minus(b) == IndexSet{0});
    CHECK(a.contains(2));
    CHECK_FALSE(a.contains(1));
    CHECK(IndexSet{}.empty());
}

TEST_CASE("age") {
    Weights w = Weights::of({1, 2, 3});
    CHECK(age(UnityRational(), w) == Rational(0));
    CHECK(age(u(1, 3), w) == Rational(1)); // 1/3 + 2/3 + 0
    CHECK(age(u(1, 2), w) == Rational(1)); // 1/2 + 0 + 1/2

    // a(g) + a(g^-1) = n + 1 - #I(g), also away from the sector union.
    for (std::int64_t q = 1; q <= 12; ++q) {
        for (std::int64_t p = 0; p < q; ++p) {
            UnityRational g = u(p, q);
            CHECK(age(g, w) + age(g.inverse(), w) ==
                  Rational(w.n() + 1 - fixed_set(g, w).size()));
        }
    }
}

TEST_CASE("sector enumeration") {
    SectorEnumeration s(Weights::of({1, 2, 3}));
    REQUIRE(s.size() == 6);
    std::vector<UnityRational> args;
    std::vector<int> origins;
    for (int k = 0; k < 6; ++k) {
        args.push_back(s.arg(k));
        origins.push_back(s.origin(k));
    }
    CHECK(args == std::vector<UnityRational>{UnityRational(), UnityRational(), UnityRational(),
                                             u(1, 3), u(1, 2), u(2, 3)});
    CHECK(origins == std::vector<int>{0, 1, 2, 2, 1, 2});
    CHECK(s.distinct_args() ==
          std::vector<UnityRational>{UnityRational(), u(1, 3), u(1, 2), u(2, 3)});

    SectorEnumeration single(Weights::of({1}));
    REQUIRE(single.size() == 1);
    CHECK(single.arg(0).is_identity());

    SectorEnumeration pair(Weights::of({2, 2}));
    REQUIRE(pair.size() == 4);
    std::vector<UnityRational> pair_args;
    std::vector<int> pair_origins;
    for (int k = 0; k < 4; ++k) {
        pair_args.push_back(pair.arg(k));
        pair_origins.push_back(pair.origin(k));
    }
    CHECK(pair_args ==
          std::vector<UnityRational>{UnityRational(), UnityRational(), u(1, 2), u(1, 2)});
    CHECK(pair_origins == std::vector<int>{0, 1, 0, 1});
}

TEST_CASE("k_min: closed form against the enumeration scan") {
    Weights w = Weights::of({1, 2, 3});
    CHECK(k_min(u(1, 2), w) == 4);
    CHECK(k_min(UnityRational(), w) == 0);
    // Outside the sector union, k_min counts the entries with smaller argument.
    CHECK(k_min(u(1, 6), w) == 3);

    for (const Weights& wv : {Weights::of({1, 2, 3}), Weights::of({2, 2}),
                              Weights::of({1, 1, 3}), Weights::of({5}), Weights::of({7, 5})}) {
        SectorEnumeration s(wv);
        for (std::int64_t q = 1; q <= 10; ++q) {
            for (std::int64_t p = 0; p < q; ++p) {
                UnityRational g = u(p, q);
                if (in_sector_union(g, wv)) {
                    CHECK(k_min(g, wv) == scan_window(s, g).first);
                } else {
                    CHECK(k_min(g, wv) == count_below(s, g));
                }
            }
        }
    }
}

TEST_CASE("k_max: closed form against the enumeration scan, partial domain") {
    Weights w = Weights::of({1, 2, 3});
    CHECK(k_max(UnityRational(), w) == 2);
    CHECK(k_max(u(1, 3), w) == 3);
    CHECK_THROWS_AS(k_max(u(1, 6), w), std::domain_error);

    for (const Weights& wv : {Weights::of({1, 2, 3}), Weights::of({4, 6}), Weights::of({7, 5})}) {
        SectorEnumeration s(wv);
        for (const UnityRational& g : s.distinct_args()) {
            auto [lo, hi] = scan_window(s, g);
            CHECK(k_min(g, wv) == lo);
            CHECK(k_max(g, wv) == hi);
            CHECK(k_max(g, wv) - k_min(g, wv) + 1 == fixed_set(g, wv).size());
        }
    }
}

TEST_CASE("j_set") {
    Weights w = Weights::of({1, 2, 3});
    CHECK(j_set(u(1, 3), u(1, 3), w) == IndexSet{1});
    SectorEnumeration sectors(w);
    for (const UnityRational& h : sectors.distinct_args())
        CHECK(j_set(UnityRational(), h, w).empty());
    CHECK(j_set(u(2, 3), u(2, 3), w) == IndexSet{0});
}

TEST_CASE("sector partition") {
    Weights w = Weights::of({1, 2, 3});

    SectorPartition p = sector_partition(u(1, 3), u(1, 3), w);
    CHECK(p.fixed_union == IndexSet{2});
    CHECK(p.product_only.empty());
    CHECK(p.j_gh == IndexSet{1});
    CHECK(p.j_inv == IndexSet{0});

    p = sector_partition(UnityRational(), UnityRational(), w);
    CHECK(p.fixed_union == IndexSet{0, 1, 2});
    CHECK(p.product_only.empty());
    CHECK(p.j_gh.empty());
    CHECK(p.j_inv.empty());

    p = sector_partition(u(1, 3), u(2, 3), w);
    CHECK(p.fixed_union == IndexSet{2});
    CHECK(p.product_only == IndexSet{0, 1});
    CHECK(p.j_gh.empty());
    CHECK(p.j_inv.empty());

    // The four parts tile [0, n] for every pair of sector arguments.
    for (const Weights& wv : {Weights::of({1, 2, 3}), Weights::of({4, 6}), Weights::of({2, 2})}) {
        SectorEnumeration s(wv);
        for (const UnityRational& g : s.distinct_args()) {
            for (const UnityRational& h : s.distinct_args()) {
                SectorPartition parts = sector_partition(g, h, wv);
                IndexSet all = parts.fixed_union.unioned(parts.product_only)
                                   .unioned(parts.j_gh)
                                   .unioned(parts.j_inv);
                CHECK(all.size() == wv.n() + 1);
                CHECK(parts.fixed_union.size() + parts.product_only.size() +
                          parts.j_gh.size() + parts.j_inv.size() ==
                      wv.n() + 1);
            }
        }
    }
}
