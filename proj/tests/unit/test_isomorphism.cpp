#include <doctest.h>

#include <vector>

#include "orbifold/isomorphism.hpp"
#include "orbifold/structure_table.hpp"

using namespace orbifold;

namespace {

UnityRational u(std::int64_t p, std::int64_t q) { return UnityRational::fraction(p, q); }
ChowBasisIndex eta(std::int64_t p, std::int64_t q, int d) { return ChowBasisIndex{u(p, q), d}; }

} // namespace

TEST_CASE("basis assignments for w=(1,2,3)") {
    XiMap xi(Weights::of({1, 2, 3}));
    CHECK(xi.image_exponent(eta(0, 1, 0)) == 0);
    CHECK(xi.image_exponent(eta(0, 1, 1)) == 1);
    CHECK(xi.image_exponent(eta(0, 1, 2)) == 2);
    CHECK(xi.image_exponent(eta(1, 3, 0)) == 5);
    CHECK(xi.image_exponent(eta(1, 2, 0)) == 4);
    CHECK(xi.image_exponent(eta(2, 3, 0)) == 3);
    CHECK(xi.exponents() == std::vector<std::int64_t>{0, 1, 2, 5, 4, 3});
}

TEST_CASE("preimages invert the assignment") {
    XiMap xi(Weights::of({1, 2, 3}));
    CHECK(xi.preimage(5) == eta(1, 3, 0));
    CHECK(xi.preimage(0) == eta(0, 1, 0));
    CHECK_THROWS_AS(xi.preimage(6), std::out_of_range);
}

TEST_CASE("linear extension and round trips") {
    XiMap xi(Weights::of({1, 2, 3}));
    ChowElement x = ChowElement::combination({{Rational(2), eta(1, 3, 0)},
                                              {Rational(-1, 3), eta(0, 1, 2)}});
    ModelElement z = xi.apply(x);
    CHECK(z == ModelElement::combination({{Rational(2), 5}, {Rational(-1, 3), 2}}));
    CHECK(xi.invert(z) == x);

    for (const Weights& w :
         {Weights::of({1, 2, 2, 3, 3, 3}), Weights::of({7, 5}), Weights::of({5})}) {
        XiMap map(w);
        for (const ChowBasisIndex& b : map.chow().basis()) {
            ChowElement e = ChowElement::basis(b);
            CHECK(map.invert(map.apply(e)) == e);
        }
        for (std::int64_t j = 0; j < w.total(); ++j) {
            ModelElement e = ModelElement::basis(j);
            CHECK(map.apply(map.invert(e)) == e);
        }
    }
}

TEST_CASE("structure tables") {
    Weights w = Weights::of({1, 2, 3});
    FrobeniusTable chow = structure_table(ChowRing(w));
    FrobeniusTable model = structure_table(ModelRing(w));

    CHECK(chow.ring == "chow");
    CHECK(chow.dim() == 6);
    CHECK(chow.labels[0] == "eta(gamma=0, d=0)");
    CHECK(chow.labels[3] == "eta(gamma=1/3, d=0)");
    CHECK(chow.unit == 0);

    CHECK(model.ring == "model");
    CHECK(model.labels[5] == "xi^5");
    CHECK(model.product_at(3, 5) == 2);
    CHECK(model.product_at(2, 2) == FrobeniusTable::kZero);
    CHECK(model.gram_at(0, 2) == Rational(1, 6));

    CHECK(gram_invertible(chow));
    CHECK(gram_invertible(model));

    FrobeniusTable singular = model;
    for (std::size_t j = 0; j < singular.dim(); ++j) singular.gram_at(2, j) = Rational(0);
    CHECK_FALSE(gram_invertible(singular));
}
