#include <doctest.h>

#include "redalg/element.hpp"

using namespace redalg;

namespace {

const Generator zm{"z-", -2};
const Generator tt{"t", 0};
const Generator zp{"z+", +2};

RatFunc frac(long a, long b) {
    return RatFunc(Poly::variable(Var::h) + Poly(a),
                   Poly::variable(Var::h) + Poly(b));
}

}  // namespace

TEST_CASE("word weight is additive") {
    CHECK(word_weight({}) == 0);
    CHECK(word_weight({zp, zp}) == 4);
    CHECK(word_weight({zm, tt, zp}) == 0);
    CHECK(word_weight({zm, zm, tt}) == -4);
}

TEST_CASE("push_left shifts the argument by minus the word weight") {
    RatFunc f = frac(4, 2);
    // Moving f across z- (weight -2) substitutes h -> h + 2.
    CHECK(push_left(f, {zm}) == frac(6, 4));
    // Across z+ (weight +2) it substitutes h -> h - 2.
    CHECK(push_left(f, {zp}) == frac(2, 0));
    // Weight-zero letters commute with coefficients.
    CHECK(push_left(f, {tt}) == f);
    CHECK(push_left(f, {zm, zp}) == f);
}

TEST_CASE("concatenation carries coefficients to the left") {
    NCElement left = NCElement::from_word({zm});
    NCElement right = NCElement::from_word({zp}, frac(4, 2));
    NCElement prod = left * right;
    CHECK(prod.coefficient({zm, zp}) == frac(6, 4));

    // Scalars on the left multiply plainly.
    NCElement scaled = NCElement::scalar(frac(4, 2)) * NCElement::from_word({zp});
    CHECK(scaled.coefficient({zp}) == frac(4, 2));

    // Scalars arriving from the right are pushed across the word.
    NCElement pushed = NCElement::from_word({zp}) * NCElement::scalar(frac(4, 2));
    CHECK(pushed.coefficient({zp}) == frac(2, 0));
}

TEST_CASE("product distributes over sums of terms") {
    NCElement a = NCElement::from_word({zp}) + NCElement::from_word({tt});
    NCElement b = NCElement::from_word({zm}, RatFunc(Rational(3)));
    NCElement prod = a * b;
    CHECK(prod.coefficient({zp, zm}) == RatFunc(Rational(3)));
    CHECK(prod.coefficient({tt, zm}) == RatFunc(Rational(3)));
    CHECK(prod.terms().size() == 2);
}

TEST_CASE("additive structure cancels exactly") {
    NCElement a = NCElement::from_word({zp, tt}, frac(2, 0));
    CHECK((a - a).is_zero());
    CHECK((a + (-a)).is_zero());

    NCElement b;
    b.add_term({tt}, RatFunc(Rational(1)));
    b.add_term({tt}, RatFunc(Rational(-1)));
    CHECK(b.is_zero());
    CHECK(b.terms().empty());
}

TEST_CASE("word order: length first, then letter names") {
    WordOrder less;
    CHECK(less({}, {tt}));
    CHECK(less({tt}, {zm, zm}));
    CHECK(less({tt}, {zp}));      // "t" precedes "z+"
    CHECK(less({zp}, {zm}));      // "z+" precedes "z-" in plain byte order
    CHECK(!less({zp}, {zp}));
}

TEST_CASE("weight of an element") {
    CHECK(weight_of(NCElement::zero()) == 0);
    CHECK(weight_of(NCElement::scalar(frac(1, 0))) == 0);
    CHECK(weight_of(NCElement::from_word({zp, zp})) == 4);
    NCElement mixed = NCElement::from_word({zp}) + NCElement::from_word({zm});
    CHECK(!weight_of(mixed).has_value());
}

TEST_CASE("weight components split an element by weight") {
    NCElement mixed = NCElement::from_word({zp}) +
                      NCElement::from_word({zm}, RatFunc(Rational(3))) +
                      NCElement::from_word({tt});
    auto comps = weight_components(mixed);
    REQUIRE(comps.size() == 3);
    CHECK(comps[0].first == -2);
    CHECK(comps[0].second == NCElement::from_word({zm}, RatFunc(Rational(3))));
    CHECK(comps[1].first == 0);
    CHECK(comps[1].second == NCElement::from_word({tt}));
    CHECK(comps[2].first == 2);
    CHECK(comps[2].second == NCElement::from_word({zp}));

    // Recombining the components restores the element.
    NCElement sum;
    for (const auto& [w, part] : comps) sum = sum + part;
    CHECK(sum == mixed);
}

TEST_CASE("max word length") {
    CHECK(NCElement::zero().max_word_length() == 0);
    CHECK(NCElement::unit().max_word_length() == 0);
    NCElement e = NCElement::from_word({zp, tt, zm}) + NCElement::from_word({tt});
    CHECK(e.max_word_length() == 3);
}

TEST_CASE("unit is the multiplicative identity") {
    NCElement a = NCElement::from_word({zp, tt}, frac(3, 1));
    CHECK(NCElement::unit() * a == a);
    CHECK(a * NCElement::unit() == a);
}
