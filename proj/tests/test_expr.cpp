#include <doctest.h>

#include <vector>

#include "redalg/drsl2.hpp"
#include "redalg/expr.hpp"

using namespace redalg;

namespace {

Poly H() { return Poly::variable(Var::h); }

}  // namespace

TEST_CASE("atoms and whitespace") {
    DRsl2 alg = build_drsl2();
    CHECK(parse_element("z+") == NCElement::from_word({alg.zp}));
    CHECK(parse_element("z-") == NCElement::from_word({alg.zm}));
    CHECK(parse_element("t") == NCElement::from_word({alg.t}));
    CHECK(parse_element("h") == NCElement::scalar(RatFunc(H())));
    CHECK(parse_element("nu") == NCElement::scalar(RatFunc::variable(Var::nu)));
    CHECK(parse_element("42") == NCElement::scalar(RatFunc(Rational(42))));
    CHECK(parse_element("z+*t") == parse_element("  z+ * t  "));
}

TEST_CASE("products keep coefficients on the left of words") {
    DRsl2 alg = build_drsl2();
    // A trailing coefficient is pushed across the word: h shifts by -2.
    NCElement e = parse_element("z+ * h");
    CHECK(e == NCElement::from_word({alg.zp}, RatFunc(H() - Poly(2))));
    CHECK(parse_element("h * z+") ==
          NCElement::from_word({alg.zp}, RatFunc(H())));
}

TEST_CASE("powers, quotients, parentheses, unary minus") {
    DRsl2 alg = build_drsl2();
    CHECK(parse_element("t^3") ==
          NCElement::from_word({alg.t, alg.t, alg.t}));
    CHECK(parse_element("t^0") == NCElement::unit());
    CHECK(parse_element("(h+2)/h * t") ==
          NCElement::from_word({alg.t}, RatFunc(H() + Poly(2), H())));
    CHECK(parse_element("- t^2 * 1/h") ==
          NCElement::from_word({alg.t, alg.t}, RatFunc(Poly(-1), H())));
    CHECK(parse_element("3/4 * h") ==
          NCElement::scalar(RatFunc(H().scaled(Rational(3, 4)))));
    CHECK(parse_element("(z+ + z-)^2") ==
          parse_element("z+*z+ + z+*z- + z-*z+ + z-*z-"));
    CHECK(parse_element("0").is_zero());
}

TEST_CASE("the central elements typed in right-coefficient form") {
    DRsl2 alg = build_drsl2();
    CHECK(parse_element("(h+2) * t") == casimir1(alg));
    CHECK(parse_element("z- * z+ * (h+3)/(h+2) + t^2 * 1/4 + h*(h+4)/4") ==
          casimir2(alg));
}

TEST_CASE("the ordering relations typed in right-coefficient form") {
    DRsl2 alg = build_drsl2();
    CHECK(parse_element("t * z+ * (h+4)/(h+2)") ==
          alg.presentation.rule_for(alg.zp, alg.t).rhs);
    CHECK(parse_element(
              "z- * z+ * h*(h+3)/((h+1)*(h+2)) - t^2 * 1/h + h") ==
          alg.presentation.rule_for(alg.zp, alg.zm).rhs);
    CHECK(parse_element("z- * t * (h+2)/h") ==
          alg.presentation.rule_for(alg.t, alg.zm).rhs);
}

TEST_CASE("parse after render is the identity") {
    DRsl2 alg = build_drsl2();
    std::vector<NCElement> cases = {
        NCElement::zero(),
        NCElement::unit(),
        NCElement::scalar(RatFunc(H() + Poly(2), H())),
        NCElement::from_word({alg.zm, alg.zm, alg.zp}),
        casimir1(alg),
        casimir2(alg),
        alg.presentation.rule_for(alg.zp, alg.zm).rhs,
        -casimir2(alg),
        NCElement::from_word({alg.t}, RatFunc(Poly(-7))) +
            NCElement::from_word({alg.zp, alg.zp},
                                 RatFunc(H().scaled(Rational(-3, 2)))),
    };
    for (const NCElement& e : cases) {
        CHECK(parse_element(render(e)) == e);
    }
}

TEST_CASE("rendering conventions") {
    DRsl2 alg = build_drsl2();
    CHECK(render(NCElement::zero()) == "0");
    CHECK(render(NCElement::unit()) == "1");
    CHECK(render(NCElement::from_word({alg.zp, alg.zp})) == "z+^2");
    CHECK(render(NCElement::from_word({alg.t}, RatFunc(H() + Poly(2)))) ==
          "(h + 2) * t");
    CHECK(render(NCElement::from_word({alg.t}, RatFunc(H() + Poly(2), H()))) ==
          "(h + 2)/(h) * t");
    CHECK(render(NCElement::scalar(RatFunc(Rational(-3)))) == "-3");
}

TEST_CASE("parse errors carry a position") {
    // 'z' must be immediately followed by '+' or '-'.
    CHECK_THROWS_AS(parse_element("z t"), ParseError);
    try {
        parse_element("t * z * t");
    } catch (const ParseError& e) {
        CHECK(e.position() == 4);
        CHECK(std::string(e.what()).find("position 4") != std::string::npos);
    }

    CHECK_THROWS_AS(parse_element(""), ParseError);
    CHECK_THROWS_AS(parse_element("q"), ParseError);      // unknown symbol
    CHECK_THROWS_AS(parse_element("j"), ParseError);      // index, not a symbol
    CHECK_THROWS_AS(parse_element("(h+2"), ParseError);   // missing ')'
    CHECK_THROWS_AS(parse_element("h +"), ParseError);    // dangling operator
    CHECK_THROWS_AS(parse_element("h) "), ParseError);    // trailing input
    CHECK_THROWS_AS(parse_element("t ^ h"), ParseError);  // exponent not a number
    CHECK_THROWS_AS(parse_element("1/0"), ParseError);    // division by zero
    CHECK_THROWS_AS(parse_element("t / z+"), ParseError); // non-scalar divisor
    CHECK_THROWS_AS(parse_element("h $ t"), ParseError);  // stray character
}

TEST_CASE("custom generator lists") {
    std::vector<Generator> gens = {{"a", -1}, {"b", 1}};
    NCElement e = parse_element("b * a", gens);
    CHECK(e == NCElement::from_word({gens[1], gens[0]}));
    // The default names are not visible under a custom list.
    CHECK_THROWS_AS(parse_element("t", gens), ParseError);
    // Coefficient variables always are.
    CHECK(parse_element("h + nu", gens) ==
          NCElement::scalar(RatFunc(H()) + RatFunc::variable(Var::nu)));
}
