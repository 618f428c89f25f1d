#include <doctest.h>

#include "redalg/rational.hpp"

using namespace redalg;

namespace {

Poly H() { return Poly::variable(Var::h); }
Poly C(long v) { return Poly(v); }

}  // namespace

TEST_CASE("grlex order: total degree first, then exponent comparison") {
    Poly p = H() * H() + Poly::variable(Var::nu) * Poly::variable(Var::nu) *
                             Poly::variable(Var::h);
    // nu^2 h has total degree 3 and dominates h^2.
    Exponents lead = p.leading_exponents();
    CHECK(lead[static_cast<int>(Var::h)] == 1);
    CHECK(lead[static_cast<int>(Var::nu)] == 2);

    // Among equal total degrees the earlier variable wins.
    Poly q = H() + Poly::variable(Var::nu);
    CHECK(q.leading_exponents()[static_cast<int>(Var::h)] == 1);
}

TEST_CASE("polynomial arithmetic is exact and canonical") {
    Poly p = (H() + C(1)) * (H() - C(1));
    CHECK(p == H() * H() - C(1));
    CHECK(p.total_degree() == 2);
    CHECK((p - p).is_zero());
    CHECK(Poly().total_degree() == -1);

    Poly cube = (H() + C(2)).pow(3);
    CHECK(cube == H() * H() * H() + C(6) * H() * H() + C(12) * H() + C(8));
}

TEST_CASE("shift is substitution h -> h + c") {
    Poly p = H() * H();
    CHECK(p.shifted(Var::h, Rational(-2)) == H() * H() - C(4) * H() + C(4));
    // Other variables are untouched.
    Poly m = Poly::variable(Var::M);
    CHECK(m.shifted(Var::h, Rational(5)) == m);
}

TEST_CASE("gcd of univariate and multivariate polynomials") {
    CHECK(poly_gcd(H() * (H() + C(2)), H() + C(2)) == H() + C(2));
    Poly common = H() + Poly::variable(Var::nu);
    Poly g = poly_gcd(common * (H() + C(1)), common * (H() - C(1)));
    CHECK(g == common);
    // gcd is normalized with positive leading coefficient.
    Poly minus = (H() + C(2)).scaled(Rational(-3));
    CHECK(poly_gcd(minus, Poly()) == H() + C(2));
}

TEST_CASE("fractions reduce and keep a monic denominator") {
    RatFunc sum = RatFunc(C(1), H()) + RatFunc(C(1), H() + C(2));
    CHECK(sum == RatFunc(C(2) * H() + C(2), H() * H() + C(2) * H()));

    RatFunc reduced = RatFunc(H() * H() - C(1), H() - C(1));
    CHECK(reduced == RatFunc(H() + C(1)));

    RatFunc monic = RatFunc(H(), C(2) * H() + C(2));
    CHECK(monic.den().leading_coefficient() == Rational(1));
    CHECK(monic.den() == H() + C(1));
    CHECK(monic.num() == H().scaled(Rational(1, 2)));
}

TEST_CASE("field operations") {
    RatFunc f(H() + C(2), H());
    CHECK(f * f.inv() == RatFunc(Rational(1)));
    CHECK(f / f == RatFunc(Rational(1)));
    CHECK((f - f).is_zero());
    CHECK(f.pow(2) == f * f);
    CHECK_THROWS_AS(RatFunc().inv(), std::domain_error);
    CHECK_THROWS_AS(f / RatFunc(), std::domain_error);
}

TEST_CASE("weight shift on fractions") {
    RatFunc f(H() + C(4), H() + C(2));
    CHECK(f.shift(Rational(-2)) == RatFunc(H() + C(2), H()));
    CHECK(f.shift(Rational(0)) == f);
    CHECK(f.shift(Rational(-2)).shift(Rational(2)) == f);
}

TEST_CASE("degree functional and symbol") {
    CHECK(RatFunc(H() * H() + C(1), H()).degree() == Degree::of(1));
    CHECK(RatFunc(C(5), H()).degree() == Degree::of(-1));
    CHECK(RatFunc(C(5), H()).symbol() == Rational(5));
    CHECK(RatFunc(H() + C(2), H()).degree() == Degree::of(0));
    CHECK(RatFunc(H() + C(2), H()).symbol() == Rational(1));
    CHECK(!RatFunc().degree().finite());
    CHECK(RatFunc().degree() == Degree::neg_infinity());
    CHECK_THROWS_AS(RatFunc().symbol(), std::domain_error);

    RatFunc b(H() * (H() + C(3)), (H() + C(1)) * (H() + C(2)));
    CHECK(b.degree() == Degree::of(0));
    CHECK(b.symbol() == Rational(1));

    CHECK(Degree::of(2) + Degree::of(3) == Degree::of(5));
    CHECK(Degree::neg_infinity() + Degree::of(3) == Degree::neg_infinity());
    CHECK(Degree::neg_infinity() <= Degree::of(-100));
    CHECK(Degree::of(-1) <= Degree::of(0));
    CHECK(!(Degree::of(1) <= Degree::of(0)));
}

TEST_CASE("the telescoping partial-fraction identity holds exactly") {
    RatFunc y = RatFunc::variable(Var::h);
    RatFunc two{Rational(2)};
    RatFunc lhs =
        RatFunc(Rational(4)) * (y + RatFunc(Rational(1))) /
        (y.pow(2) * (y + two).pow(2));
    RatFunc rhs = y.pow(2).inv() - (y + two).pow(2).inv();
    CHECK(lhs == rhs);
}

TEST_CASE("substitution composes fractions exactly") {
    RatFunc f(H() + C(2), H());
    RatFunc twoj = RatFunc(Poly::variable(Var::j).scaled(Rational(2)));
    RatFunc g = substitute(f, {{Var::h, twoj}});
    CHECK(g == RatFunc(Poly::variable(Var::j) + C(1), Poly::variable(Var::j)));

    // Unassigned variables map to themselves.
    CHECK(substitute(f, {}) == f);

    CHECK_THROWS_WITH_AS(substitute(RatFunc(C(1), H()), {{Var::h, RatFunc()}}),
                         "singular substitution", std::domain_error);
}

TEST_CASE("shift_var is an exact automorphism in any variable") {
    RatFunc f(Poly::variable(Var::j) + C(1), Poly::variable(Var::j));
    RatFunc g = shift_var(f, Var::j, Rational(1));
    CHECK(g == RatFunc(Poly::variable(Var::j) + C(2),
                       Poly::variable(Var::j) + C(1)));
    CHECK(shift_var(g, Var::j, Rational(-1)) == f);
}

TEST_CASE("canonical text rendering") {
    CHECK((H() * H() + C(2) * H() - C(3)).str() == "h^2 + 2*h - 3");
    CHECK((-H()).str() == "-h");
    CHECK(Poly().str() == "0");
    CHECK(Poly(Rational(3, 4)).str() == "3/4");
    CHECK(RatFunc(H() + C(2), H()).str() == "(h + 2)/(h)");
    CHECK(RatFunc(H() + C(2)).str() == "h + 2");
}

TEST_CASE("variable names round-trip") {
    for (auto v : {Var::h, Var::nu, Var::zeta, Var::M, Var::j})
        CHECK(var_from_name(var_name(v)) == v);
    CHECK(!var_from_name("q").has_value());
}
