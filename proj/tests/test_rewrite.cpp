#include <doctest.h>

#include <sstream>

#include "redalg/drsl2.hpp"
#include "redalg/presentation_io.hpp"
#include "redalg/rewrite.hpp"

using namespace redalg;

namespace {

const Generator ga{"a", -1};
const Generator gb{"b", +1};

RatFunc frac(long p, long q) {
    return RatFunc(Poly::variable(Var::h) + Poly(p),
                   Poly::variable(Var::h) + Poly(q));
}

// b a -> (h+1)/h a b + 1.  Single rule, no decreasing triples, confluent.
Presentation tiny() {
    NCElement rhs = NCElement::from_word({ga, gb}, frac(1, 0)) + NCElement::unit();
    return Presentation({ga, gb}, {RewriteRule{gb, ga, rhs}});
}

// Scales the reversed-pair coefficient of the (first, second) rule by 2;
// weights are untouched so the result is still a valid presentation, only
// the coefficient is wrong.
Presentation perturbed(const Presentation& p, const std::string& first,
                       const std::string& second) {
    std::vector<RewriteRule> rules = p.rules();
    for (auto& r : rules) {
        if (r.lhs_first.name != first || r.lhs_second.name != second) continue;
        NCElement rhs;
        for (const auto& [w, c] : r.rhs.terms()) {
            bool reversed = w.size() == 2 && w[0].name == second &&
                            w[1].name == first;
            rhs.add_term(w, reversed ? c * RatFunc(Rational(2)) : c);
        }
        r.rhs = rhs;
    }
    return Presentation(p.generators(), std::move(rules));
}

}  // namespace

TEST_CASE("presentation validation rejects malformed input") {
    NCElement ok = NCElement::from_word({ga, gb}, frac(1, 0));

    // Duplicate generator names.
    CHECK_THROWS_AS(Presentation({ga, Generator{"a", 3}}, {}),
                    std::invalid_argument);
    // Missing rule for a decreasing pair.
    CHECK_THROWS_AS(Presentation({ga, gb}, {}), std::invalid_argument);
    // Rule attached to a non-decreasing pair.
    CHECK_THROWS_AS(
        Presentation({ga, gb}, {RewriteRule{ga, gb, ok}}),
        std::invalid_argument);
    // Unordered rhs word.
    CHECK_THROWS_AS(
        Presentation({ga, gb},
                     {RewriteRule{gb, ga, NCElement::from_word({gb, ga})}}),
        std::invalid_argument);
    // rhs word longer than two letters.
    CHECK_THROWS_AS(
        Presentation({ga, gb},
                     {RewriteRule{gb, ga, NCElement::from_word({ga, ga, gb})}}),
        std::invalid_argument);
    // Weight-inhomogeneous rhs.
    CHECK_THROWS_AS(
        Presentation({ga, gb},
                     {RewriteRule{gb, ga, NCElement::from_word({gb, gb})}}),
        std::invalid_argument);
    // Duplicate rule for the same pair.
    CHECK_THROWS_AS(
        Presentation({ga, gb},
                     {RewriteRule{gb, ga, ok}, RewriteRule{gb, ga, ok}}),
        std::invalid_argument);
}

TEST_CASE("declared order decreasing in weight only warns") {
    NCElement rhs = NCElement::from_word({gb, ga});
    Presentation flipped({gb, ga}, {RewriteRule{ga, gb, rhs}});
    CHECK(!flipped.warnings().empty());
    CHECK(tiny().warnings().empty());
    CHECK(build_drsl2().presentation.warnings().empty());
}

TEST_CASE("rule lookup") {
    Presentation p = tiny();
    CHECK(p.rule_count() == 1);
    CHECK(p.rule_for(gb, ga).lhs_first == gb);
    CHECK_THROWS_WITH_AS(p.rule_for(ga, gb), "incomplete presentation",
                         std::runtime_error);
    CHECK(p.is_ordered_word({ga, ga, gb}));
    CHECK(!p.is_ordered_word({gb, ga}));
    CHECK(p.order_index("a") == 0);
    CHECK(p.order_index("b") == 1);
}

TEST_CASE("single rewriting step replaces one descent") {
    Presentation p = tiny();
    StepResult step = apply_once(p, NCElement::from_word({gb, ga}));
    CHECK(step.changed);
    NCElement expect =
        NCElement::from_word({ga, gb}, frac(1, 0)) + NCElement::unit();
    CHECK(step.element == expect);

    StepResult fixed = apply_once(p, expect);
    CHECK(!fixed.changed);
    CHECK(fixed.element == expect);
}

TEST_CASE("normal form carries prefix shifts into the coefficients") {
    Presentation p = tiny();
    NCElement nf = normal_form(p, NCElement::from_word({gb, gb, ga}));
    // b(ba) rewrites under a prefix of weight +1, so (h+1)/h enters
    // shifted once, and the two descents compose to:
    NCElement expect =
        NCElement::from_word({ga, gb, gb},
                             RatFunc(Poly::variable(Var::h) + Poly(1),
                                     Poly::variable(Var::h) - Poly(1))) +
        NCElement::from_word({gb},
                             RatFunc(Poly::variable(Var::h).scaled(Rational(2)) -
                                         Poly(1),
                                     Poly::variable(Var::h) - Poly(1)));
    CHECK(nf == expect);
    // Normal forms are fixed points.
    CHECK(normal_form(p, nf) == nf);
}

TEST_CASE("redex selection strategies agree on normal forms") {
    Presentation p = tiny();
    NCElement x = NCElement::from_word({gb, ga}) +
                  NCElement::from_word({gb, gb, ga}, frac(3, 1)) +
                  NCElement::from_word({gb, ga, gb, ga});
    NCElement nf_first = normal_form(p, x, kDefaultMaxSteps, Strategy::first_word);
    NCElement nf_last = normal_form(p, x, kDefaultMaxSteps, Strategy::last_word);
    CHECK(nf_first == nf_last);

    DRsl2 alg = build_drsl2();
    NCElement y = NCElement::from_word({alg.zp, alg.t, alg.zm}) +
                  NCElement::from_word({alg.zp, alg.zm}, frac(2, 0));
    CHECK(normal_form(alg.presentation, y, kDefaultMaxSteps,
                      Strategy::first_word) ==
          normal_form(alg.presentation, y, kDefaultMaxSteps,
                      Strategy::last_word));
}

TEST_CASE("termination guard") {
    Presentation p = tiny();
    NCElement deep = NCElement::from_word({gb, gb, ga});
    CHECK_THROWS_WITH_AS(normal_form(p, deep, 1), "termination guard tripped",
                         std::runtime_error);
    CHECK_THROWS_AS(normal_form(p, deep, 0), std::invalid_argument);
    // Enough steps succeed.
    CHECK(normal_form(p, deep, 10) == normal_form(p, deep));
}

TEST_CASE("confluence of the diagonal reduction algebra presentation") {
    DRsl2 alg = build_drsl2();
    ConfluenceReport report = check_confluence(alg.presentation);
    CHECK(report.overall);
    REQUIRE(report.triples.size() == 1);
    CHECK(report.triples[0].triple ==
          std::array<std::string, 3>{"z+", "t", "z-"});
    CHECK(report.triples[0].equal);
    CHECK(report.triples[0].nf_left == report.triples[0].nf_right);

    // A presentation with no decreasing triple is vacuously confluent.
    ConfluenceReport small = check_confluence(tiny());
    CHECK(small.overall);
    CHECK(small.triples.empty());
}

TEST_CASE("perturbing a swap-rule coefficient destroys confluence") {
    // The single overlap z+ t z- forces the (z+, t) and (t, z-) coefficients
    // to be shifts of one another; scaling either one breaks the diamond.
    DRsl2 alg = build_drsl2();
    CHECK(!check_confluence(perturbed(alg.presentation, "z+", "t")).overall);
    CHECK(!check_confluence(perturbed(alg.presentation, "t", "z-")).overall);
}

TEST_CASE("the exchange rule is invisible to the single overlap") {
    // Both reduction orders of z+ t z- route through the (z+, z-) rule
    // exactly once with the same shift, so its coefficients cancel from the
    // comparison: a scaled exchange rule still passes the confluence check.
    // Pinning those coefficients is the module oracle's job.
    DRsl2 alg = build_drsl2();
    Presentation bad = perturbed(alg.presentation, "z+", "z-");
    CHECK(check_confluence(bad).overall);
}

TEST_CASE("ordered word enumeration by degree") {
    Presentation p = tiny();
    CHECK(enumerate_basis(p, 0).size() == 1);
    CHECK(enumerate_basis(p, 1).size() == 3);
    CHECK(enumerate_basis(p, 2).size() == 6);

    std::vector<Word> deg2 = enumerate_basis(p, 2);
    CHECK(deg2[0].empty());
    CHECK(deg2[1] == Word{ga});
    CHECK(deg2[2] == Word{gb});
    CHECK(deg2[3] == Word{ga, ga});
    CHECK(deg2[4] == Word{ga, gb});
    CHECK(deg2[5] == Word{gb, gb});
}

TEST_CASE("presentation text round trip") {
    DRsl2 alg = build_drsl2();
    std::string text = write_presentation(alg.presentation);
    Presentation back = read_presentation(text);
    REQUIRE(back.generators().size() == 3);
    CHECK(back.generators()[0].name == "z-");
    CHECK(back.generators()[0].weight == -2);
    CHECK(back.generators()[2].name == "z+");
    REQUIRE(back.rule_count() == alg.presentation.rule_count());
    for (const auto& r : alg.presentation.rules()) {
        const RewriteRule& rr =
            back.rule_for(r.lhs_first, r.lhs_second);
        CHECK(rr.rhs == r.rhs);
    }
    // Second round trip is textually stable.
    CHECK(write_presentation(back) == text);
}

TEST_CASE("presentation text rejects malformed lines with a location") {
    std::string bad =
        "generator t weight 0\ngenerator z+ weight 2\nrule z+ ->\n";
    CHECK_THROWS_AS(read_presentation(bad), std::invalid_argument);
    try {
        read_presentation(bad);
    } catch (const std::invalid_argument& e) {
        CHECK(std::string(e.what()).find("line 3") != std::string::npos);
    }
    CHECK_THROWS_AS(read_presentation("generator a -1\n"),
                    std::invalid_argument);

    // Comments and blank lines are ignored.
    std::string commented =
        "# ordering relations\n\ngenerator a weight -1\ngenerator b weight 1\n"
        "rule b a -> a * b\n";
    Presentation p = read_presentation(commented);
    CHECK(p.rule_count() == 1);
}
