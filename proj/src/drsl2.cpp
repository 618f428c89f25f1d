#include "redalg/drsl2.hpp"

#include <random>
#include <set>
#include <stdexcept>

namespace redalg {

namespace {

Poly hvar() { return Poly::variable(Var::h); }

Poly hplus(long c) { return Poly::variable(Var::h) + Poly(c); }

}  // namespace

const Generator& DRsl2::by_name(const std::string& name) const {
    if (name == zm.name) return zm;
    if (name == t.name) return t;
    if (name == zp.name) return zp;
    throw std::invalid_argument("unknown generator: " + name);
}

DRsl2 build_drsl2() {
    Generator zm{"z-", -2};
    Generator t{"t", 0};
    Generator zp{"z+", +2};

    // Coefficients are written in left form: the relation holds with the
    // rational function standing to the left of the ordered word.
    NCElement rhs_zp_t =
        NCElement::from_word({t, zp}, RatFunc(hplus(2), hvar()));

    NCElement rhs_zp_zm =
        NCElement::from_word({zm, zp},
                             RatFunc(hvar() * hplus(3), hplus(1) * hplus(2)));
    rhs_zp_zm.add_term({t, t}, RatFunc(Poly(-1), hvar()));
    rhs_zp_zm.add_term({}, RatFunc(hvar()));

    NCElement rhs_t_zm =
        NCElement::from_word({zm, t}, RatFunc(hplus(4), hplus(2)));

    std::vector<RewriteRule> rules{
        {zp, t, rhs_zp_t},
        {zp, zm, rhs_zp_zm},
        {t, zm, rhs_t_zm},
    };

    return DRsl2{zm, t, zp, Presentation({zm, t, zp}, std::move(rules))};
}

NCElement casimir1(const DRsl2& alg) {
    return NCElement::from_word({alg.t}, RatFunc(hplus(2)));
}

NCElement casimir2(const DRsl2& alg) {
    NCElement c = NCElement::from_word({alg.zm, alg.zp},
                                       RatFunc(hplus(3), hplus(2)));
    c.add_term({alg.t, alg.t}, RatFunc(Rational(1, 4)));
    c.add_term({}, RatFunc((hvar() * hplus(4)).scaled(Rational(1, 4))));
    return c;
}

NCElement commutator(const DRsl2& alg, const NCElement& a,
                     const NCElement& b) {
    return normal_form(alg.presentation, a * b - b * a);
}

SymbolCheckReport graded_symbol_check(const DRsl2& alg) {
    SymbolCheckReport report;
    for (const RewriteRule& rule : alg.presentation.rules()) {
        std::multiset<std::string> lhs_names{rule.lhs_first.name,
                                             rule.lhs_second.name};
        for (const auto& [w, c] : rule.rhs.terms()) {
            if (w.size() != 2) continue;
            SymbolCheckEntry entry;
            entry.pair = rule.lhs_first.name + " " + rule.lhs_second.name;
            entry.word = w[0].name + " " + w[1].name;
            entry.degree = c.degree();
            std::multiset<std::string> word_names{w[0].name, w[1].name};
            if (word_names == lhs_names) {
                entry.ok = entry.degree == Degree::of(0) &&
                           c.symbol() == Rational(1);
            } else {
                entry.ok = entry.degree <= Degree::of(-1);
            }
            report.overall = report.overall && entry.ok;
            report.entries.push_back(std::move(entry));
        }
    }
    return report;
}

namespace {

std::string describe(const NCElement& e) {
    if (e.is_zero()) return "0";
    std::string out;
    for (const auto& [w, c] : e.terms()) {
        if (!out.empty()) out += " + ";
        out += "(" + c.str() + ")";
        for (const auto& g : w) out += " " + g.name;
    }
    return out;
}

}  // namespace

ZeroDivisorReport zero_divisor_probe(const DRsl2& alg, std::uint64_t seed,
                                     std::size_t trials,
                                     std::size_t max_degree) {
    ZeroDivisorReport report;
    report.seed = seed;
    report.trials = trials;
    report.max_degree = max_degree;

    // mt19937_64 with plain modulo keeps the draw sequence identical across
    // platforms; the slight modulo bias is irrelevant here.
    std::mt19937_64 rng(seed);
    auto pick = [&rng](std::uint64_t n) {
        return static_cast<std::size_t>(rng() % n);
    };

    const std::vector<Word> basis =
        enumerate_basis(alg.presentation, max_degree);

    auto draw = [&]() {
        NCElement e;
        while (e.is_zero()) {
            std::size_t nterms = 1 + pick(3);
            for (std::size_t i = 0; i < nterms; ++i) {
                long c = static_cast<long>(pick(11)) - 5;
                if (c == 0) c = 1;
                e.add_term(basis[pick(basis.size())], RatFunc(c));
            }
        }
        return e;
    };

    for (std::size_t i = 0; i < trials; ++i) {
        NCElement a = draw();
        NCElement b = draw();
        NCElement prod = normal_form(alg.presentation, a * b);
        if (prod.is_zero()) {
            report.found = true;
            report.witness_a = describe(a);
            report.witness_b = describe(b);
            return report;
        }
    }
    return report;
}

}  // namespace redalg
