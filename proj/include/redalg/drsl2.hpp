#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "redalg/element.hpp"
#include "redalg/rewrite.hpp"

namespace redalg {

// The diagonal reduction algebra of sl(2): generators z- (weight -2),
// t (weight 0), z+ (weight +2) over rational functions in h, ordered
// z- < t < z+.  Products are rewritten to normally ordered form through
// the three relations below; coefficients stay on the left, so moving a
// scalar f(h) across a word of weight mu shifts h by -mu.
struct DRsl2 {
    Generator zm{"z-", -2};
    Generator t{"t", 0};
    Generator zp{"z+", +2};
    Presentation presentation;

    const Generator& by_name(const std::string& name) const;
};

DRsl2 build_drsl2();

// Central elements: c1 commutes with everything; c2 is the quadratic one.
NCElement casimir1(const DRsl2& alg);
NCElement casimir2(const DRsl2& alg);

// normal_form(a*b - b*a).
NCElement commutator(const DRsl2& alg, const NCElement& a, const NCElement& b);

// Leading-behaviour constraints on the rule coefficients: the coefficient
// of the reversed-pair word must have degree 0 with symbol 1, and every
// other quadratic term must have strictly negative degree.
struct SymbolCheckEntry {
    std::string pair;        // "I J" for the rule on (I, J)
    std::string word;        // the rhs word the coefficient multiplies
    Degree degree = Degree::neg_infinity();
    bool ok = false;
};

struct SymbolCheckReport {
    std::vector<SymbolCheckEntry> entries;
    bool overall = true;
};

SymbolCheckReport graded_symbol_check(const DRsl2& alg);

// Randomized search for zero divisors among low-degree elements: draws
// pairs of nonzero elements with small integer coefficients, multiplies,
// and reports any vanishing product.  Coefficients live in a field and the
// basis is free, so none is expected.
struct ZeroDivisorReport {
    std::uint64_t seed = 0;
    std::size_t trials = 0;
    std::size_t max_degree = 0;
    bool found = false;
    std::string witness_a;  // set only when found
    std::string witness_b;
};

ZeroDivisorReport zero_divisor_probe(const DRsl2& alg, std::uint64_t seed,
                                     std::size_t trials,
                                     std::size_t max_degree);

}  // namespace redalg
