#include "redalg/ore.hpp"

namespace redalg {

RatFunc Denominator::as_ratfunc() const {
    return RatFunc(Poly::variable(Var::h) + Poly(static_cast<long>(k)));
}

OreWitness ore_right(const NCElement& a, const Denominator& s) {
    const auto components = weight_components(a);

    RatFunc s_tilde{Rational(1)};
    for (const auto& [mu, comp] : components) {
        s_tilde *= RatFunc(Poly::variable(Var::h) +
                           Poly(static_cast<long>(s.k) + mu));
    }

    // a_tilde = sum over components of a_mu * (product of the factors for
    // the other weights); right multiplication routes the shift through
    // push_left, so a * s_tilde == s * a_tilde holds term by term.
    NCElement a_tilde;
    for (const auto& [mu, comp] : components) {
        RatFunc rest{Rational(1)};
        for (const auto& [mu2, comp2] : components) {
            if (mu2 == mu) continue;
            rest *= RatFunc(Poly::variable(Var::h) +
                            Poly(static_cast<long>(s.k) + mu2));
        }
        a_tilde += comp * NCElement::scalar(rest);
    }
    return OreWitness{s_tilde, a_tilde};
}

std::optional<OreWitness> ore_vanishing(const NCElement& a,
                                        const Denominator& s) {
    NCElement sa = NCElement::scalar(s.as_ratfunc()) * a;
    if (!sa.is_zero()) return std::nullopt;
    return OreWitness{RatFunc(Rational(1)), NCElement::zero()};
}

}  // namespace redalg
