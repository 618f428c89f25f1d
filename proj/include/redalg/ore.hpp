#pragma once

// Constructive common-multiple witnesses for the denominator set generated
// by h + k.  For a weight-homogeneous a of weight mu, moving h + k across
// a shifts it to h + k + mu, so a * (h+k+mu) = (h+k) * a exactly; general
// elements are handled per weight component.  Coefficients form a field,
// so the torsion half of the condition is trivial: only a = 0 is
// annihilated.

#include <optional>

#include "redalg/element.hpp"

namespace redalg {

/// The coefficient h + k.
struct Denominator {
    int k = 0;

    RatFunc as_ratfunc() const;
};

/// Witness pair for a right common multiple: a * s_tilde == s * a_tilde
/// as raw elements (coefficient placement only, no rewriting needed).
struct OreWitness {
    RatFunc s_tilde;
    NCElement a_tilde;
};

/// s_tilde is the product of h + k + mu over the distinct weights mu of
/// the components of a; a_tilde follows componentwise.
OreWitness ore_right(const NCElement& a, const Denominator& s);

/// Torsion transfer: when s * a = 0 returns a witness with a * s_tilde = 0
/// (s_tilde = 1 suffices; only a = 0 qualifies over a field), otherwise
/// empty ("not applicable").
std::optional<OreWitness> ore_vanishing(const NCElement& a,
                                        const Denominator& s);

}  // namespace redalg
