#pragma once

// The shift/diagonal module family that serves as the independent check on
// the rewriting engine: generators act on a basis {v_{j+d}} by explicit
// rational-function coefficients, words are evaluated operator by operator,
// and no rewriting is ever involved.  Agreement of an element with its
// normal form under this action is therefore evidence for the relations,
// not a restatement of them.

#include <map>
#include <string>

#include "redalg/drsl2.hpp"
#include "redalg/element.hpp"
#include "redalg/report.hpp"

namespace redalg {

/// Finite combination of basis vectors v_{j+d}; the key is the offset d
/// from the symbolic base index j, the value is the coefficient in
/// Q(j, M, nu, zeta).  No zero coefficients are stored.
class ModuleVector {
public:
    ModuleVector() = default;

    /// The single basis vector v_{j+offset}.
    static ModuleVector basis(int offset = 0);

    bool is_zero() const { return entries_.empty(); }
    const std::map<int, RatFunc>& entries() const { return entries_; }
    RatFunc coefficient(int offset) const;

    void add_term(int offset, const RatFunc& c);

    ModuleVector operator+(const ModuleVector& o) const;
    ModuleVector operator-(const ModuleVector& o) const;
    ModuleVector scaled(const RatFunc& f) const;

    /// Shift of the basis index: v_{j+d} -> v_{j+d+k}, coefficients kept.
    ModuleVector shifted(int k) const;

    bool operator==(const ModuleVector& o) const {
        return entries_ == o.entries_;
    }
    bool operator!=(const ModuleVector& o) const { return !(*this == o); }

    std::string str() const;

private:
    std::map<int, RatFunc> entries_;
};

/// The action data: h acts on v_j by alpha, t by beta, z+ maps v_j to
/// gamma * v_{j+1}, z- maps v_j to v_{j-1}.  All three are rational
/// functions of the symbolic index j (and M, nu, zeta).
struct ActionCoeffs {
    RatFunc alpha;
    RatFunc beta;
    RatFunc gamma;

    /// The same functions with j replaced by j + offset.
    RatFunc alpha_at(int offset) const;
    RatFunc beta_at(int offset) const;
    RatFunc gamma_at(int offset) const;
};

/// Closed-form solution of the consistency recurrences
///   alpha(j) = alpha(j-1) + 2,
///   (alpha(j)+2) * beta(j) = alpha(j) * beta(j-1),
///   gt(j-1) = gt(j) + (alpha(j)+1)/alpha(j) * (alpha(j) - beta(j)^2/alpha(j))
/// where gt(j) = (alpha(j)+3)/(alpha(j)+2) * gamma(j).  The solution is
/// pinned by alpha(0) = alpha0, (alpha+2)*beta = nu, gt(0) = gamma_norm.
/// The telescoping step uses 4(y+1)/(y^2 (y+2)^2) = 1/y^2 - 1/(y+2)^2.
ActionCoeffs solve_recurrences(const RatFunc& alpha0, const RatFunc& nu,
                               const RatFunc& gamma_norm);

/// The action realized on powers x^{j+M} through z- = 1/x,
/// t = nu/(2(E+1)), z+ = x*f(E), h = 2E with E the Euler operator and
/// f(E) = -2(E+1)/(2E+3) * (E(E+2) + nu^2/(16(E+1)^2) + zeta);
/// so alpha(j) = 2(j+M).  (The recurrence solver's own normalization
/// alpha(j) = 2j + alpha0 recovers this with alpha0 = 2M.)
ActionCoeffs power_basis_action();

/// Applies an algebra element to a module vector.  Words act right to
/// left; the left coefficient is evaluated at h = alpha of the final
/// landing index.  Deliberately never calls normal_form.
ModuleVector act(const ActionCoeffs& cf, const NCElement& g,
                 const ModuleVector& v);

/// True iff lhs and rhs act identically on the generic basis vector v_j
/// (symbolic j, so this is an identity for every basis vector at once).
bool oracle_check_relation(const ActionCoeffs& cf, const NCElement& lhs,
                           const NCElement& rhs);

struct CasimirScalars {
    RatFunc c1;
    RatFunc c2;
};

/// Scalars by which the two central elements act.  Throws
/// std::runtime_error("not scalar") if the action is not diagonal with a
/// j-independent coefficient.
CasimirScalars casimir_scalars(const ActionCoeffs& cf, const DRsl2& alg);

/// Checks the Weyl-algebra pair on the module: X = v_j -> v_{j+1} is the
/// two-sided inverse of the z- action, Dx = act of (1/2) z- h satisfies
/// [Dx, X] = 1, and the images 2*C1 and C2 of the two parameters act by
/// scalars (the report records the scalars and the normalization factors
/// they reveal).
Report verify_weyl_pair(const ActionCoeffs& cf, const DRsl2& alg);

/// substitute() with the module's genericity contract: a vanishing
/// denominator (an integer j colliding with a pole, a special M) is
/// reported as std::domain_error("non-generic parameter").
RatFunc specialize(const RatFunc& f, const std::map<Var, RatFunc>& a);
ModuleVector specialize(const ModuleVector& v,
                        const std::map<Var, RatFunc>& a);

/// Seeded random elements (words of length <= max_degree, coefficients
/// mixing integers and h +- k fractions) are acted on directly and after
/// rewriting; the two module vectors must agree exactly every time.
Report oracle_agreement_probe(const ActionCoeffs& cf, const DRsl2& alg,
                              std::uint64_t seed, std::size_t trials,
                              std::size_t max_degree);

}  // namespace redalg
