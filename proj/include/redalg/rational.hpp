#pragma once

// Exact arithmetic in Q(h, nu, zeta, M, j): multivariate polynomials over the
// rationals and reduced fractions thereof.  This is the coefficient field for
// everything else in the library; all operations are exact, there is no
// floating point anywhere.

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace redalg {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// The coefficient-field variables, in the fixed term-order position.
/// h is the Cartan variable (the only one that weight shifts act on);
/// nu, zeta, M are parameters; j is the module index variable.
enum class Var : int { h = 0, nu = 1, zeta = 2, M = 3, j = 4 };

inline constexpr std::size_t kVarCount = 5;

std::string_view var_name(Var v);
std::optional<Var> var_from_name(std::string_view name);

/// Exponent vector of a monomial, indexed by Var.
using Exponents = std::array<unsigned, kVarCount>;

/// Total-degree-then-lexicographic order (grlex), largest monomial first,
/// with ties broken by exponent comparison in the fixed variable order.
struct MonomialOrder {
    bool operator()(const Exponents& a, const Exponents& b) const;
};

class Poly;
Poly operator+(const Poly& a, const Poly& b);
Poly operator-(const Poly& a, const Poly& b);
Poly operator*(const Poly& a, const Poly& b);

/// Multivariate polynomial over Q with a canonical term map: no zero
/// coefficients are stored, and equal polynomials compare structurally equal.
class Poly {
public:
    using TermMap = std::map<Exponents, Rational, MonomialOrder>;

    Poly() = default;
    explicit Poly(const Rational& c);
    explicit Poly(long c);

    static Poly variable(Var v);
    static Poly monomial(const Rational& c, const Exponents& e);

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    bool is_one() const;

    /// Value of a constant polynomial (zero polynomial yields 0).
    Rational constant_value() const;

    /// Total degree; -1 for the zero polynomial.
    int total_degree() const;
    unsigned degree_in(Var v) const;

    /// Leading (grlex-largest) term.  Precondition: not zero.
    const Rational& leading_coefficient() const;
    const Exponents& leading_exponents() const;

    std::size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }

    void add_term(const Exponents& e, const Rational& c);

    Poly operator-() const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly& operator*=(const Poly& o);

    Poly pow(unsigned n) const;

    /// Scale every coefficient.
    Poly scaled(const Rational& c) const;

    /// Substitution v -> v + c, all other variables untouched.
    Poly shifted(Var v, const Rational& c) const;

    /// Deterministic canonical rendering, terms in descending grlex order.
    std::string str() const;

    bool operator==(const Poly& o) const { return terms_ == o.terms_; }
    bool operator!=(const Poly& o) const { return !(*this == o); }

private:
    TermMap terms_;
};

/// Exact quotient a / b.  Empty when b does not divide a.
std::optional<Poly> try_exact_div(const Poly& a, const Poly& b);

/// Exact quotient; throws std::domain_error when b does not divide a.
Poly exact_div(const Poly& a, const Poly& b);

/// Primitive polynomial gcd (integer-primitive, positive leading
/// coefficient).  gcd(0, b) is the normalized b; gcd of two zero
/// polynomials is zero.
Poly poly_gcd(const Poly& a, const Poly& b);

/// Degree of a rational function: an integer, or minus infinity for zero.
class Degree {
public:
    static Degree neg_infinity() { return Degree(); }
    static Degree of(int v) { return Degree(v); }

    bool finite() const { return value_.has_value(); }
    int value() const;

    Degree operator+(const Degree& o) const;
    bool operator==(const Degree& o) const { return value_ == o.value_; }
    bool operator!=(const Degree& o) const { return !(*this == o); }
    bool operator<=(const Degree& o) const;

    std::string str() const;

private:
    Degree() = default;
    explicit Degree(int v) : value_(v) {}
    std::optional<int> value_;
};

/// Reduced fraction of polynomials: gcd(num, den) = 1 and den is monic
/// under the grlex term order.  Equality is structural.
class RatFunc {
public:
    RatFunc() : num_(), den_(Rational(1)) {}
    RatFunc(Poly num, Poly den);
    explicit RatFunc(Poly num) : num_(std::move(num)), den_(Rational(1)) {}
    explicit RatFunc(const Rational& c) : num_(c), den_(Rational(1)) {}
    explicit RatFunc(long c) : num_(c), den_(Rational(1)) {}

    static RatFunc variable(Var v) { return RatFunc(Poly::variable(v)); }

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }

    RatFunc operator-() const;
    RatFunc operator+(const RatFunc& o) const;
    RatFunc operator-(const RatFunc& o) const;
    RatFunc operator*(const RatFunc& o) const;
    RatFunc operator/(const RatFunc& o) const;
    RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
    RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
    RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }

    /// Multiplicative inverse; throws std::domain_error on zero.
    RatFunc inv() const;

    RatFunc pow(unsigned n) const;

    /// Weight-shift substitution h -> h + c.  Only h shifts; the parameters
    /// nu, zeta, M, j never do.
    RatFunc shift(const Rational& c) const;

    /// deg(num) - deg(den) in total degree; minus infinity for zero.
    Degree degree() const;

    /// Ratio of the leading coefficients of num and den under the fixed
    /// term order.  Throws std::domain_error for zero.
    Rational symbol() const;

    std::string str() const;

    bool operator==(const RatFunc& o) const {
        return num_ == o.num_ && den_ == o.den_;
    }
    bool operator!=(const RatFunc& o) const { return !(*this == o); }

private:
    struct AlreadyCanonical {};
    RatFunc(Poly num, Poly den, AlreadyCanonical)
        : num_(std::move(num)), den_(std::move(den)) {}
    void normalize();

    friend RatFunc shift_var(const RatFunc& f, Var v, const Rational& c);

    Poly num_;
    Poly den_;
};

/// Exact composition f(...assignments...).  Unassigned variables map to
/// themselves.  Throws std::domain_error("singular substitution") when the
/// substituted denominator vanishes identically.
RatFunc substitute(const RatFunc& f, const std::map<Var, RatFunc>& assignments);

/// Substitution v -> v + c for a single variable (a special case of
/// substitute, kept separate because it preserves canonical form).
RatFunc shift_var(const RatFunc& f, Var v, const Rational& c);

}  // namespace redalg
