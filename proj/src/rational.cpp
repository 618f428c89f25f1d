#include "redalg/rational.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

namespace redalg {

namespace {

const std::array<std::string_view, kVarCount> kVarNames = {"h", "nu", "zeta",
                                                           "M", "j"};

unsigned total(const Exponents& e) {
    unsigned t = 0;
    for (unsigned x : e) t += x;
    return t;
}

}  // namespace

std::string_view var_name(Var v) { return kVarNames[static_cast<int>(v)]; }

std::optional<Var> var_from_name(std::string_view name) {
    for (std::size_t i = 0; i < kVarCount; ++i)
        if (kVarNames[i] == name) return static_cast<Var>(i);
    return std::nullopt;
}

bool MonomialOrder::operator()(const Exponents& a, const Exponents& b) const {
    unsigned ta = total(a), tb = total(b);
    if (ta != tb) return ta > tb;
    for (std::size_t i = 0; i < kVarCount; ++i)
        if (a[i] != b[i]) return a[i] > b[i];
    return false;
}

// ---------------------------------------------------------------------------
// Poly

Poly::Poly(const Rational& c) {
    if (c != 0) terms_.emplace(Exponents{}, c);
}

Poly::Poly(long c) : Poly(Rational(c)) {}

Poly Poly::variable(Var v) {
    Exponents e{};
    e[static_cast<int>(v)] = 1;
    return monomial(Rational(1), e);
}

Poly Poly::monomial(const Rational& c, const Exponents& e) {
    Poly p;
    if (c != 0) p.terms_.emplace(e, c);
    return p;
}

bool Poly::is_constant() const {
    return terms_.empty() ||
           (terms_.size() == 1 && total(terms_.begin()->first) == 0);
}

bool Poly::is_one() const {
    return terms_.size() == 1 && total(terms_.begin()->first) == 0 &&
           terms_.begin()->second == 1;
}

Rational Poly::constant_value() const {
    if (terms_.empty()) return Rational(0);
    if (!is_constant()) throw std::domain_error("polynomial is not constant");
    return terms_.begin()->second;
}

int Poly::total_degree() const {
    if (terms_.empty()) return -1;
    return static_cast<int>(total(terms_.begin()->first));
}

unsigned Poly::degree_in(Var v) const {
    unsigned d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, e[static_cast<int>(v)]);
    return d;
}

const Rational& Poly::leading_coefficient() const {
    if (terms_.empty()) throw std::domain_error("zero polynomial has no leading term");
    return terms_.begin()->second;
}

const Exponents& Poly::leading_exponents() const {
    if (terms_.empty()) throw std::domain_error("zero polynomial has no leading term");
    return terms_.begin()->first;
}

void Poly::add_term(const Exponents& e, const Rational& c) {
    if (c == 0) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Poly Poly::operator-() const {
    Poly r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

Poly& Poly::operator+=(const Poly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

Poly& Poly::operator*=(const Poly& o) { return *this = *this * o; }

Poly operator+(const Poly& a, const Poly& b) {
    Poly r = a;
    r += b;
    return r;
}

Poly operator-(const Poly& a, const Poly& b) {
    Poly r = a;
    r -= b;
    return r;
}

Poly operator*(const Poly& a, const Poly& b) {
    Poly r;
    for (const auto& [ea, ca] : a.terms()) {
        for (const auto& [eb, cb] : b.terms()) {
            Exponents e;
            for (std::size_t i = 0; i < kVarCount; ++i) e[i] = ea[i] + eb[i];
            r.add_term(e, ca * cb);
        }
    }
    return r;
}

Poly Poly::pow(unsigned n) const {
    Poly r(Rational(1));
    Poly base = *this;
    while (n > 0) {
        if (n & 1u) r *= base;
        base *= base;
        n >>= 1u;
    }
    return r;
}

Poly Poly::scaled(const Rational& c) const {
    Poly r;
    if (c == 0) return r;
    for (const auto& [e, k] : terms_) r.terms_.emplace(e, k * c);
    return r;
}

Poly Poly::shifted(Var v, const Rational& c) const {
    if (c == 0) return *this;
    const int vi = static_cast<int>(v);
    Poly r;
    for (const auto& [e, coeff] : terms_) {
        unsigned n = e[vi];
        Exponents base = e;
        base[vi] = 0;
        // (v + c)^n expanded along a Pascal row.
        Rational binom(1);
        Rational cpow(1);
        for (unsigned k = 0; k <= n; ++k) {
            Exponents m = base;
            m[vi] = n - k;
            r.add_term(m, coeff * binom * cpow);
            binom *= Rational(n - k);
            binom /= Rational(k + 1);
            cpow *= c;
        }
    }
    return r;
}

std::string Poly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        Rational a = c;
        if (first) {
            if (a < 0) {
                out << "-";
                a = -a;
            }
        } else {
            out << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        first = false;
        bool has_var = total(e) > 0;
        bool coeff_shown = !has_var || a != 1;
        if (coeff_shown) out << a.str();
        bool need_star = coeff_shown;
        for (std::size_t i = 0; i < kVarCount; ++i) {
            if (e[i] == 0) continue;
            if (need_star) out << "*";
            out << kVarNames[i];
            if (e[i] > 1) out << "^" << e[i];
            need_star = true;
        }
    }
    return out.str();
}

// ---------------------------------------------------------------------------
// Division and gcd

std::optional<Poly> try_exact_div(const Poly& a, const Poly& b) {
    if (b.is_zero()) return std::nullopt;
    if (a.is_zero()) return Poly();
    if (b.is_one()) return a;
    Poly q;
    Poly r = a;
    const Exponents& lb = b.leading_exponents();
    const Rational& cb = b.leading_coefficient();
    while (!r.is_zero()) {
        const Exponents& lr = r.leading_exponents();
        Exponents qe;
        for (std::size_t i = 0; i < kVarCount; ++i) {
            if (lr[i] < lb[i]) return std::nullopt;
            qe[i] = lr[i] - lb[i];
        }
        Rational qc = r.leading_coefficient() / cb;
        Poly t = Poly::monomial(qc, qe);
        q += t;
        r -= t * b;
    }
    return q;
}

Poly exact_div(const Poly& a, const Poly& b) {
    auto q = try_exact_div(a, b);
    if (!q) throw std::domain_error("inexact polynomial division");
    return *q;
}

namespace {

// Integer-primitive normalization: strips the rational content and makes the
// leading coefficient positive.  Returns the zero polynomial unchanged.
Poly int_primitive(const Poly& p) {
    if (p.is_zero()) return p;
    Int den_lcm(1);
    for (const auto& [e, c] : p.terms())
        den_lcm = boost::multiprecision::lcm(den_lcm, denominator(c));
    Int num_gcd(0);
    for (const auto& [e, c] : p.terms())
        num_gcd = boost::multiprecision::gcd(
            num_gcd, Int(numerator(c) * (den_lcm / denominator(c))));
    Rational scale = Rational(den_lcm) / Rational(num_gcd);
    if (p.leading_coefficient() < 0) scale = -scale;
    return p.scaled(scale);
}

// The first variable with a positive degree in either argument.
std::optional<Var> pick_main_var(const Poly& a, const Poly& b) {
    for (std::size_t i = 0; i < kVarCount; ++i) {
        Var v = static_cast<Var>(i);
        if (a.degree_in(v) > 0 || b.degree_in(v) > 0) return v;
    }
    return std::nullopt;
}

// Coefficients of p viewed as univariate in v, indexed by the v-exponent.
std::vector<Poly> coeffs_in(const Poly& p, Var v) {
    const int vi = static_cast<int>(v);
    std::vector<Poly> out(p.degree_in(v) + 1);
    for (const auto& [e, c] : p.terms()) {
        Exponents rest = e;
        unsigned k = rest[vi];
        rest[vi] = 0;
        out[k].add_term(rest, c);
    }
    return out;
}

Poly content_in(const Poly& p, Var v) {
    Poly g;
    for (const Poly& c : coeffs_in(p, v)) g = poly_gcd(g, c);
    return g;
}

// Pseudo-remainder of a by b with respect to v.  Requires deg_v(b) >= 1.
Poly pseudo_rem(Poly a, const Poly& b, Var v) {
    const int vi = static_cast<int>(v);
    const unsigned db = b.degree_in(v);
    auto bc = coeffs_in(b, v);
    Poly lb = bc[db];
    while (!a.is_zero() && a.degree_in(v) >= db) {
        unsigned da = a.degree_in(v);
        auto ac = coeffs_in(a, v);
        Poly la = ac[da];
        // a <- lb*a - la*v^(da-db)*b   (kills the leading v-term)
        Exponents shift{};
        shift[vi] = da - db;
        a = lb * a - Poly::monomial(Rational(1), shift) * la * b;
    }
    return a;
}

}  // namespace

Poly poly_gcd(const Poly& a_in, const Poly& b_in) {
    Poly a = int_primitive(a_in);
    Poly b = int_primitive(b_in);
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.is_constant() || b.is_constant()) return Poly(Rational(1));

    auto mv = pick_main_var(a, b);
    if (!mv) return Poly(Rational(1));
    Var v = *mv;
    if (a.degree_in(v) == 0) return poly_gcd(content_in(b, v), a);
    if (b.degree_in(v) == 0) return poly_gcd(content_in(a, v), b);

    Poly ca = content_in(a, v);
    Poly cb = content_in(b, v);
    Poly c = poly_gcd(ca, cb);
    Poly A = exact_div(a, ca);
    Poly B = exact_div(b, cb);
    if (A.degree_in(v) < B.degree_in(v)) std::swap(A, B);

    // Primitive PRS.
    for (;;) {
        Poly r = pseudo_rem(A, B, v);
        if (r.is_zero()) break;
        if (r.degree_in(v) == 0) {
            B = Poly(Rational(1));
            break;
        }
        A = B;
        B = int_primitive(exact_div(r, content_in(r, v)));
    }
    Poly g = B.degree_in(v) > 0 ? exact_div(B, content_in(B, v)) : B;
    return int_primitive(c * g);
}

// ---------------------------------------------------------------------------
// Degree

int Degree::value() const {
    if (!value_) throw std::domain_error("degree is minus infinity");
    return *value_;
}

Degree Degree::operator+(const Degree& o) const {
    if (!value_ || !o.value_) return neg_infinity();
    return of(*value_ + *o.value_);
}

bool Degree::operator<=(const Degree& o) const {
    if (!value_) return true;
    if (!o.value_) return false;
    return *value_ <= *o.value_;
}

std::string Degree::str() const {
    return value_ ? std::to_string(*value_) : "-inf";
}

// ---------------------------------------------------------------------------
// RatFunc

RatFunc::RatFunc(Poly num, Poly den)
    : num_(std::move(num)), den_(std::move(den)) {
    normalize();
}

void RatFunc::normalize() {
    if (den_.is_zero()) throw std::domain_error("division by zero");
    if (num_.is_zero()) {
        den_ = Poly(Rational(1));
        return;
    }
    Poly g = poly_gcd(num_, den_);
    if (!g.is_one()) {
        num_ = exact_div(num_, g);
        den_ = exact_div(den_, g);
    }
    const Rational& lc = den_.leading_coefficient();
    if (lc != 1) {
        Rational inv_lc = Rational(1) / lc;
        num_ = num_.scaled(inv_lc);
        den_ = den_.scaled(inv_lc);
    }
}

RatFunc RatFunc::operator-() const { return RatFunc(-num_, den_, AlreadyCanonical{}); }

RatFunc RatFunc::operator+(const RatFunc& o) const {
    if (is_zero()) return o;
    if (o.is_zero()) return *this;
    return RatFunc(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RatFunc RatFunc::operator-(const RatFunc& o) const { return *this + (-o); }

RatFunc RatFunc::operator*(const RatFunc& o) const {
    if (is_zero() || o.is_zero()) return RatFunc();
    // Cross-cancel; both inputs are reduced, so the result is too.
    Poly g1 = poly_gcd(num_, o.den_);
    Poly g2 = poly_gcd(o.num_, den_);
    Poly n = exact_div(num_, g1) * exact_div(o.num_, g2);
    Poly d = exact_div(den_, g2) * exact_div(o.den_, g1);
    const Rational& lc = d.leading_coefficient();
    if (lc != 1) {
        Rational inv_lc = Rational(1) / lc;
        n = n.scaled(inv_lc);
        d = d.scaled(inv_lc);
    }
    return RatFunc(std::move(n), std::move(d), AlreadyCanonical{});
}

RatFunc RatFunc::operator/(const RatFunc& o) const { return *this * o.inv(); }

RatFunc RatFunc::inv() const {
    if (is_zero()) throw std::domain_error("division by zero");
    Poly n = den_;
    Poly d = num_;
    const Rational& lc = d.leading_coefficient();
    if (lc != 1) {
        Rational inv_lc = Rational(1) / lc;
        n = n.scaled(inv_lc);
        d = d.scaled(inv_lc);
    }
    return RatFunc(std::move(n), std::move(d), AlreadyCanonical{});
}

RatFunc RatFunc::pow(unsigned n) const {
    RatFunc r{Rational(1)};
    RatFunc base = *this;
    while (n > 0) {
        if (n & 1u) r = r * base;
        base = base * base;
        n >>= 1u;
    }
    return r;
}

RatFunc RatFunc::shift(const Rational& c) const { return shift_var(*this, Var::h, c); }

Degree RatFunc::degree() const {
    if (is_zero()) return Degree::neg_infinity();
    return Degree::of(num_.total_degree() - den_.total_degree());
}

Rational RatFunc::symbol() const {
    if (is_zero()) throw std::domain_error("symbol of zero");
    return num_.leading_coefficient() / den_.leading_coefficient();
}

std::string RatFunc::str() const {
    if (den_.is_one()) return num_.str();
    return "(" + num_.str() + ")/(" + den_.str() + ")";
}

RatFunc shift_var(const RatFunc& f, Var v, const Rational& c) {
    if (c == 0 || f.is_zero()) return f;
    // v -> v + c is a degree-preserving ring automorphism: the leading grlex
    // term of each image equals the original, so the result is already in
    // canonical form (reduced, monic denominator).
    return RatFunc(f.num().shifted(v, c), f.den().shifted(v, c),
                   RatFunc::AlreadyCanonical{});
}

namespace {

RatFunc substitute_poly(const Poly& p, const std::map<Var, RatFunc>& m) {
    RatFunc acc;
    for (const auto& [e, c] : p.terms()) {
        RatFunc term{c};
        for (std::size_t i = 0; i < kVarCount; ++i) {
            if (e[i] == 0) continue;
            Var v = static_cast<Var>(i);
            auto it = m.find(v);
            if (it == m.end()) {
                Exponents mono{};
                mono[i] = e[i];
                term = term * RatFunc(Poly::monomial(Rational(1), mono));
            } else {
                term = term * it->second.pow(e[i]);
            }
        }
        acc = acc + term;
    }
    return acc;
}

}  // namespace

RatFunc substitute(const RatFunc& f, const std::map<Var, RatFunc>& assignments) {
    if (assignments.empty()) return f;
    RatFunc n = substitute_poly(f.num(), assignments);
    RatFunc d = substitute_poly(f.den(), assignments);
    if (d.is_zero()) throw std::domain_error("singular substitution");
    return n / d;
}

}  // namespace redalg
