#pragma once

// Words in weighted generators and their finite left-coefficient
// combinations.  The coefficient field acts from the left; multiplying a
// coefficient past a word shifts h by the word's weight (push_left), which
// is the whole content of the weight relations.

#include <optional>
#include <string>
#include <vector>

#include "redalg/rational.hpp"

namespace redalg {

/// A named generator with its h-weight.  Names are unique within a
/// presentation; h itself is not a generator, it lives in the coefficient
/// field.
struct Generator {
    std::string name;
    int weight = 0;

    bool operator==(const Generator& o) const { return name == o.name; }
    bool operator!=(const Generator& o) const { return !(*this == o); }
};

/// A (possibly empty) word in generators.
using Word = std::vector<Generator>;

int word_weight(const Word& w);

/// Deterministic storage order for words: by length, then by generator
/// names elementwise.  Independent of any presentation order.
struct WordOrder {
    bool operator()(const Word& a, const Word& b) const;
};

class NCElement;
NCElement concat(const NCElement& a, const NCElement& b);

/// Finite sum of (left RatFunc coefficient) x (word in generators).
/// Canonical: no zero coefficients stored, equality is term-map equality.
class NCElement {
public:
    using TermMap = std::map<Word, RatFunc, WordOrder>;

    NCElement() = default;

    static NCElement zero() { return NCElement(); }
    static NCElement unit();
    static NCElement scalar(RatFunc f);
    static NCElement from_word(Word w, RatFunc coeff = RatFunc(Rational(1)));
    static NCElement from_generator(const Generator& g);

    bool is_zero() const { return terms_.empty(); }
    const TermMap& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }

    /// Coefficient of a word (zero if absent).
    RatFunc coefficient(const Word& w) const;

    void add_term(const Word& w, const RatFunc& c);

    NCElement operator-() const;
    NCElement operator+(const NCElement& o) const;
    NCElement operator-(const NCElement& o) const;
    /// Concatenation product (no rewriting).
    NCElement operator*(const NCElement& o) const { return concat(*this, o); }
    NCElement& operator+=(const NCElement& o);
    NCElement& operator-=(const NCElement& o);

    /// Left multiplication by a coefficient.
    NCElement scaled(const RatFunc& f) const;

    /// Maximum word length in the support; 0 for scalars and for zero.
    std::size_t max_word_length() const;

    bool operator==(const NCElement& o) const { return terms_ == o.terms_; }
    bool operator!=(const NCElement& o) const { return !(*this == o); }

private:
    TermMap terms_;
};

/// Coefficient transported from the right of a word to its left:
/// w * f == push_left(f, w) * w, i.e. shift(f, -weight(w)).
RatFunc push_left(const RatFunc& f, const Word& w);

/// Bilinear concatenation with coefficients pushed left; no rewriting.
NCElement concat(const NCElement& a, const NCElement& b);

/// Common h-weight of all words if homogeneous (zero and scalars have
/// weight 0); nullopt means mixed.
std::optional<int> weight_of(const NCElement& a);

/// Terms of a split by word weight, in increasing weight order.
std::vector<std::pair<int, NCElement>> weight_components(const NCElement& a);

}  // namespace redalg
