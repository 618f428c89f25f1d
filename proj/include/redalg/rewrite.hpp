#pragma once

// Ordering-relation rewriting: a presentation assigns to every strictly
// decreasing generator pair a right-hand side of ordered words of length at
// most two, and normal forms are reached by repeatedly replacing the left
// hand side by the right hand side.  The confluence checker reduces every
// decreasing triple both ways and compares.

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "redalg/element.hpp"

namespace redalg {

/// One ordering relation I*J -> rhs with I strictly above J in the
/// presentation order.  Every rhs word is ordered and of length <= 2, and
/// carries the same h-weight as I*J.
struct RewriteRule {
    Generator lhs_first;   // I
    Generator lhs_second;  // J, with I > J
    NCElement rhs;
};

/// Generators with a total order (their position in the list) and a
/// complete rule set for all strictly decreasing pairs.
class Presentation {
public:
    /// Validates completeness, rhs ordering, and weight homogeneity;
    /// throws std::invalid_argument on violation.  Order/weight
    /// compatibility is asserted by the caller via weights_compatible and
    /// only produces warnings when the declared order is not weakly
    /// increasing in weight.
    Presentation(std::vector<Generator> generators,
                 std::vector<RewriteRule> rules,
                 bool weights_compatible = true);

    const std::vector<Generator>& generators() const { return generators_; }
    std::size_t order_index(const std::string& name) const;
    bool knows(const std::string& name) const;
    const Generator& generator(const std::string& name) const;

    /// Rule for the decreasing pair (first, second); throws
    /// std::runtime_error("incomplete presentation") when missing.
    const RewriteRule& rule_for(const Generator& first,
                                const Generator& second) const;

    bool is_ordered_pair(const Generator& a, const Generator& b) const;
    bool is_ordered_word(const Word& w) const;

    std::size_t rule_count() const { return rules_.size(); }
    const std::vector<RewriteRule>& rules() const { return rule_list_; }

    bool weights_compatible() const { return weights_compatible_; }
    const std::vector<std::string>& warnings() const { return warnings_; }

private:
    std::vector<Generator> generators_;
    std::map<std::string, std::size_t> index_;
    std::map<std::pair<std::string, std::string>, std::size_t> rules_;
    std::vector<RewriteRule> rule_list_;
    bool weights_compatible_;
    std::vector<std::string> warnings_;
};

/// Redex selection strategy.  Confluent presentations give the same normal
/// form for both; that independence is itself a tested property.
enum class Strategy {
    first_word,  // first stored unordered word, leftmost descent
    last_word,   // last stored unordered word, rightmost descent
};

struct StepResult {
    NCElement element;
    bool changed = false;
};

/// One rewriting step.
StepResult apply_once(const Presentation& p, const NCElement& a,
                      Strategy strategy = Strategy::first_word);

inline constexpr std::size_t kDefaultMaxSteps = 1000000;

/// Fixed point of apply_once.  Throws std::runtime_error("termination
/// guard tripped") when max_steps is exhausted (an engine bug: valid
/// presentations terminate).
NCElement normal_form(const Presentation& p, const NCElement& a,
                      std::size_t max_steps = kDefaultMaxSteps,
                      Strategy strategy = Strategy::first_word);

/// Both reductions of one decreasing triple I > J > K.
struct TripleResolution {
    std::array<std::string, 3> triple;
    NCElement nf_left;   // (I,J) pair rewritten first
    NCElement nf_right;  // (J,K) pair rewritten first
    bool equal = false;
};

struct ConfluenceReport {
    std::vector<TripleResolution> triples;
    bool overall = true;
};

/// Diamond-lemma overlap check: reduces I*J*K for every decreasing triple
/// both ways to full normal form and compares exactly.
ConfluenceReport check_confluence(const Presentation& p,
                                  std::size_t max_steps = kDefaultMaxSteps);

/// All ordered (non-decreasing) words of length <= max_degree, by length
/// then lexicographically in the presentation order.
std::vector<Word> enumerate_basis(const Presentation& p,
                                  std::size_t max_degree);

}  // namespace redalg
