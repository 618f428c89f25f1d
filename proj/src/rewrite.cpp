#include "redalg/rewrite.hpp"

#include <algorithm>
#include <stdexcept>

namespace redalg {

Presentation::Presentation(std::vector<Generator> generators,
                           std::vector<RewriteRule> rules,
                           bool weights_compatible)
    : generators_(std::move(generators)),
      weights_compatible_(weights_compatible) {
    for (std::size_t i = 0; i < generators_.size(); ++i) {
        if (!index_.emplace(generators_[i].name, i).second)
            throw std::invalid_argument("duplicate generator name: " +
                                        generators_[i].name);
    }
    for (std::size_t i = 0; i + 1 < generators_.size(); ++i) {
        if (generators_[i].weight > generators_[i + 1].weight) {
            warnings_.push_back(
                "generator order is not weakly increasing in weight at " +
                generators_[i].name + " < " + generators_[i + 1].name);
        }
    }

    rule_list_ = std::move(rules);
    for (std::size_t r = 0; r < rule_list_.size(); ++r) {
        const RewriteRule& rule = rule_list_[r];
        auto fi = index_.find(rule.lhs_first.name);
        auto si = index_.find(rule.lhs_second.name);
        if (fi == index_.end() || si == index_.end())
            throw std::invalid_argument("rule uses unknown generator");
        if (fi->second <= si->second)
            throw std::invalid_argument(
                "rule left-hand side must be a strictly decreasing pair: " +
                rule.lhs_first.name + " " + rule.lhs_second.name);
        int lhs_weight = rule.lhs_first.weight + rule.lhs_second.weight;
        for (const auto& [w, c] : rule.rhs.terms()) {
            if (w.size() > 2)
                throw std::invalid_argument("rule rhs word longer than 2");
            if (!is_ordered_word(w))
                throw std::invalid_argument("rule rhs contains unordered word");
            if (word_weight(w) != lhs_weight)
                throw std::invalid_argument(
                    "rule rhs is not weight homogeneous for pair " +
                    rule.lhs_first.name + " " + rule.lhs_second.name);
        }
        auto key = std::make_pair(rule.lhs_first.name, rule.lhs_second.name);
        if (!rules_.emplace(key, r).second)
            throw std::invalid_argument("duplicate rule for pair " +
                                        key.first + " " + key.second);
    }

    for (std::size_t i = 0; i < generators_.size(); ++i) {
        for (std::size_t k = 0; k < i; ++k) {
            auto key = std::make_pair(generators_[i].name, generators_[k].name);
            if (!rules_.count(key))
                throw std::invalid_argument(
                    "incomplete presentation: missing rule for pair " +
                    key.first + " " + key.second);
        }
    }
}

std::size_t Presentation::order_index(const std::string& name) const {
    auto it = index_.find(name);
    if (it == index_.end())
        throw std::invalid_argument("unknown generator: " + name);
    return it->second;
}

bool Presentation::knows(const std::string& name) const {
    return index_.count(name) > 0;
}

const Generator& Presentation::generator(const std::string& name) const {
    return generators_[order_index(name)];
}

const RewriteRule& Presentation::rule_for(const Generator& first,
                                          const Generator& second) const {
    auto it = rules_.find(std::make_pair(first.name, second.name));
    if (it == rules_.end()) throw std::runtime_error("incomplete presentation");
    return rule_list_[it->second];
}

bool Presentation::is_ordered_pair(const Generator& a,
                                   const Generator& b) const {
    return order_index(a.name) <= order_index(b.name);
}

bool Presentation::is_ordered_word(const Word& w) const {
    for (std::size_t i = 0; i + 1 < w.size(); ++i)
        if (!is_ordered_pair(w[i], w[i + 1])) return false;
    return true;
}

namespace {

std::optional<std::size_t> first_descent(const Presentation& p, const Word& w) {
    for (std::size_t i = 0; i + 1 < w.size(); ++i)
        if (!p.is_ordered_pair(w[i], w[i + 1])) return i;
    return std::nullopt;
}

std::optional<std::size_t> last_descent(const Presentation& p, const Word& w) {
    std::optional<std::size_t> found;
    for (std::size_t i = 0; i + 1 < w.size(); ++i)
        if (!p.is_ordered_pair(w[i], w[i + 1])) found = i;
    return found;
}

// Replaces the descent at position pos of (w, coeff) by the matching rule's
// rhs, accumulating the rewritten terms into out.
void rewrite_descent(const Presentation& p, const Word& w,
                     const RatFunc& coeff, std::size_t pos, NCElement& out) {
    const RewriteRule& rule = p.rule_for(w[pos], w[pos + 1]);
    Word prefix(w.begin(), w.begin() + pos);
    Word suffix(w.begin() + pos + 2, w.end());
    const Rational prefix_shift(-word_weight(prefix));
    for (const auto& [m, c] : rule.rhs.terms()) {
        Word nw = prefix;
        nw.insert(nw.end(), m.begin(), m.end());
        nw.insert(nw.end(), suffix.begin(), suffix.end());
        out.add_term(nw, coeff * c.shift(prefix_shift));
    }
}

}  // namespace

StepResult apply_once(const Presentation& p, const NCElement& a,
                      Strategy strategy) {
    const Word* redex_word = nullptr;
    std::size_t redex_pos = 0;
    if (strategy == Strategy::first_word) {
        for (const auto& [w, c] : a.terms()) {
            if (auto pos = first_descent(p, w)) {
                redex_word = &w;
                redex_pos = *pos;
                break;
            }
        }
    } else {
        for (auto it = a.terms().rbegin(); it != a.terms().rend(); ++it) {
            if (auto pos = last_descent(p, it->first)) {
                redex_word = &it->first;
                redex_pos = *pos;
                break;
            }
        }
    }
    if (!redex_word) return {a, false};

    NCElement out;
    for (const auto& [w, c] : a.terms()) {
        if (&w == redex_word) {
            rewrite_descent(p, w, c, redex_pos, out);
        } else {
            out.add_term(w, c);
        }
    }
    return {std::move(out), true};
}

NCElement normal_form(const Presentation& p, const NCElement& a,
                      std::size_t max_steps, Strategy strategy) {
    if (max_steps == 0) throw std::invalid_argument("max_steps must be positive");
    NCElement cur = a;
    for (std::size_t step = 0; step < max_steps; ++step) {
        StepResult r = apply_once(p, cur, strategy);
        if (!r.changed) return r.element;
        cur = std::move(r.element);
    }
    throw std::runtime_error("termination guard tripped");
}

ConfluenceReport check_confluence(const Presentation& p,
                                  std::size_t max_steps) {
    ConfluenceReport report;
    const auto& gens = p.generators();
    for (std::size_t i = 0; i < gens.size(); ++i) {
        for (std::size_t k = 0; k < i; ++k) {
            for (std::size_t l = 0; l < k; ++l) {
                const Generator& gi = gens[i];
                const Generator& gk = gens[k];
                const Generator& gl = gens[l];
                Word w{gi, gk, gl};
                const RatFunc one{Rational(1)};
                NCElement left, right;
                rewrite_descent(p, w, one, 0, left);   // (I,J) first
                rewrite_descent(p, w, one, 1, right);  // (J,K) first
                TripleResolution t;
                t.triple = {gi.name, gk.name, gl.name};
                t.nf_left = normal_form(p, left, max_steps);
                t.nf_right = normal_form(p, right, max_steps);
                t.equal = t.nf_left == t.nf_right;
                report.overall = report.overall && t.equal;
                report.triples.push_back(std::move(t));
            }
        }
    }
    return report;
}

std::vector<Word> enumerate_basis(const Presentation& p,
                                  std::size_t max_degree) {
    std::vector<Word> out;
    std::vector<Word> level{Word{}};
    out.push_back(Word{});
    const auto& gens = p.generators();
    for (std::size_t len = 1; len <= max_degree; ++len) {
        std::vector<Word> next;
        for (const Word& w : level) {
            std::size_t start = w.empty() ? 0 : p.order_index(w.back().name);
            for (std::size_t gi = start; gi < gens.size(); ++gi) {
                Word nw = w;
                nw.push_back(gens[gi]);
                next.push_back(std::move(nw));
            }
        }
        out.insert(out.end(), next.begin(), next.end());
        level = std::move(next);
    }
    return out;
}

}  // namespace redalg
