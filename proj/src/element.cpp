#include "redalg/element.hpp"

#include <map>

namespace redalg {

int word_weight(const Word& w) {
    int s = 0;
    for (const Generator& g : w) s += g.weight;
    return s;
}

bool WordOrder::operator()(const Word& a, const Word& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i].name != b[i].name) return a[i].name < b[i].name;
    return false;
}

NCElement NCElement::unit() { return scalar(RatFunc(Rational(1))); }

NCElement NCElement::scalar(RatFunc f) {
    NCElement e;
    if (!f.is_zero()) e.terms_.emplace(Word{}, std::move(f));
    return e;
}

NCElement NCElement::from_word(Word w, RatFunc coeff) {
    NCElement e;
    if (!coeff.is_zero()) e.terms_.emplace(std::move(w), std::move(coeff));
    return e;
}

NCElement NCElement::from_generator(const Generator& g) {
    return from_word(Word{g});
}

RatFunc NCElement::coefficient(const Word& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? RatFunc() : it->second;
}

void NCElement::add_term(const Word& w, const RatFunc& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(w);
    if (it == terms_.end()) {
        terms_.emplace(w, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

NCElement NCElement::operator-() const {
    NCElement r;
    for (const auto& [w, c] : terms_) r.terms_.emplace(w, -c);
    return r;
}

NCElement& NCElement::operator+=(const NCElement& o) {
    for (const auto& [w, c] : o.terms_) add_term(w, c);
    return *this;
}

NCElement& NCElement::operator-=(const NCElement& o) {
    for (const auto& [w, c] : o.terms_) add_term(w, -c);
    return *this;
}

NCElement NCElement::operator+(const NCElement& o) const {
    NCElement r = *this;
    r += o;
    return r;
}

NCElement NCElement::operator-(const NCElement& o) const {
    NCElement r = *this;
    r -= o;
    return r;
}

NCElement NCElement::scaled(const RatFunc& f) const {
    NCElement r;
    if (f.is_zero()) return r;
    for (const auto& [w, c] : terms_) {
        RatFunc p = f * c;
        if (!p.is_zero()) r.terms_.emplace(w, std::move(p));
    }
    return r;
}

std::size_t NCElement::max_word_length() const {
    std::size_t m = 0;
    for (const auto& [w, c] : terms_) m = std::max(m, w.size());
    return m;
}

RatFunc push_left(const RatFunc& f, const Word& w) {
    return f.shift(Rational(-word_weight(w)));
}

NCElement concat(const NCElement& a, const NCElement& b) {
    NCElement r;
    for (const auto& [wa, ca] : a.terms()) {
        for (const auto& [wb, cb] : b.terms()) {
            Word w = wa;
            w.insert(w.end(), wb.begin(), wb.end());
            r.add_term(w, ca * push_left(cb, wa));
        }
    }
    return r;
}

std::optional<int> weight_of(const NCElement& a) {
    if (a.is_zero()) return 0;
    std::optional<int> common;
    for (const auto& [w, c] : a.terms()) {
        int mu = word_weight(w);
        if (!common) {
            common = mu;
        } else if (*common != mu) {
            return std::nullopt;
        }
    }
    return common;
}

std::vector<std::pair<int, NCElement>> weight_components(const NCElement& a) {
    std::map<int, NCElement> by_weight;
    for (const auto& [w, c] : a.terms()) by_weight[word_weight(w)].add_term(w, c);
    std::vector<std::pair<int, NCElement>> out;
    out.reserve(by_weight.size());
    for (auto& [mu, e] : by_weight) out.emplace_back(mu, std::move(e));
    return out;
}

}  // namespace redalg
