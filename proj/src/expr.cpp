#include "redalg/expr.hpp"

#include <cctype>

namespace redalg {

namespace {

struct Token {
    enum Kind {
        Plus,
        Minus,
        Star,
        Slash,
        Caret,
        LParen,
        RParen,
        Number,
        Name,
        End
    };
    Kind kind;
    std::string text;
    std::size_t pos;
};

std::vector<Token> lex(const std::string& src) {
    std::vector<Token> out;
    std::size_t i = 0;
    auto push = [&](Token::Kind k, std::string text, std::size_t pos) {
        out.push_back({k, std::move(text), pos});
    };
    while (i < src.size()) {
        char c = src[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        std::size_t pos = i;
        switch (c) {
            case '+': push(Token::Plus, "+", pos); ++i; continue;
            case '-': push(Token::Minus, "-", pos); ++i; continue;
            case '*': push(Token::Star, "*", pos); ++i; continue;
            case '/': push(Token::Slash, "/", pos); ++i; continue;
            case '^': push(Token::Caret, "^", pos); ++i; continue;
            case '(': push(Token::LParen, "(", pos); ++i; continue;
            case ')': push(Token::RParen, ")", pos); ++i; continue;
            default: break;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t k = i;
            while (k < src.size() &&
                   std::isdigit(static_cast<unsigned char>(src[k])))
                ++k;
            push(Token::Number, src.substr(i, k - i), pos);
            i = k;
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::size_t k = i;
            while (k < src.size() &&
                   std::isalpha(static_cast<unsigned char>(src[k])))
                ++k;
            std::string name = src.substr(i, k - i);
            if (name == "z") {
                if (k < src.size() && (src[k] == '+' || src[k] == '-')) {
                    name += src[k];
                    ++k;
                } else {
                    throw ParseError("expected '+' or '-' after 'z'", pos);
                }
            }
            push(Token::Name, std::move(name), pos);
            i = k;
            continue;
        }
        throw ParseError(std::string("unexpected character '") + c + "'",
                         pos);
    }
    push(Token::End, "", src.size());
    return out;
}

NCElement pow_element(const NCElement& base, unsigned long n) {
    NCElement out = NCElement::unit();
    for (unsigned long i = 0; i < n; ++i) out = out * base;
    return out;
}

class Parser {
public:
    Parser(std::vector<Token> tokens, const std::vector<Generator>& gens)
        : tokens_(std::move(tokens)), gens_(gens) {}

    NCElement run() {
        NCElement e = parse_expr();
        if (peek().kind != Token::End)
            throw ParseError("unexpected trailing input", peek().pos);
        return e;
    }

private:
    const Token& peek() const { return tokens_[index_]; }
    const Token& next() { return tokens_[index_++]; }
    bool accept(Token::Kind k) {
        if (peek().kind != k) return false;
        ++index_;
        return true;
    }

    NCElement parse_expr() {
        bool negate = accept(Token::Minus);
        NCElement acc = parse_term();
        if (negate) acc = -acc;
        for (;;) {
            if (accept(Token::Plus)) {
                acc += parse_term();
            } else if (accept(Token::Minus)) {
                acc -= parse_term();
            } else {
                return acc;
            }
        }
    }

    NCElement parse_term() {
        NCElement acc = parse_factor();
        for (;;) {
            if (accept(Token::Star)) {
                acc = acc * parse_factor();
            } else if (peek().kind == Token::Slash) {
                std::size_t pos = next().pos;
                NCElement divisor = parse_factor();
                acc = acc * NCElement::scalar(scalar_value(divisor, pos).inv());
            } else {
                return acc;
            }
        }
    }

    RatFunc scalar_value(const NCElement& e, std::size_t pos) const {
        if (e.is_zero()) throw ParseError("division by zero", pos);
        if (e.term_count() != 1 || !e.terms().begin()->first.empty())
            throw ParseError("divisor must be a pure coefficient", pos);
        return e.terms().begin()->second;
    }

    NCElement parse_factor() {
        NCElement base = parse_atom();
        if (accept(Token::Caret)) {
            if (peek().kind != Token::Number)
                throw ParseError("expected exponent", peek().pos);
            const Token& tok = next();
            unsigned long n = 0;
            try {
                n = std::stoul(tok.text);
            } catch (const std::out_of_range&) {
                throw ParseError("exponent out of range", tok.pos);
            }
            return pow_element(base, n);
        }
        return base;
    }

    NCElement parse_atom() {
        const Token& tok = next();
        switch (tok.kind) {
            case Token::LParen: {
                NCElement e = parse_expr();
                if (!accept(Token::RParen))
                    throw ParseError("expected ')'", peek().pos);
                return e;
            }
            case Token::Number:
                return NCElement::scalar(RatFunc(Rational(Int(tok.text))));
            case Token::Name: {
                for (const Generator& g : gens_)
                    if (g.name == tok.text)
                        return NCElement::from_generator(g);
                if (tok.text == "h" || tok.text == "nu" ||
                    tok.text == "zeta" || tok.text == "M") {
                    return NCElement::scalar(
                        RatFunc::variable(*var_from_name(tok.text)));
                }
                throw ParseError("unknown symbol '" + tok.text + "'",
                                 tok.pos);
            }
            default:
                throw ParseError("expected an atom", tok.pos);
        }
    }

    std::vector<Token> tokens_;
    const std::vector<Generator>& gens_;
    std::size_t index_ = 0;
};

bool renders_as_single_product(const Poly& p) {
    return p.term_count() == 1 && p.leading_coefficient() > 0;
}

// Rendering of a coefficient with positive leading numerator term, tight
// enough to appear as a factor inside a '*' chain.
std::string coeff_factor(const RatFunc& c) {
    if (c.den().is_one()) {
        if (renders_as_single_product(c.num())) return c.num().str();
        return "(" + c.num().str() + ")";
    }
    return "(" + c.num().str() + ")/(" + c.den().str() + ")";
}

std::string word_factors(const Word& w) {
    std::string out;
    std::size_t i = 0;
    while (i < w.size()) {
        std::size_t k = i;
        while (k < w.size() && w[k].name == w[i].name) ++k;
        if (!out.empty()) out += " * ";
        out += w[i].name;
        if (k - i > 1) out += "^" + std::to_string(k - i);
        i = k;
    }
    return out;
}

}  // namespace

const std::vector<Generator>& standard_generators() {
    static const std::vector<Generator> gens{
        {"z-", -2}, {"t", 0}, {"z+", +2}};
    return gens;
}

NCElement parse_element(const std::string& src) {
    return parse_element(src, standard_generators());
}

NCElement parse_element(const std::string& src,
                        const std::vector<Generator>& gens) {
    return Parser(lex(src), gens).run();
}

std::string render(const NCElement& e) {
    if (e.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [w, c] : e.terms()) {
        bool negative = c.num().leading_coefficient() < 0;
        RatFunc a = negative ? -c : c;
        if (first) {
            if (negative) out += "-";
        } else {
            out += negative ? " - " : " + ";
        }
        first = false;
        std::string ws = word_factors(w);
        if (ws.empty()) {
            out += coeff_factor(a);
        } else if (a.is_one()) {
            out += ws;
        } else {
            out += coeff_factor(a) + " * " + ws;
        }
    }
    return out;
}

}  // namespace redalg
