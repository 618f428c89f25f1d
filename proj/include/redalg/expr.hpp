#pragma once

// Text front-end for algebra elements.
//
//   expr     := ['-'] term (('+' | '-') term)*
//   term     := factor (('*' | '/') factor)*
//   factor   := atom ['^' uint]
//   atom     := 'z+' | 'z-' | 't' | 'h' | 'nu' | 'zeta' | 'M' | uint
//             | '(' expr ')'
//
// Whitespace is insignificant.  'z' must be immediately followed by '+' or
// '-'.  A divisor must be a pure coefficient (no generators).  Coefficient
// variables may be written on either side of generators; the coefficient is
// moved to the left with the weight shift applied (so the printed relations
// of the algebra can be typed verbatim).  render() emits the canonical
// left-coefficient form, and parse_element(render(e)) == e.

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "redalg/element.hpp"

namespace redalg {

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& message, std::size_t position)
        : std::runtime_error(message + " at position " +
                             std::to_string(position)),
          position_(position) {}

    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

/// The generator atoms of the default grammar, in presentation order.
const std::vector<Generator>& standard_generators();

/// Parses source text to an element; generator names and weights are taken
/// from gens.  Throws ParseError with the offending position.
NCElement parse_element(const std::string& src);
NCElement parse_element(const std::string& src,
                        const std::vector<Generator>& gens);

/// Canonical rendering: terms in storage order, each as
/// coefficient * generator factors with '^' powers; parses back to the
/// same element.
std::string render(const NCElement& e);

}  // namespace redalg
