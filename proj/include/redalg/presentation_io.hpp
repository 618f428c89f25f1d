#pragma once

// Declarative text format for presentations:
//
//   generator <name> weight <int>
//   rule <first> <second> -> <expression>
//
// One directive per line; blank lines and '#' comments are skipped.
// Generators are listed in presentation order; rule right-hand sides use
// the expression grammar with the declared generators as atoms.
// read_presentation(write_presentation(p)) reproduces p exactly.

#include <string>

#include "redalg/rewrite.hpp"

namespace redalg {

std::string write_presentation(const Presentation& p);

/// Throws std::invalid_argument on malformed directives and propagates the
/// Presentation constructor's own validation errors.
Presentation read_presentation(const std::string& text);

}  // namespace redalg
