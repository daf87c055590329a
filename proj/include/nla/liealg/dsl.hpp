#pragma once

#include "nla/liealg/lie_algebra.hpp"

#include <string>
#include <string_view>

namespace nla {

// Salamon-style notation, e.g. "(0,0,12,13,23,14+25,0,0)" or "(0,0,1/2.12)".
// Throws ParseError (with position) or JacobiViolation.
LieAlgebra parse_algebra(std::string_view text, std::string name = {});

// Inverse of parse_algebra; requires dim <= 9.
std::string render_algebra(const LieAlgebra& g);

}  // namespace nla
