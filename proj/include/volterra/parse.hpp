#pragma once

#include <string_view>

#include "volterra/forest.hpp"

namespace volterra {

// Parses the operator grammar (see README for the EBNF) into a canonical
// forest. Total: any input either parses or raises ParseError with a 1-based
// line/column position.
Forest parse(std::string_view src);

} // namespace volterra
