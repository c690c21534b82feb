#pragma once

#include <string>
#include <string_view>

namespace symtop {

// Decimal, 17 significant digits; enough to round-trip IEEE doubles.
// All numeric file output goes through this.
std::string fmt17(double v);

// JSON string literal with the usual escapes, including the quotes.
std::string json_quote(std::string_view s);

}  // namespace symtop
