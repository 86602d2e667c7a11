#pragma once

#include <optional>
#include <string>
#include <string_view>

namespace dubovsky {

/// Shortest decimal text that reads back to the same double.
std::string format_double(double v);

/// Strict parse: the whole of `s` must be a decimal floating-point literal.
std::optional<double> parse_double(std::string_view s);

}  // namespace dubovsky
