#pragma once

#include <string>
#include <string_view>

namespace confkit {

/// Double-quoted Graphviz identifier with '"' and '\' escaped.
std::string dot_quote(std::string_view s);

}  // namespace confkit
