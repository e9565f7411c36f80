#pragma once

#include <string_view>

namespace qslbath {

inline constexpr std::string_view kVersion = "0.1.0";

}  // namespace qslbath
