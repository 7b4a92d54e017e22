#pragma once

namespace frontal {

inline constexpr const char* kVersion = "0.1.0";

} // namespace frontal
