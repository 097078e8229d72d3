#pragma once

namespace symmon {

inline constexpr const char* kEngineVersion = "symmon 1.0.0";

} // namespace symmon
