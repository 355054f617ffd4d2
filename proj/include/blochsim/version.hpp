#pragma once

namespace blochsim {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace blochsim
