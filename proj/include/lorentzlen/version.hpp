#pragma once

namespace lls {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace lls
