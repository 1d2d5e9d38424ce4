#pragma once

namespace irrstrat {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace irrstrat
