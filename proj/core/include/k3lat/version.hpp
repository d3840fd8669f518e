#pragma once

namespace k3lat {

inline constexpr const char* kVersion = "1.0.0";

}  // namespace k3lat
