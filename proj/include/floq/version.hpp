// version.hpp — library version string
#pragma once

namespace floq {
inline constexpr const char* kVersion = "1.0.0";
}
