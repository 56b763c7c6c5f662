#pragma once

namespace cmetas {
inline constexpr const char* kVersion = "0.1.0";
}
