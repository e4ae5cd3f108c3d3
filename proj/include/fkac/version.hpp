#pragma once

namespace fkac {
inline constexpr const char* kVersion = "0.1.0";
}
