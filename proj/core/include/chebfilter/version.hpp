#pragma once

namespace chebfilter {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace chebfilter
