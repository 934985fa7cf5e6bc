#pragma once

namespace braidcong {

inline constexpr const char* kVersion = "1.0.0";

} // namespace braidcong
