#pragma once

namespace ctgeo {

inline constexpr const char* kToolVersion = "0.1.0";

}  // namespace ctgeo
