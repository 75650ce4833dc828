#pragma once

namespace shiftlab {

inline constexpr const char* kVersion = "0.1.0";

// Default tolerances used across the library. Every certificate records the
// tolerances that were actually applied.
inline constexpr double kDefaultCommutationTol = 1e-10;
inline constexpr double kUnimodularTol = 1e-12;

}  // namespace shiftlab
