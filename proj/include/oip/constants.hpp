#pragma once

#include <numbers>

namespace oip {

// Exact SI defined values (2019 redefinition).
inline constexpr double kPlanck = 6.62607015e-34;          // J*s
inline constexpr double kSpeedOfLight = 2.99792458e8;      // m/s
inline constexpr double kElementaryCharge = 1.602176634e-19; // C

inline constexpr double kVacuumPermittivity = 8.8541878128e-12; // F/m
inline constexpr double kVacuumPermeability = 1.25663706212e-6; // H/m
inline constexpr double kFreeSpaceImpedance = 376.730313668;     // ohm

inline constexpr double kPi = std::numbers::pi;

} // namespace oip
