#pragma once

#include <cstdint>

namespace kato::tol {

// Named tolerance constants used throughout the library. All arithmetic is
// plain binary64; these are absolute tolerances on O(1) quantities.
inline constexpr double ORACLE_TOL = 1e-8;   // closed form vs grid/golden oracle
inline constexpr double DERIV_TOL = 1e-6;    // finite-difference derivative checks
inline constexpr double DISC_TOL = 1e-9;     // accepting a (z,w)-form discriminant as zero
inline constexpr double JET_TOL = 1e-9;      // extremal-jet ratio gap
inline constexpr double RESIDUAL_TOL = 1e-12; // pointwise p-harmonic residual
inline constexpr double DEGENERATE_GRAD_NORM = 1e-14; // |grad |grad u|| below this is degenerate

// Default seed for all reproducible-by-default sampling entry points.
inline constexpr std::uint64_t DEFAULT_SEED = 421509;

}  // namespace kato::tol
