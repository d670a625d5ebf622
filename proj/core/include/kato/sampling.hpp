#pragma once

#include <cstdint>

#include "kato/jet.hpp"

namespace kato {

/// Overwrites the designated entries u_nn^a (a = 1..d) so that the pointwise
/// p-harmonic equation holds exactly: solves the d x d system
/// M x = rhs with M^{ab} = delta^{ab} + (p-2) u_n^a u_n^b / |grad u|^2,
/// positive definite for p > 1. The rest of the jet is untouched.
void project_p_harmonic(PointJet& jet, double p);

/// Random jet with standard-normal entries (Hessian symmetrized), rejected
/// while |grad u| < 0.1, then projected onto the p-harmonic constraint via
/// project_p_harmonic. Deterministic for a fixed seed.
PointJet sample_p_harmonic_jet(double p, int n, int d, std::uint64_t seed);

/// Local minimization of kato_ratio over the p-harmonic constraint manifold:
/// the gradient of `start` is kept fixed, all Hessian entries except u_nn^a
/// are free, and each candidate is projected back by project_p_harmonic.
/// Returns the minimal ratio found (Nelder--Mead from `start`).
double minimize_ratio_on_manifold(const PointJet& start, double p,
                                  int max_iter = 20000);

}  // namespace kato
