#pragma once

#include <functional>
#include <vector>

#include "kato/jet.hpp"

namespace kato {

/// Exact jet of u(x) = |x|^sigma, sigma = (p-n)/(p-1), at x != 0, embedded as
/// a 1-dimensional target padded to d = 2. Throws constant_exponent_error for
/// p == n.
PointJet radial_power_jet(double p, int n, const std::vector<double>& x);

/// Exact jet of v(x) = (x_1,...,x_R,0,...,0)/sqrt(x_1^2+...+x_R^2) at x, as a
/// map into the ambient R^{d+1} of S^d. Requires 2 <= R <= min(d+1, n) and
/// (x_1,...,x_R) != 0.
PointJet equator_projection_jet(int n, int d, int R,
                                const std::vector<double>& x);

/// Value of the equator projection map at x (unit vector in R^{d+1}).
std::vector<double> equator_projection_value(int n, int d, int R,
                                             const std::vector<double>& x);

/// Covariant jet of a sphere-valued map: projects the v-component out of each
/// Hessian entry, leaving the intrinsic (tangential) second derivatives whose
/// norm enters the sharp Kato inequality for sphere maps. The gradient is
/// unchanged. Requires |v| = 1 and dim(v) == d.
PointJet tangential_hessian_jet(const PointJet& jet, const std::vector<double>& v);

/// Max component of the tangential part (w.r.t. the unit target value v) of
/// the pointwise p-harmonic residual vector of a sphere-valued jet.
double tangential_p_harmonic_residual(const PointJet& jet,
                                      const std::vector<double>& v, double p);

using MapEvaluator =
    std::function<std::vector<double>(const std::vector<double>&)>;

/// Central-difference jet (O(h^2) gradient and Hessian) of an arbitrary map.
PointJet finite_difference_jet(const MapEvaluator& map, const std::vector<double>& x,
                               double h = 1e-4);

}  // namespace kato
