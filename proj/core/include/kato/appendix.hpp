#pragma once

#include <cstdint>
#include <functional>

namespace kato {

/// Discriminant of the quadratic form underlying the mixed
/// Kato--Cauchy--Schwarz inequality, with E = -2 gamma (p-1) and
/// theta2^2 = 1 - theta1^2:
///   Delta = 36 theta1^2 theta2^2 - 4 (2p + E) theta1^2 * 6/(p-2).
/// Nonpositive on the whole admissible box. At p == 2 the 6/(p-2) factor
/// diverges; the sign-equivalent rescaled quantity (p-2) Delta / 12 is
/// returned there instead.
double mixed_kcs_discriminant(double p, double gamma, double theta1);

/// (p-2) Delta / 12 = 3 theta1^2 theta2^2 (p-2) - 2 (2p + E) theta1^2,
/// continuous at p = 2 and <= 0 for all p >= 2.
double mixed_kcs_discriminant_rescaled(double p, double gamma, double theta1);

/// Samples p-harmonic jets (n = 3) and evaluates both sides of the mixed
/// Kato--Cauchy--Schwarz inequality; returns the maximal LHS - RHS over the
/// sample (negative when the inequality holds with margin). Samples with
/// |grad |grad u|| below noise level are skipped.
double verify_mixed_kcs_pointwise(double p, double gamma, int samples,
                                  std::uint64_t seed);

/// Rayleigh quotient int f'^2 r^{n-p+1} dr / int f^2 r^{n-p-1} dr for the
/// test family f(r) = r^{-(n-p)/2} chi(r), chi a cutoff linear in log r that
/// equals 1 on [eps, 1/eps], computed by adaptive quadrature. Bounded below
/// by (n-p)^2/4 and converging to it as eps -> 0.
double rayleigh_quotient_estimate(double n, double p, double epsilon);

/// The same quotient for an arbitrary f with derivative df, supported in
/// [r_lo, r_hi].
double rayleigh_quotient(const std::function<double(double)>& f,
                         const std::function<double(double)>& df, double r_lo,
                         double r_hi, double n, double p);

}  // namespace kato
