#pragma once

#include <optional>

#include "spinekit/triangulation.hpp"

namespace spinekit {

/// Dihedral angle of a regular truncated tetrahedron, in radians. Valid range
/// is 0 <= radians < pi/3; 0 is admitted as the ideal limit.
struct Angle {
  double radians = 0.0;
};

/// Lobachevsky function L(x) = -integral_0^x ln|2 sin z| dz, evaluated by the
/// sine series L(x) = 1/2 * sum_{m>=1} sin(2mx)/m^2 after reduction by
/// pi-periodicity and oddness. Throws std::domain_error on non-finite input.
double lobachevsky(double x);

inline constexpr double kVolumeAgreementTol = 1e-9;

/// Volume of the regular truncated tetrahedron by both routes.
struct VolumeResult {
  double via_integral = 0.0;
  double via_lobachevsky = 0.0;
  bool agreed = false;

  double discrepancy() const { return via_integral - via_lobachevsky; }
};

/// 8 L(pi/4) - 3 * integral_0^theta arccosh(cos t / (2 cos t - 1)) dt, by
/// adaptive quadrature to absolute 1e-10. Throws std::domain_error outside
/// [0, pi/3).
double vol_regular_truncated_integral(Angle theta);

/// The same volume as a finite combination of Lobachevsky values at
/// phi-shifted angles, phi = arctan(sqrt(1 - 3 sin^2(theta/2)) / cos(theta/2)).
double vol_regular_truncated_closed(Angle theta);

VolumeResult vol_regular_truncated(Angle theta);

/// Volume of the one-2-component family member glued from n tetrahedra of
/// angle pi/(3n). Requires n >= 2.
double vol_mn(int n);

/// Volume of the two-2-component family member W_n = n tetrahedra of angle
/// 2 pi/(3n). Requires n = 5 + 4s. The closed form is cross-checked against
/// the integral form before being returned.
double vol_wn(int n);

/// The uniform dihedral angle 2 pi/m when all edge classes have the same size
/// m and the angle is below pi/3 (i.e. m > 6); otherwise nullopt.
std::optional<Angle> regular_angle(const IdealTriangulation& t);

}  // namespace spinekit
