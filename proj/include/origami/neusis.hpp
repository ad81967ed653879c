#pragma once

// Marked-ruler (neusis) simulations, kept independent of the fold code so
// they can cross-check it.

#include "origami/geometry.hpp"
#include "origami/polysolve.hpp"

namespace origami {

/// Slides a unit-marked ruler through A = (cos alpha, sin alpha) with one mark
/// S on the unit circle and the other R on the x-axis, and returns the angle
/// at R in degrees. Throws OutOfRange unless 0 < alpha < 90.
Scalar archimedes_trisect(const Scalar& alpha);
/// 0 < alpha < 180, using alpha/3 = 30 + (alpha - 90)/3 above a right angle.
Scalar archimedes_trisect_extended(const Scalar& alpha);

/// The quartic 4x^4 + kx^3 - 4kx - k^2 (descending).
Polynomial nicomedes_quartic(const Scalar& k);
/// Positive root of nicomedes_quartic(k). Throws OutOfRange unless 0 < k < 8.
Scalar nicomedes_cuberoot(const Scalar& k);
/// Any x > 0, rescaled by powers of 8 into [1, 8).
Scalar nicomedes_cuberoot_extended(const Scalar& x);

}  // namespace origami
