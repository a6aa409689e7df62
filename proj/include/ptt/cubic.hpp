#pragma once

#include <array>

#include "ptt/types.hpp"

namespace ptt {

/// Roots of the depressed cubic E^3 + p*E + q = 0 with real coefficients.
///
/// Discriminant >= 0 uses the trigonometric branch, so all three roots come
/// back with exactly zero imaginary part; otherwise the real root is found by
/// Cardano's formula and the conjugate pair by deflation, so the pair is
/// exactly conjugate. Roots are sorted by (real, imaginary).
std::array<Complex, 3> solve_depressed_cubic(double p, double q);

/// General fallback for complex coefficients (principal-branch Cardano).
/// No realness or conjugacy guarantees; roots sorted by (real, imaginary).
std::array<Complex, 3> solve_depressed_cubic_complex(Complex p, Complex q);

/// Discriminant of E^3 + p*E + q: positive for three distinct real roots,
/// negative for one real root and a conjugate pair, zero at coalescence.
inline double cubic_discriminant(double p, double q) {
  return -4.0 * p * p * p - 27.0 * q * q;
}

}  // namespace ptt
