#include "ptt/cubic.hpp"

#include <algorithm>
#include <cmath>

namespace ptt {

namespace {

constexpr double kTwoPiThirds = 2.0943951023931953;

bool root_order(const Complex& a, const Complex& b) {
  if (a.real() != b.real()) return a.real() < b.real();
  return a.imag() < b.imag();
}

// One guarded Newton step in real arithmetic; skipped near multiple roots
// where f' vanishes.
double polish_real(double x, double p, double q) {
  const double fp = 3.0 * x * x + p;
  const double scale = std::max({1.0, std::abs(p), std::abs(q)});
  if (std::abs(fp) < 1e-6 * scale) return x;
  const double f = (x * x + p) * x + q;
  return x - f / fp;
}

Complex polish_complex(Complex x, Complex p, Complex q) {
  const Complex fp = 3.0 * x * x + p;
  const double scale = std::max({1.0, std::abs(p), std::abs(q)});
  if (std::abs(fp) < 1e-6 * scale) return x;
  const Complex f = (x * x + p) * x + q;
  return x - f / fp;
}

}  // namespace

std::array<Complex, 3> solve_depressed_cubic(double p, double q) {
  std::array<Complex, 3> roots;
  const double disc = cubic_discriminant(p, q);
  if (disc >= 0.0) {
    // Three real roots; disc >= 0 forces p <= 0 (and q = 0 whenever p = 0).
    if (p == 0.0) {
      roots = {Complex(0.0), Complex(0.0), Complex(0.0)};
    } else {
      const double s = std::sqrt(-p / 3.0);
      const double c = std::clamp(-q / (2.0 * s * s * s), -1.0, 1.0);
      const double theta = std::acos(c) / 3.0;
      for (int k = 0; k < 3; ++k) {
        double r = 2.0 * s * std::cos(theta - k * kTwoPiThirds);
        roots[k] = Complex(polish_real(r, p, q), 0.0);
      }
    }
  } else {
    // One real root (stable Cardano branch), conjugate pair by deflating
    // E^3 + p E + q = (E - r)(E^2 + r E + r^2 + p).
    const double sq = std::sqrt(q * q / 4.0 + p * p * p / 27.0);
    const double u = std::cbrt(-q / 2.0 - std::copysign(sq, q));
    double r = (u != 0.0) ? u - p / (3.0 * u) : 0.0;
    r = polish_real(r, p, q);
    const double s = std::sqrt(std::max(0.0, 3.0 * r * r + 4.0 * p)) / 2.0;
    roots = {Complex(r, 0.0), Complex(-r / 2.0, s), Complex(-r / 2.0, -s)};
  }
  std::sort(roots.begin(), roots.end(), root_order);
  return roots;
}

std::array<Complex, 3> solve_depressed_cubic_complex(Complex p, Complex q) {
  std::array<Complex, 3> roots;
  const Complex half_q = q / 2.0;
  Complex sq = std::sqrt(half_q * half_q + p * p * p / 27.0);
  if (std::norm(-half_q + sq) < std::norm(-half_q - sq)) sq = -sq;
  const Complex u3 = -half_q + sq;
  if (std::abs(u3) == 0.0) {
    // p == 0 here: roots are the cube roots of -q.
    const Complex r = std::pow(-q, 1.0 / 3.0);
    const Complex w(-0.5, std::sqrt(3.0) / 2.0);
    roots = {r, r * w, r * w * w};
  } else {
    const Complex u = std::pow(u3, 1.0 / 3.0);
    const Complex w(-0.5, std::sqrt(3.0) / 2.0);
    Complex uk = u;
    for (int k = 0; k < 3; ++k) {
      roots[k] = polish_complex(uk - p / (3.0 * uk), p, q);
      uk *= w;
    }
  }
  std::sort(roots.begin(), roots.end(), root_order);
  return roots;
}

}  // namespace ptt
