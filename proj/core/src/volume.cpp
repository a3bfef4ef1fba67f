#include "spinekit/volume.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "spinekit/quadrature.hpp"

namespace spinekit {

namespace {

constexpr double kPi = std::numbers::pi;

void check_angle(Angle theta) {
  if (!std::isfinite(theta.radians)) {
    throw std::domain_error("angle must be finite");
  }
  if (theta.radians < 0.0 || theta.radians >= kPi / 3.0) {
    throw std::domain_error("angle " + std::to_string(theta.radians) +
                            " outside [0, pi/3)");
  }
}

// arccosh(cos t / (2 cos t - 1)) written as arccosh(1 + u) with
// u = 2 sin^2(t/2) / (2 cos t - 1), so nothing cancels near t = 0. For tiny u
// the sqrt(2u) expansion replaces the log form.
double truncated_integrand(double t) {
  const double s = std::sin(0.5 * t);
  const double u = 2.0 * s * s / (2.0 * std::cos(t) - 1.0);
  if (u < 1e-8) {
    return std::sqrt(2.0 * u);
  }
  return std::log1p(u + std::sqrt(u * (2.0 + u)));
}

double eight_lambda_quarter_pi() {
  static const double value = 8.0 * lobachevsky(kPi / 4.0);
  return value;
}

}  // namespace

double lobachevsky(double x) {
  if (!std::isfinite(x)) {
    throw std::domain_error("lobachevsky: non-finite argument");
  }
  // Reduce by pi-periodicity to [0, pi), then by oddness to [0, pi/2].
  double r = std::fmod(x, kPi);
  if (r < 0.0) {
    r += kPi;
  }
  double sign = 1.0;
  if (r > kPi / 2.0) {
    r = kPi - r;
    sign = -1.0;
  }
  if (r == 0.0) {
    return 0.0;
  }

  // 1/2 sum_{m>=1} sin(2mr)/m^2, summed while the term bound 1/(2m^2) is at
  // least 1e-14. sin(2mr) comes from the three-term recurrence; the sum is
  // compensated.
  const double alpha = 2.0 * r;
  const double two_cos = 2.0 * std::cos(alpha);
  double s_prev = 0.0;
  double s_curr = std::sin(alpha);
  double sum = 0.0;
  double comp = 0.0;
  for (double m = 1.0;; m += 1.0) {
    const double bound = 0.5 / (m * m);
    if (bound < 1e-14) {
      break;
    }
    const double term = bound * s_curr;
    const double y = term - comp;
    const double t = sum + y;
    comp = (t - sum) - y;
    sum = t;
    const double s_next = two_cos * s_curr - s_prev;
    s_prev = s_curr;
    s_curr = s_next;
  }
  return sign * sum;
}

double vol_regular_truncated_integral(Angle theta) {
  check_angle(theta);
  if (theta.radians == 0.0) {
    return eight_lambda_quarter_pi();
  }
  return eight_lambda_quarter_pi() -
         3.0 * adaptive_quadrature(truncated_integrand, 0.0, theta.radians, 1e-10);
}

double vol_regular_truncated_closed(Angle theta) {
  check_angle(theta);
  const double half = 0.5 * theta.radians;
  const double sh = std::sin(half);
  const double radicand = 1.0 - 3.0 * sh * sh;
  if (radicand <= 0.0) {
    throw std::logic_error("vol_regular_truncated_closed: radicand not positive");
  }
  const double phi = std::atan(std::sqrt(radicand) / std::cos(half));
  return 6.0 * (lobachevsky(kPi / 3.0 + phi) - lobachevsky(kPi / 3.0 - phi) +
                lobachevsky(5.0 * kPi / 6.0 - phi) + lobachevsky(kPi / 6.0 - phi) +
                lobachevsky(half + phi) - lobachevsky(half - phi) +
                2.0 * lobachevsky(kPi / 2.0 - phi));
}

VolumeResult vol_regular_truncated(Angle theta) {
  VolumeResult result;
  result.via_integral = vol_regular_truncated_integral(theta);
  result.via_lobachevsky = vol_regular_truncated_closed(theta);
  result.agreed = std::abs(result.discrepancy()) <= kVolumeAgreementTol;
  return result;
}

double vol_mn(int n) {
  if (n < 2) {
    throw std::domain_error("vol_mn: n must be at least 2");
  }
  return n * vol_regular_truncated_integral(Angle{kPi / (3.0 * n)});
}

double vol_wn(int n) {
  if (n < 5 || (n - 5) % 4 != 0) {
    throw std::domain_error("vol_wn: n must be of the form 5 + 4s");
  }
  const VolumeResult per_tet = vol_regular_truncated(Angle{2.0 * kPi / (3.0 * n)});
  if (!per_tet.agreed) {
    throw std::logic_error("vol_wn: volume formulas disagree beyond tolerance");
  }
  return n * per_tet.via_lobachevsky;
}

std::optional<Angle> regular_angle(const IdealTriangulation& t) {
  const auto classes = edge_classes(t);
  const int m = classes.class_sizes.front();
  for (int size : classes.class_sizes) {
    if (size != m) {
      return std::nullopt;
    }
  }
  if (m <= 6) {
    return std::nullopt;
  }
  return Angle{2.0 * kPi / m};
}

}  // namespace spinekit
