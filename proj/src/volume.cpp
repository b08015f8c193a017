#include "picard/volume.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace picard {

double collar_radius(double x) {
  if (!(x > 0)) throw std::domain_error("collar_radius: argument must be positive");
  return std::log(1.0 / std::tanh(x / 2.0));
}

double ball_volume(double r) {
  if (r < 0) throw std::domain_error("ball_volume: radius must be nonnegative");
  return std::numbers::pi * (std::sinh(2.0 * r) - 2.0 * r);
}

double invert_v_of_r(double y, double tol) {
  if (!(y > 0)) throw std::domain_error("invert_v_of_r: target must be positive");
  if (!(tol > 0)) throw std::invalid_argument("invert_v_of_r: tolerance must be positive");
  auto phi = [](double x) { return ball_volume(collar_radius(x)); };
  // phi is strictly decreasing: bracket [lo, hi] with phi(lo) >= y >= phi(hi)
  double lo = 1e-9, hi = 1.0;
  while (phi(hi) > y) hi *= 2.0;
  while (phi(lo) < y) lo /= 2.0;
  for (int iter = 0; iter < 500; ++iter) {
    double mid = 0.5 * (lo + hi);
    double v = phi(mid);
    if (std::abs(v - y) <= tol) return mid;
    if (v > y)
      lo = mid;
    else
      hi = mid;
  }
  throw std::runtime_error("invert_v_of_r: bisection failed to converge");
}

double tube_halfwidth(double vol, double tol) {
  if (!(vol > 0)) throw std::domain_error("tube_halfwidth: volume must be positive");
  return 0.5 * invert_v_of_r(vol / 2.0, tol);
}

double tube_halfwidth_nonseparating(double vol, double tol) {
  if (!(vol > 0)) throw std::domain_error("tube_halfwidth_nonseparating: volume must be positive");
  return 0.5 * invert_v_of_r(vol, tol);
}

TubeComputation tube_volume(double vol3, double tol) {
  double d = tube_halfwidth(vol3, tol);
  double s = std::sinh(d);
  return TubeComputation{vol3, d, 2.0 * vol3 * (s + s * s * s / 3.0), tol};
}

double euler_volume(int chi) {
  if (chi < 1) throw std::invalid_argument("euler_volume: Euler characteristic must be at least 1");
  return 4.0 * std::numbers::pi * std::numbers::pi / 3.0 * chi;
}

ContradictionReport contradiction_check(int copies, double vol3, int chi, double tol) {
  if (copies < 1) throw std::invalid_argument("contradiction_check: copies must be at least 1");
  TubeComputation tube = tube_volume(vol3);
  double lhs = copies * tube.tube_volume;
  double rhs = euler_volume(chi);
  return ContradictionReport{copies, vol3, chi, tube.halfwidth, lhs, rhs, tol, lhs - rhs > tol};
}

std::string ContradictionReport::str() const {
  std::ostringstream os;
  os.precision(6);
  os << std::fixed;
  os << copies << " * tube(" << vol3 << ") = " << lhs << (contradiction ? " > " : " <= ")
     << rhs << " = euler_volume(" << chi << ")";
  return os.str();
}

}  // namespace picard
