#pragma once

// Hyperbolic volume estimates: the collar/ball pairing r(x) = log coth(x/2),
// the volume V(r) = pi (sinh 2r - 2r) of a ball of radius r, the tube volume
// lower bound around a short geodesic dual to an embedded surface, and the
// Euler-characteristic volume of the relevant 4-manifolds.

#include <string>

namespace picard {

// Root-finding tolerance used by default throughout this module.
inline constexpr double kRootTolerance = 1e-12;

// Tolerance for top-level numeric comparisons (the contradiction margin).
inline constexpr double kComparisonTolerance = 1e-3;

// The bound on the volume of a closed orientable hyperbolic 3-manifold that
// the pipeline's inputs must stay below.  Stored to full printed precision;
// computations round it down to 0.94 (any smaller value keeps every bound valid,
// since the tube volume is increasing in the 3-manifold volume).
inline constexpr double kWeeksVolumeBound = 0.9427;
inline constexpr double kVolumeArgument = 0.94;

// r(x) = log coth(x/2); a decreasing involution of (0, inf).  Throws
// std::domain_error for x <= 0.
double collar_radius(double x);

// V(r) = pi (sinh 2r - 2r): volume of the hyperbolic ball of radius r
// (the closed form of 4 pi int_0^r sinh^2 t dt).  Throws for r < 0.
double ball_volume(double r);

// The unique x > 0 with V(r(x)) = y, to within |V(r(x)) - y| <= tol.
// V o r is strictly decreasing, so bisection applies.  Throws for y <= 0 or
// tol <= 0.
double invert_v_of_r(double y, double tol = kRootTolerance);

// Half-width d with V(r(2d)) = vol/2: the embedded-tube radius around the
// core geodesic when the dual surface is separating.
double tube_halfwidth(double vol, double tol = kRootTolerance);

// Half-width c with V(r(2c)) = vol: the non-separating case (smaller).
double tube_halfwidth_nonseparating(double vol, double tol = kRootTolerance);

struct TubeComputation {
  double vol3;         // input: volume of the closed hyperbolic 3-manifold
  double halfwidth;    // d with V(r(2d)) = vol3/2
  double tube_volume;  // 2 vol3 (sinh d + sinh^3 d / 3)
  double tolerance;    // root-finding tolerance used
};

// The tube volume lower bound 2 A (sinh d + sinh^3 d / 3) with d the
// separating-case half-width for vol3 = A.  Throws for vol3 <= 0.
TubeComputation tube_volume(double vol3, double tol = kRootTolerance);

// (4 pi^2 / 3) chi: the Gauss-Bonnet volume of a hyperbolic 4-manifold of
// Euler characteristic chi.  Throws std::invalid_argument for chi < 1.
double euler_volume(int chi);

struct ContradictionReport {
  int copies;          // number of disjoint tubes
  double vol3;         // volume argument fed to the tube bound
  int chi;             // Euler characteristic of the ambient 4-manifold
  double halfwidth;    // tube half-width
  double lhs;          // copies * tube volume
  double rhs;          // euler_volume(chi)
  double tolerance;
  bool contradiction;  // lhs exceeds rhs by more than tolerance

  std::string str() const;
};

// Compare copies * tube_volume(vol3) against euler_volume(chi).
ContradictionReport contradiction_check(int copies, double vol3, int chi,
                                        double tol = kComparisonTolerance);

}  // namespace picard
