#pragma once

#include <optional>
#include <vector>

#include "majorana/constellation.hpp"
#include "majorana/spin_state.hpp"

namespace majorana {

/// Number of distinct stars when roots closer than `cluster_radius`
/// (chordal) are merged.
int distinct_star_count(const SpinState& state, double cluster_radius);
int distinct_star_count(const SpinState& state, const Tolerances& tol = {});

/// Lower bound N - n1 - n2 + 1 on the distinct stars of any combination of
/// states with constellations c1, c2, after stars common to both have been
/// canceled with multiplicity min(r, s). Stars closer than `match_radius`
/// count as common.
int mason_bound(const Constellation& c1, const Constellation& c2, double match_radius);

struct Superposition {
  SpinState state;
  Constellation constellation;
  int mason_bound = 0;
  int distinct_stars = 0;

  bool bound_holds() const noexcept { return distinct_stars >= mason_bound; }
};

/// Normalized a s1 + b s2 with its constellation and the bound. Throws
/// ZeroCombination when the combination vanishes.
Superposition superpose(Complex a, const SpinState& s1, Complex b, const SpinState& s2, const Tolerances& tol = {});

struct TrajectorySample {
  double t = 0.0;
  std::vector<StereoPoint> roots;  // zeta_0(t) ... zeta_{N-1}(t)
};

/// Stars of cos^N t (z - g1)^N - e^{iN Omega} sin^N t (z - g2)^N as t runs.
struct Trajectory {
  int two_spin = 0;
  Complex gamma1;
  Complex gamma2;
  double omega = 0.0;
  std::vector<TrajectorySample> samples;
};

/// zeta_k(t) = (g1 cos t - g2 E sin t) / (cos t - E sin t), E = e^{i Omega} xi^k,
/// xi = e^{2 pi i / N}. Throws PoleAt when a denominator vanishes, unless
/// `poles_to_infinity` is set, in which case that root is infinity.
Trajectory two_sc_trajectory(int two_spin, const StereoPoint& gamma1, const StereoPoint& gamma2, double omega,
                             const std::vector<double>& ts, bool poles_to_infinity = false);
Complex trajectory_root(int two_spin, Complex gamma1, Complex gamma2, double omega, int k, double t);
/// Majorana coefficients of cos^N t (z - g1)^N - e^{iN Omega} sin^N t (z - g2)^N.
CVector trajectory_polynomial(int two_spin, Complex gamma1, Complex gamma2, double omega, double t);
/// (z - g1) / (z - g2).
StereoPoint mobius_image(const StereoPoint& zeta, Complex gamma1, Complex gamma2);

/// Trajectory parameters (gamma1, gamma2, Omega) of the family through
/// a |n1> + b |n2>, and the t at which it is reached. Throws InvalidArgument
/// unless both states are SC with finite, distinct stars.
struct TrajectoryThrough {
  Complex gamma1;
  Complex gamma2;
  double omega = 0.0;
  double t = 0.0;
};
TrajectoryThrough trajectory_through(Complex a, const SpinState& sc1, Complex b, const SpinState& sc2,
                                     const Tolerances& tol = {});

/// Least-squares circle (or line) through points of the plane, from the
/// smallest singular vector of rows (|p|^2, x, y, 1).
struct CircleFit {
  bool is_line = false;
  Complex center;
  double radius = 0.0;
  double residual = 0.0;  // largest geometric distance from the curve
};
CircleFit fit_circle(const std::vector<Complex>& points);

/// One SC point on the complex line through two spin-1 states.
struct LineIntersection {
  StereoPoint gamma;
  /// Weights with alpha1 (z - z1)(z - z2) + alpha2 (z - x1)(z - x2) = (z - gamma)^2;
  /// empty when a star or gamma is infinite.
  std::optional<Complex> alpha1;
  std::optional<Complex> alpha2;
};

/// SC points on the line through the spin-1 states with stars {z1, z2} and
/// {x1, x2}: two points, or one when the states share a star. Throws
/// InvalidArgument when the two states coincide.
std::vector<LineIntersection> spin1_line_intersections(const StereoPoint& zeta1, const StereoPoint& zeta2,
                                                       const StereoPoint& xi1, const StereoPoint& xi2,
                                                       const Tolerances& tol = {});

/// Spin-3/2 target (z - z1)(z - z2)(z - z3) written as
/// alpha1 P(gamma1) + alpha2 P(gamma2), with P(g) = (z - g)^3 and P(inf) = -1
/// (the Majorana polynomial of the south-pole SC state). When two stars
/// coincide the second term is the tangent polynomial T(g) = (z - g)^2
/// (T(inf) = z) and gamma1 = gamma2.
struct TwoSCDecomposition {
  StereoPoint gamma1;
  StereoPoint gamma2;
  Complex alpha1;
  Complex alpha2;
  bool degenerate = false;
  bool a_branch = false;  // |A| below threshold, one gamma at infinity
};

TwoSCDecomposition spin32_decompose(const StereoPoint& zeta1, const StereoPoint& zeta2, const StereoPoint& zeta3,
                                    const Tolerances& tol = {});

/// Majorana coefficients (z^0 .. z^n) of the product of factors z - zeta,
/// with -1 for a star at infinity.
CVector star_polynomial(const std::vector<StereoPoint>& stars);
CVector sc_polynomial(const StereoPoint& gamma, int two_spin);
CVector tangent_polynomial(const StereoPoint& gamma, int two_spin);
/// alpha1 P(gamma1) + alpha2 (P or T)(gamma2).
CVector reconstruct(const TwoSCDecomposition& d);

/// Weights w_k with w1 |n(gamma1)> + w2 |n(gamma2)> equal to the state whose
/// Majorana polynomial is the target. Non-degenerate decompositions only.
std::pair<Complex, Complex> sc_weights(const TwoSCDecomposition& d);

/// Points of the projective line through a and b where the state is SC
/// (one distinct star at the sc_membership radius). The line is sampled at
/// cos(t) a + e^{i chi} sin(t) b over a t_steps x chi_steps grid, t in [0, pi/2].
struct LinePoint {
  double t = 0.0;
  double chi = 0.0;
};
std::vector<LinePoint> sc_points_on_line(const SpinState& a, const SpinState& b, int t_steps, int chi_steps,
                                         const Tolerances& tol = {});

}  // namespace majorana
