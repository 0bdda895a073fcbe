#pragma once

#include <optional>
#include <string>
#include <vector>

#include "majorana/spin_state.hpp"

namespace majorana {

/// H(n) = |<n|psi>|^2.
double husimi(const SpinState& state, const Direction& n);

/// Coefficients <n0, m|psi> in the n0.S eigenbasis, where
/// |n0, m> = D(R_z(phi0) R_y(theta0)) |s, m>. Index 0 is m = s.
struct RotatedExpansion {
  CVector coeffs;

  double rho(int index) const { return index < coeffs.size() ? std::abs(coeffs(index)) : 0.0; }
  double phase(int index) const { return index < coeffs.size() ? std::arg(coeffs(index)) : 0.0; }
};
RotatedExpansion rotated_expansion(const SpinState& state, const Direction& n0);

enum class CriticalKind { GlobalMin, LocalMax, Saddle };
const char* to_string(CriticalKind kind);

struct CriticalPoint {
  Direction direction;
  CriticalKind kind = CriticalKind::LocalMax;
  double value = 0.0;
  /// Angle from theta-hat towards phi-hat of the direction along which a
  /// saddle is a minimum; in [0, pi).
  std::optional<double> saddle_phi;
  double rho_s = 0.0;
  double rho_s1 = 0.0;
  double rho_s2 = 0.0;
  double alpha_s = 0.0;
  double alpha_s2 = 0.0;
  /// |<n0, s-1|psi>|.
  double residual = 0.0;
  /// sqrt(s) rho_s and sqrt(2s-1) rho_{s-2} agree within tolerance: the
  /// Hessian is degenerate and the kind is not decided by the test.
  bool marginal = false;
  /// Number of coincident stars for a minimum, 1 otherwise.
  int multiplicity = 1;
};

/// Throws NotCritical when n0 is neither a zero of H nor a critical point.
CriticalPoint classify_critical(const SpinState& state, const Direction& n0, const Tolerances& tol = {});

struct CriticalSearch {
  std::vector<CriticalPoint> points;  // maxima, saddles, then minima; each by (theta, phi)
  std::vector<std::string> warnings;
  int seeds = 0;
  int failed_seeds = 0;

  int count(CriticalKind kind) const;
  /// #max - #saddle + #min (distinct points).
  int euler_characteristic() const;
};

/// Multistart Newton search seeded from a Fibonacci lattice of
/// max(50, 40 N) points; the minima are added from the star antipodes.
CriticalSearch critical_points(const SpinState& state, const Tolerances& tol = {}, double lattice_offset = 0.5);

struct ClosestSC {
  Direction direction;
  double value = 0.0;     // H at the maximum
  double distance = 0.0;  // arccos sqrt(H)
  std::vector<Direction> ties;  // all maxima within the tie tolerance, including `direction`
  std::vector<std::string> warnings;
};

/// Nearest coherent state: the global maximum of H. Ties are broken by
/// the smallest (theta, phi).
ClosestSC closest_sc(const SpinState& state, const Tolerances& tol = {});
ClosestSC closest_sc(const CriticalSearch& search, const Tolerances& tol = {});

/// (s/2) |<-star, s-1|psi>|^2, the opening coefficient of the cone of H at
/// the antipode of a simple star. Throws DegenerateStar for a multiple star
/// and InvalidArgument when `star` is not a star of the state.
double cone_coefficient(const SpinState& state, const Direction& star, const Tolerances& tol = {});

struct HusimiSample {
  double theta;
  double phi;
  double value;
  double distance;
};
/// k x k grid, theta and phi both including their endpoints.
std::vector<HusimiSample> husimi_grid(const SpinState& state, int k);

}  // namespace majorana
