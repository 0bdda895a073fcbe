#pragma once

#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace majorana {

using Complex = std::complex<double>;
using CVector = Eigen::VectorXcd;
using CMatrix = Eigen::MatrixXcd;
using Vec3 = Eigen::Vector3d;

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr Complex kI{0.0, 1.0};

enum class ErrorCode {
  InvalidArgument,
  Parse,
  AllZeroPolynomial,
  DegenerateBasis,
  DegenerateConstellation,
  NotCritical,
  DegenerateStar,
  AntipodalTarget,
  CutLocus,
  DegenerateTriangle,
  UndefinedPhase,
  ZeroCombination,
  PoleAt,
};

const char* to_string(ErrorCode code);

/// Exception carrying one of the library error codes. Validation failures
/// (bad input) use InvalidArgument/Parse; everything else is numerical.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }
  bool is_validation() const noexcept {
    return code_ == ErrorCode::InvalidArgument || code_ == ErrorCode::Parse;
  }

 private:
  ErrorCode code_;
};

/// Every numerical threshold used by the library, with its default.
/// Functions take this by const reference so callers (and the CLI's
/// `--tol KEY=VAL`) can override individual entries.
struct Tolerances {
  // stellar-core
  double cluster = 1e-7;            // chordal radius for merging roots into one star
  double infinity_snap = 1e-12;     // chordal distance from the south pole at which a star becomes infinity
  double zero_polynomial = 1e-300;  // absolute floor for AllZeroPolynomial
  double normalization = 1e-8;      // | ||psi|| - 1 | accepted as normalized
  // sc-basis
  double distinct = 1e-7;           // chordal separation required between basis directions
  double ill_conditioned = 1e12;    // condition number that triggers a warning
  double chart_radius = 1e3;        // |gamma| beyond which the basis problem is pre-rotated
  // husimi
  double dedup = 1e-6;              // radians; critical points closer than this are merged
  double closest_tie = 1e-9;        // H difference treated as a tie
  double criticality = 1e-9;        // |<n0,s-1|psi>| accepted as critical
  double global_min = 1e-9;         // rho_s accepted as zero
  double marginal = 1e-9;           // |sqrt(s) rho_s - sqrt(2s-1) rho_{s-2}| flagged marginal
  // fs-geometry
  double cut_locus = 1e-6;          // omega >= pi/2 - cut_locus is on the cut locus
  double rank = 1e-6;               // relative singular value threshold
  double degenerate_side = 1e-9;    // triangle side treated as 0 or pi/2
  double orthogonal = 1e-12;        // |<a|b>| treated as zero
  // superposition
  double a_degeneracy = 1e-10;      // |A| threshold, scaled by max(1, max|zeta|^2)
  double sc_membership = 1e-5;      // clustering radius for SC membership scans
  double radicand = 1e-12;          // relative radicand treated as zero (shared star)

  /// Sets a field by name; returns false for an unknown key.
  bool set(const std::string& key, double value);
};

}  // namespace majorana
