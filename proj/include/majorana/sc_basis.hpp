#pragma once

#include <optional>
#include <string>
#include <vector>

#include "majorana/constellation.hpp"
#include "majorana/spin_state.hpp"

namespace majorana {

/// Coherent state |n> = |n^> (x) ... (x) |n^>, coefficients
/// sqrt(C(N,k)) cos^{N-k}(theta/2) (e^{i phi} sin(theta/2))^k.
SpinState sc_state(const Direction& n, int two_spin);

/// Antiunitary time reversal, the N-th tensor power of -i sigma_y K.
SpinState time_reversal(const SpinState& state);

/// Inverse of V_{ik} = gamma_k^i from the product formula: row k holds the
/// coefficients of prod_{l != k} (zeta - gamma_l) / (gamma_k - gamma_l).
/// Throws DegenerateBasis when two gammas are closer than `min_separation`
/// (chordal) and InvalidArgument for an infinite gamma.
CMatrix vandermonde_inverse(const std::vector<Complex>& gammas, double min_separation = 1e-7);
CMatrix vandermonde(const std::vector<Complex>& gammas);

/// N+1 distinct coherent directions with the cached Vandermonde inverse.
/// When a direction lies beyond the chart radius (|gamma| > R, including the
/// south pole itself) the whole problem is solved in a rotated frame.
class SCBasis {
 public:
  SCBasis(std::vector<Direction> directions, const Tolerances& tol = {});

  int two_spin() const noexcept { return static_cast<int>(directions_.size()) - 1; }
  const std::vector<Direction>& directions() const noexcept { return directions_; }
  std::vector<StereoPoint> gammas() const;
  const std::vector<SpinState>& states() const noexcept { return states_; }

  /// Frame rotation applied before solving (identity if none was needed).
  const Rotation& frame() const noexcept { return frame_; }
  bool rotated() const noexcept { return rotated_; }
  /// Gammas in the solving frame, all finite.
  const std::vector<Complex>& frame_gammas() const noexcept { return frame_gammas_; }
  /// Inverse of V in the solving frame.
  const CMatrix& vinv() const noexcept { return vinv_; }
  double condition_number() const noexcept { return condition_; }

  /// alpha' with sum_k alpha'_k |c_k> = coefficient vector v.
  CVector solve(const CVector& v) const;

 private:
  std::vector<Direction> directions_;
  std::vector<SpinState> states_;
  Rotation frame_;
  bool rotated_ = false;
  std::vector<Complex> frame_gammas_;
  CVector frame_phases_;  // <c'_k| D(R) |c_k>
  CMatrix vinv_;
  Eigen::PartialPivLU<CMatrix> lu_;
  double condition_ = 1.0;
};

struct ExpansionCoefficients {
  /// alpha'^k: |psi> = sum_k alpha'^k |c_k>.
  CVector alphas;
  /// Coefficients of the unnormalized symmetric product of the stars,
  /// i.e. alpha'^k / (A e^{i chi}) where |psi> = A e^{i chi} |n_1 ... n_N>.
  CVector product_alphas;
  /// alpha~^k: sum_k alpha~^k (zeta - gamma_k)^N = prod_j (zeta - zeta_j);
  /// absent when a star or a basis direction is at infinity.
  std::optional<CVector> tilde_alphas;
  double residual = 0.0;
  double condition_number = 1.0;
  std::vector<std::string> warnings;
};

ExpansionCoefficients expand_in_sc_basis(const SpinState& state, const SCBasis& basis, const Tolerances& tol = {});

/// |c^i> = |-c_0, ..., (omit -c_i), ..., -c_N> / <c_i| same >.
std::vector<SpinState> dual_basis(const SCBasis& basis);
/// <c^i|psi> for every i.
CVector dual_expansion(const SpinState& state, const std::vector<SpinState>& dual);

}  // namespace majorana
