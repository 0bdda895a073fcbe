#pragma once

#include <string>

#include "majorana/sphere.hpp"
#include "majorana/types.hpp"

namespace majorana {

/// Largest supported N = 2s.
inline constexpr int kMaxTwoSpin = 20;

/// Pure spin-s state in the S_z eigenbasis. Index 0 is m = s, index N is
/// m = -s. Normalization is not enforced here (dual-basis vectors are
/// deliberately unnormalized); operations that need it check it.
class SpinState {
 public:
  SpinState(int two_spin, CVector coeffs);

  /// |s, s - index>.
  static SpinState basis(int two_spin, int index);

  int two_spin() const noexcept { return two_spin_; }
  double spin() const noexcept { return 0.5 * two_spin_; }
  int dim() const noexcept { return two_spin_ + 1; }
  bool half_integer() const noexcept { return two_spin_ % 2 == 1; }

  const CVector& coeffs() const noexcept { return coeffs_; }
  Complex operator[](int index) const { return coeffs_(index); }

  double norm() const { return coeffs_.norm(); }
  bool is_normalized(double tol) const;
  SpinState normalized() const;
  /// Multiplies by a phase so that the first coefficient (scanning from
  /// m = s) with modulus above `threshold` is real and positive.
  SpinState phase_fixed(double threshold = 1e-12) const;

  /// "3/2", "1", ...
  std::string spin_label() const;

 private:
  int two_spin_;
  CVector coeffs_;
};

/// <a|b>.
Complex inner(const SpinState& a, const SpinState& b);
/// |<a|b>| / (|a||b|).
double fidelity(const SpinState& a, const SpinState& b);

/// Parses "3/2", "2", "1.5" into N = 2s. Throws Parse on anything else.
int parse_two_spin(const std::string& text);

/// sqrt(C(n, k)) for n <= kMaxTwoSpin.
double sqrt_binomial(int n, int k);
double binomial(int n, int k);

/// Spin matrices (S_x, S_y, S_z) in the m = s ... -s ordering.
struct SpinMatrices {
  CMatrix x;
  CMatrix y;
  CMatrix z;
};
SpinMatrices spin_matrices(int two_spin);

/// Matrix of the spin-s irreducible representation D(R), built from the
/// symmetric tensor power of the SU(2) matrix.
CMatrix rotation_matrix(const Rotation& r, int two_spin);
/// Column `index` of D(R): the rotated basis state D(R)|s, s - index>.
CVector rotated_basis_state(const Rotation& r, int two_spin, int index);

}  // namespace majorana
