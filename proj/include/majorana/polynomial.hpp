#pragma once

#include <vector>

#include "majorana/constellation.hpp"
#include "majorana/spin_state.hpp"
#include "majorana/types.hpp"

namespace majorana {

/// Polynomial in zeta with coefficients of zeta^0 ... zeta^N. The nominal
/// degree N is kept even when leading coefficients vanish; the missing
/// degree counts as roots at infinity.
class MajoranaPolynomial {
 public:
  explicit MajoranaPolynomial(CVector coeffs);

  int nominal_degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  const CVector& coeffs() const noexcept { return coeffs_; }
  Complex operator[](int power) const { return coeffs_(power); }

  Complex operator()(Complex zeta) const;
  Complex derivative(Complex zeta) const;
  /// sum_j |a_j| |zeta|^j, the natural scale for residuals at zeta.
  double scale_at(Complex zeta) const;

  /// prod_j (zeta - roots_j), nominal degree = roots.size().
  static MajoranaPolynomial from_roots(const std::vector<Complex>& roots);

 private:
  CVector coeffs_;
};

/// Coefficient of zeta^{N-i} is (-1)^i sqrt(C(N,i)) c_i, where i = s - m.
MajoranaPolynomial majorana_polynomial(const SpinState& state);
/// Inverse of majorana_polynomial; the result is not normalized.
SpinState state_from_polynomial(const MajoranaPolynomial& p);

/// N roots counting multiplicity, returned as clustered stars ordered by
/// (theta, phi). Throws AllZeroPolynomial.
Constellation polynomial_roots(const MajoranaPolynomial& p, const Tolerances& tol = {});
/// Unclustered roots (N entries, infinity included), after Newton polish.
std::vector<StereoPoint> raw_roots(const MajoranaPolynomial& p, const Tolerances& tol = {});

/// Taylor coefficients b_k with p(z0 + h) = sum_k b_k h^k.
CVector taylor_shift(const CVector& coeffs, Complex z0);

}  // namespace majorana
