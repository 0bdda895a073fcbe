#include "majorana/stellar.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace majorana {

Eigen::Vector2cd spinor(const Direction& n) {
  return {std::cos(0.5 * n.theta), std::polar(std::sin(0.5 * n.theta), n.phi)};
}

Constellation constellation(const SpinState& state, const Tolerances& tol) {
  return polynomial_roots(majorana_polynomial(state), tol);
}

SpinState symmetric_product(const std::vector<Direction>& stars) {
  if (stars.empty()) throw Error(ErrorCode::InvalidArgument, "constellation is empty");
  const int n = static_cast<int>(stars.size());
  // prod_j (cos(theta_j/2) zeta - e^{i phi_j} sin(theta_j/2)); a star at the
  // south pole contributes a constant factor and lowers the degree.
  CVector a = CVector::Zero(n + 1);
  a(0) = 1.0;
  for (int d = 0; d < n; ++d) {
    const Eigen::Vector2cd u = spinor(stars[d]);
    for (int j = d + 1; j >= 1; --j) a(j) = a(j - 1) * u(0) - a(j) * u(1);
    a(0) *= -u(1);
  }
  return state_from_polynomial(MajoranaPolynomial(a));
}

SpinState state_from_constellation(const Constellation& c) {
  return symmetric_product(c.directions()).normalized().phase_fixed();
}

SpinState rotate_state(const SpinState& state, const Rotation& r) {
  return SpinState(state.two_spin(), rotation_matrix(r, state.two_spin()) * state.coeffs());
}

Complex permanent_by_permutations(const CMatrix& m) {
  const int n = static_cast<int>(m.rows());
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  Complex total = 0.0;
  do {
    Complex term = 1.0;
    for (int i = 0; i < n; ++i) term *= m(i, perm[i]);
    total += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

Complex permanent_ryser(const CMatrix& m) {
  // Gray-code Ryser: perm = (-1)^n sum_S (-1)^{|S|} prod_i sum_{j in S} m_ij.
  const int n = static_cast<int>(m.rows());
  CVector row_sums = CVector::Zero(n);
  Complex total = 0.0;
  unsigned long gray = 0;
  const unsigned long count = 1UL << n;
  for (unsigned long k = 1; k < count; ++k) {
    const unsigned long next = k ^ (k >> 1);
    const unsigned long changed = next ^ gray;
    const int col = __builtin_ctzl(changed);
    if (next & changed) {
      row_sums += m.col(col);
    } else {
      row_sums -= m.col(col);
    }
    gray = next;
    Complex prod = 1.0;
    for (int i = 0; i < n; ++i) prod *= row_sums(i);
    const int bits = __builtin_popcountl(gray);
    total += (bits % 2 == 0) ? prod : -prod;
  }
  return (n % 2 == 0) ? total : -total;
}

Complex permanent(const CMatrix& m) {
  if (m.rows() != m.cols()) throw Error(ErrorCode::InvalidArgument, "permanent of a non-square matrix");
  if (m.rows() == 0) return 1.0;
  if (m.rows() > kMaxTwoSpin) throw Error(ErrorCode::InvalidArgument, "permanent limited to 20x20");
  return m.rows() <= 8 ? permanent_by_permutations(m) : permanent_ryser(m);
}

double symmetrized_norm(const Constellation& c) {
  const std::vector<Direction> stars = c.directions();
  const int n = static_cast<int>(stars.size());
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "constellation is empty");
  std::vector<Eigen::Vector2cd> spinors;
  spinors.reserve(n);
  for (const auto& d : stars) spinors.push_back(spinor(d));
  CMatrix gram(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) gram(i, j) = spinors[i].dot(spinors[j]);
  }
  double factorial = 1.0;
  for (int k = 2; k <= n; ++k) factorial *= k;
  const double p = permanent(gram).real();
  return std::sqrt(factorial / p);
}

Complex coherent_overlap(const SpinState& state, const Direction& n) {
  // sum_j a_j X^j Y^{N-j}, X = cos(theta/2), Y = -e^{-i phi} sin(theta/2)
  const MajoranaPolynomial p = majorana_polynomial(state);
  const int big_n = state.two_spin();
  const Complex x = std::cos(0.5 * n.theta);
  const Complex y = -std::polar(std::sin(0.5 * n.theta), -n.phi);
  Complex acc = 0.0;
  Complex xp = 1.0;
  for (int j = 0; j <= big_n; ++j) {
    acc += p[j] * xp * std::pow(y, big_n - j);
    xp *= x;
  }
  return acc;
}

Complex coherent_overlap_by_rotation(const SpinState& state, const Direction& n) {
  // |n> = e^{i N phi / 2} D(R_z(phi) R_y(theta)) |z>
  const CVector column = rotated_basis_state(Rotation::to_direction(n), state.two_spin(), 0);
  const Complex phase = std::polar(1.0, -0.5 * state.two_spin() * n.phi);
  return phase * column.dot(state.coeffs());
}

}  // namespace majorana
