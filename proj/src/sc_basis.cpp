#include "majorana/sc_basis.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include <Eigen/SVD>

#include "majorana/polynomial.hpp"
#include "majorana/stellar.hpp"

namespace majorana {

namespace {

constexpr int kAnalyticInverseMaxN = 8;
constexpr int kFrameCandidates = 256;

bool beyond_chart(const Direction& n, double chart_radius) {
  const StereoPoint g = sphere_to_stereo(n);
  return g.is_infinite() || std::abs(g.value()) > chart_radius;
}

// Rotation sending the lattice direction farthest from every basis direction
// to the south pole.
Rotation clearing_rotation(const std::vector<Direction>& directions) {
  Direction best;
  double best_gap = -1.0;
  for (const auto& p : fibonacci_sphere(kFrameCandidates)) {
    double gap = 4.0;
    for (const auto& d : directions) gap = std::min(gap, chordal_distance(p, d));
    if (gap > best_gap) {
      best_gap = gap;
      best = p;
    }
  }
  return Rotation::axis_angle(Vec3::UnitY(), kPi) * Rotation::to_direction(best).inverse();
}

}  // namespace

SpinState sc_state(const Direction& n, int two_spin) {
  const double c = std::cos(0.5 * n.theta);
  const Complex s = std::polar(std::sin(0.5 * n.theta), n.phi);
  CVector v(two_spin + 1);
  for (int k = 0; k <= two_spin; ++k) v(k) = sqrt_binomial(two_spin, k) * std::pow(c, two_spin - k) * std::pow(s, k);
  return SpinState(two_spin, v);
}

SpinState time_reversal(const SpinState& state) {
  const int n = state.two_spin();
  CVector v(n + 1);
  for (int j = 0; j <= n; ++j) {
    const double sign = ((n - j) % 2 == 0) ? 1.0 : -1.0;
    v(j) = sign * std::conj(state[n - j]);
  }
  return SpinState(n, v);
}

CMatrix vandermonde(const std::vector<Complex>& gammas) {
  const int n = static_cast<int>(gammas.size());
  CMatrix v(n, n);
  for (int k = 0; k < n; ++k) {
    Complex p = 1.0;
    for (int i = 0; i < n; ++i) {
      v(i, k) = p;
      p *= gammas[k];
    }
  }
  return v;
}

CMatrix vandermonde_inverse(const std::vector<Complex>& gammas, double min_separation) {
  const int n = static_cast<int>(gammas.size());
  for (int i = 0; i < n; ++i) {
    if (!std::isfinite(gammas[i].real()) || !std::isfinite(gammas[i].imag())) {
      throw Error(ErrorCode::InvalidArgument, "Vandermonde inverse needs finite gammas");
    }
    for (int j = i + 1; j < n; ++j) {
      if (chordal_distance(StereoPoint(gammas[i]), StereoPoint(gammas[j])) <= min_separation) {
        std::ostringstream msg;
        msg << "gamma_" << i << " and gamma_" << j << " coincide";
        throw Error(ErrorCode::DegenerateBasis, msg.str());
      }
    }
  }
  CMatrix inv(n, n);
  for (int k = 0; k < n; ++k) {
    std::vector<Complex> others;
    Complex denom = 1.0;
    for (int l = 0; l < n; ++l) {
      if (l == k) continue;
      others.push_back(gammas[l]);
      denom *= gammas[k] - gammas[l];
    }
    inv.row(k) = MajoranaPolynomial::from_roots(others).coeffs().transpose() / denom;
  }
  return inv;
}

SCBasis::SCBasis(std::vector<Direction> directions, const Tolerances& tol) : directions_(std::move(directions)) {
  const int n = two_spin();
  if (n < 1 || n > kMaxTwoSpin) throw Error(ErrorCode::InvalidArgument, "an SC basis needs N + 1 directions, 1 <= N <= 20");
  for (int i = 0; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      if (chordal_distance(directions_[i], directions_[j]) <= tol.distinct) {
        std::ostringstream msg;
        msg << "basis directions " << i << " and " << j << " coincide";
        throw Error(ErrorCode::DegenerateBasis, msg.str());
      }
    }
  }
  states_.reserve(directions_.size());
  for (const auto& d : directions_) states_.push_back(sc_state(d, n));

  rotated_ = std::any_of(directions_.begin(), directions_.end(),
                         [&](const Direction& d) { return beyond_chart(d, tol.chart_radius); });
  if (rotated_) frame_ = clearing_rotation(directions_);
  const CMatrix d = rotation_matrix(frame_, n);
  frame_phases_ = CVector::Ones(n + 1);
  for (int k = 0; k <= n; ++k) {
    const Direction rotated = frame_.apply(directions_[k]);
    const StereoPoint g = sphere_to_stereo(rotated);
    if (g.is_infinite()) throw Error(ErrorCode::DegenerateBasis, "basis direction left at the south pole");
    frame_gammas_.push_back(g.value());
    if (rotated_) frame_phases_(k) = sc_state(rotated, n).coeffs().dot(d * states_[k].coeffs());
  }

  const CMatrix v = vandermonde(frame_gammas_);
  Eigen::JacobiSVD<CMatrix> svd(v);
  const auto& sv = svd.singularValues();
  condition_ = sv(sv.size() - 1) > 0.0 ? sv(0) / sv(sv.size() - 1) : std::numeric_limits<double>::infinity();
  if (n <= kAnalyticInverseMaxN) {
    vinv_ = vandermonde_inverse(frame_gammas_, tol.distinct);
  } else {
    lu_.compute(v);
    vinv_ = lu_.inverse();
  }
}

std::vector<StereoPoint> SCBasis::gammas() const {
  std::vector<StereoPoint> out;
  out.reserve(directions_.size());
  for (const auto& d : directions_) out.push_back(sphere_to_stereo(d));
  return out;
}

CVector SCBasis::solve(const CVector& v) const {
  const int n = two_spin();
  const CVector w = rotated_ ? CVector(rotation_matrix(frame_, n) * v) : v;
  CVector rhs(n + 1);
  for (int i = 0; i <= n; ++i) rhs(i) = w(i) / sqrt_binomial(n, i);
  const CVector beta = (n <= kAnalyticInverseMaxN) ? CVector(vinv_ * rhs) : CVector(lu_.solve(rhs));
  CVector alpha(n + 1);
  for (int k = 0; k <= n; ++k) {
    alpha(k) = beta(k) * std::pow(1.0 + std::norm(frame_gammas_[k]), 0.5 * n) / frame_phases_(k);
  }
  return alpha;
}

ExpansionCoefficients expand_in_sc_basis(const SpinState& state, const SCBasis& basis, const Tolerances& tol) {
  if (state.two_spin() != basis.two_spin()) throw Error(ErrorCode::InvalidArgument, "state and basis have different spin");
  if (!state.is_normalized(tol.normalization)) throw Error(ErrorCode::InvalidArgument, "state is not normalized");
  const int n = state.two_spin();
  ExpansionCoefficients out;
  out.alphas = basis.solve(state.coeffs());
  CVector rebuilt = CVector::Zero(n + 1);
  for (int k = 0; k <= n; ++k) rebuilt += out.alphas(k) * basis.states()[k].coeffs();
  out.residual = (rebuilt - state.coeffs()).norm();
  out.condition_number = basis.condition_number();
  if (out.condition_number > tol.ill_conditioned) {
    std::ostringstream msg;
    msg << "IllConditioned: Vandermonde condition number " << out.condition_number;
    out.warnings.push_back(msg.str());
  }

  const Constellation stars = constellation(state, tol);
  out.product_alphas = basis.solve(symmetric_product(stars.directions()).coeffs());

  const auto gammas = basis.gammas();
  const auto star_points = stars.points();
  const bool finite = std::none_of(gammas.begin(), gammas.end(), [](const StereoPoint& g) { return g.is_infinite(); }) &&
                      std::none_of(star_points.begin(), star_points.end(), [](const StereoPoint& z) { return z.is_infinite(); });
  if (finite) {
    double star_factor = 1.0;
    for (const auto& z : star_points) star_factor *= std::sqrt(1.0 + std::norm(z.value()));
    CVector tilde(n + 1);
    for (int k = 0; k <= n; ++k) {
      tilde(k) = out.product_alphas(k) * std::pow(1.0 + std::norm(gammas[k].value()), -0.5 * n) * star_factor;
    }
    out.tilde_alphas = tilde;
  }
  return out;
}

std::vector<SpinState> dual_basis(const SCBasis& basis) {
  const int n = basis.two_spin();
  std::vector<SpinState> dual;
  dual.reserve(n + 1);
  for (int i = 0; i <= n; ++i) {
    std::vector<Direction> antipodes;
    for (int j = 0; j <= n; ++j) {
      if (j != i) antipodes.push_back(basis.directions()[j].antipode());
    }
    const SpinState x = symmetric_product(antipodes).normalized();
    const Complex denom = inner(basis.states()[i], x);
    dual.emplace_back(n, x.coeffs() / denom);
  }
  return dual;
}

CVector dual_expansion(const SpinState& state, const std::vector<SpinState>& dual) {
  CVector out(static_cast<Eigen::Index>(dual.size()));
  for (std::size_t i = 0; i < dual.size(); ++i) out(static_cast<Eigen::Index>(i)) = inner(dual[i], state);
  return out;
}

}  // namespace majorana
