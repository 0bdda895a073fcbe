#include "majorana/husimi.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "majorana/stellar.hpp"

namespace majorana {

namespace {

constexpr int kMaxNewtonIterations = 200;
constexpr int kMaxAscentIterations = 500;
constexpr double kMaxStep = 0.3;  // in the local stereographic chart

// Taylor data of F at the chart origin, where H(w) = |F(conj w)|^2 / (1+|w|^2)^N
// in the frame that puts `center` at the north pole.
struct LocalModel {
  Complex f0;
  Complex f1;
  Complex f2;
};

LocalModel local_model(const SpinState& state, const Direction& center) {
  const int n = state.two_spin();
  const Rotation r = Rotation::to_direction(center);
  LocalModel m;
  m.f0 = rotated_basis_state(r, n, 0).dot(state.coeffs());
  m.f1 = sqrt_binomial(n, 1) * rotated_basis_state(r, n, 1).dot(state.coeffs());
  m.f2 = n >= 2 ? sqrt_binomial(n, 2) * rotated_basis_state(r, n, 2).dot(state.coeffs()) : Complex(0.0, 0.0);
  return m;
}

Direction step_from(const Direction& center, const Complex& w) {
  const Direction local = stereo_to_sphere(StereoPoint(w));
  return Rotation::to_direction(center).apply(local);
}

bool canonical_less(const Direction& a, const Direction& b) {
  const auto ka = std::llround(a.theta * 1e9);
  const auto kb = std::llround(b.theta * 1e9);
  if (ka != kb) return ka < kb;
  return a.phi < b.phi;
}

int kind_rank(CriticalKind k) {
  switch (k) {
    case CriticalKind::LocalMax: return 0;
    case CriticalKind::Saddle: return 1;
    case CriticalKind::GlobalMin: return 2;
  }
  return 3;
}

enum class SeedOutcome { Critical, Minimum, Failed };

struct SeedResult {
  SeedOutcome outcome;
  Direction direction;
};

// Gradient and Hessian of H at the chart origin.
struct LocalDerivatives {
  Eigen::Vector2d grad;
  Eigen::Matrix2d hess;
  int signature;  // +1 positive definite, -1 negative definite, 0 otherwise
};

LocalDerivatives derivatives(const LocalModel& m, int n) {
  const Complex g = std::conj(m.f0) * m.f1;
  const Complex h = std::conj(m.f0) * m.f2;
  const double a = std::norm(m.f1) - n * std::norm(m.f0);
  LocalDerivatives d;
  d.grad = Eigen::Vector2d(2.0 * g.real(), 2.0 * g.imag());
  d.hess << 2.0 * (a + 2.0 * h.real()), 4.0 * h.imag(), 4.0 * h.imag(), 2.0 * (a - 2.0 * h.real());
  const double det = d.hess.determinant();
  d.signature = det > 0.0 ? (d.hess.trace() > 0.0 ? 1 : -1) : 0;
  return d;
}

// |grad H| in the chart centred at the point, up to a constant factor.
double gradient_norm(const LocalModel& m) { return std::abs(m.f0) * std::abs(m.f1); }

// Monotone ascent on H: Newton steps where H is concave, gradient steps
// elsewhere, halved until H rises. Once H is flat to rounding, steps that
// lower |grad H| are taken instead.
SeedResult ascend_from(const SpinState& state, Direction center) {
  const int n = state.two_spin();
  const double sqrt_n = std::sqrt(static_cast<double>(n));
  LocalModel m = local_model(state, center);
  for (int it = 0; it < kMaxAscentIterations; ++it) {
    if (std::abs(m.f1) / sqrt_n < 1e-14) return {SeedOutcome::Critical, center};
    const LocalDerivatives d = derivatives(m, n);
    Eigen::Vector2d step = d.signature < 0 ? Eigen::Vector2d(-d.hess.inverse() * d.grad) : d.grad;
    if (step.norm() > kMaxStep) step *= kMaxStep / step.norm();
    bool moved = false;
    for (int halving = 0; halving < 40 && !moved; ++halving, step *= 0.5) {
      const Direction trial = step_from(center, Complex(step(0), step(1)));
      const LocalModel mt = local_model(state, trial);
      const double rise = std::norm(mt.f0) - std::norm(m.f0);
      if (rise > 0.0 || (std::abs(rise) < 1e-15 && gradient_norm(mt) < gradient_norm(m))) {
        center = trial;
        m = mt;
        moved = true;
      }
    }
    if (!moved) break;
  }
  if (std::abs(m.f1) / sqrt_n < 1e-10) return {SeedOutcome::Critical, center};
  return {SeedOutcome::Failed, center};
}

// Trust-region Newton. A step must lower |grad H|, or move H the way the
// Hessian signature points without leaving that signature; steps that
// raise |grad H| shrink the region so that cycles die out. Seeds that
// stall fall back to plain ascent.
SeedResult newton_from(const SpinState& state, Direction center) {
  const int n = state.two_spin();
  const double sqrt_n = std::sqrt(static_cast<double>(n));
  LocalModel m = local_model(state, center);
  double radius = kMaxStep;
  for (int it = 0; it < kMaxNewtonIterations; ++it) {
    if (std::abs(m.f0) < 1e-13) return {SeedOutcome::Minimum, center};
    if (std::abs(m.f1) / sqrt_n < 1e-14) return {SeedOutcome::Critical, center};
    const LocalDerivatives d = derivatives(m, n);
    Eigen::Vector2d step = std::abs(d.hess.determinant()) > 1e-300 ? Eigen::Vector2d(-d.hess.inverse() * d.grad) : d.grad;
    const double len = step.norm();
    if (len < 1e-15) return {SeedOutcome::Critical, center};
    if (len > radius) step *= radius / len;
    const Direction trial = step_from(center, Complex(step(0), step(1)));
    const LocalModel mt = local_model(state, trial);
    const double gn = gradient_norm(m);
    const double gt = gradient_norm(mt);
    bool accept = gt < gn;
    if (!accept && d.signature != 0 && derivatives(mt, n).signature == d.signature) {
      accept = d.signature * (std::norm(mt.f0) - std::norm(m.f0)) < 0.0;
    }
    if (accept) {
      center = trial;
      m = mt;
      radius = gt < gn ? std::min(kMaxStep, 2.0 * radius) : 0.5 * radius;
    } else {
      radius *= 0.5;
      if (radius < 1e-12) break;
    }
  }
  return ascend_from(state, center);
}

}  // namespace

const char* to_string(CriticalKind kind) {
  switch (kind) {
    case CriticalKind::GlobalMin: return "GlobalMin";
    case CriticalKind::LocalMax: return "LocalMax";
    case CriticalKind::Saddle: return "Saddle";
  }
  return "Unknown";
}

double husimi(const SpinState& state, const Direction& n) { return std::norm(coherent_overlap(state, n)); }

RotatedExpansion rotated_expansion(const SpinState& state, const Direction& n0) {
  const CMatrix d = rotation_matrix(Rotation::to_direction(n0), state.two_spin());
  return {d.adjoint() * state.coeffs()};
}

CriticalPoint classify_critical(const SpinState& state, const Direction& n0, const Tolerances& tol) {
  const RotatedExpansion e = rotated_expansion(state, n0);
  CriticalPoint p;
  p.direction = n0;
  p.value = std::norm(e.coeffs(0));
  p.rho_s = e.rho(0);
  p.rho_s1 = e.rho(1);
  p.rho_s2 = e.rho(2);
  p.alpha_s = e.phase(0);
  p.alpha_s2 = e.phase(2);
  p.residual = p.rho_s1;
  if (p.rho_s < tol.global_min) {
    p.kind = CriticalKind::GlobalMin;
    return p;
  }
  if (p.rho_s1 > tol.criticality) {
    std::ostringstream msg;
    msg << "|<n0, s-1|psi>| = " << p.rho_s1 << " at theta = " << n0.theta << ", phi = " << n0.phi;
    throw Error(ErrorCode::NotCritical, msg.str());
  }
  const double s = state.spin();
  const double lhs = std::sqrt(s) * p.rho_s;
  const double rhs = std::sqrt(std::max(0.0, 2.0 * s - 1.0)) * p.rho_s2;
  p.marginal = std::abs(lhs - rhs) < tol.marginal;
  if (lhs > rhs) {
    p.kind = CriticalKind::LocalMax;
  } else {
    p.kind = CriticalKind::Saddle;
    double phi = 0.5 * (p.alpha_s2 - p.alpha_s);
    phi = std::fmod(phi, kPi);
    if (phi < 0.0) phi += kPi;
    p.saddle_phi = phi;
  }
  return p;
}

int CriticalSearch::count(CriticalKind kind) const {
  return static_cast<int>(std::count_if(points.begin(), points.end(), [&](const CriticalPoint& p) { return p.kind == kind; }));
}

int CriticalSearch::euler_characteristic() const {
  return count(CriticalKind::LocalMax) - count(CriticalKind::Saddle) + count(CriticalKind::GlobalMin);
}

CriticalSearch critical_points(const SpinState& state, const Tolerances& tol, double lattice_offset) {
  if (!state.is_normalized(tol.normalization)) throw Error(ErrorCode::InvalidArgument, "state is not normalized");
  CriticalSearch out;
  const int n = state.two_spin();
  const auto seeds = fibonacci_sphere(std::max(50, 40 * n), lattice_offset);
  out.seeds = static_cast<int>(seeds.size());

  std::vector<Direction> found;
  std::ostringstream failed;
  for (std::size_t i = 0; i < seeds.size(); ++i) {
    const SeedResult r = newton_from(state, seeds[i]);
    if (r.outcome == SeedOutcome::Critical) {
      found.push_back(r.direction);
    } else if (r.outcome == SeedOutcome::Failed) {
      if (out.failed_seeds > 0) failed << ", ";
      failed << i;
      ++out.failed_seeds;
    }
  }
  if (out.failed_seeds > 0) out.warnings.push_back("ConvergenceWarning: seeds " + failed.str() + " did not converge");

  // Minima straight from the constellation.
  std::vector<CriticalPoint> minima;
  const Constellation stars = constellation(state, tol);
  for (const auto& star : stars.stars()) {
    CriticalPoint p = classify_critical(state, star.direction().antipode(), tol);
    p.multiplicity = star.multiplicity;
    minima.push_back(p);
  }

  std::sort(found.begin(), found.end(), canonical_less);
  std::vector<CriticalPoint> others;
  for (const auto& d : found) {
    const bool near_min = std::any_of(minima.begin(), minima.end(), [&](const CriticalPoint& m) {
      return angular_distance(m.direction, d) < tol.dedup;
    });
    if (near_min) continue;
    CriticalPoint p;
    try {
      p = classify_critical(state, d, tol);
    } catch (const Error&) {
      continue;
    }
    if (p.kind == CriticalKind::GlobalMin) continue;
    auto dup = std::find_if(others.begin(), others.end(), [&](const CriticalPoint& q) {
      return angular_distance(q.direction, d) < tol.dedup;
    });
    if (dup == others.end()) {
      others.push_back(p);
    } else if (p.residual < dup->residual) {
      *dup = p;
    }
  }
  out.points = std::move(others);
  out.points.insert(out.points.end(), minima.begin(), minima.end());
  std::stable_sort(out.points.begin(), out.points.end(), [](const CriticalPoint& a, const CriticalPoint& b) {
    if (a.kind != b.kind) return kind_rank(a.kind) < kind_rank(b.kind);
    return canonical_less(a.direction, b.direction);
  });
  for (const auto& p : out.points) {
    if (p.marginal) {
      std::ostringstream msg;
      msg << "Marginal: degenerate Hessian at theta = " << p.direction.theta << ", phi = " << p.direction.phi;
      out.warnings.push_back(msg.str());
    }
  }
  return out;
}

ClosestSC closest_sc(const CriticalSearch& search, const Tolerances& tol) {
  double best = -1.0;
  for (const auto& p : search.points) {
    if (p.kind == CriticalKind::LocalMax) best = std::max(best, p.value);
  }
  if (best < 0.0) throw Error(ErrorCode::NotCritical, "no local maximum found");
  ClosestSC out;
  for (const auto& p : search.points) {
    if (p.kind == CriticalKind::LocalMax && best - p.value <= tol.closest_tie) out.ties.push_back(p.direction);
  }
  std::sort(out.ties.begin(), out.ties.end(), [](const Direction& a, const Direction& b) {
    if (a.theta != b.theta) return a.theta < b.theta;
    return a.phi < b.phi;
  });
  out.direction = out.ties.front();
  for (const auto& p : search.points) {
    if (p.kind == CriticalKind::LocalMax && angular_distance(p.direction, out.direction) == 0.0) out.value = p.value;
  }
  out.distance = std::acos(std::min(1.0, std::sqrt(out.value)));
  if (out.ties.size() > 1) {
    std::ostringstream msg;
    msg << "NonUniqueClosest: " << out.ties.size() << " maxima within " << tol.closest_tie << " of the largest";
    out.warnings.push_back(msg.str());
  }
  return out;
}

ClosestSC closest_sc(const SpinState& state, const Tolerances& tol) {
  const CriticalSearch search = critical_points(state, tol);
  ClosestSC out = closest_sc(search, tol);
  out.warnings.insert(out.warnings.begin(), search.warnings.begin(), search.warnings.end());
  return out;
}

double cone_coefficient(const SpinState& state, const Direction& star, const Tolerances& tol) {
  const Constellation c = constellation(state, tol);
  const Star* nearest = nullptr;
  double best = 4.0;
  for (const auto& s : c.stars()) {
    const double d = chordal_distance(s.direction(), star);
    if (d < best) {
      best = d;
      nearest = &s;
    }
  }
  if (nearest == nullptr || best > std::sqrt(tol.cluster)) {
    throw Error(ErrorCode::InvalidArgument, "direction is not a star of the state");
  }
  if (nearest->multiplicity > 1) throw Error(ErrorCode::DegenerateStar, "star has multiplicity > 1");
  const RotatedExpansion e = rotated_expansion(state, star.antipode());
  return 0.5 * state.spin() * std::norm(e.coeffs(1));
}

std::vector<HusimiSample> husimi_grid(const SpinState& state, int k) {
  if (k < 2) throw Error(ErrorCode::InvalidArgument, "grid needs at least 2 points per axis");
  std::vector<HusimiSample> out;
  out.reserve(static_cast<std::size_t>(k) * k);
  for (int i = 0; i < k; ++i) {
    const double theta = kPi * i / (k - 1);
    for (int j = 0; j < k; ++j) {
      const double phi = 2.0 * kPi * j / (k - 1);
      const double h = husimi(state, {theta, phi});
      out.push_back({theta, phi, h, std::acos(std::min(1.0, std::sqrt(h)))});
    }
  }
  return out;
}

}  // namespace majorana
