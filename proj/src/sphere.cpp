#include "majorana/sphere.hpp"

#include <algorithm>
#include <cmath>

namespace majorana {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::Parse: return "Parse";
    case ErrorCode::AllZeroPolynomial: return "AllZeroPolynomial";
    case ErrorCode::DegenerateBasis: return "DegenerateBasis";
    case ErrorCode::DegenerateConstellation: return "DegenerateConstellation";
    case ErrorCode::NotCritical: return "NotCritical";
    case ErrorCode::DegenerateStar: return "DegenerateStar";
    case ErrorCode::AntipodalTarget: return "AntipodalTarget";
    case ErrorCode::CutLocus: return "CutLocus";
    case ErrorCode::DegenerateTriangle: return "DegenerateTriangle";
    case ErrorCode::UndefinedPhase: return "UndefinedPhase";
    case ErrorCode::ZeroCombination: return "ZeroCombination";
    case ErrorCode::PoleAt: return "PoleAt";
  }
  return "Unknown";
}

bool Tolerances::set(const std::string& key, double value) {
  struct Entry {
    const char* name;
    double Tolerances::*field;
  };
  static constexpr Entry kEntries[] = {
      {"cluster", &Tolerances::cluster},
      {"infinity_snap", &Tolerances::infinity_snap},
      {"zero_polynomial", &Tolerances::zero_polynomial},
      {"normalization", &Tolerances::normalization},
      {"distinct", &Tolerances::distinct},
      {"ill_conditioned", &Tolerances::ill_conditioned},
      {"chart_radius", &Tolerances::chart_radius},
      {"dedup", &Tolerances::dedup},
      {"closest_tie", &Tolerances::closest_tie},
      {"criticality", &Tolerances::criticality},
      {"global_min", &Tolerances::global_min},
      {"marginal", &Tolerances::marginal},
      {"cut_locus", &Tolerances::cut_locus},
      {"rank", &Tolerances::rank},
      {"degenerate_side", &Tolerances::degenerate_side},
      {"orthogonal", &Tolerances::orthogonal},
      {"a_degeneracy", &Tolerances::a_degeneracy},
      {"sc_membership", &Tolerances::sc_membership},
      {"radicand", &Tolerances::radicand},
  };
  for (const auto& e : kEntries) {
    if (key == e.name) {
      this->*e.field = value;
      return true;
    }
  }
  return false;
}

Complex StereoPoint::value() const {
  if (infinite_) throw Error(ErrorCode::InvalidArgument, "value() of the point at infinity");
  return value_;
}

Direction Direction::from_vector(const Vec3& v) {
  const double r = v.norm();
  if (r == 0.0) throw Error(ErrorCode::InvalidArgument, "zero vector has no direction");
  const double z = std::clamp(v.z() / r, -1.0, 1.0);
  // atan2 keeps full precision near the poles, unlike acos(z).
  const double theta = std::atan2(std::hypot(v.x(), v.y()) / r, z);
  double phi = std::atan2(v.y(), v.x());
  if (phi < 0.0) phi += 2.0 * kPi;
  return {theta, phi};
}

Vec3 Direction::unit() const {
  const double st = std::sin(theta);
  return {st * std::cos(phi), st * std::sin(phi), std::cos(theta)};
}

Direction Direction::antipode() const {
  double p = phi + kPi;
  if (p >= 2.0 * kPi) p -= 2.0 * kPi;
  return {kPi - theta, p};
}

double chordal_distance(const Direction& a, const Direction& b) {
  return (a.unit() - b.unit()).norm();
}

double chordal_distance(const StereoPoint& a, const StereoPoint& b) {
  // 2|a - b| / sqrt((1+|a|^2)(1+|b|^2)), with the limit for infinity.
  if (a.is_infinite() && b.is_infinite()) return 0.0;
  if (a.is_infinite()) return 2.0 / std::sqrt(1.0 + std::norm(b.value()));
  if (b.is_infinite()) return 2.0 / std::sqrt(1.0 + std::norm(a.value()));
  const Complex za = a.value();
  const Complex zb = b.value();
  return 2.0 * std::abs(za - zb) / std::sqrt((1.0 + std::norm(za)) * (1.0 + std::norm(zb)));
}

double angular_distance(const Direction& a, const Direction& b) {
  const Vec3 u = a.unit();
  const Vec3 v = b.unit();
  return std::atan2(u.cross(v).norm(), u.dot(v));
}

std::vector<Direction> fibonacci_sphere(int count, double offset) {
  std::vector<Direction> out;
  out.reserve(count);
  const double golden = kPi * (3.0 - std::sqrt(5.0));
  for (int i = 0; i < count; ++i) {
    const double z = 1.0 - 2.0 * (i + offset) / count;
    double phi = std::fmod(golden * i, 2.0 * kPi);
    out.push_back({std::acos(std::clamp(z, -1.0, 1.0)), phi});
  }
  return out;
}

Direction stereo_to_sphere(const StereoPoint& zeta) {
  if (zeta.is_infinite()) return Direction::south();
  const Complex z = zeta.value();
  const double r = std::abs(z);
  double phi = r == 0.0 ? 0.0 : std::arg(z);
  if (phi < 0.0) phi += 2.0 * kPi;
  return {2.0 * std::atan(r), phi};
}

StereoPoint sphere_to_stereo(const Direction& n) {
  const double half = 0.5 * n.theta;
  const double c = std::cos(half);
  const double s = std::sin(half);
  // cos(theta/2) underflows to ~6e-17 at theta = pi in double; anything that
  // small is the south pole.
  if (std::abs(c) <= 1e-15 * std::abs(s)) return StereoPoint::infinity();
  return StereoPoint(std::polar(s / c, n.phi));
}

Rotation::Rotation(const Eigen::Matrix2cd& su2) : u_(su2) {}

Rotation Rotation::axis_angle(const Vec3& axis, double angle) {
  const double norm = axis.norm();
  if (norm == 0.0) throw Error(ErrorCode::InvalidArgument, "rotation axis has zero length");
  const Vec3 n = axis / norm;
  const double c = std::cos(0.5 * angle);
  const double s = std::sin(0.5 * angle);
  // exp(-i angle n.sigma / 2)
  Eigen::Matrix2cd u;
  u << Complex(c, -s * n.z()), Complex(-s * n.y(), -s * n.x()),
      Complex(s * n.y(), -s * n.x()), Complex(c, s * n.z());
  return Rotation(u);
}

Rotation Rotation::euler_zyz(double alpha, double beta, double gamma) {
  const Vec3 z = Vec3::UnitZ();
  const Vec3 y = Vec3::UnitY();
  return axis_angle(z, alpha) * axis_angle(y, beta) * axis_angle(z, gamma);
}

Rotation Rotation::to_direction(const Direction& n) {
  return euler_zyz(n.phi, n.theta, 0.0);
}

Eigen::Matrix3d Rotation::so3() const {
  // R_ij = (1/2) Tr(sigma_i U sigma_j U^dagger)
  Eigen::Matrix2cd sigma[3];
  sigma[0] << 0, 1, 1, 0;
  sigma[1] << 0, Complex(0, -1), Complex(0, 1), 0;
  sigma[2] << 1, 0, 0, -1;
  Eigen::Matrix3d r;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      r(i, j) = 0.5 * (sigma[i] * u_ * sigma[j] * u_.adjoint()).trace().real();
    }
  }
  return r;
}

Rotation Rotation::inverse() const { return Rotation(u_.adjoint()); }

Rotation Rotation::operator*(const Rotation& rhs) const { return Rotation(u_ * rhs.u_); }

Vec3 Rotation::apply(const Vec3& v) const { return so3() * v; }

Direction Rotation::apply(const Direction& n) const {
  return Direction::from_vector(apply(n.unit()));
}

StereoPoint Rotation::apply(const StereoPoint& zeta) const {
  // Spinor (1, zeta) maps to U (1, zeta); infinity is the spinor (0, 1).
  Complex top;
  Complex bottom;
  if (zeta.is_infinite()) {
    top = u_(0, 1);
    bottom = u_(1, 1);
  } else {
    top = u_(0, 0) + u_(0, 1) * zeta.value();
    bottom = u_(1, 0) + u_(1, 1) * zeta.value();
  }
  if (std::abs(top) <= 1e-15 * std::abs(bottom)) return StereoPoint::infinity();
  return StereoPoint(bottom / top);
}

}  // namespace majorana
