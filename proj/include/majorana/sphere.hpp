#pragma once

#include <vector>

#include <Eigen/Dense>

#include "majorana/types.hpp"

namespace majorana {

/// A point of the extended complex plane. Infinity is a regular value and
/// corresponds to the south pole under stereographic projection.
class StereoPoint {
 public:
  StereoPoint() = default;
  StereoPoint(Complex value) : value_(value) {}  // NOLINT(implicit)

  static StereoPoint infinity() {
    StereoPoint p;
    p.infinite_ = true;
    return p;
  }

  bool is_infinite() const noexcept { return infinite_; }
  /// Finite value; throws for infinity.
  Complex value() const;

 private:
  Complex value_{0.0, 0.0};
  bool infinite_ = false;
};

/// Direction on the unit sphere in polar/azimuthal form. The azimuth is kept
/// even at the poles because it fixes the phase of the south-pole SC state.
struct Direction {
  double theta = 0.0;
  double phi = 0.0;

  static Direction from_vector(const Vec3& v);
  static Direction north() { return {0.0, 0.0}; }
  static Direction south() { return {kPi, 0.0}; }

  Vec3 unit() const;
  Direction antipode() const;
};

/// Chordal distance |n1 - n2| between two directions, in [0, 2].
double chordal_distance(const Direction& a, const Direction& b);
double chordal_distance(const StereoPoint& a, const StereoPoint& b);
/// Great-circle angle between two directions.
double angular_distance(const Direction& a, const Direction& b);

/// Fibonacci lattice of `count` nearly uniform directions; `offset` in
/// (0, 1) shifts the lattice along the polar axis.
std::vector<Direction> fibonacci_sphere(int count, double offset = 0.5);

/// zeta = tan(theta/2) e^{i phi}; projection from the south pole.
Direction stereo_to_sphere(const StereoPoint& zeta);
StereoPoint sphere_to_stereo(const Direction& n);

/// A proper rotation stored as an SU(2) matrix [[a, b], [-conj(b), conj(a)]].
/// The sign ambiguity of the lift is irrelevant for integer spin and only
/// changes a global phase for half-integer spin.
class Rotation {
 public:
  Rotation() : u_(Eigen::Matrix2cd::Identity()) {}
  explicit Rotation(const Eigen::Matrix2cd& su2);

  static Rotation identity() { return Rotation(); }
  static Rotation axis_angle(const Vec3& axis, double angle);
  /// R_z(alpha) R_y(beta) R_z(gamma).
  static Rotation euler_zyz(double alpha, double beta, double gamma);
  /// R_z(phi) R_y(theta): carries the north pole to n.
  static Rotation to_direction(const Direction& n);

  const Eigen::Matrix2cd& su2() const noexcept { return u_; }
  Eigen::Matrix3d so3() const;

  Rotation inverse() const;
  Rotation operator*(const Rotation& rhs) const;

  Vec3 apply(const Vec3& v) const;
  Direction apply(const Direction& n) const;
  /// Moebius action zeta -> (u10 + u11 zeta) / (u00 + u01 zeta).
  StereoPoint apply(const StereoPoint& zeta) const;

 private:
  Eigen::Matrix2cd u_;
};

}  // namespace majorana
