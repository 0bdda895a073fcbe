#pragma once

#include <utility>
#include <vector>

#include "majorana/sphere.hpp"

namespace majorana {

/// One distinct star with its multiplicity.
struct Star {
  StereoPoint point;
  int multiplicity = 1;

  Direction direction() const { return stereo_to_sphere(point); }
};

/// Multiset of N points on the sphere, stored as distinct stars with
/// multiplicities.
class Constellation {
 public:
  Constellation() = default;
  explicit Constellation(std::vector<Star> stars);

  /// Groups points closer than `tol` (chordal) into single stars.
  static Constellation cluster(const std::vector<StereoPoint>& points, double tol);
  static Constellation from_directions(const std::vector<Direction>& directions, double tol);
  /// N coincident stars at n.
  static Constellation coherent(const Direction& n, int two_spin);

  const std::vector<Star>& stars() const& noexcept { return stars_; }
  std::vector<Star> stars() && { return std::move(stars_); }
  int total_multiplicity() const noexcept;
  int distinct_count() const noexcept { return static_cast<int>(stars_.size()); }
  bool degenerate() const noexcept;

  /// Each star repeated by its multiplicity (N entries).
  std::vector<StereoPoint> points() const;
  std::vector<Direction> directions() const;

  Constellation rotated(const Rotation& r) const;
  /// Central inversion n -> -n of every star.
  Constellation antipodal() const;

 private:
  std::vector<Star> stars_;
};

/// Bottleneck distance between two multisets of equal size: the smallest d
/// such that a perfect matching pairs points within chordal distance d.
double multiset_distance(const std::vector<StereoPoint>& a, const std::vector<StereoPoint>& b);
double multiset_distance(const Constellation& a, const Constellation& b);

}  // namespace majorana
