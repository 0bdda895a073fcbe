#include "majorana/constellation.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>

namespace majorana {

Constellation::Constellation(std::vector<Star> stars) : stars_(std::move(stars)) {
  for (const auto& s : stars_) {
    if (s.multiplicity < 1) throw Error(ErrorCode::InvalidArgument, "star multiplicity must be >= 1");
  }
}

Constellation Constellation::cluster(const std::vector<StereoPoint>& points, double tol) {
  // Single-link grouping; clusters are small so O(n^2) is fine.
  const int n = static_cast<int>(points.size());
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int i) { return parent[i] == i ? i : parent[i] = find(parent[i]); };
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (chordal_distance(points[i], points[j]) <= tol) parent[find(i)] = find(j);
    }
  }
  std::vector<Star> stars;
  std::vector<int> root_of_star;
  for (int i = 0; i < n; ++i) {
    const int r = find(i);
    auto it = std::find(root_of_star.begin(), root_of_star.end(), r);
    if (it == root_of_star.end()) {
      root_of_star.push_back(r);
      Vec3 sum = Vec3::Zero();
      int count = 0;
      bool any_infinite = false;
      for (int j = 0; j < n; ++j) {
        if (find(j) != r) continue;
        sum += stereo_to_sphere(points[j]).unit();
        any_infinite = any_infinite || points[j].is_infinite();
        ++count;
      }
      const Direction centre = Direction::from_vector(sum);
      StereoPoint p = (count == 1) ? points[i] : sphere_to_stereo(centre);
      if (any_infinite && chordal_distance(p, StereoPoint::infinity()) <= tol) p = StereoPoint::infinity();
      stars.push_back({p, count});
    }
  }
  return Constellation(std::move(stars));
}

Constellation Constellation::from_directions(const std::vector<Direction>& directions, double tol) {
  std::vector<StereoPoint> pts;
  pts.reserve(directions.size());
  for (const auto& d : directions) pts.push_back(sphere_to_stereo(d));
  return cluster(pts, tol);
}

Constellation Constellation::coherent(const Direction& n, int two_spin) {
  return Constellation({Star{sphere_to_stereo(n), two_spin}});
}

int Constellation::total_multiplicity() const noexcept {
  int total = 0;
  for (const auto& s : stars_) total += s.multiplicity;
  return total;
}

bool Constellation::degenerate() const noexcept {
  return std::any_of(stars_.begin(), stars_.end(), [](const Star& s) { return s.multiplicity > 1; });
}

std::vector<StereoPoint> Constellation::points() const {
  std::vector<StereoPoint> out;
  for (const auto& s : stars_) out.insert(out.end(), s.multiplicity, s.point);
  return out;
}

std::vector<Direction> Constellation::directions() const {
  std::vector<Direction> out;
  for (const auto& s : stars_) out.insert(out.end(), s.multiplicity, s.direction());
  return out;
}

Constellation Constellation::rotated(const Rotation& r) const {
  std::vector<Star> out;
  out.reserve(stars_.size());
  for (const auto& s : stars_) out.push_back({r.apply(s.point), s.multiplicity});
  return Constellation(std::move(out));
}

Constellation Constellation::antipodal() const {
  std::vector<Star> out;
  out.reserve(stars_.size());
  for (const auto& s : stars_) {
    // -n has stereographic image -1/conj(zeta).
    StereoPoint p;
    if (s.point.is_infinite()) {
      p = StereoPoint(Complex(0.0, 0.0));
    } else if (s.point.value() == Complex(0.0, 0.0)) {
      p = StereoPoint::infinity();
    } else {
      p = StereoPoint(-1.0 / std::conj(s.point.value()));
    }
    out.push_back({p, s.multiplicity});
  }
  return Constellation(std::move(out));
}

namespace {

// Kuhn's augmenting-path matching on the bipartite graph {d(i,j) <= limit}.
bool perfect_matching(const std::vector<std::vector<double>>& dist, double limit) {
  const int n = static_cast<int>(dist.size());
  std::vector<int> match(n, -1);
  for (int i = 0; i < n; ++i) {
    std::vector<char> seen(n, 0);
    std::function<bool(int)> augment = [&](int u) {
      for (int v = 0; v < n; ++v) {
        if (dist[u][v] > limit || seen[v]) continue;
        seen[v] = 1;
        if (match[v] < 0 || augment(match[v])) {
          match[v] = u;
          return true;
        }
      }
      return false;
    };
    if (!augment(i)) return false;
  }
  return true;
}

}  // namespace

double multiset_distance(const std::vector<StereoPoint>& a, const std::vector<StereoPoint>& b) {
  if (a.size() != b.size()) throw Error(ErrorCode::InvalidArgument, "multisets of different size");
  const int n = static_cast<int>(a.size());
  if (n == 0) return 0.0;
  std::vector<std::vector<double>> dist(n, std::vector<double>(n));
  std::vector<double> candidates;
  candidates.reserve(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      dist[i][j] = chordal_distance(a[i], b[j]);
      candidates.push_back(dist[i][j]);
    }
  }
  std::sort(candidates.begin(), candidates.end());
  std::size_t lo = 0;
  std::size_t hi = candidates.size() - 1;
  while (lo < hi) {
    const std::size_t mid = (lo + hi) / 2;
    if (perfect_matching(dist, candidates[mid])) {
      hi = mid;
    } else {
      lo = mid + 1;
    }
  }
  return candidates[lo];
}

double multiset_distance(const Constellation& a, const Constellation& b) {
  return multiset_distance(a.points(), b.points());
}

}  // namespace majorana
