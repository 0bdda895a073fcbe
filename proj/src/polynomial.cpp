#include "majorana/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>
#include <utility>

#include <Eigen/Eigenvalues>

namespace majorana {

namespace {

// Relative coefficient noise assumed when deciding whether a tight group of
// roots is one multiple root smeared out by rounding.
constexpr double kCoefficientNoise = 64.0 * std::numeric_limits<double>::epsilon();
constexpr double kJitterFactor = 4.0;
constexpr double kMultiplicityNoise = 1e1 * kCoefficientNoise;

Complex horner(const CVector& a, Complex z) {
  Complex acc = 0.0;
  for (Eigen::Index j = a.size() - 1; j >= 0; --j) acc = acc * z + a(j);
  return acc;
}

Complex horner_derivative(const CVector& a, Complex z) {
  Complex acc = 0.0;
  for (Eigen::Index j = a.size() - 1; j >= 1; --j) acc = acc * z + static_cast<double>(j) * a(j);
  return acc;
}

double abs_horner(const CVector& a, double r) {
  double acc = 0.0;
  for (Eigen::Index j = a.size() - 1; j >= 0; --j) acc = acc * r + std::abs(a(j));
  return acc;
}

CVector reversed(const CVector& a) { return a.reverse(); }

// Parlett-Reinsch balancing (radix 2) of a matrix with no isolated
// eigenvalues; a similarity transform, so the spectrum is unchanged.
void balance(CMatrix& m) {
  constexpr double radix = 2.0;
  constexpr double sqrdx = radix * radix;
  const Eigen::Index n = m.rows();
  bool done = false;
  while (!done) {
    done = true;
    for (Eigen::Index i = 0; i < n; ++i) {
      double c = 0.0;
      double r = 0.0;
      for (Eigen::Index j = 0; j < n; ++j) {
        if (j == i) continue;
        c += std::abs(m(j, i));
        r += std::abs(m(i, j));
      }
      if (c == 0.0 || r == 0.0) continue;
      double g = r / radix;
      double f = 1.0;
      const double s = c + r;
      while (c < g) {
        f *= radix;
        c *= sqrdx;
      }
      g = r * radix;
      while (c > g) {
        f /= radix;
        c /= sqrdx;
      }
      if ((c + r) / f < 0.95 * s) {
        done = false;
        m.row(i) /= f;
        m.col(i) *= f;
      }
    }
  }
}

// Newton steps in whichever chart (zeta or 1/zeta) keeps |z| <= 1; a step is
// kept only if it lowers the residual.
StereoPoint polish(const CVector& a, const CVector& a_rev, Complex root) {
  const bool inverted = std::abs(root) > 1.0;
  const CVector& c = inverted ? a_rev : a;
  Complex z = inverted ? 1.0 / root : root;
  double res = std::abs(horner(c, z));
  for (int it = 0; it < 8 && res > 0.0; ++it) {
    const Complex d = horner_derivative(c, z);
    if (d == Complex(0.0, 0.0)) break;
    const Complex next = z - horner(c, z) / d;
    const double next_res = std::abs(horner(c, next));
    if (!(next_res < res)) break;
    z = next;
    res = next_res;
  }
  if (inverted) {
    if (z == Complex(0.0, 0.0)) return StereoPoint::infinity();
    return StereoPoint(1.0 / z);
  }
  return StereoPoint(z);
}

struct Cluster {
  std::vector<Vec3> members;
  int infinite = 0;  // members that are exactly the point at infinity
  StereoPoint center;

  int size() const { return static_cast<int>(members.size()); }
};

class RootClusterer {
 public:
  RootClusterer(const CVector& a, double tol) : a_(a), a_rev_(reversed(a)), tol_(tol) {}

  std::vector<Star> run(const std::vector<StereoPoint>& finite, int infinite_count) {
    std::vector<Cluster> clusters;
    for (const auto& p : finite) {
      Cluster c;
      c.members.push_back(stereo_to_sphere(p).unit());
      c.center = p;
      clusters.push_back(std::move(c));
    }
    if (infinite_count > 0) {
      Cluster c;
      c.members.assign(infinite_count, Vec3(0.0, 0.0, -1.0));
      c.infinite = infinite_count;
      c.center = StereoPoint::infinity();
      clusters.push_back(std::move(c));
    }

    std::vector<int> ids(clusters.size());
    for (std::size_t i = 0; i < ids.size(); ++i) ids[i] = static_cast<int>(i);
    int next_id = static_cast<int>(clusters.size());
    std::set<std::pair<int, int>> refused;

    while (true) {
      double best = std::numeric_limits<double>::infinity();
      std::size_t bi = 0;
      std::size_t bj = 0;
      for (std::size_t i = 0; i < clusters.size(); ++i) {
        for (std::size_t j = i + 1; j < clusters.size(); ++j) {
          if (refused.count({ids[i], ids[j]})) continue;
          const double d = chordal_distance(clusters[i].center, clusters[j].center);
          if (d < best) {
            best = d;
            bi = i;
            bj = j;
          }
        }
      }
      if (!std::isfinite(best)) break;
      Cluster merged;
      if (try_merge(clusters[bi], clusters[bj], merged)) {
        clusters[bi] = std::move(merged);
        ids[bi] = next_id++;
        clusters.erase(clusters.begin() + static_cast<std::ptrdiff_t>(bj));
        ids.erase(ids.begin() + static_cast<std::ptrdiff_t>(bj));
      } else {
        refused.insert({ids[bi], ids[bj]});
      }
    }

    std::vector<Star> stars;
    stars.reserve(clusters.size());
    for (const auto& c : clusters) stars.push_back({c.center, c.size()});
    return stars;
  }

 private:
  struct Local {
    bool inverted;
    Complex z;
  };

  static Local chart_of(const StereoPoint& p) {
    if (p.is_infinite()) return {true, Complex(0.0, 0.0)};
    if (std::abs(p.value()) > 1.0) return {true, 1.0 / p.value()};
    return {false, p.value()};
  }

  static StereoPoint point_of(const Local& l) {
    if (!l.inverted) return StereoPoint(l.z);
    if (l.z == Complex(0.0, 0.0)) return StereoPoint::infinity();
    return StereoPoint(1.0 / l.z);
  }

  const CVector& coeffs(const Local& l) const { return l.inverted ? a_rev_ : a_; }

  // Radius within which the roots of a k-fold root scatter under a relative
  // coefficient perturbation, as a chordal length.
  double jitter(int k, const Local& at) const {
    const CVector& c = coeffs(at);
    const CVector t = taylor_shift(c, at.z);
    if (k >= t.size()) return std::numeric_limits<double>::infinity();
    const double tk = std::abs(t(k));
    if (tk == 0.0) return std::numeric_limits<double>::infinity();
    const double h = std::pow(kCoefficientNoise * abs_horner(c, std::abs(at.z)) / tk, 1.0 / k);
    return 2.0 * h / (1.0 + std::norm(at.z));
  }

  // A k-fold root at z has Taylor coefficients T_0 ... T_{k-1} at noise
  // level; T_{k-1} vanishes by construction after refinement, so only the
  // lower ones carry information.
  bool looks_multiple(int k, const Local& at) const {
    const CVector& c = coeffs(at);
    const CVector t = taylor_shift(c, at.z);
    const CVector abs_c = c.cwiseAbs().cast<Complex>();
    const CVector bound = taylor_shift(abs_c, std::abs(at.z));
    for (int j = 0; j + 2 <= k && j < t.size(); ++j) {
      if (std::abs(t(j)) > kMultiplicityNoise * bound(j).real()) return false;
    }
    return true;
  }

  bool try_merge(const Cluster& x, const Cluster& y, Cluster& out) const {
    out.members = x.members;
    out.members.insert(out.members.end(), y.members.begin(), y.members.end());
    out.infinite = x.infinite + y.infinite;
    Vec3 sum = Vec3::Zero();
    for (const auto& v : out.members) sum += v;
    if (sum.norm() < 1e-12) return false;
    const Direction centroid = Direction::from_vector(sum);
    double radius = 0.0;
    for (const auto& v : out.members) radius = std::max(radius, (v - centroid.unit()).norm());
    const int k = out.size();

    if (out.infinite > 0) {
      out.center = StereoPoint::infinity();
      return radius <= tol_ || looks_multiple(k, chart_of(out.center));
    }
    const Local start = chart_of(sphere_to_stereo(centroid));
    const double allowed = std::max(tol_, kJitterFactor * jitter(k, start));
    if (radius > allowed) return false;
    const Local refined = refine(start, k, allowed);
    out.center = point_of(refined);
    return radius <= tol_ || looks_multiple(k, refined);
  }

  // Newton on the (k-1)-th derivative, which has a simple root at a k-fold
  // root; falls back to the start if the iteration wanders off.
  Local refine(const Local& start, int k, double radius) const {
    const CVector& c = coeffs(start);
    Local cur = start;
    double last_step = std::numeric_limits<double>::infinity();
    for (int it = 0; it < 16; ++it) {
      const CVector t = taylor_shift(c, cur.z);
      if (k >= t.size() || t(k) == Complex(0.0, 0.0)) break;
      const Complex step = t(k - 1) / (static_cast<double>(k) * t(k));
      if (!(std::abs(step) < last_step)) break;
      cur.z -= step;
      last_step = std::abs(step);
      if (last_step <= 1e-16 * (1.0 + std::abs(cur.z))) break;
    }
    if (chordal_distance(point_of(cur), point_of(start)) > radius) return start;
    return cur;
  }

  CVector a_;
  CVector a_rev_;
  double tol_;
};

}  // namespace

MajoranaPolynomial::MajoranaPolynomial(CVector coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.size() < 1) throw Error(ErrorCode::InvalidArgument, "polynomial needs at least one coefficient");
}

Complex MajoranaPolynomial::operator()(Complex zeta) const { return horner(coeffs_, zeta); }

Complex MajoranaPolynomial::derivative(Complex zeta) const { return horner_derivative(coeffs_, zeta); }

double MajoranaPolynomial::scale_at(Complex zeta) const { return abs_horner(coeffs_, std::abs(zeta)); }

MajoranaPolynomial MajoranaPolynomial::from_roots(const std::vector<Complex>& roots) {
  CVector c = CVector::Zero(static_cast<Eigen::Index>(roots.size()) + 1);
  c(0) = 1.0;
  for (std::size_t d = 0; d < roots.size(); ++d) {
    // multiply by (zeta - r)
    for (Eigen::Index j = static_cast<Eigen::Index>(d) + 1; j >= 1; --j) c(j) = c(j - 1) - roots[d] * c(j);
    c(0) *= -roots[d];
  }
  return MajoranaPolynomial(c);
}

CVector taylor_shift(const CVector& coeffs, Complex z0) {
  CVector b = coeffs;
  const Eigen::Index n = b.size() - 1;
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = n - 1; j >= i; --j) b(j) += z0 * b(j + 1);
  }
  return b;
}

MajoranaPolynomial majorana_polynomial(const SpinState& state) {
  const int n = state.two_spin();
  CVector a(n + 1);
  for (int i = 0; i <= n; ++i) {
    const double sign = (i % 2 == 0) ? 1.0 : -1.0;
    a(n - i) = sign * sqrt_binomial(n, i) * state[i];
  }
  return MajoranaPolynomial(a);
}

SpinState state_from_polynomial(const MajoranaPolynomial& p) {
  const int n = p.nominal_degree();
  CVector c(n + 1);
  for (int i = 0; i <= n; ++i) {
    const double sign = (i % 2 == 0) ? 1.0 : -1.0;
    c(i) = sign * p[n - i] / sqrt_binomial(n, i);
  }
  return SpinState(n, c);
}

std::vector<StereoPoint> raw_roots(const MajoranaPolynomial& p, const Tolerances& tol) {
  const CVector& a = p.coeffs();
  const int n = p.nominal_degree();
  const double scale = a.cwiseAbs().maxCoeff();
  if (!(scale > tol.zero_polynomial)) throw Error(ErrorCode::AllZeroPolynomial, "every coefficient vanishes");

  // Work in the chart (zeta or w = 1/zeta) whose top coefficient is the
  // larger end, so that clusters near either pole stay small numbers.
  const bool inverted = std::abs(a(0)) > std::abs(a(n));
  const CVector c = inverted ? reversed(a) : a;
  int top = n;
  while (top > 0 && c(top) == Complex(0.0, 0.0)) --top;
  int bottom = 0;
  while (bottom < top && c(bottom) == Complex(0.0, 0.0)) ++bottom;
  const int degree = top - bottom;

  std::vector<Complex> chart_roots(bottom, Complex(0.0, 0.0));
  if (degree > 0) {
    CMatrix companion = CMatrix::Zero(degree, degree);
    for (int j = 0; j < degree; ++j) companion(0, j) = -c(top - 1 - j) / c(top);
    for (int i = 1; i < degree; ++i) companion(i, i - 1) = 1.0;
    balance(companion);
    Eigen::ComplexEigenSolver<CMatrix> solver(companion, false);
    for (int i = 0; i < degree; ++i) chart_roots.push_back(solver.eigenvalues()(i));
  }

  const CVector a_rev = reversed(a);
  std::vector<StereoPoint> roots;
  roots.reserve(n);
  for (const Complex& w : chart_roots) {
    if (!inverted) {
      roots.push_back(polish(a, a_rev, w));
    } else if (w == Complex(0.0, 0.0)) {
      roots.push_back(StereoPoint::infinity());
    } else {
      roots.push_back(polish(a, a_rev, 1.0 / w));
    }
  }
  // Exact zeros at the top of the chart are roots at the chart's infinity.
  for (int i = top; i < n; ++i) roots.push_back(inverted ? StereoPoint(Complex(0.0, 0.0)) : StereoPoint::infinity());
  return roots;
}

Constellation polynomial_roots(const MajoranaPolynomial& p, const Tolerances& tol) {
  const std::vector<StereoPoint> roots = raw_roots(p, tol);
  std::vector<StereoPoint> finite;
  int infinite = 0;
  for (const auto& r : roots) {
    if (r.is_infinite()) {
      ++infinite;
    } else {
      finite.push_back(r);
    }
  }
  std::vector<Star> stars = RootClusterer(p.coeffs(), tol.cluster).run(finite, infinite);
  for (auto& s : stars) {
    if (!s.point.is_infinite() && chordal_distance(s.point, StereoPoint::infinity()) <= tol.infinity_snap) {
      s.point = StereoPoint::infinity();
    }
  }
  std::sort(stars.begin(), stars.end(), [](const Star& x, const Star& y) {
    const Direction dx = x.direction();
    const Direction dy = y.direction();
    const auto kx = std::llround(dx.theta * 1e9);
    const auto ky = std::llround(dy.theta * 1e9);
    if (kx != ky) return kx < ky;
    return dx.phi < dy.phi;
  });
  return Constellation(std::move(stars));
}

}  // namespace majorana
