#include "majorana/superposition.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <utility>

#include "majorana/polynomial.hpp"
#include "majorana/sc_basis.hpp"
#include "majorana/stellar.hpp"

namespace majorana {

namespace {

constexpr double kPoleThreshold = 1e-12;

double sign_power(int n) { return (n % 2 == 0) ? 1.0 : -1.0; }

// Homogeneous root (num : den) of a projective line.
StereoPoint to_stereo(Complex num, Complex den, const Tolerances& tol) {
  if (std::abs(den) <= tol.infinity_snap * std::abs(num)) return StereoPoint::infinity();
  return num / den;
}

// Roots (num : den) of c2 x^2 + c1 x + c0, stable for either end.
std::array<std::pair<Complex, Complex>, 2> projective_quadratic(Complex c2, Complex c1, Complex c0) {
  Complex r = std::sqrt(c1 * c1 - 4.0 * c2 * c0);
  if (std::real(std::conj(c1) * r) < 0.0) r = -r;
  const Complex q = -0.5 * (c1 + r);
  if (q == Complex(0.0, 0.0)) {
    if (c2 == Complex(0.0, 0.0)) return {{{1.0, 0.0}, {1.0, 0.0}}};
    return {{{0.0, 1.0}, {0.0, 1.0}}};
  }
  return {{{q, c2}, {c0, q}}};
}

bool star_before(const StereoPoint& a, const StereoPoint& b) {
  if (a.is_infinite() || b.is_infinite()) return !a.is_infinite() && b.is_infinite();
  const Complex x = a.value();
  const Complex y = b.value();
  if (x.real() != y.real()) return x.real() < y.real();
  return x.imag() < y.imag();
}

Eigen::Vector2cd least_squares(const CVector& p, const CVector& q, const CVector& target) {
  CMatrix m(p.size(), 2);
  m.col(0) = p;
  m.col(1) = q;
  return m.colPivHouseholderQr().solve(target);
}

}  // namespace

int distinct_star_count(const SpinState& state, double cluster_radius) {
  Tolerances tol;
  tol.cluster = cluster_radius;
  return constellation(state.normalized(), tol).distinct_count();
}

int distinct_star_count(const SpinState& state, const Tolerances& tol) {
  return distinct_star_count(state, tol.sc_membership);
}

int mason_bound(const Constellation& c1, const Constellation& c2, double match_radius) {
  const int n = c1.total_multiplicity();
  if (c2.total_multiplicity() != n) throw Error(ErrorCode::InvalidArgument, "constellations of different spin");
  std::vector<int> m1, m2;
  for (const auto& s : c1.stars()) m1.push_back(s.multiplicity);
  for (const auto& s : c2.stars()) m2.push_back(s.multiplicity);
  int reduced = n;
  std::vector<bool> used(m2.size(), false);
  for (std::size_t i = 0; i < m1.size(); ++i) {
    for (std::size_t j = 0; j < m2.size(); ++j) {
      if (used[j] || chordal_distance(c1.stars()[i].point, c2.stars()[j].point) >= match_radius) continue;
      used[j] = true;
      const int common = std::min(m1[i], m2[j]);
      m1[i] -= common;
      m2[j] -= common;
      reduced -= common;
      break;
    }
  }
  const auto positive = [](const std::vector<int>& m) {
    return static_cast<int>(std::count_if(m.begin(), m.end(), [](int x) { return x > 0; }));
  };
  return reduced - positive(m1) - positive(m2) + 1;
}

Superposition superpose(Complex a, const SpinState& s1, Complex b, const SpinState& s2, const Tolerances& tol) {
  if (s1.two_spin() != s2.two_spin()) throw Error(ErrorCode::InvalidArgument, "states of different spin");
  const CVector v = a * s1.coeffs() + b * s2.coeffs();
  const double scale = std::abs(a) * s1.norm() + std::abs(b) * s2.norm();
  if (!(v.norm() > 1e-12 * scale)) throw Error(ErrorCode::ZeroCombination, "a s1 + b s2 vanishes");
  SpinState state(s1.two_spin(), v / v.norm());
  Constellation stars = constellation(state, tol);
  const int bound = mason_bound(constellation(s1.normalized(), tol), constellation(s2.normalized(), tol), tol.cluster);
  const int distinct = stars.distinct_count();
  return {std::move(state), std::move(stars), bound, distinct};
}

Complex trajectory_root(int two_spin, Complex gamma1, Complex gamma2, double omega, int k, double t) {
  const Complex e = std::polar(1.0, omega + 2.0 * kPi * k / two_spin);
  const Complex den = std::cos(t) - e * std::sin(t);
  if (std::abs(den) < kPoleThreshold) throw Error(ErrorCode::PoleAt, "root " + std::to_string(k) + " passes through infinity at t = " + std::to_string(t));
  return (gamma1 * std::cos(t) - gamma2 * e * std::sin(t)) / den;
}

Trajectory two_sc_trajectory(int two_spin, const StereoPoint& gamma1, const StereoPoint& gamma2, double omega,
                             const std::vector<double>& ts, bool poles_to_infinity) {
  if (two_spin < 1) throw Error(ErrorCode::InvalidArgument, "spin must be positive");
  if (gamma1.is_infinite() || gamma2.is_infinite()) throw Error(ErrorCode::InvalidArgument, "gammas must be finite; rotate first");
  if (gamma1.value() == gamma2.value()) throw Error(ErrorCode::InvalidArgument, "gammas coincide");
  Trajectory out{two_spin, gamma1.value(), gamma2.value(), omega, {}};
  out.samples.reserve(ts.size());
  for (double t : ts) {
    TrajectorySample s{t, {}};
    for (int k = 0; k < two_spin; ++k) {
      try {
        s.roots.emplace_back(trajectory_root(two_spin, out.gamma1, out.gamma2, omega, k, t));
      } catch (const Error& e) {
        if (!poles_to_infinity || e.code() != ErrorCode::PoleAt) throw;
        s.roots.push_back(StereoPoint::infinity());
      }
    }
    out.samples.push_back(std::move(s));
  }
  return out;
}

CVector trajectory_polynomial(int two_spin, Complex gamma1, Complex gamma2, double omega, double t) {
  const CVector p1 = MajoranaPolynomial::from_roots(std::vector<Complex>(two_spin, gamma1)).coeffs();
  const CVector p2 = MajoranaPolynomial::from_roots(std::vector<Complex>(two_spin, gamma2)).coeffs();
  return std::pow(std::cos(t), two_spin) * p1 - std::polar(std::pow(std::sin(t), two_spin), two_spin * omega) * p2;
}

TrajectoryThrough trajectory_through(Complex a, const SpinState& sc1, Complex b, const SpinState& sc2,
                                     const Tolerances& tol) {
  if (sc1.two_spin() != sc2.two_spin()) throw Error(ErrorCode::InvalidArgument, "states of different spin");
  const int n = sc1.two_spin();
  const auto star = [&](const SpinState& s) {
    const Constellation c = constellation(s.normalized(), tol);
    if (c.distinct_count() != 1) throw Error(ErrorCode::InvalidArgument, "trajectory needs two SC states");
    if (c.stars().front().point.is_infinite()) throw Error(ErrorCode::InvalidArgument, "trajectory needs finite stars; rotate first");
    return c.stars().front().point.value();
  };
  const Complex g1 = star(sc1);
  const Complex g2 = star(sc2);
  if (chordal_distance(g1, g2) < tol.cluster) throw Error(ErrorCode::InvalidArgument, "the two SC states coincide");
  // Leading Majorana coefficients give the scale of each (z - g)^N term.
  const Complex p1 = a * majorana_polynomial(sc1)[n];
  const Complex p2 = b * majorana_polynomial(sc2)[n];
  if (std::abs(p1) == 0.0 && std::abs(p2) == 0.0) throw Error(ErrorCode::ZeroCombination, "a s1 + b s2 vanishes");
  // p1 (z - g1)^N + p2 (z - g2)^N is proportional to
  // cos^N t (z - g1)^N - e^{iN Omega} sin^N t (z - g2)^N.
  const Complex ratio = -p2 / p1;
  TrajectoryThrough out{g1, g2, 0.0, 0.0};
  if (std::abs(p1) == 0.0) {
    out.t = 0.5 * kPi;
    out.omega = std::arg(-p2) / n;
  } else {
    out.t = std::atan(std::pow(std::abs(ratio), 1.0 / n));
    out.omega = std::arg(ratio) / n;
  }
  return out;
}

StereoPoint mobius_image(const StereoPoint& zeta, Complex gamma1, Complex gamma2) {
  if (zeta.is_infinite()) return Complex(1.0, 0.0);
  const Complex den = zeta.value() - gamma2;
  if (den == Complex(0.0, 0.0)) return StereoPoint::infinity();
  return (zeta.value() - gamma1) / den;
}

CircleFit fit_circle(const std::vector<Complex>& points) {
  if (points.size() < 3) throw Error(ErrorCode::InvalidArgument, "circle fit needs three points");
  Complex mean(0.0, 0.0);
  for (const auto& p : points) mean += p;
  mean /= static_cast<double>(points.size());
  double scale = 0.0;
  for (const auto& p : points) scale = std::max(scale, std::abs(p - mean));
  if (scale == 0.0) throw Error(ErrorCode::InvalidArgument, "circle fit on coincident points");

  Eigen::MatrixXd m(points.size(), 4);
  for (std::size_t i = 0; i < points.size(); ++i) {
    const Complex q = (points[i] - mean) / scale;
    m.row(static_cast<Eigen::Index>(i)) << std::norm(q), q.real(), q.imag(), 1.0;
  }
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(m, Eigen::ComputeFullV);
  const Eigen::Vector4d v = svd.matrixV().col(3);
  const double a = v(0), d = v(1), e = v(2), f = v(3);

  CircleFit fit;
  const double lin = std::hypot(d, e);
  if (std::abs(a) < 1e-9 * lin) {
    fit.is_line = true;
    for (const auto& p : points) {
      const Complex q = (p - mean) / scale;
      fit.residual = std::max(fit.residual, std::abs(d * q.real() + e * q.imag() + f) / lin);
    }
  } else {
    const Complex c(-d / (2.0 * a), -e / (2.0 * a));
    const double r = std::sqrt(std::max(0.0, std::norm(c) - f / a));
    for (const auto& p : points) {
      const Complex q = (p - mean) / scale;
      fit.residual = std::max(fit.residual, std::abs(std::abs(q - c) - r));
    }
    fit.center = mean + scale * c;
    fit.radius = scale * r;
  }
  fit.residual *= scale;
  return fit;
}

std::vector<LineIntersection> spin1_line_intersections(const StereoPoint& zeta1, const StereoPoint& zeta2,
                                                       const StereoPoint& xi1, const StereoPoint& xi2,
                                                       const Tolerances& tol) {
  const std::array<StereoPoint, 2> z{zeta1, zeta2};
  const std::array<StereoPoint, 2> x{xi1, xi2};
  const auto same = [&](const StereoPoint& p, const StereoPoint& q) { return chordal_distance(p, q) < tol.cluster; };
  const bool all_finite = std::all_of(z.begin(), z.end(), [](const StereoPoint& p) { return !p.is_infinite(); }) &&
                          std::all_of(x.begin(), x.end(), [](const StereoPoint& p) { return !p.is_infinite(); });

  if ((same(z[0], x[0]) && same(z[1], x[1])) || (same(z[0], x[1]) && same(z[1], x[0]))) {
    throw Error(ErrorCode::InvalidArgument, "the two states coincide");
  }
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      if (!same(z[i], x[j])) continue;
      LineIntersection hit{z[i], std::nullopt, std::nullopt};
      if (all_finite) {
        // alpha1 (z - zo) + alpha2 (z - xo) = z - chi with alpha1 + alpha2 = 1.
        const Complex zo = z[1 - i].value();
        const Complex xo = x[1 - j].value();
        const Complex a1 = (z[i].value() - xo) / (zo - xo);
        hit.alpha1 = a1;
        hit.alpha2 = 1.0 - a1;
      }
      return {hit};
    }
  }

  // a P + b Q has a double root where its discriminant p1^2 - 4 p2 p0 vanishes.
  const CVector p = star_polynomial({z[0], z[1]});
  const CVector q = star_polynomial({x[0], x[1]});
  const auto disc = [](const CVector& c) { return c(1) * c(1) - 4.0 * c(2) * c(0); };
  const Complex caa = disc(p);
  const Complex cbb = disc(q);
  const Complex cab = 2.0 * (p(1) * q(1) - 2.0 * p(2) * q(0) - 2.0 * q(2) * p(0));
  const auto ab = projective_quadratic(caa, cab, cbb);

  std::vector<LineIntersection> out;
  const double radicand = std::abs(cab * cab - 4.0 * caa * cbb);
  const int count = radicand <= tol.radicand * (std::norm(cab) + 4.0 * std::abs(caa * cbb)) ? 1 : 2;
  for (int r = 0; r < count; ++r) {
    const Complex a = ab[r].first;
    const Complex b = ab[r].second;
    const CVector c = a * p + b * q;
    LineIntersection hit;
    // Double root of c2 z^2 + c1 z + c0: -c1 / (2 c2) = -2 c0 / c1.
    hit.gamma = std::abs(c(2)) >= 0.5 * std::abs(c(1)) ? to_stereo(-c(1), 2.0 * c(2), tol) : to_stereo(-2.0 * c(0), c(1), tol);
    if (all_finite && !hit.gamma.is_infinite()) {
      hit.alpha1 = a / c(2);
      hit.alpha2 = b / c(2);
    }
    out.push_back(hit);
  }
  std::sort(out.begin(), out.end(), [](const LineIntersection& u, const LineIntersection& v) { return star_before(u.gamma, v.gamma); });
  return out;
}

CVector star_polynomial(const std::vector<StereoPoint>& stars) {
  CVector c = CVector::Zero(static_cast<Eigen::Index>(stars.size()) + 1);
  c(0) = 1.0;
  for (std::size_t d = 0; d < stars.size(); ++d) {
    const auto top = static_cast<Eigen::Index>(d) + 1;
    if (stars[d].is_infinite()) {
      c.head(top) *= -1.0;
      continue;
    }
    const Complex r = stars[d].value();
    for (Eigen::Index j = top; j >= 1; --j) c(j) = c(j - 1) - r * c(j);
    c(0) *= -r;
  }
  return c;
}

CVector sc_polynomial(const StereoPoint& gamma, int two_spin) {
  return star_polynomial(std::vector<StereoPoint>(two_spin, gamma));
}

CVector tangent_polynomial(const StereoPoint& gamma, int two_spin) {
  if (gamma.is_infinite()) {
    CVector c = CVector::Zero(two_spin + 1);
    c(1) = sign_power(two_spin - 1);
    return c;
  }
  CVector c = CVector::Zero(two_spin + 1);
  c.head(two_spin) = MajoranaPolynomial::from_roots(std::vector<Complex>(two_spin - 1, gamma.value())).coeffs();
  return c;
}

TwoSCDecomposition spin32_decompose(const StereoPoint& zeta1, const StereoPoint& zeta2, const StereoPoint& zeta3,
                                    const Tolerances& tol) {
  constexpr int kN = 3;
  const std::array<StereoPoint, 3> zs{zeta1, zeta2, zeta3};
  const CVector target = star_polynomial({zeta1, zeta2, zeta3});
  const auto same = [&](int i, int j) { return chordal_distance(zs[i], zs[j]) < tol.cluster; };

  TwoSCDecomposition d;
  for (const auto& [i, j, k] : std::array<std::array<int, 3>, 3>{{{1, 2, 0}, {0, 2, 1}, {0, 1, 2}}}) {
    if (!same(i, j)) continue;
    // Double star zs[i]: target = alpha1 (z - g)^3 + alpha2 (z - g)^2.
    d.degenerate = true;
    d.gamma1 = zs[i];
    d.gamma2 = zs[i];
    if (same(i, k)) {
      d.alpha1 = 1.0;
      d.alpha2 = 0.0;
      return d;
    }
    const Eigen::Vector2cd a = least_squares(sc_polynomial(zs[i], kN), tangent_polynomial(zs[i], kN), target);
    d.alpha1 = a(0);
    d.alpha2 = a(1);
    return d;
  }

  const bool finite = std::none_of(zs.begin(), zs.end(), [](const StereoPoint& p) { return p.is_infinite(); });
  if (finite) {
    const Complex z1 = zeta1.value(), z2 = zeta2.value(), z3 = zeta3.value();
    const Complex sum = z1 + z2 + z3;
    const Complex a = 2.0 * (z1 * z1 + z2 * z2 + z3 * z3 - z1 * z2 - z2 * z3 - z3 * z1);
    const double zmax = std::max({std::norm(z1), std::norm(z2), std::norm(z3)});
    if (std::abs(a) < tol.a_degeneracy * std::max(1.0, zmax)) {
      d.a_branch = true;
      d.gamma1 = sum / 3.0;
      d.gamma2 = StereoPoint::infinity();
    } else {
      const Complex s = z1 * z1 * (z2 + z3) + z2 * z2 * (z3 + z1) + z3 * z3 * (z1 + z2) - 6.0 * z1 * z2 * z3;
      const Complex r = kI * std::sqrt(3.0) * (z1 - z2) * (z2 - z3) * (z3 - z1);
      const Complex g1 = (s + r) / a;
      const Complex g2 = (s - r) / a;
      d.gamma1 = g1;
      d.gamma2 = g2;
      d.alpha1 = (-3.0 * g2 + sum) / (3.0 * (g1 - g2));
      d.alpha2 = (3.0 * g1 - sum) / (3.0 * (g1 - g2));
    }
  } else {
    // Sylvester: the two cubes sit at the roots of the Hessian covariant of
    // the binary cubic a z^3 + 3b z^2 + 3c z + e.
    const Complex a = target(3), b = target(2) / 3.0, c = target(1) / 3.0, e = target(0);
    const auto roots = projective_quadratic(a * c - b * b, a * e - b * c, b * e - c * c);
    d.gamma1 = to_stereo(roots[0].first, roots[0].second, tol);
    d.gamma2 = to_stereo(roots[1].first, roots[1].second, tol);
    d.a_branch = d.gamma1.is_infinite() || d.gamma2.is_infinite();
  }
  if (d.a_branch || !finite) {
    const Eigen::Vector2cd w = least_squares(sc_polynomial(d.gamma1, kN), sc_polynomial(d.gamma2, kN), target);
    d.alpha1 = w(0);
    d.alpha2 = w(1);
  }
  if (star_before(d.gamma2, d.gamma1)) {
    std::swap(d.gamma1, d.gamma2);
    std::swap(d.alpha1, d.alpha2);
  }
  return d;
}

CVector reconstruct(const TwoSCDecomposition& d) {
  constexpr int kN = 3;
  const CVector second = d.degenerate ? tangent_polynomial(d.gamma2, kN) : sc_polynomial(d.gamma2, kN);
  return d.alpha1 * sc_polynomial(d.gamma1, kN) + d.alpha2 * second;
}

std::pair<Complex, Complex> sc_weights(const TwoSCDecomposition& d) {
  if (d.degenerate) throw Error(ErrorCode::InvalidArgument, "degenerate decomposition has no SC pair");
  // The Majorana polynomial of |n(g)> is cos^N(theta/2) (z - g)^N, and
  // (-1)^N at the south pole.
  const auto weight = [](const StereoPoint& g, Complex alpha) {
    if (g.is_infinite()) return alpha;
    return alpha / std::pow(std::cos(0.5 * stereo_to_sphere(g).theta), 3);
  };
  return {weight(d.gamma1, d.alpha1), weight(d.gamma2, d.alpha2)};
}

std::vector<LinePoint> sc_points_on_line(const SpinState& a, const SpinState& b, int t_steps, int chi_steps,
                                         const Tolerances& tol) {
  if (t_steps < 2 || chi_steps < 1) throw Error(ErrorCode::InvalidArgument, "line scan needs t_steps >= 2 and chi_steps >= 1");
  std::vector<LinePoint> hits;
  for (int i = 0; i < t_steps; ++i) {
    const double t = 0.5 * kPi * i / (t_steps - 1);
    // cos(pi/2) rounds to 6e-17, enough to split the N-fold star of b.
    const double ct = (i == t_steps - 1) ? 0.0 : std::cos(t);
    const double st = (i == t_steps - 1) ? 1.0 : std::sin(t);
    for (int j = 0; j < chi_steps; ++j) {
      const double chi = 2.0 * kPi * j / chi_steps;
      const CVector v = ct * a.coeffs() + std::polar(st, chi) * b.coeffs();
      if (v.norm() < 1e-12) continue;
      if (distinct_star_count(SpinState(a.two_spin(), v), tol) == 1) hits.push_back({t, chi});
    }
  }
  return hits;
}

}  // namespace majorana
