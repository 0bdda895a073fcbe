#include <cmath>
#include <vector>

#include "doctest.h"
#include "majorana/fs_geometry.hpp"
#include "majorana/random.hpp"
#include "majorana/sc_basis.hpp"
#include "majorana/stellar.hpp"

using namespace majorana;

namespace {

SpinState rephased(const SpinState& s, double phase) { return SpinState(s.two_spin(), std::polar(1.0, phase) * s.coeffs()); }

// |d rho/dt| from central differences of the density matrix.
double fd_speed(const SpinState& a, const SpinState& b, double t) {
  const double h = 1e-5;
  const CVector p = geodesic(a, b, t + h).coeffs();
  const CVector m = geodesic(a, b, t - h).coeffs();
  return fs_norm((p * p.adjoint() - m * m.adjoint()) / (2.0 * h));
}

// Closed forms for the spin-1 pair state: (v1 + i v2, v3 + i v4).
std::pair<Complex, Complex> pair_components(double alpha, const Direction& n, double omega) {
  const double b = std::sqrt(3.0 + std::cos(2.0 * alpha));
  const double ca = std::pow(std::cos(0.5 * alpha), 2), sa = std::pow(std::sin(0.5 * alpha), 2);
  const double ct = std::pow(std::cos(0.5 * n.theta), 2), st = std::pow(std::sin(0.5 * n.theta), 2);
  const Complex e2 = std::polar(1.0, 2.0 * n.phi);
  const Complex chi = ca * ct - e2 * sa * st;
  const Complex xi = ca * st + e2 * sa * ct;
  const double sc = std::sin(omega) * std::cos(omega);
  return {std::sqrt(2.0) * std::polar(1.0, -n.phi) * omega * chi * std::sin(n.theta) / (b * sc),
          4.0 * std::polar(1.0, -2.0 * n.phi) * omega * chi * xi / (b * b * sc)};
}

}  // namespace

TEST_CASE("fs_distance examples") {
  Rng rng(1);
  const SpinState a = random_state(3, rng);
  CHECK(fs_distance(a, rephased(a, 0.7)) < 1e-7);
  CHECK(std::abs(fs_distance(SpinState::basis(3, 0), SpinState::basis(3, 2)) - 0.5 * kPi) < 1e-15);
  for (double theta : {0.1, 1.0, 2.5}) {
    CHECK(std::abs(fs_distance(sc_state(Direction::north(), 1), sc_state({theta, 0.3}, 1)) - 0.5 * theta) < 1e-12);
  }
}

TEST_CASE("fs_distance is a metric on samples") {
  Rng rng(2);
  for (int trial = 0; trial < 10000; ++trial) {
    const SpinState a = random_state(3, rng), b = random_state(3, rng), c = random_state(3, rng);
    CHECK(fs_distance(a, b) == fs_distance(b, a));
    CHECK(fs_distance(a, c) <= fs_distance(a, b) + fs_distance(b, c) + 1e-12);
  }
}

TEST_CASE("geodesics") {
  Rng rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    const SpinState a = random_state(4, rng), b = random_state(4, rng);
    const double w = fs_distance(a, b);
    CHECK(fidelity(geodesic(a, b, 0.0), a) > 1.0 - 1e-12);
    CHECK(fidelity(geodesic(a, b, w), b) > 1.0 - 1e-12);
    const SpinState mid = geodesic(a, b, 0.5 * w);
    CHECK(std::abs(fs_distance(mid, a) - fs_distance(mid, b)) < 1e-9);
    for (int k = 1; k <= 10; ++k) CHECK(std::abs(fd_speed(a, b, w * k / 11.0) - 1.0) < 1e-6);
  }
  CHECK_THROWS_AS(geodesic(SpinState::basis(2, 0), SpinState::basis(2, 1), 0.1), Error);
}

TEST_CASE("log map") {
  Rng rng(4);
  const SpinState a = random_state(3, rng);
  CHECK(log_map(a, rephased(a, 1.3)).cwiseAbs().maxCoeff() < 1e-7);
  for (int trial = 0; trial < 100; ++trial) {
    const SpinState base = random_state(3, rng), target = random_state(3, rng);
    const CMatrix v = log_map(base, target);
    CHECK((v - v.adjoint()).cwiseAbs().maxCoeff() < 1e-12);
    CHECK(std::abs(fs_norm(v) - fs_distance(base, target)) < 1e-10);
    const CMatrix rho = base.coeffs() * base.coeffs().adjoint();
    CHECK(std::abs((v * rho).trace()) < 1e-12);
    CHECK(fidelity(exp_map(base, v), target) > 1.0 - 1e-10);
    CHECK(fidelity(geodesic(base, target, fs_distance(base, target)), target) > 1.0 - 1e-10);
    CHECK((log_map(rephased(base, 0.4), rephased(target, -1.1)) - v).cwiseAbs().maxCoeff() < 1e-12);
  }
  try {
    log_map(SpinState::basis(2, 0), SpinState::basis(2, 2));
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::CutLocus);
  }
}

TEST_CASE("tangent frames") {
  Rng rng(5);
  for (int n = 1; n <= 6; ++n) {
    const SpinState base = random_state(n, rng);
    const TangentFrame f = tangent_frame(base);
    REQUIRE(f.dimension() == 2 * n);
    for (int i = 0; i < f.dimension(); ++i) {
      for (int j = 0; j < f.dimension(); ++j) {
        CHECK(std::abs(0.5 * (f.elements[i] * f.elements[j]).trace() - (i == j ? 1.0 : 0.0)) < 1e-12);
      }
    }
    const CMatrix v = log_map(base, random_state(n, rng));
    CHECK((f.assemble(f.components(v)) - v).cwiseAbs().maxCoeff() < 1e-10);
  }
  for (double alpha : {kPi / 12, kPi / 3, kPi / 2}) {
    const SpinState psi = spin1_pair_state(alpha);
    CHECK(std::abs(psi.norm() - 1.0) < 1e-15);
    const TangentFrame f = spin1_pair_frame(alpha);
    for (int i = 0; i < 4; ++i) {
      for (int j = 0; j < 4; ++j) {
        CHECK(std::abs(0.5 * (f.elements[i] * f.elements[j]).trace() - (i == j ? 1.0 : 0.0)) < 1e-12);
      }
      CHECK(std::abs((f.elements[i] * psi.coeffs() * psi.coeffs().adjoint()).trace()) < 1e-12);
    }
    const CMatrix v = log_map(psi, sc_state({1.2, 0.5}, 2));
    CHECK((f.assemble(f.components(v)) - v).cwiseAbs().maxCoeff() < 1e-10);
  }
}

TEST_CASE("spin-1 pair state has stars at (+-sin a, 0, cos a)") {
  const double alpha = 0.9;
  const Constellation c = constellation(spin1_pair_state(alpha));
  const Constellation expected = Constellation::from_directions({{alpha, 0.0}, {alpha, kPi}}, 1e-7);
  CHECK(multiset_distance(c, expected) < 1e-12);
}

TEST_CASE("log cloud matches the spin-1 closed forms") {
  const double alpha = kPi / 3;
  const SpinState psi = spin1_pair_state(alpha);
  const LogCloud cloud = sc_log_cloud(psi, 40, spin1_pair_frame(alpha));
  int checked = 0;
  for (const auto& s : cloud.samples) {
    if (s.flag != SampleFlag::Ok || s.omega < 1e-6) continue;
    const auto [v12, v34] = pair_components(alpha, {s.theta, s.phi}, s.omega);
    CHECK(std::abs(Complex(s.components(0), s.components(1)) - v12) < 1e-9);
    CHECK(std::abs(Complex(s.components(2), s.components(3)) - v34) < 1e-9);
    CHECK(std::abs(s.components.norm() - s.omega) < 1e-10);
    ++checked;
  }
  CHECK(checked > 1500);
  // The last two samples sit on the star antipodes.
  const auto& tail = cloud.samples;
  REQUIRE(tail.size() == 40 * 40 + 2);
  CHECK(tail[tail.size() - 2].flag == SampleFlag::CutLocus);
  CHECK(tail[tail.size() - 1].flag == SampleFlag::CutLocus);
  REQUIRE(cloud.circles.size() == 2);
  for (const auto& circle : cloud.circles) {
    for (const auto& v : circle) CHECK(std::abs(v.norm() - 0.5 * kPi) < 1e-12);
  }
}

TEST_CASE("log cloud ignores the phase of the base representative") {
  Rng rng(6);
  const SpinState base = random_state(3, rng);
  const TangentFrame f = tangent_frame(base);
  const LogCloud a = sc_log_cloud(base, 12, f);
  const LogCloud b = sc_log_cloud(rephased(base, 2.2), 12, f);
  REQUIRE(a.samples.size() == b.samples.size());
  for (std::size_t i = 0; i < a.samples.size(); ++i) {
    if (a.samples[i].flag != SampleFlag::Ok) continue;
    CHECK((a.samples[i].components - b.samples[i].components).norm() < 1e-12);
  }
}

TEST_CASE("log cloud of a spin-3/2 state spans the full tangent space") {
  Rng rng(7);
  for (int trial = 0; trial < 5; ++trial) CHECK(affine_rank(sc_log_cloud(random_state(3, rng), 20)) == 6);
}

TEST_CASE("direction cloud") {
  const double alpha = kPi / 3;
  const SpinState psi = spin1_pair_state(alpha);
  const LogCloud logs = sc_log_cloud(psi, 30, spin1_pair_frame(alpha));
  const DirectionCloud dirs = direction_cloud(psi, 30, spin1_pair_frame(alpha));
  std::size_t k = 0;
  for (const auto& s : logs.samples) {
    if (s.flag == SampleFlag::Ok && s.omega == 0.0) continue;
    const DirectionSample& d = dirs.samples[k++];
    CHECK(d.flag == s.flag);
    if (s.flag != SampleFlag::Ok) continue;
    CHECK(std::abs(d.unit.norm() - 1.0) < 1e-10);
    CHECK((d.unit - s.components / s.components.norm()).norm() < 1e-10);
    const Eigen::VectorXd& x = d.projected;
    CHECK((x - d.unit.head(3) / (1.0 + d.unit(3))).norm() < 1e-12);
  }
  REQUIRE(dirs.circles.size() == 2);
  double gap = 1e9;
  for (const auto& p : dirs.circles[0]) {
    for (const auto& q : dirs.circles[1]) gap = std::min(gap, (p - q).norm());
  }
  CHECK(gap > 1e-3);
}

TEST_CASE("Bargmann phase") {
  Rng rng(8);
  for (int trial = 0; trial < 100; ++trial) {
    const SpinState a = random_state(2, rng), b = random_state(2, rng), c = random_state(2, rng);
    CHECK(std::abs(bargmann_phase(a, a, c)) < 1e-12);
    const double w = bargmann_phase(a, b, c);
    const double w2 = bargmann_phase(rephased(a, 0.3), rephased(b, 1.7), rephased(c, -2.0));
    CHECK(std::abs(std::remainder(w - w2, 2.0 * kPi)) < 1e-12);
    // Real embedding: cos s = Re<a|b> = cos(omega) cos(eta).
    Eigen::VectorXd ra(6), rb(6);
    ra << a.coeffs().real(), a.coeffs().imag();
    rb << b.coeffs().real(), b.coeffs().imag();
    const Complex ab = inner(a, b);
    CHECK(std::abs(ra.dot(rb) - std::cos(fs_distance(a, b)) * std::cos(std::arg(ab))) < 1e-12);
  }
  CHECK_THROWS_AS(bargmann_phase(SpinState::basis(2, 0), SpinState::basis(2, 1), random_state(2, rng)), Error);
}

TEST_CASE("tangent angle") {
  Rng rng(9);
  for (int trial = 0; trial < 1000; ++trial) {
    const SpinState base = random_state(3, rng), a = random_state(3, rng), b = random_state(3, rng);
    const double direct = std::acos(std::clamp(0.5 * (unit_log(base, a) * unit_log(base, b)).trace().real(), -1.0, 1.0));
    CHECK(std::abs(tangent_angle(base, a, b) - direct) < 1e-9);
  }
  const SpinState base = random_state(2, rng), a = random_state(2, rng);
  CHECK(tangent_angle(base, a, a) < 1e-7);
  // Real states: the Bargmann phase is 0 or pi and the spherical cosine rule applies.
  for (int trial = 0; trial < 100; ++trial) {
    CVector x = CVector::Zero(4), y = CVector::Zero(4), z = CVector::Zero(4);
    for (int i = 0; i < 4; ++i) {
      x(i) = uniform(rng, 0.1, 1.0);
      y(i) = uniform(rng, 0.1, 1.0);
      z(i) = uniform(rng, 0.1, 1.0);
    }
    const SpinState p(3, x.normalized()), q(3, y.normalized()), r(3, z.normalized());
    REQUIRE(std::abs(bargmann_phase(q, r, p)) < 1e-12);
    const double wa = fs_distance(q, p), wb = fs_distance(r, p), wab = fs_distance(q, r);
    const double rule = std::acos(std::clamp((std::cos(wab) - std::cos(wa) * std::cos(wb)) / (std::sin(wa) * std::sin(wb)), -1.0, 1.0));
    CHECK(std::abs(tangent_angle(p, q, r) - rule) < 1e-12);
  }
  try {
    tangent_angle(base, base, a);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::DegenerateTriangle);
  }
}
