#include "majorana/fs_geometry.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include <Eigen/QR>
#include <Eigen/SVD>

#include "majorana/sc_basis.hpp"
#include "majorana/stellar.hpp"

namespace majorana {

namespace {

const CVector& unit_coeffs(const SpinState& s, CVector& storage) {
  const double n = s.norm();
  if (std::abs(n - 1.0) < 1e-14) return s.coeffs();
  storage = s.coeffs() / n;
  return storage;
}

// Unit vector orthogonal to psi along which the geodesic leaves psi towards
// target, with e^{i eta} target = cos(omega) psi + sin(omega) phi.
CVector geodesic_direction(const CVector& psi, const CVector& target, double omega) {
  const Complex overlap = target.dot(psi);  // <t|psi> = cos(omega) e^{i eta}
  const Complex phase = overlap / std::abs(overlap);
  return (phase * target - std::cos(omega) * psi) / std::sin(omega);
}

CMatrix symmetrized(const CVector& a, const CVector& b) { return a * b.adjoint() + b * a.adjoint(); }

void check_same_dimension(const SpinState& a, const SpinState& b) {
  if (a.two_spin() != b.two_spin()) throw Error(ErrorCode::InvalidArgument, "states have different spin");
}

std::vector<Direction> star_antipodes(const SpinState& base, const Tolerances& tol) {
  std::vector<Direction> out;
  for (const auto& star : constellation(base, tol).stars()) out.push_back(star.direction().antipode());
  return out;
}

// Unit tangent vectors at psi pointing to the orthogonal state m, one per
// phase e^{i beta}.
std::vector<Eigen::VectorXd> cut_circle(const CVector& psi, const CVector& m, const TangentFrame& frame, int points,
                                        double radius) {
  CVector perp = m - psi * psi.dot(m);
  perp /= perp.norm();
  std::vector<Eigen::VectorXd> out;
  for (int k = 0; k <= points; ++k) {
    const double beta = 2.0 * kPi * k / points;
    out.push_back(radius * frame.components(symmetrized(std::polar(1.0, beta) * perp, psi)));
  }
  return out;
}

}  // namespace

bool same_ray(const SpinState& a, const SpinState& b, double tol) { return fidelity(a, b) > 1.0 - tol; }

double fs_distance(const SpinState& a, const SpinState& b) {
  check_same_dimension(a, b);
  return std::acos(std::min(1.0, fidelity(a, b)));
}

SpinState geodesic(const SpinState& a, const SpinState& b, double t, const Tolerances& tol) {
  const double omega = fs_distance(a, b);
  if (omega >= 0.5 * kPi - tol.cut_locus) throw Error(ErrorCode::AntipodalTarget, "target is orthogonal to the start point");
  CVector sa, sb;
  const CVector& psi = unit_coeffs(a, sa);
  if (omega == 0.0) return SpinState(a.two_spin(), psi);
  const CVector phi = geodesic_direction(psi, unit_coeffs(b, sb), omega);
  return SpinState(a.two_spin(), std::cos(t) * psi + std::sin(t) * phi);
}

double fs_norm(const CMatrix& v) { return std::sqrt(std::max(0.0, 0.5 * (v * v).trace().real())); }

CMatrix log_map(const SpinState& base, const SpinState& target, const Tolerances& tol) {
  check_same_dimension(base, target);
  const double omega = fs_distance(base, target);
  if (omega >= 0.5 * kPi - tol.cut_locus) {
    std::ostringstream msg;
    msg << "omega = " << omega << " is on the cut locus";
    throw Error(ErrorCode::CutLocus, msg.str());
  }
  if (omega == 0.0) return CMatrix::Zero(base.dim(), base.dim());
  CVector sa, sb;
  const CVector& psi = unit_coeffs(base, sa);
  const CVector& t = unit_coeffs(target, sb);
  const Complex overlap = t.dot(psi);
  const Complex e = overlap / std::abs(overlap);
  const CMatrix rho = psi * psi.adjoint();
  const CMatrix cross = e * t * psi.adjoint();
  return omega * (-2.0 / std::tan(omega) * rho + (cross + cross.adjoint()) / std::sin(omega));
}

CMatrix unit_log(const SpinState& base, const SpinState& target, const Tolerances& tol) {
  check_same_dimension(base, target);
  const double omega = fs_distance(base, target);
  if (omega >= 0.5 * kPi - tol.cut_locus) throw Error(ErrorCode::CutLocus, "target is on the cut locus");
  if (omega == 0.0) throw Error(ErrorCode::InvalidArgument, "no direction towards the base point itself");
  CVector sa, sb;
  const CVector& psi = unit_coeffs(base, sa);
  return symmetrized(geodesic_direction(psi, unit_coeffs(target, sb), omega), psi);
}

SpinState exp_map(const SpinState& base, const CMatrix& v) {
  CVector sa;
  const CVector& psi = unit_coeffs(base, sa);
  CVector x = v * psi;
  x -= psi * psi.dot(x);
  const double len = x.norm();
  if (len == 0.0) return SpinState(base.two_spin(), psi);
  return SpinState(base.two_spin(), std::cos(len) * psi + std::sin(len) * x / len);
}

Eigen::VectorXd TangentFrame::components(const CMatrix& v) const {
  Eigen::VectorXd out(dimension());
  for (int i = 0; i < dimension(); ++i) out(i) = 0.5 * (v * elements[i]).trace().real();
  return out;
}

CMatrix TangentFrame::assemble(const Eigen::VectorXd& components) const {
  CMatrix v = CMatrix::Zero(elements.front().rows(), elements.front().cols());
  for (int i = 0; i < dimension(); ++i) v += components(i) * elements[i];
  return v;
}

TangentFrame tangent_frame(const SpinState& base) {
  CVector sa;
  const CVector& psi = unit_coeffs(base, sa);
  const int d = base.dim();
  const CMatrix q = Eigen::HouseholderQR<CMatrix>(CMatrix(psi)).householderQ();
  // The first column of q is psi up to a phase; the rest complete it.
  TangentFrame frame;
  for (int k = 1; k < d; ++k) {
    const CVector e = q.col(k);
    frame.elements.push_back(symmetrized(psi, e));
    frame.elements.push_back(symmetrized(kI * e, psi));
  }
  return frame;
}

SpinState spin1_pair_state(double alpha) {
  const double b = std::sqrt(3.0 + std::cos(2.0 * alpha));
  CVector v(3);
  v << 2.0 / b * std::pow(std::cos(0.5 * alpha), 2), 0.0, -2.0 / b * std::pow(std::sin(0.5 * alpha), 2);
  return SpinState(2, v);
}

TangentFrame spin1_pair_frame(double alpha) {
  const double b = std::sqrt(3.0 + std::cos(2.0 * alpha));
  const double c = std::cos(alpha);
  const double c2 = std::cos(2.0 * alpha);
  CMatrix h12 = CMatrix::Zero(3, 3);
  h12(1, 0) = 2.0 / b * (c + 1.0);
  h12(1, 2) = 2.0 / b * (c - 1.0);
  CMatrix h34 = CMatrix::Zero(3, 3);
  h34(0, 0) = (1.0 - c2) / (b * b);
  h34(0, 2) = -8.0 * std::pow(std::sin(0.5 * alpha), 4) / (b * b);
  h34(2, 0) = (3.0 + c2 + 4.0 * c) / (b * b);
  h34(2, 2) = (c2 - 1.0) / (b * b);
  TangentFrame frame;
  for (const CMatrix& h : {h12, h34}) {
    frame.elements.push_back(0.5 * (h + h.adjoint()));
    frame.elements.push_back(-0.5 * kI * (h - h.adjoint()));
  }
  return frame;
}

const char* to_string(SampleFlag flag) {
  switch (flag) {
    case SampleFlag::Ok: return "ok";
    case SampleFlag::CutLocus: return "cut_locus";
  }
  return "unknown";
}

LogCloud sc_log_cloud(const SpinState& base, int resolution, const Tolerances& tol) {
  return sc_log_cloud(base, resolution, tangent_frame(base), tol);
}

LogCloud sc_log_cloud(const SpinState& base, int resolution, const TangentFrame& frame, const Tolerances& tol) {
  if (resolution < 2) throw Error(ErrorCode::InvalidArgument, "resolution must be at least 2");
  if (!base.is_normalized(tol.normalization)) throw Error(ErrorCode::InvalidArgument, "base state is not normalized");
  const int n = base.two_spin();
  LogCloud cloud;
  cloud.frame = frame;
  auto sample_at = [&](const Direction& d) {
    LogSample s;
    s.theta = d.theta;
    s.phi = d.phi;
    const SpinState sc = sc_state(d, n);
    s.omega = fs_distance(base, sc);
    if (s.omega >= 0.5 * kPi - tol.cut_locus) {
      s.flag = SampleFlag::CutLocus;
    } else {
      s.components = frame.components(log_map(base, sc, tol));
    }
    cloud.samples.push_back(std::move(s));
  };
  for (int i = 0; i < resolution; ++i) {
    for (int j = 0; j < resolution; ++j) {
      sample_at({kPi * i / (resolution - 1), 2.0 * kPi * j / (resolution - 1)});
    }
  }
  CVector sa;
  const CVector& psi = unit_coeffs(base, sa);
  for (const auto& d : star_antipodes(base, tol)) {
    sample_at(d);
    cloud.circles.push_back(cut_circle(psi, sc_state(d, n).coeffs(), frame, resolution, 0.5 * kPi));
  }
  return cloud;
}

Eigen::VectorXd stereographic_projection(const Eigen::VectorXd& u) {
  const Eigen::Index last = u.size() - 1;
  return u.head(last) / (1.0 + u(last));
}

DirectionCloud direction_cloud(const SpinState& base, int resolution, const Tolerances& tol) {
  return direction_cloud(base, resolution, tangent_frame(base), tol);
}

DirectionCloud direction_cloud(const SpinState& base, int resolution, const TangentFrame& frame, const Tolerances& tol) {
  const LogCloud logs = sc_log_cloud(base, resolution, frame, tol);
  DirectionCloud cloud;
  cloud.frame = frame;
  for (const auto& s : logs.samples) {
    DirectionSample d;
    d.theta = s.theta;
    d.phi = s.phi;
    d.flag = s.flag;
    if (s.flag == SampleFlag::Ok) {
      if (s.omega == 0.0) continue;  // the base point itself has no direction
      d.unit = s.components / s.omega;
      d.projected = stereographic_projection(d.unit);
    }
    cloud.samples.push_back(std::move(d));
  }
  for (const auto& circle : logs.circles) {
    std::vector<Eigen::VectorXd> unit, projected;
    for (const auto& v : circle) {
      unit.push_back(v / (0.5 * kPi));
      projected.push_back(stereographic_projection(unit.back()));
    }
    cloud.circles.push_back(std::move(unit));
    cloud.projected_circles.push_back(std::move(projected));
  }
  return cloud;
}

int affine_rank(const LogCloud& cloud, double rel_threshold) {
  std::vector<const Eigen::VectorXd*> rows;
  for (const auto& s : cloud.samples) {
    if (s.flag == SampleFlag::Ok) rows.push_back(&s.components);
  }
  if (rows.size() < 2) return 0;
  Eigen::MatrixXd m(rows.size(), rows.front()->size());
  for (std::size_t i = 0; i < rows.size(); ++i) m.row(static_cast<Eigen::Index>(i)) = rows[i]->transpose();
  m.rowwise() -= m.colwise().mean();
  const Eigen::VectorXd sv = Eigen::JacobiSVD<Eigen::MatrixXd>(m).singularValues();
  if (sv(0) == 0.0) return 0;
  return static_cast<int>((sv.array() > rel_threshold * sv(0)).count());
}

double bargmann_phase(const SpinState& a, const SpinState& b, const SpinState& c, const Tolerances& tol) {
  check_same_dimension(a, b);
  check_same_dimension(b, c);
  const Complex ab = inner(a, b) / (a.norm() * b.norm());
  const Complex bc = inner(b, c) / (b.norm() * c.norm());
  const Complex ca = inner(c, a) / (c.norm() * a.norm());
  if (std::abs(ab) < tol.orthogonal || std::abs(bc) < tol.orthogonal || std::abs(ca) < tol.orthogonal) {
    throw Error(ErrorCode::UndefinedPhase, "two of the states are orthogonal");
  }
  return std::arg(ab * bc * ca);
}

double tangent_angle(const SpinState& base, const SpinState& a, const SpinState& b, const Tolerances& tol) {
  const double wa = fs_distance(a, base);
  const double wb = fs_distance(b, base);
  const double wab = fs_distance(a, b);
  for (double w : {wa, wb}) {
    if (w < tol.degenerate_side || w > 0.5 * kPi - tol.degenerate_side) {
      throw Error(ErrorCode::DegenerateTriangle, "a side at the base point has length 0 or pi/2");
    }
  }
  // With <a|b> = 0 the phase is undefined but multiplies cos(omega_ab) = 0.
  const double big_omega = std::cos(wab) < tol.orthogonal ? 0.0 : bargmann_phase(a, b, base, tol);
  const double c = (std::cos(wab) * std::cos(big_omega) - std::cos(wa) * std::cos(wb)) / (std::sin(wa) * std::sin(wb));
  return std::acos(std::clamp(c, -1.0, 1.0));
}

}  // namespace majorana
