#pragma once

#include <vector>

#include "majorana/spin_state.hpp"

namespace majorana {

/// Points of projective space are handled through any normalized
/// representative; every function below is insensitive to its phase.
bool same_ray(const SpinState& a, const SpinState& b, double tol = 1e-12);

/// omega = arccos |<a|b>|, in [0, pi/2].
double fs_distance(const SpinState& a, const SpinState& b);

/// Unit-speed geodesic from a (t = 0) to b (t = omega). Throws
/// AntipodalTarget when b is orthogonal to a within the cut-locus tolerance.
SpinState geodesic(const SpinState& a, const SpinState& b, double t, const Tolerances& tol = {});

/// Tangent vectors at psi are Hermitian matrices with the norm
/// sqrt(Tr(v^2) / 2).
double fs_norm(const CMatrix& v);

/// log_psi(target) = omega [-2 cot(omega) rho_psi + csc(omega) (e^{i eta}|t><psi| + h.c.)],
/// <t|psi> = cos(omega) e^{i eta}. Throws CutLocus when omega >= pi/2 - tol.
CMatrix log_map(const SpinState& base, const SpinState& target, const Tolerances& tol = {});
/// Unit tangent vector pointing at target (the derivative of the geodesic at t = 0).
CMatrix unit_log(const SpinState& base, const SpinState& target, const Tolerances& tol = {});
/// Endpoint of the geodesic with initial velocity v.
SpinState exp_map(const SpinState& base, const CMatrix& v);

/// Orthonormal Hermitian basis h_i of the tangent space, (1/2)Tr(h_i h_j) = delta_ij.
struct TangentFrame {
  std::vector<CMatrix> elements;

  int dimension() const noexcept { return static_cast<int>(elements.size()); }
  /// v^i = (1/2) Tr(v h_i).
  Eigen::VectorXd components(const CMatrix& v) const;
  CMatrix assemble(const Eigen::VectorXd& components) const;
};

/// |psi><e_k| + h.c. and i(|psi><e_k| - h.c.) for an orthonormal completion
/// e_1..e_N of psi (from a Householder reflection), 2N = 4s elements.
TangentFrame tangent_frame(const SpinState& base);

/// Spin-1 state with stars at (+-sin a, 0, cos a):
/// 2/b (cos^2(a/2), 0, -sin^2(a/2)), b = sqrt(3 + cos 2a).
SpinState spin1_pair_state(double alpha);
/// Closed-form frame at spin1_pair_state(alpha): h1 + i h2 and h3 + i h4
/// given as explicit matrices.
TangentFrame spin1_pair_frame(double alpha);

enum class SampleFlag { Ok, CutLocus };
const char* to_string(SampleFlag flag);

struct LogSample {
  double theta = 0.0;
  double phi = 0.0;
  Eigen::VectorXd components;  // empty for cut-locus samples
  double omega = 0.0;
  SampleFlag flag = SampleFlag::Ok;
};

struct LogCloud {
  std::vector<LogSample> samples;
  TangentFrame frame;
  /// One closed curve per star antipode: the tangent vectors of length pi/2
  /// that all reach it.
  std::vector<std::vector<Eigen::VectorXd>> circles;
};

/// Images log_psi(|n>) over a resolution x resolution equiangular grid
/// (theta = pi i/(K-1), phi = 2 pi j/(K-1)), followed by one sample at each
/// star antipode. Samples within the cut-locus tolerance are flagged.
LogCloud sc_log_cloud(const SpinState& base, int resolution, const Tolerances& tol = {});
LogCloud sc_log_cloud(const SpinState& base, int resolution, const TangentFrame& frame, const Tolerances& tol = {});

struct DirectionSample {
  double theta = 0.0;
  double phi = 0.0;
  Eigen::VectorXd unit;       // components of the unit tangent vector
  Eigen::VectorXd projected;  // u_i / (1 + u_last), i < last
  SampleFlag flag = SampleFlag::Ok;
};

struct DirectionCloud {
  std::vector<DirectionSample> samples;
  TangentFrame frame;
  /// Unit-vector circles and their stereographic images, per star antipode.
  std::vector<std::vector<Eigen::VectorXd>> circles;
  std::vector<std::vector<Eigen::VectorXd>> projected_circles;
};

DirectionCloud direction_cloud(const SpinState& base, int resolution, const Tolerances& tol = {});
DirectionCloud direction_cloud(const SpinState& base, int resolution, const TangentFrame& frame, const Tolerances& tol = {});

/// Stereographic projection of a unit vector from -e_last onto the
/// hyperplane of the other coordinates.
Eigen::VectorXd stereographic_projection(const Eigen::VectorXd& u);

/// Number of singular values of the centered (samples x components) matrix
/// above rel_threshold times the largest. Cut-locus samples are skipped.
int affine_rank(const LogCloud& cloud, double rel_threshold = 1e-6);

/// arg(<a|b><b|c><c|a>). Throws UndefinedPhase when an overlap vanishes.
double bargmann_phase(const SpinState& a, const SpinState& b, const SpinState& c, const Tolerances& tol = {});

/// Angle at base between the geodesics towards a and b, from the side
/// lengths and the Bargmann phase. Throws DegenerateTriangle when a or b is
/// at distance 0 or pi/2 from base.
double tangent_angle(const SpinState& base, const SpinState& a, const SpinState& b, const Tolerances& tol = {});

}  // namespace majorana
