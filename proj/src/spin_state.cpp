#include "majorana/spin_state.hpp"

#include <array>
#include <cmath>
#include <cstdlib>
#include <sstream>

namespace majorana {

namespace {

void check_two_spin(int two_spin) {
  if (two_spin < 1 || two_spin > kMaxTwoSpin) {
    throw Error(ErrorCode::InvalidArgument,
                "2s = " + std::to_string(two_spin) + " outside [1, " +
                    std::to_string(kMaxTwoSpin) + "]");
  }
}

const std::array<std::array<double, kMaxTwoSpin + 1>, kMaxTwoSpin + 1>& binomial_table() {
  static const auto table = [] {
    std::array<std::array<double, kMaxTwoSpin + 1>, kMaxTwoSpin + 1> t{};
    for (int n = 0; n <= kMaxTwoSpin; ++n) {
      t[n][0] = 1.0;
      for (int k = 1; k <= n; ++k) t[n][k] = t[n - 1][k - 1] + (k <= n - 1 ? t[n - 1][k] : 0.0);
    }
    return t;
  }();
  return table;
}

// Coefficients (in powers of y) of the product of linear forms
// (a0 x + a1 y)^p (b0 x + b1 y)^q, with p + q = n.
CVector linear_form_power(Complex a0, Complex a1, int p, Complex b0, Complex b1, int q) {
  CVector c = CVector::Zero(p + q + 1);
  c(0) = 1.0;
  int deg = 0;
  auto multiply = [&](Complex l0, Complex l1) {
    for (int j = deg + 1; j >= 1; --j) c(j) = c(j) * l0 + c(j - 1) * l1;
    c(0) *= l0;
    ++deg;
  };
  for (int i = 0; i < p; ++i) multiply(a0, a1);
  for (int i = 0; i < q; ++i) multiply(b0, b1);
  return c;
}

}  // namespace

double binomial(int n, int k) {
  if (n < 0 || n > kMaxTwoSpin || k < 0 || k > n) return 0.0;
  return binomial_table()[n][k];
}

double sqrt_binomial(int n, int k) { return std::sqrt(binomial(n, k)); }

SpinState::SpinState(int two_spin, CVector coeffs) : two_spin_(two_spin), coeffs_(std::move(coeffs)) {
  check_two_spin(two_spin);
  if (coeffs_.size() != two_spin + 1) {
    throw Error(ErrorCode::InvalidArgument, "spin-" + spin_label() + " state needs " +
                                                std::to_string(two_spin + 1) + " coefficients, got " +
                                                std::to_string(coeffs_.size()));
  }
}

SpinState SpinState::basis(int two_spin, int index) {
  check_two_spin(two_spin);
  CVector c = CVector::Zero(two_spin + 1);
  c(index) = 1.0;
  return SpinState(two_spin, c);
}

bool SpinState::is_normalized(double tol) const { return std::abs(norm() - 1.0) <= tol; }

SpinState SpinState::normalized() const {
  const double n = norm();
  if (n == 0.0) throw Error(ErrorCode::InvalidArgument, "cannot normalize the zero vector");
  return SpinState(two_spin_, coeffs_ / n);
}

SpinState SpinState::phase_fixed(double threshold) const {
  const double scale = coeffs_.cwiseAbs().maxCoeff();
  for (int i = 0; i < dim(); ++i) {
    const double a = std::abs(coeffs_(i));
    if (a > threshold * scale) {
      const Complex phase = std::conj(coeffs_(i)) / a;
      CVector c = coeffs_ * phase;
      c(i) = a;
      return SpinState(two_spin_, c);
    }
  }
  return *this;
}

std::string SpinState::spin_label() const {
  if (two_spin_ % 2 == 0) return std::to_string(two_spin_ / 2);
  return std::to_string(two_spin_) + "/2";
}

Complex inner(const SpinState& a, const SpinState& b) {
  if (a.two_spin() != b.two_spin()) throw Error(ErrorCode::InvalidArgument, "spin mismatch in inner product");
  return a.coeffs().dot(b.coeffs());  // Eigen's dot conjugates the first argument
}

double fidelity(const SpinState& a, const SpinState& b) {
  return std::abs(inner(a, b)) / (a.norm() * b.norm());
}

int parse_two_spin(const std::string& text) {
  const auto slash = text.find('/');
  char* end = nullptr;
  if (slash != std::string::npos) {
    const std::string num = text.substr(0, slash);
    const std::string den = text.substr(slash + 1);
    const long n = std::strtol(num.c_str(), &end, 10);
    if (num.empty() || *end != '\0' || den != "2" || n < 1) {
      throw Error(ErrorCode::Parse, "spin \"" + text + "\" is not of the form N/2");
    }
    if (n % 2 == 0) throw Error(ErrorCode::Parse, "spin \"" + text + "\" should be written as an integer");
    return static_cast<int>(n);
  }
  const double v = std::strtod(text.c_str(), &end);
  if (text.empty() || *end != '\0' || v <= 0.0 || std::abs(2.0 * v - std::round(2.0 * v)) > 1e-12) {
    throw Error(ErrorCode::Parse, "spin \"" + text + "\" is not a positive half-integer");
  }
  return static_cast<int>(std::lround(2.0 * v));
}

SpinMatrices spin_matrices(int two_spin) {
  check_two_spin(two_spin);
  const int d = two_spin + 1;
  const double s = 0.5 * two_spin;
  CMatrix plus = CMatrix::Zero(d, d);
  CMatrix z = CMatrix::Zero(d, d);
  for (int i = 0; i < d; ++i) {
    const double m = s - i;
    z(i, i) = m;
    // S+ |s, m> = sqrt(s(s+1) - m(m+1)) |s, m+1>, and m+1 sits at index i-1.
    if (i > 0) plus(i - 1, i) = std::sqrt(s * (s + 1.0) - m * (m + 1.0));
  }
  const CMatrix minus = plus.adjoint();
  return {0.5 * (plus + minus), Complex(0.0, -0.5) * (plus - minus), z};
}

CVector rotated_basis_state(const Rotation& r, int two_spin, int index) {
  check_two_spin(two_spin);
  const auto& u = r.su2();
  // |up> -> u00 |up> + u10 |down>, |down> -> u01 |up> + u11 |down>; the
  // symmetric basis state |s, s-k> is the monomial x^{N-k} y^k / sqrt(C(N,k)).
  CVector poly = linear_form_power(u(0, 0), u(1, 0), two_spin - index, u(0, 1), u(1, 1), index);
  const double scale = sqrt_binomial(two_spin, index);
  for (int j = 0; j <= two_spin; ++j) poly(j) *= scale / sqrt_binomial(two_spin, j);
  return poly;
}

CMatrix rotation_matrix(const Rotation& r, int two_spin) {
  CMatrix d(two_spin + 1, two_spin + 1);
  for (int k = 0; k <= two_spin; ++k) d.col(k) = rotated_basis_state(r, two_spin, k);
  return d;
}

}  // namespace majorana
