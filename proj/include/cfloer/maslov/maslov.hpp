#pragma once

// Numerical Maslov index of loops of Lagrangian planes in C^n.
//
// A Lagrangian plane is A R^n for a unitary A; B(A) = A A^T is a symmetric
// unitary matrix that depends only on the plane. The Maslov index of a loop
// is the degree of t -> det B(A(t)), measured here by accumulating the
// argument of det B along samples.

#include <cmath>
#include <complex>
#include <functional>
#include <numbers>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "cfloer/discs/blaschke.hpp"
#include "cfloer/errors.hpp"
#include "cfloer/scalars/approx_complex.hpp"

namespace cfloer {

using ComplexMatrix = Eigen::MatrixXcd;

/// Largest accepted argument step between consecutive samples. Anything
/// close to pi is ambiguous, so the check is kept well below it.
inline constexpr double kMaxArgumentStep = std::numbers::pi / 2;
/// Largest accepted distance of the accumulated winding from an integer.
inline constexpr double kMaxWindingResidue = 0.1;
inline constexpr std::size_t kDefaultLoopSamples = 256;
inline constexpr std::size_t kMaxLoopSamples = std::size_t{1} << 20;

class LagrangianFrame {
 public:
  explicit LagrangianFrame(ComplexMatrix a, double tol = kDefaultTolerance) : a_(std::move(a)) {
    if (a_.rows() != a_.cols() || a_.rows() == 0) throw FrameError("frame must be a nonempty square matrix");
    const double defect = (a_ * a_.adjoint() - ComplexMatrix::Identity(a_.rows(), a_.cols())).cwiseAbs().maxCoeff();
    if (!(defect <= tol * std::max<double>(1.0, static_cast<double>(a_.rows()))))
      throw FrameError("frame is not unitary (defect " + std::to_string(defect) + ")");
  }

  /// diag(e^{i phi_1}, ..., e^{i phi_n}) R^n
  static LagrangianFrame diagonal(const std::vector<Complex>& phases) {
    ComplexMatrix a = ComplexMatrix::Zero(static_cast<Eigen::Index>(phases.size()), static_cast<Eigen::Index>(phases.size()));
    for (std::size_t j = 0; j < phases.size(); ++j) a(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(j)) = phases[j] / std::abs(phases[j]);
    return LagrangianFrame(std::move(a));
  }

  const ComplexMatrix& matrix() const noexcept { return a_; }
  Eigen::Index dim() const noexcept { return a_.rows(); }

 private:
  ComplexMatrix a_;
};

/// A A^T: symmetric and unitary, constant on the plane A R^n.
inline ComplexMatrix b_map(const LagrangianFrame& frame) { return frame.matrix() * frame.matrix().transpose(); }

/// Samples of a closed loop at t_k = k/N, k = 0..N-1; the sample at t = 1 is
/// the first one again.
using FrameLoop = std::vector<LagrangianFrame>;

/// Total argument change of a closed, nonvanishing curve, in turns. Checks
/// every step (including the closing one) against kMaxArgumentStep.
inline double winding_turns(std::span<const Complex> samples, double tol = kDefaultTolerance) {
  if (samples.empty()) throw UndersampledLoop("no samples");
  double total = 0.0;
  for (std::size_t k = 0; k < samples.size(); ++k) {
    const Complex a = samples[k], b = samples[(k + 1) % samples.size()];
    if (std::abs(a) < tol) throw DomainError("curve passes within tolerance of 0");
    const double step = std::arg(b / a);
    if (std::abs(step) > kMaxArgumentStep) throw UndersampledLoop("argument step " + std::to_string(step) + " too large");
    total += step;
  }
  return total / (2.0 * std::numbers::pi);
}

/// Winding number around 0 of a closed sampled curve.
inline int winding_number(std::span<const Complex> samples, double tol = kDefaultTolerance) {
  const double turns = winding_turns(samples, tol);
  const double rounded = std::round(turns);
  if (std::abs(turns - rounded) >= kMaxWindingResidue) throw UndersampledLoop("winding residue too large");
  return static_cast<int>(rounded);
}

/// Samples f on N equally spaced points of [0, 1), doubling N from 256 until
/// the winding is well defined.
inline int adaptive_winding(const std::function<Complex(double)>& f, double tol = kDefaultTolerance) {
  for (std::size_t n = kDefaultLoopSamples; n <= kMaxLoopSamples; n *= 2) {
    std::vector<Complex> s(n);
    for (std::size_t k = 0; k < n; ++k) s[k] = f(static_cast<double>(k) / static_cast<double>(n));
    try {
      return winding_number(s, tol);
    } catch (const UndersampledLoop&) {
    }
  }
  throw UndersampledLoop("winding not resolved at " + std::to_string(kMaxLoopSamples) + " samples");
}

inline int loop_maslov(const FrameLoop& loop, double tol = kDefaultTolerance) {
  std::vector<Complex> dets;
  dets.reserve(loop.size());
  for (const auto& f : loop) dets.push_back(b_map(f).determinant());
  return winding_number(dets, tol);
}

/// Maslov index of a loop given as a function of t in [0, 1], sampled adaptively.
inline int loop_maslov(const std::function<LagrangianFrame(double)>& loop, double tol = kDefaultTolerance) {
  return adaptive_winding([&](double t) { return Complex(b_map(loop(t)).determinant()); }, tol);
}

/// Maslov index of a disc that misses the hyperplane {x_0 = 0}, from its
/// boundary loop. In the chart x_0 = 1 the boundary runs through the points
/// u_j = gamma_j / gamma_0 of T^n, whose tangent plane is diag(i u_j) R^n.
inline int disc_boundary_maslov(const BlaschkeDisc& d, double tol = kDefaultTolerance) {
  if (d.component(0).degree() != 0) throw ChartError("gamma_0 has zeros: the disc meets the hyperplane x_0 = 0");
  const int n = d.rank();
  return loop_maslov(
      [&](double t) {
        const Complex z = std::polar(1.0, 2.0 * std::numbers::pi * t);
        const Complex g0 = d.component(0)(z);
        std::vector<Complex> phases;
        for (int j = 1; j <= n; ++j) phases.push_back(Complex(0.0, 1.0) * d.component(j)(z) / g0);
        return LagrangianFrame::diagonal(phases);
      },
      tol);
}

}  // namespace cfloer
