#pragma once

#include <Eigen/Dense>

#include <complex>

namespace biframe {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using Index = Eigen::Index;

// Default thresholds. Every operation that certifies or truncates takes
// these as parameters; the constants only fix the defaults.
inline constexpr double kDefaultTol = 1e-9;      // verdict / residual tolerance
inline constexpr double kDefaultRankTol = 1e-12; // relative singular-value cutoff

/// Inner product with the convention <x, y> = sum_k x_k * conj(y_k),
/// linear in the first argument. Eigen's dot() conjugates its first
/// argument, so the operands are flipped here.
inline Complex inner(const Vector& x, const Vector& y) { return y.dot(x); }

/// <M f, f> under the same convention. Real whenever M is Hermitian.
inline Complex quadratic_form(const Matrix& m, const Vector& f) { return f.dot(m * f); }

}  // namespace biframe
