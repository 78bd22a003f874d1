#pragma once

#include <Eigen/Dense>

#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "framedcob/clifford.hpp"
#include "framedcob/errors.hpp"

namespace framedcob {

using Matrix = Eigen::MatrixXd;

inline constexpr double kOrthogonalityTol = 1e-9;
inline constexpr double kStepBound = 0.5;
inline constexpr double kEndpointTol = 1e-6;

/// Cyclic sequence of special orthogonal n x n matrices.
struct RotationLoop {
  std::size_t n = 0;
  std::vector<Matrix> steps;
};

/// Class in pi_1(SO(n)): integer winding for n = 2, a bit for n >= 3.
struct Pi1Class {
  std::size_t n = 0;
  long value = 0;

  int bit() const { return static_cast<int>(((value % 2) + 2) % 2); }
  friend bool operator==(const Pi1Class&, const Pi1Class&) = default;
};

inline double operator_norm(const Matrix& m) {
  if (m.size() == 0) return 0.0;
  Eigen::JacobiSVD<Matrix> svd(m);
  return svd.singularValues()(0);
}

inline bool is_special_orthogonal(const Matrix& r, double tol = kOrthogonalityTol) {
  if (r.rows() != r.cols() || r.rows() == 0) return false;
  const Matrix defect = r.transpose() * r - Matrix::Identity(r.rows(), r.cols());
  return defect.cwiseAbs().maxCoeff() < tol && std::abs(r.determinant() - 1.0) < tol;
}

/// Matrix exponential by scaling and squaring with a Taylor core.
inline Matrix matrix_exp(const Matrix& a) {
  const auto n = a.rows();
  double norm = a.cwiseAbs().colwise().sum().maxCoeff();
  int squarings = 0;
  while (norm > 0.25) {
    norm *= 0.5;
    ++squarings;
  }
  const Matrix x = a / std::ldexp(1.0, squarings);
  Matrix sum = Matrix::Identity(n, n);
  Matrix term = sum;
  for (int k = 1; k < 40; ++k) {
    term = term * x / k;
    sum += term;
    if (term.cwiseAbs().maxCoeff() < 1e-18) break;
  }
  for (int i = 0; i < squarings; ++i) sum = sum * sum;
  return sum;
}

/// Principal logarithm of a rotation within operator-norm distance 0.5 of the
/// identity, returned exactly skew-symmetric.
inline Matrix rotation_log(const Matrix& r) {
  if (r.rows() != r.cols()) throw InputError("rotation_log: matrix is not square");
  const auto n = r.rows();
  const Matrix x = r - Matrix::Identity(n, n);
  const double dist = operator_norm(x);
  if (dist >= kStepBound)
    throw NumericalError("rotation_log: step too coarse (|R - I| = " + std::to_string(dist) +
                         " >= 0.5); refine the sampling");
  // log(I + X) = X - X^2/2 + X^3/3 - ...
  Matrix sum = Matrix::Zero(n, n);
  Matrix power = x;
  for (int k = 1; k < 80; ++k) {
    sum += ((k % 2 == 1) ? 1.0 : -1.0) / k * power;
    power = power * x;
    if (power.cwiseAbs().maxCoeff() < 1e-18) break;
  }
  return 0.5 * (sum - sum.transpose());
}

/// Lift of exp(A) to Spin(n): exp(1/2 sum_{j<k} A_jk e_j e_k).
inline CliffordElement clifford_lift_step(const Matrix& a) {
  if (a.rows() != a.cols()) throw InputError("clifford_lift_step: matrix is not square");
  if ((a + a.transpose()).cwiseAbs().maxCoeff() > 1e-12) throw InputError("clifford_lift_step: matrix is not skew-symmetric");
  return clifford_exp(CliffordElement::bivector(0.5 * a));
}

/// Block-diagonal embedding diag(I_offset, r, I_rest) into SO(n).
inline Matrix block_embed(const Matrix& r, Eigen::Index n, Eigen::Index offset) {
  if (offset + r.rows() > n) throw InputError("block_embed: block does not fit");
  Matrix out = Matrix::Identity(n, n);
  out.block(offset, offset, r.rows(), r.cols()) = r;
  return out;
}

inline RotationLoop block_embed(const RotationLoop& loop, std::size_t n, std::size_t offset) {
  RotationLoop out{n, {}};
  for (const auto& s : loop.steps)
    out.steps.push_back(block_embed(s, static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(offset)));
  return out;
}

/// Throws unless every step is special orthogonal and consecutive steps
/// (cyclically) are within the step bound.
inline void validate_loop(const RotationLoop& loop) {
  if (loop.n < 2 || loop.n > CliffordElement::max_dim)
    throw InputError("rotation loop: n = " + std::to_string(loop.n) + " outside [2, 8]");
  if (loop.steps.empty()) throw InputError("rotation loop: no steps");
  for (std::size_t i = 0; i < loop.steps.size(); ++i) {
    const auto& r = loop.steps[i];
    if (static_cast<std::size_t>(r.rows()) != loop.n || static_cast<std::size_t>(r.cols()) != loop.n)
      throw InputError("rotation loop: step " + std::to_string(i) + " has the wrong size");
    if (!is_special_orthogonal(r)) throw InputError("rotation loop: step " + std::to_string(i) + " is not special orthogonal");
  }
}

struct LiftReport {
  Pi1Class cls;
  CliffordElement endpoint;          // product of step lifts (n >= 3)
  double max_adjoint_residual = 0.0; // only filled when requested
};

/// Computes the pi_1 class of a loop, optionally checking every lifted step
/// against its rotation through the adjoint action.
inline LiftReport lift_loop(const RotationLoop& loop, bool check_adjoint = false) {
  validate_loop(loop);
  const std::size_t m = loop.steps.size();
  LiftReport rep;
  rep.cls.n = loop.n;
  if (loop.n == 2) {
    double total = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
      const Matrix delta = loop.steps[i].transpose() * loop.steps[(i + 1) % m];
      if (operator_norm(delta - Matrix::Identity(2, 2)) >= kStepBound)
        throw NumericalError("pi1_class: step " + std::to_string(i) + " too coarse; refine the sampling");
      total += std::atan2(delta(1, 0), delta(0, 0));
    }
    rep.cls.value = std::lround(total / (2.0 * std::numbers::pi));
    return rep;
  }
  CliffordElement product = CliffordElement::scalar(loop.n, 1.0);
  for (std::size_t i = 0; i < m; ++i) {
    const Matrix delta = loop.steps[i].transpose() * loop.steps[(i + 1) % m];
    const Matrix gen = rotation_log(delta);
    const CliffordElement s = clifford_lift_step(gen);
    if (check_adjoint) rep.max_adjoint_residual = std::max(rep.max_adjoint_residual, adjoint_residual(s, delta));
    product = product * s;
  }
  rep.endpoint = product;
  if (product.distance_to_scalar(1.0) < kEndpointTol)
    rep.cls.value = 0;
  else if (product.distance_to_scalar(-1.0) < kEndpointTol)
    rep.cls.value = 1;
  else
    throw NumericalError("pi1_class: lifted endpoint is near neither +1 nor -1 (scalar part " +
                         std::to_string(product.scalar_part()) + "); refine the sampling");
  return rep;
}

inline Pi1Class pi1_class(const RotationLoop& loop) { return lift_loop(loop).cls; }

/// Loop traversal followed by a second loop; both must start at the identity.
inline RotationLoop concatenate(const RotationLoop& a, const RotationLoop& b) {
  if (a.n != b.n) throw InputError("concatenate: loops live in different SO(n)");
  const Matrix id = Matrix::Identity(static_cast<Eigen::Index>(a.n), static_cast<Eigen::Index>(a.n));
  if (a.steps.empty() || b.steps.empty() || !a.steps.front().isApprox(id, 1e-12) || !b.steps.front().isApprox(id, 1e-12))
    throw InputError("concatenate: both loops must start at the identity");
  RotationLoop out = a;
  out.steps.insert(out.steps.end(), b.steps.begin(), b.steps.end());
  return out;
}

/// Insert the geodesic midpoint R_i exp(log(R_i^T R_{i+1}) / 2) between consecutive steps.
inline RotationLoop subdivide(const RotationLoop& loop) {
  RotationLoop out{loop.n, {}};
  const std::size_t m = loop.steps.size();
  for (std::size_t i = 0; i < m; ++i) {
    const Matrix& r = loop.steps[i];
    const Matrix delta = r.transpose() * loop.steps[(i + 1) % m];
    out.steps.push_back(r);
    out.steps.push_back(r * matrix_exp(0.5 * rotation_log(delta)));
  }
  return out;
}

/// Loop t -> exp(2 pi w t P) in the (i, j) coordinate plane, m samples, starting at the identity.
inline RotationLoop planar_loop(std::size_t n, std::size_t i, std::size_t j, long windings, std::size_t samples) {
  RotationLoop out{n, {}};
  for (std::size_t k = 0; k < samples; ++k) {
    const double theta = 2.0 * std::numbers::pi * static_cast<double>(windings) * static_cast<double>(k) /
                         static_cast<double>(samples);
    Matrix r = Matrix::Identity(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
    const auto a = static_cast<Eigen::Index>(i);
    const auto b = static_cast<Eigen::Index>(j);
    r(a, a) = std::cos(theta);
    r(b, b) = std::cos(theta);
    r(a, b) = -std::sin(theta);
    r(b, a) = std::sin(theta);
    out.steps.push_back(std::move(r));
  }
  return out;
}

} // namespace framedcob
