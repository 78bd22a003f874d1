#pragma once

#include <Eigen/Dense>

#include <bit>
#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "framedcob/errors.hpp"

namespace framedcob {

/**
 * Element of the real Clifford algebra Cl(n) with positive definite
 * signature, e_i^2 = +1 and e_i e_j = -e_j e_i for i != j.
 *
 * Coefficients are indexed by blade bitmask: bit i set means e_{i+1} is a
 * factor, factors in ascending order. Spin(n) elements live in the even part;
 * odd blades are only needed to test the adjoint action on vectors.
 */
class CliffordElement {
public:
  static constexpr std::size_t max_dim = 8;

  CliffordElement() = default;
  explicit CliffordElement(std::size_t n) : n_(n), coeffs_(std::size_t{1} << check_dim(n), 0.0) {}

  static CliffordElement scalar(std::size_t n, double value) {
    CliffordElement c(n);
    c.coeffs_[0] = value;
    return c;
  }

  /// Basis vector e_{i+1} (zero-based i).
  static CliffordElement vector_basis(std::size_t n, std::size_t i) {
    CliffordElement c(n);
    c.coeffs_[std::size_t{1} << i] = 1.0;
    return c;
  }

  /// Bivector sum_{j<k} w(j,k) e_j e_k; only the strict upper triangle of w is read.
  static CliffordElement bivector(const Eigen::MatrixXd& w) {
    const auto n = static_cast<std::size_t>(w.rows());
    CliffordElement c(n);
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k)
        c.coeffs_[(std::size_t{1} << j) | (std::size_t{1} << k)] = w(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(k));
    return c;
  }

  std::size_t dim() const { return n_; }
  std::size_t size() const { return coeffs_.size(); }

  double operator[](std::size_t blade) const { return coeffs_[blade]; }
  double& operator[](std::size_t blade) { return coeffs_[blade]; }

  double scalar_part() const { return coeffs_[0]; }

  static int grade(std::size_t blade) { return std::popcount(blade); }

  // Sign from reordering e_A e_B into ascending order (no metric signs since e_i^2 = +1).
  static int reorder_sign(std::size_t a, std::size_t b) {
    int swaps = 0;
    a >>= 1;
    while (a != 0) {
      swaps += std::popcount(a & b);
      a >>= 1;
    }
    return (swaps & 1) ? -1 : 1;
  }

  friend CliffordElement operator*(const CliffordElement& x, const CliffordElement& y) {
    x.check_same(y);
    CliffordElement out(x.n_);
    for (std::size_t a = 0; a < x.coeffs_.size(); ++a) {
      const double xa = x.coeffs_[a];
      if (xa == 0.0) continue;
      for (std::size_t b = 0; b < y.coeffs_.size(); ++b) {
        const double yb = y.coeffs_[b];
        if (yb == 0.0) continue;
        out.coeffs_[a ^ b] += reorder_sign(a, b) * xa * yb;
      }
    }
    return out;
  }

  friend CliffordElement operator+(CliffordElement x, const CliffordElement& y) {
    x.check_same(y);
    for (std::size_t i = 0; i < x.coeffs_.size(); ++i) x.coeffs_[i] += y.coeffs_[i];
    return x;
  }

  friend CliffordElement operator-(CliffordElement x, const CliffordElement& y) {
    x.check_same(y);
    for (std::size_t i = 0; i < x.coeffs_.size(); ++i) x.coeffs_[i] -= y.coeffs_[i];
    return x;
  }

  friend CliffordElement operator*(double s, CliffordElement x) {
    for (auto& c : x.coeffs_) c *= s;
    return x;
  }

  /// Reversion: grade-k blades pick up (-1)^{k(k-1)/2}.
  CliffordElement reverse() const {
    CliffordElement out = *this;
    for (std::size_t b = 0; b < coeffs_.size(); ++b) {
      const int k = grade(b);
      if ((k * (k - 1) / 2) % 2 == 1) out.coeffs_[b] = -out.coeffs_[b];
    }
    return out;
  }

  /// Scalar part of x * reverse(x); equals 1 on Spin(n).
  double norm_squared() const {
    double acc = 0.0;
    for (double c : coeffs_) acc += c * c;
    return acc;
  }

  double max_abs() const {
    double m = 0.0;
    for (double c : coeffs_) m = std::max(m, std::abs(c));
    return m;
  }

  double l1_norm() const {
    double acc = 0.0;
    for (double c : coeffs_) acc += std::abs(c);
    return acc;
  }

  bool is_even() const {
    for (std::size_t b = 0; b < coeffs_.size(); ++b)
      if (grade(b) % 2 == 1 && coeffs_[b] != 0.0) return false;
    return true;
  }

  /// Largest |coefficient| difference from the scalar `value`.
  double distance_to_scalar(double value) const {
    double m = std::abs(coeffs_[0] - value);
    for (std::size_t b = 1; b < coeffs_.size(); ++b) m = std::max(m, std::abs(coeffs_[b]));
    return m;
  }

private:
  static std::size_t check_dim(std::size_t n) {
    if (n == 0 || n > max_dim) throw InputError("CliffordElement: dimension " + std::to_string(n) + " outside [1, 8]");
    return n;
  }
  void check_same(const CliffordElement& other) const {
    if (other.n_ != n_) throw InputError("CliffordElement: dimension mismatch");
  }

  std::size_t n_ = 0;
  std::vector<double> coeffs_;
};

/// exp of a Clifford element by Taylor series, with scaling and squaring when
/// the argument is not small. Truncation below 1e-17 per term.
inline CliffordElement clifford_exp(const CliffordElement& x) {
  int squarings = 0;
  double scale = 1.0;
  const double mag = x.l1_norm();  // submultiplicative: |xy|_1 <= |x|_1 |y|_1
  while (mag * scale > 0.5) {
    scale *= 0.5;
    ++squarings;
  }
  const CliffordElement y = scale * x;
  CliffordElement sum = CliffordElement::scalar(x.dim(), 1.0);
  CliffordElement term = sum;
  for (int k = 1; k < 60; ++k) {
    term = (1.0 / k) * (term * y);
    sum = sum + term;
    if (term.max_abs() < 1e-17) break;
  }
  for (int i = 0; i < squarings; ++i) sum = sum * sum;
  return sum;
}

/// Matrix M with s e_j s^{-1} = sum_i M(i,j) e_i, for s in Spin(n) (inverse taken as reversion).
inline Eigen::MatrixXd adjoint_matrix(const CliffordElement& s) {
  const std::size_t n = s.dim();
  const auto inv = s.reverse();
  Eigen::MatrixXd m(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    auto img = s * CliffordElement::vector_basis(n, j) * inv;
    for (std::size_t i = 0; i < n; ++i)
      m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = img[std::size_t{1} << i];
  }
  return m;
}

/// Largest deviation of s e_j s^{-1} from sum_i R(i,j) e_i over all j and all
/// blade coefficients (non-vector parts must vanish).
inline double adjoint_residual(const CliffordElement& s, const Eigen::MatrixXd& r) {
  const std::size_t n = s.dim();
  if (static_cast<std::size_t>(r.rows()) != n || static_cast<std::size_t>(r.cols()) != n)
    throw InputError("adjoint_residual: matrix size mismatch");
  const auto inv = s.reverse();
  double worst = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    auto img = s * CliffordElement::vector_basis(n, j) * inv;
    for (std::size_t b = 0; b < img.size(); ++b) {
      double want = 0.0;
      if (std::popcount(b) == 1) want = r(std::countr_zero(b), static_cast<Eigen::Index>(j));
      worst = std::max(worst, std::abs(img[b] - want));
    }
  }
  return worst;
}

} // namespace framedcob
