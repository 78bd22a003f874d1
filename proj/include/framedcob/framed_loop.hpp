#pragma once

#include <Eigen/Dense>

#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "framedcob/errors.hpp"
#include "framedcob/spin.hpp"

namespace framedcob {

using Vector = Eigen::VectorXd;

inline constexpr double kFrameOrthonormalTol = 1e-9;
inline constexpr double kFrameTangentTol = 1e-6;
inline constexpr double kDisjointTol = 1e-6;

/**
 * Closed polygon in R^N with a normal frame at every vertex.
 *
 * `frames[i]` is N x (N-1); its columns are nu^1(p_i), ..., nu^{N-1}(p_i).
 */
struct FramedLoop {
  std::size_t ambient = 0;
  std::vector<Vector> points;
  std::vector<Matrix> frames;

  std::size_t samples() const { return points.size(); }
};

struct FramedLink {
  std::size_t ambient = 0;
  std::vector<FramedLoop> components;
};

/// Normalized central difference p_{i+1} - p_{i-1}.
inline Vector discrete_tangent(const FramedLoop& loop, std::size_t i) {
  const std::size_t m = loop.points.size();
  Vector d = loop.points[(i + 1) % m] - loop.points[(i + m - 1) % m];
  const double len = d.norm();
  if (len < 1e-12) throw InputError("framed loop: degenerate tangent at sample " + std::to_string(i));
  return d / len;
}

namespace detail {

inline Matrix tangent_frame_matrix(const Vector& tau, const Matrix& frame) {
  Matrix h(tau.size(), frame.cols() + 1);
  h.col(0) = tau;
  h.rightCols(frame.cols()) = frame;
  return h;
}

// Gram-Schmidt on the columns, in order (twice, for stability).
inline Matrix gram_schmidt(Matrix m) {
  for (int pass = 0; pass < 2; ++pass)
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      for (Eigen::Index k = 0; k < j; ++k) m.col(j) -= m.col(k).dot(m.col(j)) * m.col(k);
      const double len = m.col(j).norm();
      if (len < 1e-12) throw InputError("framed loop: frame vectors are linearly dependent");
      m.col(j) /= len;
    }
  return m;
}

} // namespace detail

/// Throws InputError unless the loop satisfies the framed-loop invariants.
inline void validate_framed_loop(const FramedLoop& loop) {
  const std::size_t N = loop.ambient;
  const std::size_t m = loop.points.size();
  if (N < 2) throw InputError("framed loop: ambient dimension must be at least 2");
  if (m < 3) throw InputError("framed loop: need at least 3 samples");
  if (loop.frames.size() != m) throw InputError("framed loop: " + std::to_string(loop.frames.size()) +
                                                " frames for " + std::to_string(m) + " points");
  for (std::size_t i = 0; i < m; ++i) {
    if (static_cast<std::size_t>(loop.points[i].size()) != N)
      throw InputError("framed loop: point " + std::to_string(i) + " has the wrong dimension");
    const auto& f = loop.frames[i];
    if (static_cast<std::size_t>(f.rows()) != N || static_cast<std::size_t>(f.cols()) != N - 1)
      throw InputError("framed loop: frame " + std::to_string(i) + " must have N-1 vectors of length N");
  }
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j)
      if ((loop.points[i] - loop.points[j]).norm() < 1e-12)
        throw InputError("framed loop: samples " + std::to_string(i) + " and " + std::to_string(j) + " coincide");
  for (std::size_t i = 0; i < m; ++i) {
    const auto& f = loop.frames[i];
    const Matrix gram = f.transpose() * f - Matrix::Identity(f.cols(), f.cols());
    if (gram.cwiseAbs().maxCoeff() > kFrameOrthonormalTol)
      throw InputError("framed loop: frame " + std::to_string(i) + " is not orthonormal");
    const Vector tau = discrete_tangent(loop, i);
    if ((f.transpose() * tau).cwiseAbs().maxCoeff() > kFrameTangentTol)
      throw InputError("framed loop: frame " + std::to_string(i) + " is not normal to the tangent");
    if (detail::tangent_frame_matrix(tau, f).determinant() <= 0)
      throw InputError("framed loop: (tangent, frame) at sample " + std::to_string(i) + " is negatively oriented");
  }
}

inline FramedLink make_link(std::vector<FramedLoop> components) {
  if (components.empty()) throw InputError("framed link: no components");
  FramedLink link{components.front().ambient, std::move(components)};
  for (const auto& c : link.components) {
    if (c.ambient != link.ambient) throw InputError("framed link: components live in different ambient spaces");
    validate_framed_loop(c);
  }
  for (std::size_t a = 0; a < link.components.size(); ++a)
    for (std::size_t b = a + 1; b < link.components.size(); ++b)
      for (const auto& p : link.components[a].points)
        for (const auto& q : link.components[b].points)
          if ((p - q).norm() <= kDisjointTol)
            throw InputError("framed link: components " + std::to_string(a) + " and " + std::to_string(b) + " intersect");
  return link;
}

inline FramedLink disjoint_union(const FramedLink& a, const FramedLink& b) {
  auto parts = a.components;
  parts.insert(parts.end(), b.components.begin(), b.components.end());
  return make_link(std::move(parts));
}

/**
 * Unit circle in the (e1, e2)-plane of R^N sampled at m points. The frame is
 * (inward normal, e3, ..., eN) with the first two vectors rotated k full turns
 * in their own plane over one traversal; k = 0 is the framing induced from R^2.
 */
inline FramedLoop standard_circle(std::size_t N, long twists, std::size_t m) {
  if (N < 3) throw InputError("standard_circle: ambient dimension must be at least 3");
  if (m < 3) throw InputError("standard_circle: need at least 3 samples");
  FramedLoop loop;
  loop.ambient = N;
  const auto n = static_cast<Eigen::Index>(N);
  for (std::size_t i = 0; i < m; ++i) {
    const double t = 2.0 * std::numbers::pi * static_cast<double>(i) / static_cast<double>(m);
    Vector p = Vector::Zero(n);
    p(0) = std::cos(t);
    p(1) = std::sin(t);
    Vector inward = -p;
    Vector up = Vector::Unit(n, 2);
    const double kt = static_cast<double>(twists) * t;
    Matrix f(n, n - 1);
    f.col(0) = std::cos(kt) * inward + std::sin(kt) * up;
    f.col(1) = -std::sin(kt) * inward + std::cos(kt) * up;
    for (Eigen::Index j = 3; j < n; ++j) f.col(j - 1) = Vector::Unit(n, j);
    loop.points.push_back(std::move(p));
    loop.frames.push_back(std::move(f));
  }
  return loop;
}

inline FramedLoop translate(FramedLoop loop, const Vector& offset) {
  if (static_cast<std::size_t>(offset.size()) != loop.ambient) throw InputError("translate: dimension mismatch");
  for (auto& p : loop.points) p += offset;
  return loop;
}

/// Apply a rigid rotation q of R^N to points and frames.
inline FramedLoop transform(FramedLoop loop, const Matrix& q) {
  if (static_cast<std::size_t>(q.rows()) != loop.ambient || !is_special_orthogonal(q))
    throw InputError("transform: expected a special orthogonal matrix of the ambient size");
  for (auto& p : loop.points) p = q * p;
  for (auto& f : loop.frames) f = q * f;
  return loop;
}

/// New frames nu'_i = sum_j g_ij nu^j, pointwise.
inline FramedLoop twist(FramedLoop loop, const std::vector<Matrix>& g) {
  const auto k = static_cast<Eigen::Index>(loop.ambient) - 1;
  if (g.size() != loop.samples())
    throw InputError("twist: " + std::to_string(g.size()) + " matrices for " + std::to_string(loop.samples()) + " samples");
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (g[i].rows() != k || g[i].cols() != k || !is_special_orthogonal(g[i]))
      throw InputError("twist: matrix " + std::to_string(i) + " is not in SO(N-1)");
    loop.frames[i] = loop.frames[i] * g[i].transpose();
  }
  return loop;
}

/// Suspension of the framing: R^N -> R^{N+1}, appending e_{N+1} to every frame.
inline FramedLoop stabilize(const FramedLoop& loop) {
  FramedLoop out;
  out.ambient = loop.ambient + 1;
  const auto n = static_cast<Eigen::Index>(out.ambient);
  for (std::size_t i = 0; i < loop.samples(); ++i) {
    Vector p = Vector::Zero(n);
    p.head(n - 1) = loop.points[i];
    Matrix f = Matrix::Zero(n, n - 1);
    f.topLeftCorner(n - 1, n - 2) = loop.frames[i];
    f(n - 1, n - 2) = 1.0;
    out.points.push_back(std::move(p));
    out.frames.push_back(std::move(f));
  }
  return out;
}

inline FramedLink stabilize(const FramedLink& link) {
  std::vector<FramedLoop> parts;
  for (const auto& c : link.components) parts.push_back(stabilize(c));
  return make_link(std::move(parts));
}

/// Project each frame off the discrete tangent and re-orthonormalize (tangent first).
inline FramedLoop reorthonormalize(FramedLoop loop) {
  for (std::size_t i = 0; i < loop.samples(); ++i) {
    const Vector tau = discrete_tangent(loop, i);
    Matrix h = detail::gram_schmidt(detail::tangent_frame_matrix(tau, loop.frames[i]));
    loop.frames[i] = h.rightCols(h.cols() - 1);
  }
  return loop;
}

/// Insert chord midpoints with averaged frames, then re-orthonormalize.
inline FramedLoop refine(const FramedLoop& loop) {
  FramedLoop out;
  out.ambient = loop.ambient;
  const std::size_t m = loop.samples();
  for (std::size_t i = 0; i < m; ++i) {
    const std::size_t j = (i + 1) % m;
    out.points.push_back(loop.points[i]);
    out.frames.push_back(loop.frames[i]);
    out.points.push_back(0.5 * (loop.points[i] + loop.points[j]));
    out.frames.push_back(0.5 * (loop.frames[i] + loop.frames[j]));
  }
  return reorthonormalize(std::move(out));
}

/// Per-sample matrix with columns (tau, nu^1, ..., nu^{N-1}), Gram-Schmidt from tau.
inline RotationLoop h_loop(const FramedLoop& loop) {
  validate_framed_loop(loop);
  RotationLoop out{loop.ambient, {}};
  for (std::size_t i = 0; i < loop.samples(); ++i) {
    const Vector tau = discrete_tangent(loop, i);
    Matrix h = detail::gram_schmidt(detail::tangent_frame_matrix(tau, loop.frames[i]));
    if (h.determinant() <= 0) throw InputError("h_loop: negatively oriented frame at sample " + std::to_string(i));
    out.steps.push_back(std::move(h));
  }
  return out;
}

struct ResidueReport {
  std::vector<Pi1Class> classes;  // one per component
  std::size_t components = 0;
  int residue = 0;
};

inline ResidueReport residue_report(const FramedLink& link) {
  if (link.ambient < 3 || link.ambient > CliffordElement::max_dim)
    throw InputError("residue: ambient dimension " + std::to_string(link.ambient) + " outside [3, 8]");
  if (link.components.empty()) throw InputError("residue: empty link");
  ResidueReport rep;
  rep.components = link.components.size();
  int sum = static_cast<int>(rep.components % 2);
  for (const auto& c : link.components) {
    rep.classes.push_back(pi1_class(h_loop(c)));
    sum += rep.classes.back().bit();
  }
  rep.residue = sum % 2;
  return rep;
}

/// Res = sum of pi_1(SO(N)) classes of the tangent-frame loops + #components, mod 2.
inline int residue(const FramedLink& link) { return residue_report(link).residue; }

inline int residue(const FramedLoop& loop) { return residue(make_link({loop})); }

} // namespace framedcob
