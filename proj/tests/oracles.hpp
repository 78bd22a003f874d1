#pragma once

// Brute-force reference computations used only by the tests. None of these
// call into the code paths they are used to check.

#include <Eigen/Dense>

#include <array>
#include <cmath>
#include <cstdint>
#include <map>
#include <numeric>
#include <random>
#include <vector>

#include "framedcob/framedcob.hpp"

namespace oracle {

using framedcob::BigInt;
using framedcob::IntMatrix;

inline BigInt det_laplace(const std::vector<std::vector<BigInt>>& m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  if (n == 1) return m[0][0];
  BigInt acc = 0;
  for (std::size_t c = 0; c < n; ++c) {
    if (m[0][c] == 0) continue;
    std::vector<std::vector<BigInt>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<BigInt> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != c) row.push_back(m[r][k]);
      minor.push_back(std::move(row));
    }
    BigInt term = m[0][c] * det_laplace(minor);
    acc += (c % 2 == 0) ? term : BigInt(-term);
  }
  return acc;
}

inline void subsets(std::size_t n, std::size_t k, std::size_t start, std::vector<std::size_t>& cur,
                    std::vector<std::vector<std::size_t>>& out) {
  if (cur.size() == k) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = start; i < n; ++i) {
    cur.push_back(i);
    subsets(n, k, i + 1, cur, out);
    cur.pop_back();
  }
}

/// Invariant factors from determinantal divisors: D_k = gcd of k x k minors,
/// d_k = D_k / D_{k-1}.
inline std::vector<BigInt> invariant_factors_by_minors(const IntMatrix& a) {
  std::vector<BigInt> out;
  BigInt prev = 1;
  for (std::size_t k = 1; k <= std::min(a.rows(), a.cols()); ++k) {
    std::vector<std::vector<std::size_t>> rs, cs;
    std::vector<std::size_t> cur;
    subsets(a.rows(), k, 0, cur, rs);
    subsets(a.cols(), k, 0, cur, cs);
    BigInt g = 0;
    for (const auto& r : rs)
      for (const auto& c : cs) {
        std::vector<std::vector<BigInt>> m(k, std::vector<BigInt>(k));
        for (std::size_t i = 0; i < k; ++i)
          for (std::size_t j = 0; j < k; ++j) m[i][j] = a(r[i], c[j]);
        g = boost::multiprecision::gcd(g, BigInt(abs(det_laplace(m))));
      }
    if (g == 0) break;
    out.push_back(g / prev);
    prev = g;
  }
  return out;
}

inline BigInt determinant(const IntMatrix& a) {
  std::vector<std::vector<BigInt>> m(a.rows(), std::vector<BigInt>(a.cols()));
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) m[i][j] = a(i, j);
  return det_laplace(m);
}

/// GF(2) rank by enumerating the row span (rows <= 20).
inline std::size_t rank_by_span(const framedcob::Gf2Matrix& a) {
  std::vector<std::uint64_t> rows;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    std::uint64_t r = 0;
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (a.get(i, j)) r |= std::uint64_t{1} << j;
    rows.push_back(r);
  }
  std::vector<bool> seen(std::size_t{1} << a.cols(), false);
  std::size_t count = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << rows.size()); ++mask) {
    std::uint64_t v = 0;
    for (std::size_t i = 0; i < rows.size(); ++i)
      if (mask >> i & 1) v ^= rows[i];
    if (!seen[v]) {
      seen[v] = true;
      ++count;
    }
  }
  std::size_t r = 0;
  while ((std::size_t{1} << r) < count) ++r;
  return r;
}

/// All x in GF(2)^cols with a x = b (cols <= 20).
inline std::vector<framedcob::BitVector> all_solutions(const framedcob::Gf2Matrix& a, const framedcob::BitVector& b) {
  std::vector<framedcob::BitVector> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << a.cols()); ++mask) {
    auto x = framedcob::BitVector::from_mask(mask, a.cols());
    if (a * x == b) out.push_back(x);
  }
  return out;
}

// --- rotations --------------------------------------------------------------

/// Unit quaternion (w, x, y, z) of a rotation matrix, up to sign.
inline std::array<double, 4> quaternion_of(const Eigen::Matrix3d& r) {
  std::array<double, 4> q{};
  const double tr = r.trace();
  if (tr > 0) {
    double s = std::sqrt(tr + 1.0) * 2;
    q = {0.25 * s, (r(2, 1) - r(1, 2)) / s, (r(0, 2) - r(2, 0)) / s, (r(1, 0) - r(0, 1)) / s};
  } else if (r(0, 0) > r(1, 1) && r(0, 0) > r(2, 2)) {
    double s = std::sqrt(1.0 + r(0, 0) - r(1, 1) - r(2, 2)) * 2;
    q = {(r(2, 1) - r(1, 2)) / s, 0.25 * s, (r(0, 1) + r(1, 0)) / s, (r(0, 2) + r(2, 0)) / s};
  } else if (r(1, 1) > r(2, 2)) {
    double s = std::sqrt(1.0 + r(1, 1) - r(0, 0) - r(2, 2)) * 2;
    q = {(r(0, 2) - r(2, 0)) / s, (r(0, 1) + r(1, 0)) / s, 0.25 * s, (r(1, 2) + r(2, 1)) / s};
  } else {
    double s = std::sqrt(1.0 + r(2, 2) - r(0, 0) - r(1, 1)) * 2;
    q = {(r(1, 0) - r(0, 1)) / s, (r(0, 2) + r(2, 0)) / s, (r(1, 2) + r(2, 1)) / s, 0.25 * s};
  }
  return q;
}

/// pi_1(SO(3)) class by continuous quaternion tracking around the loop.
inline int so3_class_by_quaternions(const framedcob::RotationLoop& loop) {
  auto dot = [](const std::array<double, 4>& a, const std::array<double, 4>& b) {
    return a[0] * b[0] + a[1] * b[1] + a[2] * b[2] + a[3] * b[3];
  };
  const auto start = quaternion_of(loop.steps[0]);
  auto cur = start;
  const std::size_t m = loop.steps.size();
  for (std::size_t i = 1; i <= m; ++i) {
    auto next = quaternion_of(loop.steps[i % m]);
    if (dot(next, cur) < 0)
      for (auto& c : next) c = -c;
    cur = next;
  }
  return dot(cur, start) > 0 ? 0 : 1;
}

inline Eigen::MatrixXd random_rotation(std::size_t n, std::mt19937& rng) {
  std::normal_distribution<double> g(0.0, 1.0);
  Eigen::MatrixXd a(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a(i, j) = g(rng);
  Eigen::HouseholderQR<Eigen::MatrixXd> qr(a);
  Eigen::MatrixXd q = qr.householderQ();
  if (q.determinant() < 0) q.col(0) = -q.col(0);
  return q;
}

inline Eigen::MatrixXd random_skew(std::size_t n, double scale, std::mt19937& rng) {
  std::uniform_real_distribution<double> u(-scale, scale);
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      a(i, j) = u(rng);
      a(j, i) = -a(i, j);
    }
  return a;
}

/// Skew exponential by eigen-free Rodrigues-type series (plain Taylor, many terms).
inline Eigen::MatrixXd taylor_exp(const Eigen::MatrixXd& a) {
  Eigen::MatrixXd sum = Eigen::MatrixXd::Identity(a.rows(), a.cols());
  Eigen::MatrixXd term = sum;
  for (int k = 1; k < 80; ++k) {
    term = term * a / k;
    sum += term;
  }
  return sum;
}

/**
 * Random loop in SO(n) with known class: a conjugated planar loop winding w
 * times composed with a null-homotopic periodic wobble
 * exp(sin(2 pi t) B1 + (1 - cos(2 pi t)) B2). Class = w mod 2.
 */
inline framedcob::RotationLoop random_loop(std::size_t n, long windings, std::size_t samples, std::mt19937& rng) {
  const Eigen::MatrixXd q = random_rotation(n, rng);
  const Eigen::MatrixXd b1 = random_skew(n, 0.3, rng);
  const Eigen::MatrixXd b2 = random_skew(n, 0.3, rng);
  framedcob::RotationLoop loop{n, {}};
  for (std::size_t k = 0; k < samples; ++k) {
    const double t = static_cast<double>(k) / static_cast<double>(samples);
    const double theta = 2.0 * M_PI * static_cast<double>(windings) * t;
    Eigen::MatrixXd r = Eigen::MatrixXd::Identity(n, n);
    r(0, 0) = std::cos(theta);
    r(1, 1) = std::cos(theta);
    r(0, 1) = -std::sin(theta);
    r(1, 0) = std::sin(theta);
    const Eigen::MatrixXd wobble = taylor_exp(std::sin(2 * M_PI * t) * b1 + (1 - std::cos(2 * M_PI * t)) * b2);
    loop.steps.push_back(q * r * q.transpose() * wobble);
  }
  return loop;
}

// --- surfaces ---------------------------------------------------------------

/**
 * Mod-2 count of transversal crossings of two simple closed edge paths that
 * share no edges. At each common vertex v the link of v is a circle; path x
 * cuts it into two arcs at its two neighbours, and the crossing is
 * transversal when y's two neighbours lie on different arcs.
 */
inline int crossing_count(const framedcob::SimplicialComplex& K, const std::vector<std::vector<long>>& x,
                          const std::vector<std::vector<long>>& y) {
  auto nbrs = [](const std::vector<std::vector<long>>& path, long v) {
    std::vector<long> out;
    for (const auto& e : path) {
      if (e[0] == v) out.push_back(e[1]);
      if (e[1] == v) out.push_back(e[0]);
    }
    return out;
  };
  int count = 0;
  for (auto v : K.vertices()) {
    auto nx = nbrs(x, v);
    auto ny = nbrs(y, v);
    if (nx.size() != 2 || ny.size() != 2) continue;
    // cyclic order of the link of v
    std::map<long, std::vector<long>> adj;
    for (const auto& t : K.simplices(2)) {
      if (!std::binary_search(t.begin(), t.end(), v)) continue;
      std::vector<long> rest;
      for (auto w : t)
        if (w != v) rest.push_back(w);
      adj[rest[0]].push_back(rest[1]);
      adj[rest[1]].push_back(rest[0]);
    }
    std::vector<long> cycle{nx[0]};
    long prev = nx[0], cur = adj[nx[0]][0];
    while (cur != nx[0]) {
      cycle.push_back(cur);
      long next = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
      prev = cur;
      cur = next;
    }
    auto pos = [&](long w) { return std::find(cycle.begin(), cycle.end(), w) - cycle.begin(); };
    const auto cut = pos(nx[1]);
    const bool side0 = pos(ny[0]) < cut;
    const bool side1 = pos(ny[1]) < cut;
    if (side0 != side1) ++count;
  }
  return count % 2;
}

} // namespace oracle
