#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "framedcob/complex.hpp"
#include "framedcob/gf2.hpp"

namespace framedcob {

/**
 * Validated closed connected combinatorial surface.
 *
 * `genus` is set only for orientable surfaces; for non-orientable ones only
 * the Euler characteristic is meaningful.
 */
struct ClosedSurface {
  SimplicialComplex complex;
  bool orientable = false;
  std::optional<int> genus;
  long euler = 0;
  FundamentalClass fundamental;
};

/// Mod-2 1-chain on a surface's edges; a cycle when every vertex has even degree.
struct CycleZ2 {
  BitVector edges;

  friend CycleZ2 operator+(const CycleZ2& a, const CycleZ2& b) { return {a.edges + b.edges}; }
  friend bool operator==(const CycleZ2&, const CycleZ2&) = default;
};

struct IntersectionForm {
  std::vector<CycleZ2> basis;
  Gf2Matrix gram;
};

namespace detail {

// Vertex link of a closed pseudosurface must be one cycle for a manifold.
inline void check_vertex_links(const SimplicialComplex& K) {
  for (auto v : K.vertices()) {
    std::map<Label, std::vector<Label>> adj;
    for (const auto& t : K.simplices(2)) {
      if (!std::binary_search(t.begin(), t.end(), v)) continue;
      std::vector<Label> rest;
      for (auto w : t)
        if (w != v) rest.push_back(w);
      adj[rest[0]].push_back(rest[1]);
      adj[rest[1]].push_back(rest[0]);
    }
    // each link vertex has degree 2 already (edge in two triangles); check one loop
    Label start = adj.begin()->first;
    Label prev = start;
    Label cur = adj[start][0];
    std::size_t steps = 1;
    while (cur != start) {
      const auto& nb = adj[cur];
      Label next = nb[0] == prev ? nb[1] : nb[0];
      prev = cur;
      cur = next;
      ++steps;
    }
    if (steps != adj.size())
      throw StructuralError("vertex " + std::to_string(v) + " has a disconnected link (pinched surface)");
  }
}

} // namespace detail

inline ClosedSurface validate_surface(const SimplicialComplex& K) {
  if (K.dimension() != 2) throw InputError("validate_surface: complex has dimension " + std::to_string(K.dimension()));
  ClosedSurface s;
  s.fundamental = fundamental_class(K);  // edge-in-two-triangles and connectivity
  detail::check_vertex_links(K);
  s.complex = K;
  s.orientable = s.fundamental.orientable;
  s.euler = euler_characteristic(K);
  if (s.orientable) {
    if ((2 - s.euler) % 2 != 0 || s.euler > 2) throw InternalError("orientable surface with odd 2 - chi");
    s.genus = static_cast<int>((2 - s.euler) / 2);
  }
  return s;
}

inline CycleZ2 zero_cycle(const ClosedSurface& S) { return {BitVector(S.complex.count(1))}; }

/// Edge-list chain, e.g. {{0,1},{1,2},{0,2}}. Edges listed twice cancel.
inline CycleZ2 chain_from_edges(const ClosedSurface& S, const std::vector<std::vector<Label>>& edges) {
  CycleZ2 c = zero_cycle(S);
  for (auto e : edges) {
    if (e.size() != 2) throw InputError("chain_from_edges: edge must have two endpoints");
    std::sort(e.begin(), e.end());
    auto idx = S.complex.index_of(e);
    if (!idx) throw InputError("chain_from_edges: " + to_string(e) + " is not an edge of the surface");
    c.edges.flip(*idx);
  }
  return c;
}

inline bool is_cycle(const ClosedSurface& S, const CycleZ2& x) {
  if (x.edges.size() != S.complex.count(1)) return false;
  return (boundary_matrix_gf2(S.complex, 1) * x.edges).none();
}

inline CycleZ2 cycle_from_edges(const ClosedSurface& S, const std::vector<std::vector<Label>>& edges) {
  auto c = chain_from_edges(S, edges);
  if (!is_cycle(S, c)) throw InputError("cycle_from_edges: edge set has odd-degree vertices");
  return c;
}

/// Mod-2 boundary of a set of triangles (given as a bit-vector over triangles).
inline CycleZ2 boundary_of(const ClosedSurface& S, const BitVector& triangles) {
  return {boundary_matrix_gf2(S.complex, 2) * triangles};
}

namespace detail {

inline void require_orientable(const ClosedSurface& S, const char* op) {
  if (!S.orientable) throw UnsupportedError(std::string(op) + ": non-orientable surfaces are not supported");
}

// Columns of d2 spanning the boundaries B_1.
inline std::vector<BitVector> boundary_generators(const ClosedSurface& S) {
  auto d2 = boundary_matrix_gf2(S.complex, 2);
  std::vector<BitVector> out;
  for (std::size_t j = 0; j < d2.cols(); ++j) out.push_back(d2.column(j));
  return out;
}

} // namespace detail

/// 2g cycles whose classes form a basis of H_1(S; Z/2): kernel vectors of d1
/// kept greedily whenever they are independent modulo the boundaries.
inline std::vector<CycleZ2> h1_basis(const ClosedSurface& S) {
  detail::require_orientable(S, "h1_basis");
  const std::size_t edges = S.complex.count(1);
  auto span = detail::boundary_generators(S);
  std::size_t rank = span_rank(span, edges);
  std::vector<CycleZ2> basis;
  for (auto& z : nullspace_gf2(boundary_matrix_gf2(S.complex, 1))) {
    span.push_back(z);
    const std::size_t r = span_rank(span, edges);
    if (r > rank) {
      rank = r;
      basis.push_back({z});
    } else {
      span.pop_back();
    }
  }
  if (basis.size() != 2 * static_cast<std::size_t>(*S.genus))
    throw InternalError("h1_basis: found " + std::to_string(basis.size()) + " classes, expected 2g");
  return basis;
}

/// True when x is a mod-2 boundary.
inline bool is_null_homologous(const ClosedSurface& S, const CycleZ2& x) {
  return solve_gf2(boundary_matrix_gf2(S.complex, 2), x.edges).has_value();
}

namespace detail {

// Cap with the mod-2 fundamental class, front-face convention:
// [v0,v1,v2] cap alpha = alpha([v0,v1]) [v1,v2]. As a matrix edges -> edges.
inline Gf2Matrix cap_matrix(const ClosedSurface& S) {
  const auto& K = S.complex;
  Gf2Matrix m(K.count(1), K.count(1));
  for (const auto& t : K.simplices(2)) {
    auto front = *K.index_of({t[0], t[1]});
    auto back = *K.index_of({t[1], t[2]});
    m.set(back, front, !m.get(back, front));
  }
  return m;
}

} // namespace detail

/**
 * A 1-cocycle alpha with alpha cap [M] homologous to x.
 *
 * Solved as one linear system over (alpha, c): delta(alpha) = 0 and
 * cap(alpha) + d2(c) = x.
 */
inline BitVector poincare_dual(const ClosedSurface& S, const CycleZ2& x) {
  if (!is_cycle(S, x)) throw InputError("poincare_dual: input is not a mod-2 cycle");
  const auto& K = S.complex;
  const std::size_t E = K.count(1);
  const std::size_t F = K.count(2);
  // delta = d2^T : C^1 -> C^2
  auto d2 = boundary_matrix_gf2(K, 2);
  auto cap = detail::cap_matrix(S);
  Gf2Matrix system(F + E, E + F);
  for (std::size_t t = 0; t < F; ++t)
    for (std::size_t e = 0; e < E; ++e)
      if (d2.get(e, t)) system.set(t, e, true);
  for (std::size_t r = 0; r < E; ++r) {
    for (std::size_t e = 0; e < E; ++e)
      if (cap.get(r, e)) system.set(F + r, e, true);
    for (std::size_t t = 0; t < F; ++t)
      if (d2.get(r, t)) system.set(F + r, E + t, true);
  }
  BitVector rhs(F + E);
  for (std::size_t e = 0; e < E; ++e) rhs.set(F + e, x.edges.get(e));
  auto sol = solve_gf2(system, rhs);
  if (!sol) throw InternalError("poincare_dual: duality system inconsistent (invalid surface?)");
  BitVector alpha(E);
  for (std::size_t e = 0; e < E; ++e) alpha.set(e, sol->get(e));
  return alpha;
}

/// Evaluate (alpha cup beta) on the mod-2 fundamental class.
inline bool cup_pairing(const ClosedSurface& S, const BitVector& alpha, const BitVector& beta) {
  const auto& K = S.complex;
  bool acc = false;
  for (const auto& t : K.simplices(2)) {
    const bool front = alpha.get(*K.index_of({t[0], t[1]}));
    const bool back = beta.get(*K.index_of({t[1], t[2]}));
    acc ^= front && back;
  }
  return acc;
}

/// Mod-2 intersection number of two cycles on an orientable surface, computed
/// as <PD(x) cup PD(y), [M]>.
inline bool intersection_number(const ClosedSurface& S, const CycleZ2& x, const CycleZ2& y) {
  detail::require_orientable(S, "intersection_number");
  if (!is_cycle(S, x) || !is_cycle(S, y)) throw InputError("intersection_number: inputs must be mod-2 cycles");
  return cup_pairing(S, poincare_dual(S, x), poincare_dual(S, y));
}

inline Gf2Matrix gram_matrix(const ClosedSurface& S, const std::vector<CycleZ2>& cycles) {
  detail::require_orientable(S, "gram_matrix");
  std::vector<BitVector> duals;
  for (const auto& c : cycles) {
    if (!is_cycle(S, c)) throw InputError("gram_matrix: input is not a mod-2 cycle");
    duals.push_back(poincare_dual(S, c));
  }
  Gf2Matrix g(cycles.size(), cycles.size());
  for (std::size_t i = 0; i < cycles.size(); ++i)
    for (std::size_t j = 0; j < cycles.size(); ++j) g.set(i, j, cup_pairing(S, duals[i], duals[j]));
  return g;
}

inline IntersectionForm intersection_form(const ClosedSurface& S) {
  IntersectionForm form;
  form.basis = h1_basis(S);
  form.gram = gram_matrix(S, form.basis);
  if (rank_gf2(form.gram) != form.basis.size())
    throw InternalError("intersection_form: Gram matrix is degenerate");
  if (!form.gram.is_symmetric() || !form.gram.has_zero_diagonal())
    throw InternalError("intersection_form: Gram matrix is not alternating");
  return form;
}

/// Whether the given cycles represent a basis of H_1(S; Z/2).
inline bool is_homology_basis(const ClosedSurface& S, const std::vector<CycleZ2>& cycles) {
  detail::require_orientable(S, "is_homology_basis");
  if (cycles.size() != 2 * static_cast<std::size_t>(*S.genus)) return false;
  const std::size_t E = S.complex.count(1);
  auto span = detail::boundary_generators(S);
  const std::size_t base = span_rank(span, E);
  for (const auto& c : cycles) {
    if (!is_cycle(S, c)) return false;
    span.push_back(c.edges);
  }
  return span_rank(span, E) == base + cycles.size();
}

} // namespace framedcob
