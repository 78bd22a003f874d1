#pragma once

// Standard small triangulations used as built-in witnesses and fixtures.

#include <vector>

#include "framedcob/complex.hpp"

namespace framedcob::triangulations {

/// Boundary of an n-gon, vertices 0..n-1.
inline SimplicialComplex polygon(int n) {
  if (n < 3) throw InputError("polygon: need at least 3 vertices");
  std::vector<std::vector<Label>> edges;
  for (int i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n});
  return build_complex(edges);
}

/// Boundary of the (n+1)-simplex: an n-sphere on vertices 0..n+1.
inline SimplicialComplex simplex_boundary(int n) {
  std::vector<std::vector<Label>> facets;
  for (int omit = 0; omit <= n + 1; ++omit) {
    std::vector<Label> f;
    for (int v = 0; v <= n + 1; ++v)
      if (v != omit) f.push_back(v);
    facets.push_back(std::move(f));
  }
  return build_complex(facets);
}

inline SimplicialComplex tetrahedron_boundary() { return simplex_boundary(2); }

/// Octahedral 2-sphere. Vertex 2k is +e_k, vertex 2k+1 is -e_k.
inline SimplicialComplex octahedron() {
  std::vector<std::vector<Label>> faces;
  for (int x = 0; x < 2; ++x)
    for (int y = 2; y < 4; ++y)
      for (int z = 4; z < 6; ++z) faces.push_back({x, y, z});
  return build_complex(faces);
}

/// Seven-vertex torus: triangles {i, i+1, i+3} and {i, i+2, i+3} mod 7.
inline SimplicialComplex torus7() {
  std::vector<std::vector<Label>> faces;
  for (int i = 0; i < 7; ++i) {
    faces.push_back({i, (i + 1) % 7, (i + 3) % 7});
    faces.push_back({i, (i + 2) % 7, (i + 3) % 7});
  }
  return build_complex(faces);
}

/// Closed edge paths on torus7 whose classes form a basis of H_1 with
/// intersection number 1: steps of +1 and steps of +2 around Z/7.
inline std::vector<std::vector<Label>> torus7_cycle_a() {
  std::vector<std::vector<Label>> e;
  for (int i = 0; i < 7; ++i) e.push_back({i, (i + 1) % 7});
  return e;
}
inline std::vector<std::vector<Label>> torus7_cycle_b() {
  std::vector<std::vector<Label>> e;
  for (int i = 0; i < 7; ++i) e.push_back({(2 * i) % 7, (2 * i + 2) % 7});
  return e;
}

/// Six-vertex real projective plane (antipodal quotient of the icosahedron).
inline SimplicialComplex rp2_6() {
  return build_complex({{0, 1, 3}, {0, 1, 5}, {0, 2, 4}, {0, 2, 5}, {0, 3, 4},
                        {1, 2, 3}, {1, 2, 4}, {1, 4, 5}, {2, 3, 5}, {3, 4, 5}});
}

/// Seven-vertex Moebius band: triangles {i, i+1, i+2} mod 7.
inline SimplicialComplex mobius7() {
  std::vector<std::vector<Label>> faces;
  for (int i = 0; i < 7; ++i) faces.push_back({i, (i + 1) % 7, (i + 2) % 7});
  return build_complex(faces);
}

namespace detail {

// a x b grid of squares, each split along its (i,j)-(i+1,j+1) diagonal.
// `flip` glues the i = a side to i = 0 with j reversed (Klein bottle).
inline SimplicialComplex grid_surface(int a, int b, bool flip) {
  auto label = [&](int i, int j) -> Label {
    j %= b;
    if (i == a) {
      i = 0;
      if (flip) j = (b - j) % b;
    }
    return static_cast<Label>(i * b + j);
  };
  std::vector<std::vector<Label>> faces;
  for (int i = 0; i < a; ++i)
    for (int j = 0; j < b; ++j) {
      faces.push_back({label(i, j), label(i + 1, j), label(i + 1, j + 1)});
      faces.push_back({label(i, j), label(i, j + 1), label(i + 1, j + 1)});
    }
  return build_complex(faces);
}

} // namespace detail

/// Torus as an a x b square grid; vertex (i, j) has label i*b + j.
inline SimplicialComplex grid_torus(int a = 4, int b = 4) { return detail::grid_surface(a, b, false); }

inline SimplicialComplex klein_bottle(int a = 4, int b = 4) { return detail::grid_surface(a, b, true); }

/// Connected sum of two seven-vertex tori (11 vertices, genus 2).
inline SimplicialComplex genus2() {
  std::vector<std::vector<Label>> faces;
  auto glue = [](int v) -> Label {
    switch (v) {
      case 7: return 0;
      case 8: return 1;
      case 10: return 3;
      default: return v;
    }
  };
  for (int copy = 0; copy < 2; ++copy) {
    const int off = 7 * copy;
    for (int i = 0; i < 7; ++i) {
      std::vector<int> t1{i, (i + 1) % 7, (i + 3) % 7};
      std::vector<int> t2{i, (i + 2) % 7, (i + 3) % 7};
      for (auto* t : {&t1, &t2}) {
        if (t == &t1 && i == 0) continue;  // drop {0,1,3} in both copies
        std::vector<Label> f;
        for (int v : *t) f.push_back(glue(v + off));
        faces.push_back(std::move(f));
      }
    }
  }
  return build_complex(faces);
}

} // namespace framedcob::triangulations
