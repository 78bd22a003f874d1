#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "framedcob/complex.hpp"
#include "framedcob/errors.hpp"
#include "framedcob/smith.hpp"
#include "framedcob/triangulations.hpp"

namespace framedcob {

struct SimplicialMap {
  SimplicialComplex domain;
  SimplicialComplex codomain;
  std::map<Label, Label> vertex_map;
};

/// A map whose simplicial-ness has been checked.
struct ValidatedMap {
  SimplicialMap map;
  std::vector<std::size_t> degenerate_tops;  // indices into domain top simplices

  Simplex image(const Simplex& s) const {
    std::set<Label> img;
    for (auto v : s) img.insert(map.vertex_map.at(v));
    return {img.begin(), img.end()};
  }
};

inline ValidatedMap validate_map(const SimplicialMap& f) {
  for (auto v : f.domain.vertices()) {
    auto it = f.vertex_map.find(v);
    if (it == f.vertex_map.end()) throw InputError("validate_map: vertex " + std::to_string(v) + " has no image");
    if (!f.codomain.contains({it->second}))
      throw InputError("validate_map: image " + std::to_string(it->second) + " of vertex " + std::to_string(v) +
                       " is not a codomain vertex");
  }
  ValidatedMap out{f, {}};
  for (const auto& s : f.domain.maximal_simplices()) {
    auto img = out.image(s);
    if (!f.codomain.contains(img))
      throw InputError("validate_map: image of " + to_string(s) + " is " + to_string(img) + ", not a codomain simplex");
  }
  const int n = f.domain.dimension();
  const auto& tops = f.domain.simplices(n);
  for (std::size_t j = 0; j < tops.size(); ++j)
    if (out.image(tops[j]).size() != tops[j].size()) out.degenerate_tops.push_back(j);
  return out;
}

inline ValidatedMap compose(const ValidatedMap& g, const ValidatedMap& f) {
  if (!(f.map.codomain == g.map.domain)) throw InputError("compose: codomain of f is not the domain of g");
  SimplicialMap h{f.map.domain, g.map.codomain, {}};
  for (auto [v, w] : f.map.vertex_map)
    if (f.map.domain.contains({v})) h.vertex_map[v] = g.map.vertex_map.at(w);
  return validate_map(h);
}

struct Orientations {
  FundamentalClass domain;
  FundamentalClass codomain;
};

namespace detail {

// Parity of the permutation sorting `seq` (distinct entries).
inline int permutation_sign(std::vector<Label> seq) {
  int sign = 1;
  for (std::size_t i = 0; i < seq.size(); ++i)
    for (std::size_t j = i + 1; j < seq.size(); ++j)
      if (seq[j] < seq[i]) sign = -sign;
  return sign;
}

inline Orientations default_orientations(const ValidatedMap& f) {
  const int n = f.map.domain.dimension();
  if (n != f.map.codomain.dimension())
    throw InputError("degree: domain has dimension " + std::to_string(n) + ", codomain " +
                     std::to_string(f.map.codomain.dimension()));
  Orientations o{fundamental_class(f.map.domain), fundamental_class(f.map.codomain)};
  if (!o.domain.orientable || !o.codomain.orientable)
    throw InputError("degree: orientation data missing (a complex is not orientable)");
  return o;
}

inline void check_orientations(const ValidatedMap& f, const Orientations& o) {
  const int n = f.map.domain.dimension();
  if (n != f.map.codomain.dimension()) throw InputError("degree: dimension mismatch");
  if (!o.domain.orientable || !o.codomain.orientable ||
      o.domain.signs.size() != f.map.domain.count(n) || o.codomain.signs.size() != f.map.codomain.count(n))
    throw InputError("degree: orientation data missing or of the wrong size");
}

struct TopImage {
  std::size_t target;  // index of the codomain top simplex
  int chain_sign;      // coefficient of the ascending target in the image chain
};

// Image of each nondegenerate domain top simplex with its orientation sign.
inline std::vector<TopImage> top_images(const ValidatedMap& f, const Orientations& o) {
  const int n = f.map.domain.dimension();
  const auto& tops = f.map.domain.simplices(n);
  std::vector<TopImage> out;
  for (std::size_t j = 0; j < tops.size(); ++j) {
    std::vector<Label> seq;
    for (auto v : tops[j]) seq.push_back(f.map.vertex_map.at(v));
    auto img = f.image(tops[j]);
    if (img.size() != tops[j].size()) continue;
    const std::size_t t = *f.map.codomain.index_of(img);
    out.push_back({t, permutation_sign(seq) * o.domain.signs[j]});
  }
  return out;
}

} // namespace detail

/// Signed preimage count over one target top simplex.
inline long degree_at(const ValidatedMap& f, const Orientations& o, std::size_t target) {
  detail::check_orientations(f, o);
  long d = 0;
  for (const auto& img : detail::top_images(f, o))
    if (img.target == target) d += img.chain_sign * o.codomain.signs[target];
  return d;
}

/// Codomain top simplices into whose closure no degenerate domain top simplex falls.
inline std::vector<std::size_t> regular_targets(const ValidatedMap& f) {
  const int n = f.map.codomain.dimension();
  const auto& ctops = f.map.codomain.simplices(n);
  const auto& dtops = f.map.domain.simplices(n);
  std::vector<std::size_t> out;
  for (std::size_t t = 0; t < ctops.size(); ++t) {
    bool regular = true;
    for (auto j : f.degenerate_tops) {
      auto img = f.image(dtops[j]);
      if (std::includes(ctops[t].begin(), ctops[t].end(), img.begin(), img.end())) {
        regular = false;
        break;
      }
    }
    if (regular) out.push_back(t);
  }
  return out;
}

long degree_by_homology(const ValidatedMap& f, const Orientations& o);

/**
 * Hopf degree as a signed count of preimages of one target top simplex: the
 * lowest-index regular target (no degenerate simplex maps into it), or the
 * lowest-index target hit at all when no regular one exists. Degenerate
 * simplices never meet a target's interior, so both choices give the degree.
 */
inline long degree_by_preimage(const ValidatedMap& f, const Orientations& o) {
  detail::check_orientations(f, o);
  const auto images = detail::top_images(f, o);
  if (images.empty()) return degree_by_homology(f, o);
  auto regular = regular_targets(f);
  std::size_t target = images.front().target;
  for (const auto& img : images) target = std::min(target, img.target);
  if (!regular.empty()) target = regular.front();
  return degree_at(f, o, target);
}

/**
 * Degree from the induced chain map on top homology: the image of the domain's
 * fundamental cycle must be a multiple of the generator of ker(d_n), found via
 * Smith normal form, and that generator is +-[codomain].
 */
inline long degree_by_homology(const ValidatedMap& f, const Orientations& o) {
  detail::check_orientations(f, o);
  const auto& N = f.map.codomain;
  const int n = N.dimension();
  const std::size_t tops = N.count(n);
  std::vector<BigInt> image(tops);
  for (const auto& img : detail::top_images(f, o)) image[img.target] += img.chain_sign;

  const IntMatrix d = boundary_matrix(N, n);
  const auto snf = smith_normal_form(d);
  const std::size_t r = snf.rank();
  if (tops - r != 1) throw InternalError("degree_by_homology: top homology of the codomain is not Z");
  std::vector<BigInt> gen(tops);
  for (std::size_t i = 0; i < tops; ++i) gen[i] = snf.v(i, r);

  // chain map image must be a cycle
  for (std::size_t row = 0; row < d.rows(); ++row) {
    BigInt acc = 0;
    for (std::size_t j = 0; j < tops; ++j) acc += d(row, j) * image[j];
    if (acc != 0) throw InternalError("degree_by_homology: induced chain is not a cycle");
  }
  std::size_t pivot = 0;
  while (pivot < tops && gen[pivot] == 0) ++pivot;
  if (pivot == tops) throw InternalError("degree_by_homology: zero kernel generator");
  if (image[pivot] % gen[pivot] != 0) throw InternalError("degree_by_homology: image is not a multiple of [M]");
  const BigInt mult = image[pivot] / gen[pivot];
  for (std::size_t j = 0; j < tops; ++j)
    if (image[j] != mult * gen[j]) throw InternalError("degree_by_homology: image is not a multiple of [M]");
  // orient the generator along the codomain's fundamental cycle
  const BigInt orient = gen[pivot] * o.codomain.signs[pivot];
  if (orient != 1 && orient != -1) throw InternalError("degree_by_homology: generator is not primitive");
  return static_cast<long>(mult * orient);
}

inline long degree_by_preimage(const ValidatedMap& f) { return degree_by_preimage(f, detail::default_orientations(f)); }
inline long degree_by_homology(const ValidatedMap& f) { return degree_by_homology(f, detail::default_orientations(f)); }

inline Orientations default_orientations(const ValidatedMap& f) { return detail::default_orientations(f); }

namespace witnesses {

/// Map of a 3|d|-gon onto the triangle, vertex i -> sign(d) i mod 3 (d = 0: constant).
inline ValidatedMap circle_map(long d) {
  const long k = std::max<long>(1, std::labs(d));
  SimplicialMap f{triangulations::polygon(static_cast<int>(3 * k)), triangulations::polygon(3), {}};
  for (long i = 0; i < 3 * k; ++i) {
    Label img = 0;
    if (d > 0) img = i % 3;
    if (d < 0) img = (3 - i % 3) % 3;
    f.vertex_map[i] = img;
  }
  return validate_map(f);
}

inline constexpr Label kNorth = 1000;
inline constexpr Label kSouth = 1001;

/// Suspension of a map; the two apexes go to the two apexes.
inline ValidatedMap suspend(const ValidatedMap& f) {
  SimplicialMap g{suspension(f.map.domain, kNorth, kSouth), suspension(f.map.codomain, kNorth, kSouth),
                  f.map.vertex_map};
  g.vertex_map[kNorth] = kNorth;
  g.vertex_map[kSouth] = kSouth;
  return validate_map(g);
}

/// Degree-d self-map witness of S^dim for dim in {1, 2} (2 uses the suspension).
inline ValidatedMap sphere_map(long d, int dim) {
  if (dim == 1) return circle_map(d);
  if (dim == 2) return suspend(circle_map(d));
  throw InputError("sphere_map: dimension must be 1 or 2");
}

inline ValidatedMap identity(const SimplicialComplex& K) {
  SimplicialMap f{K, K, {}};
  for (auto v : K.vertices()) f.vertex_map[v] = v;
  return validate_map(f);
}

inline ValidatedMap constant(const SimplicialComplex& K, Label target) {
  SimplicialMap f{K, K, {}};
  for (auto v : K.vertices()) f.vertex_map[v] = target;
  return validate_map(f);
}

/// Octahedron reflection swapping +e_1 and -e_1.
inline ValidatedMap octahedron_reflection() {
  auto K = triangulations::octahedron();
  SimplicialMap f{K, K, {}};
  for (auto v : K.vertices()) f.vertex_map[v] = v;
  f.vertex_map[0] = 1;
  f.vertex_map[1] = 0;
  return validate_map(f);
}

/// Hexagon wrapped twice around the triangle.
inline ValidatedMap double_cover() { return circle_map(2); }

} // namespace witnesses

} // namespace framedcob
