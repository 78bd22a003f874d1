#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <queue>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "framedcob/errors.hpp"
#include "framedcob/gf2.hpp"
#include "framedcob/smith.hpp"

namespace framedcob {

using Label = long;
using Simplex = std::vector<Label>;  // always sorted ascending

inline std::string to_string(const Simplex& s) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < s.size(); ++i) os << (i ? "," : "") << s[i];
  os << ']';
  return os.str();
}

/**
 * Finite abstract simplicial complex, closed under faces.
 *
 * Simplices of each dimension are kept in lexicographic order of their
 * ascending vertex tuples; that order defines the basis of every chain group
 * and therefore the rows and columns of boundary matrices.
 */
class SimplicialComplex {
public:
  SimplicialComplex() = default;

  /// Build from maximal (or any) simplices; all faces are added.
  static SimplicialComplex build(const std::vector<std::vector<Label>>& maximal_simplices) {
    std::vector<std::set<Simplex>> by_dim;
    for (const auto& raw : maximal_simplices) {
      if (raw.empty()) throw InputError("build_complex: empty simplex");
      Simplex s = raw;
      std::sort(s.begin(), s.end());
      if (std::adjacent_find(s.begin(), s.end()) != s.end())
        throw InputError("build_complex: duplicate vertex in simplex " + to_string(raw));
      const std::size_t k = s.size();
      // enumerate all nonempty subsets
      if (k > 20) throw InputError("build_complex: simplex dimension too large");
      if (by_dim.size() < k) by_dim.resize(k);
      for (unsigned mask = 1; mask < (1u << k); ++mask) {
        Simplex face;
        for (std::size_t i = 0; i < k; ++i)
          if (mask & (1u << i)) face.push_back(s[i]);
        by_dim[face.size() - 1].insert(std::move(face));
      }
    }
    SimplicialComplex c;
    for (auto& layer : by_dim) c.simplices_.emplace_back(layer.begin(), layer.end());
    c.reindex();
    return c;
  }

  /// Dimension of the complex; -1 when empty.
  int dimension() const { return static_cast<int>(simplices_.size()) - 1; }
  bool empty() const { return simplices_.empty(); }

  const std::vector<Simplex>& simplices(int k) const {
    static const std::vector<Simplex> none;
    if (k < 0 || k > dimension()) return none;
    return simplices_[static_cast<std::size_t>(k)];
  }

  std::size_t count(int k) const { return simplices(k).size(); }

  std::vector<Label> vertices() const {
    std::vector<Label> out;
    for (const auto& s : simplices(0)) out.push_back(s[0]);
    return out;
  }

  /// Position of a simplex in its dimension's ordering.
  std::optional<std::size_t> index_of(const Simplex& s) const {
    if (s.empty() || static_cast<int>(s.size()) - 1 > dimension()) return std::nullopt;
    const auto& idx = index_[s.size() - 1];
    auto it = idx.find(s);
    if (it == idx.end()) return std::nullopt;
    return it->second;
  }

  bool contains(const Simplex& s) const { return index_of(s).has_value(); }

  /// Maximal simplices in canonical order (by dimension then lexicographic).
  std::vector<Simplex> maximal_simplices() const {
    std::vector<Simplex> out;
    for (int k = 0; k <= dimension(); ++k) {
      for (const auto& s : simplices(k)) {
        bool maximal = true;
        if (k < dimension()) {
          for (const auto& t : simplices(k + 1))
            if (std::includes(t.begin(), t.end(), s.begin(), s.end())) {
              maximal = false;
              break;
            }
        }
        if (maximal) out.push_back(s);
      }
    }
    return out;
  }

  friend bool operator==(const SimplicialComplex& a, const SimplicialComplex& b) {
    return a.simplices_ == b.simplices_;
  }

private:
  void reindex() {
    index_.assign(simplices_.size(), {});
    for (std::size_t k = 0; k < simplices_.size(); ++k)
      for (std::size_t i = 0; i < simplices_[k].size(); ++i) index_[k].emplace(simplices_[k][i], i);
  }

  std::vector<std::vector<Simplex>> simplices_;
  std::vector<std::map<Simplex, std::size_t>> index_;
};

inline SimplicialComplex build_complex(const std::vector<std::vector<Label>>& maximal_simplices) {
  return SimplicialComplex::build(maximal_simplices);
}

/// Signed boundary C_k -> C_{k-1}. Omitting the i-th vertex contributes (-1)^i.
inline IntMatrix boundary_matrix(const SimplicialComplex& K, int k) {
  if (k < 1 || k > K.dimension())
    throw InputError("boundary_matrix: k=" + std::to_string(k) + " outside [1, " + std::to_string(K.dimension()) + "]");
  const auto& cols = K.simplices(k);
  IntMatrix m(K.count(k - 1), cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    for (std::size_t i = 0; i < cols[j].size(); ++i) {
      Simplex face = cols[j];
      face.erase(face.begin() + static_cast<std::ptrdiff_t>(i));
      m(*K.index_of(face), j) = (i % 2 == 0) ? 1 : -1;
    }
  }
  return m;
}

inline Gf2Matrix boundary_matrix_gf2(const SimplicialComplex& K, int k) {
  if (k < 1 || k > K.dimension()) throw InputError("boundary_matrix_gf2: k out of range");
  const auto& cols = K.simplices(k);
  Gf2Matrix m(K.count(k - 1), cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j)
    for (std::size_t i = 0; i < cols[j].size(); ++i) {
      Simplex face = cols[j];
      face.erase(face.begin() + static_cast<std::ptrdiff_t>(i));
      m.set(*K.index_of(face), j, true);
    }
  return m;
}

enum class Coefficients { Z, Z2 };

struct HomologyGroup {
  std::size_t betti = 0;
  std::vector<BigInt> torsion;  // each > 1, d_i | d_{i+1}

  bool trivial() const { return betti == 0 && torsion.empty(); }

  /// "0", "Z^2", "Z/2", "Z + Z/2", ... (Z2 coefficients print as (Z/2)^b).
  std::string to_string(Coefficients coeffs = Coefficients::Z) const {
    if (trivial()) return "0";
    std::vector<std::string> parts;
    if (betti > 0) {
      const std::string base = coeffs == Coefficients::Z ? "Z" : "(Z/2)";
      parts.push_back(betti == 1 ? (coeffs == Coefficients::Z ? "Z" : "Z/2") : base + "^" + std::to_string(betti));
    }
    for (const auto& t : torsion) parts.push_back("Z/" + t.str());
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? " + " : "") + parts[i];
    return out;
  }

  friend bool operator==(const HomologyGroup&, const HomologyGroup&) = default;
};

/// Unreduced simplicial homology H_k(K).
inline HomologyGroup homology(const SimplicialComplex& K, int k, Coefficients coeffs = Coefficients::Z) {
  if (K.empty() && k == 0) return {};
  if (k < 0 || k > K.dimension())
    throw InputError("homology: k=" + std::to_string(k) + " outside [0, " + std::to_string(K.dimension()) + "]");
  const std::size_t chains = K.count(k);
  HomologyGroup h;
  if (coeffs == Coefficients::Z2) {
    const std::size_t rank_out = k >= 1 ? rank_gf2(boundary_matrix_gf2(K, k)) : 0;
    const std::size_t rank_in = k + 1 <= K.dimension() ? rank_gf2(boundary_matrix_gf2(K, k + 1)) : 0;
    h.betti = chains - rank_out - rank_in;
    return h;
  }
  const std::size_t rank_out = k >= 1 ? smith_normal_form(boundary_matrix(K, k)).rank() : 0;
  std::size_t rank_in = 0;
  if (k + 1 <= K.dimension()) {
    auto snf = smith_normal_form(boundary_matrix(K, k + 1));
    for (const auto& f : snf.invariant_factors()) {
      ++rank_in;
      if (f > 1) h.torsion.push_back(f);
    }
  }
  h.betti = chains - rank_out - rank_in;
  return h;
}

inline long euler_characteristic(const SimplicialComplex& K) {
  long chi = 0;
  for (int k = 0; k <= K.dimension(); ++k) chi += (k % 2 == 0 ? 1 : -1) * static_cast<long>(K.count(k));
  return chi;
}

/**
 * Orientation data of a closed pseudomanifold. `signs[j]` multiplies the
 * ascending-order orientation of the j-th top simplex; for a non-orientable
 * complex the mod-2 class is the sum of all top simplices and `signs` holds the
 * (inconsistent) propagation result.
 */
struct FundamentalClass {
  bool orientable = false;
  std::vector<int> signs;

  /// Signed top chain, valid as an integral cycle only when orientable.
  std::vector<long> chain() const { return {signs.begin(), signs.end()}; }

  FundamentalClass reversed() const {
    FundamentalClass r = *this;
    for (auto& s : r.signs) s = -s;
    return r;
  }
};

namespace detail {

struct TopAdjacency {
  // for each codim-1 face: the two top simplices and the face's incidence sign in each
  struct Wing {
    std::size_t simplex;
    int sign;
  };
  std::vector<std::vector<Wing>> faces;
};

inline TopAdjacency top_adjacency(const SimplicialComplex& K) {
  const int n = K.dimension();
  TopAdjacency adj;
  adj.faces.resize(K.count(n - 1));
  const auto& tops = K.simplices(n);
  for (std::size_t j = 0; j < tops.size(); ++j)
    for (std::size_t i = 0; i < tops[j].size(); ++i) {
      Simplex face = tops[j];
      face.erase(face.begin() + static_cast<std::ptrdiff_t>(i));
      adj.faces[*K.index_of(face)].push_back({j, (i % 2 == 0) ? 1 : -1});
    }
  return adj;
}

} // namespace detail

/// Throws StructuralError unless every codim-1 face lies in exactly two top
/// simplices, every simplex is a face of a top simplex, and the top simplices
/// are connected through codim-1 faces.
inline void check_closed_pseudomanifold(const SimplicialComplex& K) {
  const int n = K.dimension();
  if (n < 1) throw StructuralError("closed pseudomanifold check: dimension must be at least 1");
  for (const auto& s : K.maximal_simplices())
    if (static_cast<int>(s.size()) - 1 != n)
      throw StructuralError("not pure: maximal simplex " + to_string(s) + " has dimension " +
                            std::to_string(s.size() - 1));
  auto adj = detail::top_adjacency(K);
  const auto& faces = K.simplices(n - 1);
  for (std::size_t f = 0; f < faces.size(); ++f)
    if (adj.faces[f].size() != 2)
      throw StructuralError("face " + to_string(faces[f]) + " lies in " + std::to_string(adj.faces[f].size()) +
                            " top simplices (expected 2)");
  // strong connectivity
  std::vector<std::vector<std::size_t>> nbrs(K.count(n));
  for (const auto& w : adj.faces) {
    nbrs[w[0].simplex].push_back(w[1].simplex);
    nbrs[w[1].simplex].push_back(w[0].simplex);
  }
  std::vector<bool> seen(K.count(n), false);
  std::queue<std::size_t> todo;
  todo.push(0);
  seen[0] = true;
  std::size_t reached = 1;
  while (!todo.empty()) {
    auto s = todo.front();
    todo.pop();
    for (auto t : nbrs[s])
      if (!seen[t]) {
        seen[t] = true;
        ++reached;
        todo.push(t);
      }
  }
  if (reached != K.count(n)) {
    std::size_t missing = std::find(seen.begin(), seen.end(), false) - seen.begin();
    throw StructuralError("not strongly connected: top simplex " + to_string(K.simplices(n)[missing]) +
                          " unreachable through codimension-1 faces");
  }
}

/// Propagates orientations across the dual graph from the first top simplex.
inline FundamentalClass fundamental_class(const SimplicialComplex& K) {
  check_closed_pseudomanifold(K);
  const int n = K.dimension();
  auto adj = detail::top_adjacency(K);
  std::vector<std::vector<std::pair<std::size_t, int>>> nbrs(K.count(n));  // (neighbor, required sign ratio)
  for (const auto& w : adj.faces) {
    // consistency: s_a * sign_a + s_b * sign_b = 0  =>  s_b = -s_a * sign_a * sign_b
    const int ratio = -w[0].sign * w[1].sign;
    nbrs[w[0].simplex].push_back({w[1].simplex, ratio});
    nbrs[w[1].simplex].push_back({w[0].simplex, ratio});
  }
  FundamentalClass fc;
  fc.signs.assign(K.count(n), 0);
  fc.orientable = true;
  fc.signs[0] = 1;
  std::queue<std::size_t> todo;
  todo.push(0);
  while (!todo.empty()) {
    auto s = todo.front();
    todo.pop();
    for (auto [t, ratio] : nbrs[s]) {
      const int want = fc.signs[s] * ratio;
      if (fc.signs[t] == 0) {
        fc.signs[t] = want;
        todo.push(t);
      } else if (fc.signs[t] != want) {
        fc.orientable = false;
      }
    }
  }
  return fc;
}

/// Cone over K with two new apex vertices; the suspension of a closed
/// n-pseudomanifold is a closed (n+1)-pseudomanifold.
inline SimplicialComplex suspension(const SimplicialComplex& K, Label north, Label south) {
  if (K.contains({north}) || K.contains({south}) || north == south)
    throw InputError("suspension: apex labels must be new and distinct");
  std::vector<std::vector<Label>> tops;
  for (const auto& s : K.maximal_simplices()) {
    auto a = s;
    a.push_back(north);
    auto b = s;
    b.push_back(south);
    tops.push_back(std::move(a));
    tops.push_back(std::move(b));
  }
  return SimplicialComplex::build(tops);
}

/// Rename vertices through an injective map.
inline SimplicialComplex relabel(const SimplicialComplex& K, const std::map<Label, Label>& rename) {
  std::set<Label> image;
  for (auto v : K.vertices()) {
    auto it = rename.find(v);
    if (it == rename.end()) throw InputError("relabel: vertex " + std::to_string(v) + " not mapped");
    if (!image.insert(it->second).second) throw InputError("relabel: map is not injective");
  }
  std::vector<std::vector<Label>> tops;
  for (const auto& s : K.maximal_simplices()) {
    std::vector<Label> t;
    for (auto v : s) t.push_back(rename.at(v));
    tops.push_back(std::move(t));
  }
  return SimplicialComplex::build(tops);
}

} // namespace framedcob
