#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "framedcob/errors.hpp"
#include "framedcob/gf2.hpp"
#include "framedcob/surface.hpp"

namespace framedcob {

inline constexpr std::size_t kMaxTableDim = 24;

/**
 * Quadratic refinement q of a nondegenerate alternating form over GF(2).
 *
 * Stored as its values on the standard basis together with the Gram matrix;
 * every other value follows from q(x + y) = q(x) + q(y) + x^T G y, which
 * expands to q(x) = sum_i x_i q(e_i) + sum_{i<j} x_i x_j G_ij.
 */
class QuadraticRefinement {
public:
  QuadraticRefinement() = default;

  QuadraticRefinement(Gf2Matrix gram, BitVector basis_values)
      : gram_(std::move(gram)), basis_values_(std::move(basis_values)) {
    if (gram_.rows() != gram_.cols()) throw InputError("quadratic refinement: Gram matrix is not square");
    if (basis_values_.size() != gram_.rows())
      throw InputError("quadratic refinement: " + std::to_string(basis_values_.size()) + " basis values for dimension " +
                       std::to_string(gram_.rows()));
    if (!gram_.is_symmetric()) throw InputError("quadratic refinement: Gram matrix is not symmetric");
    if (!gram_.has_zero_diagonal()) throw InputError("quadratic refinement: Gram matrix is not alternating");
    if (rank_gf2(gram_) != gram_.rows()) throw InputError("quadratic refinement: Gram matrix is degenerate");
  }

  std::size_t dim() const { return gram_.rows(); }
  std::size_t genus() const { return dim() / 2; }
  const Gf2Matrix& gram() const { return gram_; }
  const BitVector& basis_values() const { return basis_values_; }

  bool pairing(const BitVector& x, const BitVector& y) const { return gram_.bilinear(x, y); }

  bool operator()(const BitVector& x) const {
    if (x.size() != dim()) throw InputError("quadratic refinement: argument has the wrong length");
    bool acc = x.dot(basis_values_);
    for (std::size_t i = 0; i < dim(); ++i) {
      if (!x.get(i)) continue;
      for (std::size_t j = i + 1; j < dim(); ++j)
        if (x.get(j) && gram_.get(i, j)) acc = !acc;
    }
    return acc;
  }

  /// Value of q on the vector whose bit i is (mask >> i) & 1.
  bool at_mask(std::uint64_t mask) const { return (*this)(BitVector::from_mask(mask, dim())); }

  /// Full value table indexed by mask, filled along a Gray code.
  std::vector<std::uint8_t> table() const {
    if (dim() > kMaxTableDim) throw UnsupportedError("quadratic refinement: table needs dimension <= 24");
    std::vector<std::uint8_t> values(std::size_t{1} << dim(), 0);
    // q(x + e_i) = q(x) + q(e_i) + x^T G e_i
    std::vector<std::uint64_t> gram_cols(dim(), 0);
    for (std::size_t i = 0; i < dim(); ++i)
      for (std::size_t j = 0; j < dim(); ++j)
        if (gram_.get(j, i)) gram_cols[i] |= std::uint64_t{1} << j;
    std::uint64_t x = 0;
    bool q = false;
    for (std::uint64_t step = 1; step < (std::uint64_t{1} << dim()); ++step) {
      const auto i = static_cast<std::size_t>(std::countr_zero(step));
      q ^= basis_values_.get(i) ^ (std::popcount(x & gram_cols[i]) & 1);
      x ^= std::uint64_t{1} << i;
      values[x] = q;
    }
    return values;
  }

private:
  Gf2Matrix gram_;
  BitVector basis_values_;
};

inline QuadraticRefinement build_refinement(const Gf2Matrix& gram, const BitVector& basis_values) {
  return QuadraticRefinement(gram, basis_values);
}

/// Block-diagonal direct sum of two refinements.
inline QuadraticRefinement direct_sum(const QuadraticRefinement& a, const QuadraticRefinement& b) {
  const std::size_t n = a.dim() + b.dim();
  Gf2Matrix g(n, n);
  BitVector v(n);
  for (std::size_t i = 0; i < a.dim(); ++i) {
    v.set(i, a.basis_values().get(i));
    for (std::size_t j = 0; j < a.dim(); ++j) g.set(i, j, a.gram().get(i, j));
  }
  for (std::size_t i = 0; i < b.dim(); ++i) {
    v.set(a.dim() + i, b.basis_values().get(i));
    for (std::size_t j = 0; j < b.dim(); ++j) g.set(a.dim() + i, a.dim() + j, b.gram().get(i, j));
  }
  return QuadraticRefinement(std::move(g), std::move(v));
}

/// The standard hyperbolic Gram matrix for genus g: pairs (e_{2i}, e_{2i+1}).
inline Gf2Matrix hyperbolic_gram(std::size_t genus) {
  Gf2Matrix g(2 * genus, 2 * genus);
  for (std::size_t i = 0; i < genus; ++i) {
    g.set(2 * i, 2 * i + 1, true);
    g.set(2 * i + 1, 2 * i, true);
  }
  return g;
}

struct SymplecticBasis {
  std::vector<BitVector> a;
  std::vector<BitVector> b;
};

/// Throws InputError unless gram is symmetric, alternating and nondegenerate.
inline void check_alternating_nondegenerate(const Gf2Matrix& gram) {
  if (gram.rows() != gram.cols()) throw InputError("Gram matrix is not square");
  if (!gram.is_symmetric()) throw InputError("Gram matrix is not symmetric");
  if (!gram.has_zero_diagonal()) throw InputError("Gram matrix is not alternating");
  if (rank_gf2(gram) != gram.rows()) throw InputError("Gram matrix is degenerate");
}

/// Verifies the symplectic-basis relations exactly.
inline bool is_symplectic_basis(const Gf2Matrix& gram, const SymplecticBasis& s) {
  const std::size_t g = s.a.size();
  if (s.b.size() != g || 2 * g != gram.rows()) return false;
  for (std::size_t i = 0; i < g; ++i)
    for (std::size_t j = 0; j < g; ++j) {
      if (gram.bilinear(s.a[i], s.b[j]) != (i == j)) return false;
      if (gram.bilinear(s.a[i], s.a[j]) || gram.bilinear(s.b[i], s.b[j])) return false;
    }
  std::vector<BitVector> all = s.a;
  all.insert(all.end(), s.b.begin(), s.b.end());
  return span_rank(all, gram.rows()) == all.size();
}

/**
 * Hyperbolic-pair extraction. The working set starts as the standard basis;
 * each round takes its first vector as a_i, the first remaining vector pairing
 * to 1 with it as b_i, and projects the rest onto the orthogonal complement
 * of span(a_i, b_i).
 */
inline SymplecticBasis symplectic_basis(const Gf2Matrix& gram) {
  check_alternating_nondegenerate(gram);
  const std::size_t n = gram.rows();
  std::vector<BitVector> work;
  for (std::size_t i = 0; i < n; ++i) {
    BitVector e(n);
    e.set(i, true);
    work.push_back(std::move(e));
  }
  SymplecticBasis out;
  while (!work.empty()) {
    BitVector a = work.front();
    work.erase(work.begin());
    std::size_t partner = work.size();
    for (std::size_t k = 0; k < work.size(); ++k)
      if (gram.bilinear(a, work[k])) {
        partner = k;
        break;
      }
    if (partner == work.size()) throw InputError("symplectic_basis: form is degenerate");
    BitVector b = work[partner];
    work.erase(work.begin() + static_cast<std::ptrdiff_t>(partner));
    for (auto& w : work) {
      const bool wa = gram.bilinear(w, a);
      const bool wb = gram.bilinear(w, b);
      if (wb) w ^= a;
      if (wa) w ^= b;
    }
    out.a.push_back(std::move(a));
    out.b.push_back(std::move(b));
  }
  if (!is_symplectic_basis(gram, out)) throw InternalError("symplectic_basis: extracted basis fails verification");
  return out;
}

inline int arf(const QuadraticRefinement& q, const SymplecticBasis& basis) {
  int acc = 0;
  for (std::size_t i = 0; i < basis.a.size(); ++i) acc ^= (q(basis.a[i]) && q(basis.b[i])) ? 1 : 0;
  return acc;
}

/// sum_i q(a_i) q(b_i) mod 2 over the extracted symplectic basis.
inline int arf(const QuadraticRefinement& q) { return arf(q, symplectic_basis(q.gram())); }

struct DemocraticCount {
  std::uint64_t zeros = 0;
  std::uint64_t ones = 0;
};

inline DemocraticCount democratic_count(const QuadraticRefinement& q) {
  if (q.dim() > kMaxTableDim) throw UnsupportedError("arf_democratic: dimension " + std::to_string(q.dim()) + " > 24");
  DemocraticCount c;
  for (auto v : q.table()) (v ? c.ones : c.zeros)++;
  return c;
}

/// The value q takes most often; independent of any basis.
inline int arf_democratic(const QuadraticRefinement& q) {
  const auto c = democratic_count(q);
  if (c.zeros == c.ones) throw InternalError("arf_democratic: tied counts, refinement is corrupt");
  return c.zeros > c.ones ? 0 : 1;
}

/// Basis cycles on a surface paired with their residues.
struct NamedCycle {
  std::string name;
  CycleZ2 cycle;
  int residue = 0;
};

struct SurfaceRefinement {
  QuadraticRefinement q;
  std::vector<std::string> names;  // coordinate i of q is names[i]
};

/// q on H_1(S; Z/2) with q(c_i) = residue_i on the given basis cycles and the
/// Gram matrix of intersection numbers among them.
inline SurfaceRefinement refinement_from_surface(const ClosedSurface& S, const std::vector<NamedCycle>& cycles) {
  std::vector<CycleZ2> basis;
  for (const auto& c : cycles) {
    if (!is_cycle(S, c.cycle)) throw InputError("refinement_from_surface: '" + c.name + "' is not a mod-2 cycle");
    basis.push_back(c.cycle);
  }
  if (!is_homology_basis(S, basis))
    throw InputError("refinement_from_surface: " + std::to_string(cycles.size()) +
                     " cycles do not form a basis of H_1 (need 2g = " + std::to_string(2 * *S.genus) +
                     " independent classes)");
  SurfaceRefinement out;
  BitVector values(cycles.size());
  for (std::size_t i = 0; i < cycles.size(); ++i) {
    values.set(i, cycles[i].residue & 1);
    out.names.push_back(cycles[i].name);
  }
  out.q = QuadraticRefinement(gram_matrix(S, basis), std::move(values));
  return out;
}

} // namespace framedcob
