#include <gtest/gtest.h>

#include <random>

#include "framedcob/quadratic.hpp"
#include "framedcob/triangulations.hpp"

using namespace framedcob;
namespace tri = framedcob::triangulations;

namespace {

BitVector bits(std::initializer_list<int> v) {
  BitVector out(v.size());
  std::size_t i = 0;
  for (int b : v) out.set(i++, b != 0);
  return out;
}

// q(x) by summing over the support in order, applying the refinement relation
// one basis vector at a time.
bool q_by_relation(const Gf2Matrix& gram, const BitVector& values, const BitVector& x) {
  BitVector partial(x.size());
  bool q = false;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!x.get(i)) continue;
    BitVector e(x.size());
    e.set(i, true);
    q ^= values.get(i) ^ gram.bilinear(partial, e);
    partial.set(i, true);
  }
  return q;
}

// Majority value of q over all vectors, computed with the relation above.
int majority_oracle(const Gf2Matrix& gram, const BitVector& values) {
  std::size_t ones = 0;
  const std::size_t n = gram.rows();
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m)
    ones += q_by_relation(gram, values, BitVector::from_mask(m, n));
  return 2 * ones > (std::size_t{1} << n) ? 1 : 0;
}

Gf2Matrix random_invertible(std::size_t n, std::mt19937& rng) {
  for (;;) {
    Gf2Matrix p(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) p.set(i, j, rng() & 1);
    if (rank_gf2(p) == n) return p;
  }
}

// Random nondegenerate alternating form: the hyperbolic form in a random basis.
Gf2Matrix random_alternating(std::size_t genus, std::mt19937& rng) {
  auto p = random_invertible(2 * genus, rng);
  return p.transpose() * hyperbolic_gram(genus) * p;
}

BitVector random_bits(std::size_t n, std::mt19937& rng) {
  BitVector v(n);
  for (std::size_t i = 0; i < n; ++i) v.set(i, rng() & 1);
  return v;
}

// The same refinement written in the basis given by the columns of p.
QuadraticRefinement change_basis(const QuadraticRefinement& q, const Gf2Matrix& p) {
  BitVector values(q.dim());
  for (std::size_t i = 0; i < q.dim(); ++i) values.set(i, q(p.column(i)));
  return build_refinement(p.transpose() * q.gram() * p, values);
}

} // namespace

TEST(Quadratic, BuildGenusOneExamples) {
  const auto h = hyperbolic_gram(1);
  auto triv = build_refinement(h, bits({0, 0}));
  EXPECT_FALSE(triv(bits({1, 0})));
  EXPECT_FALSE(triv(bits({0, 1})));
  EXPECT_TRUE(triv(bits({1, 1})));
  EXPECT_FALSE(triv(bits({0, 0})));
  auto torus = build_refinement(h, bits({1, 1}));
  EXPECT_TRUE(torus(bits({1, 0})));
  EXPECT_TRUE(torus(bits({0, 1})));
  EXPECT_TRUE(torus(bits({1, 1})));
}

TEST(Quadratic, NonHomomorphism) {
  auto q = build_refinement(hyperbolic_gram(1), bits({1, 1}));
  const auto a = bits({1, 0}), b = bits({0, 1});
  EXPECT_TRUE(q(a + b));
  EXPECT_FALSE(q(a) != q(b));
  EXPECT_NE(q(a + b), q(a) != q(b));
}

TEST(Quadratic, GenusZero) {
  auto q = build_refinement(Gf2Matrix(0, 0), BitVector(0));
  EXPECT_EQ(q.genus(), 0u);
  EXPECT_EQ(arf(q), 0);
  EXPECT_EQ(arf_democratic(q), 0);
  EXPECT_EQ(q.table().size(), 1u);
  EXPECT_TRUE(symplectic_basis(Gf2Matrix(0, 0)).a.empty());
}

TEST(Quadratic, BuildRejectsBadForms) {
  EXPECT_THROW(build_refinement(Gf2Matrix{{1, 1}, {1, 0}}, bits({0, 0})), InputError);
  EXPECT_THROW(build_refinement(Gf2Matrix{{0, 1}, {0, 0}}, bits({0, 0})), InputError);
  EXPECT_THROW(build_refinement(Gf2Matrix(2, 2), bits({0, 0})), InputError);
  EXPECT_THROW(build_refinement(Gf2Matrix(3, 3), bits({0, 0, 0})), InputError);
  EXPECT_THROW(build_refinement(hyperbolic_gram(1), bits({0, 0, 0})), InputError);
  EXPECT_THROW(build_refinement(Gf2Matrix(2, 3), bits({0, 0})), InputError);
  auto q = build_refinement(hyperbolic_gram(1), bits({0, 0}));
  EXPECT_THROW(q(bits({1})), InputError);
}

TEST(Quadratic, TableMatchesPointwiseAndOracle) {
  std::mt19937 rng(1);
  for (std::size_t g = 1; g <= 4; ++g) {
    auto gram = random_alternating(g, rng);
    auto values = random_bits(2 * g, rng);
    auto q = build_refinement(gram, values);
    auto table = q.table();
    for (std::uint64_t m = 0; m < table.size(); ++m) {
      const auto x = BitVector::from_mask(m, 2 * g);
      EXPECT_EQ(table[m] != 0, q(x));
      EXPECT_EQ(q(x), q_by_relation(gram, values, x));
    }
  }
}

TEST(Quadratic, RefinementRelationExhaustive) {
  // every refinement of one random form per genus, every pair of vectors
  std::mt19937 rng(2);
  for (std::size_t g = 0; g <= 3; ++g) {
    const std::size_t n = 2 * g;
    auto gram = random_alternating(g, rng);
    for (std::uint64_t vm = 0; vm < (std::uint64_t{1} << n); ++vm) {
      auto q = build_refinement(gram, BitVector::from_mask(vm, n));
      auto t = q.table();
      ASSERT_EQ(t[0], 0);
      for (std::uint64_t x = 0; x < t.size(); ++x)
        for (std::uint64_t y = 0; y < t.size(); ++y) {
          const bool pair = gram.bilinear(BitVector::from_mask(x, n), BitVector::from_mask(y, n));
          ASSERT_EQ(t[x ^ y], t[x] ^ t[y] ^ pair) << "g=" << g;
        }
    }
  }
}

TEST(Quadratic, SymplecticBasisExamples) {
  auto s = symplectic_basis(hyperbolic_gram(1));
  ASSERT_EQ(s.a.size(), 1u);
  EXPECT_EQ(s.a[0], bits({1, 0}));
  EXPECT_EQ(s.b[0], bits({0, 1}));
  auto s2 = symplectic_basis(hyperbolic_gram(2));
  EXPECT_EQ(s2.a.size(), 2u);
  EXPECT_TRUE(is_symplectic_basis(hyperbolic_gram(2), s2));
  std::mt19937 rng(3);
  for (int trial = 0; trial < 30; ++trial) {
    auto g6 = random_alternating(3, rng);
    auto s3 = symplectic_basis(g6);
    EXPECT_TRUE(is_symplectic_basis(g6, s3));
    EXPECT_EQ(s3.a.size(), 3u);
  }
  EXPECT_THROW(symplectic_basis(Gf2Matrix(2, 2)), InputError);
  EXPECT_THROW(symplectic_basis(Gf2Matrix{{1, 0}, {0, 1}}), InputError);
}

TEST(Quadratic, IsSymplecticBasisRejects) {
  const auto h = hyperbolic_gram(2);
  SymplecticBasis wrong{{bits({1, 0, 0, 0}), bits({0, 0, 1, 0})}, {bits({0, 0, 0, 1}), bits({0, 1, 0, 0})}};
  EXPECT_FALSE(is_symplectic_basis(h, wrong));
  SymplecticBasis short_basis{{bits({1, 0, 0, 0})}, {bits({0, 1, 0, 0})}};
  EXPECT_FALSE(is_symplectic_basis(h, short_basis));
}

TEST(Quadratic, ArfExamples) {
  const auto h = hyperbolic_gram(1);
  EXPECT_EQ(arf(build_refinement(h, bits({1, 1}))), 1);
  EXPECT_EQ(arf(build_refinement(h, bits({0, 0}))), 0);
  EXPECT_EQ(arf(build_refinement(h, bits({1, 0}))), 0);
  EXPECT_EQ(arf(build_refinement(h, bits({0, 1}))), 0);
  EXPECT_EQ(arf(build_refinement(hyperbolic_gram(2), bits({1, 1, 1, 1}))), 0);
  EXPECT_EQ(arf(build_refinement(hyperbolic_gram(2), bits({1, 1, 0, 1}))), 1);
}

TEST(Quadratic, DemocraticExamples) {
  const auto h = hyperbolic_gram(1);
  auto torus = democratic_count(build_refinement(h, bits({1, 1})));
  EXPECT_EQ(torus.zeros, 1u);
  EXPECT_EQ(torus.ones, 3u);
  EXPECT_EQ(arf_democratic(build_refinement(h, bits({1, 1}))), 1);
  auto triv = democratic_count(build_refinement(h, bits({0, 0})));
  EXPECT_EQ(triv.zeros, 3u);
  EXPECT_EQ(triv.ones, 1u);
  EXPECT_EQ(arf_democratic(build_refinement(h, bits({0, 0}))), 0);
}

TEST(Quadratic, DemocraticCountsAreClassical) {
  // a nondegenerate refinement of genus g takes its Arf value 2^{g-1}(2^g + 1) times
  std::mt19937 rng(4);
  for (std::size_t g = 1; g <= 5; ++g) {
    auto q = build_refinement(random_alternating(g, rng), random_bits(2 * g, rng));
    auto c = democratic_count(q);
    const std::uint64_t major = (std::uint64_t{1} << (g - 1)) * ((std::uint64_t{1} << g) + 1);
    EXPECT_EQ(std::max(c.zeros, c.ones), major);
    EXPECT_EQ(c.zeros + c.ones, std::uint64_t{1} << (2 * g));
  }
}

TEST(Quadratic, ArfAgreesWithMajorityOracle) {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 120; ++trial) {
    const std::size_t g = 1 + trial % 6;
    auto gram = random_alternating(g, rng);
    auto values = random_bits(2 * g, rng);
    auto q = build_refinement(gram, values);
    EXPECT_EQ(arf(q), arf_democratic(q));
    if (g <= 4) { EXPECT_EQ(arf(q), majority_oracle(gram, values)); }
  }
}

TEST(Quadratic, ArfIndependentOfBasis) {
  std::mt19937 rng(6);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t g = 1 + trial % 3;
    auto q = build_refinement(random_alternating(g, rng), random_bits(2 * g, rng));
    const int a = arf(q);
    auto p = random_invertible(2 * g, rng);
    auto q2 = change_basis(q, p);
    EXPECT_EQ(arf(q2), a);
    EXPECT_EQ(arf_democratic(q2), a);
    // a second symplectic basis: extract from the permuted form and map back through p
    auto s2 = symplectic_basis(q2.gram());
    SymplecticBasis mapped;
    for (const auto& v : s2.a) mapped.a.push_back(p * v);
    for (const auto& v : s2.b) mapped.b.push_back(p * v);
    ASSERT_TRUE(is_symplectic_basis(q.gram(), mapped));
    EXPECT_EQ(arf(q, mapped), a);
  }
}

TEST(Quadratic, DirectSumAdds) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t g1 = trial % 3, g2 = 1 + trial % 2;
    auto q1 = build_refinement(random_alternating(g1, rng), random_bits(2 * g1, rng));
    auto q2 = build_refinement(random_alternating(g2, rng), random_bits(2 * g2, rng));
    auto s = direct_sum(q1, q2);
    EXPECT_EQ(s.genus(), g1 + g2);
    EXPECT_EQ(arf(s), arf(q1) ^ arf(q2));
    EXPECT_EQ(arf_democratic(s), arf(q1) ^ arf(q2));
  }
}

TEST(Quadratic, DemocraticRejectsLargeDimension) {
  auto q = build_refinement(hyperbolic_gram(13), BitVector(26));
  EXPECT_THROW(arf_democratic(q), UnsupportedError);
  EXPECT_EQ(arf(q), 0);
}

TEST(Quadratic, RefinementFromSurface) {
  auto t = validate_surface(tri::torus7());
  auto a = cycle_from_edges(t, tri::torus7_cycle_a());
  auto b = cycle_from_edges(t, tri::torus7_cycle_b());
  auto r11 = refinement_from_surface(t, {{"a", a, 1}, {"b", b, 1}});
  EXPECT_EQ(r11.names, (std::vector<std::string>{"a", "b"}));
  EXPECT_EQ(r11.q.gram(), hyperbolic_gram(1));
  EXPECT_EQ(arf(r11.q), 1);
  auto r00 = refinement_from_surface(t, {{"a", a, 0}, {"b", b, 0}});
  EXPECT_EQ(arf(r00.q), 0);
  EXPECT_TRUE(r00.q(bits({1, 1})));

  auto s2 = validate_surface(tri::tetrahedron_boundary());
  auto empty = refinement_from_surface(s2, {});
  EXPECT_EQ(empty.q.dim(), 0u);
  EXPECT_EQ(arf(empty.q), 0);

  EXPECT_THROW(refinement_from_surface(t, {{"a", a, 1}}), InputError);
  EXPECT_THROW(refinement_from_surface(t, {{"a", a, 1}, {"b", a, 1}}), InputError);
  EXPECT_THROW(refinement_from_surface(t, {{"a", a, 1}, {"x", chain_from_edges(t, {{0, 1}}), 0}}), InputError);
  auto p = validate_surface(tri::rp2_6());
  EXPECT_THROW(refinement_from_surface(p, {}), UnsupportedError);
}

TEST(Quadratic, GenusTwoSurfaceRefinement) {
  auto S = validate_surface(tri::genus2());
  auto basis = h1_basis(S);
  std::vector<NamedCycle> named;
  for (std::size_t i = 0; i < basis.size(); ++i) named.push_back({"c" + std::to_string(i), basis[i], 1});
  auto r = refinement_from_surface(S, named);
  EXPECT_EQ(r.q.genus(), 2u);
  EXPECT_EQ(arf(r.q), arf_democratic(r.q));
}
