#include <gtest/gtest.h>

#include "framedcob/degree.hpp"
#include "framedcob/triangulations.hpp"

using namespace framedcob;
namespace tri = framedcob::triangulations;

namespace {

long both(const ValidatedMap& f) {
  const long p = degree_by_preimage(f);
  const long h = degree_by_homology(f);
  EXPECT_EQ(p, h);
  return p;
}

// Brute-force degree: push the fundamental cycle forward simplex by simplex and
// read off the coefficient on one target, using an explicit sign for the
// ordered image tuple.
long pushforward_oracle(const ValidatedMap& f, std::size_t target) {
  const auto o = default_orientations(f);
  const int n = f.map.domain.dimension();
  const auto& tops = f.map.domain.simplices(n);
  long coeff = 0;
  for (std::size_t j = 0; j < tops.size(); ++j) {
    std::vector<Label> seq;
    for (auto v : tops[j]) seq.push_back(f.map.vertex_map.at(v));
    auto sorted = seq;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) continue;
    if (*f.map.codomain.index_of(sorted) != target) continue;
    // sign by counting swaps of a bubble sort
    int sign = 1;
    for (std::size_t a = 0; a < seq.size(); ++a)
      for (std::size_t b = 0; b + 1 < seq.size() - a; ++b)
        if (seq[b] > seq[b + 1]) {
          std::swap(seq[b], seq[b + 1]);
          sign = -sign;
        }
    coeff += sign * o.domain.signs[j];
  }
  return coeff * o.codomain.signs[target];
}

} // namespace

TEST(Degree, ValidateExamples) {
  auto id = witnesses::identity(tri::tetrahedron_boundary());
  EXPECT_TRUE(id.degenerate_tops.empty());
  auto c = witnesses::constant(tri::tetrahedron_boundary(), 2);
  EXPECT_EQ(c.degenerate_tops.size(), 4u);
  auto dc = witnesses::double_cover();
  EXPECT_EQ(dc.map.domain.count(1), 6u);
  EXPECT_EQ(dc.map.codomain.count(1), 3u);
  EXPECT_TRUE(dc.degenerate_tops.empty());
}

TEST(Degree, ValidateErrors) {
  auto tri3 = tri::polygon(3);
  // vertex 2 unmapped
  EXPECT_THROW(validate_map({tri3, tri3, {{0, 0}, {1, 1}}}), InputError);
  // image not a codomain vertex
  EXPECT_THROW(validate_map({tri3, tri3, {{0, 0}, {1, 1}, {2, 7}}}), InputError);
  // edge [0,3] of the square maps onto the non-edge [0,2]
  auto sq = tri::polygon(4);
  try {
    validate_map({sq, sq, {{0, 0}, {1, 1}, {2, 2}, {3, 2}}});
    ADD_FAILURE() << "expected an error";
  } catch (const InputError& e) {
    EXPECT_NE(std::string(e.what()).find("[0,3]"), std::string::npos) << e.what();
  }
}

TEST(Degree, Examples) {
  EXPECT_EQ(both(witnesses::identity(tri::tetrahedron_boundary())), 1);
  EXPECT_EQ(both(witnesses::identity(tri::octahedron())), 1);
  EXPECT_EQ(both(witnesses::identity(tri::polygon(5))), 1);
  EXPECT_EQ(both(witnesses::identity(tri::torus7())), 1);
  EXPECT_EQ(both(witnesses::double_cover()), 2);
  EXPECT_EQ(both(witnesses::constant(tri::tetrahedron_boundary(), 0)), 0);
  EXPECT_EQ(both(witnesses::constant(tri::polygon(3), 1)), 0);
  EXPECT_EQ(both(witnesses::octahedron_reflection()), -1);
}

TEST(Degree, BuiltInWitnesses) {
  for (long d : {-3L, -2L, -1L, 0L, 1L, 2L, 3L}) {
    EXPECT_EQ(both(witnesses::sphere_map(d, 1)), d);
    EXPECT_EQ(both(witnesses::sphere_map(d, 2)), d);
  }
  EXPECT_THROW(witnesses::sphere_map(1, 3), InputError);
}

TEST(Degree, IndependentOfTarget) {
  std::vector<ValidatedMap> maps{witnesses::double_cover(), witnesses::octahedron_reflection(),
                                 witnesses::sphere_map(-2, 2), witnesses::sphere_map(3, 2),
                                 witnesses::identity(tri::genus2())};
  for (const auto& f : maps) {
    const auto o = default_orientations(f);
    const long d = degree_by_homology(f, o);
    const auto regular = regular_targets(f);
    EXPECT_FALSE(regular.empty());
    for (auto t : regular) EXPECT_EQ(degree_at(f, o, t), d);
    for (std::size_t t = 0; t < f.map.codomain.count(f.map.codomain.dimension()); ++t) {
      EXPECT_EQ(degree_at(f, o, t), d);
      EXPECT_EQ(pushforward_oracle(f, t), d);
    }
  }
}

TEST(Degree, PartiallyDegenerateMap) {
  // square onto triangle: edge [2,3] collapses, the other three edges wrap once
  SimplicialMap f{tri::polygon(4), tri::polygon(3), {{0, 0}, {1, 1}, {2, 2}, {3, 2}}};
  auto v = validate_map(f);
  EXPECT_EQ(v.degenerate_tops.size(), 1u);
  EXPECT_EQ(both(v), 1);
  // regular targets avoid the closure of the collapsed image, vertex 2
  auto reg = regular_targets(v);
  ASSERT_EQ(reg.size(), 1u);
  EXPECT_EQ(v.map.codomain.simplices(1)[reg[0]], (Simplex{0, 1}));
}

TEST(Degree, Composition) {
  std::vector<ValidatedMap> onto_triangle{witnesses::circle_map(2), witnesses::circle_map(-1), witnesses::circle_map(3),
                                          witnesses::circle_map(0)};
  std::vector<ValidatedMap> on_triangle{witnesses::circle_map(1), witnesses::circle_map(-1),
                                        witnesses::identity(tri::polygon(3)),
                                        witnesses::constant(tri::polygon(3), 2)};
  for (const auto& f : onto_triangle)
    for (const auto& g : on_triangle) EXPECT_EQ(both(compose(g, f)), both(g) * both(f));
  for (const auto& f : onto_triangle)
    for (const auto& g : on_triangle)
      EXPECT_EQ(both(compose(witnesses::suspend(g), witnesses::suspend(f))), both(g) * both(f));
  auto r = witnesses::octahedron_reflection();
  EXPECT_EQ(both(compose(r, r)), 1);
  EXPECT_THROW(compose(witnesses::double_cover(), witnesses::double_cover()), InputError);
}

TEST(Degree, OrientationReversalNegates) {
  for (const auto& f : {witnesses::double_cover(), witnesses::sphere_map(3, 2), witnesses::octahedron_reflection()}) {
    auto o = default_orientations(f);
    const long d = degree_by_preimage(f, o);
    Orientations rd{o.domain.reversed(), o.codomain};
    Orientations rc{o.domain, o.codomain.reversed()};
    Orientations rb{o.domain.reversed(), o.codomain.reversed()};
    EXPECT_EQ(degree_by_preimage(f, rd), -d);
    EXPECT_EQ(degree_by_homology(f, rd), -d);
    EXPECT_EQ(degree_by_preimage(f, rc), -d);
    EXPECT_EQ(degree_by_homology(f, rc), -d);
    EXPECT_EQ(degree_by_homology(f, rb), d);
  }
}

TEST(Degree, RequiresOrientedEqualDimensions) {
  // S^1 into S^2 via an edge of the tetrahedron boundary
  SimplicialMap f{tri::polygon(3), tri::tetrahedron_boundary(), {{0, 0}, {1, 1}, {2, 2}}};
  auto v = validate_map(f);
  EXPECT_THROW(degree_by_preimage(v), InputError);
  EXPECT_THROW(degree_by_homology(v), InputError);
  auto rp2 = witnesses::identity(tri::rp2_6());
  EXPECT_THROW(degree_by_preimage(rp2), InputError);
  auto o = default_orientations(witnesses::double_cover());
  o.domain.signs.pop_back();
  EXPECT_THROW(degree_by_preimage(witnesses::double_cover(), o), InputError);
}
