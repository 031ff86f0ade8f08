#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>

#include "golden.hpp"
#include "oracles.hpp"
#include "tropvol/error.hpp"
#include "tropvol/generate.hpp"
#include "tropvol/pseudovertex.hpp"

namespace tropvol {
namespace {

using testing::parse_rows;

std::vector<Rational> pt(std::initializer_list<long> xs) { return {xs.begin(), xs.end()}; }

Polytrope golden2d() { return Polytrope::from_star(parse_rows("0 1 2; 1 0 2; 0 0 0")); }
Polytrope unit_square() { return Polytrope::from_star(parse_rows("0 1 1; 1 0 1; 0 0 0")); }
// x1 <= 2, x2 <= 1 and x1 - x2 <= 1 all meet at (2, 1).
Polytrope triple_corner() { return Polytrope::from_star(parse_rows("0 1 2; 1 0 1; 0 0 0")); }

std::set<std::vector<Rational>> points(const std::vector<Pseudovertex>& vs) {
  std::set<std::vector<Rational>> out;
  for (const auto& v : vs) out.insert(v.point);
  return out;
}

TEST(MultiIndices, TwoDimensionsInPublishedOrder) {
  std::vector<std::string> names;
  for (const auto& m : multi_indices(2)) names.push_back(m.to_string());
  EXPECT_EQ(names, (std::vector<std::string>{"(1,1)", "(1,2)", "(1,3)", "(2,2)", "(2,3)", "(3,3)"}));
}

TEST(MultiIndices, CountsMatchCentralBinomial) {
  EXPECT_EQ(multi_indices(1).size(), 2u);
  EXPECT_EQ(multi_indices(3).size(), 20u);
  EXPECT_EQ(multi_indices(4).size(), 70u);
  for (std::size_t d = 1; d <= 6; ++d) EXPECT_EQ(multi_indices(d).size(), central_binomial(d)) << d;
  EXPECT_EQ(multi_indices(1)[1].to_string(), "(2)");
}

TEST(MultiIndices, AreSortedAndNondecreasing) {
  const auto all = multi_indices(4);
  EXPECT_TRUE(std::is_sorted(all.begin(), all.end()));
  for (const auto& m : all) EXPECT_TRUE(std::is_sorted(m.entries.begin(), m.entries.end()));
}

TEST(TropicalCramer, HandEvaluatedPermanents) {
  const HomogeneousPoint c = tropical_cramer(parse_rows("0 1 0; 2 2 0"));
  EXPECT_EQ(c.coords(), (std::vector<TropScalar>{1, 0, 2}));
}

TEST(TropicalCramer, SegmentSwapsCoordinates) {
  const HomogeneousPoint c = tropical_cramer(parse_rows("3 8"));
  EXPECT_EQ(c.coords(), (std::vector<TropScalar>{8, 3}));
}

TEST(TropicalCramer, RepeatedVertexGivesThatVertex) {
  const Polytrope p = golden2d();
  for (std::size_t k = 0; k <= 2; ++k) {
    EXPECT_EQ(cramer_point(p, MultiIndex{{k, k}}), p.vertex(k));
  }
}

TEST(TropicalCramer, WrongShapeIsAnError) { EXPECT_THROW((void)tropical_cramer(parse_rows("0 1; 1 0")), Error); }

TEST(Enumerate, GoldenHexagon) {
  const auto vs = enumerate_pseudovertices(golden2d());
  ASSERT_EQ(vs.size(), 6u);
  const std::vector<std::vector<Rational>> expected{pt({0, 1}), pt({0, 0}), pt({1, 2}),
                                                    pt({1, 0}), pt({2, 1}), pt({2, 2})};
  for (std::size_t k = 0; k < 6; ++k) EXPECT_EQ(vs[k].point, expected[k]);
}

TEST(Enumerate, GoldenThreeDimensional) {
  const auto p = Polytrope::from_star(parse_rows("0 2 4 8; 2 0 4 7; 2 3 0 8; 0 0 0 0"));
  const auto vs = enumerate_pseudovertices(p);
  ASSERT_EQ(vs.size(), 20u);
  EXPECT_EQ(cramer_point(p, MultiIndex{{0, 1, 3}}), pt({6, 5, 8}));
  EXPECT_TRUE(points(vs).count(pt({6, 5, 8})));
}

TEST(Enumerate, UnitSquareMergesDuplicates) {
  const auto vs = enumerate_pseudovertices(unit_square());
  EXPECT_EQ(points(vs), (std::set<std::vector<Rational>>{pt({0, 1}), pt({0, 0}), pt({1, 0}), pt({1, 1})}));
  std::size_t generators = 0;
  for (const auto& v : vs) generators += v.generators.size();
  EXPECT_EQ(generators, 6u);
}

TEST(ActiveFacets, GoldenCorners) {
  const Polytrope p = golden2d();
  EXPECT_EQ(active_facets(p, pt({1, 2})), (std::vector<FacetPair>{{1, 0}, {1, 2}}));
  std::vector<std::vector<int>> normals;
  for (const auto& f : active_facets(p, pt({2, 2}))) normals.push_back(f.normal(2));
  EXPECT_EQ(normals, (std::vector<std::vector<int>>{{1, 0}, {0, 1}}));
  EXPECT_TRUE(active_facets(p, {Rational(1), Rational(1)}).empty());
}

TEST(Maximal, GoldenAndSquare) {
  EXPECT_TRUE(is_maximal(golden2d()));
  EXPECT_TRUE(is_maximal(Polytrope::from_star(parse_rows("0 2 4 8; 2 0 4 7; 2 3 0 8; 0 0 0 0"))));
  EXPECT_FALSE(is_maximal(unit_square()));
}

TEST(Simple, GoldenSquareAndTripleCorner) {
  EXPECT_TRUE(is_simple(golden2d()));
  // (1, 0) meets x1 <= 1, x2 >= 0 and x1 - x2 <= 1.
  EXPECT_FALSE(is_simple(unit_square()));
  EXPECT_EQ(active_facets(unit_square(), pt({1, 0})).size(), 3u);
  EXPECT_EQ(enumerate_pseudovertices(unit_square()).size(), 4u);
  EXPECT_FALSE(is_simple(triple_corner()));
  EXPECT_EQ(active_facets(triple_corner(), pt({2, 1})).size(), 3u);
}

void expect_single_generators_match_tight_counts(const Polytrope& p, const std::vector<Pseudovertex>& vs) {
  const std::size_t d = p.dim();
  for (const auto& v : vs) {
    ASSERT_EQ(v.generators.size(), 1u);
    const MultiIndex& index = v.generators.front();
    for (std::size_t i = 0; i <= d; ++i) {
      const auto tight_in_column =
          std::count_if(v.tight.begin(), v.tight.end(), [&](const FacetPair& f) { return f.j == i; });
      EXPECT_EQ(static_cast<std::size_t>(tight_in_column), index.count(i));
    }
  }
}

TEST(PseudovertexInvariants, HoldOnGeneratedPolytropes) {
  for (std::size_t d = 2; d <= 4; ++d) {
    for (std::uint64_t seed = 0; seed < 80; ++seed) {
      const Polytrope p = random_polytrope({d, 0, 1000, seed});
      const auto vs = enumerate_pseudovertices(p);
      EXPECT_LE(vs.size(), central_binomial(d));
      EXPECT_EQ(vs.size() == central_binomial(d), is_maximal(p));
      for (std::size_t i = 0; i <= d; ++i) {
        EXPECT_EQ(cramer_point(p, MultiIndex{std::vector<std::size_t>(d, i)}), p.vertex(i));
      }
      if (!is_maximal(p)) continue;
      EXPECT_TRUE(is_simple(p, vs));
      expect_single_generators_match_tight_counts(p, vs);
    }
  }
}

// Off-diagonal entries in [500, 1000] satisfy the triangle inequality, so the
// matrix is its own star, and generic values keep every Cramer point distinct.
TEST(PseudovertexInvariants, GenericStarsAreMaximalAndSimple) {
  std::mt19937_64 rng(17);
  std::size_t maximal = 0;
  for (std::size_t d = 2; d <= 4; ++d) {
    for (int draw = 0; draw < 40; ++draw) {
      const Polytrope p = Polytrope::from_star(testing::random_matrix(rng, d + 1, 500, 1000, true));
      const auto vs = enumerate_pseudovertices(p);
      if (vs.size() != central_binomial(d)) continue;
      ++maximal;
      EXPECT_TRUE(is_simple(p, vs));
      expect_single_generators_match_tight_counts(p, vs);
    }
  }
  EXPECT_GT(maximal, 100u);
}

TEST(CramerPoint, IntegerAndRationalPathsAgree) {
  // Halving the entries gives half-integer bounds, which skip the int64 path.
  const TropMatrix star = parse_rows("0 2 4 8; 2 0 4 7; 2 3 0 8; 0 0 0 0");
  std::vector<TropScalar> halved;
  for (std::size_t r = 0; r < 4; ++r) {
    for (std::size_t c = 0; c < 4; ++c) halved.push_back(TropScalar(star(r, c).value()/ 2));
  }
  const Polytrope whole = Polytrope::from_star(star);
  const Polytrope half = Polytrope::from_star(TropMatrix(4, 4, std::move(halved)));
  const auto a = enumerate_pseudovertices(whole);
  const auto b = enumerate_pseudovertices(half);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t k = 0; k < a.size(); ++k) {
    std::vector<Rational> scaled;
    for (const auto& x : a[k].point) scaled.push_back(x / 2);
    EXPECT_EQ(b[k].point, scaled);
  }
}

}  // namespace
}  // namespace tropvol
