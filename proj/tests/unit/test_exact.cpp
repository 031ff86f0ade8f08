#include <gtest/gtest.h>

#include <numeric>

#include "tropvol/error.hpp"
#include "tropvol/exact.hpp"
#include "tropvol/rational.hpp"

namespace tropvol {
namespace {

std::vector<Integer> ints(std::initializer_list<long> xs) { return {xs.begin(), xs.end()}; }

IntMatrix columns(std::initializer_list<std::initializer_list<long>> cols) {
  std::vector<std::vector<Integer>> cs;
  for (const auto& c : cols) cs.emplace_back(c.begin(), c.end());
  return IntMatrix::from_columns(cs);
}

TEST(Rational, ParsesIntegersAndFractions) {
  EXPECT_EQ(parse_rational("3"), Rational(3));
  EXPECT_EQ(parse_rational("-7"), Rational(-7));
  EXPECT_EQ(parse_rational("6/4"), Rational(3, 2));
  EXPECT_EQ(parse_rational("-1191/2"), Rational(-1191, 2));
  EXPECT_EQ(parse_rational("123456789012345678901234567890"),
            Rational(Integer("123456789012345678901234567890")));
}

TEST(Rational, RejectsMalformedText) {
  for (const char* bad : {"", "x", "1/0", "1/", "/2", "1.5", "--1", "1/-2"}) {
    try {
      (void)parse_rational(bad);
      ADD_FAILURE() << "accepted '" << bad << "'";
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::ParseError) << bad;
    }
  }
}

TEST(Rational, FormatsExactly) {
  EXPECT_EQ(to_fraction_string(Rational(3)), "3/1");
  EXPECT_EQ(to_fraction_string(Rational(352, 3)), "352/3");
  EXPECT_EQ(to_display_string(Rational(3)), "3");
  EXPECT_EQ(to_display_string(Rational(-9, 4)), "-9/4");
}

TEST(Rational, FloorCeilPowFactorial) {
  EXPECT_EQ(floor(Rational(-7, 2)), Integer(-4));
  EXPECT_EQ(ceil(Rational(-7, 2)), Integer(-3));
  EXPECT_EQ(floor(Rational(4)), Integer(4));
  EXPECT_EQ(pow(Rational(-2, 3), 3), Rational(-8, 27));
  EXPECT_EQ(pow(Rational(5), 0), Rational(1));
  EXPECT_EQ(factorial(0), Integer(1));
  EXPECT_EQ(factorial(4), Integer(24));
  EXPECT_EQ(factorial(25), Integer("15511210043330985984000000"));
  EXPECT_TRUE(is_integer(Rational(6, 3)));
  EXPECT_FALSE(is_integer(Rational(1, 3)));
}

TEST(Determinant, IdentityIsOne) {
  EXPECT_EQ(det_exact(IntMatrix{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}), Integer(1));
}

TEST(Determinant, TwoByTwoByCofactors) { EXPECT_EQ(det_exact(IntMatrix{{-1, 0}, {-1, 1}}), Integer(-1)); }

TEST(Determinant, NeedsPivotSwap) {
  EXPECT_EQ(det_exact(IntMatrix{{0, 1}, {1, 0}}), Integer(-1));
  EXPECT_EQ(det_exact(IntMatrix{{0, 0, 2}, {0, 3, 0}, {5, 0, 0}}), Integer(-30));
  EXPECT_EQ(det_exact(IntMatrix{{1, 2}, {2, 4}}), Integer(0));
}

TEST(Determinant, MatchesLeibnizOnSmallMatrices) {
  // 3x3 Leibniz expansion as an independent reference.
  const IntMatrix m{{2, -3, 1}, {4, 0, -5}, {-1, 6, 7}};
  const Integer leibniz = m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) -
                          m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0)) +
                          m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
  EXPECT_EQ(det_exact(m), leibniz);
}

TEST(Determinant, PublishedNormalSetsAreUnimodular) {
  EXPECT_EQ(abs(det_exact(columns({{-1, 0}, {-1, 1}}))), Integer(1));
  EXPECT_EQ(abs(det_exact(columns({{1, -1, 0}, {0, -1, 1}, {0, 0, 1}}))), Integer(1));
  EXPECT_EQ(abs(det_exact(columns({{-1, 1, 0, 0}, {-1, 0, 1, 0}, {-1, 0, 0, 1}, {0, 0, 1, 0}}))), Integer(1));
}

TEST(SolveUnimodular, TwoDimensionalRow) {
  EXPECT_EQ(solve_unimodular(columns({{-1, 1}, {0, 1}}), ints({1, 1})), ints({-1, 2}));
}

TEST(SolveUnimodular, IdentityReturnsRightHandSide) {
  EXPECT_EQ(solve_unimodular(IntMatrix{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}, ints({4, -2, 9})), ints({4, -2, 9}));
}

TEST(SolveUnimodular, ThreeDimensionalRow) {
  EXPECT_EQ(solve_unimodular(columns({{-1, 0, 0}, {-1, 1, 0}, {-1, 0, 1}}), ints({1, 1, 1})), ints({-3, 1, 1}));
}

TEST(SolveUnimodular, SingularAndNonUnimodularAreErrors) {
  try {
    (void)solve_unimodular(IntMatrix{{1, 1}, {1, 1}}, ints({1, 1}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::Singular);
  }
  try {
    (void)solve_unimodular(IntMatrix{{2, 0}, {0, 1}}, ints({1, 1}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotUnimodular);
  }
}

TEST(SolveUnimodular, ReproducesRightHandSideForAllIncidenceBases) {
  // All d-subsets of projected e_i - e_j normals in d = 3.
  const std::size_t d = 3;
  std::vector<std::vector<Integer>> normals;
  for (std::size_t i = 0; i <= d; ++i) {
    for (std::size_t j = 0; j <= d; ++j) {
      if (i == j) continue;
      std::vector<Integer> n(d, 0);
      if (i < d) n[i] += 1;
      if (j < d) n[j] -= 1;
      normals.push_back(n);
    }
  }
  const std::vector<Integer> c = ints({1, 7, 49});
  std::size_t bases = 0;
  for (std::size_t a = 0; a < normals.size(); ++a) {
    for (std::size_t b = a + 1; b < normals.size(); ++b) {
      for (std::size_t e = b + 1; e < normals.size(); ++e) {
        const std::vector<std::vector<Integer>> cols{normals[a], normals[b], normals[e]};
        const IntMatrix m = IntMatrix::from_columns(cols);
        const Integer det = det_exact(m);
        if (det == 0) continue;
        ++bases;
        EXPECT_EQ(abs(det), Integer(1));
        EXPECT_EQ(m * solve_unimodular(m, c), c);
      }
    }
  }
  EXPECT_GT(bases, 0u);
}

}  // namespace
}  // namespace tropvol
