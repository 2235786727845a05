#include <gtest/gtest.h>

#include "oracles.hpp"
#include "pathdepth/families.hpp"
#include "pathdepth/monomial.hpp"
#include "pathdepth/monomial_ideal.hpp"

using namespace pathdepth;

namespace {

Monomial mono(std::vector<Exponent> e) { return Monomial(std::move(e)); }

MonomialIdeal ideal(std::size_t n, std::initializer_list<std::vector<Exponent>> gens) {
  std::vector<Monomial> g;
  for (const auto& e : gens) g.emplace_back(e);
  return minimalize(n, g);
}

}  // namespace

TEST(Monomial, DividesComponentwise) {
  EXPECT_TRUE(divides(mono({1, 0}), mono({1, 1})));
  EXPECT_FALSE(divides(mono({2, 0}), mono({1, 1})));
  EXPECT_TRUE(divides(mono({1, 1, 0}), mono({1, 1, 1})));
  EXPECT_THROW(divides(mono({1, 0}), mono({1, 0, 0})), std::invalid_argument);
}

TEST(Monomial, RejectsBadVectors) {
  EXPECT_THROW(mono({}), std::invalid_argument);
  EXPECT_THROW(mono({1, -1}), std::invalid_argument);
  EXPECT_THROW(mono({kMaxDegree, 1}), std::invalid_argument);
  EXPECT_NO_THROW(mono({kMaxDegree, 0}));
}

TEST(Monomial, Arithmetic) {
  Monomial a = mono({2, 0, 1}), b = mono({1, 3, 0});
  EXPECT_EQ(a * b, mono({3, 3, 1}));
  EXPECT_EQ(gcd(a, b), mono({1, 0, 0}));
  EXPECT_EQ(lcm(a, b), mono({2, 3, 1}));
  EXPECT_EQ(colon(a, b), mono({1, 0, 1}));
  EXPECT_EQ(divide(a * b, b), a);
  EXPECT_THROW(divide(a, b), std::domain_error);
  EXPECT_EQ(a.degree(), 3);
  EXPECT_EQ(a.support(), (std::vector<std::size_t>{0, 2}));
  EXPECT_EQ(extend(a, 2), mono({2, 0, 1, 0, 0}));
}

TEST(Monomial, TextRoundTrip) {
  EXPECT_EQ(to_string(mono({2, 0, 1})), "x1^2*x3");
  EXPECT_EQ(to_string(Monomial::one(3)), "1");
  EXPECT_EQ(parse_monomial("x1^2*x3", 3), mono({2, 0, 1}));
  EXPECT_EQ(parse_monomial("x3*x1*x1", 3), mono({2, 0, 1}));
  EXPECT_EQ(parse_monomial("1", 2), Monomial::one(2));
  EXPECT_THROW(parse_monomial("x4", 3), std::invalid_argument);
  EXPECT_THROW(parse_monomial("y1", 3), std::invalid_argument);
  EXPECT_THROW(parse_monomial("x1^", 3), std::invalid_argument);
}

TEST(MonomialIdeal, MinimalizeDropsMultiples) {
  EXPECT_EQ(ideal(2, {{1, 0}, {1, 1}}), ideal(2, {{1, 0}}));
  auto two = ideal(3, {{1, 1, 0}, {0, 1, 1}});
  EXPECT_EQ(two.size(), 2u);
  auto c4 = cycle_ideal(4, 2);
  std::vector<Monomial> g(c4.generators().begin(), c4.generators().end());
  g.push_back(mono({1, 1, 1, 0}));
  EXPECT_EQ(minimalize(4, g), cycle_ideal(4, 2));
}

TEST(MonomialIdeal, UnitAndZero) {
  auto unit = minimalize(2, {Monomial::one(2), mono({1, 0})});
  EXPECT_TRUE(unit.is_unit());
  EXPECT_EQ(unit.size(), 0u);
  EXPECT_TRUE(unit.contains(Monomial::one(2)));
  auto zero = MonomialIdeal::zero(2);
  EXPECT_TRUE(zero.is_zero());
  EXPECT_FALSE(zero.contains(mono({5, 5})));
  EXPECT_FALSE(cycle_ideal(4, 2).contains(Monomial::one(4)));
}

TEST(MonomialIdeal, Powers) {
  EXPECT_EQ(ideal_power(ideal(1, {{1}}), 3), ideal(1, {{3}}));
  auto j = cycle_ideal(3, 2);
  EXPECT_EQ(ideal_power(j, 1), j);
  EXPECT_TRUE(ideal_power(j, 0).is_unit());
  std::vector<Monomial> products;
  for (const auto& a : j.generators())
    for (const auto& b : j.generators()) products.push_back(a * b);
  EXPECT_EQ(ideal_power(j, 2), minimalize(3, products));
  EXPECT_EQ(ideal_power(j, 2).size(), 6u);
  EXPECT_THROW(ideal_power(j, -1), std::invalid_argument);
}

TEST(MonomialIdeal, Colon) {
  EXPECT_EQ(colon(ideal(2, {{1, 1}}), mono({0, 1})), ideal(2, {{1, 0}}));
  auto j = cycle_ideal(5, 3);
  EXPECT_EQ(colon(j, Monomial::one(5)), j);
  EXPECT_TRUE(colon(j, mono({1, 1, 1, 0, 0})).is_unit());
  EXPECT_TRUE(colon(MonomialIdeal::zero(5), mono({1, 0, 0, 0, 0})).is_zero());
}

TEST(MonomialIdeal, ColonAtWitnessMatchesMembershipOracle) {
  const int n = 4, m = 2, t = 3;
  auto big = ideal_power(cycle_ideal(n, m), t);
  Monomial w = colon_witness(n, m, t);
  auto c = colon(big, w);
  EXPECT_EQ(c, residue_class_ideal(4, 2));
  oracle::Gens gens = oracle::all_products(oracle::cycle_generators(n, m), t);
  for (const auto& v : oracle::box({2, 2, 2, 2})) {
    oracle::Vec vw(n);
    for (int i = 0; i < n; ++i) vw[i] = v[i] + w[i];
    EXPECT_EQ(c.contains(mono({v.begin(), v.end()})), oracle::member(gens, vw));
  }
}

TEST(MonomialIdeal, Intersect) {
  auto x1 = ideal(2, {{1, 0}}), x2 = ideal(2, {{0, 1}});
  EXPECT_EQ(intersect(x1, x2), ideal(2, {{1, 1}}));
  auto j = cycle_ideal(4, 3);
  EXPECT_EQ(intersect(j, MonomialIdeal::unit(4)), j);
  EXPECT_TRUE(intersect(j, MonomialIdeal::zero(4)).is_zero());
  auto a = ideal(4, {{1, 0, 0, 0}, {0, 0, 1, 0}});
  auto b = ideal(4, {{0, 1, 0, 0}, {0, 0, 0, 1}});
  EXPECT_EQ(intersect(a, b), ideal(4, {{1, 1, 0, 0}, {1, 0, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}}));
  for (const auto& v : oracle::box({1, 1, 1, 1})) {
    Monomial u = mono({v.begin(), v.end()});
    EXPECT_EQ(intersect(a, b).contains(u), a.contains(u) && b.contains(u));
  }
}

TEST(MonomialIdeal, SumProductAndHelpers) {
  auto a = ideal(3, {{1, 0, 0}}), b = ideal(3, {{0, 1, 1}});
  EXPECT_EQ(ideal_sum(a, b).size(), 2u);
  EXPECT_EQ(ideal_product(a, b), ideal(3, {{1, 1, 1}}));
  EXPECT_EQ(maximal_ideal(3).size(), 3u);
  EXPECT_EQ(generator_lcm(cycle_ideal(4, 2)), mono({1, 1, 1, 1}));
  EXPECT_EQ(extend(a, 1), ideal(4, {{1, 0, 0, 0}}));
  EXPECT_THROW(ideal_sum(a, maximal_ideal(4)), std::invalid_argument);
}

TEST(MonomialIdeal, GeneratorsAreLexSorted) {
  auto j = ideal_power(cycle_ideal(5, 2), 2);
  auto g = j.generators();
  EXPECT_TRUE(std::is_sorted(g.begin(), g.end()));
}
