#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>

#include "pathdepth/families.hpp"
#include "pathdepth/io.hpp"

using namespace pathdepth;

TEST(Io, CanonicalIdealJson) {
  auto j = to_json(cycle_ideal(3, 2));
  EXPECT_EQ(j.dump(), R"({"gens":[[0,1,1],[1,0,1],[1,1,0]],"n":3})");
  EXPECT_EQ(to_json(MonomialIdeal::zero(2)).dump(), R"({"gens":[],"n":2})");
  EXPECT_EQ(to_json(MonomialIdeal::unit(2)).dump(), R"({"gens":[[0,0]],"n":2})");
}

TEST(Io, ParsesArraysAndStrings) {
  auto a = ideal_from_json(Json::parse(R"({"n":3,"gens":[[1,1,0],[0,1,1],[1,1,1]]})"));
  auto b = ideal_from_json(Json::parse(R"({"n":3,"gens":["x2*x3","x1*x2"]})"));
  EXPECT_EQ(a, b);
  EXPECT_EQ(a, path_ideal(3, 2));
  EXPECT_TRUE(ideal_from_json(Json::parse(R"({"n":2,"gens":[[0,0]]})")).is_unit());
  EXPECT_THROW(ideal_from_json(Json::parse(R"({"n":3,"gens":[[1,1]]})")), std::invalid_argument);
  EXPECT_THROW(ideal_from_json(Json::parse(R"({"gens":[]})")), std::invalid_argument);
  for (int n = 3; n <= 6; ++n) {
    auto ideal = ideal_power(cycle_ideal(n, 2), 2);
    EXPECT_EQ(ideal_from_json(to_json(ideal)), ideal);
  }
}

TEST(Io, FamilySpecs) {
  EXPECT_EQ(resolve_ideal("cycle:6:4"), cycle_ideal(6, 4));
  EXPECT_EQ(resolve_ideal("cycle:6:4:2"), ideal_power(cycle_ideal(6, 4), 2));
  EXPECT_EQ(resolve_ideal("path:5:3:2"), ideal_power(path_ideal(5, 3), 2));
  EXPECT_EQ(resolve_ideal("u:6:3"), residue_class_ideal(6, 3));
  EXPECT_EQ(resolve_ideal("max:4"), maximal_ideal(4));
  EXPECT_THROW(resolve_ideal("cycle:6"), std::invalid_argument);
  EXPECT_THROW(resolve_ideal("torus:3:2"), std::invalid_argument);
  EXPECT_THROW(resolve_ideal("cycle:a:2"), std::invalid_argument);
  EXPECT_THROW(resolve_ideal("/nonexistent/ideal.json"), std::invalid_argument);
}

TEST(Io, IdealFile) {
  std::string path = ::testing::TempDir() + "ideal_io_test.json";
  {
    std::ofstream out(path);
    out << R"({"n": 4, "gens": ["x1*x2", "x3*x4"]})";
  }
  EXPECT_EQ(resolve_ideal(path).size(), 2u);
  std::remove(path.c_str());
}

TEST(Io, PartitionRoundTrip) {
  IntervalPartition p = {{{0, 0}, {1, 0}}, {{0, 1}, {0, 1}}};
  Json j = to_json(p);
  EXPECT_EQ(j.dump(), "[[[0,0],[1,0]],[[0,1],[0,1]]]");
  auto back = partition_from_json(j);
  ASSERT_EQ(back.size(), 2u);
  EXPECT_EQ(back[0].top, (std::vector<Exponent>{1, 0}));
  EXPECT_THROW(partition_from_json(Json::parse("[[[0,0]]]")), std::invalid_argument);
}

TEST(Io, ReportsSerialize) {
  auto d = depth_quotient(cycle_ideal(4, 2));
  Json dj = to_json(d);
  EXPECT_EQ(dj["depth"], 1);
  EXPECT_EQ(dj["method"], "betti");
  EXPECT_EQ(dj["characteristic"], 32003);
  auto s = sdepth_quotient(cycle_ideal(4, 3));
  Json sj = to_json(s);
  EXPECT_EQ(sj["sdepth"], 2);
  EXPECT_TRUE(sj["exact"].get<bool>());
  EXPECT_TRUE(sj.contains("certificate"));
  EXPECT_FALSE(to_json(s, false).contains("certificate"));
}
