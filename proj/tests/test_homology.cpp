#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "pathdepth/families.hpp"
#include "pathdepth/gf_rank.hpp"
#include "pathdepth/homology.hpp"

using namespace pathdepth;

namespace {

Monomial mono(std::vector<Exponent> e) { return Monomial(std::move(e)); }

oracle::Gens raw(const MonomialIdeal& ideal) {
  oracle::Gens out;
  for (const auto& g : ideal.generators()) out.emplace_back(g.exponents().begin(), g.exponents().end());
  return out;
}

int depth_of(const MonomialIdeal& ideal, std::uint32_t p = kDefaultCharacteristic) {
  DepthOptions opts;
  opts.characteristic = p;
  auto rep = depth_quotient(ideal, opts);
  EXPECT_TRUE(rep.complete()) << rep.note;
  return rep.depth.value_or(-1);
}

}  // namespace

TEST(Rank, SmallMatrices) {
  ModMatrix m(3, 3);
  m << 1, 2, 3, 4, 5, 6, 7, 8, 9;
  EXPECT_EQ(rank_mod_p(m, 32003), 2u);
  EXPECT_EQ(rank_mod_p(m, 3), 1u);
  ModMatrix id = ModMatrix::Identity(4, 4);
  EXPECT_EQ(rank_mod_p(id, 2), 4u);
  EXPECT_EQ(rank_mod_p(ModMatrix(0, 5), 7), 0u);
  EXPECT_THROW(rank_mod_p(id, 4), std::invalid_argument);
}

TEST(Rank, DenseAndSparseAgree) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    int rows = 1 + rng() % 9, cols = 1 + rng() % 9;
    std::uint32_t p = trial % 2 ? 2 : 32003;
    ModMatrix dense = ModMatrix::Zero(rows, cols);
    SparseModMatrix sparse{static_cast<std::size_t>(rows), static_cast<std::size_t>(cols), {}};
    sparse.entries.resize(rows);
    std::vector<std::vector<std::int64_t>> plain(rows, std::vector<std::int64_t>(cols, 0));
    for (int r = 0; r < rows; ++r)
      for (int c = 0; c < cols; ++c)
        if (rng() % 3 == 0) {
          std::int64_t v = static_cast<std::int64_t>(rng() % 5) - 2;
          dense(r, c) = v;
          plain[r][c] = v;
          if (v) sparse.entries[r].emplace_back(c, v);
        }
    auto expected = static_cast<std::size_t>(oracle::rank_mod(plain, p));
    EXPECT_EQ(rank_mod_p(dense, p), expected);
    EXPECT_EQ(rank_mod_p(sparse, p), expected);
  }
}

TEST(SimplicialComplex, ClosureAndShape) {
  SimplicialComplex triangle(3, {0b011, 0b110, 0b101});
  EXPECT_EQ(triangle.dimension(), 1);
  EXPECT_EQ(triangle.f_vector(), (std::vector<std::size_t>{1, 3, 3}));
  EXPECT_FALSE(triangle.contains(0b111));
  EXPECT_EQ(triangle.facets().size(), 3u);
  SimplicialComplex empty_face(2, {0});
  EXPECT_EQ(empty_face.dimension(), -1);
  EXPECT_FALSE(empty_face.is_void());
  SimplicialComplex none;
  EXPECT_TRUE(none.is_void());
  EXPECT_EQ(none.dimension(), -2);
  EXPECT_THROW(SimplicialComplex(32, {}), std::invalid_argument);
}

TEST(SimplicialComplex, ReducedHomology) {
  SimplicialComplex circle(3, {0b011, 0b110, 0b101});
  EXPECT_EQ(reduced_homology_ranks(circle, 32003), (std::vector<int>{0, 0, 1}));
  SimplicialComplex simplex(3, {0b111});
  for (int r : reduced_homology_ranks(simplex, 32003)) EXPECT_EQ(r, 0);
  SimplicialComplex two_points(2, {0b01, 0b10});
  EXPECT_EQ(reduced_homology_ranks(two_points, 2), (std::vector<int>{0, 1}));
  SimplicialComplex empty_face(2, {0});
  EXPECT_EQ(reduced_homology_ranks(empty_face, 2), (std::vector<int>{1}));
  EXPECT_TRUE(reduced_homology_ranks(SimplicialComplex(), 2).empty());
}

TEST(SimplicialComplex, EulerCharacteristic) {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    std::size_t v = 2 + rng() % 5;
    std::vector<std::uint32_t> faces;
    for (int k = 0; k < 4; ++k) faces.push_back(rng() & ((1u << v) - 1));
    SimplicialComplex c(v, faces);
    auto f = c.f_vector();
    auto h = reduced_homology_ranks(c, trial % 2 ? 2 : 32003);
    long chi_f = 0, chi_h = 0;
    for (std::size_t i = 0; i < f.size(); ++i) chi_f += (i % 2 ? 1 : -1) * static_cast<long>(f[i]);
    for (std::size_t i = 0; i < h.size(); ++i) chi_h += (i % 2 ? 1 : -1) * h[i];
    EXPECT_EQ(chi_f, chi_h);
  }
}

TEST(UpperKoszul, Examples) {
  auto single = minimalize(2, {mono({1, 1})});
  auto c = upper_koszul(single, mono({1, 1}));
  EXPECT_EQ(std::vector<std::uint32_t>(c.faces().begin(), c.faces().end()), std::vector<std::uint32_t>{0});
  auto m2 = maximal_ideal(2);
  auto d = upper_koszul(m2, mono({1, 1}));
  EXPECT_EQ(std::vector<std::uint32_t>(d.faces().begin(), d.faces().end()), (std::vector<std::uint32_t>{0, 1, 2}));
  EXPECT_TRUE(upper_koszul(m2, mono({0, 0})).is_void());
}

TEST(LcmLattice, ClosedUnderJoin) {
  auto j = ideal_power(cycle_ideal(4, 2), 2);
  auto lat = lcm_lattice(j);
  for (const auto& g : j.generators()) EXPECT_TRUE(std::binary_search(lat.begin(), lat.end(), g));
  for (const auto& a : lat)
    for (const auto& b : lat) EXPECT_TRUE(std::binary_search(lat.begin(), lat.end(), lcm(a, b)));
  EXPECT_THROW(lcm_lattice(ideal_power(cycle_ideal(7, 3), 3), 10), BudgetExceeded);
}

TEST(Depth, Examples) {
  EXPECT_EQ(depth_of(maximal_ideal(4)), 0);
  EXPECT_EQ(depth_of(path_ideal(5, 3)), 3);
  EXPECT_EQ(depth_of(ideal_power(cycle_ideal(6, 2), 2)), 2);
  EXPECT_EQ(depth_of(cycle_ideal(3, 2)), 1);
  EXPECT_EQ(depth_of(minimalize(2, {mono({1, 1})})), 1);
  EXPECT_EQ(depth_quotient(MonomialIdeal::zero(3)).depth, 3);
  EXPECT_THROW(depth_quotient(MonomialIdeal::unit(3)), std::invalid_argument);
  DepthOptions bad;
  bad.characteristic = 6;
  EXPECT_THROW(depth_quotient(cycle_ideal(3, 2), bad), std::invalid_argument);
}

TEST(Depth, ReportsUnknownOverBudget) {
  DepthOptions tight;
  tight.lattice_budget = 5;
  auto rep = depth_quotient(ideal_power(cycle_ideal(5, 2), 2), tight);
  EXPECT_FALSE(rep.complete());
  EXPECT_FALSE(rep.note.empty());
}

TEST(Depth, BettiMatchesKoszulOracle) {
  auto j = ideal_power(cycle_ideal(4, 2), 2);
  auto rep = depth_quotient(j);
  ASSERT_TRUE(rep.complete());
  for (const auto& b : rep.betti) {
    oracle::Vec a(b.multidegree.begin(), b.multidegree.end());
    EXPECT_EQ(b.value, oracle::koszul_betti(raw(j), 4, b.homological_degree, a, 32003));
  }
  EXPECT_EQ(*rep.depth, oracle::koszul_depth(raw(j), 4));
}

TEST(Depth, AgreesWithKoszulOracleOnFamilies) {
  for (int n = 3; n <= 5; ++n)
    for (int m = 2; m < n; ++m)
      for (int t = 1; t <= 2; ++t) {
        auto j = ideal_power(cycle_ideal(n, m), t);
        EXPECT_EQ(depth_of(j), oracle::koszul_depth(raw(j), n)) << n << "," << m << "," << t;
        EXPECT_EQ(depth_of(j, 2), oracle::koszul_depth(raw(j), n, 2)) << n << "," << m << "," << t;
      }
}

TEST(Depth, PathPowersMatchClosedForm) {
  for (int n = 2; n <= 6; ++n)
    for (int m = 2; m <= n; ++m)
      for (int t = 1; t <= 2; ++t)
        EXPECT_EQ(depth_of(ideal_power(path_ideal(n, m), t)), path_power_depth_formula(n, m, t)) << n << "," << m << "," << t;
}

TEST(Depth, ResidueClassIdeals) {
  for (auto [n, d] : {std::pair{4, 2}, {6, 2}, {6, 3}, {8, 2}, {9, 3}})
    EXPECT_EQ(depth_of(residue_class_ideal(n, d)), d - 1) << n << "," << d;
}

TEST(Witness, Examples) {
  auto w = depth_zero_witness(maximal_ideal(3));
  ASSERT_TRUE(w.has_value());
  EXPECT_EQ(*w, Monomial::one(3));
  for (int n = 3; n <= 6; ++n) {
    auto j = ideal_power(cycle_ideal(n, n - 1), n - 1);
    Monomial hint = colon_witness(n, n - 1, n - 1);
    EXPECT_TRUE(is_socle_witness(j, hint));
    auto found = depth_zero_witness(j, hint);
    ASSERT_TRUE(found.has_value());
    EXPECT_EQ(*found, hint);
  }
  auto j53 = ideal_power(cycle_ideal(5, 3), 2);
  Monomial w2 = mono({1, 1, 1, 1, 1});
  EXPECT_TRUE(is_socle_witness(j53, w2));
  EXPECT_TRUE(depth_zero_witness(j53).has_value());
  EXPECT_FALSE(depth_zero_witness(cycle_ideal(5, 2)).has_value());
  EXPECT_FALSE(depth_zero_witness(ideal_power(cycle_ideal(5, 3), 2), Monomial::one(5)).has_value());
}

TEST(Witness, MatchesDepthZero) {
  for (int n = 3; n <= 6; ++n)
    for (int m = 2; m < n; ++m)
      for (int t = 1; t <= 3; ++t) {
        auto j = ideal_power(cycle_ideal(n, m), t);
        auto rep = depth_quotient(j);
        if (!rep.complete()) continue;
        EXPECT_EQ(*rep.depth == 0, depth_zero_witness(j).has_value()) << n << "," << m << "," << t;
      }
}
