#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include <Eigen/Core>

namespace pathdepth {

/// Dense matrix with entries reduced into [0, p).
using ModMatrix = Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic>;

/// Row-major sparse matrix: each row is a list of (column, value) pairs with
/// values in [0, p) and no repeated columns.
struct SparseModMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<std::vector<std::pair<std::uint32_t, std::int64_t>>> entries;
};

/// Matrices with at least this many columns use sparse elimination.
inline constexpr std::size_t kSparseColumnThreshold = 2000;

bool is_prime(std::uint32_t p);

std::int64_t mod_inverse(std::int64_t a, std::int64_t p);

/// Rank over GF(p) by Gaussian elimination; the argument is consumed.
std::size_t rank_mod_p(ModMatrix m, std::uint32_t p);
std::size_t rank_mod_p(SparseModMatrix m, std::uint32_t p);

}  // namespace pathdepth
