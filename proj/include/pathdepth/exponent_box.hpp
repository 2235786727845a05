#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "pathdepth/monomial.hpp"
#include "pathdepth/monomial_ideal.hpp"

namespace pathdepth {

/// Thrown when a computation would exceed a configured size or node budget.
/// Callers turn it into an "unknown" verdict; partial results are never used.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The integer box [0, cap] in N^n with mixed-radix linear indexing.
/// Index order is a linear extension of the componentwise order.
class ExponentBox {
 public:
  ExponentBox() = default;
  /// Throws BudgetExceeded if the box has more than max_points points.
  ExponentBox(std::span<const Exponent> cap, std::size_t max_points);

  std::size_t dims() const { return cap_.size(); }
  std::size_t size() const { return size_; }
  Exponent cap(std::size_t i) const { return cap_[i]; }
  std::span<const Exponent> caps() const { return cap_; }
  std::size_t stride(std::size_t i) const { return stride_[i]; }

  std::size_t index(std::span<const Exponent> a) const;
  std::vector<Exponent> point(std::size_t idx) const;
  Exponent coord(std::size_t idx, std::size_t i) const {
    return static_cast<Exponent>((idx / stride_[i]) % static_cast<std::size_t>(cap_[i] + 1));
  }

  /// Advances `a` to the next point in index order; false after the last one.
  bool next(std::vector<Exponent>& a) const;

 private:
  std::vector<Exponent> cap_;
  std::vector<std::size_t> stride_;
  std::size_t size_ = 0;
};

/// Membership of x^a in I for every a in the box [0, g], g = lcm of G(I).
/// Points outside the box are tested by clamping to g, which is exact since
/// every generator lies inside the box.
class MembershipTable {
 public:
  MembershipTable(const MonomialIdeal& ideal, std::size_t max_points);

  const ExponentBox& box() const { return box_; }
  const MonomialIdeal& ideal() const { return ideal_; }
  bool at(std::size_t idx) const { return member_[idx] != 0; }
  bool contains(std::span<const Exponent> a) const;
  bool is_generator(std::size_t idx) const { return generator_[idx] != 0; }

 private:
  MonomialIdeal ideal_;
  ExponentBox box_;
  std::vector<std::uint8_t> member_;
  std::vector<std::uint8_t> generator_;
};

inline constexpr std::size_t kDefaultBoxBudget = 8'000'000;

}  // namespace pathdepth
