#pragma once

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "pathdepth/exponent_box.hpp"
#include "pathdepth/monomial.hpp"
#include "pathdepth/monomial_ideal.hpp"

namespace pathdepth {

inline constexpr std::size_t kDefaultPosetBudget = 2'000'000;
inline constexpr std::size_t kDefaultNodeBudget = 10'000'000;

/// The characteristic poset of S/I: all a <= g with x^a not in I, where
/// g = lcm G(I), ordered componentwise. It is a down-set of the box [0, g].
class CharPoset {
 public:
  explicit CharPoset(const MonomialIdeal& ideal, std::size_t max_elements = kDefaultPosetBudget,
                     std::size_t max_box = kDefaultBoxBudget);

  std::size_t ambient() const { return box_.dims(); }
  std::span<const Exponent> cap() const { return box_.caps(); }
  const ExponentBox& box() const { return box_; }
  std::size_t size() const { return elements_.size(); }

  /// Box index of the i-th element; elements are in ascending box order.
  std::size_t box_index(std::size_t i) const { return elements_[i]; }
  std::vector<Exponent> element(std::size_t i) const { return box_.point(elements_[i]); }
  /// Element position of a box index, or npos when x^a lies in I.
  std::size_t position(std::size_t box_idx) const;
  bool contains(std::span<const Exponent> a) const;

  /// |{ i : a_i = g_i }| for the point at a box index.
  int free_count(std::size_t box_idx) const;

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

 private:
  ExponentBox box_;
  std::vector<std::size_t> elements_;
  std::vector<std::int32_t> position_;
};

/// [bottom, top] in the characteristic poset; encodes the Stanley space
/// x^bottom K[x_i : top_i = g_i].
struct Interval {
  std::vector<Exponent> bottom;
  std::vector<Exponent> top;
};

using IntervalPartition = std::vector<Interval>;

enum class SearchStatus { kFound, kAbsent, kUnknown };

struct SearchOptions {
  std::size_t node_budget = kDefaultNodeBudget;
  std::size_t row_entry_budget = 40'000'000;
  std::size_t memo_bytes = std::size_t{256} << 20;
  /// Wall-clock cap per decision; zero means none.
  std::chrono::milliseconds time_budget{0};
};

struct DecisionResult {
  int k = 0;
  SearchStatus status = SearchStatus::kUnknown;
  std::optional<IntervalPartition> partition;
  std::size_t nodes = 0;
  std::size_t rows = 0;
  std::string note;
};

/// Decides whether P has an interval partition whose tops all have at least
/// k coordinates equal to g. kAbsent is only returned after an exhaustive
/// search; budget overruns give kUnknown.
DecisionResult sdepth_at_least(const CharPoset& poset, int k, const SearchOptions& options = {});

struct SdepthOptions {
  SearchOptions search;
  std::size_t poset_budget = kDefaultPosetBudget;
  std::size_t box_budget = kDefaultBoxBudget;
};

struct SdepthReport {
  std::size_t ambient = 0;
  std::size_t poset_size = 0;
  int lower = 0;  ///< certified by `certificate`
  int upper = 0;  ///< every k above it was refuted exhaustively
  IntervalPartition certificate;
  std::vector<DecisionResult> attempts;  ///< partitions stripped
  std::string note;

  bool exact() const { return lower == upper; }
};

/// sdepth(S/I) by scanning k downward from n-1. On budget overruns the
/// answer is the bracket [lower, upper].
SdepthReport sdepth_quotient(const MonomialIdeal& ideal, const SdepthOptions& options = {});

struct PartitionCheck {
  bool valid = false;
  int sdepth = -1;  ///< min over intervals of |{ i : top_i = g_i }|
  std::string error;
};

/// Re-checks a partition from scratch: every interval lies in P, intervals are
/// pairwise disjoint and together cover P.
PartitionCheck check_partition(const MonomialIdeal& ideal, const IntervalPartition& partition,
                               std::size_t max_box = kDefaultBoxBudget);

const char* to_string(SearchStatus status);

}  // namespace pathdepth
