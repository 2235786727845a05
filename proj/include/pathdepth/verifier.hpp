#pragma once

#include <chrono>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pathdepth/homology.hpp"
#include "pathdepth/io.hpp"
#include "pathdepth/monomial_ideal.hpp"
#include "pathdepth/sdepth.hpp"

namespace pathdepth {

enum class Verdict { kPass, kFail, kUnknown };

const char* to_string(Verdict verdict);

struct VerificationRecord {
  std::string statement;
  int n = 0;
  int m = 0;
  int t = 0;
  std::string expected;
  std::string computed;  ///< free-form summary of the computed side
  std::optional<int> depth;
  std::optional<int> sdepth_lower;
  std::optional<int> sdepth_upper;
  Verdict verdict = Verdict::kUnknown;
  double millis = 0;
  std::uint32_t characteristic = kDefaultCharacteristic;
  std::string note;
};

Json to_json(const VerificationRecord& record);
std::string csv_header();
std::string to_csv_row(const VerificationRecord& record);

struct VerifierSettings {
  std::uint32_t characteristic = kDefaultCharacteristic;
  /// Also compute every depth over GF(2) and flag disagreements.
  bool cross_check = false;
  DepthOptions depth;
  SearchOptions search{.node_budget = 300'000, .time_budget = std::chrono::milliseconds{20'000}};
  std::size_t poset_budget = kDefaultPosetBudget;
  std::size_t box_budget = kDefaultBoxBudget;
};

/// Applies PATHDEPTH_BUDGET (search nodes per decision) and PATHDEPTH_TIME_MS
/// (wall-clock per decision) when they are set.
VerifierSettings with_environment(VerifierSettings settings);

/// Three-valued outcome of one sdepth decision, cached per ideal.
enum class Decision { kYes, kNo, kUnknown };

/// Runs the checks against the engines. Ideals, depths and sdepth decisions
/// are cached, so overlapping statements share work.
class Verifier {
 public:
  explicit Verifier(VerifierSettings settings = {});

  const VerifierSettings& settings() const { return settings_; }

  const MonomialIdeal& cycle_power(int n, int m, int t);
  const DepthReport& depth(const MonomialIdeal& ideal, std::uint32_t p);
  const DepthReport& depth(const MonomialIdeal& ideal) { return depth(ideal, settings_.characteristic); }
  /// Is there an interval partition with every top free in >= k coordinates?
  Decision sdepth_at_least(const MonomialIdeal& ideal, int k);
  /// Scans k downward and returns the tightest bracket reached.
  std::pair<int, int> sdepth_bracket(const MonomialIdeal& ideal);

  VerificationRecord colon_identity(int n, int m, int t);
  VerificationRecord cycle_minus_one(int n, int t);
  VerificationRecord large_power_bounds(int n, int m, int t);
  VerificationRecord two_short_cycle(int n, int t);
  VerificationRecord last_variable_bound(int n, int m, int t);
  VerificationRecord long_cycle_bounds(int n, int m, int t);
  VerificationRecord initial_segment_identity(int n, int m, int t);
  VerificationRecord last_variable_identity(int n, int m, int t);
  VerificationRecord path_power_depth(int n, int m, int t);
  VerificationRecord residue_class_depth(int n, int d);
  VerificationRecord edge_cycle_depth(int n, int t);
  VerificationRecord depth_zero_equivalence(int n, int m, int t);
  VerificationRecord factorization(int n, int m);
  VerificationRecord depth_at_least_d_minus_one(int n, int m, int t);
  VerificationRecord stanley_inequality(int n, int m, int t);

 private:
  struct SdepthFacts {
    int lower = 0;
    int upper = 0;
    std::vector<int> unresolved;
    std::optional<CharPoset> poset;
    std::string note;
    bool poset_failed = false;
  };
  SdepthFacts& facts(const MonomialIdeal& ideal);
  void fill_depth(VerificationRecord& record, const MonomialIdeal& ideal);
  void fill_sdepth(VerificationRecord& record, const MonomialIdeal& ideal);

  VerifierSettings settings_;
  std::map<std::tuple<int, int, int>, MonomialIdeal> powers_;
  std::map<std::pair<std::string, std::uint32_t>, DepthReport> depths_;
  std::map<std::string, SdepthFacts> sdepths_;
};

struct Grid {
  int n_min = 3;
  int n_max = 7;
  int t_max = 4;
};

/// Statement ids accepted by run_statement, in run order ("all" excluded).
std::vector<std::string> statement_ids();

/// Runs one statement over the grid; "all" runs every id in turn. Throws
/// std::invalid_argument for unknown ids.
std::vector<VerificationRecord> run_statement(Verifier& verifier, std::string_view id, const Grid& grid);

/// Evidence scans; counterexamples come back as kFail records and are not
/// treated as errors by callers. Ids: "d-minus-1", "stanley".
std::vector<VerificationRecord> run_scan(Verifier& verifier, std::string_view conjecture, const Grid& grid);

}  // namespace pathdepth
