#include "pathdepth/verifier.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "pathdepth/families.hpp"
#include "pathdepth/gf_rank.hpp"

namespace pathdepth {

const char* to_string(Verdict verdict) {
  switch (verdict) {
    case Verdict::kPass:
      return "pass";
    case Verdict::kFail:
      return "fail";
    case Verdict::kUnknown:
      return "unknown";
  }
  return "?";
}

namespace {

std::string sdepth_text(const VerificationRecord& r) {
  if (!r.sdepth_lower || !r.sdepth_upper) return "";
  if (*r.sdepth_lower == *r.sdepth_upper) return std::to_string(*r.sdepth_lower);
  return "[" + std::to_string(*r.sdepth_lower) + "," + std::to_string(*r.sdepth_upper) + "]";
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

std::string ideal_summary(const MonomialIdeal& ideal) {
  if (ideal.is_unit()) return "(1)";
  if (ideal.is_zero()) return "(0)";
  if (ideal.size() > 8) return "<" + std::to_string(ideal.size()) + " generators>";
  std::string out = "(";
  for (std::size_t i = 0; i < ideal.size(); ++i) {
    if (i) out += ", ";
    out += to_string(ideal.generators()[i]);
  }
  return out + ")";
}

std::optional<bool> as_bool(Decision d) {
  if (d == Decision::kUnknown) return std::nullopt;
  return d == Decision::kYes;
}

// Collects the individual checks of one record.
class Outcome {
 public:
  void require(std::optional<bool> holds, const std::string& what) {
    if (!holds) {
      open_ = true;
      notes_.push_back(what + " undetermined");
    } else if (!*holds) {
      failed_ = true;
      notes_.push_back(what + " violated");
    }
  }

  Verdict verdict() const { return failed_ ? Verdict::kFail : open_ ? Verdict::kUnknown : Verdict::kPass; }
  std::string note() const {
    std::string out;
    for (const auto& s : notes_) out += (out.empty() ? "" : "; ") + s;
    return out;
  }

 private:
  bool failed_ = false;
  bool open_ = false;
  std::vector<std::string> notes_;
};

std::optional<bool> compare(const std::optional<int>& value, auto pred) {
  if (!value) return std::nullopt;
  return pred(*value);
}

using Clock = std::chrono::steady_clock;

double millis_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

std::size_t env_size(const char* name, std::size_t fallback) {
  const char* raw = std::getenv(name);
  if (!raw || !*raw) return fallback;
  try {
    std::size_t used = 0;
    unsigned long long v = std::stoull(raw, &used);
    if (used != std::string_view(raw).size()) throw std::invalid_argument(raw);
    return static_cast<std::size_t>(v);
  } catch (const std::exception&) {
    throw std::invalid_argument(std::string(name) + " must be a non-negative integer");
  }
}

}  // namespace

Json to_json(const VerificationRecord& r) {
  Json j{{"statement", r.statement}, {"n", r.n},
         {"m", r.m},                 {"t", r.t},
         {"expected", r.expected},   {"computed", r.computed},
         {"verdict", to_string(r.verdict)}, {"millis", r.millis},
         {"characteristic", r.characteristic}};
  j["depth"] = r.depth ? Json(*r.depth) : Json(nullptr);
  j["sdepth"] = r.sdepth_lower ? Json::array({*r.sdepth_lower, *r.sdepth_upper}) : Json(nullptr);
  if (!r.note.empty()) j["note"] = r.note;
  return j;
}

std::string csv_header() { return "statement,n,m,t,expected,computed_depth,computed_sdepth,verdict,millis"; }

std::string to_csv_row(const VerificationRecord& r) {
  std::ostringstream out;
  out << csv_field(r.statement) << ',' << r.n << ',' << r.m << ',' << r.t << ',' << csv_field(r.expected) << ','
      << (r.depth ? std::to_string(*r.depth) : "") << ',' << csv_field(sdepth_text(r)) << ',' << to_string(r.verdict)
      << ',' << static_cast<long long>(r.millis + 0.5);
  return out.str();
}

VerifierSettings with_environment(VerifierSettings settings) {
  settings.search.node_budget = env_size("PATHDEPTH_BUDGET", settings.search.node_budget);
  settings.search.time_budget =
      std::chrono::milliseconds(env_size("PATHDEPTH_TIME_MS", settings.search.time_budget.count()));
  return settings;
}

Verifier::Verifier(VerifierSettings settings) : settings_(std::move(settings)) {
  if (!is_prime(settings_.characteristic)) throw std::invalid_argument("characteristic must be prime");
}

const MonomialIdeal& Verifier::cycle_power(int n, int m, int t) {
  auto key = std::make_tuple(n, m, t);
  if (auto it = powers_.find(key); it != powers_.end()) return it->second;
  MonomialIdeal result = t <= 1 ? cycle_ideal(n, m) : ideal_product(cycle_power(n, m, t - 1), cycle_ideal(n, m));
  return powers_.emplace(key, std::move(result)).first->second;
}

const DepthReport& Verifier::depth(const MonomialIdeal& ideal, std::uint32_t p) {
  auto key = std::make_pair(to_json(ideal).dump(), p);
  if (auto it = depths_.find(key); it != depths_.end()) return it->second;
  DepthOptions opts = settings_.depth;
  opts.characteristic = p;
  opts.box_budget = settings_.box_budget;
  return depths_.emplace(key, depth_quotient(ideal, opts)).first->second;
}

Verifier::SdepthFacts& Verifier::facts(const MonomialIdeal& ideal) {
  std::string key = to_json(ideal).dump();
  if (auto it = sdepths_.find(key); it != sdepths_.end()) return it->second;
  SdepthFacts f;
  const int n = static_cast<int>(ideal.ambient());
  if (ideal.is_zero()) {
    f.lower = f.upper = n;
  } else {
    f.upper = n - 1;
    try {
      f.poset.emplace(ideal, settings_.poset_budget, settings_.box_budget);
    } catch (const BudgetExceeded& e) {
      f.poset_failed = true;
      f.note = e.what();
      try {
        if (depth_zero_witness(ideal, std::nullopt, settings_.box_budget)) {
          f.upper = 0;
          f.note += "; a socle monomial forces sdepth 0";
        }
      } catch (const BudgetExceeded&) {
      }
    }
  }
  return sdepths_.emplace(key, std::move(f)).first->second;
}

Decision Verifier::sdepth_at_least(const MonomialIdeal& ideal, int k) {
  SdepthFacts& f = facts(ideal);
  if (k <= f.lower) return Decision::kYes;
  if (k > f.upper) return Decision::kNo;
  if (f.poset_failed || std::ranges::find(f.unresolved, k) != f.unresolved.end()) return Decision::kUnknown;
  DecisionResult d = pathdepth::sdepth_at_least(*f.poset, k, settings_.search);
  switch (d.status) {
    case SearchStatus::kFound: {
      PartitionCheck check = check_partition(ideal, *d.partition, settings_.box_budget);
      if (!check.valid || check.sdepth < k)
        throw std::logic_error("search returned an invalid partition: " + check.error);
      f.lower = std::max(f.lower, k);
      return Decision::kYes;
    }
    case SearchStatus::kAbsent:
      f.upper = std::min(f.upper, k - 1);
      return Decision::kNo;
    case SearchStatus::kUnknown:
      f.unresolved.push_back(k);
      f.note = "k=" + std::to_string(k) + ": " + d.note;
      return Decision::kUnknown;
  }
  return Decision::kUnknown;
}

std::pair<int, int> Verifier::sdepth_bracket(const MonomialIdeal& ideal) {
  SdepthFacts& f = facts(ideal);
  for (int k = f.upper; k > f.lower; --k)
    if (sdepth_at_least(ideal, k) == Decision::kYes) break;
  return {f.lower, f.upper};
}

void Verifier::fill_depth(VerificationRecord& record, const MonomialIdeal& ideal) {
  const DepthReport& rep = depth(ideal);
  record.depth = rep.depth;
  if (!rep.complete()) record.note += (record.note.empty() ? "" : "; ") + std::string("depth: ") + rep.note;
  if (settings_.cross_check && settings_.characteristic != 2) {
    const DepthReport& two = depth(ideal, 2);
    if (rep.depth && two.depth && *rep.depth != *two.depth)
      record.note += (record.note.empty() ? "" : "; ") + std::string("depth differs over GF(2): ") +
                     std::to_string(*two.depth);
  }
}

void Verifier::fill_sdepth(VerificationRecord& record, const MonomialIdeal& ideal) {
  SdepthFacts& f = facts(ideal);
  record.sdepth_lower = f.lower;
  record.sdepth_upper = f.upper;
  if (f.lower != f.upper && !f.note.empty())
    record.note += (record.note.empty() ? "" : "; ") + std::string("sdepth: ") + f.note;
}

namespace {

VerificationRecord start(std::string statement, int n, int m, int t, std::uint32_t p) {
  VerificationRecord r;
  r.statement = std::move(statement);
  r.n = n;
  r.m = m;
  r.t = t;
  r.characteristic = p;
  return r;
}

void finish(VerificationRecord& r, const Outcome& outcome, Clock::time_point began) {
  r.verdict = outcome.verdict();
  std::string extra = outcome.note();
  if (!extra.empty()) r.note = r.note.empty() ? extra : extra + "; " + r.note;
  r.millis = millis_since(began);
}

VerificationRecord ideal_equality(std::string statement, int n, int m, int t, std::uint32_t p,
                                  const MonomialIdeal& computed, const MonomialIdeal& expected,
                                  std::string expected_text, Clock::time_point began) {
  VerificationRecord r = start(std::move(statement), n, m, t, p);
  r.expected = std::move(expected_text);
  r.computed = ideal_summary(computed);
  Outcome o;
  o.require(computed == expected, "ideal equality");
  finish(r, o, began);
  return r;
}

}  // namespace

VerificationRecord Verifier::colon_identity(int n, int m, int t) {
  auto began = Clock::now();
  CycleArithmetic ca = cycle_arithmetic(n, m);
  if (t < ca.stable_power) throw std::invalid_argument("colon identity needs t >= stable_power");
  MonomialIdeal lhs = colon(cycle_power(n, m, t), colon_witness(n, m, t));
  MonomialIdeal rhs = ca.d == 1 ? maximal_ideal(n) : residue_class_ideal(n, ca.d);
  return ideal_equality("colon-identity", n, m, t, settings_.characteristic, lhs, rhs,
                        ca.d == 1 ? "maximal ideal" : "U(" + std::to_string(n) + "," + std::to_string(ca.d) + ")",
                        began);
}

VerificationRecord Verifier::cycle_minus_one(int n, int t) {
  auto began = Clock::now();
  const MonomialIdeal& ideal = cycle_power(n, n - 1, t);
  const int v = std::max(n - t - 1, 0);
  VerificationRecord r = start("cycle-minus-one", n, n - 1, t, settings_.characteristic);
  r.expected = "depth = sdepth = " + std::to_string(v);
  Outcome o;
  fill_depth(r, ideal);
  o.require(compare(r.depth, [v](int x) { return x == v; }), "depth value");
  o.require(as_bool(sdepth_at_least(ideal, v)), "sdepth lower bound");
  auto above = sdepth_at_least(ideal, v + 1);
  o.require(above == Decision::kUnknown ? std::nullopt : std::optional<bool>(above == Decision::kNo),
            "sdepth upper bound");
  fill_sdepth(r, ideal);
  finish(r, o, began);
  return r;
}

namespace {

std::optional<bool> at_most(Decision above) {
  if (above == Decision::kUnknown) return std::nullopt;
  return above == Decision::kNo;
}

}  // namespace

VerificationRecord Verifier::large_power_bounds(int n, int m, int t) {
  auto began = Clock::now();
  CycleArithmetic ca = cycle_arithmetic(n, m);
  if (t < ca.stable_power) throw std::invalid_argument("large power bounds need t >= stable_power");
  const MonomialIdeal& ideal = cycle_power(n, m, t);
  VerificationRecord r = start("large-power", n, m, t, settings_.characteristic);
  Outcome o;
  fill_depth(r, ideal);
  if (ca.d == 1) {
    r.expected = "depth = sdepth = 0";
    o.require(compare(r.depth, [](int x) { return x == 0; }), "depth value");
    o.require(at_most(sdepth_at_least(ideal, 1)), "sdepth value");
  } else {
    const int sbound = n - n / ca.d;
    r.expected = "depth <= " + std::to_string(ca.d - 1) + ", sdepth <= " + std::to_string(sbound);
    o.require(compare(r.depth, [&](int x) { return x <= ca.d - 1; }), "depth bound");
    o.require(at_most(sdepth_at_least(ideal, sbound + 1)), "sdepth bound");
  }
  fill_sdepth(r, ideal);
  finish(r, o, began);
  return r;
}

VerificationRecord Verifier::two_short_cycle(int n, int t) {
  auto began = Clock::now();
  const int m = n - 2;
  if (m < 2) throw std::invalid_argument("needs n >= 4");
  const bool odd = n % 2 == 1;
  if ((odd && t < (n - 1) / 2) || (!odd && t < n - 1)) throw std::invalid_argument("power below the stable range");
  const MonomialIdeal& ideal = cycle_power(n, m, t);
  VerificationRecord r = start("two-short-cycle", n, m, t, settings_.characteristic);
  Outcome o;
  fill_depth(r, ideal);
  if (odd) {
    r.expected = "depth = sdepth = 0";
    o.require(compare(r.depth, [](int x) { return x == 0; }), "depth value");
    o.require(at_most(sdepth_at_least(ideal, 1)), "sdepth value");
  } else {
    r.expected = "depth <= 1, sdepth <= " + std::to_string(n / 2);
    o.require(compare(r.depth, [](int x) { return x <= 1; }), "depth bound");
    o.require(at_most(sdepth_at_least(ideal, n / 2 + 1)), "sdepth bound");
  }
  fill_sdepth(r, ideal);
  finish(r, o, began);
  return r;
}

VerificationRecord Verifier::last_variable_bound(int n, int m, int t) {
  auto began = Clock::now();
  const MonomialIdeal& ideal = cycle_power(n, m, t);
  const int f = path_power_depth_formula(n - 1, m, t);
  VerificationRecord r = start("last-variable-bound", n, m, t, settings_.characteristic);
  r.expected = "depth <= " + std::to_string(f + 1);
  Outcome o;
  fill_depth(r, ideal);
  o.require(compare(r.depth, [f](int x) { return x <= f + 1; }), "depth bound");
  MonomialIdeal quotient = colon(ideal, Monomial::variable(n, n - 1));
  std::optional<int> qd = depth(quotient).depth;
  if (qd && r.depth) {
    r.computed = "depth(J^t : x_n) = " + std::to_string(*qd);
    if (*qd > *r.depth) {
      r.expected += ", and = " + std::to_string(f) + " since the colon is deeper";
      o.require(*r.depth == f, "equality clause");
    }
  } else {
    o.require(std::nullopt, "equality clause");
  }
  finish(r, o, began);
  return r;
}

VerificationRecord Verifier::long_cycle_bounds(int n, int m, int t) {
  auto began = Clock::now();
  if (m < 2 || t < 2 || n < m * t - 1) throw std::invalid_argument("needs m, t >= 2 and n >= mt - 1");
  VerificationRecord r = start("long-cycle", n, m, t, settings_.characteristic);
  Outcome o;
  const MonomialIdeal& ideal = cycle_power(n, m, t);
  fill_depth(r, ideal);
  if (n == m * t - 1) {
    r.expected = "depth = sdepth = 0 for powers t and t+1";
    o.require(compare(r.depth, [](int x) { return x == 0; }), "depth value");
    o.require(at_most(sdepth_at_least(ideal, 1)), "sdepth value");
    const MonomialIdeal& next = cycle_power(n, m, t + 1);
    std::optional<int> nd = depth(next).depth;
    r.computed = "next power depth " + (nd ? std::to_string(*nd) : std::string("?"));
    o.require(compare(nd, [](int x) { return x == 0; }), "next power depth");
    o.require(at_most(sdepth_at_least(next, 1)), "next power sdepth");
  } else {
    const int f = path_power_depth_formula(n - 1, m, t);
    r.expected = std::to_string(f) + " <= depth <= " + std::to_string(f + 1) + ", sdepth >= " + std::to_string(f);
    o.require(compare(r.depth, [f](int x) { return f <= x && x <= f + 1; }), "depth sandwich");
    o.require(as_bool(sdepth_at_least(ideal, f)), "sdepth bound");
  }
  fill_sdepth(r, ideal);
  finish(r, o, began);
  return r;
}

VerificationRecord Verifier::initial_segment_identity(int n, int m, int t) {
  auto began = Clock::now();
  MonomialIdeal lhs = colon(cycle_power(n, m, t), initial_segment(n, m * t - 1));
  MonomialIdeal rhs = initial_segment_colon(n, m, t);
  VerificationRecord r = ideal_equality(
      "initial-segment", n, m, t, settings_.characteristic, lhs, rhs,
      "case " + std::to_string(static_cast<int>(initial_segment_case(n, m, t))) + ": " + ideal_summary(rhs), began);
  if (r.verdict == Verdict::kFail && initial_segment_case(n, m, t) == InitialSegmentCase::kWithPathPower &&
      lhs == initial_segment_colon(n, m, t, 1))
    r.note += "; the colon equals the form with the first power of the tail path ideal";
  return r;
}

VerificationRecord Verifier::last_variable_identity(int n, int m, int t) {
  auto began = Clock::now();
  std::size_t last = static_cast<std::size_t>(n - 1);
  MonomialIdeal xn = variable_ideal(n, std::span<const std::size_t>(&last, 1));
  MonomialIdeal lhs = ideal_sum(cycle_power(n, m, t), xn);
  MonomialIdeal rhs = ideal_sum(extend(ideal_power(path_ideal(n - 1, m), t), 1), xn);
  return ideal_equality("last-variable-colon", n, m, t, settings_.characteristic, lhs, rhs, "(path power, x_n)", began);
}

VerificationRecord Verifier::path_power_depth(int n, int m, int t) {
  auto began = Clock::now();
  MonomialIdeal ideal = ideal_power(path_ideal(n, m), t);
  const int f = path_power_depth_formula(n, m, t);
  VerificationRecord r = start("path-power", n, m, t, settings_.characteristic);
  r.expected = "depth = " + std::to_string(f);
  Outcome o;
  fill_depth(r, ideal);
  o.require(compare(r.depth, [f](int x) { return x == f; }), "depth value");
  finish(r, o, began);
  return r;
}

VerificationRecord Verifier::residue_class_depth(int n, int d) {
  auto began = Clock::now();
  MonomialIdeal ideal = residue_class_ideal(n, d);
  VerificationRecord r = start("residue-class", n, d, 0, settings_.characteristic);
  r.expected = "depth = " + std::to_string(d - 1);
  Outcome o;
  fill_depth(r, ideal);
  o.require(compare(r.depth, [d](int x) { return x == d - 1; }), "depth value");
  finish(r, o, began);
  return r;
}

VerificationRecord Verifier::edge_cycle_depth(int n, int t) {
  auto began = Clock::now();
  const int v = edge_cycle_power_depth(n, t);
  const MonomialIdeal& ideal = cycle_power(n, 2, t);
  VerificationRecord r = start("edge-cycle", n, 2, t, settings_.characteristic);
  r.expected = "depth = " + std::to_string(v);
  Outcome o;
  fill_depth(r, ideal);
  o.require(compare(r.depth, [v](int x) { return x == v; }), "depth value");
  finish(r, o, began);
  return r;
}

VerificationRecord Verifier::depth_zero_equivalence(int n, int m, int t) {
  auto began = Clock::now();
  const MonomialIdeal& ideal = cycle_power(n, m, t);
  VerificationRecord r = start("depth-zero", n, m, t, settings_.characteristic);
  r.expected = "depth 0 <=> sdepth 0 <=> socle witness";
  fill_depth(r, ideal);
  std::optional<bool> by_depth = compare(r.depth, [](int x) { return x == 0; });
  std::optional<bool> by_sdepth = at_most(sdepth_at_least(ideal, 1));
  std::optional<bool> by_witness;
  try {
    by_witness = depth_zero_witness(ideal, std::nullopt, settings_.box_budget).has_value();
  } catch (const BudgetExceeded& e) {
    r.note = std::string("witness: ") + e.what();
  }
  fill_sdepth(r, ideal);
  auto show = [](std::optional<bool> b) { return b ? (*b ? "yes" : "no") : "?"; };
  r.computed = std::string("depth0=") + show(by_depth) + " sdepth0=" + show(by_sdepth) + " witness=" + show(by_witness);
  Outcome o;
  std::vector<bool> known;
  for (auto b : {by_depth, by_sdepth, by_witness})
    if (b) known.push_back(*b);
  bool agree = std::ranges::adjacent_find(known, std::not_equal_to<>{}) == known.end();
  if (!agree) o.require(false, "equivalence");
  else if (known.size() < 3) o.require(std::nullopt, "equivalence");
  finish(r, o, began);
  return r;
}

VerificationRecord Verifier::factorization(int n, int m) {
  auto began = Clock::now();
  CycleArithmetic ca = cycle_arithmetic(n, m);
  if (ca.d < 2) throw std::invalid_argument("factorization needs gcd(n, m) >= 2");
  VerificationRecord r = start("factorization", n, m, ca.stable_power, settings_.characteristic);
  r.expected = "v w is a product of " + std::to_string(ca.stable_power) + " cyclic paths";
  MonomialIdeal paths = cycle_ideal(n, m);
  Monomial w = colon_witness(n, m, ca.stable_power);
  MonomialIdeal u = residue_class_ideal(n, ca.d);
  Outcome o;
  std::size_t bad = 0;
  std::string first_bad;
  for (const Monomial& v : u.generators()) {
    std::vector<Monomial> seq = factor_residue_generator(v, n, m);
    Monomial prod = Monomial::one(n);
    bool ok = seq.size() == static_cast<std::size_t>(ca.stable_power);
    for (const Monomial& p : seq) {
      ok = ok && std::ranges::find(paths.generators(), p) != paths.generators().end();
      prod *= p;
    }
    ok = ok && prod == v * w;
    if (!ok && bad++ == 0) first_bad = to_string(v);
  }
  r.computed = std::to_string(u.size() - bad) + "/" + std::to_string(u.size()) + " generators factor";
  o.require(bad == 0, "factorization");
  if (bad) r.note = "first failing v = " + first_bad;
  finish(r, o, began);
  return r;
}

VerificationRecord Verifier::depth_at_least_d_minus_one(int n, int m, int t) {
  auto began = Clock::now();
  const int d = std::gcd(n, m);
  const MonomialIdeal& ideal = cycle_power(n, m, t);
  VerificationRecord r = start("d-minus-1", n, m, t, settings_.characteristic);
  r.expected = "depth >= " + std::to_string(d - 1);
  Outcome o;
  fill_depth(r, ideal);
  o.require(compare(r.depth, [d](int x) { return x >= d - 1; }), "depth bound");
  finish(r, o, began);
  return r;
}

VerificationRecord Verifier::stanley_inequality(int n, int m, int t) {
  auto began = Clock::now();
  const MonomialIdeal& ideal = cycle_power(n, m, t);
  VerificationRecord r = start("stanley", n, m, t, settings_.characteristic);
  r.expected = "sdepth >= depth";
  Outcome o;
  fill_depth(r, ideal);
  if (r.depth) o.require(as_bool(sdepth_at_least(ideal, *r.depth)), "sdepth bound");
  else o.require(std::nullopt, "depth");
  fill_sdepth(r, ideal);
  finish(r, o, began);
  return r;
}

std::vector<std::string> statement_ids() {
  return {"colon-identity", "cycle-minus-one", "large-power", "two-short-cycle", "last-variable-bound", "long-cycle", "initial-segment",
          "last-variable-colon", "path-power",    "residue-class", "edge-cycle",    "depth-zero", "factorization"};
}

namespace {

template <class F>
void cycle_grid(const Grid& g, F&& f) {
  for (int n = std::max(g.n_min, 3); n <= g.n_max; ++n)
    for (int m = 2; m < n; ++m)
      for (int t = 1; t <= g.t_max; ++t) f(n, m, t);
}

template <class F>
void stable_range_grid(const Grid& g, F&& f) {
  for (int n = std::max(g.n_min, 3); n <= g.n_max; ++n)
    for (int m = 2; m < n; ++m) {
      const int stable_power = cycle_arithmetic(n, m).stable_power;
      for (int t = stable_power; t <= std::max(stable_power, g.t_max); ++t) f(n, m, t);
    }
}

template <class F>
void long_cycle_grid(const Grid& g, F&& f) {
  for (int m = 2; m < g.n_max; ++m)
    for (int t = 2; t <= g.t_max; ++t)
      for (int n = std::max({g.n_min, m * t - 1, m + 1}); n <= g.n_max; ++n) f(n, m, t);
}

}  // namespace

std::vector<VerificationRecord> run_statement(Verifier& v, std::string_view id, const Grid& g) {
  std::vector<VerificationRecord> out;
  auto add = [&](VerificationRecord r) { out.push_back(std::move(r)); };
  if (id == "all") {
    for (const auto& s : statement_ids()) {
      auto part = run_statement(v, s, g);
      out.insert(out.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
    }
  } else if (id == "colon-identity") {
    stable_range_grid(g, [&](int n, int m, int t) { add(v.colon_identity(n, m, t)); });
  } else if (id == "cycle-minus-one") {
    for (int n = std::max(g.n_min, 3); n <= g.n_max; ++n)
      for (int t = 1; t <= std::max(g.t_max, n); ++t) add(v.cycle_minus_one(n, t));
  } else if (id == "large-power") {
    stable_range_grid(g, [&](int n, int m, int t) { add(v.large_power_bounds(n, m, t)); });
  } else if (id == "two-short-cycle") {
    for (int n = std::max(g.n_min, 4); n <= g.n_max; ++n) {
      const int lo = n % 2 ? (n - 1) / 2 : n - 1;
      for (int t = lo; t <= std::max(lo, g.t_max); ++t) add(v.two_short_cycle(n, t));
    }
  } else if (id == "last-variable-bound") {
    cycle_grid(g, [&](int n, int m, int t) { add(v.last_variable_bound(n, m, t)); });
  } else if (id == "long-cycle") {
    long_cycle_grid(g, [&](int n, int m, int t) { add(v.long_cycle_bounds(n, m, t)); });
  } else if (id == "initial-segment") {
    long_cycle_grid(g, [&](int n, int m, int t) { add(v.initial_segment_identity(n, m, t)); });
  } else if (id == "last-variable-colon") {
    cycle_grid(g, [&](int n, int m, int t) { add(v.last_variable_identity(n, m, t)); });
  } else if (id == "path-power") {
    for (int n = std::max(g.n_min, 2); n <= g.n_max; ++n)
      for (int m = 2; m <= n; ++m)
        for (int t = 1; t <= std::min(g.t_max, 3); ++t) add(v.path_power_depth(n, m, t));
  } else if (id == "residue-class") {
    for (int n = std::max(g.n_min, 2); n <= g.n_max; ++n)
      for (int d = 2; d <= n; ++d)
        if (n % d == 0) add(v.residue_class_depth(n, d));
  } else if (id == "edge-cycle") {
    for (int n = std::max(g.n_min, 3); n <= g.n_max; ++n)
      for (int t = 2; t < (n + 2) / 2; ++t) add(v.edge_cycle_depth(n, t));
  } else if (id == "depth-zero") {
    cycle_grid(g, [&](int n, int m, int t) { add(v.depth_zero_equivalence(n, m, t)); });
  } else if (id == "factorization") {
    for (int n = std::max(g.n_min, 3); n <= g.n_max; ++n)
      for (int m = 2; m < n; ++m)
        if (std::gcd(n, m) > 1) add(v.factorization(n, m));
    if (g.n_max < 12) add(v.factorization(12, 8));
  } else {
    throw std::invalid_argument("unknown statement id: " + std::string(id));
  }
  return out;
}

std::vector<VerificationRecord> run_scan(Verifier& v, std::string_view conjecture, const Grid& g) {
  std::vector<VerificationRecord> out;
  if (conjecture == "d-minus-1") {
    cycle_grid(g, [&](int n, int m, int t) { out.push_back(v.depth_at_least_d_minus_one(n, m, t)); });
  } else if (conjecture == "stanley") {
    cycle_grid(g, [&](int n, int m, int t) { out.push_back(v.stanley_inequality(n, m, t)); });
  } else {
    throw std::invalid_argument("unknown conjecture: " + std::string(conjecture));
  }
  return out;
}

}  // namespace pathdepth
