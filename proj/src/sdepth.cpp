#include "pathdepth/sdepth.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>
#include <unordered_map>

#include "pathdepth/homology.hpp"

namespace pathdepth {

CharPoset::CharPoset(const MonomialIdeal& ideal, std::size_t max_elements, std::size_t max_box) {
  MembershipTable table(ideal, max_box);
  box_ = table.box();
  position_.assign(box_.size(), -1);
  for (std::size_t idx = 0; idx < box_.size(); ++idx) {
    if (table.at(idx)) continue;
    if (elements_.size() >= max_elements) {
      throw BudgetExceeded("characteristic poset exceeds " + std::to_string(max_elements) + " elements");
    }
    position_[idx] = static_cast<std::int32_t>(elements_.size());
    elements_.push_back(idx);
  }
  // Standard monomials of an ideal form a down-set.
  for (std::size_t idx : elements_) {
    for (std::size_t i = 0; i < box_.dims(); ++i) {
      if (box_.coord(idx, i) > 0 && position_[idx - box_.stride(i)] < 0) {
        throw std::logic_error("characteristic poset is not a down-set");
      }
    }
  }
}

std::size_t CharPoset::position(std::size_t box_idx) const {
  auto p = position_.at(box_idx);
  return p < 0 ? npos : static_cast<std::size_t>(p);
}

bool CharPoset::contains(std::span<const Exponent> a) const {
  for (std::size_t i = 0; i < box_.dims(); ++i)
    if (a[i] < 0 || a[i] > box_.cap(i)) return false;
  return position_[box_.index(a)] >= 0;
}

int CharPoset::free_count(std::size_t box_idx) const {
  int c = 0;
  for (std::size_t i = 0; i < box_.dims(); ++i) c += box_.coord(box_idx, i) == box_.cap(i) ? 1 : 0;
  return c;
}

namespace {

// Candidate intervals for "sdepth >= k". Any partition with all tops of
// free count >= k can be refined into one where each interval [a, b] with
// free_count(a) < k has b = a raised to g on a set T of exactly
// k - free_count(a) coordinates, and all remaining elements are singletons.
// Elements with free_count >= k therefore never need to be bottoms.
struct Candidates {
  std::vector<std::vector<std::int32_t>> rows;  // element positions, bottom first
  std::vector<std::pair<std::size_t, std::size_t>> ends;  // (bottom box idx, top box idx)
  std::vector<std::uint8_t> primary;
  bool some_primary_uncoverable = false;
  std::size_t entries = 0;
};

// Calls fn(top_box_idx, raised_coords) for every admissible top of the
// element at box index idx, in lexicographic order of the raised set;
// stops early when fn returns false.
template <typename Fn>
void for_each_top(const CharPoset& P, std::size_t idx, std::size_t need, Fn&& fn) {
  const ExponentBox& box = P.box();
  std::vector<std::size_t> freecoords;
  for (std::size_t i = 0; i < box.dims(); ++i)
    if (box.coord(idx, i) < box.cap(i)) freecoords.push_back(i);
  if (need > freecoords.size()) return;
  std::vector<std::size_t> choose(need), raised(need);
  for (std::size_t i = 0; i < need; ++i) choose[i] = i;
  while (true) {
    std::size_t top = idx;
    for (std::size_t t = 0; t < need; ++t) {
      std::size_t j = freecoords[choose[t]];
      raised[t] = j;
      top += static_cast<std::size_t>(box.cap(j) - box.coord(idx, j)) * box.stride(j);
    }
    if (P.position(top) != CharPoset::npos && !fn(top, raised)) return;
    std::size_t i = need;
    while (i > 0 && choose[i - 1] == freecoords.size() - need + i - 1) --i;
    if (i == 0) return;
    ++choose[i - 1];
    for (std::size_t j = i; j < need; ++j) choose[j] = choose[j - 1] + 1;
  }
}

Candidates build_candidates(const CharPoset& P, int k, std::size_t entry_budget) {
  const ExponentBox& box = P.box();
  Candidates out;
  out.primary.assign(P.size(), 0);
  for (std::size_t e = 0; e < P.size(); ++e) out.primary[e] = P.free_count(P.box_index(e)) < k ? 1 : 0;

  // Cheap pass first: an element with no admissible top settles the question.
  for (std::size_t e = 0; e < P.size(); ++e) {
    if (!out.primary[e]) continue;
    const std::size_t idx = P.box_index(e);
    const auto need = static_cast<std::size_t>(k - P.free_count(idx));
    bool any = false;
    for_each_top(P, idx, need, [&](std::size_t, const std::vector<std::size_t>&) {
      any = true;
      return false;
    });
    if (!any) {
      out.some_primary_uncoverable = true;
      return out;
    }
  }

  std::vector<Exponent> off;
  for (std::size_t e = 0; e < P.size(); ++e) {
    if (!out.primary[e]) continue;
    const std::size_t idx = P.box_index(e);
    const auto need = static_cast<std::size_t>(k - P.free_count(idx));
    for_each_top(P, idx, need, [&](std::size_t top, const std::vector<std::size_t>& raised) {
      std::vector<std::int32_t> row;
      off.assign(need, 0);
      while (true) {
        std::size_t cur = idx;
        for (std::size_t t = 0; t < need; ++t) cur += static_cast<std::size_t>(off[t]) * box.stride(raised[t]);
        row.push_back(static_cast<std::int32_t>(P.position(cur)));
        std::size_t t = 0;
        for (; t < need; ++t) {
          if (off[t] < box.cap(raised[t]) - box.coord(idx, raised[t])) {
            ++off[t];
            break;
          }
          off[t] = 0;
        }
        if (t == need) break;
      }
      out.entries += row.size();
      if (out.entries > entry_budget) {
        throw BudgetExceeded("candidate intervals exceed " + std::to_string(entry_budget) + " entries");
      }
      out.rows.push_back(std::move(row));
      out.ends.emplace_back(idx, top);
      return true;
    });
  }
  return out;
}

// Knuth's dancing links over element columns; columns of elements with
// free count >= k are secondary (covered at most once). Active primary
// columns are also kept in buckets by size so the fewest-rows column is
// found without scanning every column.
class DancingLinks {
 public:
  DancingLinks(std::size_t columns, const std::vector<std::uint8_t>& primary)
      : ncols_(static_cast<int>(columns)), primary_(primary) {
    const int total = ncols_ + 1;
    L_.resize(total);
    R_.resize(total);
    U_.resize(total);
    D_.resize(total);
    col_.resize(total);
    row_.assign(total, -1);
    size_.assign(total, 0);
    L_[0] = R_[0] = 0;
    for (int c = 1; c <= ncols_; ++c) {
      U_[c] = D_[c] = c;
      col_[c] = c;
      if (primary_[c - 1]) {
        L_[c] = L_[0];
        R_[c] = 0;
        R_[L_[0]] = c;
        L_[0] = c;
      } else {
        L_[c] = R_[c] = c;
      }
    }
  }

  void add_row(int row_id, const std::vector<std::int32_t>& elements) {
    int first = -1;
    for (std::int32_t e : elements) {
      int c = e + 1;
      int x = static_cast<int>(L_.size());
      L_.push_back(x);
      R_.push_back(x);
      U_.push_back(U_[c]);
      D_.push_back(c);
      col_.push_back(c);
      row_.push_back(row_id);
      D_[U_[c]] = x;
      U_[c] = x;
      ++size_[c];
      if (first < 0) {
        first = x;
      } else {
        L_[x] = L_[first];
        R_[x] = first;
        R_[L_[first]] = x;
        L_[first] = x;
      }
    }
  }

  /// Call once after the last add_row.
  void build_buckets() {
    int most = 0;
    for (int c = 1; c <= ncols_; ++c) most = std::max(most, size_[c]);
    head_.assign(static_cast<std::size_t>(most) + 1, 0);
    bnext_.assign(static_cast<std::size_t>(ncols_) + 1, 0);
    bprev_.assign(static_cast<std::size_t>(ncols_) + 1, 0);
    active_.assign(static_cast<std::size_t>(ncols_) + 1, 0);
    for (int c = ncols_; c >= 1; --c) {
      if (!primary_[c - 1]) continue;
      active_[c] = 1;
      link(c);
    }
  }

  void cover(int c) {
    R_[L_[c]] = R_[c];
    L_[R_[c]] = L_[c];
    if (active_[c]) {
      unlink(c);
      active_[c] = 0;
    }
    for (int i = D_[c]; i != c; i = D_[i]) {
      for (int j = R_[i]; j != i; j = R_[j]) {
        U_[D_[j]] = U_[j];
        D_[U_[j]] = D_[j];
        resize(col_[j], -1);
      }
    }
  }

  void uncover(int c) {
    for (int i = U_[c]; i != c; i = U_[i]) {
      for (int j = L_[i]; j != i; j = L_[j]) {
        resize(col_[j], +1);
        U_[D_[j]] = j;
        D_[U_[j]] = j;
      }
    }
    R_[L_[c]] = c;
    L_[R_[c]] = c;
    if (primary_[c - 1]) {
      active_[c] = 1;
      link(c);
    }
  }

  bool solved() const { return R_[0] == 0; }

  // Active primary column with the fewest remaining rows, or -1.
  int choose_column() const {
    for (int h : head_)
      if (h != 0) return h;
    return -1;
  }

  std::vector<int> L_, R_, U_, D_, col_, row_, size_;

 private:
  void link(int c) {
    auto s = static_cast<std::size_t>(size_[c]);
    bprev_[c] = 0;
    bnext_[c] = head_[s];
    if (head_[s] != 0) bprev_[head_[s]] = c;
    head_[s] = c;
  }

  void unlink(int c) {
    if (bprev_[c] != 0) {
      bnext_[bprev_[c]] = bnext_[c];
    } else {
      head_[static_cast<std::size_t>(size_[c])] = bnext_[c];
    }
    if (bnext_[c] != 0) bprev_[bnext_[c]] = bprev_[c];
  }

  void resize(int c, int delta) {
    if (active_[c]) {
      unlink(c);
      size_[c] += delta;
      link(c);
    } else {
      size_[c] += delta;
    }
  }

  int ncols_;
  const std::vector<std::uint8_t>& primary_;
  std::vector<int> head_, bnext_, bprev_;
  std::vector<std::uint8_t> active_;
};

// Dead-end states keyed by the exact set of covered elements.
class DeadEnds {
 public:
  DeadEnds(std::size_t elements, std::size_t max_bytes)
      : words_((elements + 63) / 64), max_words_(max_bytes / 8) {}

  std::size_t words() const { return words_; }

  bool contains(std::uint64_t hash, const std::vector<std::uint64_t>& bits) const {
    auto it = table_.find(hash);
    if (it == table_.end()) return false;
    for (std::uint32_t slot : it->second) {
      if (std::equal(bits.begin(), bits.end(), arena_.begin() + static_cast<std::ptrdiff_t>(slot * words_))) {
        return true;
      }
    }
    return false;
  }

  void insert(std::uint64_t hash, const std::vector<std::uint64_t>& bits) {
    if (arena_.size() + words_ > max_words_) return;
    auto slot = static_cast<std::uint32_t>(arena_.size() / words_);
    arena_.insert(arena_.end(), bits.begin(), bits.end());
    table_[hash].push_back(slot);
  }

 private:
  std::size_t words_;
  std::size_t max_words_;
  std::vector<std::uint64_t> arena_;
  std::unordered_map<std::uint64_t, std::vector<std::uint32_t>> table_;
};

}  // namespace

DecisionResult sdepth_at_least(const CharPoset& poset, int k, const SearchOptions& options) {
  const auto started = std::chrono::steady_clock::now();
  DecisionResult result;
  result.k = k;
  const int n = static_cast<int>(poset.ambient());
  if (k < 0 || k > n) throw std::invalid_argument("sdepth_at_least requires 0 <= k <= n");

  auto singletons_for = [&](const std::vector<std::uint8_t>& covered) {
    IntervalPartition part;
    for (std::size_t e = 0; e < poset.size(); ++e) {
      if (covered[e]) continue;
      auto a = poset.element(e);
      part.push_back({a, a});
    }
    return part;
  };

  Candidates cand;
  try {
    cand = build_candidates(poset, k, options.row_entry_budget);
  } catch (const BudgetExceeded& e) {
    result.status = SearchStatus::kUnknown;
    result.note = e.what();
    return result;
  }
  result.rows = cand.rows.size();
  if (cand.some_primary_uncoverable) {
    result.status = SearchStatus::kAbsent;
    result.note = "an element below free count k has no admissible interval";
    return result;
  }

  DancingLinks dlx(poset.size(), cand.primary);
  for (std::size_t r = 0; r < cand.rows.size(); ++r) dlx.add_row(static_cast<int>(r), cand.rows[r]);
  dlx.build_buckets();

  DeadEnds dead(poset.size(), options.memo_bytes);
  std::vector<std::uint64_t> bits(dead.words(), 0);
  std::vector<std::uint64_t> zobrist(poset.size());
  std::mt19937_64 rng(0x5eed5eedULL);
  for (auto& z : zobrist) z = rng();
  std::uint64_t hash = 0;

  auto toggle_row = [&](int node) {
    // flips every element of the row containing `node`
    int x = node;
    do {
      int e = dlx.col_[x] - 1;
      bits[static_cast<std::size_t>(e) / 64] ^= std::uint64_t{1} << (e % 64);
      hash ^= zobrist[static_cast<std::size_t>(e)];
      x = dlx.R_[x];
    } while (x != node);
  };

  struct Frame {
    int column;
    int node;
  };
  std::vector<Frame> stack;

  // Explicit-stack Algorithm X. `descend` enters a new state; `advance` tries
  // the next row of the top frame after its previous row failed.
  bool found = false;
  bool descend = true;
  while (true) {
    if (descend) {
      if (dlx.solved()) {
        found = true;
        break;
      }
      bool dead_state = dead.contains(hash, bits);
      int c = dead_state ? -1 : dlx.choose_column();
      if (!dead_state && dlx.size_[c] > 0) {
        dlx.cover(c);
        stack.push_back({c, dlx.D_[c]});
      } else {
        if (!dead_state) dead.insert(hash, bits);
        if (stack.empty()) break;
        // undo the row that led here, then move to its sibling
        Frame& f = stack.back();
        for (int j = dlx.L_[f.node]; j != f.node; j = dlx.L_[j]) dlx.uncover(dlx.col_[j]);
        toggle_row(f.node);
        f.node = dlx.D_[f.node];
      }
      descend = false;
    }
    Frame& f = stack.back();
    if (f.node == f.column) {
      dlx.uncover(f.column);
      stack.pop_back();
      dead.insert(hash, bits);
      if (stack.empty()) break;
      Frame& p = stack.back();
      for (int j = dlx.L_[p.node]; j != p.node; j = dlx.L_[j]) dlx.uncover(dlx.col_[j]);
      toggle_row(p.node);
      p.node = dlx.D_[p.node];
      continue;
    }
    if (++result.nodes > options.node_budget) {
      result.status = SearchStatus::kUnknown;
      result.note = "node budget of " + std::to_string(options.node_budget) + " exhausted";
      return result;
    }
    if (options.time_budget.count() > 0 && (result.nodes & 1023) == 0 &&
        std::chrono::steady_clock::now() - started > options.time_budget) {
      result.status = SearchStatus::kUnknown;
      result.note = "time budget of " + std::to_string(options.time_budget.count()) + " ms exhausted";
      return result;
    }
    toggle_row(f.node);
    for (int j = dlx.R_[f.node]; j != f.node; j = dlx.R_[j]) dlx.cover(dlx.col_[j]);
    descend = true;
  }

  if (!found) {
    result.status = SearchStatus::kAbsent;
    return result;
  }
  result.status = SearchStatus::kFound;
  std::vector<std::uint8_t> covered(poset.size(), 0);
  IntervalPartition part;
  for (const Frame& f : stack) {
    int r = dlx.row_[f.node];
    for (std::int32_t e : cand.rows[static_cast<std::size_t>(r)]) covered[static_cast<std::size_t>(e)] = 1;
    auto [lo, hi] = cand.ends[static_cast<std::size_t>(r)];
    part.push_back({poset.box().point(lo), poset.box().point(hi)});
  }
  auto rest = singletons_for(covered);
  part.insert(part.end(), rest.begin(), rest.end());
  std::sort(part.begin(), part.end(), [](const Interval& x, const Interval& y) {
    return x.bottom != y.bottom ? x.bottom < y.bottom : x.top < y.top;
  });
  result.partition = std::move(part);
  return result;
}

SdepthReport sdepth_quotient(const MonomialIdeal& ideal, const SdepthOptions& options) {
  if (ideal.is_unit()) throw std::invalid_argument("sdepth of S/I needs a proper ideal");
  SdepthReport report;
  const int n = static_cast<int>(ideal.ambient());
  report.ambient = ideal.ambient();
  if (ideal.is_zero()) {
    report.lower = report.upper = n;
    report.note = "S/0 = S is free over all variables";
    return report;
  }
  std::optional<CharPoset> poset;
  try {
    poset.emplace(ideal, options.poset_budget, options.box_budget);
  } catch (const BudgetExceeded& e) {
    report.lower = 0;
    report.upper = n - 1;
    report.note = e.what();
    try {
      // A socle monomial u sits below g and x_i u lies in I for every i, so
      // its interval is the singleton [u, u] with no free coordinate.
      if (depth_zero_witness(ideal, std::nullopt, options.box_budget)) {
        report.upper = 0;
        report.note += "; a socle monomial forces sdepth 0";
      }
    } catch (const BudgetExceeded&) {
    }
    return report;
  }
  report.poset_size = poset->size();

  // g lies in I, so the interval [0, g] is never available: sdepth <= n-1.
  report.upper = n - 1;
  report.lower = 0;
  for (int k = n - 1; k >= 0; --k) {
    DecisionResult d = sdepth_at_least(*poset, k, options.search);
    if (d.status == SearchStatus::kAbsent) {
      report.upper = std::min(report.upper, k - 1);
    } else if (d.status == SearchStatus::kFound) {
      report.lower = k;
      report.certificate = std::move(*d.partition);
      d.partition.reset();
      report.attempts.push_back(std::move(d));
      break;
    } else if (report.note.empty()) {
      report.note = "k=" + std::to_string(k) + ": " + d.note;
    }
    report.attempts.push_back(std::move(d));
  }
  return report;
}

PartitionCheck check_partition(const MonomialIdeal& ideal, const IntervalPartition& partition, std::size_t max_box) {
  PartitionCheck out;
  if (ideal.is_unit() || ideal.is_zero()) {
    out.error = "partition checks need a proper nonzero ideal";
    return out;
  }
  const std::size_t n = ideal.ambient();
  Monomial g = generator_lcm(ideal);
  ExponentBox box(g.exponents(), max_box);
  std::vector<int> hits(box.size(), 0);
  int best = static_cast<int>(n) + 1;
  for (const Interval& iv : partition) {
    if (iv.bottom.size() != n || iv.top.size() != n) {
      out.error = "interval with wrong ambient dimension";
      return out;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (iv.bottom[i] < 0 || iv.bottom[i] > iv.top[i] || iv.top[i] > g[i]) {
        out.error = "interval endpoints are not ordered inside [0, g]";
        return out;
      }
    }
    // Every point of the interval must be a standard monomial; since the
    // standard monomials form a down-set it is enough that the top is one,
    // but each point is tested directly here.
    std::vector<Exponent> c = iv.bottom;
    while (true) {
      if (ideal.contains(Monomial(c))) {
        out.error = "interval point " + to_string(Monomial(c)) + " lies in the ideal";
        return out;
      }
      ++hits[box.index(c)];
      std::size_t i = 0;
      for (; i < n; ++i) {
        if (c[i] < iv.top[i]) {
          ++c[i];
          break;
        }
        c[i] = iv.bottom[i];
      }
      if (i == n) break;
    }
    int z = 0;
    for (std::size_t i = 0; i < n; ++i) z += iv.top[i] == g[i] ? 1 : 0;
    best = std::min(best, z);
  }
  std::vector<Exponent> a(n, 0);
  std::size_t idx = 0;
  do {
    bool standard = !ideal.contains(Monomial(a));
    int want = standard ? 1 : 0;
    if (hits[idx] != want) {
      out.error = hits[idx] == 0 ? "standard monomial " + to_string(Monomial(a)) + " is not covered"
                                 : "monomial " + to_string(Monomial(a)) + " covered more than once";
      return out;
    }
    ++idx;
  } while (box.next(a));
  out.valid = true;
  out.sdepth = partition.empty() ? static_cast<int>(n) : best;
  return out;
}

const char* to_string(SearchStatus status) {
  switch (status) {
    case SearchStatus::kFound:
      return "found";
    case SearchStatus::kAbsent:
      return "absent";
    case SearchStatus::kUnknown:
      return "unknown";
  }
  return "?";
}

}  // namespace pathdepth
