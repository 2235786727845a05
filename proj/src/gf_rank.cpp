#include "pathdepth/gf_rank.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

namespace pathdepth {

bool is_prime(std::uint32_t p) {
  if (p < 2) return false;
  for (std::uint64_t q = 2; q * q <= p; ++q)
    if (p % q == 0) return false;
  return true;
}

std::int64_t mod_inverse(std::int64_t a, std::int64_t p) {
  std::int64_t result = 1, base = a % p, e = p - 2;
  if (base < 0) base += p;
  if (base == 0) throw std::domain_error("mod_inverse of zero");
  while (e > 0) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return result;
}

namespace {

void check_field(std::uint32_t p) {
  if (!is_prime(p) || p >= (1u << 31)) throw std::invalid_argument("characteristic must be a prime below 2^31");
}

}  // namespace

std::size_t rank_mod_p(ModMatrix m, std::uint32_t p) {
  check_field(p);
  const std::int64_t P = p;
  auto reduce = [P](std::int64_t x) {
    x %= P;
    return x < 0 ? x + P : x;
  };
  m = m.unaryExpr(reduce);
  std::size_t rank = 0;
  const auto rows = static_cast<std::size_t>(m.rows());
  for (Eigen::Index c = 0; c < m.cols() && rank < rows; ++c) {
    Eigen::Index pivot = -1;
    for (auto r = static_cast<Eigen::Index>(rank); r < m.rows(); ++r) {
      if (m(r, c) != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    const auto top = static_cast<Eigen::Index>(rank);
    if (pivot != top) m.row(pivot).swap(m.row(top));
    std::int64_t inv = mod_inverse(m(top, c), P);
    m.row(top) = (m.row(top) * inv).unaryExpr(reduce);
    for (Eigen::Index r = top + 1; r < m.rows(); ++r) {
      std::int64_t f = m(r, c);
      if (f != 0) m.row(r) = (m.row(r) - f * m.row(top)).unaryExpr(reduce);
    }
    ++rank;
  }
  return rank;
}

std::size_t rank_mod_p(SparseModMatrix m, std::uint32_t p) {
  check_field(p);
  const std::int64_t P = p;
  using Row = std::vector<std::pair<std::uint32_t, std::int64_t>>;
  std::unordered_map<std::uint32_t, Row> pivots;  // leading column -> normalized row

  auto axpy = [P](const Row& x, std::int64_t f, const Row& y) {
    // x - f * y, both sorted by column
    Row out;
    out.reserve(x.size() + y.size());
    std::size_t i = 0, j = 0;
    while (i < x.size() || j < y.size()) {
      if (j == y.size() || (i < x.size() && x[i].first < y[j].first)) {
        out.push_back(x[i++]);
      } else if (i == x.size() || y[j].first < x[i].first) {
        std::int64_t v = (P - f * y[j].second % P) % P;
        if (v != 0) out.emplace_back(y[j].first, v);
        ++j;
      } else {
        std::int64_t v = ((x[i].second - f * y[j].second) % P + P) % P;
        if (v != 0) out.emplace_back(x[i].first, v);
        ++i;
        ++j;
      }
    }
    return out;
  };

  for (auto& row : m.entries) {
    std::sort(row.begin(), row.end());
    Row cur;
    for (auto [c, v] : row) {
      v %= P;
      if (v < 0) v += P;
      if (v != 0) cur.emplace_back(c, v);
    }
    while (!cur.empty()) {
      auto it = pivots.find(cur.front().first);
      if (it == pivots.end()) break;
      cur = axpy(cur, cur.front().second, it->second);
    }
    if (cur.empty()) continue;
    std::int64_t inv = mod_inverse(cur.front().second, P);
    for (auto& e : cur) e.second = e.second * inv % P;
    std::uint32_t lead = cur.front().first;
    pivots.emplace(lead, std::move(cur));
  }
  return pivots.size();
}

}  // namespace pathdepth
