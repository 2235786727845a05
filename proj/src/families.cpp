#include "pathdepth/families.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace pathdepth {

namespace {

std::size_t to_size(int n) {
  if (n < 1) throw std::invalid_argument("variable count must be positive");
  return static_cast<std::size_t>(n);
}

}  // namespace

int wrap_index(long j, int n) {
  long r = ((j - 1) % n + n) % n;
  return static_cast<int>(r) + 1;
}

Monomial cyclic_path(int n, int m, int start) {
  std::vector<Exponent> e(to_size(n), 0);
  for (int k = 0; k < m; ++k) ++e[wrap_index(static_cast<long>(start) + k, n) - 1];
  return Monomial(std::move(e));
}

MonomialIdeal path_ideal(int n, int m) {
  if (m < 1 || m > n) throw std::invalid_argument("path_ideal requires n >= m >= 1");
  std::vector<Monomial> g;
  for (int i = 1; i + m - 1 <= n; ++i) g.push_back(cyclic_path(n, m, i));
  return minimalize(to_size(n), std::move(g));
}

MonomialIdeal cycle_ideal(int n, int m) {
  if (m < 2 || m >= n) throw std::invalid_argument("cycle_ideal requires n > m >= 2");
  std::vector<Monomial> g;
  for (int i = 1; i <= n; ++i) g.push_back(cyclic_path(n, m, i));
  return minimalize(to_size(n), std::move(g));
}

int path_power_depth_formula(int n, int m, int t) {
  if (m < 1 || m > n || t < 1) throw std::invalid_argument("path_power_depth_formula requires n >= m >= 1 and t >= 1");
  if (t > n + 1 - m) return m - 1;
  int q = n - t + 2;  // >= m + 1 > 0 on this branch
  int fl = q / (m + 1);
  int ce = (q + m) / (m + 1);
  return q - fl - ce;
}

int edge_cycle_power_depth(int n, int t) {
  int upper = (n + 1 + 1) / 2;  // ceil((n+1)/2)
  if (t < 2 || t >= upper) {
    throw std::invalid_argument("edge_cycle_power_depth requires 2 <= t < ceil((n+1)/2)");
  }
  return (n - t + 1 + 2) / 3;
}

CycleArithmetic cycle_arithmetic(int n, int m) {
  if (m < 2 || m >= n) throw std::invalid_argument("cycle_arithmetic requires n > m >= 2");
  CycleArithmetic c;
  c.d = std::gcd(n, m);
  c.r = n / c.d;
  c.s = m / c.d;
  for (int stable_power = n - 1; stable_power >= 1; --stable_power) {
    long rest = static_cast<long>(m) * stable_power - c.d;
    if (rest > 0 && rest % n == 0) {
      c.stable_power = stable_power;
      c.full_turns = static_cast<int>(rest / n);
      return c;
    }
  }
  throw std::logic_error("cycle_arithmetic: no stable_power for n=" + std::to_string(n) + ", m=" + std::to_string(m));
}

MonomialIdeal residue_class_ideal(int n, int d) {
  if (d < 2 || n % d != 0) throw std::invalid_argument("residue_class_ideal requires d >= 2 and d | n");
  auto N = to_size(n);
  MonomialIdeal acc = MonomialIdeal::unit(N);
  for (int j = 0; j < d; ++j) {
    std::vector<std::size_t> vars;
    for (int i = j; i < n; i += d) vars.push_back(static_cast<std::size_t>(i));
    acc = intersect(acc, variable_ideal(N, vars));
  }
  return acc;
}

Monomial colon_witness(int n, int m, int t) {
  CycleArithmetic c = cycle_arithmetic(n, m);
  if (t < c.stable_power) {
    throw std::invalid_argument("colon_witness requires t >= stable_power = " + std::to_string(c.stable_power));
  }
  std::vector<Exponent> e(to_size(n), c.full_turns);
  for (int i = 0; i < m; ++i) e[i] += t - c.stable_power;
  return Monomial(std::move(e));
}

std::vector<Monomial> factor_residue_generator(const Monomial& v, int n, int m) {
  CycleArithmetic c = cycle_arithmetic(n, m);
  const int d = c.d;
  if (d < 2) throw std::invalid_argument("factor_residue_generator requires gcd(n, m) >= 2");
  check_same_ambient(v.ambient(), to_size(n));

  // ell[j] for j = 1..d holds the variable of v in residue class j mod d.
  std::vector<int> ell(d + 1, 0);
  if (v.degree() != d) throw std::invalid_argument("v must have degree d");
  for (int i = 1; i <= n; ++i) {
    if (v[i - 1] == 0) continue;
    if (v[i - 1] > 1) throw std::invalid_argument("v must be squarefree");
    int cls = (i - 1) % d + 1;
    if (ell[cls] != 0) throw std::invalid_argument("v has two variables in one residue class");
    ell[cls] = i;
  }

  std::vector<Monomial> u;
  u.reserve(c.stable_power);
  int start = ell[d];
  u.push_back(cyclic_path(n, m, start));
  while (static_cast<int>(u.size()) < c.stable_power) {
    int last = wrap_index(static_cast<long>(start) + m - 1, n);
    auto hit = std::find(ell.begin() + 1, ell.begin() + d, last);
    start = hit != ell.begin() + d ? last : wrap_index(static_cast<long>(last) + 1, n);
    u.push_back(cyclic_path(n, m, start));
  }
  return u;
}

InitialSegmentCase initial_segment_case(int n, int m, int t) {
  if (m < 2 || t < 2 || n < m * t - 1) {
    throw std::invalid_argument("initial_segment_colon requires m, t >= 2 and n >= mt - 1");
  }
  if (n == m * t - 1) return InitialSegmentCase::kMaximal;
  if (n == m * t) return InitialSegmentCase::kMultiples;
  if (n <= m * (t + 1)) return InitialSegmentCase::kMultiplesAndLast;
  return InitialSegmentCase::kWithPathPower;
}

MonomialIdeal initial_segment_colon(int n, int m, int t) { return initial_segment_colon(n, m, t, t); }

MonomialIdeal initial_segment_colon(int n, int m, int t, int tail_power) {
  if (tail_power < 1) throw std::invalid_argument("tail_power must be positive");
  auto kind = initial_segment_case(n, m, t);
  auto N = to_size(n);
  if (kind == InitialSegmentCase::kMaximal) return maximal_ideal(N);

  std::vector<std::size_t> vars;
  for (int k = 1; k <= t; ++k) vars.push_back(static_cast<std::size_t>(k * m - 1));
  if (kind != InitialSegmentCase::kMultiples) vars.push_back(N - 1);
  MonomialIdeal base = variable_ideal(N, vars);
  if (kind != InitialSegmentCase::kWithPathPower) return base;

  // Paths of length m inside x_{mt+1}, ..., x_{n-1}.
  std::vector<Monomial> paths;
  for (int i = m * t + 1; i + m - 1 <= n - 1; ++i) paths.push_back(cyclic_path(n, m, i));
  MonomialIdeal v = ideal_power(minimalize(N, std::move(paths)), tail_power);
  return ideal_sum(base, v);
}

Monomial initial_segment(int n, int k) {
  if (k < 0 || k > n) throw std::invalid_argument("initial_segment requires 0 <= k <= n");
  std::vector<Exponent> e(to_size(n), 0);
  for (int i = 0; i < k; ++i) e[i] = 1;
  return Monomial(std::move(e));
}

MonomialIdeal cyclic_shift(const MonomialIdeal& ideal) {
  if (ideal.is_unit()) return ideal;
  std::size_t n = ideal.ambient();
  std::vector<Monomial> g;
  for (const auto& x : ideal.generators()) {
    std::vector<Exponent> e(n);
    for (std::size_t i = 0; i < n; ++i) e[(i + 1) % n] = x[i];
    g.emplace_back(std::move(e));
  }
  return minimalize(n, std::move(g));
}

}  // namespace pathdepth
