#include "pathdepth/monomial.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <stdexcept>

namespace pathdepth {

void check_same_ambient(std::size_t a, std::size_t b) {
  if (a != b) {
    throw std::invalid_argument("ambient mismatch: " + std::to_string(a) + " vs " +
                                std::to_string(b) + " variables");
  }
}

Monomial::Monomial(std::size_t n) : exps_(n, 0) {
  if (n == 0) throw std::invalid_argument("monomial needs at least one variable");
}

Monomial::Monomial(std::vector<Exponent> exponents) : exps_(std::move(exponents)) {
  if (exps_.empty()) throw std::invalid_argument("monomial needs at least one variable");
  long total = 0;
  for (Exponent e : exps_) {
    if (e < 0) throw std::invalid_argument("negative exponent");
    total += e;
  }
  if (total > kMaxDegree) {
    throw std::invalid_argument("monomial degree " + std::to_string(total) +
                                " exceeds limit " + std::to_string(kMaxDegree));
  }
}

Monomial Monomial::variable(std::size_t n, std::size_t i) {
  if (i >= n) throw std::out_of_range("variable index out of range");
  Monomial u(n);
  u.exps_[i] = 1;
  return u;
}

Monomial Monomial::product_of(std::size_t n, std::span<const std::size_t> indices) {
  std::vector<Exponent> e(n, 0);
  for (std::size_t i : indices) {
    if (i >= n) throw std::out_of_range("variable index out of range");
    ++e[i];
  }
  return Monomial(std::move(e));
}

int Monomial::degree() const { return std::accumulate(exps_.begin(), exps_.end(), 0); }

std::vector<std::size_t> Monomial::support() const {
  std::vector<std::size_t> s;
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] > 0) s.push_back(i);
  return s;
}

bool Monomial::is_one() const {
  return std::all_of(exps_.begin(), exps_.end(), [](Exponent e) { return e == 0; });
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial r = *this;
  r *= other;
  return r;
}

Monomial& Monomial::operator*=(const Monomial& other) {
  check_same_ambient(ambient(), other.ambient());
  int total = 0;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    exps_[i] += other.exps_[i];
    total += exps_[i];
  }
  if (total > kMaxDegree) throw std::invalid_argument("monomial degree exceeds limit");
  return *this;
}

bool divides(const Monomial& a, const Monomial& b) {
  check_same_ambient(a.ambient(), b.ambient());
  for (std::size_t i = 0; i < a.ambient(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

namespace {

template <typename Op>
Monomial combine(const Monomial& a, const Monomial& b, Op op) {
  check_same_ambient(a.ambient(), b.ambient());
  std::vector<Exponent> e(a.ambient());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = op(a[i], b[i]);
  return Monomial(std::move(e));
}

}  // namespace

Monomial gcd(const Monomial& a, const Monomial& b) {
  return combine(a, b, [](Exponent x, Exponent y) { return std::min(x, y); });
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  return combine(a, b, [](Exponent x, Exponent y) { return std::max(x, y); });
}

Monomial colon(const Monomial& a, const Monomial& b) {
  return combine(a, b, [](Exponent x, Exponent y) { return std::max(x - y, 0); });
}

Monomial divide(const Monomial& a, const Monomial& b) {
  if (!divides(b, a)) throw std::domain_error("divide: " + to_string(b) + " does not divide " + to_string(a));
  return combine(a, b, [](Exponent x, Exponent y) { return x - y; });
}

Monomial extend(const Monomial& u, std::size_t extra) {
  std::vector<Exponent> e(u.exponents().begin(), u.exponents().end());
  e.resize(e.size() + extra, 0);
  return Monomial(std::move(e));
}

std::string to_string(const Monomial& u) {
  std::string out;
  for (std::size_t i = 0; i < u.ambient(); ++i) {
    if (u[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += 'x' + std::to_string(i + 1);
    if (u[i] > 1) out += '^' + std::to_string(u[i]);
  }
  return out.empty() ? "1" : out;
}

Monomial parse_monomial(std::string_view text, std::size_t n) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
  };
  auto parse_uint = [&](std::string_view s) {
    unsigned v = 0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || p != s.data() + s.size() || s.empty())
      throw std::invalid_argument("bad integer in monomial: '" + std::string(s) + "'");
    return v;
  };

  std::vector<Exponent> e(n, 0);
  text = trim(text);
  if (text == "1") return Monomial(std::move(e));
  while (!text.empty()) {
    auto star = text.find('*');
    std::string_view factor = trim(text.substr(0, star));
    text = star == std::string_view::npos ? std::string_view{} : text.substr(star + 1);
    if (factor.size() < 2 || factor.front() != 'x')
      throw std::invalid_argument("bad factor in monomial: '" + std::string(factor) + "'");
    factor.remove_prefix(1);
    auto caret = factor.find('^');
    unsigned idx = parse_uint(factor.substr(0, caret));
    unsigned pow = caret == std::string_view::npos ? 1 : parse_uint(factor.substr(caret + 1));
    if (idx == 0 || idx > n)
      throw std::invalid_argument("variable x" + std::to_string(idx) + " outside x1..x" + std::to_string(n));
    e[idx - 1] += static_cast<Exponent>(pow);
  }
  return Monomial(std::move(e));
}

}  // namespace pathdepth
