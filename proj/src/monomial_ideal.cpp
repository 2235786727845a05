#include "pathdepth/monomial_ideal.hpp"

#include <algorithm>
#include <stdexcept>

namespace pathdepth {

MonomialIdeal MonomialIdeal::zero(std::size_t n) {
  if (n == 0) throw std::invalid_argument("ideal needs at least one variable");
  MonomialIdeal I;
  I.n_ = n;
  return I;
}

MonomialIdeal MonomialIdeal::unit(std::size_t n) {
  MonomialIdeal I = zero(n);
  I.unit_ = true;
  return I;
}

MonomialIdeal MonomialIdeal::generated_by(std::size_t n, std::vector<Monomial> gens) {
  return minimalize(n, std::move(gens));
}

bool MonomialIdeal::contains(const Monomial& u) const {
  check_same_ambient(n_, u.ambient());
  if (unit_) return true;
  return std::any_of(gens_.begin(), gens_.end(), [&](const Monomial& g) { return divides(g, u); });
}

MonomialIdeal minimalize(std::size_t n, std::vector<Monomial> gens) {
  MonomialIdeal out = MonomialIdeal::zero(n);
  for (const auto& g : gens) check_same_ambient(n, g.ambient());
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  if (std::any_of(gens.begin(), gens.end(), [](const Monomial& g) { return g.is_one(); }))
    return MonomialIdeal::unit(n);

  // A proper divisor has strictly smaller degree, so after sorting by degree
  // each candidate only needs testing against the generators already kept.
  std::stable_sort(gens.begin(), gens.end(),
                   [](const Monomial& a, const Monomial& b) { return a.degree() < b.degree(); });
  for (const Monomial& g : gens) {
    bool redundant =
        std::any_of(out.gens_.begin(), out.gens_.end(), [&](const Monomial& h) { return divides(h, g); });
    if (!redundant) out.gens_.push_back(g);
  }
  std::sort(out.gens_.begin(), out.gens_.end());
  return out;
}

MonomialIdeal ideal_sum(const MonomialIdeal& a, const MonomialIdeal& b) {
  check_same_ambient(a.ambient(), b.ambient());
  if (a.is_unit() || b.is_unit()) return MonomialIdeal::unit(a.ambient());
  std::vector<Monomial> g(a.generators().begin(), a.generators().end());
  g.insert(g.end(), b.generators().begin(), b.generators().end());
  return minimalize(a.ambient(), std::move(g));
}

MonomialIdeal ideal_product(const MonomialIdeal& a, const MonomialIdeal& b) {
  check_same_ambient(a.ambient(), b.ambient());
  if (a.is_unit()) return b;
  if (b.is_unit()) return a;
  std::vector<Monomial> g;
  g.reserve(a.size() * b.size());
  for (const auto& x : a.generators())
    for (const auto& y : b.generators()) g.push_back(x * y);
  return minimalize(a.ambient(), std::move(g));
}

MonomialIdeal ideal_power(const MonomialIdeal& ideal, int t) {
  if (t < 0) throw std::invalid_argument("ideal_power: negative exponent");
  MonomialIdeal acc = MonomialIdeal::unit(ideal.ambient());
  for (int i = 0; i < t; ++i) acc = ideal_product(acc, ideal);
  return acc;
}

MonomialIdeal colon(const MonomialIdeal& ideal, const Monomial& u) {
  check_same_ambient(ideal.ambient(), u.ambient());
  if (ideal.is_unit()) return ideal;
  std::vector<Monomial> g;
  g.reserve(ideal.size());
  for (const auto& x : ideal.generators()) g.push_back(colon(x, u));
  return minimalize(ideal.ambient(), std::move(g));
}

MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b) {
  check_same_ambient(a.ambient(), b.ambient());
  if (a.is_unit()) return b;
  if (b.is_unit()) return a;
  std::vector<Monomial> g;
  g.reserve(a.size() * b.size());
  for (const auto& x : a.generators())
    for (const auto& y : b.generators()) g.push_back(lcm(x, y));
  return minimalize(a.ambient(), std::move(g));
}

MonomialIdeal variable_ideal(std::size_t n, std::span<const std::size_t> indices) {
  std::vector<Monomial> g;
  for (std::size_t i : indices) g.push_back(Monomial::variable(n, i));
  return minimalize(n, std::move(g));
}

MonomialIdeal maximal_ideal(std::size_t n) {
  std::vector<std::size_t> all(n);
  for (std::size_t i = 0; i < n; ++i) all[i] = i;
  return variable_ideal(n, all);
}

MonomialIdeal extend(const MonomialIdeal& ideal, std::size_t extra) {
  std::size_t n = ideal.ambient() + extra;
  if (ideal.is_unit()) return MonomialIdeal::unit(n);
  std::vector<Monomial> g;
  for (const auto& x : ideal.generators()) g.push_back(extend(x, extra));
  return minimalize(n, std::move(g));
}

Monomial generator_lcm(const MonomialIdeal& ideal) {
  Monomial g(ideal.ambient());
  for (const auto& x : ideal.generators()) g = lcm(g, x);
  return g;
}

}  // namespace pathdepth
