#include "properties.hpp"

#include <algorithm>

#include "oracles.hpp"
#include "pathdepth/homology.hpp"
#include "pathdepth/monomial_ideal.hpp"
#include "pathdepth/sdepth.hpp"

using namespace pathdepth;

namespace props {

namespace {

int pick(std::mt19937_64& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

Monomial random_monomial(std::mt19937_64& rng, std::size_t n, int max_exp, bool allow_one = true) {
  while (true) {
    std::vector<Exponent> e(n);
    for (auto& x : e) x = pick(rng, 0, max_exp);
    Monomial u(std::move(e));
    if (allow_one || !u.is_one()) return u;
  }
}

MonomialIdeal random_ideal(std::mt19937_64& rng, std::size_t n, int max_gens = 4, int max_exp = 2) {
  std::vector<Monomial> gens;
  int k = pick(rng, 1, max_gens);
  for (int i = 0; i < k; ++i) gens.push_back(random_monomial(rng, n, max_exp, false));
  return minimalize(n, gens);
}

oracle::Vec vec(const Monomial& u) { return {u.exponents().begin(), u.exponents().end()}; }

oracle::Gens raw(const MonomialIdeal& ideal) {
  oracle::Gens out;
  for (const auto& g : ideal.generators()) out.push_back(vec(g));
  return out;
}

std::string describe(const MonomialIdeal& ideal) {
  std::string s = "(";
  for (const auto& g : ideal.generators()) s += to_string(g) + " ";
  return s + ")";
}

oracle::Vec cap_of(std::initializer_list<const MonomialIdeal*> ideals, std::size_t n, int extra) {
  oracle::Vec cap(n, 0);
  for (const auto* I : ideals)
    for (const auto& g : I->generators())
      for (std::size_t i = 0; i < n; ++i) cap[i] = std::max(cap[i], static_cast<int>(g[i]));
  for (auto& c : cap) c += extra;
  return cap;
}

std::string colon_laws(std::mt19937_64& rng) {
  std::size_t n = pick(rng, 1, 4);
  auto I = random_ideal(rng, n);
  auto u = random_monomial(rng, n, 2), v = random_monomial(rng, n, 2);
  auto Iu = colon(I, u);
  if (colon(I, u * v) != colon(Iu, v)) return "(I:uv) != ((I:u):v) for " + describe(I);
  for (const auto& g : I.generators())
    if (!Iu.contains(g)) return "I not inside (I:u) for " + describe(I);
  if (colon(I, Monomial::one(n)) != I) return "(I:1) != I";
  for (const auto& w : oracle::box(cap_of({&I}, n, 0))) {
    oracle::Vec wu = w;
    for (std::size_t i = 0; i < n; ++i) wu[i] += u[i];
    if (Iu.contains(Monomial(std::vector<Exponent>(w.begin(), w.end()))) != oracle::member(raw(I), wu))
      return "colon membership law fails for " + describe(I) + " : " + to_string(u);
  }
  return {};
}

std::string intersection_laws(std::mt19937_64& rng) {
  std::size_t n = pick(rng, 1, 4);
  auto I = random_ideal(rng, n), J = random_ideal(rng, n), K = random_ideal(rng, n);
  auto IJ = intersect(I, J);
  if (IJ != intersect(J, I)) return "intersection not commutative";
  if (intersect(IJ, K) != intersect(I, intersect(J, K))) return "intersection not associative";
  for (const auto& w : oracle::box(cap_of({&I, &J}, n, 0))) {
    Monomial m(std::vector<Exponent>(w.begin(), w.end()));
    bool expected = oracle::member(raw(I), w) && oracle::member(raw(J), w);
    if (IJ.contains(m) != expected) return "intersection membership law fails for " + describe(I) + describe(J);
  }
  return {};
}

std::string power_additivity(std::mt19937_64& rng) {
  std::size_t n = pick(rng, 1, 4);
  auto I = random_ideal(rng, n, 3);
  int s = pick(rng, 1, 2), t = pick(rng, 1, 2);
  auto lhs = ideal_power(I, s + t);
  if (lhs != ideal_product(ideal_power(I, s), ideal_power(I, t))) return "I^(s+t) != I^s I^t for " + describe(I);
  auto brute = oracle::all_products(raw(I), s + t);
  for (const auto& g : lhs.generators())
    if (!oracle::member(brute, vec(g))) return "power generator is not a product";
  for (const auto& p : brute)
    if (!lhs.contains(Monomial(std::vector<Exponent>(p.begin(), p.end())))) return "product missing from power";
  return {};
}

std::string minimalize_laws(std::mt19937_64& rng) {
  std::size_t n = pick(rng, 1, 4);
  std::vector<Monomial> gens;
  int k = pick(rng, 1, 6);
  for (int i = 0; i < k; ++i) gens.push_back(random_monomial(rng, n, 3, false));
  auto I = minimalize(n, gens);
  std::vector<Monomial> again(I.generators().begin(), I.generators().end());
  if (minimalize(n, again) != I) return "minimalize not idempotent";
  std::shuffle(gens.begin(), gens.end(), rng);
  gens.push_back(gens.front() * random_monomial(rng, n, 1));
  if (minimalize(n, gens) != I) return "minimalize depends on order or multiples";
  for (const auto& a : I.generators())
    for (const auto& b : I.generators())
      if (!(a == b) && divides(a, b)) return "generators not minimal";
  return {};
}

std::string fresh_variable_depth(std::mt19937_64& rng) {
  std::size_t n = pick(rng, 1, 4);
  auto I = random_ideal(rng, n);
  auto a = depth_quotient(I), b = depth_quotient(extend(I, 1));
  if (!a.complete() || !b.complete()) return "depth did not complete";
  if (*b.depth != *a.depth + 1) return "depth did not grow by one for " + describe(I);
  if (*a.depth != oracle::koszul_depth(raw(I), static_cast<int>(n))) return "depth differs from oracle for " + describe(I);
  return {};
}

int exact_sdepth(const MonomialIdeal& I, std::string& why) {
  auto rep = sdepth_quotient(I);
  if (!rep.exact()) {
    why = "sdepth did not complete for " + describe(I);
    return -1;
  }
  if (!I.is_zero()) {
    auto check = check_partition(I, rep.certificate);
    if (!check.valid || check.sdepth != rep.lower) {
      why = "certificate rejected for " + describe(I) + ": " + check.error;
      return -1;
    }
  }
  return rep.lower;
}

std::string fresh_variable_sdepth(std::mt19937_64& rng) {
  std::size_t n = pick(rng, 1, 3);
  auto I = random_ideal(rng, n);
  std::string why;
  int a = exact_sdepth(I, why);
  if (!why.empty()) return why;
  int b = exact_sdepth(extend(I, 1), why);
  if (!why.empty()) return why;
  if (b != a + 1) return "sdepth did not grow by one for " + describe(I);
  return {};
}

std::string certificate_revalidation(std::mt19937_64& rng) {
  std::size_t n = pick(rng, 1, 4);
  auto I = random_ideal(rng, n);
  std::string why;
  int s = exact_sdepth(I, why);
  if (!why.empty()) return why;
  CharPoset p(I);
  if (p.size() <= 24 && s != oracle::brute_sdepth(raw(I), static_cast<int>(n)))
    return "sdepth differs from brute force for " + describe(I);
  return {};
}

std::string colon_monotonicity(std::mt19937_64& rng) {
  std::size_t n = pick(rng, 2, 3);
  auto I = random_ideal(rng, n);
  auto u = random_monomial(rng, n, 1);
  if (I.contains(u)) return {};
  auto Iu = colon(I, u);
  auto a = depth_quotient(I), b = depth_quotient(Iu);
  if (*b.depth < *a.depth) return "depth dropped under colon for " + describe(I);
  std::string why;
  int sa = exact_sdepth(I, why);
  if (!why.empty()) return why;
  int sb = exact_sdepth(Iu, why);
  if (!why.empty()) return why;
  if (sb < sa) return "sdepth dropped under colon for " + describe(I);
  return {};
}

}  // namespace

std::vector<Named> all_properties() {
  return {{"colon laws", colon_laws, 300},
          {"intersection membership", intersection_laws, 300},
          {"power additivity", power_additivity, 200},
          {"minimalize idempotence", minimalize_laws, 200},
          {"fresh variable depth", fresh_variable_depth, 150},
          {"fresh variable sdepth", fresh_variable_sdepth, 150},
          {"certificate revalidation", certificate_revalidation, 150},
          {"colon monotonicity", colon_monotonicity, 100}};
}

Outcome run(const Named& property, std::uint64_t seed, int cases) {
  Outcome out{property.name, 0, 0, {}};
  std::mt19937_64 rng(seed);
  for (int i = 0; i < cases; ++i) {
    ++out.cases;
    std::string why = property.check(rng);
    if (!why.empty() && out.failures++ == 0) out.first_failure = why;
  }
  return out;
}

}  // namespace props
