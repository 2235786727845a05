#pragma once

// Slow reference implementations used only by the tests. None of them call
// the library's ideal arithmetic, homology or search code.

#include <cstdint>
#include <optional>
#include <vector>

namespace oracle {

using Vec = std::vector<int>;
using Gens = std::vector<Vec>;

bool divides(const Vec& a, const Vec& b);
bool member(const Gens& gens, const Vec& u);

/// Every exponent vector with 0 <= a_i <= cap_i, in odometer order.
std::vector<Vec> box(const Vec& cap);

Vec componentwise_max(const Gens& gens);

/// Products of m cyclically consecutive variables, written out by hand.
Gens cycle_generators(int n, int m);
/// All t-fold products of the given generators, without any reduction.
Gens all_products(const Gens& gens, int t);

/// Rank over GF(p) by plain row reduction.
int rank_mod(std::vector<std::vector<std::int64_t>> rows, std::int64_t p);

/// beta_{i,a}(S/I) via the homology of the Koszul complex of S/I in
/// multidegree a: the basis in homological degree i is all e_F with |F| = i,
/// F subset of supp(a) and x^(a-F) not in I.
int koszul_betti(const Gens& gens, int n, int i, const Vec& a, std::int64_t p);

/// depth(S/I) = n - max{i : beta_{i,a}(S/I) != 0 for some a <= lcm}. Only
/// for tiny instances: it scans the whole box below the lcm.
int koszul_depth(const Gens& gens, int n, std::int64_t p = 32003);

/// sdepth(S/I) by exhaustive search over partitions of the characteristic
/// poset into arbitrary intervals. Only for posets of a few dozen elements.
int brute_sdepth(const Gens& gens, int n);

}  // namespace oracle
