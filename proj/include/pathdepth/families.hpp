#pragma once

#include <cstddef>
#include <vector>

#include "pathdepth/monomial.hpp"
#include "pathdepth/monomial_ideal.hpp"

namespace pathdepth {

/// Products of m consecutive variables along a path on x_1..x_n:
/// (x_1...x_m, x_2...x_{m+1}, ..., x_{n-m+1}...x_n). Requires n >= m >= 1.
MonomialIdeal path_ideal(int n, int m);

/// Products of m cyclically consecutive variables on x_1..x_n (n generators).
/// Requires n > m >= 2.
MonomialIdeal cycle_ideal(int n, int m);

/// x_start x_{start+1} ... x_{start+m-1} with 1-based indices wrapping mod n.
Monomial cyclic_path(int n, int m, int start);

/// 1-based index reduced into {1, ..., n}.
int wrap_index(long j, int n);

/// Closed-form depth of S/I_{n,m}^t:
///   n-t+2 - floor((n-t+2)/(m+1)) - ceil((n-t+2)/(m+1))   if t <= n+1-m,
///   m-1                                                   otherwise.
int path_power_depth_formula(int n, int m, int t);

/// ceil((n-t+1)/3), the depth of S/J_{n,2}^t for 2 <= t < ceil((n+1)/2).
/// Throws std::invalid_argument outside that range.
int edge_cycle_power_depth(int n, int t);

/// Arithmetic attached to the pair (n, m): d = gcd(n, m), n = r d, m = s d,
/// and stable_power <= n-1 maximal with
///   m * stable_power = full_turns * n + d,  full_turns >= 1.
struct CycleArithmetic {
  int d = 0;
  int r = 0;
  int s = 0;
  int stable_power = 0;
  int full_turns = 0;
};

CycleArithmetic cycle_arithmetic(int n, int m);

/// Intersection of the d primes (x_j, x_{j+d}, ..., x_{j+d(r-1)}), j = 1..d.
/// Requires d >= 2 and d | n.
MonomialIdeal residue_class_ideal(int n, int d);

/// w_t = (x_1...x_n)^full_turns (x_1...x_m)^(t - stable_power). Requires t >= stable_power.
Monomial colon_witness(int n, int m, int t);

/// Writes v w (w = colon_witness(n, m, stable_power)) as an ordered product of stable_power
/// generators of J_{n,m}, for v = x_{l_1}...x_{l_d} with l_j = j mod d.
///
/// The sequence starts with the path at l_d; each later path starts at l_j
/// when the previous one ended at l_j (1 <= j <= d-1), and right after the
/// previous end otherwise.
std::vector<Monomial> factor_residue_generator(const Monomial& v, int n, int m);

enum class InitialSegmentCase { kMaximal = 1, kMultiples = 2, kMultiplesAndLast = 3, kWithPathPower = 4 };

InitialSegmentCase initial_segment_case(int n, int m, int t);

/// Closed form of (J_{n,m}^t : x_1 x_2 ... x_{mt-1}) for m, t >= 2, n >= mt-1:
///   n = mt-1:          the maximal ideal
///   n = mt:            (x_m, x_2m, ..., x_mt)
///   mt < n <= m(t+1):  (x_m, ..., x_mt, x_n)
///   n > m(t+1):        (x_m, ..., x_mt, x_n) + V, V the t-th power of the
///                      m-path ideal on x_{mt+1}, ..., x_{n-1}.
MonomialIdeal initial_segment_colon(int n, int m, int t);

/// The same shape with V replaced by the given power of the m-path ideal on
/// x_{mt+1}, ..., x_{n-1}. The colon itself always matches tail_power = 1:
/// one extra path next to x_1...x_{mt-1} already completes t paths.
MonomialIdeal initial_segment_colon(int n, int m, int t, int tail_power);

/// x_1 x_2 ... x_k in n variables.
Monomial initial_segment(int n, int k);

/// Applies the cyclic shift x_i -> x_{i+1} (indices mod n) to every generator.
MonomialIdeal cyclic_shift(const MonomialIdeal& ideal);

}  // namespace pathdepth
