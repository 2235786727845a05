#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "pathdepth/exponent_box.hpp"
#include "pathdepth/monomial.hpp"
#include "pathdepth/monomial_ideal.hpp"

namespace pathdepth {

/// A finite simplicial complex on vertices {0, ..., vertices-1}, faces stored
/// as bitmasks sorted by (size, mask). No faces at all is the void complex;
/// the face list {0} is the complex {emptyset}.
class SimplicialComplex {
 public:
  SimplicialComplex() = default;
  /// Closes `faces` under taking subsets. Requires vertices <= 31.
  SimplicialComplex(std::size_t vertices, std::vector<std::uint32_t> faces);

  std::size_t vertices() const { return vertices_; }
  std::span<const std::uint32_t> faces() const { return faces_; }
  bool is_void() const { return faces_.empty(); }
  bool contains(std::uint32_t face) const;
  /// -1 for {emptyset}; -2 for the void complex.
  int dimension() const;
  std::vector<std::uint32_t> facets() const;

  /// Number of faces of each dimension, index 0 <-> dimension -1.
  std::vector<std::size_t> f_vector() const;

 private:
  std::size_t vertices_ = 0;
  std::vector<std::uint32_t> faces_;
};

/// { F subset of supp(a) : x^(a - F) in I }, vertices indexed by variables.
SimplicialComplex upper_koszul(const MonomialIdeal& ideal, const Monomial& a);

/// dim of reduced homology over GF(p) in degrees -1, 0, ..., dim(C); the
/// entry at index i is the degree i-1 rank. Empty for the void complex.
std::vector<int> reduced_homology_ranks(const SimplicialComplex& complex, std::uint32_t p);

inline constexpr std::uint32_t kDefaultCharacteristic = 32003;
inline constexpr std::size_t kDefaultLatticeBudget = 200'000;

/// Join-closure of G(I) inside the box [0, lcm G(I)], sorted lexicographically.
std::vector<Monomial> lcm_lattice(const MonomialIdeal& ideal, std::size_t max_degrees = kDefaultLatticeBudget,
                                  std::size_t max_box = kDefaultBoxBudget);

struct DepthOptions {
  std::uint32_t characteristic = kDefaultCharacteristic;
  std::size_t lattice_budget = kDefaultLatticeBudget;
  std::size_t box_budget = kDefaultBoxBudget;
};

enum class DepthMethod { kBetti, kWitness, kClosedForm };

/// One nonzero graded Betti number beta_{i,a}(S/I).
struct BettiEntry {
  int homological_degree = 0;
  std::vector<Exponent> multidegree;
  int value = 0;
};

struct DepthReport {
  std::size_t ambient = 0;
  std::optional<int> depth;  ///< empty when a budget was exceeded
  std::optional<int> projective_dimension;
  std::uint32_t characteristic = kDefaultCharacteristic;
  DepthMethod method = DepthMethod::kBetti;
  std::size_t lattice_size = 0;
  std::vector<BettiEntry> betti;  ///< nonzero beta_{i,a}(S/I), i >= 1
  std::string note;

  bool complete() const { return depth.has_value(); }
};

/// depth(S/I) = n - pd(S/I), with pd read off the multigraded Betti numbers
/// beta_{i+1,a}(S/I) = dim H~_{i-1}(upper_koszul(I, a)) over the lcm lattice.
/// Budget overruns give a report without a depth value.
DepthReport depth_quotient(const MonomialIdeal& ideal, const DepthOptions& options = {});

/// u not in I with x_i u in I for every i, i.e. m = (I : u) is associated.
bool is_socle_witness(const MonomialIdeal& ideal, const Monomial& u);

/// Searches for a socle witness below `bound`, trying `hint` first and then
/// every standard monomial u <= bound in order of degree. Witnesses always
/// satisfy u < lcm G(I) componentwise, so a bound >= lcm G(I) - 1 makes an
/// empty answer conclusive.
std::optional<Monomial> depth_zero_witness(const MonomialIdeal& ideal, const Monomial& bound,
                                           const std::optional<Monomial>& hint = std::nullopt,
                                           std::size_t max_box = kDefaultBoxBudget);

/// Same search with bound = lcm G(I).
std::optional<Monomial> depth_zero_witness(const MonomialIdeal& ideal,
                                           const std::optional<Monomial>& hint = std::nullopt,
                                           std::size_t max_box = kDefaultBoxBudget);

const char* to_string(DepthMethod method);

}  // namespace pathdepth
