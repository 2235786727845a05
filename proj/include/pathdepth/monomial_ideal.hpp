#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "pathdepth/monomial.hpp"

namespace pathdepth {

/// A monomial ideal given by its minimal generating set G(I).
///
/// Generators are kept minimal, duplicate-free and sorted lexicographically.
/// The zero ideal has no generators. The whole ring is a separate state
/// rather than the generator {1}.
class MonomialIdeal {
 public:
  MonomialIdeal() = default;

  static MonomialIdeal zero(std::size_t n);
  static MonomialIdeal unit(std::size_t n);
  /// Minimalizes the given generators; a generator equal to 1 gives the unit ideal.
  static MonomialIdeal generated_by(std::size_t n, std::vector<Monomial> gens);

  std::size_t ambient() const { return n_; }
  bool is_unit() const { return unit_; }
  bool is_zero() const { return !unit_ && gens_.empty(); }
  std::span<const Monomial> generators() const { return gens_; }
  std::size_t size() const { return gens_.size(); }

  /// True iff some generator divides u.
  bool contains(const Monomial& u) const;

  friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;
  friend MonomialIdeal minimalize(std::size_t n, std::vector<Monomial> gens);

 private:
  std::size_t n_ = 0;
  bool unit_ = false;
  std::vector<Monomial> gens_;
};

/// Inclusion-minimal generating subset of `gens`; the ideal is unchanged.
MonomialIdeal minimalize(std::size_t n, std::vector<Monomial> gens);

MonomialIdeal ideal_sum(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal ideal_product(const MonomialIdeal& a, const MonomialIdeal& b);

/// I^t, built as I^t = minimalize(I^(t-1) * I). I^0 is the unit ideal.
MonomialIdeal ideal_power(const MonomialIdeal& ideal, int t);

/// (I : u) = { f : f u in I }.
MonomialIdeal colon(const MonomialIdeal& ideal, const Monomial& u);

MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b);

/// The ideal generated by the variables with the given 0-based indices.
MonomialIdeal variable_ideal(std::size_t n, std::span<const std::size_t> indices);
MonomialIdeal maximal_ideal(std::size_t n);

/// I S' in S' = S[x_{n+1}, ..., x_{n+extra}].
MonomialIdeal extend(const MonomialIdeal& ideal, std::size_t extra);

/// Componentwise max of the generator exponents (the lcm of G(I)).
Monomial generator_lcm(const MonomialIdeal& ideal);

}  // namespace pathdepth
