#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace pathdepth {

using Exponent = std::int32_t;

/// Upper limit on the total degree of any monomial built by the library.
/// Desk-scale instances stay far below it; the check catches runaway powers.
inline constexpr int kMaxDegree = 256;

/// A monomial x^a in K[x_1, ..., x_n], stored as its exponent vector.
///
/// Indices are 0-based internally; the textual form "x1^2*x3" is 1-based.
class Monomial {
 public:
  Monomial() = default;

  /// The monomial 1 in n variables.
  explicit Monomial(std::size_t n);

  /// Throws std::invalid_argument on an empty vector, a negative entry or a
  /// total degree above kMaxDegree.
  explicit Monomial(std::vector<Exponent> exponents);

  static Monomial one(std::size_t n) { return Monomial(n); }
  static Monomial variable(std::size_t n, std::size_t i);
  /// Product of the variables with the given 0-based indices (repeats allowed).
  static Monomial product_of(std::size_t n, std::span<const std::size_t> indices);

  std::size_t ambient() const { return exps_.size(); }
  Exponent operator[](std::size_t i) const { return exps_[i]; }
  std::span<const Exponent> exponents() const { return exps_; }

  int degree() const;
  std::vector<std::size_t> support() const;
  bool is_one() const;

  Monomial operator*(const Monomial& other) const;
  Monomial& operator*=(const Monomial& other);

  /// Lexicographic on exponent vectors.
  friend auto operator<=>(const Monomial&, const Monomial&) = default;
  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  std::vector<Exponent> exps_;
};

/// True iff a_i <= b_i for every i. Throws on ambient mismatch.
bool divides(const Monomial& a, const Monomial& b);

Monomial gcd(const Monomial& a, const Monomial& b);
Monomial lcm(const Monomial& a, const Monomial& b);

/// a / gcd(a, b): the generator of ((a) : b).
Monomial colon(const Monomial& a, const Monomial& b);

/// Exact quotient a / b; throws std::domain_error if b does not divide a.
Monomial divide(const Monomial& a, const Monomial& b);

/// Same monomial viewed in a ring with `extra` additional trailing variables.
Monomial extend(const Monomial& u, std::size_t extra);

/// "x1^2*x3", or "1" for the unit monomial.
std::string to_string(const Monomial& u);

/// Inverse of to_string. Variables outside x1..xn are rejected.
Monomial parse_monomial(std::string_view text, std::size_t n);

void check_same_ambient(std::size_t a, std::size_t b);

}  // namespace pathdepth
