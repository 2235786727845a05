#include "pathdepth/exponent_box.hpp"

#include <algorithm>
#include <string>

namespace pathdepth {

ExponentBox::ExponentBox(std::span<const Exponent> cap, std::size_t max_points)
    : cap_(cap.begin(), cap.end()), stride_(cap.size()) {
  std::size_t total = 1;
  for (std::size_t i = 0; i < cap_.size(); ++i) {
    if (cap_[i] < 0) throw std::invalid_argument("negative box cap");
    stride_[i] = total;
    std::size_t side = static_cast<std::size_t>(cap_[i]) + 1;
    if (total > max_points / side) {
      throw BudgetExceeded("exponent box exceeds " + std::to_string(max_points) + " points");
    }
    total *= side;
  }
  size_ = total;
}

std::size_t ExponentBox::index(std::span<const Exponent> a) const {
  std::size_t idx = 0;
  for (std::size_t i = 0; i < cap_.size(); ++i) {
    if (a[i] < 0 || a[i] > cap_[i]) throw std::out_of_range("point outside exponent box");
    idx += static_cast<std::size_t>(a[i]) * stride_[i];
  }
  return idx;
}

std::vector<Exponent> ExponentBox::point(std::size_t idx) const {
  std::vector<Exponent> a(cap_.size());
  for (std::size_t i = 0; i < cap_.size(); ++i) a[i] = coord(idx, i);
  return a;
}

bool ExponentBox::next(std::vector<Exponent>& a) const {
  for (std::size_t i = 0; i < cap_.size(); ++i) {
    if (a[i] < cap_[i]) {
      ++a[i];
      return true;
    }
    a[i] = 0;
  }
  return false;
}

MembershipTable::MembershipTable(const MonomialIdeal& ideal, std::size_t max_points) : ideal_(ideal) {
  if (ideal.is_unit() || ideal.is_zero()) {
    throw std::invalid_argument("membership table needs a proper nonzero ideal");
  }
  Monomial g = generator_lcm(ideal);
  box_ = ExponentBox(g.exponents(), max_points);
  member_.assign(box_.size(), 0);
  generator_.assign(box_.size(), 0);
  for (const auto& h : ideal.generators()) {
    auto idx = box_.index(h.exponents());
    member_[idx] = 1;
    generator_[idx] = 1;
  }
  // The ideal is an up-set: a point is in it iff it is a generator or one of
  // its lower neighbours is. Index order visits lower neighbours first.
  std::vector<Exponent> a(box_.dims(), 0);
  std::size_t idx = 0;
  do {
    if (!member_[idx]) {
      for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] > 0 && member_[idx - box_.stride(i)]) {
          member_[idx] = 1;
          break;
        }
      }
    }
    ++idx;
  } while (box_.next(a));
}

bool MembershipTable::contains(std::span<const Exponent> a) const {
  std::size_t idx = 0;
  for (std::size_t i = 0; i < box_.dims(); ++i) {
    if (a[i] < 0) return false;
    idx += static_cast<std::size_t>(std::min(a[i], box_.cap(i))) * box_.stride(i);
  }
  return member_[idx] != 0;
}

}  // namespace pathdepth
