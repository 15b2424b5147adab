#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "quasishift/quasigroup.hpp"

namespace quasishift {

// Bi-infinite sequence x_i = digits[i mod p], anchored at index 0 and stored
// with p minimal. Two points are equal only if their anchored digit arrays
// match; rotation classes are not collapsed.
class PeriodicPoint {
 public:
  PeriodicPoint(int alphabet_size, std::vector<int> digits);  // canonicalizes

  static PeriodicPoint constant(int alphabet_size, int symbol);

  int alphabet_size() const { return alphabet_size_; }
  int period() const { return static_cast<int>(digits_.size()); }
  const std::vector<int>& digits() const { return digits_; }
  int digit_at(std::int64_t i) const;  // any index, negative included

  std::string to_string() const;  // digits joined, "012" style for small alphabets

  bool operator==(const PeriodicPoint&) const = default;
  auto operator<=>(const PeriodicPoint&) const = default;

 private:
  int alphabet_size_;
  std::vector<int> digits_;
};

// Left shift: moves the anchor one step, preserving the minimal period.
PeriodicPoint shift(const PeriodicPoint& x);

// sigma^n for any n in Z (negative shifts move the anchor right).
PeriodicPoint shift_by(const PeriodicPoint& x, std::int64_t n);

// Combines digitwise under op at the lcm of the two periods.
PeriodicPoint digitwise(const FiniteQuasigroup& op, const PeriodicPoint& a,
                        const PeriodicPoint& b);

// All points whose minimal period divides P (one per length-P digit array).
std::vector<PeriodicPoint> points_with_period_dividing(int alphabet_size, int P);

}  // namespace quasishift
