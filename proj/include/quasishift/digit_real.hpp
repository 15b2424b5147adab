#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/rational.hpp>

#include "quasishift/quasigroup.hpp"

namespace quasishift {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::rational<BigInt>;

// x = numerator / base^power: a point of the removed countable set on which
// the digit conjugacy is not defined.
struct NullSetPoint : std::domain_error {
  NullSetPoint(BigInt numerator_, int power_);
  BigInt numerator;
  int power;
};

// Eventually periodic base-M expansion 0.d1 d2 d3 ... of a point of [0,1).
// Canonical: shortest preperiod, minimal period; the eventually-all-0 and
// eventually-all-(M-1) tails are excluded so the expansion map stays a
// bijection onto the admissible rationals.
class DigitReal {
 public:
  DigitReal(int base, std::vector<int> preperiod, std::vector<int> period);

  // nullopt instead of throwing when the stream falls in an excluded tail.
  static std::optional<DigitReal> try_make(int base, std::vector<int> preperiod,
                                           std::vector<int> period);

  int base() const { return base_; }
  const std::vector<int>& preperiod() const { return preperiod_; }
  const std::vector<int>& period() const { return period_; }
  int digit_at(std::size_t i) const;  // 0-based digit position

  BigRational value() const;
  std::string to_string() const;  // "0.25(142857)" style

  bool operator==(const DigitReal&) const = default;

 private:
  struct Canonical {};
  DigitReal(Canonical, int base, std::vector<int> preperiod, std::vector<int> period);

  int base_;
  std::vector<int> preperiod_;
  std::vector<int> period_;
};

// Base-M expansion of an admissible rational in [0,1); throws NullSetPoint
// (with the witness numerator and power) on the removed set i/M^k.
DigitReal phi(const BigRational& x, int base);

// Exact geometric-series sum; inverse of phi on canonical digit streams.
BigRational phi_inv(const DigitReal& d);

// Multiplication by M mod 1 == dropping the leading digit.
DigitReal T_map(const DigitReal& d);

// x.y := digitwise base_op product of the two expansions. nullopt when the
// combined stream lands in an excluded tail: the product is undefined there,
// which is the weak (almost-everywhere) nature of the operation, not an error.
std::optional<DigitReal> bullet(const DigitReal& x, const DigitReal& y,
                                const FiniteQuasigroup& base_op);

BigRational parse_rational(const std::string& text);  // "a/b" or "a"
std::string rational_to_string(const BigRational& x);

}  // namespace quasishift
