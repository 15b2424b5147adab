#include "quasishift/digit_real.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace quasishift {

namespace {

BigInt big_gcd(BigInt a, BigInt b) {
  while (b != 0) {
    BigInt t = a % b;
    a = b;
    b = t;
  }
  return a;
}

std::vector<int> minimal_cycle(std::vector<int> period) {
  const int p = static_cast<int>(period.size());
  for (int d = 1; d < p; ++d) {
    if (p % d != 0) continue;
    bool repeats = true;
    for (int i = d; i < p && repeats; ++i) repeats = period[i] == period[i % d];
    if (repeats) {
      period.resize(d);
      return period;
    }
  }
  return period;
}

enum class TailClass { Admissible, AllZero, AllMax };

// Canonical form: minimal period, then absorb matching trailing preperiod
// digits into the cycle (0.24(94) == 0.2(49)).
TailClass canonicalize(int base, std::vector<int>& preperiod, std::vector<int>& period) {
  if (base < 2) throw std::domain_error("digit base must be >= 2");
  if (period.empty()) throw std::domain_error("period must be nonempty");
  for (int d : preperiod)
    if (d < 0 || d >= base) throw std::domain_error("preperiod digit outside base");
  for (int d : period)
    if (d < 0 || d >= base) throw std::domain_error("period digit outside base");

  period = minimal_cycle(std::move(period));
  while (!preperiod.empty() && preperiod.back() == period.back()) {
    preperiod.pop_back();
    std::rotate(period.begin(), period.end() - 1, period.end());
  }
  if (period.size() == 1 && period[0] == 0) return TailClass::AllZero;
  if (period.size() == 1 && period[0] == base - 1) return TailClass::AllMax;
  return TailClass::Admissible;
}

}  // namespace

NullSetPoint::NullSetPoint(BigInt numerator_, int power_)
    : std::domain_error("point " + numerator_.str() + "/M^" + std::to_string(power_) +
                        " lies in the removed null set"),
      numerator(std::move(numerator_)),
      power(power_) {}

DigitReal::DigitReal(Canonical, int base, std::vector<int> preperiod,
                     std::vector<int> period)
    : base_(base), preperiod_(std::move(preperiod)), period_(std::move(period)) {}

DigitReal::DigitReal(int base, std::vector<int> preperiod, std::vector<int> period) {
  switch (canonicalize(base, preperiod, period)) {
    case TailClass::AllZero:
      throw std::domain_error("digit stream terminates (eventually all 0)");
    case TailClass::AllMax:
      throw std::domain_error("digit stream is eventually all " + std::to_string(base - 1));
    case TailClass::Admissible:
      break;
  }
  base_ = base;
  preperiod_ = std::move(preperiod);
  period_ = std::move(period);
}

std::optional<DigitReal> DigitReal::try_make(int base, std::vector<int> preperiod,
                                             std::vector<int> period) {
  if (canonicalize(base, preperiod, period) != TailClass::Admissible) return std::nullopt;
  return DigitReal(Canonical{}, base, std::move(preperiod), std::move(period));
}

int DigitReal::digit_at(std::size_t i) const {
  if (i < preperiod_.size()) return preperiod_[i];
  return period_[(i - preperiod_.size()) % period_.size()];
}

BigRational DigitReal::value() const {
  BigInt pre_value = 0;
  for (int d : preperiod_) pre_value = pre_value * base_ + d;
  BigInt cycle_value = 0;
  for (int d : period_) cycle_value = cycle_value * base_ + d;
  BigInt base_pow_pre = 1;
  for (std::size_t i = 0; i < preperiod_.size(); ++i) base_pow_pre *= base_;
  BigInt base_pow_cycle = 1;
  for (std::size_t i = 0; i < period_.size(); ++i) base_pow_cycle *= base_;
  // 0.P(C) = (P*(M^L - 1) + C) / (M^E * (M^L - 1))
  return BigRational(pre_value * (base_pow_cycle - 1) + cycle_value,
                     base_pow_pre * (base_pow_cycle - 1));
}

std::string DigitReal::to_string() const {
  std::ostringstream out;
  out << "0.";
  const char* sep = base_ <= 10 ? "" : ",";
  for (std::size_t i = 0; i < preperiod_.size(); ++i) {
    if (i) out << sep;
    out << preperiod_[i];
  }
  out << '(';
  for (std::size_t i = 0; i < period_.size(); ++i) {
    if (i) out << sep;
    out << period_[i];
  }
  out << ')';
  return out.str();
}

DigitReal phi(const BigRational& x, int base) {
  if (base < 2) throw std::domain_error("digit base must be >= 2");
  if (x < BigRational(0) || x >= BigRational(1))
    throw std::domain_error("phi expects a rational in [0,1)");
  const BigInt& a = x.numerator();
  const BigInt& b = x.denominator();

  // Terminating expansion <=> the denominator divides some M^k.
  BigInt c = b;
  for (BigInt g = big_gcd(c, base); g > 1; g = big_gcd(c, base)) c /= g;
  if (c == 1) {
    BigInt pow = 1;
    int k = 0;
    do {
      pow *= base;
      ++k;
    } while (pow % b != 0);
    throw NullSetPoint(a * (pow / b), k);
  }

  std::vector<int> digits;
  std::map<BigInt, int> first_seen;
  BigInt r = a;
  while (true) {
    auto [it, fresh] = first_seen.emplace(r, static_cast<int>(digits.size()));
    if (!fresh) {
      const int start = it->second;
      std::vector<int> preperiod(digits.begin(), digits.begin() + start);
      std::vector<int> period(digits.begin() + start, digits.end());
      return DigitReal(base, std::move(preperiod), std::move(period));
    }
    r *= base;
    digits.push_back(static_cast<int>(r / b));
    r %= b;
  }
}

BigRational phi_inv(const DigitReal& d) { return d.value(); }

DigitReal T_map(const DigitReal& d) {
  if (!d.preperiod().empty()) {
    std::vector<int> pre(d.preperiod().begin() + 1, d.preperiod().end());
    return DigitReal(d.base(), std::move(pre), d.period());
  }
  std::vector<int> cycle = d.period();
  std::rotate(cycle.begin(), cycle.begin() + 1, cycle.end());
  return DigitReal(d.base(), {}, std::move(cycle));
}

std::optional<DigitReal> bullet(const DigitReal& x, const DigitReal& y,
                                const FiniteQuasigroup& base_op) {
  if (x.base() != y.base()) throw std::domain_error("operands use different bases");
  if (base_op.order() != x.base())
    throw std::domain_error("base op order does not match the digit base");
  const std::size_t pre_len = std::max(x.preperiod().size(), y.preperiod().size());
  const std::size_t cycle_len = std::lcm(x.period().size(), y.period().size());
  std::vector<int> preperiod(pre_len), period(cycle_len);
  for (std::size_t i = 0; i < pre_len; ++i)
    preperiod[i] = base_op.mul(x.digit_at(i), y.digit_at(i));
  for (std::size_t i = 0; i < cycle_len; ++i)
    period[i] = base_op.mul(x.digit_at(pre_len + i), y.digit_at(pre_len + i));
  return DigitReal::try_make(x.base(), std::move(preperiod), std::move(period));
}

BigRational parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return BigRational(BigInt(text));
    BigInt num(text.substr(0, slash));
    BigInt den(text.substr(slash + 1));
    if (den == 0) throw std::domain_error("zero denominator in '" + text + "'");
    return BigRational(num, den);
  } catch (const std::runtime_error&) {
    throw std::domain_error("cannot parse rational '" + text + "'");
  }
}

std::string rational_to_string(const BigRational& x) {
  if (x.denominator() == 1) return x.numerator().str();
  return x.numerator().str() + "/" + x.denominator().str();
}

}  // namespace quasishift
