#include "quasishift/periodic_point.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

#include "quasishift/errors.hpp"

namespace quasishift {

namespace {

// Smallest divisor d of digits.size() with digits[i] == digits[i mod d].
std::vector<int> minimal_period(std::vector<int> digits) {
  const int p = static_cast<int>(digits.size());
  for (int d = 1; d < p; ++d) {
    if (p % d != 0) continue;
    bool repeats = true;
    for (int i = d; i < p && repeats; ++i) repeats = digits[i] == digits[i % d];
    if (repeats) {
      digits.resize(d);
      return digits;
    }
  }
  return digits;
}

}  // namespace

PeriodicPoint::PeriodicPoint(int alphabet_size, std::vector<int> digits)
    : alphabet_size_(alphabet_size) {
  if (alphabet_size_ < 1)
    throw std::domain_error("alphabet size must be positive");
  if (digits.empty()) throw std::domain_error("periodic point needs at least one digit");
  for (int d : digits)
    if (d < 0 || d >= alphabet_size_)
      throw std::domain_error("digit " + std::to_string(d) + " outside alphabet 0.." +
                              std::to_string(alphabet_size_ - 1));
  digits_ = minimal_period(std::move(digits));
}

PeriodicPoint PeriodicPoint::constant(int alphabet_size, int symbol) {
  return PeriodicPoint(alphabet_size, {symbol});
}

int PeriodicPoint::digit_at(std::int64_t i) const {
  const int p = period();
  return digits_[static_cast<std::size_t>(((i % p) + p) % p)];
}

std::string PeriodicPoint::to_string() const {
  std::ostringstream out;
  const bool compact = alphabet_size_ <= 10;
  for (std::size_t i = 0; i < digits_.size(); ++i) {
    if (!compact && i) out << ',';
    out << digits_[i];
  }
  return out.str();
}

PeriodicPoint shift(const PeriodicPoint& x) { return shift_by(x, 1); }

PeriodicPoint shift_by(const PeriodicPoint& x, std::int64_t n) {
  const int p = x.period();
  std::vector<int> rotated(p);
  for (int i = 0; i < p; ++i) rotated[i] = x.digit_at(n + i);
  return PeriodicPoint(x.alphabet_size(), std::move(rotated));
}

PeriodicPoint digitwise(const FiniteQuasigroup& op, const PeriodicPoint& a,
                        const PeriodicPoint& b) {
  if (a.alphabet_size() != b.alphabet_size() || a.alphabet_size() != op.order())
    throw std::domain_error("alphabet mismatch in digitwise product");
  const int len = std::lcm(a.period(), b.period());
  std::vector<int> out(len);
  for (int i = 0; i < len; ++i)
    out[i] = op.mul(a.digits()[i % a.period()], b.digits()[i % b.period()]);
  return PeriodicPoint(a.alphabet_size(), std::move(out));
}

std::vector<PeriodicPoint> points_with_period_dividing(int alphabet_size, int P) {
  if (P < 1) throw std::domain_error("period bound must be >= 1");
  double size = 1;
  for (int i = 0; i < P; ++i) size *= alphabet_size;
  if (size > 1e7)
    throw ResourceLimitError("period-" + std::to_string(P) + " point set too large");
  std::vector<PeriodicPoint> points;
  points.reserve(static_cast<std::size_t>(size));
  std::vector<int> digits(P, 0);
  while (true) {
    points.emplace_back(alphabet_size, digits);
    int i = P - 1;
    while (i >= 0 && ++digits[i] == alphabet_size) digits[i--] = 0;
    if (i < 0) break;
  }
  return points;
}

}  // namespace quasishift
