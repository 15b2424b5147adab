#pragma once

#include <cstdint>
#include <random>

#include "quasishift/periodic_point.hpp"

namespace quasishift {

// mt19937_64 has a standard-mandated output stream, so seeded runs reproduce
// across platforms. std::uniform_int_distribution does not make that promise;
// bounded draws use rejection sampling instead.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t next() { return gen_(); }

  // Uniform in [0, bound), bound >= 1.
  int below(int bound) {
    const std::uint64_t b = static_cast<std::uint64_t>(bound);
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % b;
    std::uint64_t v;
    do {
      v = gen_();
    } while (v >= limit);
    return static_cast<int>(v % b);
  }

 private:
  std::mt19937_64 gen_;
};

// Uniform digits, period length uniform in [1, max_period]; the canonical
// form may shorten the drawn length.
inline PeriodicPoint random_point(Rng& rng, int alphabet_size, int max_period) {
  const int len = 1 + rng.below(max_period);
  std::vector<int> digits(len);
  for (int& d : digits) d = rng.below(alphabet_size);
  return PeriodicPoint(alphabet_size, std::move(digits));
}

}  // namespace quasishift
