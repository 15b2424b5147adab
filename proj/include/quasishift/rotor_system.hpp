#pragma once

#include <cstdint>
#include <optional>
#include <utility>

#include "quasishift/periodic_point.hpp"
#include "quasishift/quasigroup.hpp"

namespace quasishift {

class RotorShiftSystem;

struct RotorPoint {
  PeriodicPoint seq;
  int rotor;

  bool operator==(const RotorPoint&) const = default;
  auto operator<=>(const RotorPoint&) const = default;
};

// The product system Y = {0..N-1}^Z × Z_B with S = shift × (+1 mod B).
// B must be odd so the rotor factor carries lambda = (B+1)/2.
class RotorShiftSystem {
 public:
  // Default base op: translation quasigroup for odd N, idempotent search
  // result for even N >= 4, cyclic addition for N = 2.
  RotorShiftSystem(int alphabet_size, int rotor_size);
  RotorShiftSystem(FiniteQuasigroup base_op, int rotor_size);

  int alphabet_size() const { return base_op_.order(); }
  int rotor_size() const { return rotor_size_; }
  int rotor_lambda() const { return (rotor_size_ + 1) / 2; }
  const FiniteQuasigroup& base_op() const { return base_op_; }

  void require_valid(const RotorPoint& u) const;

  // S(u): (shift(seq), rotor+1 mod B).
  RotorPoint system_map(const RotorPoint& u) const;

  // Product of Eq-style form: digitwise base op on sequences at the lcm of
  // the periods, lambda(a+b) mod B on rotors.
  RotorPoint op_canonical(const RotorPoint& u, const RotorPoint& v) const;

  double entropy() const;      // log N; the rotor contributes nothing
  int ergodic_period() const;  // B

 private:
  FiniteQuasigroup base_op_;
  int rotor_size_;
};

struct AutomorphismCheckReport {
  std::uint64_t seed = 0;
  int trials = 0;
  int max_period = 0;
  int failures = 0;
  std::optional<std::pair<RotorPoint, RotorPoint>> counterexample;
};

// Samples pairs of uniform random rotor points and checks
// S(u*v) == S(u)*S(v) exactly. Failures are data, not exceptions.
AutomorphismCheckReport check_automorphism_random(const RotorShiftSystem& sys,
                                                  int trials, std::uint64_t seed,
                                                  int max_period = 8);

}  // namespace quasishift
