#include "quasishift/rotor_system.hpp"

#include <cmath>
#include <stdexcept>

#include "quasishift/errors.hpp"
#include "quasishift/rng.hpp"

namespace quasishift {

namespace {

FiniteQuasigroup default_base_op(int alphabet_size) {
  if (alphabet_size < 1) throw std::domain_error("alphabet size must be positive");
  if (alphabet_size % 2 == 1) return build_translation_quasigroup(alphabet_size);
  if (alphabet_size == 2) return build_cyclic_addition(2);
  return build_idempotent_quasigroup(alphabet_size);
}

}  // namespace

RotorShiftSystem::RotorShiftSystem(int alphabet_size, int rotor_size)
    : RotorShiftSystem(default_base_op(alphabet_size), rotor_size) {}

RotorShiftSystem::RotorShiftSystem(FiniteQuasigroup base_op, int rotor_size)
    : base_op_(std::move(base_op)), rotor_size_(rotor_size) {
  if (rotor_size_ < 1 || rotor_size_ % 2 == 0)
    throw std::domain_error("rotor size must be odd, got " + std::to_string(rotor_size_));
}

void RotorShiftSystem::require_valid(const RotorPoint& u) const {
  if (u.seq.alphabet_size() != alphabet_size())
    throw std::domain_error("sequence alphabet does not match system alphabet");
  if (u.rotor < 0 || u.rotor >= rotor_size_)
    throw std::domain_error("rotor value outside 0.." + std::to_string(rotor_size_ - 1));
}

RotorPoint RotorShiftSystem::system_map(const RotorPoint& u) const {
  require_valid(u);
  return {shift(u.seq), (u.rotor + 1) % rotor_size_};
}

RotorPoint RotorShiftSystem::op_canonical(const RotorPoint& u, const RotorPoint& v) const {
  require_valid(u);
  require_valid(v);
  return {digitwise(base_op_, u.seq, v.seq),
          rotor_lambda() * (u.rotor + v.rotor) % rotor_size_};
}

double RotorShiftSystem::entropy() const { return std::log(alphabet_size()); }

int RotorShiftSystem::ergodic_period() const { return rotor_size_; }

AutomorphismCheckReport check_automorphism_random(const RotorShiftSystem& sys,
                                                  int trials, std::uint64_t seed,
                                                  int max_period) {
  if (trials < 1) throw std::domain_error("trials must be >= 1");
  if (max_period < 1) throw std::domain_error("max_period must be >= 1");
  AutomorphismCheckReport report;
  report.seed = seed;
  report.trials = trials;
  report.max_period = max_period;
  Rng rng(seed);
  for (int t = 0; t < trials; ++t) {
    RotorPoint u{random_point(rng, sys.alphabet_size(), max_period),
                 rng.below(sys.rotor_size())};
    RotorPoint v{random_point(rng, sys.alphabet_size(), max_period),
                 rng.below(sys.rotor_size())};
    const RotorPoint lhs = sys.system_map(sys.op_canonical(u, v));
    const RotorPoint rhs = sys.op_canonical(sys.system_map(u), sys.system_map(v));
    if (lhs != rhs) {
      ++report.failures;
      if (!report.counterexample) report.counterexample = {u, v};
    }
  }
  return report;
}

}  // namespace quasishift
