#pragma once

#include <stdexcept>
#include <string>

namespace quasishift {

// Translation-automorphic quasigroups exist only for odd orders; the even
// case is certified impossible by oracle::enumerate_automorphic and
// oracle::sum_contradiction_report.
struct EvenOrderUnsupported : std::domain_error {
  explicit EvenOrderUnsupported(int n)
      : std::domain_error("no quasigroup of even order " + std::to_string(n) +
                          " admits the translation as an automorphism"),
        order(n) {}
  int order;
};

// Order 2 is the single order with no idempotent Latin square.
struct NoIdempotentSquare : std::domain_error {
  explicit NoIdempotentSquare(int n)
      : std::domain_error("no idempotent latin square of order " + std::to_string(n)),
        order(n) {}
  int order;
};

// Raised when an exhaustive search or enumeration exceeds its configured cap.
struct ResourceLimitError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace quasishift
