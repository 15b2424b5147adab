#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace quasishift {

// Searches are exponential in the order; keep tables at desk scale.
inline constexpr int kMaxOrder = 64;

// Reports the first violated Latin invariant together with where it failed.
struct LatinValidationError : std::domain_error {
  enum class Kind { Shape, Symbol, Row, Column };

  LatinValidationError(Kind kind, int index, const std::string& what)
      : std::domain_error(what), kind(kind), index(index) {}

  Kind kind;
  int index;  // offending row or column (or cell index for Symbol)
};

// n×n operation table over {0,...,n-1}; entry (x,y) is x*y.
// Invariant: every row and every column is a permutation of the symbols.
class LatinSquare {
 public:
  // Validates shape, symbol range and both Latin invariants.
  LatinSquare(int order, std::vector<int> cells);

  int order() const { return order_; }
  int at(int x, int y) const;  // range-checked
  const std::vector<int>& cells() const { return cells_; }

  // x*x == x for every symbol (identity diagonal).
  bool has_identity_diagonal() const;

  // n lines of n space-separated integers.
  std::string to_text() const;
  static LatinSquare parse_text(const std::string& text);

  bool operator==(const LatinSquare&) const = default;

 private:
  int order_;
  std::vector<int> cells_;  // row-major
};

}  // namespace quasishift
