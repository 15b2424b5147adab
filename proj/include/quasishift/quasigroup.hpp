#pragma once

#include <optional>
#include <vector>

#include "quasishift/latin_square.hpp"

namespace quasishift {

class Permutation {
 public:
  explicit Permutation(std::vector<int> image);  // validates bijection

  static Permutation identity(int n);
  static Permutation rotation(int n, int step = 1);  // x -> x+step mod n

  int size() const { return static_cast<int>(image_.size()); }
  int operator()(int x) const;
  const std::vector<int>& image() const { return image_; }

  // A translation: the orbit of any point under iteration is the whole set.
  bool is_cyclic() const;

  bool operator==(const Permutation&) const = default;

 private:
  std::vector<int> image_;
};

// Latin square plus both division tables; immutable after construction.
class FiniteQuasigroup {
 public:
  explicit FiniteQuasigroup(LatinSquare square,
                            std::optional<Permutation> automorphic_translation = {});

  int order() const { return square_.order(); }
  const LatinSquare& square() const { return square_; }

  int mul(int x, int y) const;
  int left_div(int x, int z) const;   // the unique y with x*y == z
  int right_div(int z, int y) const;  // the unique x with x*y == z

  bool is_idempotent() const { return idempotent_; }

  // The cyclic map this quasigroup was built for, if any.
  const std::optional<Permutation>& automorphic_translation() const {
    return automorphic_translation_;
  }

 private:
  LatinSquare square_;
  std::vector<int> left_div_;   // left_div_[x*n+z] = y
  std::vector<int> right_div_;  // right_div_[z*n+y] = x
  bool idempotent_;
  std::optional<Permutation> automorphic_translation_;
};

// x*y = lambda(x+y) mod n with lambda=(n+1)/2; s(x)=x+1 is an automorphism
// and the square is idempotent. Throws EvenOrderUnsupported for even n.
FiniteQuasigroup build_translation_quasigroup(int n);

// Idempotent quasigroup of order n != 2: the translation square for odd n,
// otherwise the first diagonal-fixed Latin square found by deterministic
// backtracking (lexicographic cell order, smallest symbol first).
FiniteQuasigroup build_idempotent_quasigroup(int n);

// (x+y) mod n; Latin for every n >= 1, idempotent only for n == 1.
FiniteQuasigroup build_cyclic_addition(int n);

// f(x)*f(y) == f(x*y) for all pairs.
bool is_automorphism(const FiniteQuasigroup& q, const Permutation& f);

}  // namespace quasishift
