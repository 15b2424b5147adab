#pragma once

#include <vector>

#include "quasishift/periodic_point.hpp"
#include "quasishift/quasigroup.hpp"

namespace quasishift {

// Y = Y_1 × ... × Y_q, each factor a full shift over p_k symbols carrying an
// idempotent quasigroup op; the product op acts componentwise and digitwise.
class ProductShift {
 public:
  // Theorem-level constructor: rejects factor sizes 2 and 6, installs the
  // default idempotent quasigroup on each factor.
  static ProductShift from_factors(const std::vector<int>& alphabet_sizes);

  // Direct constructor: explicit factors, each must be Latin and idempotent
  // (sizes 2 and 6 are not gated here).
  explicit ProductShift(std::vector<FiniteQuasigroup> factor_ops);

  int arity() const { return static_cast<int>(factor_ops_.size()); }
  int alphabet_size(int k) const { return factor_ops_.at(k).order(); }
  const FiniteQuasigroup& factor_op(int k) const { return factor_ops_.at(k); }

 private:
  std::vector<FiniteQuasigroup> factor_ops_;
};

struct ProductPoint {
  std::vector<PeriodicPoint> components;

  bool operator==(const ProductPoint&) const = default;
  auto operator<=>(const ProductPoint&) const = default;
};

void require_valid(const ProductShift& Y, const ProductPoint& x);

// Component k combined digitwise under the k-th factor op.
ProductPoint componentwise_mul(const ProductShift& Y, const ProductPoint& u,
                               const ProductPoint& v);

// Componentwise shift (the product system's sigma).
ProductPoint shift(const ProductPoint& x);

// S_k: every coordinate j != k frozen at a base point z_{k,j}; coordinate k free.
class Section {
 public:
  // bases are listed by increasing coordinate, skipping coordinate k.
  Section(const ProductShift& Y, int k, std::vector<PeriodicPoint> bases);

  int coordinate() const { return k_; }
  int arity() const { return arity_; }
  const PeriodicPoint& frozen(int j) const;  // j != k

  // Embeds a free coordinate-k point into the product with the frozen base.
  ProductPoint member(const PeriodicPoint& free) const;

  // x agrees with every frozen coordinate.
  bool contains(const ProductPoint& x) const;

  // The section with every base shifted n times (sigma^n of this section).
  Section shifted(int n) const;

 private:
  int k_;
  int arity_;
  std::vector<PeriodicPoint> bases_;  // indexed by coordinate, slot k unused
};

Section make_section(const ProductShift& Y, int k, std::vector<PeriodicPoint> bases);

// One section per coordinate, all bases the constant-0 point.
std::vector<Section> default_sections(const ProductShift& Y);

// Splits x into x_k in S_k with x = x_1*(x_2*(...*(x_{q-1}*x_q))) exactly.
// Sections must cover coordinates 0..q-1 in order.
std::vector<ProductPoint> decompose(const ProductShift& Y, const ProductPoint& x,
                                    const std::vector<Section>& sections);

// Right-nested fold x_1*(x_2*(...)); the decompose round-trip partner.
ProductPoint nested_product(const ProductShift& Y, const std::vector<ProductPoint>& parts);

}  // namespace quasishift
