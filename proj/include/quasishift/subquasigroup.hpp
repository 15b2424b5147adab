#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <utility>
#include <vector>

#include "quasishift/product_shift.hpp"
#include "quasishift/quasigroup.hpp"

namespace quasishift {

// Least mul-closed superset of the generators; in a finite quasigroup a
// mul-closed subset is automatically closed under both divisions.
struct Subquasigroup {
  std::vector<int> elements;    // sorted
  std::vector<int> generators;  // sorted, subset of elements
  // One witnessing product per non-generator element.
  std::map<int, std::pair<int, int>> derivations;

  bool contains(int s) const;

  // Re-checks closure under mul and that every element is generator-reachable.
  bool verify(const FiniteQuasigroup& q) const;
};

Subquasigroup generated_closure(const FiniteQuasigroup& q, std::vector<int> generators);

inline constexpr std::uint64_t kDefaultSliceCap = std::uint64_t{1} << 20;

// The closure of all shifts of the section, intersected with the points of
// period dividing P, computed by worklist closure inside that finite slice.
std::set<ProductPoint> orbit_closure_slice(const ProductShift& Y, const Section& sec,
                                           int P, std::uint64_t cap = kDefaultSliceCap);

// Membership of x (period dividing P required) in the slice closure.
bool orbit_closure_membership(const ProductShift& Y, const Section& sec, int P,
                              const ProductPoint& x, std::uint64_t cap = kDefaultSliceCap);

}  // namespace quasishift
