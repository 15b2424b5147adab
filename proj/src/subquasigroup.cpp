#include "quasishift/subquasigroup.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "quasishift/errors.hpp"

namespace quasishift {

bool Subquasigroup::contains(int s) const {
  return std::binary_search(elements.begin(), elements.end(), s);
}

bool Subquasigroup::verify(const FiniteQuasigroup& q) const {
  for (int a : elements)
    for (int b : elements)
      if (!contains(q.mul(a, b))) return false;
  for (int e : elements) {
    if (std::binary_search(generators.begin(), generators.end(), e)) continue;
    auto it = derivations.find(e);
    if (it == derivations.end()) return false;
    if (!contains(it->second.first) || !contains(it->second.second)) return false;
    if (q.mul(it->second.first, it->second.second) != e) return false;
  }
  return true;
}

Subquasigroup generated_closure(const FiniteQuasigroup& q, std::vector<int> generators) {
  if (generators.empty()) throw std::domain_error("generator set must be nonempty");
  for (int g : generators)
    if (g < 0 || g >= q.order())
      throw std::domain_error("generator " + std::to_string(g) + " outside carrier");

  std::sort(generators.begin(), generators.end());
  generators.erase(std::unique(generators.begin(), generators.end()), generators.end());

  Subquasigroup out;
  out.generators = generators;
  std::vector<char> in_set(q.order(), 0);
  std::vector<int> worklist = generators;
  for (int g : generators) in_set[g] = 1;

  for (std::size_t i = 0; i < worklist.size(); ++i)
    for (std::size_t j = 0; j <= i; ++j)
      for (auto [a, b] : {std::pair{worklist[i], worklist[j]},
                          std::pair{worklist[j], worklist[i]}}) {
        const int c = q.mul(a, b);
        if (!in_set[c]) {
          in_set[c] = 1;
          worklist.push_back(c);
          out.derivations.emplace(c, std::pair{a, b});
        }
      }

  out.elements = std::move(worklist);
  std::sort(out.elements.begin(), out.elements.end());
  return out;
}

namespace {

// lcm of the minimal periods of the frozen coordinates; 1 when q == 1.
int base_orbit_length(const Section& sec) {
  int L = 1;
  for (int j = 0; j < sec.arity(); ++j)
    if (j != sec.coordinate()) L = std::lcm(L, sec.frozen(j).period());
  return L;
}

bool period_divides(const ProductPoint& x, int P) {
  for (const auto& c : x.components)
    if (P % c.period() != 0) return false;
  return true;
}

}  // namespace

std::set<ProductPoint> orbit_closure_slice(const ProductShift& Y, const Section& sec,
                                           int P, std::uint64_t cap) {
  if (P < 1) throw std::domain_error("period bound must be >= 1");
  double slice_size = 1;
  for (int k = 0; k < Y.arity(); ++k)
    for (int i = 0; i < P; ++i) slice_size *= Y.alphabet_size(k);
  if (slice_size > static_cast<double>(cap))
    throw ResourceLimitError("period-" + std::to_string(P) +
                             " slice exceeds the configured cap");

  std::set<ProductPoint> closed;

  // A shifted section meets the slice only if every frozen coordinate has
  // period dividing P (shifting preserves the minimal period).
  for (int j = 0; j < sec.arity(); ++j)
    if (j != sec.coordinate() && P % sec.frozen(j).period() != 0) return closed;

  const int k = sec.coordinate();
  const int L = base_orbit_length(sec);
  std::vector<ProductPoint> worklist;
  for (int n = 0; n < L; ++n) {
    const Section shifted_sec = sec.shifted(n);
    for (const auto& free : points_with_period_dividing(Y.alphabet_size(k), P)) {
      ProductPoint candidate = shifted_sec.member(free);
      if (closed.insert(candidate).second) worklist.push_back(std::move(candidate));
    }
  }

  for (std::size_t i = 0; i < worklist.size(); ++i)
    for (std::size_t j = 0; j <= i; ++j)
      for (const auto& [a, b] : {std::pair{i, j}, std::pair{j, i}}) {
        ProductPoint prod = componentwise_mul(Y, worklist[a], worklist[b]);
        if (!period_divides(prod, P)) continue;  // discard products leaving the slice
        if (closed.insert(prod).second) worklist.push_back(std::move(prod));
      }

  return closed;
}

bool orbit_closure_membership(const ProductShift& Y, const Section& sec, int P,
                              const ProductPoint& x, std::uint64_t cap) {
  require_valid(Y, x);
  if (!period_divides(x, P))
    throw std::domain_error("point period does not divide the slice bound");
  return orbit_closure_slice(Y, sec, P, cap).count(x) > 0;
}

}  // namespace quasishift
