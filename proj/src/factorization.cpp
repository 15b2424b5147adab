#include "quasishift/factorization.hpp"

#include <algorithm>
#include <stdexcept>

namespace quasishift {

namespace {

void extend(int remaining, int min_factor, std::vector<int>& current,
            std::vector<std::vector<int>>& out) {
  for (int d = min_factor; d <= remaining; ++d) {
    if (remaining % d != 0 || !admissible_factor(d)) continue;
    current.push_back(d);
    if (d == remaining)
      out.push_back(current);
    else
      extend(remaining / d, d, current, out);
    current.pop_back();
  }
}

}  // namespace

std::vector<std::vector<int>> admissible_factorization(int N, bool require_nontrivial) {
  if (N < 2) throw std::domain_error("factorization needs N >= 2");
  std::vector<std::vector<int>> out;
  std::vector<int> current;
  extend(N, 2, current, out);
  if (require_nontrivial)
    std::erase_if(out, [](const std::vector<int>& f) { return f.size() < 2; });
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace quasishift
