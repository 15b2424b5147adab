#include "quasishift/quasigroup.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>

#include "quasishift/errors.hpp"

namespace quasishift {

Permutation::Permutation(std::vector<int> image) : image_(std::move(image)) {
  const int n = static_cast<int>(image_.size());
  if (n == 0) throw std::domain_error("permutation must be nonempty");
  std::vector<char> seen(n, 0);
  for (int v : image_) {
    if (v < 0 || v >= n || seen[v])
      throw std::domain_error("image array is not a bijection of 0.." +
                              std::to_string(n - 1));
    seen[v] = 1;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> image(n);
  std::iota(image.begin(), image.end(), 0);
  return Permutation(std::move(image));
}

Permutation Permutation::rotation(int n, int step) {
  if (n < 1) throw std::domain_error("rotation needs n >= 1");
  std::vector<int> image(n);
  for (int x = 0; x < n; ++x) image[x] = ((x + step) % n + n) % n;
  return Permutation(std::move(image));
}

int Permutation::operator()(int x) const {
  if (x < 0 || x >= size())
    throw std::domain_error("symbol " + std::to_string(x) + " outside 0.." +
                            std::to_string(size() - 1));
  return image_[x];
}

bool Permutation::is_cyclic() const {
  int x = 0;
  for (int k = 1; k < size(); ++k) {
    x = image_[x];
    if (x == 0) return false;  // orbit of 0 closed early
  }
  return image_[x] == 0;
}

FiniteQuasigroup::FiniteQuasigroup(LatinSquare square,
                                   std::optional<Permutation> automorphic_translation)
    : square_(std::move(square)),
      automorphic_translation_(std::move(automorphic_translation)) {
  const int n = square_.order();
  if (automorphic_translation_ && automorphic_translation_->size() != n)
    throw std::domain_error("translation order does not match square order");
  left_div_.assign(static_cast<std::size_t>(n) * n, 0);
  right_div_.assign(static_cast<std::size_t>(n) * n, 0);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      const int z = square_.at(x, y);
      left_div_[static_cast<std::size_t>(x) * n + z] = y;
      right_div_[static_cast<std::size_t>(z) * n + y] = x;
    }
  idempotent_ = square_.has_identity_diagonal();
}

int FiniteQuasigroup::mul(int x, int y) const { return square_.at(x, y); }

int FiniteQuasigroup::left_div(int x, int z) const {
  const int n = order();
  if (x < 0 || x >= n || z < 0 || z >= n)
    throw std::domain_error("left_div arguments outside 0.." + std::to_string(n - 1));
  return left_div_[static_cast<std::size_t>(x) * n + z];
}

int FiniteQuasigroup::right_div(int z, int y) const {
  const int n = order();
  if (z < 0 || z >= n || y < 0 || y >= n)
    throw std::domain_error("right_div arguments outside 0.." + std::to_string(n - 1));
  return right_div_[static_cast<std::size_t>(z) * n + y];
}

FiniteQuasigroup build_translation_quasigroup(int n) {
  if (n < 1 || n > kMaxOrder)
    throw std::domain_error("order must be in [1, " + std::to_string(kMaxOrder) + "]");
  if (n % 2 == 0) throw EvenOrderUnsupported(n);
  const int lambda = (n + 1) / 2;
  std::vector<int> cells(static_cast<std::size_t>(n) * n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      cells[static_cast<std::size_t>(x) * n + y] = lambda * (x + y) % n;
  return FiniteQuasigroup(LatinSquare(n, std::move(cells)), Permutation::rotation(n));
}

namespace {

// Fills cells (diagonal preset to x) in row-major order, smallest symbol
// first; rows/columns tracked as bitmasks. Returns false when exhausted.
bool fill_diagonal_fixed(int n, std::vector<int>& cells, std::vector<std::uint64_t>& row_used,
                         std::vector<std::uint64_t>& col_used, int pos) {
  const int total = n * n;
  while (pos < total && cells[pos] >= 0) ++pos;  // skip preset diagonal
  if (pos >= total) return true;
  const int x = pos / n, y = pos % n;
  for (int v = 0; v < n; ++v) {
    const std::uint64_t bit = std::uint64_t{1} << v;
    if ((row_used[x] & bit) || (col_used[y] & bit)) continue;
    cells[pos] = v;
    row_used[x] |= bit;
    col_used[y] |= bit;
    if (fill_diagonal_fixed(n, cells, row_used, col_used, pos + 1)) return true;
    cells[pos] = -1;
    row_used[x] &= ~bit;
    col_used[y] &= ~bit;
  }
  return false;
}

}  // namespace

FiniteQuasigroup build_idempotent_quasigroup(int n) {
  if (n < 1 || n > kMaxOrder)
    throw std::domain_error("order must be in [1, " + std::to_string(kMaxOrder) + "]");
  if (n == 2) throw NoIdempotentSquare(2);
  if (n % 2 == 1) return build_translation_quasigroup(n);

  std::vector<int> cells(static_cast<std::size_t>(n) * n, -1);
  std::vector<std::uint64_t> row_used(n, 0), col_used(n, 0);
  for (int x = 0; x < n; ++x) {
    cells[static_cast<std::size_t>(x) * n + x] = x;
    row_used[x] |= std::uint64_t{1} << x;
    col_used[x] |= std::uint64_t{1} << x;
  }
  if (!fill_diagonal_fixed(n, cells, row_used, col_used, 0))
    throw NoIdempotentSquare(n);  // unreachable for n != 2
  return FiniteQuasigroup(LatinSquare(n, std::move(cells)));
}

FiniteQuasigroup build_cyclic_addition(int n) {
  if (n < 1 || n > kMaxOrder)
    throw std::domain_error("order must be in [1, " + std::to_string(kMaxOrder) + "]");
  std::vector<int> cells(static_cast<std::size_t>(n) * n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) cells[static_cast<std::size_t>(x) * n + y] = (x + y) % n;
  return FiniteQuasigroup(LatinSquare(n, std::move(cells)));
}

bool is_automorphism(const FiniteQuasigroup& q, const Permutation& f) {
  if (f.size() != q.order())
    throw std::domain_error("permutation order does not match quasigroup order");
  for (int x = 0; x < q.order(); ++x)
    for (int y = 0; y < q.order(); ++y)
      if (q.mul(f(x), f(y)) != f(q.mul(x, y))) return false;
  return true;
}

}  // namespace quasishift
