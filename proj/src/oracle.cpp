#include "quasishift/oracle.hpp"

#include <algorithm>
#include <functional>
#include <future>
#include <numeric>
#include <stdexcept>

#include "quasishift/errors.hpp"

namespace quasishift::oracle {

namespace {

bool latin_by_masks(int n, const std::vector<int>& table) {
  std::vector<std::uint64_t> rows(n, 0), cols(n, 0);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      const std::uint64_t bit = std::uint64_t{1} << table[static_cast<std::size_t>(x) * n + y];
      if (rows[x] & bit) return false;
      if (cols[y] & bit) return false;
      rows[x] |= bit;
      cols[y] |= bit;
    }
  return true;
}

}  // namespace

AVector::AVector(int order, std::vector<int> e) : order(order), entries(std::move(e)) {
  if (order < 1 || order > kMaxOrder)
    throw std::domain_error("a-vector order must be in [1, " + std::to_string(kMaxOrder) + "]");
  if (static_cast<int>(entries.size()) != order)
    throw std::domain_error("a-vector needs exactly " + std::to_string(order) + " entries");
  for (int v : entries)
    if (v < 0 || v >= order)
      throw std::domain_error("a-vector entry outside 0.." + std::to_string(order - 1));
}

bool AVector::entries_distinct() const {
  std::uint64_t seen = 0;
  for (int v : entries) {
    const std::uint64_t bit = std::uint64_t{1} << v;
    if (seen & bit) return false;
    seen |= bit;
  }
  return true;
}

std::vector<int> table_from_avector(const AVector& a) {
  const int n = a.order;
  std::vector<int> table(static_cast<std::size_t>(n) * n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      table[static_cast<std::size_t>(x) * n + y] = (a.entries[(y + n - x) % n] + x) % n;
  return table;
}

AVector avector_from_table(int order, const std::vector<int>& table) {
  if (static_cast<int>(table.size()) != order * order)
    throw std::domain_error("table size does not match order");
  std::vector<int> row0(table.begin(), table.begin() + order);
  return AVector(order, std::move(row0));
}

namespace {

struct PartitionResult {
  std::uint64_t candidates = 0;
  std::uint64_t latin = 0;
  std::vector<LatinSquare> squares;
};

// Depth-first over distinct-entry a-vectors with a fixed leading entry.
void enumerate_partition(int n, std::vector<int>& entries, std::uint64_t used, int pos,
                         bool collect, PartitionResult& out) {
  if (pos == n) {
    ++out.candidates;
    AVector a(n, entries);
    std::vector<int> table = table_from_avector(a);
    if (latin_by_masks(n, table)) {
      ++out.latin;
      if (collect) out.squares.emplace_back(n, std::move(table));
    }
    return;
  }
  for (int v = 0; v < n; ++v) {
    const std::uint64_t bit = std::uint64_t{1} << v;
    if (used & bit) continue;
    entries[pos] = v;
    enumerate_partition(n, entries, used | bit, pos + 1, collect, out);
  }
}

}  // namespace

EnumerationResult enumerate_automorphic(int n, bool collect) {
  if (n < 1) throw std::domain_error("order must be positive");
  if (n > 8)
    throw ResourceLimitError("enumerate_automorphic supports n <= 8, got " +
                             std::to_string(n));
  std::vector<std::future<PartitionResult>> parts;
  parts.reserve(n);
  for (int lead = 0; lead < n; ++lead) {
    parts.push_back(std::async(std::launch::async, [n, lead, collect] {
      PartitionResult out;
      std::vector<int> entries(n);
      entries[0] = lead;
      enumerate_partition(n, entries, std::uint64_t{1} << lead, 1, collect, out);
      return out;
    }));
  }
  EnumerationResult result;
  result.order = n;
  for (auto& f : parts) {
    PartitionResult part = f.get();
    result.candidates_checked += part.candidates;
    result.latin_count += part.latin;
    for (auto& sq : part.squares) result.squares.push_back(std::move(sq));
  }
  return result;
}

SumReport sum_contradiction_report(const AVector& a) {
  const int n = a.order;
  if (n % 2 != 0) throw std::domain_error("sum contradiction applies to even orders");
  if (!a.entries_distinct())
    throw std::domain_error("a-vector entries must be pairwise distinct");
  const std::vector<int> table = table_from_avector(a);
  SumReport report;
  report.order = n;
  for (int x = 0; x < n; ++x) {
    int sum = 0;
    for (int y = 0; y < n; ++y) sum = (sum + table[static_cast<std::size_t>(x) * n + y]) % n;
    if (x == 0)
      report.row_sum = sum;
    else if (sum != report.row_sum)
      throw std::logic_error("row sums are not constant");
  }
  for (int y = 0; y < n; ++y) {
    int sum = 0;
    for (int x = 0; x < n; ++x) sum = (sum + table[static_cast<std::size_t>(x) * n + y]) % n;
    if (y == 0)
      report.col_sum = sum;
    else if (sum != report.col_sum)
      throw std::logic_error("column sums are not constant");
  }
  return report;
}

namespace {

void count_cells(int n, int pos, std::vector<std::uint64_t>& rows,
                 std::vector<std::uint64_t>& cols, std::uint64_t& count) {
  if (pos == n * n) {
    ++count;
    return;
  }
  const int x = pos / n, y = pos % n;
  std::uint64_t free = ~(rows[x] | cols[y]) & ((std::uint64_t{1} << n) - 1);
  while (free) {
    const std::uint64_t bit = free & (~free + 1);
    free ^= bit;
    rows[x] |= bit;
    cols[y] |= bit;
    count_cells(n, pos + 1, rows, cols, count);
    rows[x] ^= bit;
    cols[y] ^= bit;
  }
}

void count_rows(int n, int row, std::vector<std::uint64_t>& cols,
                std::vector<int>& perm, std::uint64_t& count) {
  if (row == n) {
    ++count;
    return;
  }
  // Build one full row as a permutation avoiding earlier column entries.
  std::function<void(int, std::uint64_t)> place = [&](int y, std::uint64_t used) {
    if (y == n) {
      for (int j = 0; j < n; ++j) cols[j] |= std::uint64_t{1} << perm[j];
      count_rows(n, row + 1, cols, perm, count);
      for (int j = 0; j < n; ++j) cols[j] &= ~(std::uint64_t{1} << perm[j]);
      return;
    }
    for (int v = 0; v < n; ++v) {
      const std::uint64_t bit = std::uint64_t{1} << v;
      if ((used & bit) || (cols[y] & bit)) continue;
      perm[y] = v;
      place(y + 1, used | bit);
    }
  };
  place(0, 0);
}

}  // namespace

std::uint64_t count_latin_squares(int n) {
  if (n < 1) throw std::domain_error("order must be positive");
  if (n > 5)
    throw ResourceLimitError("count_latin_squares supports n <= 5, got " +
                             std::to_string(n));
  std::vector<std::uint64_t> rows(n, 0), cols(n, 0);
  std::uint64_t count = 0;
  count_cells(n, 0, rows, cols, count);
  return count;
}

std::uint64_t count_latin_squares_by_rows(int n) {
  if (n < 1) throw std::domain_error("order must be positive");
  if (n > 5)
    throw ResourceLimitError("count_latin_squares_by_rows supports n <= 5, got " +
                             std::to_string(n));
  std::vector<std::uint64_t> cols(n, 0);
  std::vector<int> perm(n, 0);
  std::uint64_t count = 0;
  count_rows(n, 0, cols, perm, count);
  return count;
}

namespace {

bool search_diagonal_fixed(int n, int pos, std::vector<int>& cells,
                           std::vector<std::uint64_t>& rows, std::vector<std::uint64_t>& cols,
                           std::uint64_t& nodes) {
  const int total = n * n;
  while (pos < total && cells[pos] >= 0) ++pos;
  if (pos >= total) return true;
  ++nodes;
  const int x = pos / n, y = pos % n;
  for (int v = 0; v < n; ++v) {
    const std::uint64_t bit = std::uint64_t{1} << v;
    if ((rows[x] & bit) || (cols[y] & bit)) continue;
    cells[pos] = v;
    rows[x] |= bit;
    cols[y] |= bit;
    if (search_diagonal_fixed(n, pos + 1, cells, rows, cols, nodes)) return true;
    cells[pos] = -1;
    rows[x] ^= bit;
    cols[y] ^= bit;
  }
  return false;
}

}  // namespace

IdempotentSearchResult search_idempotent(int n) {
  if (n < 1) throw std::domain_error("order must be positive");
  if (n > 12)
    throw ResourceLimitError("search_idempotent supports n <= 12, got " +
                             std::to_string(n));
  std::vector<int> cells(static_cast<std::size_t>(n) * n, -1);
  std::vector<std::uint64_t> rows(n, 0), cols(n, 0);
  for (int x = 0; x < n; ++x) {
    cells[static_cast<std::size_t>(x) * n + x] = x;
    rows[x] |= std::uint64_t{1} << x;
    cols[x] |= std::uint64_t{1} << x;
  }
  std::uint64_t nodes = 0;
  if (search_diagonal_fixed(n, 0, cells, rows, cols, nodes))
    return LatinSquare(n, std::move(cells));
  return NonexistenceCertificate{n, nodes};
}

}  // namespace quasishift::oracle
