#pragma once

#include <cstdint>
#include <variant>
#include <vector>

#include "quasishift/latin_square.hpp"

namespace quasishift::oracle {

// Row 0 of a translation-automorphic table; the whole table follows from it.
struct AVector {
  int order;
  std::vector<int> entries;  // in {0,...,order-1}, not necessarily distinct

  AVector(int order, std::vector<int> entries);
  bool entries_distinct() const;
};

// table[x][y] = a[(y + n - x) mod n] + x mod n, row-major. Automorphic for
// s(x)=x+1 by construction; not necessarily Latin.
std::vector<int> table_from_avector(const AVector& a);

// Reads the a-vector back off row 0.
AVector avector_from_table(int order, const std::vector<int>& table);

struct EnumerationResult {
  int order = 0;
  std::uint64_t candidates_checked = 0;  // a-vectors surviving the distinctness prune
  std::uint64_t latin_count = 0;
  std::vector<LatinSquare> squares;  // filled only when collect is set
};

// Walks the n^n a-vector space (entries with repeats pruned: a repeated
// entry already repeats inside row 0) and counts the Latin tables.
// Partitions by leading entry and reduces by sum. n <= 8.
EnumerationResult enumerate_automorphic(int n, bool collect = false);

struct SumReport {
  int order = 0;
  int row_sum = 0;  // mod n, constant across rows
  int col_sum = 0;  // mod n, constant across columns
};

// For even n and distinct entries: every row sums to n/2 and every column
// to 0 (mod n), which no Latin square allows. Verifies the constancy.
SumReport sum_contradiction_report(const AVector& a);

// Exact count by deterministic cell-order backtracking. n <= 5.
std::uint64_t count_latin_squares(int n);

// Independent second route: extends row by row through whole permutations
// compatible with the column masks. n <= 5.
std::uint64_t count_latin_squares_by_rows(int n);

struct NonexistenceCertificate {
  int order = 0;
  std::uint64_t nodes_explored = 0;  // exhausted search tree size
};

using IdempotentSearchResult = std::variant<LatinSquare, NonexistenceCertificate>;

// Deterministic backtracking with the diagonal pre-filled. n <= 12.
IdempotentSearchResult search_idempotent(int n);

}  // namespace quasishift::oracle
