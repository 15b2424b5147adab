#include "quasishift/latin_square.hpp"

#include <sstream>
#include <stdexcept>

#include "quasishift/errors.hpp"

namespace quasishift {

namespace {

void check_latin(int order, const std::vector<int>& cells) {
  if (order < 1 || order > kMaxOrder)
    throw LatinValidationError(LatinValidationError::Kind::Shape, order,
                               "latin square order must be in [1, " +
                                   std::to_string(kMaxOrder) + "], got " +
                                   std::to_string(order));
  if (cells.size() != static_cast<std::size_t>(order) * order)
    throw LatinValidationError(LatinValidationError::Kind::Shape, order,
                               "latin square of order " + std::to_string(order) +
                                   " needs " + std::to_string(order * order) +
                                   " cells, got " + std::to_string(cells.size()));
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (cells[i] < 0 || cells[i] >= order)
      throw LatinValidationError(LatinValidationError::Kind::Symbol, static_cast<int>(i),
                                 "cell " + std::to_string(i) + " holds symbol " +
                                     std::to_string(cells[i]) + ", outside 0.." +
                                     std::to_string(order - 1));
  }
  std::vector<char> seen(order);
  for (int x = 0; x < order; ++x) {
    std::fill(seen.begin(), seen.end(), 0);
    for (int y = 0; y < order; ++y) {
      int v = cells[static_cast<std::size_t>(x) * order + y];
      if (seen[v])
        throw LatinValidationError(LatinValidationError::Kind::Row, x,
                                   "row " + std::to_string(x) +
                                       " repeats symbol " + std::to_string(v));
      seen[v] = 1;
    }
  }
  for (int y = 0; y < order; ++y) {
    std::fill(seen.begin(), seen.end(), 0);
    for (int x = 0; x < order; ++x) {
      int v = cells[static_cast<std::size_t>(x) * order + y];
      if (seen[v])
        throw LatinValidationError(LatinValidationError::Kind::Column, y,
                                   "column " + std::to_string(y) +
                                       " repeats symbol " + std::to_string(v));
      seen[v] = 1;
    }
  }
}

}  // namespace

LatinSquare::LatinSquare(int order, std::vector<int> cells)
    : order_(order), cells_(std::move(cells)) {
  check_latin(order_, cells_);
}

int LatinSquare::at(int x, int y) const {
  if (x < 0 || x >= order_ || y < 0 || y >= order_)
    throw std::domain_error("symbol pair (" + std::to_string(x) + ", " +
                            std::to_string(y) + ") outside 0.." +
                            std::to_string(order_ - 1));
  return cells_[static_cast<std::size_t>(x) * order_ + y];
}

bool LatinSquare::has_identity_diagonal() const {
  for (int x = 0; x < order_; ++x)
    if (at(x, x) != x) return false;
  return true;
}

std::string LatinSquare::to_text() const {
  std::ostringstream out;
  for (int x = 0; x < order_; ++x) {
    for (int y = 0; y < order_; ++y) {
      if (y) out << ' ';
      out << at(x, y);
    }
    out << '\n';
  }
  return out.str();
}

LatinSquare LatinSquare::parse_text(const std::string& text) {
  std::istringstream in(text);
  std::vector<std::vector<int>> rows;
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream fields(line);
    std::vector<int> row;
    int v;
    while (fields >> v) row.push_back(v);
    if (!fields.eof())
      throw LatinValidationError(LatinValidationError::Kind::Shape,
                                 static_cast<int>(rows.size()),
                                 "row " + std::to_string(rows.size()) +
                                     " contains a non-integer token");
    if (!row.empty()) rows.push_back(std::move(row));
  }
  if (rows.empty())
    throw LatinValidationError(LatinValidationError::Kind::Shape, 0, "empty table");
  const int order = static_cast<int>(rows.size());
  std::vector<int> cells;
  cells.reserve(static_cast<std::size_t>(order) * order);
  for (int x = 0; x < order; ++x) {
    if (static_cast<int>(rows[x].size()) != order)
      throw LatinValidationError(LatinValidationError::Kind::Row, x,
                                 "row " + std::to_string(x) + " has " +
                                     std::to_string(rows[x].size()) +
                                     " entries, expected " + std::to_string(order));
    cells.insert(cells.end(), rows[x].begin(), rows[x].end());
  }
  return LatinSquare(order, std::move(cells));
}

}  // namespace quasishift
