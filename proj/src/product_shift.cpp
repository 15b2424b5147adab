#include "quasishift/product_shift.hpp"

#include <numeric>
#include <stdexcept>

#include "quasishift/factorization.hpp"

namespace quasishift {

ProductShift ProductShift::from_factors(const std::vector<int>& alphabet_sizes) {
  if (alphabet_sizes.empty()) throw std::domain_error("product shift needs q >= 1 factors");
  std::vector<FiniteQuasigroup> ops;
  ops.reserve(alphabet_sizes.size());
  for (int p : alphabet_sizes) {
    if (!admissible_factor(p))
      throw std::domain_error("factor size " + std::to_string(p) +
                              " is not admissible (sizes 2 and 6 are excluded)");
    ops.push_back(build_idempotent_quasigroup(p));
  }
  return ProductShift(std::move(ops));
}

ProductShift::ProductShift(std::vector<FiniteQuasigroup> factor_ops)
    : factor_ops_(std::move(factor_ops)) {
  if (factor_ops_.empty()) throw std::domain_error("product shift needs q >= 1 factors");
  for (const auto& op : factor_ops_)
    if (!op.is_idempotent())
      throw std::domain_error("every factor op must be idempotent");
}

void require_valid(const ProductShift& Y, const ProductPoint& x) {
  if (static_cast<int>(x.components.size()) != Y.arity())
    throw std::domain_error("point arity does not match product shift");
  for (int k = 0; k < Y.arity(); ++k)
    if (x.components[k].alphabet_size() != Y.alphabet_size(k))
      throw std::domain_error("component " + std::to_string(k) +
                              " alphabet does not match factor");
}

ProductPoint componentwise_mul(const ProductShift& Y, const ProductPoint& u,
                               const ProductPoint& v) {
  require_valid(Y, u);
  require_valid(Y, v);
  ProductPoint out;
  out.components.reserve(Y.arity());
  for (int k = 0; k < Y.arity(); ++k)
    out.components.push_back(digitwise(Y.factor_op(k), u.components[k], v.components[k]));
  return out;
}

ProductPoint shift(const ProductPoint& x) {
  ProductPoint out;
  out.components.reserve(x.components.size());
  for (const auto& c : x.components) out.components.push_back(shift(c));
  return out;
}

Section::Section(const ProductShift& Y, int k, std::vector<PeriodicPoint> bases)
    : k_(k), arity_(Y.arity()) {
  if (k_ < 0 || k_ >= arity_) throw std::domain_error("section coordinate out of range");
  if (static_cast<int>(bases.size()) != arity_ - 1)
    throw std::domain_error("section needs one base point per coordinate j != k");
  bases_.reserve(arity_);
  std::size_t next = 0;
  for (int j = 0; j < arity_; ++j) {
    if (j == k_) {
      // Placeholder; coordinate k is free.
      bases_.push_back(PeriodicPoint::constant(Y.alphabet_size(k_), 0));
    } else {
      if (bases[next].alphabet_size() != Y.alphabet_size(j))
        throw std::domain_error("base point for coordinate " + std::to_string(j) +
                                " has the wrong alphabet");
      bases_.push_back(std::move(bases[next++]));
    }
  }
}

const PeriodicPoint& Section::frozen(int j) const {
  if (j == k_ || j < 0 || j >= arity_)
    throw std::domain_error("coordinate " + std::to_string(j) + " is not frozen");
  return bases_[j];
}

ProductPoint Section::member(const PeriodicPoint& free) const {
  if (free.alphabet_size() != bases_[k_].alphabet_size())
    throw std::domain_error("free point alphabet does not match coordinate " +
                            std::to_string(k_));
  ProductPoint out;
  out.components = bases_;
  out.components[k_] = free;
  return out;
}

bool Section::contains(const ProductPoint& x) const {
  if (static_cast<int>(x.components.size()) != arity_) return false;
  for (int j = 0; j < arity_; ++j)
    if (j != k_ && !(x.components[j] == bases_[j])) return false;
  return true;
}

Section Section::shifted(int n) const {
  Section out = *this;
  for (int j = 0; j < arity_; ++j)
    if (j != k_) out.bases_[j] = shift_by(out.bases_[j], n);
  return out;
}

Section make_section(const ProductShift& Y, int k, std::vector<PeriodicPoint> bases) {
  return Section(Y, k, std::move(bases));
}

std::vector<Section> default_sections(const ProductShift& Y) {
  std::vector<Section> out;
  out.reserve(Y.arity());
  for (int k = 0; k < Y.arity(); ++k) {
    std::vector<PeriodicPoint> bases;
    bases.reserve(Y.arity() - 1);
    for (int j = 0; j < Y.arity(); ++j)
      if (j != k) bases.push_back(PeriodicPoint::constant(Y.alphabet_size(j), 0));
    out.emplace_back(Y, k, std::move(bases));
  }
  return out;
}

ProductPoint nested_product(const ProductShift& Y, const std::vector<ProductPoint>& parts) {
  if (parts.empty()) throw std::domain_error("nested product needs at least one point");
  ProductPoint acc = parts.back();
  for (auto it = parts.rbegin() + 1; it != parts.rend(); ++it)
    acc = componentwise_mul(Y, *it, acc);
  return acc;
}

std::vector<ProductPoint> decompose(const ProductShift& Y, const ProductPoint& x,
                                    const std::vector<Section>& sections) {
  require_valid(Y, x);
  const int q = Y.arity();
  if (static_cast<int>(sections.size()) != q)
    throw std::domain_error("decompose needs exactly one section per coordinate");
  for (int k = 0; k < q; ++k)
    if (sections[k].coordinate() != k || sections[k].arity() != q)
      throw std::domain_error("section " + std::to_string(k) +
                              " does not cover coordinate " + std::to_string(k));

  // Coordinate j of the nested product reads
  //   z_{0,j} * (z_{1,j} * ( ... u_j ... * (z_{q-1,j}) ))
  // with the free stream u_j at level j; every other level is frozen. Solve
  // digit by digit at the lcm of all the involved periods.
  std::vector<PeriodicPoint> free_streams;
  free_streams.reserve(q);
  for (int j = 0; j < q; ++j) {
    const FiniteQuasigroup& op = Y.factor_op(j);
    int len = x.components[j].period();
    for (int i = 0; i < q; ++i)
      if (i != j) len = std::lcm(len, sections[i].frozen(j).period());

    std::vector<int> solved(len);
    for (int t = 0; t < len; ++t) {
      int v = x.components[j].digit_at(t);
      for (int i = 0; i < j; ++i) v = op.left_div(sections[i].frozen(j).digit_at(t), v);
      if (j == q - 1) {
        solved[t] = v;
      } else {
        int tail = sections[q - 1].frozen(j).digit_at(t);
        for (int i = q - 2; i > j; --i)
          tail = op.mul(sections[i].frozen(j).digit_at(t), tail);
        solved[t] = op.right_div(v, tail);
      }
    }
    free_streams.emplace_back(Y.alphabet_size(j), std::move(solved));
  }

  std::vector<ProductPoint> parts;
  parts.reserve(q);
  for (int k = 0; k < q; ++k) parts.push_back(sections[k].member(free_streams[k]));
  return parts;
}

}  // namespace quasishift
