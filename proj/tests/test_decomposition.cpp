#include "doctest.h"

#include <algorithm>
#include <set>
#include <vector>

#include "quasishift/errors.hpp"
#include "quasishift/factorization.hpp"
#include "quasishift/product_shift.hpp"
#include "quasishift/rng.hpp"
#include "quasishift/subquasigroup.hpp"

using namespace quasishift;

namespace {

// Independent route: every multiset factorization with factors >= 2, then
// filter out 2 and 6 afterwards.
void all_factorizations(int remaining, int min_factor, std::vector<int>& cur,
                        std::vector<std::vector<int>>& out) {
  for (int d = min_factor; d <= remaining; ++d) {
    if (remaining % d != 0) continue;
    cur.push_back(d);
    if (d == remaining)
      out.push_back(cur);
    else
      all_factorizations(remaining / d, d, cur, out);
    cur.pop_back();
  }
}

std::vector<std::vector<int>> filtered_factorizations(int N, bool nontrivial) {
  std::vector<std::vector<int>> all, kept;
  std::vector<int> cur;
  all_factorizations(N, 2, cur, all);
  for (const auto& f : all) {
    const bool clean =
        std::none_of(f.begin(), f.end(), [](int p) { return p == 2 || p == 6; });
    if (clean && (!nontrivial || f.size() >= 2)) kept.push_back(f);
  }
  std::sort(kept.begin(), kept.end());
  return kept;
}

ProductPoint random_product_point(Rng& rng, const ProductShift& Y, int max_period) {
  ProductPoint x;
  for (int k = 0; k < Y.arity(); ++k)
    x.components.push_back(random_point(rng, Y.alphabet_size(k), max_period));
  return x;
}

}  // namespace

TEST_CASE("admissible factorizations: worked cases") {
  const auto f15 = admissible_factorization(15, false);
  CHECK(std::count(f15.begin(), f15.end(), std::vector<int>{3, 5}) == 1);
  CHECK(std::count(f15.begin(), f15.end(), std::vector<int>{15}) == 1);
  CHECK(admissible_factorization(6, false).empty());
  CHECK(admissible_factorization(2, false).empty());
  CHECK(admissible_factorization(8, true).empty());
  CHECK(admissible_factorization(8, false) == std::vector<std::vector<int>>{{8}});
  CHECK_THROWS_AS(admissible_factorization(1, false), std::domain_error);
}

TEST_CASE("admissible factorizations agree with the filtered brute force") {
  for (int N = 2; N <= 30; ++N) {
    CHECK(admissible_factorization(N, false) == filtered_factorizations(N, false));
    CHECK(admissible_factorization(N, true) == filtered_factorizations(N, true));
  }
}

TEST_CASE("intro's excluded entropy set has no nontrivial factorization") {
  std::vector<int> excluded{2, 8, 18};
  for (int p : {2, 3, 5, 7, 11, 13}) excluded.push_back(2 * p);
  for (int N : excluded) CHECK(admissible_factorization(N, true).empty());
  for (int N : {9, 12, 15, 16, 20, 21, 25, 27})
    CHECK_FALSE(admissible_factorization(N, true).empty());
}

TEST_CASE("product shift construction gates") {
  CHECK(ProductShift::from_factors({3, 5}).arity() == 2);
  CHECK_THROWS_AS(ProductShift::from_factors({2, 3}), std::domain_error);
  CHECK_THROWS_AS(ProductShift::from_factors({6}), std::domain_error);
  CHECK_THROWS_AS(ProductShift::from_factors({}), std::domain_error);
  // Direct construction insists on idempotent factors.
  CHECK_THROWS_AS(ProductShift({build_cyclic_addition(4)}), std::domain_error);
  CHECK(ProductShift({build_idempotent_quasigroup(4)}).arity() == 1);
}

TEST_CASE("componentwise product: worked example over factors (3,5)") {
  const ProductShift Y = ProductShift::from_factors({3, 5});
  const ProductPoint u{{PeriodicPoint(3, {0, 1}), PeriodicPoint(5, {2})}};
  const ProductPoint v{{PeriodicPoint(3, {1}), PeriodicPoint(5, {3})}};
  const ProductPoint w = componentwise_mul(Y, u, v);

  // Component 1: 2(x+y) mod 3 on lcm(2,1)=2; component 2: 3(2+3) mod 5.
  CHECK(w.components[0] == PeriodicPoint(3, {2 * (0 + 1) % 3, 2 * (1 + 1) % 3}));
  CHECK(w.components[0].digits() == std::vector<int>{2, 1});
  CHECK(w.components[1].digits() == std::vector<int>{0});

  CHECK_THROWS_AS(componentwise_mul(Y, u, ProductPoint{{u.components[0]}}),
                  std::domain_error);
}

TEST_CASE("componentwise product is idempotent") {
  const ProductShift Y = ProductShift::from_factors({3, 5});
  Rng rng(23);
  for (int rep = 0; rep < 100; ++rep) {
    const ProductPoint u = random_product_point(rng, Y, 4);
    CHECK(componentwise_mul(Y, u, u) == u);
  }
}

TEST_CASE("arity one reduces to the plain digitwise product") {
  const ProductShift Y({build_idempotent_quasigroup(5)});
  const ProductPoint u{{PeriodicPoint(5, {0, 1})}};
  const ProductPoint v{{PeriodicPoint(5, {2, 3, 4})}};
  CHECK(componentwise_mul(Y, u, v).components[0] ==
        digitwise(Y.factor_op(0), u.components[0], v.components[0]));
}

TEST_CASE("section embedding and membership") {
  const ProductShift Y = ProductShift::from_factors({3, 5});
  const Section sec = make_section(Y, 0, {PeriodicPoint::constant(5, 0)});
  const ProductPoint m = sec.member(PeriodicPoint(3, {2, 1}));
  CHECK(m.components[0].digits() == std::vector<int>{2, 1});
  CHECK(m.components[1].digits() == std::vector<int>{0});
  CHECK(sec.contains(m));
  CHECK_FALSE(sec.contains(ProductPoint{{PeriodicPoint(3, {2, 1}), PeriodicPoint(5, {1})}}));
  CHECK_THROWS_AS(sec.member(PeriodicPoint(5, {0})), std::domain_error);
  CHECK_THROWS_AS(sec.frozen(0), std::domain_error);
  CHECK(sec.frozen(1) == PeriodicPoint::constant(5, 0));
}

TEST_CASE("sections are closed under the product") {
  const ProductShift Y = ProductShift::from_factors({3, 5});
  const Section sec = make_section(Y, 1, {PeriodicPoint(3, {0, 1})});
  for (int a = 0; a < 5; ++a)
    for (int b = 0; b < 5; ++b) {
      const ProductPoint prod = componentwise_mul(Y, sec.member(PeriodicPoint(5, {a})),
                                                  sec.member(PeriodicPoint(5, {b})));
      CHECK(sec.contains(prod));
    }
}

TEST_CASE("distinct sections on a coordinate are disjoint") {
  const ProductShift Y = ProductShift::from_factors({3, 5});
  const Section a = make_section(Y, 0, {PeriodicPoint::constant(5, 0)});
  const Section b = make_section(Y, 0, {PeriodicPoint::constant(5, 1)});
  for (const auto& free : points_with_period_dividing(3, 2)) {
    CHECK_FALSE(b.contains(a.member(free)));
    CHECK_FALSE(a.contains(b.member(free)));
  }
}

TEST_CASE("decompose: arity one returns the point itself") {
  const ProductShift Y({build_idempotent_quasigroup(5)});
  const ProductPoint x{{PeriodicPoint(5, {1, 4})}};
  const auto parts = decompose(Y, x, default_sections(Y));
  REQUIRE(parts.size() == 1);
  CHECK(parts[0] == x);
}

TEST_CASE("decompose: constant points solved by hand over (3,5)") {
  const ProductShift Y = ProductShift::from_factors({3, 5});
  const auto sections = default_sections(Y);
  for (int y1 = 0; y1 < 3; ++y1)
    for (int y2 = 0; y2 < 5; ++y2) {
      const ProductPoint x{
          {PeriodicPoint::constant(3, y1), PeriodicPoint::constant(5, y2)}};
      const auto parts = decompose(Y, x, sections);
      REQUIRE(parts.size() == 2);
      // level-0 free digit c solves 2(c+0) = y1 mod 3, so c = 2*y1 mod 3;
      // level-1 free digit d solves 3(0+d) = y2 mod 5, so d = 2*y2 mod 5.
      CHECK(parts[0].components[0] == PeriodicPoint::constant(3, 2 * y1 % 3));
      CHECK(parts[1].components[1] == PeriodicPoint::constant(5, 2 * y2 % 5));
      CHECK(nested_product(Y, parts) == x);
    }
}

TEST_CASE("decompose/reconstruct round-trip on random points") {
  const ProductShift Y = ProductShift::from_factors({3, 5});
  const auto sections = default_sections(Y);
  Rng rng(101);
  for (int rep = 0; rep < 500; ++rep) {
    const ProductPoint x = random_product_point(rng, Y, 4);
    const auto parts = decompose(Y, x, sections);
    CHECK(nested_product(Y, parts) == x);
    for (int k = 0; k < Y.arity(); ++k) CHECK(sections[k].contains(parts[k]));
    CHECK(decompose(Y, x, sections) == parts);  // deterministic
  }
}

TEST_CASE("decompose round-trips with non-constant bases and three factors") {
  const ProductShift Y = ProductShift::from_factors({3, 5, 3});
  std::vector<Section> sections;
  sections.push_back(make_section(Y, 0, {PeriodicPoint(5, {1, 3}), PeriodicPoint(3, {2})}));
  sections.push_back(make_section(Y, 1, {PeriodicPoint(3, {0, 2}), PeriodicPoint(3, {1, 1, 0})}));
  sections.push_back(make_section(Y, 2, {PeriodicPoint(3, {1}), PeriodicPoint(5, {4, 0})}));
  Rng rng(7);
  for (int rep = 0; rep < 200; ++rep) {
    const ProductPoint x = random_product_point(rng, Y, 4);
    const auto parts = decompose(Y, x, sections);
    CHECK(nested_product(Y, parts) == x);
    for (int k = 0; k < Y.arity(); ++k) CHECK(sections[k].contains(parts[k]));
  }
}

TEST_CASE("product shift equivariance: sigma(u*v) == sigma(u)*sigma(v)") {
  const ProductShift Y = ProductShift::from_factors({3, 5});
  std::vector<ProductPoint> slice;
  for (const auto& a : points_with_period_dividing(3, 2))
    for (const auto& b : points_with_period_dividing(5, 2))
      slice.push_back(ProductPoint{{a, b}});
  for (const auto& u : slice)
    for (const auto& v : slice) {
      const ProductPoint lhs = shift(componentwise_mul(Y, u, v));
      const ProductPoint rhs = componentwise_mul(Y, shift(u), shift(v));
      if (!(lhs == rhs)) REQUIRE(lhs == rhs);
    }
}

TEST_CASE("generated closure on symbols") {
  const FiniteQuasigroup q3 = build_translation_quasigroup(3);
  const Subquasigroup whole = generated_closure(q3, {0, 1});
  CHECK(whole.elements == std::vector<int>{0, 1, 2});
  CHECK(whole.verify(q3));
  CHECK(whole.derivations.count(2) == 1);

  const Subquasigroup fixed = generated_closure(q3, {1});
  CHECK(fixed.elements == std::vector<int>{1});
  CHECK(fixed.verify(q3));

  const Subquasigroup again = generated_closure(q3, whole.elements);
  CHECK(again.elements == whole.elements);

  CHECK_THROWS_AS(generated_closure(q3, {}), std::domain_error);
  CHECK_THROWS_AS(generated_closure(q3, {3}), std::domain_error);
}

TEST_CASE("generated closure finds proper subquasigroups") {
  // (x+y)/2 mod 9: {0,3,6} is closed (and idempotent as a sub-square).
  const FiniteQuasigroup q9 = build_translation_quasigroup(9);
  const Subquasigroup sub = generated_closure(q9, {0, 3});
  CHECK(sub.elements == std::vector<int>{0, 3, 6});
  CHECK(sub.verify(q9));
}

TEST_CASE("orbit closure slice membership") {
  const ProductShift Y = ProductShift::from_factors({3, 5});

  SUBCASE("shifted embedded section points are members") {
    const Section sec = make_section(Y, 0, {PeriodicPoint(5, {0, 1})});
    for (int n = 0; n < 2; ++n) {
      const ProductPoint x = sec.shifted(n).member(PeriodicPoint(3, {1, 2}));
      CHECK(orbit_closure_membership(Y, sec, 2, x));
    }
  }

  SUBCASE("arity one: the closure is the whole period slice") {
    const ProductShift Y1({build_idempotent_quasigroup(3)});
    const Section sec(Y1, 0, {});
    const auto closure = orbit_closure_slice(Y1, sec, 2);
    CHECK(closure.size() == 9);
  }

  SUBCASE("points outside the reachable coordinate pattern are rejected") {
    const Section sec = make_section(Y, 0, {PeriodicPoint::constant(5, 0)});
    const ProductPoint outside{{PeriodicPoint(3, {0}), PeriodicPoint(5, {1})}};
    CHECK_FALSE(orbit_closure_membership(Y, sec, 2, outside));
  }

  SUBCASE("base period not dividing the slice bound empties the closure") {
    const Section sec = make_section(Y, 0, {PeriodicPoint(5, {0, 1, 2})});
    CHECK(orbit_closure_slice(Y, sec, 2).empty());
  }

  SUBCASE("guards") {
    const Section sec = make_section(Y, 0, {PeriodicPoint::constant(5, 0)});
    CHECK_THROWS_AS(orbit_closure_slice(Y, sec, 12), ResourceLimitError);
    const ProductPoint x{{PeriodicPoint(3, {0, 1, 2}), PeriodicPoint(5, {0})}};
    CHECK_THROWS_AS(orbit_closure_membership(Y, sec, 2, x), std::domain_error);
  }
}

TEST_CASE("orbit closure slice matches a full-sweep fixpoint brute force") {
  const ProductShift Y = ProductShift::from_factors({3, 5});
  const Section sec = make_section(Y, 0, {PeriodicPoint(5, {0, 1})});
  const int P = 2;

  // Independent generators: hand-built embeddings of every free point into
  // each distinct shift of the section (base (0,1) has exactly two shifts).
  std::set<ProductPoint> accumulated;
  for (const std::vector<int>& base : {std::vector<int>{0, 1}, std::vector<int>{1, 0}})
    for (const auto& free : points_with_period_dividing(3, P))
      accumulated.insert(ProductPoint{{free, PeriodicPoint(5, base)}});

  // Least fixpoint of full pairwise-product sweeps; equals the union of the
  // m-fold product sets since both are the least mul-closed superset.
  while (true) {
    std::set<ProductPoint> next = accumulated;
    for (const auto& a : accumulated)
      for (const auto& b : accumulated) next.insert(componentwise_mul(Y, a, b));
    if (next.size() == accumulated.size()) break;
    accumulated.swap(next);
  }

  const auto closure = orbit_closure_slice(Y, sec, P);
  CHECK(closure == accumulated);

  // Full membership table cross-check over the whole period-P slice.
  for (const auto& a : points_with_period_dividing(3, P))
    for (const auto& b : points_with_period_dividing(5, P)) {
      const ProductPoint x{{a, b}};
      CHECK(orbit_closure_membership(Y, sec, P, x) == (accumulated.count(x) > 0));
    }
}
