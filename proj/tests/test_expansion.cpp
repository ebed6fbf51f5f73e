#include <doctest.h>

#include <limits>
#include <set>

#include "schurkit/expansion.hpp"

using namespace schurkit;

namespace {

Partition P(std::vector<int> v) { return Partition(std::move(v)); }
SkewShape S(std::vector<int> outer, std::vector<int> inner = {}) {
  return SkewShape(P(std::move(outer)), P(std::move(inner)));
}
SkewShape rib(std::vector<int> alpha) { return Ribbon{Composition(std::move(alpha))}.to_skew(); }

SchurExpansion single(const Partition& p) {
  SchurExpansion f(p.size());
  f.add_term(p, 1);
  return f;
}

}  // namespace

TEST_SUITE("expansion") {

TEST_CASE("fixture expansions") {
  const auto& f = lr_expand(S({4, 4, 3}, {2}));
  CHECK(f.terms().size() == 2);
  CHECK(f.coefficient(P({4, 4, 1})) == 1);
  CHECK(f.coefficient(P({4, 3, 2})) == 1);

  const auto& g = lr_expand(S({3, 3, 2, 1}, {2, 1, 1}));
  CHECK(g.terms().size() == 4);
  CHECK(g.coefficient(P({3, 2})) == 1);
  CHECK(g.coefficient(P({3, 1, 1})) == 1);
  CHECK(g.coefficient(P({2, 2, 1})) == 2);
  CHECK(g.coefficient(P({2, 1, 1, 1})) == 1);

  const auto& h = lr_expand(S({3, 3, 1, 1}, {2, 1}));
  CHECK(h.terms().size() == 4);
  for (const auto& [p, c] : h.terms()) CHECK(c == 1);

  CHECK(lr_expand(S({3, 2})) == single(P({3, 2})));
}

TEST_CASE("ribbon expansion fixtures") {
  CHECK(ribbon_expand(Composition({6})) == single(P({6})));
  CHECK(ribbon_expand(Composition({1, 1, 1, 1})) == single(P({1, 1, 1, 1})));

  auto f = ribbon_expand(Composition({2, 3, 3}));
  std::set<Partition, PartitionOrder> support(f.support().begin(), f.support().end());
  std::set<Partition, PartitionOrder> expected{P({6, 2}),    P({6, 1, 1}), P({5, 3}),
                                               P({5, 2, 1}), P({4, 4}),    P({4, 3, 1}),
                                               P({4, 2, 2}), P({3, 3, 2})};
  CHECK(support == expected);
}

TEST_CASE("support fixtures") {
  auto s = support_of(S({4, 4, 3}, {2}));
  REQUIRE(s.size() == 2);
  CHECK(s[0] == P({4, 4, 1}));
  CHECK(s[1] == P({4, 3, 2}));
  CHECK(support_of(S({5, 2})) == std::vector<Partition>{P({5, 2})});
}

TEST_CASE("Littlewood-Richardson coefficients") {
  CHECK(lr_coefficient(P({4, 4, 3}), P({4, 4, 1}), P({2})) == 1);
  CHECK(lr_coefficient(P({4, 4, 3}), P({4, 3, 2}), P({2})) == 1);
  CHECK(lr_coefficient(P({4, 4, 3}), P({4, 4, 3}), P({})) == 1);
  CHECK(lr_coefficient(P({2, 2}), P({2, 1}), P({1})) == 1);
  CHECK(lr_coefficient(P({2, 2}), P({2, 2}), P({1})) == 0);  // degenerate size
  CHECK(lr_coefficient(P({2, 2}), P({2, 1}), P({3})) == 0);  // mu not inside nu
}

TEST_CASE("products") {
  auto s1 = single(P({1}));
  auto prod = multiply(s1, s1);
  CHECK(prod.terms().size() == 2);
  CHECK(prod.coefficient(P({2})) == 1);
  CHECK(prod.coefficient(P({1, 1})) == 1);

  CHECK(multiply(ribbon_expand(Composition({2, 3, 3})), single(P({}))) ==
        ribbon_expand(Composition({2, 3, 3})));

  auto lhs = multiply(ribbon_expand(Composition({2, 2})), ribbon_expand(Composition({3, 2, 2})));
  SchurExpansion rhs(11);
  for (const auto& [p, c] : ribbon_expand(Composition({2, 2, 3, 2, 2})).terms()) rhs.add_term(p, c);
  for (const auto& [p, c] : ribbon_expand(Composition({2, 5, 2, 2})).terms()) rhs.add_term(p, c);
  CHECK(lhs == rhs);
}

TEST_CASE("product commutativity and associativity on small inputs") {
  auto f = lr_expand(S({2, 1}));
  auto g = lr_expand(rib({1, 2}));
  auto h = single(P({2}));
  CHECK(multiply(f, g) == multiply(g, f));
  CHECK(multiply(multiply(f, g), h) == multiply(f, multiply(g, h)));
}

TEST_CASE("omega") {
  CHECK(omega(single(P({4}))) == single(P({1, 1, 1, 1})));
  auto f = lr_expand(S({4, 4, 3}, {2}));
  CHECK(omega(f) == lr_expand(transpose(S({4, 4, 3}, {2}))));
  CHECK(omega(omega(f)) == f);
}

TEST_CASE("naturality and rotation invariance, exhaustively") {
  for (int n = 1; n <= 6; ++n)
    for (const auto& a : enumerate_skew_shapes(n)) {
      CHECK(lr_expand(a) == lr_expand(rotate180(a)));
      CHECK(omega(lr_expand(a)) == lr_expand(transpose(a)));
    }
}

TEST_CASE("ribbon expansions agree with lattice-filling expansions") {
  for (int n = 1; n <= 6; ++n)
    for (const auto& alpha : enumerate_compositions(n))
      CHECK(ribbon_expand(alpha) == lr_expand(Ribbon{alpha}.to_skew()));
}

TEST_CASE("support sits in the dominance interval with unit endpoints") {
  for (int n = 1; n <= 6; ++n)
    for (const auto& a : enumerate_skew_shapes(n)) {
      const auto& f = lr_expand(a);
      Partition lo = rows_of(a);
      Partition hi = transpose(cols_of(a));
      for (const auto& [p, c] : f.terms()) {
        CHECK(p.size() == n);
        CHECK(dominance_leq(lo, p));
        CHECK(dominance_leq(p, hi));
      }
      CHECK(f.coefficient(lo) == 1);
      CHECK(f.coefficient(hi) == 1);
    }
}

TEST_CASE("positivity fixtures") {
  SkewShape a = S({3, 3, 2, 1}, {2, 1, 1});
  SkewShape b = S({3, 3, 1, 1}, {2, 1});
  CHECK(diff_schur_positive(a, b));
  CHECK_FALSE(diff_schur_positive(b, a));
  CHECK(diff_schur_positive(a, a));
  CHECK(diff_schur_positive(rib({2, 3, 3}), rib({3, 2, 3})));

  CHECK(support_contained(b, a));
  CHECK(support_contained(a, b));  // equal supports
  CHECK_FALSE(diff_schur_positive(S({2}), S({1})));
}

TEST_CASE("positivity implies support containment") {
  for (int n = 1; n <= 5; ++n) {
    auto shapes = enumerate_skew_shapes(n);
    for (const auto& a : shapes)
      for (const auto& b : shapes)
        if (diff_schur_positive(a, b)) CHECK(support_contained(b, a));
  }
}

TEST_CASE("checked arithmetic fails loudly") {
  long long big = std::numeric_limits<long long>::max();
  CHECK_THROWS_AS(checked_add(big, 1), std::overflow_error);
  CHECK_THROWS_AS(checked_mul(big, 2), std::overflow_error);
  CHECK(checked_add(2, 3) == 5);
  CHECK(checked_mul(4, 5) == 20);

  SchurExpansion f(1);
  f.add_term(P({1}), big);
  CHECK_THROWS_AS(f.add_term(P({1}), 1), std::overflow_error);
  CHECK_THROWS_AS(f.add_term(P({2}), 1), std::invalid_argument);  // degree mismatch
}

}  // TEST_SUITE
