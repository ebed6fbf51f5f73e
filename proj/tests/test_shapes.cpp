#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

#include "schurkit/json_io.hpp"
#include "schurkit/shapes.hpp"

using namespace schurkit;

namespace {

Partition P(std::vector<int> v) { return Partition(std::move(v)); }
SkewShape S(std::vector<int> outer, std::vector<int> inner = {}) {
  return SkewShape(P(std::move(outer)), P(std::move(inner)));
}

// Independent generate-and-filter oracle: every (outer, inner) pair drawn
// from the n x n box whose difference has n boxes, canonicalized and deduped.
std::set<SkewShape, SkewShapeOrder> all_canonical_placements(int n) {
  std::set<SkewShape, SkewShapeOrder> out;
  std::vector<Partition> outers;
  for (int size = n; size <= n * n; ++size)
    for (const auto& p : enumerate_partitions(size))
      if (p.length() <= n && p.part(0) <= n) outers.push_back(p);
  for (const auto& outer : outers) {
    for (const auto& inner : enumerate_partitions(outer.size() - n)) {
      if (!contains(outer, inner)) continue;
      SkewShape canon(outer, inner);
      if (canon.outer() == outer && canon.inner() == inner) out.insert(canon);
    }
  }
  // The empty inner partition case when |outer| == n.
  for (const auto& outer : enumerate_partitions(n))
    if (outer.length() <= n && outer.part(0) <= n) out.insert(SkewShape(outer, Partition()));
  return out;
}

std::string multiset_key(const SkewShape& a) {
  std::vector<std::string> keys;
  for (const auto& c : components_of(a)) keys.push_back(c.to_string());
  std::sort(keys.begin(), keys.end());
  std::string s;
  for (auto& k : keys) s += k + "|";
  return s;
}

}  // namespace

TEST_SUITE("shapes") {

TEST_CASE("partition invariants and accessors") {
  CHECK_THROWS_AS(P({1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(P({2, 0}), std::invalid_argument);
  CHECK(P({}).size() == 0);
  CHECK(P({4, 4, 3}).size() == 11);
  CHECK(P({4, 4, 3}).part(5) == 0);
}

TEST_CASE("transpose fixture and involution") {
  CHECK(transpose(P({4, 4, 3})) == P({3, 3, 3, 2}));
  CHECK(transpose(P({})) == P({}));
  CHECK(transpose(P({5})) == P({1, 1, 1, 1, 1}));
  for (int n = 0; n <= 8; ++n)
    for (const auto& p : enumerate_partitions(n)) CHECK(transpose(transpose(p)) == p);
}

TEST_CASE("dominance order") {
  CHECK(dominance_leq(P({2, 1, 1, 1}), P({3, 2})));
  CHECK_FALSE(dominance_leq(P({3, 2}), P({2, 1, 1, 1})));
  CHECK(dominance_leq(P({3, 1}), P({3, 1})));
  CHECK_THROWS_AS(dominance_leq(P({2}), P({3})), std::invalid_argument);
}

TEST_CASE("dominance is a partial order and reverses under transpose") {
  for (int n = 1; n <= 9; ++n) {
    auto ps = enumerate_partitions(n);
    for (const auto& p : ps) {
      CHECK(dominance_leq(p, p));
      for (const auto& q : ps) {
        bool pq = dominance_leq(p, q);
        if (pq) CHECK(dominance_leq(transpose(q), transpose(p)));
        if (pq && dominance_leq(q, p)) CHECK(p == q);
      }
    }
    if (n <= 7) {
      for (const auto& p : ps)
        for (const auto& q : ps)
          for (const auto& r : ps)
            if (dominance_leq(p, q) && dominance_leq(q, r)) CHECK(dominance_leq(p, r));
    }
  }
}

TEST_CASE("skew shape canonicalization") {
  CHECK(S({2, 2}, {2}).to_string() == "2");        // empty top row stripped
  CHECK(S({3, 3}, {1, 1}).to_string() == "22");    // empty column stripped
  CHECK_THROWS_AS(S({2, 2}, {2, 2}), std::invalid_argument);
  CHECK_THROWS_AS(S({2}, {3}), std::invalid_argument);
  CHECK(S({4, 4, 3}, {2}).size() == 9);
}

TEST_CASE("skew transpose fixture") {
  CHECK(transpose(S({4, 4, 3}, {2})) == S({3, 3, 3, 2}, {1, 1}));
  CHECK(transpose(S({2, 1})) == S({2, 1}));
}

TEST_CASE("rotation fixtures") {
  CHECK(rotate180(Ribbon{Composition({2, 1, 3})}.to_skew()) ==
        Ribbon{Composition({3, 1, 2})}.to_skew());
  CHECK(rotate180(Ribbon{Composition({2, 3, 3})}.to_skew()) ==
        Ribbon{Composition({3, 3, 2})}.to_skew());
  CHECK(rotate180(S({4})) == S({4}));
}

TEST_CASE("transpose and rotation are involutions, exhaustively") {
  for (int n = 1; n <= 8; ++n)
    for (const auto& a : enumerate_skew_shapes(n)) {
      CHECK(transpose(transpose(a)) == a);
      CHECK(rotate180(rotate180(a)) == a);
    }
}

TEST_CASE("row and column multisets") {
  SkewShape r213 = Ribbon{Composition({2, 1, 3})}.to_skew();
  CHECK(r213 == S({4, 3, 3}, {2, 2}));
  CHECK(rows_of(r213) == P({3, 2, 1}));
  CHECK(cols_of(r213) == P({3, 1, 1, 1}));
  CHECK(rows_of(S({3, 2, 1})) == P({3, 2, 1}));
  for (int n = 1; n <= 6; ++n)
    for (const auto& a : enumerate_skew_shapes(n)) CHECK(cols_of(a) == rows_of(transpose(a)));
}

TEST_CASE("connectivity and ribbon predicates") {
  CHECK(is_connected(S({4, 4, 3}, {2})));
  CHECK_FALSE(is_connected(S({2, 1}, {1})));
  CHECK(is_ribbon(S({4, 3, 3}, {2, 2})));
  CHECK_FALSE(is_ribbon(S({4, 4, 3}, {2})));
  CHECK(is_ribbon(S({6})));
  for (int n = 1; n <= 7; ++n)
    for (const auto& a : enumerate_skew_shapes(n)) {
      auto ov = overlap_partition(a);
      bool allOnes = std::all_of(ov.begin(), ov.end(), [](int v) { return v == 1; });
      CHECK(is_ribbon(a) == (is_connected(a) && allOnes));
    }
}

TEST_CASE("overlap multisets") {
  CHECK(overlap_partition(Ribbon{Composition({2, 1, 3})}.to_skew()) == std::vector<int>{1, 1});
  CHECK(overlap_partition(S({4, 4, 3}, {2})) == std::vector<int>{3, 2});
  CHECK(overlap_partition(S({2, 1}, {1})) == std::vector<int>{0});
  CHECK(overlap_partition(S({4, 4, 3}, {2}), 1) == std::vector<int>{4, 3, 2});
}

TEST_CASE("ribbon row plus column count identity") {
  for (int n = 1; n <= 12; ++n)
    for (const auto& r : enumerate_ribbons(n)) {
      auto shape = r.to_skew();
      CHECK(rows_of(shape).length() + cols_of(shape).length() == n + 1);
    }
}

TEST_CASE("enumeration fixtures") {
  auto p4 = enumerate_partitions(4);
  REQUIRE(p4.size() == 5);
  CHECK(p4[0] == P({4}));
  CHECK(p4[1] == P({3, 1}));
  CHECK(p4[2] == P({2, 2}));
  CHECK(p4[3] == P({2, 1, 1}));
  CHECK(p4[4] == P({1, 1, 1, 1}));

  auto r3 = enumerate_ribbons(3);
  REQUIRE(r3.size() == 4);
  CHECK(r3[0].rows() == Composition({3}));
  CHECK(r3[1].rows() == Composition({2, 1}));
  CHECK(r3[2].rows() == Composition({1, 2}));
  CHECK(r3[3].rows() == Composition({1, 1, 1}));
  for (int n = 1; n <= 10; ++n)
    CHECK(enumerate_ribbons(n).size() == static_cast<size_t>(1) << (n - 1));
}

TEST_CASE("skew shape enumeration, small fixtures") {
  auto one = enumerate_skew_shapes(1);
  REQUIRE(one.size() == 1);
  CHECK(one[0] == S({1}));

  auto three = enumerate_skew_shapes(3);
  std::vector<std::string> got;
  for (const auto& a : three) got.push_back(a.to_string());
  CHECK(got == std::vector<std::string>{"3", "32/2", "321/21", "22/1", "221/11", "21", "111"});
}

TEST_CASE("skew shape enumeration against the generate-and-filter oracle") {
  for (int n = 1; n <= 5; ++n) {
    auto placements = all_canonical_placements(n);
    auto listed = enumerate_skew_shapes(n);

    std::set<SkewShape, SkewShapeOrder> listedSet(listed.begin(), listed.end());
    CHECK(listedSet.size() == listed.size());  // no duplicates
    for (const auto& a : listed) CHECK(placements.count(a) == 1);

    // One representative per multiset of connected components.
    std::map<std::string, int> byMultiset;
    for (const auto& a : placements) ++byMultiset[multiset_key(a)];
    std::map<std::string, int> chosen;
    for (const auto& a : listed) ++chosen[multiset_key(a)];
    CHECK(chosen.size() == byMultiset.size());
    for (const auto& [key, cnt] : chosen) CHECK(cnt == 1);
  }
}

TEST_CASE("component extraction") {
  auto comps = components_of(S({3, 2}, {2}));
  REQUIRE(comps.size() == 2);
  CHECK(comps[0] == S({1}));
  CHECK(comps[1] == S({2}));
  CHECK(components_of(S({4, 4, 3}, {2})).size() == 1);
}

TEST_CASE("ribbon and composition round trips") {
  for (int n = 1; n <= 8; ++n)
    for (const auto& r : enumerate_ribbons(n)) {
      auto back = Ribbon::from_skew(r.to_skew());
      REQUIRE(back.has_value());
      CHECK(*back == r);
      CHECK(r.conjugated() == r.transposed().rotated());
    }
}

TEST_CASE("literal parsing") {
  CHECK(parse_partition("3321") == P({3, 3, 2, 1}));
  CHECK(parse_partition("10,4,4") == P({10, 4, 4}));
  CHECK(parse_skew("443/2") == S({4, 4, 3}, {2}));
  CHECK(parse_skew("21") == S({2, 1}));
  CHECK_THROWS_AS(parse_skew("bogus/xyz"), std::invalid_argument);
  CHECK_THROWS_AS(parse_partition("2,3"), std::invalid_argument);
  CHECK_THROWS_AS(parse_composition(""), std::invalid_argument);
}

}  // TEST_SUITE
