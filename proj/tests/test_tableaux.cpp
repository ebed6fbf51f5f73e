#include <doctest.h>

#include <functional>
#include <set>

#include "schurkit/tableaux.hpp"

using namespace schurkit;

namespace {

Partition P(std::vector<int> v) { return Partition(std::move(v)); }
SkewShape S(std::vector<int> outer, std::vector<int> inner = {}) {
  return SkewShape(P(std::move(outer)), P(std::move(inner)));
}

// Plain backtracking count of standard tableaux, no descent machinery.
long long count_syt_brute(const Partition& shape) {
  int l = shape.length();
  std::vector<int> filled(static_cast<size_t>(l), 0);
  std::function<long long(int)> rec = [&](int placed) -> long long {
    if (placed == shape.size()) return 1;
    long long total = 0;
    for (int i = 0; i < l; ++i) {
      if (filled[static_cast<size_t>(i)] >= shape.part(i)) continue;
      if (i > 0 && filled[static_cast<size_t>(i) - 1] <= filled[static_cast<size_t>(i)]) continue;
      ++filled[static_cast<size_t>(i)];
      total += rec(placed + 1);
      --filled[static_cast<size_t>(i)];
    }
    return total;
  };
  return rec(0);
}

}  // namespace

TEST_SUITE("tableaux") {

TEST_CASE("reverse reading word of a skew semistandard filling") {
  Filling t(S({4, 4, 3}, {2}), {{1, 2}, {1, 1, 2, 3}, {5, 7, 7}});
  CHECK(reverse_reading_word(t) == std::vector<int>{2, 1, 3, 2, 1, 1, 7, 7, 5});
  CHECK(t.content() == std::vector<int>{3, 2, 1, 0, 1, 0, 2});

  Filling box(S({1}), {{1}});
  CHECK(reverse_reading_word(box) == std::vector<int>{1});
  Filling row(S({3}), {{1, 1, 2}});
  CHECK(reverse_reading_word(row) == std::vector<int>{2, 1, 1});
}

TEST_CASE("semistandard violations are rejected") {
  CHECK_THROWS_AS(Filling(S({2}), {{2, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(Filling(S({1, 1}), {{1}, {1}}), std::invalid_argument);
  CHECK_THROWS_AS(Filling(S({2}), {{1}}), std::invalid_argument);
}

TEST_CASE("lattice words") {
  CHECK(is_lattice({1, 1, 2, 2, 1, 1, 3, 2, 2}));
  CHECK(is_lattice({1, 1, 2, 2, 1, 1, 3, 3, 2}));
  CHECK_FALSE(is_lattice({2, 1, 3, 2, 1, 1, 7, 7, 5}));
  CHECK(is_lattice({}));
}

TEST_CASE("lattice fillings of 443/2") {
  auto fillings = enumerate_lr_fillings(S({4, 4, 3}, {2}));
  REQUIRE(fillings.size() == 2);
  std::set<std::vector<int>> words;
  for (const auto& t : fillings) words.insert(reverse_reading_word(t));
  CHECK(words.count({1, 1, 2, 2, 1, 1, 3, 2, 2}) == 1);
  CHECK(words.count({1, 1, 2, 2, 1, 1, 3, 3, 2}) == 1);
}

TEST_CASE("lattice fillings of straight and degenerate shapes") {
  auto straight = enumerate_lr_fillings(S({3, 2, 1}));
  REQUIRE(straight.size() == 1);
  CHECK(straight[0].row(0) == std::vector<int>{1, 1, 1});
  CHECK(straight[0].row(1) == std::vector<int>{2, 2});
  CHECK(straight[0].row(2) == std::vector<int>{3});

  auto column = enumerate_lr_fillings(S({1, 1, 1, 1}));
  REQUIRE(column.size() == 1);
  for (int i = 0; i < 4; ++i) CHECK(column[0].row(i) == std::vector<int>{i + 1});
}

TEST_CASE("every emitted lattice filling is lattice with partition content") {
  for (int n = 1; n <= 6; ++n)
    for (const auto& a : enumerate_skew_shapes(n))
      for (const auto& t : enumerate_lr_fillings(a)) {
        CHECK(is_lattice(reverse_reading_word(t)));
        auto c = t.content();
        for (size_t i = 0; i + 1 < c.size(); ++i) CHECK(c[i] >= c[i + 1]);
      }
}

TEST_CASE("descent sets") {
  Filling t(S({4, 4, 1}), {{1, 2, 3, 6}, {4, 5, 7, 9}, {8}});
  CHECK(descent_set(t) == std::vector<int>{3, 6, 7});
  CHECK(descent_set(Filling(S({4}), {{1, 2, 3, 4}})).empty());
  CHECK(descent_set(Filling(S({1, 1, 1}), {{1}, {2}, {3}})) == std::vector<int>{1, 2});
  CHECK_THROWS_AS(descent_set(Filling(S({2}), {{1, 1}})), std::invalid_argument);
}

TEST_CASE("standard tableaux with prescribed descents, fixtures") {
  auto one = enumerate_syt_with_descents(P({2, 1}), {2});
  REQUIRE(one.size() == 1);
  CHECK(one[0].row(0) == std::vector<int>{1, 2});
  CHECK(one[0].row(1) == std::vector<int>{3});

  CHECK(enumerate_syt_with_descents(P({6}), {}).size() == 1);
  CHECK(enumerate_syt_with_descents(P({2, 1}), {1, 2}).empty());
}

TEST_CASE("descent enumeration partitions the set of standard tableaux") {
  for (int n = 1; n <= 7; ++n) {
    for (const auto& lam : enumerate_partitions(n)) {
      long long total = 0;
      std::vector<int> subset;
      std::function<void(int)> sweep = [&](int next) {
        auto found = enumerate_syt_with_descents(lam, subset);
        for (const auto& t : found) CHECK(descent_set(t) == subset);
        total += static_cast<long long>(found.size());
        for (int d = next; d < n; ++d) {
          subset.push_back(d);
          sweep(d + 1);
          subset.pop_back();
        }
      };
      sweep(1);
      CHECK(total == count_syt_brute(lam));
    }
  }
}

}  // TEST_SUITE
