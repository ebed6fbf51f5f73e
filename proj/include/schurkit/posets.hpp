#pragma once

#include <functional>
#include <string>
#include <vector>

#include "schurkit/expansion.hpp"
#include "schurkit/shapes.hpp"

namespace schurkit {

enum class Order { schur, support };

/// Shapes with equal Schur expansion (or equal support).  Members agree on
/// row and column multisets, component count, and ribbon-ness, so those
/// attributes live on the class.
struct EquivalenceClass {
  std::vector<SkewShape> members;  // sorted; front() is the representative
  bool connected = false;
  bool ribbon = false;
  int components = 0;
  Partition rows;
  Partition cols;

  const SkewShape& representative() const { return members.front(); }
};

std::vector<EquivalenceClass> schur_classes(int n);
std::vector<EquivalenceClass> support_classes(int n);

/// Finite poset of equivalence classes: full relation matrix plus its
/// transitive reduction.
struct OrderedFamily {
  int n = 0;
  Order order = Order::schur;
  std::vector<EquivalenceClass> elements;
  std::vector<std::vector<char>> leq;       // leq[i][j]: element i <= element j
  std::vector<std::pair<int, int>> covers;  // (lower, upper)

  bool less_eq(int i, int j) const { return leq[static_cast<size_t>(i)][static_cast<size_t>(j)] != 0; }
};

/// Relation computed between representatives; classes must come from the
/// matching classifier so the relation is antisymmetric.
OrderedFamily build_poset(std::vector<EquivalenceClass> classes, Order order, int n, int jobs = 1);

OrderedFamily build_poset(int n, Order order, int jobs = 1);

/// Indices of classes maximal within the induced subposet of connected
/// classes.
std::vector<int> maximal_connected(const OrderedFamily& f);

/// Every pair of comparable elements has all maximal chains between them of
/// equal length.
bool is_graded(const OrderedFamily& f);

/// Every pair of elements has a least upper bound.
bool is_join_semilattice(const OrderedFamily& f);

/// Hasse diagram in DOT syntax, byte-stable across runs.
std::string to_dot(const OrderedFamily& f);

/// Run fn(i) for i in [0, count), across `jobs` threads when jobs > 1.
void parallel_for(int count, int jobs, const std::function<void(int)>& fn);

}  // namespace schurkit
