#pragma once

#include <map>
#include <vector>

#include "schurkit/shapes.hpp"
#include "schurkit/tableaux.hpp"

namespace schurkit {

long long checked_add(long long a, long long b);
long long checked_mul(long long a, long long b);

/// Nonnegative integer combination of Schur functions, homogeneous of one
/// degree.  Zero coefficients are never stored; arithmetic is overflow
/// checked and fails loudly.
class SchurExpansion {
public:
  explicit SchurExpansion(int degree) : degree_(degree) {}

  int degree() const { return degree_; }
  const std::map<Partition, long long, PartitionOrder>& terms() const { return terms_; }
  long long coefficient(const Partition& p) const;
  void add_term(const Partition& p, long long coeff);
  std::vector<Partition> support() const;

  bool operator==(const SchurExpansion&) const = default;

private:
  int degree_;
  std::map<Partition, long long, PartitionOrder> terms_;
};

/// Schur expansion of the skew Schur function of a, by the
/// Littlewood-Richardson rule.  Memoized; safe for concurrent callers.
const SchurExpansion& lr_expand(const SkewShape& a);

/// Schur expansion of the ribbon Schur function of alpha: the coefficient of
/// each partition counts standard tableaux with descent set S(alpha).
SchurExpansion ribbon_expand(const Composition& alpha);

std::vector<Partition> support_of(const SkewShape& a);

/// c^nu_{mu,lambda}: the number of lattice fillings of nu/mu with content
/// lambda.  Degenerate inputs give 0.
long long lr_coefficient(const Partition& nu, const Partition& lambda, const Partition& mu);

SchurExpansion multiply(const SchurExpansion& f, const SchurExpansion& g);

/// Transpose every indexing partition.
SchurExpansion omega(const SchurExpansion& f);

/// True iff s_a - s_b has a nonnegative Schur expansion; false outright when
/// sizes differ.
bool diff_schur_positive(const SkewShape& a, const SkewShape& b);

/// True iff the support of b is contained in the support of a (sizes must
/// match, else false).
bool support_contained(const SkewShape& b, const SkewShape& a);

}  // namespace schurkit
