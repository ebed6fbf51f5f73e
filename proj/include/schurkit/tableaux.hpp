#pragma once

#include <vector>

#include "schurkit/shapes.hpp"

namespace schurkit {

/// Filling of a skew shape, semistandard by construction in everything this
/// module emits: rows weakly increase, columns strictly increase.
class Filling {
public:
  Filling(SkewShape shape, std::vector<std::vector<int>> rows);

  const SkewShape& shape() const { return shape_; }
  /// Entries of row i, left to right (row_start(i) leading cells omitted).
  const std::vector<int>& row(int i) const { return rows_[static_cast<size_t>(i)]; }
  int entry(int i, int j) const {  // j is an absolute column index
    return rows_[static_cast<size_t>(i)][static_cast<size_t>(j - shape_.row_start(i))];
  }

  /// Multiplicity of each value 1, 2, ... appearing in the filling.
  std::vector<int> content() const;
  bool is_standard() const;

  bool operator==(const Filling&) const = default;

private:
  SkewShape shape_;
  std::vector<std::vector<int>> rows_;
};

/// Entries read right to left along rows, top row first.
std::vector<int> reverse_reading_word(const Filling& t);

/// Ballot property: every prefix has at least as many i's as (i+1)'s.
bool is_lattice(const std::vector<int>& word);

/// All semistandard fillings of a whose reverse reading word is lattice,
/// in lexicographic order of the row-major entry sequence.  An optional
/// content bound caps the multiplicity of each value.
std::vector<Filling> enumerate_lr_fillings(const SkewShape& a);
std::vector<Filling> enumerate_lr_fillings(const SkewShape& a, const std::vector<int>& max_content);

/// Entries i whose successor i+1 sits in a strictly lower row.
/// Rejects non-standard fillings.
std::vector<int> descent_set(const Filling& t);

/// All standard Young tableaux of the straight shape with descent set exactly
/// `descents`, in lexicographic order of the row-major entry sequence.
std::vector<Filling> enumerate_syt_with_descents(const Partition& shape,
                                                 const std::vector<int>& descents);

}  // namespace schurkit
