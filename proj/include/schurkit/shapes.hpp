#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace schurkit {

/// Weakly decreasing sequence of positive integers.  The empty partition is
/// a valid value (needed for straight shapes).
class Partition {
public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int length() const { return static_cast<int>(parts_.size()); }
  int size() const;
  bool empty() const { return parts_.empty(); }
  /// 0-indexed row length, zero-padded beyond the last part.
  int part(int i) const {
    return (i >= 0 && i < length()) ? parts_[static_cast<size_t>(i)] : 0;
  }

  bool operator==(const Partition&) const = default;
  std::string to_string() const;

private:
  std::vector<int> parts_;
};

// Listing order used throughout: larger entries first, and a proper prefix
// ahead of its extensions.  Restricted to partitions of one size this is the
// reverse-lexicographic order.
bool seq_order_less(const std::vector<int>& a, const std::vector<int>& b);

struct PartitionOrder {
  bool operator()(const Partition& a, const Partition& b) const {
    return seq_order_less(a.parts(), b.parts());
  }
};

Partition transpose(const Partition& p);
bool contains(const Partition& outer, const Partition& inner);

/// Dominance order: every prefix sum of p is at most the matching prefix sum
/// of q, padding with zeros.  Requires |p| == |q|.
bool dominance_leq(const Partition& p, const Partition& q);

std::vector<Partition> enumerate_partitions(int n);

/// Sequence of positive integers, order significant.
class Composition {
public:
  Composition() = default;
  explicit Composition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int length() const { return static_cast<int>(parts_.size()); }
  int size() const;

  /// The partial sums a1, a1+a2, ..., strictly inside {1, ..., N-1}.
  std::vector<int> descent_positions() const;

  Composition reversed() const;
  bool operator==(const Composition&) const = default;
  std::string to_string() const;

private:
  std::vector<int> parts_;
};

std::vector<Composition> enumerate_compositions(int n);

/// Composition whose descent positions are exactly the given subset of
/// {1, ..., n-1} (sorted strictly increasing).
Composition composition_from_descents(const std::vector<int>& descents, int n);

/// Skew diagram outer/inner, stored in basic form: no empty row and no empty
/// column.  Construction canonicalizes (strips empty rows and columns) and
/// rejects shapes with zero boxes.
class SkewShape {
public:
  SkewShape(Partition outer, Partition inner);

  const Partition& outer() const { return outer_; }
  const Partition& inner() const { return inner_; }
  int size() const;
  int num_rows() const { return outer_.length(); }
  int num_cols() const { return outer_.part(0); }
  /// Row i (0-indexed from the top) occupies columns [row_start(i), row_end(i)).
  int row_start(int i) const { return inner_.part(i); }
  int row_end(int i) const { return outer_.part(i); }

  bool operator==(const SkewShape&) const = default;
  std::string to_string() const;

private:
  Partition outer_;
  Partition inner_;
};

struct SkewShapeOrder {
  bool operator()(const SkewShape& a, const SkewShape& b) const;
};

SkewShape transpose(const SkewShape& a);
SkewShape rotate180(const SkewShape& a);
Partition rows_of(const SkewShape& a);
Partition cols_of(const SkewShape& a);

/// Multiset of overlaps of k consecutive nonempty rows, weakly decreasing,
/// zeros included.  k = 1 gives the row lengths; for k = 2 the number of
/// zeros is one less than the number of connected components.
std::vector<int> overlap_partition(const SkewShape& a, int k = 2);

bool is_connected(const SkewShape& a);
bool is_ribbon(const SkewShape& a);

/// Connected components, top to bottom, each renormalized to basic form.
std::vector<SkewShape> components_of(const SkewShape& a);

/// Connected skew shape with no 2x2 block, encoded by its row lengths read
/// top to bottom.
class Ribbon {
public:
  explicit Ribbon(Composition rows);
  const Composition& rows() const { return rows_; }
  int size() const { return rows_.size(); }
  int num_rows() const { return rows_.length(); }

  SkewShape to_skew() const;
  static std::optional<Ribbon> from_skew(const SkewShape& a);

  Ribbon rotated() const { return Ribbon(rows_.reversed()); }
  /// Row composition of the transposed diagram.
  Ribbon transposed() const;
  /// Row composition of the diagram flipped along the anti-diagonal
  /// (transpose of the rotation); descent positions complement.
  Ribbon conjugated() const;

  bool operator==(const Ribbon&) const = default;

private:
  Composition rows_;
};

std::vector<Ribbon> enumerate_ribbons(int n);

/// All basic skew shapes with n boxes, one representative per multiset of
/// connected components, in listing order.
std::vector<SkewShape> enumerate_skew_shapes(int n);

}  // namespace schurkit
