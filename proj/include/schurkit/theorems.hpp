#pragma once

#include <string>
#include <vector>

#include "schurkit/posets.hpp"

namespace schurkit {

/// Row lengths pairwise within one of each other, and likewise for columns.
bool is_equitable(const Ribbon& r);

/// All equitable ribbons with n boxes and l rows, arrangements in increasing
/// lexicographic order of the row composition.
std::vector<Ribbon> enumerate_equitable(int n, int l);

/// Partitions of n with at most l rows and at most n-l+1 columns.
std::vector<Partition> predicted_support(int n, int l);

/// Outcome of a verification sweep.  A failed check collects counterexamples
/// instead of aborting.
struct Report {
  std::string check;
  int n = 0;
  bool pass = true;
  std::vector<std::string> counterexamples;

  void fail(std::string what) {
    pass = false;
    counterexamples.push_back(std::move(what));
  }
};

/// Checks that the connected support poset at size n has exactly n maximal
/// classes, one per row count, each consisting of the equitable ribbons with
/// that row count, and that every equitable ribbon's support matches
/// predicted_support.
Report verify_theorem_main(int n, int jobs = 1);

/// Support part only: every equitable ribbon of size n has support equal to
/// predicted_support, and conversely no other partition appears.
Report verify_support_formula(int n);

/// Standard Young tableau of shape lambda with descent set exactly the
/// partial sums of alpha, built by peeling horizontal strips off the bottom
/// ribbon row and repairing the top descent with an entry cycle when needed.
/// Requires: the ribbon of alpha equitable, |lambda| = |alpha|, lambda with
/// no more rows or columns than the ribbon.
Filling construct_witness_syt(const Composition& alpha, const Partition& lambda);

/// Ribbon cut out of an l x (n-l+1) grid by the diagonal from the bottom
/// left to the top right corner: boxes whose interior the open segment
/// crosses, plus boxes whose top left corner lies on the segment.
Ribbon conjectured_max_ribbon(int n, int l);

/// Checks that the connected Schur-positivity poset at size n has exactly n
/// maximal classes, one per row count, each equal to the conjectured ribbon
/// together with its rotation.
Report verify_conjecture_max(int n, int jobs = 1);

/// True iff the support of a is the whole dominance interval between
/// rows_of(a) and transpose(cols_of(a)).
bool has_full_support(const SkewShape& a);

/// Checks that among ribbons whose row multiset is lam, the arrangement
/// (lam1, lam3, lam5, ..., lam6, lam4, lam2) is the unique minimal class in
/// the Schur-positivity order.
Report verify_conjecture_minrib(const Partition& lam);

/// Lattice path along the lower right border of the ribbon, bottom left to
/// top right: n-l+1 'h' steps and l 'v' steps.
std::string boundary_word(const Ribbon& r);

/// Checks, for every basic shape with n boxes, that the support lies in the
/// dominance interval [rows_of, transpose(cols_of)] and that both interval
/// endpoints carry coefficient exactly 1.
Report verify_lemma_extreme(int n, int jobs = 1);

}  // namespace schurkit
