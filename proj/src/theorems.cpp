#include "schurkit/theorems.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace schurkit {

bool is_equitable(const Ribbon& r) {
  const auto& rows = r.rows().parts();
  auto [rmin, rmax] = std::minmax_element(rows.begin(), rows.end());
  if (*rmax - *rmin > 1) return false;
  Partition cols = cols_of(r.to_skew());
  return cols.parts().front() - cols.parts().back() <= 1;
}

std::vector<Ribbon> enumerate_equitable(int n, int l) {
  if (l < 1 || l > n) throw std::invalid_argument("need 1 <= l <= n");
  int a = n / l, r = n % l;
  std::vector<int> parts(static_cast<size_t>(l - r), a);
  parts.insert(parts.end(), static_cast<size_t>(r), a + 1);
  std::sort(parts.begin(), parts.end());
  std::vector<Ribbon> out;
  do {
    Ribbon rib{Composition(parts)};
    if (is_equitable(rib)) out.push_back(rib);
  } while (std::next_permutation(parts.begin(), parts.end()));
  return out;
}

std::vector<Partition> predicted_support(int n, int l) {
  if (l < 1 || l > n) throw std::invalid_argument("need 1 <= l <= n");
  std::vector<Partition> out;
  for (const auto& p : enumerate_partitions(n))
    if (p.length() <= l && p.part(0) <= n - l + 1) out.push_back(p);
  return out;
}

// ---------------------------------------------------------------------------
// Witness tableau construction.

namespace {

using Rows = std::vector<std::vector<int>>;

Rows transpose_rows(const Rows& rows) {
  size_t w = rows.empty() ? 0 : rows.front().size();
  Rows out(w);
  for (size_t j = 0; j < w; ++j)
    for (const auto& row : rows) {
      if (j >= row.size()) break;
      out[j].push_back(row[j]);
    }
  return out;
}

struct ValueIndex {
  std::vector<std::pair<int, int>> pos;  // value -> (row, column index)
  explicit ValueIndex(const Rows& rows, int n) : pos(static_cast<size_t>(n) + 1) {
    for (size_t i = 0; i < rows.size(); ++i)
      for (size_t j = 0; j < rows[i].size(); ++j)
        pos[static_cast<size_t>(rows[i][j])] = {static_cast<int>(i), static_cast<int>(j)};
  }
  int row(int v) const { return pos[static_cast<size_t>(v)].first; }
};

// Cycle in box terms: values[t] moves into the box of values[t+1], the last
// value into the box of values[0].  The cycles used here keep rows increasing.
void apply_cycle(Rows& rows, const ValueIndex& idx, const std::vector<int>& values) {
  size_t k = values.size();
  for (size_t t = 0; t < k; ++t) {
    auto [r, c] = idx.pos[static_cast<size_t>(values[(t + 1) % k])];
    rows[static_cast<size_t>(r)][static_cast<size_t>(c)] = values[t];
  }
}

// Straight-shape tableau with descent set exactly the partial sums of alpha.
// Precondition (maintained by the caller and the recursion): the ribbon of
// alpha is equitable and alpha_i >= 2 for i >= 2.
Rows witness_core(const std::vector<int>& alpha, const std::vector<int>& lam) {
  int l = static_cast<int>(alpha.size());
  int n = std::accumulate(alpha.begin(), alpha.end(), 0);
  if (l == 1) {
    Rows t(1);
    for (int v = 1; v <= n; ++v) t[0].push_back(v);
    return t;
  }

  int stripSize = alpha[static_cast<size_t>(l) - 1];
  int nPrev = n - stripSize;
  int maxMuCols = nPrev - (l - 1) + 1;
  int lRows = static_cast<int>(lam.size());

  // Forced boxes: everything right of the allowed inner width (all in the
  // top row), all of row l if lambda reaches it, one box in the bottom row,
  // and, failing the first, one box in the rightmost column.
  int c = std::max(0, lam[0] - maxMuCols);
  int r = lRows == l ? lam[static_cast<size_t>(lRows) - 1] : 0;
  if (c > 0 && lRows >= 2 && lam[1] > maxMuCols)
    throw std::logic_error("witness: second row exceeds inner width");

  std::vector<int> cap(static_cast<size_t>(lRows));
  for (int i = 0; i < lRows; ++i)
    cap[static_cast<size_t>(i)] =
        (i == lRows - 1) ? lam[static_cast<size_t>(i)]
                         : lam[static_cast<size_t>(i)] - lam[static_cast<size_t>(i) + 1];

  std::vector<int> take(static_cast<size_t>(lRows), 0);
  take[0] = c;
  if (lRows == l) {
    take[static_cast<size_t>(lRows) - 1] = r;
  } else {
    take[static_cast<size_t>(lRows) - 1] = std::max(take[static_cast<size_t>(lRows) - 1], 1);
    if (c == 0) {
      int iStar = 0;
      while (iStar + 1 < lRows && lam[static_cast<size_t>(iStar) + 1] == lam[0]) ++iStar;
      take[static_cast<size_t>(iStar)] = std::max(take[static_cast<size_t>(iStar)], 1);
    }
  }

  int free = stripSize;
  for (int v : take) free -= v;
  if (free < 0) throw std::logic_error("witness: forced strip boxes exceed the strip size");
  // Remaining boxes as low (hence as far left) as possible.
  for (int i = lRows - 1; i >= 0 && free > 0; --i) {
    int add = std::min(free, std::max(0, cap[static_cast<size_t>(i)] - take[static_cast<size_t>(i)]));
    take[static_cast<size_t>(i)] += add;
    free -= add;
  }
  if (free != 0) throw std::logic_error("witness: strip does not fit");

  std::vector<int> mu(static_cast<size_t>(lRows));
  for (int i = 0; i < lRows; ++i) mu[static_cast<size_t>(i)] = lam[static_cast<size_t>(i)] - take[static_cast<size_t>(i)];
  while (!mu.empty() && mu.back() == 0) mu.pop_back();
  if (!mu.empty() && mu[0] > maxMuCols) throw std::logic_error("witness: inner shape too wide");
  if (static_cast<int>(mu.size()) > l - 1) throw std::logic_error("witness: inner shape too tall");

  std::vector<int> alphaPrefix(alpha.begin(), alpha.end() - 1);
  Rows rows = witness_core(alphaPrefix, mu);
  rows.resize(static_cast<size_t>(lRows));

  // Strip cells carry nPrev+1..n left to right; cells in lower rows sit in
  // strictly smaller columns, so filling bottom-up is the column order.
  int value = nPrev;
  for (int i = lRows - 1; i >= 0; --i)
    for (int t = 0; t < take[static_cast<size_t>(i)]; ++t)
      rows[static_cast<size_t>(i)].push_back(++value);

  ValueIndex idx(rows, n);
  if (idx.row(nPrev + 1) > idx.row(nPrev)) return rows;  // top descent already holds

  if (idx.row(n) < idx.row(nPrev + 1)) {
    // Some later entry sits higher: shift the tail of the strip one box and
    // drop the descent entry into the vacated spot.
    int nPrime = nPrev + 2;
    while (idx.row(nPrime) >= idx.row(nPrev + 1)) ++nPrime;
    std::vector<int> cycle;
    for (int v = nPrime; v >= nPrev; --v) cycle.push_back(v);
    apply_cycle(rows, idx, cycle);
    return rows;
  }

  // Entire strip lies on the bottom row, which forces lambda to be a
  // rectangle.  Rotate a longer cycle through the rows above.
  for (int v : lam)
    if (v != lam[0]) throw std::logic_error("witness: rectangle case on a non-rectangle");

  std::vector<int> sums(static_cast<size_t>(l), 0);  // sums[t] = alpha_1 + ... + alpha_{t+1}
  std::partial_sum(alpha.begin(), alpha.end(), sums.begin());
  std::set<int> descentValues(sums.begin(), sums.end() - 1);

  int bottom = lRows - 1;
  int big = -1;  // largest non-descent entry above the bottom row
  for (int v = n; v >= 1; --v)
    if (idx.row(v) < bottom && !descentValues.count(v)) { big = v; break; }
  if (big < 0 || !descentValues.count(big + 1))
    throw std::logic_error("witness: rectangle cycle anchor not found");
  int j = static_cast<int>(std::distance(sums.begin(), std::find(sums.begin(), sums.end(), big + 1)));  // 0-based: N_{j+1} == big+1
  int nJ = big + 1;
  int prevSum = j == 0 ? 0 : sums[static_cast<size_t>(j) - 1];
  int small = nJ;  // smallest entry above prevSum living above the bottom row
  for (int v = prevSum + 1; v <= nJ; ++v)
    if (idx.row(v) < bottom) { small = v; break; }

  std::vector<int> cycle;
  for (int v = nJ + 1; v <= nPrev; ++v)
    if (!descentValues.count(v) || v == nPrev) cycle.push_back(v);
  for (int t = l - 3; t >= j + 1; --t) cycle.push_back(sums[static_cast<size_t>(t)]);
  for (int v = nJ; v >= small; --v) cycle.push_back(v);
  apply_cycle(rows, idx, cycle);
  return rows;
}

}  // namespace

Filling construct_witness_syt(const Composition& alpha, const Partition& lambda) {
  int n = alpha.size();
  int l = alpha.length();
  Ribbon rib{alpha};
  if (lambda.size() != n)
    throw std::invalid_argument("witness: |lambda| = " + std::to_string(lambda.size()) +
                                " but |alpha| = " + std::to_string(n));
  if (!is_equitable(rib))
    throw std::invalid_argument("witness: the ribbon of alpha is not equitable");
  if (lambda.length() > l)
    throw std::invalid_argument("witness: lambda has " + std::to_string(lambda.length()) +
                                " rows, ribbon only " + std::to_string(l));
  if (lambda.part(0) > n - l + 1)
    throw std::invalid_argument("witness: lambda_1 = " + std::to_string(lambda.part(0)) +
                                " exceeds the ribbon column count " + std::to_string(n - l + 1));

  auto shape = rib.to_skew();
  int a = rows_of(shape).parts().back();
  int b = cols_of(shape).parts().back();
  bool tailOne = false;
  for (int i = 1; i < l; ++i) tailOne |= alpha.parts()[static_cast<size_t>(i)] == 1;

  Rows rows;
  if (a < b || tailOne) {
    // Work with the conjugate ribbon on the transposed shape; transposing the
    // tableau back complements the descent set, which is exactly S(alpha).
    Ribbon conj = rib.conjugated();
    rows = transpose_rows(witness_core(conj.rows().parts(), transpose(lambda).parts()));
  } else {
    rows = witness_core(alpha.parts(), lambda.parts());
  }

  Filling t(SkewShape(lambda, Partition()), std::move(rows));
  if (!t.is_standard() || descent_set(t) != alpha.descent_positions())
    throw std::logic_error("witness: construction produced a wrong tableau");
  return t;
}

// ---------------------------------------------------------------------------
// Verification sweeps.

namespace {

std::string shapes_to_string(const std::vector<SkewShape>& v) {
  std::string s;
  for (const auto& a : v) {
    if (!s.empty()) s += " ";
    s += a.to_string();
  }
  return s;
}

std::set<SkewShape, SkewShapeOrder> as_set(const std::vector<SkewShape>& v) {
  return {v.begin(), v.end()};
}

}  // namespace

Report verify_support_formula(int n) {
  Report rep;
  rep.check = "support-formula";
  rep.n = n;
  for (int l = 1; l <= n; ++l) {
    auto predicted = predicted_support(n, l);
    std::set<Partition, PartitionOrder> want(predicted.begin(), predicted.end());
    for (const auto& r : enumerate_equitable(n, l)) {
      auto got = support_of(r.to_skew());
      std::set<Partition, PartitionOrder> gotSet(got.begin(), got.end());
      if (gotSet != want)
        rep.fail("support of rib(" + r.rows().to_string() + ") differs from the predicted set");
    }
  }
  return rep;
}

Report verify_theorem_main(int n, int jobs) {
  Report rep;
  rep.check = "main";
  rep.n = n;
  auto family = build_poset(n, Order::support, jobs);
  auto maximal = maximal_connected(family);

  if (static_cast<int>(maximal.size()) != n)
    rep.fail("expected " + std::to_string(n) + " maximal connected classes, found " +
             std::to_string(maximal.size()));

  std::map<int, int> byRows;  // row count -> class index
  for (int idx : maximal) {
    int rows = family.elements[static_cast<size_t>(idx)].rows.length();
    if (byRows.count(rows))
      rep.fail("two maximal connected classes with " + std::to_string(rows) + " rows");
    byRows[rows] = idx;
  }
  for (int l = 1; l <= n; ++l) {
    auto it = byRows.find(l);
    if (it == byRows.end()) {
      rep.fail("no maximal connected class with " + std::to_string(l) + " rows");
      continue;
    }
    std::vector<SkewShape> expected;
    for (const auto& r : enumerate_equitable(n, l)) expected.push_back(r.to_skew());
    const auto& members = family.elements[static_cast<size_t>(it->second)].members;
    if (as_set(members) != as_set(expected))
      rep.fail("maximal class with " + std::to_string(l) + " rows is {" + shapes_to_string(members) +
               "}, expected the equitable ribbons {" + shapes_to_string(expected) + "}");
  }

  auto sup = verify_support_formula(n);
  if (!sup.pass) {
    rep.pass = false;
    rep.counterexamples.insert(rep.counterexamples.end(), sup.counterexamples.begin(),
                               sup.counterexamples.end());
  }
  return rep;
}

Ribbon conjectured_max_ribbon(int n, int l) {
  if (l < 1 || l > n) throw std::invalid_argument("need 1 <= l <= n");
  int w = n - l + 1;
  // Grid box (i, j), rows from the top: x in [j, j+1], y in [l-1-i, l-i].
  // The segment runs from (0, 0) to (w, l); all tests are exact in integers.
  std::vector<std::pair<int, int>> span;  // per row: [start, end)
  for (int i = 0; i < l; ++i) {
    int lo = -1, hi = -1;
    for (int j = 0; j < w; ++j) {
      bool interior = l * (j + 1) > w * (l - 1 - i) && l * j < w * (l - i);
      bool corner = l * j == w * (l - i);
      if (interior || corner) {
        if (lo < 0) lo = j;
        if (hi >= 0 && j != hi) throw std::logic_error("billiard ribbon: row not contiguous");
        hi = j + 1;
      }
    }
    if (lo < 0) throw std::logic_error("billiard ribbon: empty row");
    span.emplace_back(lo, hi);
  }
  std::vector<int> outer, inner;
  int boxes = 0;
  for (auto& [s, e] : span) {
    inner.push_back(s);
    outer.push_back(e);
    boxes += e - s;
  }
  while (!inner.empty() && inner.back() == 0) inner.pop_back();
  if (boxes != n) throw std::logic_error("billiard ribbon: box count is not n");
  SkewShape shape{Partition(std::move(outer)), Partition(std::move(inner))};
  auto rib = Ribbon::from_skew(shape);
  if (!rib || !is_equitable(*rib)) throw std::logic_error("billiard ribbon: not an equitable ribbon");
  return *rib;
}

Report verify_conjecture_max(int n, int jobs) {
  Report rep;
  rep.check = "max";
  rep.n = n;
  std::vector<EquivalenceClass> connected;
  for (auto& c : schur_classes(n))
    if (c.connected) connected.push_back(std::move(c));
  auto family = build_poset(std::move(connected), Order::schur, n, jobs);

  std::vector<int> maximal;
  int m = static_cast<int>(family.elements.size());
  for (int i = 0; i < m; ++i) {
    bool top = true;
    for (int j = 0; j < m && top; ++j)
      if (j != i && family.less_eq(i, j)) top = false;
    if (top) maximal.push_back(i);
  }

  if (static_cast<int>(maximal.size()) != n)
    rep.fail("expected " + std::to_string(n) + " maximal connected classes, found " +
             std::to_string(maximal.size()));
  std::map<int, int> byRows;
  for (int idx : maximal) {
    int rows = family.elements[static_cast<size_t>(idx)].rows.length();
    if (byRows.count(rows)) rep.fail("two maximal classes with " + std::to_string(rows) + " rows");
    byRows[rows] = idx;
  }
  for (int l = 1; l <= n; ++l) {
    auto it = byRows.find(l);
    if (it == byRows.end()) {
      rep.fail("no maximal class with " + std::to_string(l) + " rows");
      continue;
    }
    Ribbon r = conjectured_max_ribbon(n, l);
    std::set<SkewShape, SkewShapeOrder> expected{r.to_skew(), r.rotated().to_skew()};
    if (as_set(family.elements[static_cast<size_t>(it->second)].members) != expected)
      rep.fail("maximal class with " + std::to_string(l) + " rows is not the billiard ribbon rib(" +
               r.rows().to_string() + ") with its rotation");
  }
  return rep;
}

bool has_full_support(const SkewShape& a) {
  const auto& f = lr_expand(a);
  Partition lo = rows_of(a);
  Partition hi = transpose(cols_of(a));
  for (const auto& p : enumerate_partitions(a.size())) {
    bool inInterval = dominance_leq(lo, p) && dominance_leq(p, hi);
    if (inInterval != (f.coefficient(p) > 0)) return false;
  }
  return true;
}

Report verify_conjecture_minrib(const Partition& lam) {
  Report rep;
  rep.check = "minrib";
  rep.n = lam.size();
  if (lam.empty()) throw std::invalid_argument("minrib: partition must be nonempty");

  std::vector<int> parts = lam.parts();
  std::sort(parts.begin(), parts.end());
  std::vector<std::vector<SkewShape>> classes;
  {
    std::map<std::string, std::vector<SkewShape>> groups;
    do {
      SkewShape shape = Ribbon{Composition(parts)}.to_skew();
      std::ostringstream key;
      for (const auto& [p, c] : lr_expand(shape).terms()) key << p.to_string() << '*' << c << ';';
      groups[key.str()].push_back(shape);
    } while (std::next_permutation(parts.begin(), parts.end()));
    for (auto& [key, members] : groups) {
      std::sort(members.begin(), members.end(), SkewShapeOrder{});
      members.erase(std::unique(members.begin(), members.end()), members.end());
      classes.push_back(std::move(members));
    }
  }

  int m = static_cast<int>(classes.size());
  std::vector<int> minimalIdx;
  for (int i = 0; i < m; ++i) {
    bool minimal = true;
    for (int j = 0; j < m && minimal; ++j)
      if (j != i && diff_schur_positive(classes[static_cast<size_t>(i)].front(),
                                        classes[static_cast<size_t>(j)].front()))
        minimal = false;
    if (minimal) minimalIdx.push_back(i);
  }

  std::vector<int> interleaved;
  for (int i = 0; i < lam.length(); i += 2) interleaved.push_back(lam.part(i));
  for (int i = lam.length() - (lam.length() % 2 == 0 ? 1 : 2); i >= 1; i -= 2)
    interleaved.push_back(lam.part(i));
  SkewShape predicted = Ribbon{Composition(interleaved)}.to_skew();

  if (minimalIdx.size() != 1) {
    rep.fail("rows " + lam.to_string() + ": " + std::to_string(minimalIdx.size()) +
             " minimal classes instead of one");
    return rep;
  }
  const auto& members = classes[static_cast<size_t>(minimalIdx.front())];
  if (!std::count(members.begin(), members.end(), predicted))
    rep.fail("rows " + lam.to_string() + ": minimal class {" + shapes_to_string(members) +
             "} does not contain " + predicted.to_string());
  return rep;
}

std::string boundary_word(const Ribbon& r) {
  const auto& alpha = r.rows().parts();
  int l = r.num_rows();
  std::string w(static_cast<size_t>(alpha[static_cast<size_t>(l) - 1]), 'h');
  for (int i = l - 2; i >= 0; --i) {
    w += 'v';
    w += std::string(static_cast<size_t>(alpha[static_cast<size_t>(i)] - 1), 'h');
  }
  w += 'v';
  return w;
}

Report verify_lemma_extreme(int n, int jobs) {
  Report rep;
  rep.check = "extreme";
  rep.n = n;
  auto shapes = enumerate_skew_shapes(n);
  std::vector<std::string> faults(shapes.size());
  parallel_for(static_cast<int>(shapes.size()), jobs, [&](int i) {
    const SkewShape& a = shapes[static_cast<size_t>(i)];
    const auto& f = lr_expand(a);
    Partition lo = rows_of(a);
    Partition hi = transpose(cols_of(a));
    for (const auto& [p, coeff] : f.terms()) {
      if (!dominance_leq(lo, p) || !dominance_leq(p, hi)) {
        faults[static_cast<size_t>(i)] = a.to_string() + ": " + p.to_string() + " outside the interval";
        return;
      }
    }
    if (f.coefficient(lo) != 1 || f.coefficient(hi) != 1)
      faults[static_cast<size_t>(i)] = a.to_string() + ": interval endpoint coefficient is not 1";
  });
  for (auto& s : faults)
    if (!s.empty()) rep.fail(std::move(s));
  return rep;
}

}  // namespace schurkit
