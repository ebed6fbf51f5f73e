#include "schurkit/shapes.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

namespace schurkit {

namespace {

std::string parts_to_string(const std::vector<int>& parts) {
  if (parts.empty()) return "-";
  bool compact = std::all_of(parts.begin(), parts.end(), [](int p) { return p <= 9; });
  std::ostringstream os;
  for (size_t i = 0; i < parts.size(); ++i) {
    if (!compact && i > 0) os << ',';
    os << parts[i];
  }
  return os.str();
}

}  // namespace

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 1) throw std::invalid_argument("partition parts must be positive");
    if (i > 0 && parts_[i - 1] < parts_[i])
      throw std::invalid_argument("partition parts must be weakly decreasing");
  }
}

int Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

std::string Partition::to_string() const { return parts_to_string(parts_); }

bool seq_order_less(const std::vector<int>& a, const std::vector<int>& b) {
  size_t n = std::min(a.size(), b.size());
  for (size_t i = 0; i < n; ++i)
    if (a[i] != b[i]) return a[i] > b[i];
  return a.size() < b.size();
}

Partition transpose(const Partition& p) {
  std::vector<int> cols;
  cols.reserve(static_cast<size_t>(p.part(0)));
  for (int j = 0; j < p.part(0); ++j) {
    int len = 0;
    while (len < p.length() && p.part(len) > j) ++len;
    cols.push_back(len);
  }
  return Partition(std::move(cols));
}

bool contains(const Partition& outer, const Partition& inner) {
  if (inner.length() > outer.length()) return false;
  for (int i = 0; i < inner.length(); ++i)
    if (inner.part(i) > outer.part(i)) return false;
  return true;
}

bool dominance_leq(const Partition& p, const Partition& q) {
  if (p.size() != q.size())
    throw std::invalid_argument("dominance order compares partitions of equal size");
  int rows = std::max(p.length(), q.length());
  long long sp = 0, sq = 0;
  for (int i = 0; i < rows; ++i) {
    sp += p.part(i);
    sq += q.part(i);
    if (sp > sq) return false;
  }
  return true;
}

std::vector<Partition> enumerate_partitions(int n) {
  if (n < 0) throw std::invalid_argument("enumerate_partitions: n must be nonnegative");
  std::vector<Partition> out;
  std::vector<int> acc;
  std::function<void(int, int)> rec = [&](int rest, int maxPart) {
    if (rest == 0) {
      out.emplace_back(acc);
      return;
    }
    for (int p = std::min(rest, maxPart); p >= 1; --p) {
      acc.push_back(p);
      rec(rest - p, p);
      acc.pop_back();
    }
  };
  rec(n, n);
  return out;
}

Composition::Composition(std::vector<int> parts) : parts_(std::move(parts)) {
  if (parts_.empty()) throw std::invalid_argument("composition must be nonempty");
  for (int p : parts_)
    if (p < 1) throw std::invalid_argument("composition parts must be positive");
}

int Composition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

std::vector<int> Composition::descent_positions() const {
  std::vector<int> s;
  int acc = 0;
  for (size_t i = 0; i + 1 < parts_.size(); ++i) {
    acc += parts_[i];
    s.push_back(acc);
  }
  return s;
}

Composition Composition::reversed() const {
  std::vector<int> r(parts_.rbegin(), parts_.rend());
  return Composition(std::move(r));
}

std::string Composition::to_string() const { return parts_to_string(parts_); }

std::vector<Composition> enumerate_compositions(int n) {
  if (n < 1) throw std::invalid_argument("enumerate_compositions: n must be positive");
  std::vector<Composition> out;
  std::vector<int> acc;
  std::function<void(int)> rec = [&](int rest) {
    if (rest == 0) {
      out.emplace_back(acc);
      return;
    }
    for (int p = rest; p >= 1; --p) {
      acc.push_back(p);
      rec(rest - p);
      acc.pop_back();
    }
  };
  rec(n);
  return out;
}

Composition composition_from_descents(const std::vector<int>& descents, int n) {
  std::vector<int> parts;
  int prev = 0;
  for (int d : descents) {
    if (d <= prev || d >= n) throw std::invalid_argument("descent set must increase inside 1..n-1");
    parts.push_back(d - prev);
    prev = d;
  }
  parts.push_back(n - prev);
  return Composition(std::move(parts));
}

SkewShape::SkewShape(Partition outer, Partition inner) {
  std::vector<int> out = outer.parts();
  std::vector<int> in = inner.parts();
  in.resize(out.size(), 0);
  if (inner.length() > outer.length() || !contains(outer, inner))
    throw std::invalid_argument("inner partition must fit inside outer");

  // Drop empty rows.
  std::vector<std::pair<int, int>> rows;  // (start, end)
  for (size_t i = 0; i < out.size(); ++i)
    if (out[i] > in[i]) rows.emplace_back(in[i], out[i]);
  if (rows.empty()) throw std::invalid_argument("skew shape must have at least one box");

  // Drop empty columns: a column survives iff some row covers it.
  int width = rows.front().second;
  for (auto& [s, e] : rows) width = std::max(width, e);
  std::vector<char> used(static_cast<size_t>(width), 0);
  for (auto& [s, e] : rows)
    for (int j = s; j < e; ++j) used[static_cast<size_t>(j)] = 1;
  std::vector<int> shift(static_cast<size_t>(width) + 1, 0);
  for (int j = 0; j < width; ++j)
    shift[static_cast<size_t>(j) + 1] = shift[static_cast<size_t>(j)] + (used[static_cast<size_t>(j)] ? 0 : 1);

  std::vector<int> newOuter, newInner;
  for (auto& [s, e] : rows) {
    newInner.push_back(s - shift[static_cast<size_t>(s)]);
    newOuter.push_back(e - shift[static_cast<size_t>(e)]);
  }
  while (!newInner.empty() && newInner.back() == 0) newInner.pop_back();
  outer_ = Partition(std::move(newOuter));
  inner_ = Partition(std::move(newInner));
}

int SkewShape::size() const { return outer_.size() - inner_.size(); }

std::string SkewShape::to_string() const {
  std::string s = outer_.to_string();
  if (!inner_.empty()) s += "/" + inner_.to_string();
  return s;
}

bool SkewShapeOrder::operator()(const SkewShape& a, const SkewShape& b) const {
  if (a.outer() != b.outer()) return seq_order_less(a.outer().parts(), b.outer().parts());
  return seq_order_less(a.inner().parts(), b.inner().parts());
}

SkewShape transpose(const SkewShape& a) {
  int w = a.num_cols();
  std::vector<int> newOuter, newInner;
  for (int j = 0; j < w; ++j) {
    int top = 0;
    while (top < a.num_rows() && a.row_start(top) > j) ++top;
    int bot = top;
    while (bot < a.num_rows() && a.row_end(bot) > j) ++bot;
    newInner.push_back(top);
    newOuter.push_back(bot);
  }
  while (!newInner.empty() && newInner.back() == 0) newInner.pop_back();
  return SkewShape(Partition(std::move(newOuter)), Partition(std::move(newInner)));
}

SkewShape rotate180(const SkewShape& a) {
  int w = a.num_cols();
  int l = a.num_rows();
  std::vector<int> newOuter, newInner;
  for (int i = l - 1; i >= 0; --i) {
    newInner.push_back(w - a.row_end(i));
    newOuter.push_back(w - a.row_start(i));
  }
  while (!newInner.empty() && newInner.back() == 0) newInner.pop_back();
  return SkewShape(Partition(std::move(newOuter)), Partition(std::move(newInner)));
}

Partition rows_of(const SkewShape& a) {
  std::vector<int> lens;
  for (int i = 0; i < a.num_rows(); ++i) lens.push_back(a.row_end(i) - a.row_start(i));
  std::sort(lens.begin(), lens.end(), std::greater<int>());
  return Partition(std::move(lens));
}

Partition cols_of(const SkewShape& a) { return rows_of(transpose(a)); }

std::vector<int> overlap_partition(const SkewShape& a, int k) {
  if (k < 1) throw std::invalid_argument("overlap window must be positive");
  std::vector<int> ov;
  for (int i = 0; i + k <= a.num_rows(); ++i)
    ov.push_back(std::max(0, a.row_end(i + k - 1) - a.row_start(i)));
  std::sort(ov.begin(), ov.end(), std::greater<int>());
  return ov;
}

bool is_connected(const SkewShape& a) {
  auto ov = overlap_partition(a, 2);
  return ov.empty() || ov.back() >= 1;
}

bool is_ribbon(const SkewShape& a) {
  for (int v : overlap_partition(a, 2))
    if (v != 1) return false;
  return true;
}

std::vector<SkewShape> components_of(const SkewShape& a) {
  std::vector<SkewShape> comps;
  int i = 0;
  while (i < a.num_rows()) {
    int j = i;
    while (j + 1 < a.num_rows() && a.row_end(j + 1) > a.row_start(j)) ++j;
    std::vector<int> out, in;
    for (int r = i; r <= j; ++r) {
      out.push_back(a.row_end(r));
      in.push_back(a.row_start(r));
    }
    while (!in.empty() && in.back() == 0) in.pop_back();
    comps.emplace_back(Partition(std::move(out)), Partition(std::move(in)));
    i = j + 1;
  }
  return comps;
}

Ribbon::Ribbon(Composition rows) : rows_(std::move(rows)) {}

SkewShape Ribbon::to_skew() const {
  const auto& alpha = rows_.parts();
  int l = rows_.length();
  std::vector<int> start(static_cast<size_t>(l)), end(static_cast<size_t>(l));
  start[static_cast<size_t>(l) - 1] = 0;
  end[static_cast<size_t>(l) - 1] = alpha[static_cast<size_t>(l) - 1];
  for (int i = l - 2; i >= 0; --i) {
    start[static_cast<size_t>(i)] = end[static_cast<size_t>(i) + 1] - 1;
    end[static_cast<size_t>(i)] = start[static_cast<size_t>(i)] + alpha[static_cast<size_t>(i)];
  }
  std::vector<int> in(start);
  while (!in.empty() && in.back() == 0) in.pop_back();
  return SkewShape(Partition(std::move(end)), Partition(std::move(in)));
}

std::optional<Ribbon> Ribbon::from_skew(const SkewShape& a) {
  if (!is_ribbon(a)) return std::nullopt;
  std::vector<int> lens;
  for (int i = 0; i < a.num_rows(); ++i) lens.push_back(a.row_end(i) - a.row_start(i));
  return Ribbon(Composition(std::move(lens)));
}

Ribbon Ribbon::transposed() const {
  auto r = Ribbon::from_skew(transpose(to_skew()));
  return *r;  // transpose of a ribbon is a ribbon
}

Ribbon Ribbon::conjugated() const {
  std::vector<int> all;
  int n = size();
  auto des = rows_.descent_positions();
  size_t k = 0;
  for (int x = 1; x <= n - 1; ++x) {
    if (k < des.size() && des[k] == x) {
      ++k;
    } else {
      all.push_back(x);
    }
  }
  return Ribbon(composition_from_descents(all, n));
}

std::vector<Ribbon> enumerate_ribbons(int n) {
  std::vector<Ribbon> out;
  for (auto& c : enumerate_compositions(n)) out.emplace_back(c);
  return out;
}

namespace {

// Keep one placement per multiset of components: their listing order from the
// top row down must be weakly increasing.
bool components_in_listing_order(const SkewShape& a) {
  auto comps = components_of(a);
  SkewShapeOrder less;
  for (size_t i = 0; i + 1 < comps.size(); ++i)
    if (less(comps[i + 1], comps[i])) return false;
  return true;
}

}  // namespace

std::vector<SkewShape> enumerate_skew_shapes(int n) {
  if (n < 1) throw std::invalid_argument("enumerate_skew_shapes: n must be positive");
  std::vector<SkewShape> out;
  // Rows built bottom-up as [start, end) intervals.  Both endpoints weakly
  // increase upward, and a new row may not start past the end of the row
  // below (that would leave an empty column).
  std::vector<std::pair<int, int>> rows;
  std::function<void(int)> rec = [&](int used) {
    if (used == n) {
      std::vector<int> outParts, inParts;
      for (auto it = rows.rbegin(); it != rows.rend(); ++it) {
        inParts.push_back(it->first);
        outParts.push_back(it->second);
      }
      while (!inParts.empty() && inParts.back() == 0) inParts.pop_back();
      SkewShape shape{Partition(std::move(outParts)), Partition(std::move(inParts))};
      if (components_in_listing_order(shape)) out.push_back(shape);
      return;
    }
    int rest = n - used;
    auto [sBelow, eBelow] = rows.back();
    for (int s = sBelow; s <= eBelow; ++s) {
      int eMax = s + rest;
      for (int e = std::max(eBelow, s + 1); e <= eMax; ++e) {
        rows.emplace_back(s, e);
        rec(used + (e - s));
        rows.pop_back();
      }
    }
  };
  for (int len = 1; len <= n; ++len) {
    rows.emplace_back(0, len);
    rec(len);
    rows.pop_back();
  }
  SkewShapeOrder less;
  std::sort(out.begin(), out.end(), less);
  return out;
}

}  // namespace schurkit
