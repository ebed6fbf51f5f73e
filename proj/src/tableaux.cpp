#include "schurkit/tableaux.hpp"

#include <algorithm>
#include <functional>

namespace schurkit {

namespace {

std::vector<int> row_major(const Filling& t) {
  std::vector<int> flat;
  for (int i = 0; i < t.shape().num_rows(); ++i)
    flat.insert(flat.end(), t.row(i).begin(), t.row(i).end());
  return flat;
}

void sort_row_major(std::vector<Filling>& v) {
  std::sort(v.begin(), v.end(),
            [](const Filling& a, const Filling& b) { return row_major(a) < row_major(b); });
}

}  // namespace

Filling::Filling(SkewShape shape, std::vector<std::vector<int>> rows)
    : shape_(std::move(shape)), rows_(std::move(rows)) {
  if (static_cast<int>(rows_.size()) != shape_.num_rows())
    throw std::invalid_argument("filling row count does not match shape");
  for (int i = 0; i < shape_.num_rows(); ++i) {
    const auto& r = rows_[static_cast<size_t>(i)];
    if (static_cast<int>(r.size()) != shape_.row_end(i) - shape_.row_start(i))
      throw std::invalid_argument("filling row length does not match shape");
    for (size_t j = 0; j + 1 < r.size(); ++j)
      if (r[j] > r[j + 1]) throw std::invalid_argument("row entries must weakly increase");
  }
  for (int i = 0; i + 1 < shape_.num_rows(); ++i)
    for (int j = shape_.row_start(i); j < shape_.row_end(i); ++j)
      if (j >= shape_.row_start(i + 1) && j < shape_.row_end(i + 1) &&
          entry(i, j) >= entry(i + 1, j))
        throw std::invalid_argument("column entries must strictly increase");
}

std::vector<int> Filling::content() const {
  std::vector<int> c;
  for (const auto& r : rows_)
    for (int v : r) {
      if (v > static_cast<int>(c.size())) c.resize(static_cast<size_t>(v), 0);
      ++c[static_cast<size_t>(v) - 1];
    }
  return c;
}

bool Filling::is_standard() const {
  int n = shape_.size();
  std::vector<char> seen(static_cast<size_t>(n) + 1, 0);
  for (const auto& r : rows_)
    for (int v : r) {
      if (v < 1 || v > n || seen[static_cast<size_t>(v)]) return false;
      seen[static_cast<size_t>(v)] = 1;
    }
  return true;
}

std::vector<int> reverse_reading_word(const Filling& t) {
  std::vector<int> word;
  for (int i = 0; i < t.shape().num_rows(); ++i) {
    const auto& r = t.row(i);
    word.insert(word.end(), r.rbegin(), r.rend());
  }
  return word;
}

bool is_lattice(const std::vector<int>& word) {
  int maxv = 0;
  for (int v : word) maxv = std::max(maxv, v);
  std::vector<int> count(static_cast<size_t>(maxv) + 2, 0);
  for (int v : word) {
    ++count[static_cast<size_t>(v)];
    if (v > 1 && count[static_cast<size_t>(v)] > count[static_cast<size_t>(v) - 1]) return false;
  }
  return true;
}

std::vector<Filling> enumerate_lr_fillings(const SkewShape& a) {
  return enumerate_lr_fillings(a, {});
}

std::vector<Filling> enumerate_lr_fillings(const SkewShape& a,
                                           const std::vector<int>& max_content) {
  int n = a.size();
  int l = a.num_rows();
  std::vector<std::vector<int>> grid(static_cast<size_t>(l));
  for (int i = 0; i < l; ++i)
    grid[static_cast<size_t>(i)].assign(static_cast<size_t>(a.row_end(i) - a.row_start(i)), 0);

  auto cap = [&](int v) {
    if (max_content.empty()) return n;
    return v <= static_cast<int>(max_content.size()) ? max_content[static_cast<size_t>(v) - 1] : 0;
  };

  // Cells in reverse reading word order; the ballot condition becomes a
  // running prefix check, and row/column neighbours are already filled.
  std::vector<std::pair<int, int>> cells;  // (row, absolute column)
  for (int i = 0; i < l; ++i)
    for (int j = a.row_end(i) - 1; j >= a.row_start(i); --j) cells.emplace_back(i, j);

  std::vector<int> count(static_cast<size_t>(n) + 2, 0);
  std::vector<Filling> out;
  std::function<void(size_t)> rec = [&](size_t pos) {
    if (pos == cells.size()) {
      out.emplace_back(a, grid);
      return;
    }
    auto [i, j] = cells[pos];
    int lo = 1, hi = std::min(i + 1, n);  // a ballot entry in row i is at most i+1
    if (j + 1 < a.row_end(i)) hi = std::min(hi, grid[static_cast<size_t>(i)][static_cast<size_t>(j + 1 - a.row_start(i))]);
    if (i > 0 && j >= a.row_start(i - 1) && j < a.row_end(i - 1))
      lo = std::max(lo, grid[static_cast<size_t>(i) - 1][static_cast<size_t>(j - a.row_start(i - 1))] + 1);
    for (int v = lo; v <= hi; ++v) {
      if (count[static_cast<size_t>(v)] >= cap(v)) continue;
      if (v > 1 && count[static_cast<size_t>(v)] + 1 > count[static_cast<size_t>(v) - 1]) continue;
      ++count[static_cast<size_t>(v)];
      grid[static_cast<size_t>(i)][static_cast<size_t>(j - a.row_start(i))] = v;
      rec(pos + 1);
      --count[static_cast<size_t>(v)];
    }
  };
  rec(0);
  sort_row_major(out);
  return out;
}

std::vector<int> descent_set(const Filling& t) {
  if (!t.is_standard()) throw std::invalid_argument("descent set requires a standard filling");
  int n = t.shape().size();
  std::vector<int> rowOf(static_cast<size_t>(n) + 1, 0);
  for (int i = 0; i < t.shape().num_rows(); ++i)
    for (int v : t.row(i)) rowOf[static_cast<size_t>(v)] = i;
  std::vector<int> des;
  for (int v = 1; v < n; ++v)
    if (rowOf[static_cast<size_t>(v) + 1] > rowOf[static_cast<size_t>(v)]) des.push_back(v);
  return des;
}

std::vector<Filling> enumerate_syt_with_descents(const Partition& shape,
                                                 const std::vector<int>& descents) {
  int n = shape.size();
  for (size_t k = 0; k < descents.size(); ++k) {
    if (descents[k] < 1 || descents[k] >= n)
      throw std::invalid_argument("descents must lie in 1..n-1");
    if (k > 0 && descents[k - 1] >= descents[k])
      throw std::invalid_argument("descents must strictly increase");
  }
  std::vector<char> isDescent(static_cast<size_t>(n) + 1, 0);
  for (int d : descents) isDescent[static_cast<size_t>(d)] = 1;

  int l = shape.length();
  std::vector<std::vector<int>> grid(static_cast<size_t>(l));
  for (int i = 0; i < l; ++i) grid[static_cast<size_t>(i)].assign(static_cast<size_t>(shape.part(i)), 0);
  std::vector<int> filled(static_cast<size_t>(l), 0);  // boxes used per row

  std::vector<Filling> out;
  std::function<void(int, int)> place = [&](int value, int prevRow) {
    if (value > n) {
      out.emplace_back(SkewShape(shape, Partition()), grid);
      return;
    }
    for (int i = 0; i < l; ++i) {
      if (filled[static_cast<size_t>(i)] >= shape.part(i)) continue;
      if (i > 0 && filled[static_cast<size_t>(i) - 1] <= filled[static_cast<size_t>(i)]) continue;
      if (value > 1) {
        bool below = i > prevRow;
        if (below != static_cast<bool>(isDescent[static_cast<size_t>(value) - 1])) continue;
      }
      grid[static_cast<size_t>(i)][static_cast<size_t>(filled[static_cast<size_t>(i)])] = value;
      ++filled[static_cast<size_t>(i)];
      place(value + 1, i);
      --filled[static_cast<size_t>(i)];
    }
  };
  if (n > 0) place(1, -1);
  sort_row_major(out);
  return out;
}

}  // namespace schurkit
