#include "schurkit/posets.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <map>
#include <sstream>
#include <thread>

namespace schurkit {

void parallel_for(int count, int jobs, const std::function<void(int)>& fn) {
  if (jobs <= 1 || count <= 1) {
    for (int i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<int> next{0};
  auto worker = [&] {
    for (int i = next.fetch_add(1); i < count; i = next.fetch_add(1)) fn(i);
  };
  std::vector<std::thread> pool;
  int threads = std::min(jobs, count);
  pool.reserve(static_cast<size_t>(threads));
  for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
}

namespace {

EquivalenceClass make_class(std::vector<SkewShape> members) {
  std::sort(members.begin(), members.end(), SkewShapeOrder{});
  EquivalenceClass c;
  const SkewShape& rep = members.front();
  c.rows = rows_of(rep);
  c.cols = cols_of(rep);
  c.components = static_cast<int>(components_of(rep).size());
  c.connected = c.components == 1;
  c.ribbon = is_ribbon(rep);
  c.members = std::move(members);
  return c;
}

std::vector<EquivalenceClass> classify(int n, Order order) {
  std::map<std::string, std::vector<SkewShape>> groups;
  for (const auto& shape : enumerate_skew_shapes(n)) {
    const auto& f = lr_expand(shape);
    std::ostringstream key;
    for (const auto& [p, c] : f.terms()) {
      key << p.to_string();
      if (order == Order::schur) key << '*' << c;
      key << ';';
    }
    groups[key.str()].push_back(shape);
  }
  std::vector<EquivalenceClass> classes;
  classes.reserve(groups.size());
  for (auto& [key, members] : groups) classes.push_back(make_class(std::move(members)));
  std::sort(classes.begin(), classes.end(), [](const EquivalenceClass& a, const EquivalenceClass& b) {
    return SkewShapeOrder{}(a.representative(), b.representative());
  });
  return classes;
}

}  // namespace

std::vector<EquivalenceClass> schur_classes(int n) { return classify(n, Order::schur); }
std::vector<EquivalenceClass> support_classes(int n) { return classify(n, Order::support); }

OrderedFamily build_poset(std::vector<EquivalenceClass> classes, Order order, int n, int jobs) {
  OrderedFamily f;
  f.n = n;
  f.order = order;
  f.elements = std::move(classes);
  int m = static_cast<int>(f.elements.size());
  f.leq.assign(static_cast<size_t>(m), std::vector<char>(static_cast<size_t>(m), 0));

  // Warm the expansion memo so the comparison pass is read-mostly.
  parallel_for(m, jobs, [&](int i) { lr_expand(f.elements[static_cast<size_t>(i)].representative()); });

  parallel_for(m, jobs, [&](int i) {
    const SkewShape& a = f.elements[static_cast<size_t>(i)].representative();
    for (int j = 0; j < m; ++j) {
      const SkewShape& b = f.elements[static_cast<size_t>(j)].representative();
      bool le = order == Order::schur ? diff_schur_positive(b, a) : support_contained(a, b);
      f.leq[static_cast<size_t>(i)][static_cast<size_t>(j)] = le ? 1 : 0;
    }
  });

  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      if (i != j && f.less_eq(i, j) && f.less_eq(j, i))
        throw std::logic_error("relation not antisymmetric; classes do not match the order");

  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      if (i == j || !f.less_eq(i, j)) continue;
      bool cover = true;
      for (int k = 0; k < m && cover; ++k)
        if (k != i && k != j && f.less_eq(i, k) && f.less_eq(k, j)) cover = false;
      if (cover) f.covers.emplace_back(i, j);
    }
  }
  std::sort(f.covers.begin(), f.covers.end());
  return f;
}

OrderedFamily build_poset(int n, Order order, int jobs) {
  return build_poset(order == Order::schur ? schur_classes(n) : support_classes(n), order, n, jobs);
}

std::vector<int> maximal_connected(const OrderedFamily& f) {
  std::vector<int> out;
  int m = static_cast<int>(f.elements.size());
  for (int i = 0; i < m; ++i) {
    if (!f.elements[static_cast<size_t>(i)].connected) continue;
    bool maximal = true;
    for (int j = 0; j < m && maximal; ++j)
      if (j != i && f.elements[static_cast<size_t>(j)].connected && f.less_eq(i, j)) maximal = false;
    if (maximal) out.push_back(i);
  }
  return out;
}

bool is_graded(const OrderedFamily& f) {
  int m = static_cast<int>(f.elements.size());
  std::vector<std::vector<int>> up(static_cast<size_t>(m));
  for (auto& [lo, hi] : f.covers) up[static_cast<size_t>(lo)].push_back(hi);

  // Topological order: sort by number of elements below.
  std::vector<int> belowCount(static_cast<size_t>(m), 0);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      if (i != j && f.less_eq(j, i)) ++belowCount[static_cast<size_t>(i)];
  std::vector<int> topo(static_cast<size_t>(m));
  for (int i = 0; i < m; ++i) topo[static_cast<size_t>(i)] = i;
  std::sort(topo.begin(), topo.end(),
            [&](int a, int b) { return belowCount[static_cast<size_t>(a)] < belowCount[static_cast<size_t>(b)]; });

  std::vector<int> shortest(static_cast<size_t>(m)), longest(static_cast<size_t>(m));
  for (int x = 0; x < m; ++x) {
    std::fill(shortest.begin(), shortest.end(), -1);
    std::fill(longest.begin(), longest.end(), -1);
    shortest[static_cast<size_t>(x)] = longest[static_cast<size_t>(x)] = 0;
    for (int u : topo) {
      if (shortest[static_cast<size_t>(u)] < 0) continue;
      for (int v : up[static_cast<size_t>(u)]) {
        int s = shortest[static_cast<size_t>(u)] + 1;
        int g = longest[static_cast<size_t>(u)] + 1;
        if (shortest[static_cast<size_t>(v)] < 0 || s < shortest[static_cast<size_t>(v)])
          shortest[static_cast<size_t>(v)] = s;
        if (g > longest[static_cast<size_t>(v)]) longest[static_cast<size_t>(v)] = g;
      }
    }
    for (int y = 0; y < m; ++y)
      if (y != x && f.less_eq(x, y) && shortest[static_cast<size_t>(y)] != longest[static_cast<size_t>(y)])
        return false;
  }
  return true;
}

bool is_join_semilattice(const OrderedFamily& f) {
  int m = static_cast<int>(f.elements.size());
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) {
      std::vector<int> ub;
      for (int k = 0; k < m; ++k)
        if (f.less_eq(i, k) && f.less_eq(j, k)) ub.push_back(k);
      bool hasJoin = false;
      for (int cand : ub) {
        bool least = true;
        for (int other : ub)
          if (!f.less_eq(cand, other)) { least = false; break; }
        if (least) { hasJoin = true; break; }
      }
      if (!hasJoin) return false;
    }
  }
  return true;
}

std::string to_dot(const OrderedFamily& f) {
  std::ostringstream os;
  os << "digraph poset {\n  rankdir=BT;\n  node [shape=box];\n";
  for (size_t i = 0; i < f.elements.size(); ++i)
    os << "  n" << i << " [label=\"" << f.elements[i].representative().to_string() << "\"];\n";
  for (auto& [lo, hi] : f.covers) os << "  n" << lo << " -> n" << hi << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace schurkit
