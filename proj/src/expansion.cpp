#include "schurkit/expansion.hpp"

#include <mutex>

namespace schurkit {

long long checked_add(long long a, long long b) {
  long long r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("coefficient overflow in addition");
  return r;
}

long long checked_mul(long long a, long long b) {
  long long r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("coefficient overflow in multiplication");
  return r;
}

long long SchurExpansion::coefficient(const Partition& p) const {
  auto it = terms_.find(p);
  return it == terms_.end() ? 0 : it->second;
}

void SchurExpansion::add_term(const Partition& p, long long coeff) {
  if (coeff < 0) throw std::invalid_argument("coefficients must be nonnegative");
  if (coeff == 0) return;
  if (p.size() != degree_) throw std::invalid_argument("term degree mismatch");
  auto [it, inserted] = terms_.emplace(p, coeff);
  if (!inserted) it->second = checked_add(it->second, coeff);
}

std::vector<Partition> SchurExpansion::support() const {
  std::vector<Partition> s;
  s.reserve(terms_.size());
  for (const auto& [p, c] : terms_) s.push_back(p);
  return s;
}

namespace {

SchurExpansion lr_expand_uncached(const SkewShape& a) {
  SchurExpansion f(a.size());
  for (const auto& t : enumerate_lr_fillings(a)) {
    auto c = t.content();
    while (!c.empty() && c.back() == 0) c.pop_back();
    f.add_term(Partition(std::move(c)), 1);
  }
  return f;
}

std::mutex memo_mutex;
std::map<SkewShape, const SchurExpansion*, SkewShapeOrder> memo;

}  // namespace

const SchurExpansion& lr_expand(const SkewShape& a) {
  {
    std::lock_guard<std::mutex> lock(memo_mutex);
    auto it = memo.find(a);
    if (it != memo.end()) return *it->second;
  }
  // Compute outside the lock; a racing duplicate computes the same value.
  auto* value = new SchurExpansion(lr_expand_uncached(a));
  std::lock_guard<std::mutex> lock(memo_mutex);
  auto [it, inserted] = memo.emplace(a, value);
  if (!inserted) delete value;
  return *it->second;
}

SchurExpansion ribbon_expand(const Composition& alpha) {
  int n = alpha.size();
  auto descents = alpha.descent_positions();
  SchurExpansion f(n);
  for (const auto& lambda : enumerate_partitions(n)) {
    auto count = enumerate_syt_with_descents(lambda, descents).size();
    if (count > 0) f.add_term(lambda, static_cast<long long>(count));
  }
  return f;
}

std::vector<Partition> support_of(const SkewShape& a) { return lr_expand(a).support(); }

long long lr_coefficient(const Partition& nu, const Partition& lambda, const Partition& mu) {
  if (!contains(nu, mu)) return 0;
  if (mu.size() + lambda.size() != nu.size()) return 0;
  if (mu == nu) return lambda.empty() ? 1 : 0;
  SkewShape shape(nu, mu);
  long long count = 0;
  for (const auto& t : enumerate_lr_fillings(shape, lambda.parts())) {
    auto c = t.content();
    while (!c.empty() && c.back() == 0) c.pop_back();
    if (Partition(std::move(c)) == lambda) count = checked_add(count, 1);
  }
  return count;
}

namespace {

// s_lambda s_mu as the skew Schur function of the two diagrams stacked
// corner to corner.
const SchurExpansion& basis_product(const Partition& lambda, const Partition& mu) {
  std::vector<int> out, in;
  int w = mu.part(0);
  for (int i = 0; i < lambda.length(); ++i) {
    out.push_back(lambda.part(i) + w);
    in.push_back(w);
  }
  for (int i = 0; i < mu.length(); ++i) out.push_back(mu.part(i));
  while (!in.empty() && in.back() == 0) in.pop_back();
  return lr_expand(SkewShape(Partition(std::move(out)), Partition(std::move(in))));
}

}  // namespace

SchurExpansion multiply(const SchurExpansion& f, const SchurExpansion& g) {
  SchurExpansion h(f.degree() + g.degree());
  for (const auto& [p, a] : f.terms()) {
    for (const auto& [q, b] : g.terms()) {
      long long ab = checked_mul(a, b);
      if (p.empty() && q.empty()) {
        h.add_term(Partition(), ab);
        continue;
      }
      if (p.empty()) {
        h.add_term(q, ab);
        continue;
      }
      if (q.empty()) {
        h.add_term(p, ab);
        continue;
      }
      for (const auto& [nu, c] : basis_product(p, q).terms())
        h.add_term(nu, checked_mul(ab, c));
    }
  }
  return h;
}

SchurExpansion omega(const SchurExpansion& f) {
  SchurExpansion g(f.degree());
  for (const auto& [p, c] : f.terms()) g.add_term(transpose(p), c);
  return g;
}

bool diff_schur_positive(const SkewShape& a, const SkewShape& b) {
  if (a.size() != b.size()) return false;
  const auto& fa = lr_expand(a);
  const auto& fb = lr_expand(b);
  for (const auto& [p, c] : fb.terms())
    if (fa.coefficient(p) < c) return false;
  return true;
}

bool support_contained(const SkewShape& b, const SkewShape& a) {
  if (a.size() != b.size()) return false;
  const auto& fa = lr_expand(a);
  const auto& fb = lr_expand(b);
  for (const auto& [p, c] : fb.terms())
    if (fa.coefficient(p) == 0) return false;
  return true;
}

}  // namespace schurkit
