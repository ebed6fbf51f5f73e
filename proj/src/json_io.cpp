#include "schurkit/json_io.hpp"

namespace schurkit {

std::vector<int> parse_parts(const std::string& text) {
  std::vector<int> parts;
  if (text.empty()) throw std::invalid_argument("empty literal");
  if (text.find(',') != std::string::npos) {
    size_t pos = 0;
    while (pos <= text.size()) {
      size_t comma = text.find(',', pos);
      std::string token = text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
      if (token.empty() || token.find_first_not_of("0123456789") != std::string::npos)
        throw std::invalid_argument("bad part '" + token + "' in '" + text + "'");
      parts.push_back(std::stoi(token));
      if (comma == std::string::npos) break;
      pos = comma + 1;
    }
  } else {
    for (char ch : text) {
      if (ch < '0' || ch > '9') throw std::invalid_argument(std::string("bad character '") + ch + "' in '" + text + "'");
      parts.push_back(ch - '0');
    }
  }
  return parts;
}

Partition parse_partition(const std::string& text) {
  if (text == "-") return Partition();
  return Partition(parse_parts(text));
}

Composition parse_composition(const std::string& text) { return Composition(parse_parts(text)); }

SkewShape parse_skew(const std::string& text) {
  size_t slash = text.find('/');
  if (slash == std::string::npos) return SkewShape(parse_partition(text), Partition());
  return SkewShape(parse_partition(text.substr(0, slash)), parse_partition(text.substr(slash + 1)));
}

ordered_json to_json(const Partition& p) { return ordered_json(p.parts()); }

ordered_json to_json(const SkewShape& a) {
  return ordered_json{{"outer", a.outer().parts()}, {"inner", a.inner().parts()}};
}

ordered_json to_json(const Ribbon& r) { return ordered_json{{"ribbon", r.rows().parts()}}; }

ordered_json to_json(const SchurExpansion& f) {
  ordered_json terms = ordered_json::array();
  for (const auto& [p, c] : f.terms())
    terms.push_back(ordered_json{{"partition", p.parts()}, {"coeff", c}});
  return ordered_json{{"degree", f.degree()}, {"terms", std::move(terms)}};
}

ordered_json to_json(const Filling& t) {
  ordered_json rows = ordered_json::array();
  for (int i = 0; i < t.shape().num_rows(); ++i) {
    ordered_json row = ordered_json::array();
    for (int j = 0; j < t.shape().row_start(i); ++j) row.push_back(nullptr);
    for (int v : t.row(i)) row.push_back(v);
    rows.push_back(std::move(row));
  }
  return ordered_json{{"shape", to_json(t.shape())}, {"rows", std::move(rows)}};
}

ordered_json to_json(const Report& r) {
  return ordered_json{
      {"check", r.check}, {"n", r.n}, {"pass", r.pass}, {"counterexamples", r.counterexamples}};
}

ordered_json to_json(const OrderedFamily& f) {
  ordered_json classes = ordered_json::array();
  for (const auto& c : f.elements) {
    ordered_json members = ordered_json::array();
    for (const auto& m : c.members) members.push_back(to_json(m));
    classes.push_back(ordered_json{{"members", std::move(members)}, {"connected", c.connected}});
  }
  ordered_json leq = ordered_json::array();
  int m = static_cast<int>(f.elements.size());
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      if (i != j && f.less_eq(i, j)) leq.push_back(ordered_json::array({i, j}));
  return ordered_json{{"n", f.n},
                      {"order", f.order == Order::schur ? "schur" : "support"},
                      {"classes", std::move(classes)},
                      {"leq", std::move(leq)}};
}

}  // namespace schurkit
