#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "schurkit/json_io.hpp"

namespace py = pybind11;
using namespace schurkit;

namespace {

using IntVec = std::vector<int>;

SkewShape make_shape(const IntVec& outer, const IntVec& inner) {
  return SkewShape(Partition(outer), Partition(inner));
}

py::tuple parts_tuple(const Partition& p) { return py::tuple(py::cast(p.parts())); }

py::tuple shape_tuple(const SkewShape& a) {
  return py::make_tuple(parts_tuple(a.outer()), parts_tuple(a.inner()));
}

py::dict expansion_dict(const SchurExpansion& f) {
  py::dict d;
  for (const auto& [p, c] : f.terms()) d[parts_tuple(p)] = c;
  return d;
}

py::list partition_list(const std::vector<Partition>& v) {
  py::list out;
  for (const auto& p : v) out.append(parts_tuple(p));
  return out;
}

py::list tableau_rows(const Filling& t) {
  py::list rows;
  for (int i = 0; i < t.shape().num_rows(); ++i) rows.append(py::cast(t.row(i)));
  return rows;
}

py::dict report_dict(const Report& r) {
  py::dict d;
  d["check"] = r.check;
  d["n"] = r.n;
  d["pass"] = r.pass;
  d["counterexamples"] = py::cast(r.counterexamples);
  return d;
}

Order parse_order(const std::string& order) {
  if (order == "schur") return Order::schur;
  if (order == "support") return Order::support;
  throw std::invalid_argument("order must be 'schur' or 'support'");
}

}  // namespace

PYBIND11_MODULE(_schurkit, m) {
  m.doc() = "skew Schur expansions, supports, and Schur-positivity posets";

  m.def("transpose", [](const IntVec& p) { return parts_tuple(transpose(Partition(p))); },
        py::arg("partition"), "Conjugate partition.");
  m.def("dominance_leq",
        [](const IntVec& p, const IntVec& q) { return dominance_leq(Partition(p), Partition(q)); },
        py::arg("p"), py::arg("q"), "Dominance comparison of equal-size partitions.");
  m.def("enumerate_partitions",
        [](int n) { return partition_list(enumerate_partitions(n)); }, py::arg("n"));
  m.def("enumerate_skew_shapes",
        [](int n) {
          py::list out;
          for (const auto& a : enumerate_skew_shapes(n)) out.append(shape_tuple(a));
          return out;
        },
        py::arg("n"), "Basic skew shapes with n boxes as (outer, inner) pairs.");
  m.def("rows_of", [](const IntVec& o, const IntVec& i) { return parts_tuple(rows_of(make_shape(o, i))); },
        py::arg("outer"), py::arg("inner") = IntVec{});
  m.def("cols_of", [](const IntVec& o, const IntVec& i) { return parts_tuple(cols_of(make_shape(o, i))); },
        py::arg("outer"), py::arg("inner") = IntVec{});
  m.def("is_connected", [](const IntVec& o, const IntVec& i) { return is_connected(make_shape(o, i)); },
        py::arg("outer"), py::arg("inner") = IntVec{});
  m.def("is_ribbon", [](const IntVec& o, const IntVec& i) { return is_ribbon(make_shape(o, i)); },
        py::arg("outer"), py::arg("inner") = IntVec{});

  m.def("lr_expand",
        [](const IntVec& o, const IntVec& i) { return expansion_dict(lr_expand(make_shape(o, i))); },
        py::arg("outer"), py::arg("inner") = IntVec{},
        "Schur expansion of a skew Schur function as {partition: coefficient}.");
  m.def("ribbon_expand",
        [](const IntVec& alpha) { return expansion_dict(ribbon_expand(Composition(alpha))); },
        py::arg("alpha"), "Schur expansion of a ribbon Schur function.");
  m.def("support",
        [](const IntVec& o, const IntVec& i) { return partition_list(support_of(make_shape(o, i))); },
        py::arg("outer"), py::arg("inner") = IntVec{});
  m.def("lr_coefficient",
        [](const IntVec& nu, const IntVec& lam, const IntVec& mu) {
          return lr_coefficient(Partition(nu), Partition(lam), Partition(mu));
        },
        py::arg("nu"), py::arg("lam"), py::arg("mu"));
  m.def("schur_product",
        [](const IntVec& lam, const IntVec& mu) {
          SchurExpansion f(Partition(lam).size()), g(Partition(mu).size());
          f.add_term(Partition(lam), 1);
          g.add_term(Partition(mu), 1);
          return expansion_dict(multiply(f, g));
        },
        py::arg("lam"), py::arg("mu"), "Schur expansion of s_lam * s_mu.");
  m.def("diff_schur_positive",
        [](py::tuple a, py::tuple b) {
          return diff_schur_positive(make_shape(a[0].cast<IntVec>(), a[1].cast<IntVec>()),
                                     make_shape(b[0].cast<IntVec>(), b[1].cast<IntVec>()));
        },
        py::arg("a"), py::arg("b"), "True iff s_a - s_b is Schur-positive.");
  m.def("support_contained",
        [](py::tuple b, py::tuple a) {
          return support_contained(make_shape(b[0].cast<IntVec>(), b[1].cast<IntVec>()),
                                   make_shape(a[0].cast<IntVec>(), a[1].cast<IntVec>()));
        },
        py::arg("b"), py::arg("a"));

  m.def("enumerate_syt_with_descents",
        [](const IntVec& lam, const IntVec& descents) {
          py::list out;
          for (const auto& t : enumerate_syt_with_descents(Partition(lam), descents))
            out.append(tableau_rows(t));
          return out;
        },
        py::arg("lam"), py::arg("descents"));
  m.def("witness_syt",
        [](const IntVec& alpha, const IntVec& lam) {
          return tableau_rows(construct_witness_syt(Composition(alpha), Partition(lam)));
        },
        py::arg("alpha"), py::arg("lam"),
        "Standard tableau of shape lam with descent set S(alpha).");

  m.def("is_equitable", [](const IntVec& alpha) { return is_equitable(Ribbon{Composition(alpha)}); },
        py::arg("alpha"));
  m.def("enumerate_equitable",
        [](int n, int l) {
          py::list out;
          for (const auto& r : enumerate_equitable(n, l)) out.append(py::tuple(py::cast(r.rows().parts())));
          return out;
        },
        py::arg("n"), py::arg("l"));
  m.def("predicted_support", [](int n, int l) { return partition_list(predicted_support(n, l)); },
        py::arg("n"), py::arg("l"));
  m.def("conjectured_max_ribbon",
        [](int n, int l) { return py::tuple(py::cast(conjectured_max_ribbon(n, l).rows().parts())); },
        py::arg("n"), py::arg("l"));
  m.def("has_full_support",
        [](const IntVec& o, const IntVec& i) { return has_full_support(make_shape(o, i)); },
        py::arg("outer"), py::arg("inner") = IntVec{});
  m.def("boundary_word", [](const IntVec& alpha) { return boundary_word(Ribbon{Composition(alpha)}); },
        py::arg("alpha"));

  m.def("maximal_connected",
        [](int n, const std::string& order) {
          auto family = build_poset(n, parse_order(order));
          py::list out;
          for (int idx : maximal_connected(family)) {
            py::list members;
            for (const auto& s : family.elements[static_cast<size_t>(idx)].members)
              members.append(shape_tuple(s));
            out.append(members);
          }
          return out;
        },
        py::arg("n"), py::arg("order"));
  m.def("poset_summary",
        [](int n, const std::string& order) {
          auto family = build_poset(n, parse_order(order));
          int connected = 0;
          for (const auto& c : family.elements) connected += c.connected ? 1 : 0;
          py::dict d;
          d["n"] = n;
          d["order"] = order;
          d["classes"] = static_cast<int>(family.elements.size());
          d["connected_classes"] = connected;
          d["maximal_connected"] = static_cast<int>(maximal_connected(family).size());
          d["graded"] = is_graded(family);
          d["join_semilattice"] = is_join_semilattice(family);
          return d;
        },
        py::arg("n"), py::arg("order"));

  m.def("verify_main", [](int n) { return report_dict(verify_theorem_main(n)); }, py::arg("n"));
  m.def("verify_max", [](int n) { return report_dict(verify_conjecture_max(n)); }, py::arg("n"));
  m.def("verify_support_formula", [](int n) { return report_dict(verify_support_formula(n)); },
        py::arg("n"));
  m.def("verify_minrib", [](const IntVec& lam) { return report_dict(verify_conjecture_minrib(Partition(lam))); },
        py::arg("lam"));
  m.def("verify_extreme", [](int n) { return report_dict(verify_lemma_extreme(n)); }, py::arg("n"));
}
