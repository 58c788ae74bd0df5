// pybind11 surface over the main operations. Exact values cross the
// boundary as decimal strings (rationals as "num/den") or nested int lists.

#include "mirrorlat/verify.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace mirrorlat;

namespace {

py::object int_to_py(const Int& v) {
    // round-trip through the decimal string keeps arbitrary precision
    return py::int_(py::str(v.get_str()));
}

py::list gram_to_py(const IntMat& m) {
    py::list rows;
    for (int i = 0; i < m.rows(); ++i) {
        py::list row;
        for (int j = 0; j < m.cols(); ++j) row.append(int_to_py(m(i, j)));
        rows.append(row);
    }
    return rows;
}

py::dict lattice_to_py(const Lattice& l) {
    py::dict d;
    d["gram"] = gram_to_py(l.gram);
    d["signature"] = py::make_tuple(l.t_plus, l.t_minus);
    d["det"] = int_to_py(lattice_det(l));
    return d;
}

FiniteQuadraticForm form_of(const std::string& expr) { return parse_form(expr); }

}  // namespace

PYBIND11_MODULE(_mirrorlat, m) {
    m.doc() = "exact discriminant forms, overlattices and BHK mirror checks";

    m.def("lattice", [](const std::string& expr) { return lattice_to_py(parse_lattice(expr)); },
          py::arg("expr"), "Gram matrix, signature and determinant of a lattice expression");

    m.def("discriminant_form",
          [](const std::string& expr) {
              FiniteQuadraticForm q = discriminant_form(parse_lattice(expr));
              py::dict d;
              py::list orders;
              for (const auto& o : q.orders) orders.append(int_to_py(o));
              d["orders"] = orders;
              d["form"] = q.trivial() ? "triv" : print_form(q);
              return d;
          },
          py::arg("expr"));

    m.def("forms_isomorphic",
          [](const std::string& a, const std::string& b) {
              return forms_isomorphic(form_of(a), form_of(b));
          },
          py::arg("a"), py::arg("b"));

    m.def("negate_form", [](const std::string& a) { return print_form(negate(form_of(a))); },
          py::arg("form"));

    m.def("milgram_signature",
          [](const std::string& a) { return milgram_signature(form_of(a)); }, py::arg("form"));

    m.def("mirror_invariants",
          [](int r, const std::string& form) {
              MirrorResult res = mirror_invariants(make_polarization(r, form_of(form)));
              py::dict d;
              d["r"] = res.inv.r;
              d["form"] = res.inv.q.trivial() ? "triv" : print_form(res.inv.q);
              d["splits_off_u"] = res.splits_off_u;
              d["footnote_case"] = res.footnote_case;
              return d;
          },
          py::arg("r"), py::arg("form"));

    m.def("check_mirror_pair",
          [](int r1, const std::string& q1, int r2, const std::string& q2) {
              auto rep = check_mirror_pair(make_polarization(r1, form_of(q1)),
                                           make_polarization(r2, form_of(q2)));
              py::dict d;
              d["rank_ok"] = rep.rank_ok;
              d["form_ok"] = rep.form_ok;
              return d;
          },
          py::arg("r1"), py::arg("q1"), py::arg("r2"), py::arg("q2"));

    m.def("overlattice_count",
          [](const std::string& expr) {
              Lattice l = parse_lattice(expr);
              return long(isotropic_subgroups(discriminant_form(l)).size()) - 1;
          },
          py::arg("expr"), "number of nontrivial even overlattices");

    m.def("identify_lattice",
          [](int t_plus, int t_minus, const std::string& form) -> py::object {
              LatticeInvariants inv{t_plus, t_minus, form_of(form)};
              auto hit = find_lattice_by_invariants(inv, default_lattice_catalog());
              if (!hit) return py::none();
              return py::str(*hit);
          },
          py::arg("t_plus"), py::arg("t_minus"), py::arg("form"));

    m.def("bhk_transpose",
          [](const std::string& poly, const std::vector<long>& weights, long degree) {
              std::vector<Int> w(weights.begin(), weights.end());
              InvertiblePolynomial p = parse_polynomial(poly, make_weight_system(w, degree));
              auto [sorted, perm] = sort_by_weights(transpose(p));
              py::dict d;
              d["polynomial"] = print_polynomial(sorted);
              py::list ws;
              for (const auto& x : sorted.ws.weights) ws.append(int_to_py(x));
              d["weights"] = ws;
              d["degree"] = int_to_py(sorted.ws.degree);
              return d;
          },
          py::arg("polynomial"), py::arg("weights"), py::arg("degree"));

    m.def("dual_group_order",
          [](const std::string& poly, const std::vector<long>& weights, long degree,
             const std::vector<std::vector<std::string>>& gens) {
              std::vector<Int> w(weights.begin(), weights.end());
              InvertiblePolynomial p = parse_polynomial(poly, make_weight_system(w, degree));
              std::vector<SymmetryElement> gen_elems = j_group(p).elements;
              for (const auto& g : gens) {
                  SymmetryElement e;
                  for (const auto& c : g) {
                      Rat r(c);
                      r.canonicalize();
                      e.push_back(r);
                  }
                  gen_elems.push_back(reduce_element(e));
              }
              SymmetryGroup grp = group_closure(p.ws.vars(), gen_elems);
              return py::make_tuple(int_to_py(grp.order()),
                                    int_to_py(dual_group(p, grp).order()));
          },
          py::arg("polynomial"), py::arg("weights"), py::arg("degree"),
          py::arg("generators") = std::vector<std::vector<std::string>>{});

    m.def("genus", [](long w1, long w2, long w3, long d) {
        return int_to_py(curve_genus(w1, w2, w3, d));
    });

    m.def("orbit_lattice",
          [](const std::string& config_path, bool ignore_action) {
              CurveConfig c = load_curve_config(config_path);
              if (ignore_action) c = c.with_identity_action();
              OrbitLatticeResult res = orbit_lattice(c);
              py::dict d;
              d["r"] = res.r;
              d["lattice"] = lattice_to_py(res.lattice);
              d["form"] = print_form(discriminant_form(res.lattice));
              d["orbits"] = res.orbits;
              return d;
          },
          py::arg("config_path"), py::arg("ignore_action") = false);

    m.def("verify",
          [](const std::string& data_dir, long table_m, const std::string& geometry_id) {
              Dataset data = load_dataset(data_dir);
              std::vector<VerificationReport> parts;
              if (table_m == 0 && geometry_id.empty()) {
                  parts.push_back(verify_all(data));
              } else {
                  if (table_m != 0) parts.push_back(verify_mirrors(data, Int(table_m)));
                  if (!geometry_id.empty()) parts.push_back(verify_geometry(data, geometry_id));
              }
              VerificationReport rep = merge(parts);
              return py::make_tuple(rep.ok(), render_json(rep));
          },
          py::arg("data_dir") = "", py::arg("table_m") = 0, py::arg("geometry_id") = "");

    m.def("default_data_dir", &default_data_dir);
}
