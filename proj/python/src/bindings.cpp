#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "kschur/cache.hpp"
#include "kschur/cores.hpp"
#include "kschur/dual.hpp"
#include "kschur/errors.hpp"
#include "kschur/kschur.hpp"
#include "kschur/ktableaux.hpp"
#include "kschur/quantum.hpp"

namespace py = pybind11;
using namespace kschur;

namespace {

using Parts = std::vector<int>;

Partition P(const Parts& v) { return Partition(v); }

py::int_ to_py(const Integer& x) {
  const std::string s = x.str();
  return py::reinterpret_steal<py::int_>(PyLong_FromString(s.c_str(), nullptr, 10));
}

py::tuple key(const Partition& p) { return py::tuple(py::cast(p.parts())); }

py::dict to_py(const SymPoly& f) {
  py::dict d;
  for (const auto& [p, c] : f.terms()) d[key(p)] = to_py(c);
  return d;
}

py::dict to_py(const Tensor& t) {
  py::dict d;
  for (const auto& [pq, c] : t) d[py::make_tuple(key(pq.first), key(pq.second))] = to_py(c);
  return d;
}

py::list to_py(const GWExpansion& g) {
  py::list out;
  for (const auto& [dk, c] : g.terms) out.append(py::make_tuple(key(dk.second), dk.first, to_py(c)));
  return out;
}

py::list matrix(const IntMatrix& m) {
  py::list rows;
  for (const auto& row : m) {
    py::list r;
    for (const auto& x : row) r.append(to_py(x));
    rows.append(r);
  }
  return rows;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "k-Schur functions, k-tableaux, Gromov-Witten invariants and fusion rules";
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<InternalError>(m, "InternalError", PyExc_RuntimeError);

  m.def("set_cache_dir", [](std::optional<std::string> dir) {
    cache::set_dir(dir ? std::optional<std::filesystem::path>(*dir) : std::nullopt);
  }, py::arg("dir"), "Kostka cache directory; None disables disk caching.");

  m.def("conjugate", [](const Parts& p) { return conjugate(P(p)).parts(); });
  m.def("k_conjugate", [](const Parts& p, int k) { return k_conjugate(P(p), k).parts(); });
  m.def("to_core", [](const Parts& p, int k) {
    const SkewShape s = k_skew(P(p), k);
    return py::make_tuple(s.outer().parts(), s.inner().parts());
  }, "(core, inner shape of the k-skew diagram)");
  m.def("from_core", [](const Parts& core, int k) { return from_core(P(core), k).parts(); });
  m.def("is_p_core", [](const Parts& p, int period) { return is_p_core(P(p), period); });
  m.def("n_core", [](const Parts& p, int n) {
    const RimHookRecord r = n_core(P(p), n);
    return py::make_tuple(r.removed_shape.parts(), r.hooks_removed, r.widths);
  }, "(core, hooks removed, widths)");
  m.def("rim_up", [](const Parts& p, int l, int n) { return rim_up(P(p), l, n).parts(); });
  m.def("rim_down", [](const Parts& p, int l, int n) { return rim_down(P(p), l, n).parts(); });

  m.def("count_k_tableaux", [](int k, const Parts& mu, const Parts& w) {
    return to_py(count_k_tableaux(k, P(mu), w));
  });
  m.def("count_standard", [](int k, const Parts& mu) { return to_py(count_standard(k, P(mu))); });
  m.def("k_tableaux", [](int k, const Parts& core, const Parts& w) {
    py::list out;
    for (const auto& t : enumerate_k_tableaux(k, CoreShape(P(core), k + 1), w))
      out.append(py::cast(t.rows));
    return out;
  }, "Fillings of a (k+1)-core, each a list of rows from the bottom.");

  m.def("kostka_matrix", [](int k, int n) {
    const auto km = kostka_matrix(k, n);
    py::list index;
    for (const auto& p : km->index) index.append(key(p));
    py::dict d;
    d["index"] = index;
    d["forward"] = matrix(km->forward);
    d["inverse"] = matrix(km->inverse);
    return d;
  });
  m.def("kschur_in_h", [](const Parts& p, int k) { return to_py(kschur_in_h(P(p), k)); });
  m.def("h_in_kschur", [](const Parts& p, int k) { return to_py(h_in_kschur(P(p), k)); });
  m.def("k_pieri_set", [](const Parts& p, int l, int k) {
    std::vector<Parts> out;
    for (const auto& q : k_pieri_set(P(p), l, k)) out.push_back(q.parts());
    return out;
  });
  m.def("h_times_kschur", [](const Parts& a, const Parts& b, int k) {
    return to_py(h_times_kschur(P(a), P(b), k));
  });
  m.def("klr", [](const Parts& a, const Parts& b, int k) { return to_py(klr(P(a), P(b), k)); });

  m.def("dual_kschur_in_m", [](const Parts& p, int k) { return to_py(dual_kschur_in_m(P(p), k)); });
  m.def("skew_dual_in_m", [](const Parts& nu, const Parts& mu, int k) {
    return to_py(skew_dual_in_m(P(nu), P(mu), k));
  });
  m.def("skew_dual_in_dual", [](const Parts& nu, const Parts& mu, int k) {
    return to_py(skew_dual_in_dual(P(nu), P(mu), k));
  });
  m.def("d_coefficients", [](const Parts& a, const Parts& b, int k) {
    return to_py(d_coefficients(P(a), P(b), k));
  });
  m.def("kschur_coproduct", [](const Parts& p, int k) { return to_py(kschur_coproduct(P(p), k)); });
  m.def("skew_kschur_in_kschur", [](const Parts& nu, const Parts& mu, int k) {
    return to_py(skew_kschur_in_kschur(P(nu), P(mu), k));
  });
  m.def("cauchy_check", &cauchy_check);
  m.def("skew_coproduct_check", [](const Parts& nu, const Parts& mu, int k) {
    return skew_coproduct_check(P(nu), P(mu), k);
  });

  m.def("gw_invariants", [](const Parts& a, const Parts& b, int l, int n) {
    return to_py(gw_invariants(P(a), P(b), l, n));
  }, "List of (nu, d, coeff) sorted by d, then nu.");
  m.def("quantum_product_oracle", [](const Parts& a, const Parts& b, int l, int n) {
    return to_py(quantum_product_oracle(P(a), P(b), l, n));
  });
  m.def("fusion", [](const Parts& a, const Parts& b, int l, int n) {
    py::dict d;
    for (const auto& [nu, c] : fusion(P(a), P(b), l, n)) d[key(nu)] = to_py(c);
    return d;
  });
  m.def("hecke_dimension", [](const Parts& p, int l, int n) {
    return to_py(hecke_dimension(P(p), l, n));
  });
}
