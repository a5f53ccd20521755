#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <memory>

#include "novk/dtc.hpp"
#include "novk/fixtures.hpp"
#include "novk/laurent.hpp"
#include "novk/novhom.hpp"
#include "novk/report.hpp"

namespace py = pybind11;

namespace {

py::int_ big(const novk::Int& v) { return py::int_(py::str(v.str())); }

py::tuple abelian_tuple(const novk::AbelianGroup& g) {
  py::list torsion;
  for (const auto& t : g.torsion) torsion.append(big(t));
  return py::make_tuple(g.rank, torsion);
}

// presentation + realized table, the context every word operation needs
struct Group {
  novk::Presentation pres;
  std::shared_ptr<const novk::FiniteGroupTable> table;
};

struct Word {
  novk::ProductWord w;
  std::shared_ptr<const Group> ctx;
};

Word wrap(novk::ProductWord w, std::shared_ptr<const Group> ctx) {
  return Word{std::move(w), std::move(ctx)};
}

std::vector<novk::DtcGenerator> make_gens(const Group&,
                                          const std::vector<std::pair<std::string, Word>>& defs) {
  std::vector<novk::DtcGenerator> gens;
  for (const auto& [id, word] : defs) gens.emplace_back(id, word.w);
  return gens;
}

} // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Novikov fundamental group workbench (C++ core)";

  py::register_exception<novk::Error>(m, "NovkError");

  // ---- Laurent series ----
  py::class_<novk::LaurentSeries>(m, "LaurentSeries")
      .def(py::init([](const std::string& text, int trunc, const std::string& ring) {
             novk::CoefficientRing r = ring == "Z"   ? novk::CoefficientRing::integers()
                                       : ring == "Q" ? novk::CoefficientRing::rationals()
                                       : novk::CoefficientRing::integers_mod(
                                             novk::Int(ring.substr(ring.find('/') + 1)));
             return novk::parse_series(text, r, trunc);
           }),
           py::arg("text"), py::arg("trunc"), py::arg("ring") = "Z")
      .def_property_readonly("truncation", &novk::LaurentSeries::truncation)
      .def_property_readonly("valuation",
                             [](const novk::LaurentSeries& s) -> py::object {
                               auto v = s.valuation();
                               return v ? py::cast(*v) : py::none();
                             })
      .def("truncate", [](const novk::LaurentSeries& s, int d) { return novk::truncate(s, d); })
      .def("invert", [](const novk::LaurentSeries& s) { return novk::invert(s); })
      .def("__add__", [](const novk::LaurentSeries& a, const novk::LaurentSeries& b) { return a + b; })
      .def("__sub__", [](const novk::LaurentSeries& a, const novk::LaurentSeries& b) { return a - b; })
      .def("__mul__", [](const novk::LaurentSeries& a, const novk::LaurentSeries& b) { return a * b; })
      .def("__neg__", [](const novk::LaurentSeries& a) { return -a; })
      .def("__eq__", [](const novk::LaurentSeries& a, const novk::LaurentSeries& b) { return a == b; })
      .def("__str__", [](const novk::LaurentSeries& s) { return novk::to_string(s); })
      .def("__repr__", [](const novk::LaurentSeries& s) {
        return "LaurentSeries('" + novk::to_string(s) + "', trunc=" +
               std::to_string(s.truncation()) + ", ring='" + s.ring().to_string() + "')";
      });

  // ---- groups and free-product words ----
  py::class_<Word>(m, "Word")
      .def("__mul__", [](const Word& a, const Word& b) { return wrap(novk::mul(a.w, b.w), a.ctx); })
      .def("inverse", [](const Word& a) { return wrap(novk::inv(a.w), a.ctx); })
      .def("shift", [](const Word& a, int k) { return wrap(novk::shift(a.w, k), a.ctx); })
      .def("zip", [](const Word& a, int h) { return wrap(novk::zip(a.w, h), a.ctx); })
      .def("power", [](const Word& a, long long n) { return wrap(novk::power(a.w, n), a.ctx); })
      .def("cyclic_reduce",
           [](const Word& a) {
             auto [conj, core] = novk::cyclic_reduce(a.w);
             return py::make_tuple(wrap(conj, a.ctx), wrap(core, a.ctx));
           })
      .def_property_readonly("height",
                             [](const Word& a) -> py::object {
                               auto h = novk::height(a.w);
                               return h ? py::cast(*h) : py::none();
                             })
      .def_property_readonly("is_identity", [](const Word& a) { return a.w.is_identity(); })
      .def_property_readonly("is_single_letter", [](const Word& a) { return novk::is_single_letter(a.w); })
      .def_property_readonly("letters",
                             [](const Word& a) {
                               py::list out;
                               for (const auto& l : a.w.letters())
                                 out.append(py::make_tuple(l.level, l.elem));
                               return out;
                             })
      .def("__eq__", [](const Word& a, const Word& b) { return a.w == b.w; })
      .def("__str__", [](const Word& a) { return novk::to_string(a.w, a.ctx->pres); })
      .def("__repr__", [](const Word& a) { return "Word('" + novk::to_string(a.w, a.ctx->pres) + "')"; });

  py::class_<Group, std::shared_ptr<Group>>(m, "Group")
      .def(py::init([](const std::string& presentation, size_t max_cosets) {
             auto g = std::make_shared<Group>();
             g->pres = novk::parse_presentation(presentation);
             g->table = std::make_shared<const novk::FiniteGroupTable>(
                 novk::todd_coxeter(g->pres, max_cosets));
             return g;
           }),
           py::arg("presentation"), py::arg("max_cosets") = 10000)
      .def_property_readonly("order", [](const Group& g) { return g.table->order(); })
      .def_property_readonly("is_cyclic", [](const Group& g) { return novk::is_cyclic(*g.table); })
      .def_property_readonly("abelianization",
                             [](const Group& g) { return abelian_tuple(novk::abelianization(g.pres)); })
      .def_property_readonly("dim_hom", [](const Group& g) { return novk::dim_hom_r(g.pres); })
      .def("min_generators",
           [](const Group& g, size_t cap) { return novk::min_generators(*g.table, cap); },
           py::arg("cap") = 8)
      .def("word",
           [](std::shared_ptr<Group> g, const std::string& text) {
             return wrap(novk::parse_product_word(text, g->pres, g->table), g);
           })
      .def("mu_bounds",
           [](const Group& g) {
             auto b = novk::mu_dtc_bounds(*g.table);
             return py::make_tuple(b.lower, b.upper ? py::cast(*b.upper) : py::none(),
                                   b.certificates);
           })
      .def("rho_bounds",
           [](const Group& g) {
             auto b = novk::rho_dtc_bounds(g.pres, *g.table);
             return py::make_tuple(b.lower, b.upper ? py::cast(*b.upper) : py::none(),
                                   b.certificates);
           })
      .def("span_member",
           [](std::shared_ptr<Group> g, const Word& target,
              const std::vector<std::pair<std::string, Word>>& gens, int h, int lo, int hi,
              size_t max_len) -> py::object {
             auto res = novk::span_member_bounded(target.w, make_gens(*g, gens), h,
                                                  novk::Window(lo, hi), max_len);
             if (!res.found) return py::none();
             return py::str(novk::to_string(*res.witness));
           },
           py::arg("target"), py::arg("gens"), py::arg("h") = 0, py::arg("lo") = 0,
           py::arg("hi") = 2, py::arg("max_len") = 4)
      .def("hurewicz",
           [](const Group& g, const Word& x, int lo, int hi) {
             novk::AbelianizationMap ab(g.pres);
             auto im = novk::hurewicz_map_word(x.w, ab, novk::Window(lo, hi));
             py::list levels;
             for (const auto& lvl : im.levels) {
               py::list v;
               for (const auto& c : lvl) v.append(big(c));
               levels.append(v);
             }
             return levels;
           },
           py::arg("word"), py::arg("lo") = 0, py::arg("hi") = 2)
      .def("ml_check",
           [](const Group& g, int lo, int hi, size_t K) {
             return novk::ml_check(novk::pro_abelianize(*g.table, novk::Window(lo, hi)), K).stable;
           },
           py::arg("lo") = 0, py::arg("hi") = 2, py::arg("K") = 1);

  // ---- integer matrices and chain complexes ----
  m.def("smith_normal_form", [](const std::vector<std::vector<long long>>& rows) {
    size_t r = rows.size(), c = r ? rows[0].size() : 0;
    novk::IntMatrix mat(r, c);
    for (size_t i = 0; i < r; ++i) {
      if (rows[i].size() != c)
        novk::fail(novk::ErrKind::InvalidArgument, "ragged matrix");
      for (size_t j = 0; j < c; ++j) mat.at(i, j) = rows[i][j];
    }
    auto snf = novk::smith_normal_form(mat);
    py::list d;
    for (const auto& x : snf.d) d.append(big(x));
    return d;
  });

  py::class_<novk::ChainComplex>(m, "ChainComplex")
      .def(py::init([](const std::string& json_text) { return novk::parse_chain_complex_json(json_text); }))
      .def("homology",
           [](const novk::ChainComplex& c, size_t i) { return abelian_tuple(novk::homology(c, i)); })
      .def("hn_connected_sum", [](const novk::ChainComplex& c, int i, int n) {
        auto mod = novk::hn_connected_sum(c, i, n);
        py::list torsion;
        for (const auto& t : mod.torsion) torsion.append(big(t));
        return py::make_tuple(mod.free_rank, torsion, novk::to_string(mod));
      });

  // ---- rho matrix over the Laurent field ----
  m.def("l_lambda_dim",
        [](const std::vector<std::string>& ids, const std::vector<std::string>& rel_texts) {
          std::vector<novk::DtcWord> rels;
          for (const auto& r : rel_texts) rels.push_back(novk::parse_dtc_word(r));
          return novk::l_lambda_dim(ids, rels);
        });
  m.def("rho_matrix",
        [](const std::vector<std::string>& ids, const std::vector<std::string>& rel_texts) {
          std::vector<novk::DtcWord> rels;
          for (const auto& r : rel_texts) rels.push_back(novk::parse_dtc_word(r));
          auto mtx = novk::build_rho_matrix(ids, rels);
          py::list out;
          for (size_t i = 0; i < mtx.rows(); ++i) {
            py::list row;
            for (size_t j = 0; j < mtx.cols(); ++j) row.append(novk::to_string(mtx.at(i, j)));
            out.append(row);
          }
          return out;
        });

  // ---- bundled examples ----
  m.def("report_text", [](const std::string& which) {
    return novk::render_report_text(novk::report_example(which));
  });
  m.def("report_json", [](const std::string& which) {
    return novk::render_report_json(novk::report_example(which));
  });
  m.def("fixture", [](const std::string& name) -> std::string {
    if (name == "poincare.pres") return novk::fixtures::poincare_presentation();
    if (name == "rp4.pres") return novk::fixtures::rp4_presentation();
    if (name == "poincare_sphere.cx.json") return novk::fixtures::poincare_sphere_complex_json();
    if (name == "rp4.cx.json") return novk::fixtures::rp4_complex_json();
    novk::fail(novk::ErrKind::InvalidArgument, "unknown fixture '" + name + "'");
  });
}
