#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "ribbon/cli.hpp"
#include "ribbon/enumerate.hpp"
#include "ribbon/errors.hpp"
#include "ribbon/families.hpp"
#include "ribbon/gem_map.hpp"
#include "ribbon/stats.hpp"
#include "ribbon/theorems.hpp"

namespace py = pybind11;
using namespace ribbon;

namespace {

py::int_ to_py(const BigInt& x) { return py::int_(py::str(x.str())); }

py::list coefficients(const IntPolynomial& p) {
  py::list out;
  for (const BigInt& c : p.coeffs()) out.append(to_py(c));
  return out;
}

IntPolynomial from_coefficients(const std::vector<py::int_>& cs) {
  std::vector<BigInt> v;
  for (const auto& c : cs) v.emplace_back(py::str(py::handle(c)).cast<std::string>().c_str());
  return IntPolynomial(std::move(v));
}

py::object fraction(const Rational& q) {
  return py::module_::import("fractions").attr("Fraction")(to_py(numerator(q)), to_py(denominator(q)));
}

EdgeSubset subset(const RibbonGraph& g, const std::vector<EdgeIndex>& edges) {
  for (EdgeIndex k : edges)
    if (k >= g.edge_count()) throw PreconditionError("edge index " + std::to_string(k) + " out of range");
  return EdgeSubset::of(g.edge_count(), edges);
}

Family family(const std::string& name) {
  const auto f = family_from_string(name);
  if (!f) throw PreconditionError("unknown family '" + name + "'");
  return *f;
}

EnumerateOptions options(unsigned threads) {
  EnumerateOptions o;
  o.threads = threads;
  return o;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Partial-dual genus polynomials of ribbon graphs";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<PreconditionError>(m, "PreconditionError", PyExc_ValueError);
  py::register_exception<VerificationError>(m, "VerificationError", PyExc_RuntimeError);

  py::class_<RibbonGraph>(m, "RibbonGraph")
      .def(py::init([](const std::vector<std::vector<std::pair<EdgeIndex, int>>>& rotations,
                       const std::vector<bool>& twisted) {
             std::vector<std::vector<EdgeEnd>> rot;
             for (const auto& r : rotations) {
               auto& out = rot.emplace_back();
               for (const auto& [k, end] : r) out.push_back(EdgeEnd{k, static_cast<std::uint8_t>(end)});
             }
             return RibbonGraph(std::move(rot), twisted);
           }),
           py::arg("rotations"), py::arg("twisted"),
           "Rotations as lists of (edge, end) pairs, one per vertex; one twist flag per edge.")
      .def_static("decode", [](const std::string& text) { return decode(text); })
      .def_static("read", &read_ribbon_file, py::arg("path"))
      .def("encode", [](const RibbonGraph& g) { return encode(g); })
      .def("write", [](const RibbonGraph& g, const std::string& path) { write_ribbon_file(path, g); })
      .def_property_readonly("vertex_count", &RibbonGraph::vertex_count)
      .def_property_readonly("edge_count", &RibbonGraph::edge_count)
      .def_property_readonly("connected", &RibbonGraph::connected)
      .def("__eq__", [](const RibbonGraph& a, const RibbonGraph& b) { return a == b; })
      .def("__repr__", [](const RibbonGraph& g) {
        return "<RibbonGraph v=" + std::to_string(g.vertex_count()) + " e=" + std::to_string(g.edge_count()) + ">";
      });

  py::class_<SurfaceStats>(m, "SurfaceStats")
      .def_readonly("v", &SurfaceStats::v)
      .def_readonly("e", &SurfaceStats::e)
      .def_readonly("f", &SurfaceStats::f)
      .def_readonly("c", &SurfaceStats::c)
      .def_readonly("genus", &SurfaceStats::genus)
      .def_readonly("euler_genus", &SurfaceStats::euler_genus)
      .def_readonly("orientable", &SurfaceStats::orientable);

  m.def("surface_stats", [](const RibbonGraph& g) { return surface_stats(g); });
  m.def("partial_dual", [](const RibbonGraph& g, const std::vector<EdgeIndex>& a) { return partial_dual(g, subset(g, a)); },
        py::arg("graph"), py::arg("subset"));
  m.def("genus_of_partial_dual",
        [](const RibbonGraph& g, const std::vector<EdgeIndex>& a) { return genus_of_partial_dual(g, subset(g, a)); },
        py::arg("graph"), py::arg("subset"));
  m.def("equivalent_embedding", &equivalent_embedding);

  m.def(
      "pdg_polynomial",
      [](const RibbonGraph& g, const std::string& method, unsigned threads) {
        GenusMethod gm;
        if (method == "formula")
          gm = GenusMethod::formula;
        else if (method == "construct")
          gm = GenusMethod::construct;
        else
          throw PreconditionError("method must be 'formula' or 'construct'");
        IntPolynomial p;
        {
          py::gil_scoped_release release;
          p = pdg_polynomial(g, gm, options(threads));
        }
        return coefficients(p);
      },
      py::arg("graph"), py::arg("method") = "formula", py::arg("threads") = 1,
      "Coefficients of the partial-dual genus polynomial, constant term first.");
  m.def(
      "euler_polynomial",
      [](const RibbonGraph& g, unsigned threads) {
        IntPolynomial p;
        {
          py::gil_scoped_release release;
          p = euler_polynomial(g, options(threads));
        }
        return coefficients(p);
      },
      py::arg("graph"), py::arg("threads") = 1);
  m.def(
      "max_pd_genus",
      [](const RibbonGraph& g, const std::string& method) {
        if (method != "brute" && method != "xi") throw PreconditionError("method must be 'brute' or 'xi'");
        return max_pd_genus(g, method == "xi" ? MaxGenusMethod::xi : MaxGenusMethod::brute);
      },
      py::arg("graph"), py::arg("method") = "brute");
  m.def(
      "spectrum",
      [](const std::vector<py::int_>& coeffs) {
        const Spectrum s = spectrum(from_coefficients(coeffs));
        return py::make_tuple(s.exponents, s.interpolating);
      },
      py::arg("coefficients"), "(exponents with nonzero coefficients, interpolating)");

  m.def("families", [] {
    std::vector<std::string> out;
    for (Family f : all_families()) out.push_back(to_string(f));
    return out;
  });
  m.def("generate", [](const std::string& kind, std::size_t n, std::size_t m) { return generate({family(kind), n, m}); },
        py::arg("family"), py::arg("n"), py::arg("m") = 0);
  m.def("closed_form_pdg",
        [](const std::string& kind, std::size_t n, std::size_t m) { return coefficients(closed_form_pdg({family(kind), n, m})); },
        py::arg("family"), py::arg("n"), py::arg("m") = 0);
  m.def("closed_form_euler",
        [](const std::string& kind, std::size_t n, std::size_t m) {
          return coefficients(closed_form_euler({family(kind), n, m}));
        },
        py::arg("family"), py::arg("n"), py::arg("m") = 0);
  m.def("recurrence_pdg",
        [](const std::string& kind, std::size_t n, std::size_t m) { return coefficients(recurrence_pdg({family(kind), n, m})); },
        py::arg("family"), py::arg("n"), py::arg("m") = 0);

  m.def(
      "audit",
      [](const std::string& theorem, std::uint64_t seed, std::size_t trials, std::size_t max_edges) {
        const auto id = theorem_from_string(theorem);
        if (!id) throw PreconditionError("unknown theorem '" + theorem + "'");
        AuditOptions o;
        o.seed = seed;
        o.trials = trials;
        o.max_edges = max_edges;
        py::list out;
        for (const auto& r : audit(*id, o)) {
          py::dict d;
          d["trial"] = r.trial;
          d["agree"] = r.agree;
          d["witness"] = r.witness ? py::object(py::cast(r.witness->indices())) : py::object(py::none());
          d["note"] = r.note;
          out.append(d);
        }
        return out;
      },
      py::arg("theorem"), py::arg("seed") = 1, py::arg("trials") = 50, py::arg("max_edges") = 9);

  m.def(
      "moments",
      [](const std::vector<py::int_>& coeffs, std::size_t edges) {
        const GenusDistribution d = to_distribution(from_coefficients(coeffs), edges);
        const auto [mean, var] = mean_variance(d);
        return py::make_tuple(fraction(mean), fraction(var));
      },
      py::arg("coefficients"), py::arg("edges"), "Exact (mean, variance) of the genus of a random partial dual.");
  m.def(
      "asymptotic_suite",
      [](const std::string& kind, std::size_t n_max) {
        SuiteFamily f;
        if (kind == "fan")
          f = SuiteFamily::fan;
        else if (kind == "necklace")
          f = SuiteFamily::necklace;
        else
          throw PreconditionError("family must be 'fan' or 'necklace'");
        py::list out;
        for (const auto& r : asymptotic_suite(f, n_max))
          out.append(py::make_tuple(r.n, fraction(r.mean), fraction(r.variance),
                                    r.ks ? py::object(py::float_(*r.ks)) : py::object(py::none())));
        return out;
      },
      py::arg("family"), py::arg("n_max"), "Rows (n, mean, variance, ks).");

  m.def(
      "run_cli",
      [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        const int code = cli::run(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"), "Run one command line; returns (exit code, stdout, stderr).");
}
