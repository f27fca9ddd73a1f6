#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "acw/calculus.hpp"
#include "acw/error.hpp"
#include "acw/fourier.hpp"
#include "acw/io.hpp"
#include "acw/ruzsa.hpp"
#include "acw/scenario.hpp"

namespace py = pybind11;
using namespace acw;

namespace {

using Coords = std::vector<std::int64_t>;

std::vector<Index> encode_all(const GroupSpec& g, const std::vector<Coords>& xs) {
  std::vector<Index> out;
  out.reserve(xs.size());
  for (const auto& x : xs) {
    if (x.size() != g.rank()) throw Error(ErrorKind::DimensionMismatch, "element of the wrong rank");
    out.push_back(g.encode(x));
  }
  return out;
}

std::vector<Coords> decode_all(const GroupSpec& g, std::span<const Index> xs) {
  std::vector<Coords> out;
  for (auto x : xs) out.push_back(g.decode(x).coords);
  return out;
}

Dist dist_from_pairs(const GroupSpec& g, const std::vector<std::pair<Coords, double>>& atoms) {
  std::vector<Atom> a;
  for (const auto& [x, m] : atoms) {
    if (x.size() != g.rank()) throw Error(ErrorKind::DimensionMismatch, "element of the wrong rank");
    a.push_back({g.encode(x), m});
  }
  return Dist(g, std::move(a));
}

std::string scenario_json(const Scenario& s) {
  json j{{"kind", s.name}, {"group", group_to_json(s.group)}, {"wrap_free", s.wrap_free}};
  if (s.dist)
    j["dist"] = dist_to_json(*s.dist)["atoms"];
  else
    j["set"] = elements_to_json(s.group, s.set);
  return j.dump();
}

}  // namespace

PYBIND11_MODULE(_acw, m) {
  m.doc() = "Entropy, Fourier and Bohr-set tools on finite abelian groups";

  static py::exception<Error> exc(m, "AcwError", PyExc_RuntimeError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::set_error(exc, e.what());
    }
  });

  py::class_<GroupSpec>(m, "Group")
      .def(py::init([](const Coords& moduli) { return make_group(moduli); }), py::arg("moduli"))
      .def_property_readonly("moduli", [](const GroupSpec& g) { return Coords(g.moduli().begin(), g.moduli().end()); })
      .def_property_readonly("order", &GroupSpec::order)
      .def_property_readonly("rank", &GroupSpec::rank)
      .def("encode", [](const GroupSpec& g, const Coords& x) { return g.encode(x); })
      .def("decode", [](const GroupSpec& g, Index x) { return g.decode(x).coords; })
      .def("add", [](const GroupSpec& g, const Coords& a, const Coords& b) { return g.decode(g.add(g.encode(a), g.encode(b))).coords; })
      .def("sub", [](const GroupSpec& g, const Coords& a, const Coords& b) { return g.decode(g.sub(g.encode(a), g.encode(b))).coords; })
      .def("char_eval", [](const GroupSpec& g, const Coords& chi, const Coords& x) { return char_eval(g, g.encode(chi), g.encode(x)); })
      .def("__repr__", [](const GroupSpec& g) { return "Group(" + g.to_string() + ")"; });

  py::class_<Dist>(m, "Dist")
      .def(py::init(&dist_from_pairs), py::arg("group"), py::arg("atoms"))
      .def_static("uniform", [](const GroupSpec& g, const std::vector<Coords>& a) { return uniform_on(g, encode_all(g, a)); })
      .def_static("point", [](const GroupSpec& g, const Coords& x) { return Dist::point(g, g.encode(x)); })
      .def_property_readonly("group", &Dist::group)
      .def_property_readonly("atoms", [](const Dist& p) {
        std::vector<std::pair<Coords, double>> out;
        for (const auto& a : p.atoms()) out.emplace_back(p.group().decode(a.at).coords, a.mass);
        return out;
      })
      .def("__len__", &Dist::support_size)
      .def("mass", [](const Dist& p, const Coords& x) { return p.mass(p.group().encode(x)); });

  m.def("entropy", &entropy);
  m.def("renyi", &renyi, py::arg("p"), py::arg("order"));
  m.def("kl_divergence", &kl_divergence);
  m.def("l1_distance", &l1_distance);
  m.def("convolve", [](const Dist& p, const Dist& q, bool minus) { return convolve(p, q, minus ? Sign::minus : Sign::plus); },
        py::arg("p"), py::arg("q"), py::arg("minus") = false);
  m.def("iterate_sum", &iterate_sum, py::arg("p"), py::arg("n"));
  m.def("ruzsa_dist", &ruzsa_dist);
  m.def("fibring_application_check", &fibring_application_check, py::arg("p"), py::arg("q"), py::arg("n"));

  m.def("doubling_constant", [](const GroupSpec& g, const std::vector<Coords>& a) {
    const auto s = doubling_constant(g, encode_all(g, a));
    return py::dict(py::arg("size") = s.A.size(), py::arg("sumset_size") = s.sumset_size, py::arg("K") = s.K);
  });
  m.def("tau", [](const Dist& p, const Dist& q, const std::vector<Coords>& a) {
    return tau_eval(p, q, doubling_constant(p.group(), encode_all(p.group(), a)));
  });
  m.def(
      "minimize_tau",
      [](const GroupSpec& g, const std::vector<Coords>& a, int n_hi, int max_steps) {
        const auto s = doubling_constant(g, encode_all(g, a));
        MinimizeOptions o;
        o.n_hi = n_hi;
        o.max_steps = max_steps;
        const auto r = minimize_tau(g, s.A, s, o);
        return trace_to_json(g, r.trace).dump();
      },
      py::arg("group"), py::arg("A"), py::arg("n_hi") = 0, py::arg("max_steps") = 64);
  m.def("growth_certificate", [](const Dist& p, int N) { return growth_to_json(growth_certificate(p, N)).dump(); });

  m.def("dft", [](const Dist& p) { return dft(p).values; });
  m.def("lspec", [](const Dist& p, double eps) { return decode_all(p.group(), lspec(p, eps)); });
  m.def("spec", [](const Dist& p, double eps) { return decode_all(p.group(), spec(p, eps)); });
  m.def("bohr_set", [](const GroupSpec& g, const std::vector<Coords>& chars, double delta) {
    return decode_all(g, bohr_set(g, encode_all(g, chars), delta).members);
  });
  m.def("weak_bogolyubov_global", [](const GroupSpec& g, const std::vector<Coords>& a) {
    const auto r = weak_bogolyubov_global(g, encode_all(g, a));
    return json{{"chars", elements_to_json(g, r.bohr.chars)}, {"radius", r.bohr.radius}, {"size", r.bohr.size()},
                {"k", r.k}, {"margin", r.margin}, {"margin_ok", r.margin_ok}, {"contained", r.contained}}
        .dump();
  });

  m.def(
      "freiman_cover",
      [](const GroupSpec& g, const std::vector<Coords>& a, double C) {
        CoverOptions o;
        o.C = C;
        return certificate_to_json(freiman_cover(g, encode_all(g, a), o)).dump();
      },
      py::arg("group"), py::arg("A"), py::arg("C") = 1e6);
  m.def(
      "verify_calculus",
      [](std::size_t cases, std::uint64_t seed, std::uint64_t group_max) {
        const auto r = verify_calculus(cases, seed, group_max);
        json j = json::object();
        for (const auto& e : r.entries) j[e.name] = {{"count", e.count}, {"violations", e.violations}, {"worst_slack", e.worst}};
        return j.dump();
      },
      py::arg("cases") = 50, py::arg("seed") = 1, py::arg("group_max") = 512);

  m.def("scenario_ap", [](std::int64_t N, std::int64_t length, std::int64_t step) { return scenario_json(ap_scenario(N, length, step)); },
        py::arg("N"), py::arg("length"), py::arg("step") = 1);
  m.def("scenario_binomial", [](int n, std::size_t d) { return scenario_json(binomial_scenario(n, d)); }, py::arg("n"),
        py::arg("d") = 1);
}
