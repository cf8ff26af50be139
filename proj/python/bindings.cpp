// Python bindings. Values cross the boundary as the same JSON-shaped
// documents the CLI reads and writes (dicts and lists of plain ints and
// strings), so the schemas in the README apply unchanged.

#include <pybind11/pybind11.h>

#include "reflexpm/classify.hpp"
#include "reflexpm/errors.hpp"
#include "reflexpm/io.hpp"
#include "reflexpm/verify.hpp"

namespace py = pybind11;
using namespace reflexpm;
using io::Json;

namespace {

py::object to_py(const Json& j) { return py::module_::import("json").attr("loads")(io::dump(j)); }

Json from_py(const py::handle& obj) {
  return io::parse_json(py::module_::import("json").attr("dumps")(obj).cast<std::string>());
}

py::list to_py_list(const Json& items) { return to_py(items); }

std::int64_t cap_or_default(int d, const py::object& cap) {
  return cap.is_none() ? default_sweep_cap(d) : cap.cast<std::int64_t>();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Discrete polymatroids, sublattices and reflexive independence polytopes";

  auto base = py::register_exception<Error>(m, "Error", PyExc_Exception);
  py::register_exception<InputError>(m, "InputError", base);
  py::register_exception<CapabilityError>(m, "CapabilityError", base);
  py::register_exception<VerificationError>(m, "VerificationError", base);
  py::register_exception<InternalError>(m, "InternalError", base);

  m.def("enumerate_sublattices", [](int d) {
    Json out = Json::array();
    for (const auto& f : enumerate_sublattices(d)) out.push_back(io::to_json(f));
    return to_py_list(out);
  }, py::arg("d"), "All sublattices of 2^[d] containing {} and [d], in lex order (d <= 4).");

  m.def("is_sublattice", [](const py::object& family) {
    return is_sublattice(io::family_from_json(from_py(family)));
  }, py::arg("family"));

  m.def("lattice_closure", [](const py::object& family) {
    return to_py(io::to_json(lattice_closure(io::family_from_json(from_py(family)))));
  }, py::arg("family"));

  m.def("rank_from_sublattice", [](const py::object& family) {
    return to_py(io::to_json(rank_from_sublattice(io::family_from_json(from_py(family)))));
  }, py::arg("family"), "rho(X) = min |A| + 1 over sets A of the family, other than {}, containing X.");

  m.def("validate_rank", [](const py::object& rank) {
    const Json j = from_py(rank);
    return to_py(io::to_json(validate_rank(j.at("d").get<int>(), j.at("values").get<std::vector<std::int64_t>>())));
  }, py::arg("rank"));

  m.def("points_of_rank", [](const py::object& rank) {
    return to_py(io::to_json(points_of_rank(io::rank_from_json(from_py(rank)))));
  }, py::arg("rank"));

  m.def("rank_of_points", [](const py::object& points) {
    return to_py(io::to_json(rank_of_points(io::points_from_json(from_py(points)))));
  }, py::arg("points"));

  m.def("is_discrete_polymatroid", [](const py::object& points) {
    return to_py(io::to_json(is_discrete_polymatroid(io::points_from_json(from_py(points)))));
  }, py::arg("points"));

  m.def("facet_family", [](const py::object& rank) {
    return to_py(io::to_json(facet_family(io::rank_from_json(from_py(rank)))));
  }, py::arg("rank"));

  m.def("independence_hrep", [](const py::object& rank, bool facets_only) {
    return to_py(io::to_json(independence_hrep(io::rank_from_json(from_py(rank)), facets_only)));
  }, py::arg("rank"), py::arg("facets_only") = false);

  m.def("vertices", [](const py::object& hrep) {
    return to_py(io::to_json(vertices(io::hpolytope_from_json(from_py(hrep)))));
  }, py::arg("hrep"));

  m.def("is_reflexive_lemma", [](const py::object& rank) {
    return is_reflexive_lemma(io::rank_from_json(from_py(rank)));
  }, py::arg("rank"));

  m.def("is_reflexive_direct", [](const py::object& hrep) {
    return to_py(io::to_json(is_reflexive_direct(io::hpolytope_from_json(from_py(hrep)))));
  }, py::arg("hrep"));

  m.def("classify", [](int d, bool transversal) {
    Json out = Json::array();
    for_each_classification(d, transversal, [&](const ClassificationRecord& r) { out.push_back(io::to_json(r)); });
    return to_py_list(out);
  }, py::arg("d"), py::arg("transversal") = false);

  m.def("sweep", [](int d, const py::object& cap) {
    Json out = Json::array();
    for_each_rank_function(d, cap_or_default(d, cap), [&](const RankFunction& r) { out.push_back(io::to_json(r)); });
    return to_py_list(out);
  }, py::arg("d"), py::arg("cap") = py::none(), "Valid loopless rank functions with values <= cap (default 2d).");

  m.def("sublattice_audit", [](int d, const py::object& cap) {
    Json out = Json::array();
    for (const auto& f : sublattice_audit(d, cap_or_default(d, cap))) out.push_back(io::to_json(f));
    return to_py_list(out);
  }, py::arg("d"), py::arg("cap") = py::none());

  m.def("transversal_rank", [](const py::object& presentation) {
    return to_py(io::to_json(transversal_rank(io::presentation_from_json(from_py(presentation)))));
  }, py::arg("presentation"));

  m.def("find_transversal", [](const py::object& rank, const py::object& n) -> py::object {
    const auto rho = io::rank_from_json(from_py(rank));
    const std::int64_t blocks = n.is_none() ? rho[full_mask(rho.d())] : n.cast<std::int64_t>();
    const auto found = find_transversal(rho, blocks);
    if (!found) return py::none();
    return to_py(io::to_json(*found));
  }, py::arg("rank"), py::arg("n") = py::none());

  m.def("verify", [](int dmax) {
    if (dmax < 1 || dmax > 8) throw InputError("dmax must lie in 1..8");
    SuiteOptions options;
    options.chain_dmax = dmax;
    Json out = Json::array();
    for (const auto& r : run_suite(options)) {
      Json checks = Json::array();
      for (const auto& c : r.checks) checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
      out.push_back({{"id", r.id},
                     {"name", r.name},
                     {"passed", r.passed()},
                     {"seconds", r.seconds},
                     {"limit_seconds", r.limit_seconds},
                     {"checks", checks}});
    }
    return to_py_list(out);
  }, py::arg("dmax") = 6, "Runs the verification criteria (chain identity up to dmax) and returns one dict per criterion.");
}
