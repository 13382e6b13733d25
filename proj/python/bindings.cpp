#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "sylgen/audit/audit.hpp"
#include "sylgen/classical/actions.hpp"
#include "sylgen/error.hpp"
#include "sylgen/generation/generation.hpp"
#include "sylgen/overgroup/overgroup.hpp"
#include "sylgen/report/cli.hpp"
#include "sylgen/report/report.hpp"
#include "sylgen/sylow/sylow.hpp"

namespace py = pybind11;
using namespace sylgen;

namespace
{

struct Loaded
{
  classical::GroupSpec spec;
  perm::PermGroup G, P;
};

Loaded load(std::string const &spec, std::uint64_t seed = 1)
{
  Loaded l;
  l.spec = classical::parse_group_spec(spec);
  l.G = classical::construct_group(l.spec).group;
  l.P = sylow::sylow_subgroup(l.G, 2, seed).P;
  return l;
}

py::exception<Error> *g_exc = nullptr;

std::string dump(nlohmann::json const &j)
{
  return report::report_serialize(j);
}

} // namespace

PYBIND11_MODULE(_sylgen, m)
{
  m.doc() = "Sylow 2-subgroup generation engine";
  // leaked on purpose: outlives interpreter finalization
  g_exc = new py::exception<Error>(m, "SylgenError");
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p)
        std::rethrow_exception(p);
    } catch (Error const &e) {
      py::object inst = py::handle(*g_exc)(e.what());
      inst.attr("kind") = std::string(error_kind_name(e.kind()));
      PyErr_SetObject(g_exc->ptr(), inst.ptr());
    }
  });

  m.def("group_order", [](std::string const &spec) {
    return to_string(classical::construct_group(classical::parse_group_spec(spec)).group.order());
  });
  m.def("expected_order",
        [](std::string const &spec) { return to_string(classical::expected_order(classical::parse_group_spec(spec))); });
  m.def(
      "sylow_order",
      [](std::string const &spec, std::uint64_t p, std::uint64_t seed) {
        auto G = classical::construct_group(classical::parse_group_spec(spec)).group;
        return to_string(sylow::sylow_subgroup(G, p, seed).P.order());
      },
      py::arg("spec"), py::arg("p") = 2, py::arg("seed") = 1);
  m.def("normalizer_json", [](std::string const &spec) {
    auto l = load(spec);
    auto r = sylow::normalizer_of_sylow2(l.G, l.P);
    nlohmann::json j;
    j["normalizer_order"] = to_string(r.normalizer_order);
    j["index"] = to_string(r.index);
    j["orbit_index"] = r.orbit_index ? nlohmann::json(to_string(*r.orbit_index)) : nlohmann::json(nullptr);
    j["match"] = r.match;
    try {
      j["expected"] = to_string(sylow::expected_normalizer_index(l.spec));
    } catch (Error const &e) {
      if (e.kind() != ErrorKind::Uncovered)
        throw;
      j["expected"] = nullptr;
    }
    return dump(j);
  });
  m.def("sigma_json", [](std::string const &spec) {
    auto l = load(spec);
    return dump(overgroup::sigma_table(l.G, l.P, l.spec.str()).to_json());
  });
  m.def("count_lemma_json", [](std::string const &spec) {
    auto l = load(spec);
    overgroup::OvergroupLattice lat(l.G, l.P);
    return dump(overgroup::verify_count_lemma(lat).to_json());
  });
  m.def(
      "generate_json",
      [](std::string const &spec, std::uint64_t samples, std::uint64_t seed) {
        auto l = load(spec);
        auto classes = perm::ConjClassTable::compute(l.G);
        return dump(generation::exists_generating_conjugate_all_classes(l.G, l.P, classes, samples, seed).to_json());
      },
      py::arg("spec"), py::arg("samples") = 200, py::arg("seed") = 1);
  m.def(
      "obstruction_json",
      [](std::string const &scenario, std::uint64_t samples, std::uint64_t seed) {
        if (scenario == "an")
          return dump(generation::an_obstruction(15, 2, {3}, samples, seed).to_json());
        if (scenario == "l52")
          return dump(generation::l52_obstruction(samples, seed).to_json());
        throw Error(ErrorKind::ParseError, "scenario must be 'an' or 'l52'");
      },
      py::arg("scenario"), py::arg("samples") = 1000, py::arg("seed") = 1);
  m.def("parabolic_sigma", [](unsigned n, std::uint64_t q, unsigned dm, unsigned dp) {
    return to_string(overgroup::parabolic_sigma_semisimple(n, q, dm, dp));
  });
  m.def(
      "eval_bound",
      [](std::string const &id, long n, std::uint64_t q, unsigned bits) {
        auto v = audit::eval_bound(id, {n, q}, bits);
        return std::pair{to_string(v.lo), to_string(v.hi)};
      },
      py::arg("id"), py::arg("n") = 0, py::arg("q") = 0, py::arg("bits") = 64);
  m.def(
      "audit_json",
      [](std::string const &id, std::vector<std::pair<long, std::uint64_t>> const &points, unsigned bits) {
        std::vector<audit::BoundParams> grid;
        for (auto const &[n, q] : points)
          grid.push_back({n, q});
        if (grid.empty())
          grid = audit::default_grid(id);
        return dump(audit::audit_range(id, grid, bits).to_json());
      },
      py::arg("id"), py::arg("points") = std::vector<std::pair<long, std::uint64_t>>{}, py::arg("bits") = 64);
  m.def("bound_ids", [] {
    std::vector<std::string> ids;
    for (auto const &e : audit::registry())
      ids.push_back(e.id);
    return ids;
  });
  m.def("irreducible_check_json", [] { return dump(generation::irreducible_transvection_check().to_json()); });
  m.def("run", [](std::vector<std::string> const &args) {
    std::ostringstream out, err;
    int code = report::run_command(args, out, err);
    return py::make_tuple(code, out.str(), err.str());
  });
}
