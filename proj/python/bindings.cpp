#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "cmub_eur/bounds.hpp"
#include "cmub_eur/commands.hpp"
#include "cmub_eur/entropy.hpp"
#include "cmub_eur/errors.hpp"
#include "cmub_eur/scenario.hpp"

namespace py = pybind11;
using namespace cmub;

namespace {

py::dict to_dict(const BoundReport& r) {
  py::dict d;
  d["lhs_uncertainty"] = r.lhs_uncertainty;
  d["thm1_lower"] = r.thm1_lower;
  d["thm2_upper"] = r.thm2_upper;
  d["zhang_lower"] = r.zhang_lower;
  d["base_cmub_lower"] = r.base_cmub_lower;
  d["delta_cmub"] = r.delta_cmub;
  d["delta_zhang"] = r.delta_zhang;
  d["l_cmubs"] = r.l_cmubs;
  d["u_cmubs"] = r.u_cmubs;
  d["purity_a"] = r.purity_a;
  d["v"] = r.v;
  d["s_a"] = r.s_a;
  py::list meas;
  for (const auto& m : r.per_measurement) {
    py::dict e;
    e["basis_index"] = m.basis_index;
    e["memory"] = m.memory;
    e["shannon"] = m.shannon;
    e["conditional"] = m.conditional;
    e["holevo"] = m.holevo;
    meas.append(e);
  }
  d["per_measurement"] = meas;
  py::list mems;
  for (const auto& m : r.per_memory) {
    py::dict e;
    e["memory"] = m.memory;
    e["conditional"] = m.conditional;
    e["mutual_information"] = m.mutual_information;
    e["m_t"] = m.cardinality;
    mems.append(e);
  }
  d["per_memory"] = mems;
  return d;
}

StateKind kind_from(const std::string& s) {
  if (s == "pure") return StateKind::Pure;
  if (s == "mixed") return StateKind::Mixed;
  throw py::value_error("kind must be 'pure' or 'mixed'");
}

std::optional<Partition> partition_from(const std::string& text, int num_bases) {
  if (text.empty()) return std::nullopt;
  return Partition::parse(text, num_bases);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Entropic uncertainty bounds for complete sets of MUBs";

  auto base = py::register_exception<Error>(m, "Error", PyExc_ValueError);
  py::register_exception<ValidationError>(m, "ValidationError", base.ptr());
  py::register_exception<InvariantViolation>(m, "InvariantViolation", base.ptr());

  m.def("l_cmubs", &l_cmubs, py::arg("d"), py::arg("purity"));
  m.def("u_cmubs", &u_cmubs, py::arg("d"), py::arg("purity"));
  m.def("sanchez_ruiz_v", &sanchez_ruiz_v, py::arg("d"), py::arg("purity"));

  m.def(
      "mubs",
      [](const std::string& name) {
        const MubSet set = mubs_by_name(name);
        std::vector<ComplexMatrix> out;
        for (const auto& b : set.bases()) out.push_back(b.matrix());
        return out;
      },
      py::arg("name"), "Bases of a named MUB set; columns are the basis vectors.");

  m.def(
      "von_neumann_entropy",
      [](const ComplexMatrix& rho) {
        return von_neumann_entropy(QuantumState({"A"}, {static_cast<int>(rho.rows())}, rho));
      },
      py::arg("rho"));

  m.def(
      "evaluate_state",
      [](const ComplexMatrix& rho, const LabelSet& labels, const std::vector<int>& dims,
         const std::string& mub, const std::string& partition, const std::string& measured,
         const LabelSet& memories) {
        return to_dict(cli::run_bounds(
            {QuantumState(labels, dims, rho), mub, partition, measured, memories}));
      },
      py::arg("rho"), py::arg("labels"), py::arg("dims"), py::arg("mub") = "auto",
      py::arg("partition") = "", py::arg("measured") = "A",
      py::arg("memories") = LabelSet{});

  m.def(
      "evaluate_example",
      [](const std::string& example, double theta, double phi, std::uint64_t seed,
         std::uint64_t index, const std::string& kind, const std::string& partition) {
        const Example ex = parse_example(example);
        ExampleParams p{theta, phi, seed, index, kind_from(kind)};
        const int bases = ex == Example::Two ? 4 : ex == Example::Three ? 5 : 3;
        return to_dict(evaluate_all(build_scenario(ex, p, partition_from(partition, bases))));
      },
      py::arg("example"), py::arg("theta") = 0.0, py::arg("phi") = 0.0,
      py::arg("seed") = 0, py::arg("index") = 0, py::arg("kind") = "mixed",
      py::arg("partition") = "");

  m.def(
      "sweep",
      [](const std::string& example, const std::string& param, double lo, double hi,
         int steps, const std::map<std::string, double>& fixed) {
        cli::SweepConfig cfg;
        cfg.example = parse_example(example);
        cfg.param = param;
        cfg.lo = lo;
        cfg.hi = hi;
        cfg.steps = steps;
        cfg.fixed = fixed;
        py::list rows;
        for (const auto& row : cli::run_sweep(cfg)) {
          py::dict d = to_dict(row.report);
          d["param"] = row.param;
          rows.append(d);
        }
        return rows;
      },
      py::arg("example"), py::arg("param"), py::arg("lo"), py::arg("hi"),
      py::arg("steps") = 201, py::arg("fixed") = std::map<std::string, double>{});

  m.def(
      "random_batch",
      [](const std::string& example, const std::string& kind, std::uint64_t seed, int count) {
        cli::RandomConfig cfg;
        cfg.example = parse_example(example);
        cfg.spec = {.dim = 16, .kind = kind_from(kind), .seed = seed, .count = count};
        py::list rows;
        for (const auto& row : cli::run_random(cfg)) {
          py::dict d = to_dict(row.report);
          d["index"] = row.index;
          rows.append(d);
        }
        return rows;
      },
      py::arg("example") = "example3", py::arg("kind") = "mixed", py::arg("seed") = 42,
      py::arg("count") = 1000, "Reports sorted by uncertainty, each with its batch index.");

  m.def(
      "random_density",
      [](int dim, std::uint64_t seed, std::uint64_t index) {
        return random_mixed_density(dim, seed, index);
      },
      py::arg("dim"), py::arg("seed"), py::arg("index") = 0);

  m.def("verify", [] {
    std::vector<std::tuple<std::string, bool, std::string>> out;
    for (const auto& c : cli::run_verify(cli::default_verify_inputs()))
      out.emplace_back(c.name, c.passed, c.detail);
    return out;
  });
}
