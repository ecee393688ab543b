#include "cmub_eur/io.hpp"

#include <fstream>

#include "cmub_eur/errors.hpp"

namespace cmub {

using nlohmann::json;

namespace {

json matrix_part(const ComplexMatrix& m, bool imag) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      row.push_back(imag ? m(i, j).imag() : m(i, j).real());
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

void read_part(const json& rows, ComplexMatrix& m, bool imag, const char* key) {
  if (!rows.is_array() || static_cast<Eigen::Index>(rows.size()) != m.rows()) {
    throw ValidationError("schema", std::string("'") + key + "' must have " +
                                        std::to_string(m.rows()) + " rows");
  }
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    const json& row = rows[static_cast<std::size_t>(i)];
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != m.cols()) {
      throw ValidationError("schema", std::string("row ") + std::to_string(i) +
                                          " of '" + key + "' must have " +
                                          std::to_string(m.cols()) + " entries");
    }
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      const json& x = row[static_cast<std::size_t>(j)];
      if (!x.is_number()) {
        throw ValidationError("schema", std::string("non-numeric entry in '") +
                                            key + "'");
      }
      if (imag) {
        m(i, j).imag(x.get<double>());
      } else {
        m(i, j).real(x.get<double>());
      }
    }
  }
}

}  // namespace

QuantumState state_from_json(const json& doc) {
  if (!doc.is_object()) throw ValidationError("schema", "expected a JSON object");
  for (const char* key : {"labels", "dims", "re"}) {
    if (!doc.contains(key)) {
      throw ValidationError("schema", std::string("missing field '") + key + "'");
    }
  }
  LabelSet labels;
  std::vector<int> dims;
  try {
    labels = doc.at("labels").get<LabelSet>();
    dims = doc.at("dims").get<std::vector<int>>();
  } catch (const json::exception& e) {
    throw ValidationError("schema", e.what());
  }
  long total = 1;
  for (int d : dims) {
    if (d < 1 || d > 4096) {
      throw ValidationError("dims", "subsystem dimension " + std::to_string(d) +
                                        " out of range");
    }
    total *= d;
    if (total > 4096) throw ValidationError("dims", "state is too large");
  }
  const auto n = static_cast<Eigen::Index>(doc.at("re").size());
  ComplexMatrix rho = ComplexMatrix::Zero(n, n);
  read_part(doc.at("re"), rho, false, "re");
  if (doc.contains("im")) read_part(doc.at("im"), rho, true, "im");
  return QuantumState(std::move(labels), std::move(dims), std::move(rho));
}

QuantumState read_state_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("schema", "cannot open " + path.string());
  json doc;
  try {
    in >> doc;
  } catch (const json::parse_error& e) {
    throw ValidationError("schema", path.string() + ": " + e.what());
  }
  return state_from_json(doc);
}

json state_to_json(const QuantumState& state) {
  return json{{"labels", state.labels()},
              {"dims", state.dims()},
              {"re", matrix_part(state.rho(), false)},
              {"im", matrix_part(state.rho(), true)}};
}

json mubs_to_json(const MubSet& mubs) {
  json bases = json::array();
  for (const auto& b : mubs.bases()) {
    const ComplexMatrix rows = b.matrix().transpose();
    bases.push_back({{"re", matrix_part(rows, false)},
                     {"im", matrix_part(rows, true)}});
  }
  return json{{"dim", mubs.dim()}, {"bases", std::move(bases)}};
}

json report_to_json(const BoundReport& r) {
  json per_measurement = json::array();
  for (const auto& m : r.per_measurement) {
    per_measurement.push_back({{"basis_index", m.basis_index},
                               {"memory", m.memory},
                               {"shannon", m.shannon},
                               {"conditional", m.conditional},
                               {"holevo", m.holevo}});
  }
  json per_memory = json::array();
  for (const auto& m : r.per_memory) {
    per_memory.push_back({{"memory", m.memory},
                          {"conditional", m.conditional},
                          {"mutual_information", m.mutual_information},
                          {"m_t", m.cardinality}});
  }
  return json{{"lhs_uncertainty", r.lhs_uncertainty},
              {"thm1_lower", r.thm1_lower},
              {"thm2_upper", r.thm2_upper},
              {"zhang_lower", r.zhang_lower},
              {"base_cmub_lower", r.base_cmub_lower},
              {"delta_cmub", r.delta_cmub},
              {"delta_zhang", r.delta_zhang},
              {"l_cmubs", r.l_cmubs},
              {"u_cmubs", r.u_cmubs},
              {"purity_a", r.purity_a},
              {"v", r.v},
              {"s_a", r.s_a},
              {"per_measurement", std::move(per_measurement)},
              {"per_memory", std::move(per_memory)}};
}

}  // namespace cmub
