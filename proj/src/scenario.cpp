#include "cmub_eur/scenario.hpp"

#include <cmath>

#include "cmub_eur/errors.hpp"

namespace cmub {

namespace {

ComplexVector basis_superposition(int dim, std::initializer_list<std::pair<int, double>> terms) {
  ComplexVector psi = ComplexVector::Zero(dim);
  for (const auto& [idx, amp] : terms) psi(idx) += amp;
  return psi;
}

}  // namespace

QuantumState example1_state(double theta) {
  return QuantumState::pure(
      {"A", "B"}, {2, 2},
      basis_superposition(4, {{0, std::cos(theta)}, {3, std::sin(theta)}}));
}

QuantumState example2_state(double phi, double theta) {
  const double s = std::sin(phi);
  // |jj> sits at index 4j in the 3x3 product basis.
  return QuantumState::pure({"A", "B"}, {3, 3},
                            basis_superposition(9, {{0, s * std::cos(theta)},
                                                    {4, s * std::sin(theta)},
                                                    {8, std::cos(phi)}}));
}

QuantumState example4_w_state(double phi, double theta) {
  const double s = std::sin(phi);
  return QuantumState::pure({"A", "B1", "B2"}, {2, 2, 2},
                            basis_superposition(8, {{0b001, s * std::cos(theta)},
                                                    {0b010, s * std::sin(theta)},
                                                    {0b100, std::cos(phi)}}));
}

QuantumState example5_ghz_state(double theta) {
  return QuantumState::pure(
      {"A", "B1", "B2", "B3"}, {2, 2, 2, 2},
      basis_superposition(16, {{0, std::cos(theta)}, {15, std::sin(theta)}}));
}

QuantumState as_four_qubits(const QuantumState& state) {
  if (state.total_dim() != 16) {
    throw DimensionError("as_four_qubits: state has dimension " +
                         std::to_string(state.total_dim()) + ", expected 16");
  }
  return state.relabeled({"A", "B1", "B2", "B3"}, {2, 2, 2, 2});
}

Example parse_example(const std::string& text) {
  std::string digits = text;
  if (digits.starts_with("example")) digits = digits.substr(7);
  if (digits.size() == 1 && digits[0] >= '1' && digits[0] <= '6') {
    return static_cast<Example>(digits[0] - '0');
  }
  throw ValidationError("example", "unknown example '" + text + "'");
}

std::string example_name(Example ex) {
  return "example" + std::to_string(static_cast<int>(ex));
}

GameScenario scenario_for_state(Example ex, QuantumState state,
                                std::optional<Partition> partition) {
  switch (ex) {
    case Example::One:
    case Example::Two:
    case Example::Three: {
      MubSet mubs = standard_mubs(ex == Example::One   ? 2
                                  : ex == Example::Two ? 3
                                                       : 4);
      Partition p = partition.value_or(Partition::single(static_cast<int>(mubs.size())));
      const int n = p.num_memories();
      if (n != 1) {
        throw ValidationError("partition",
                              example_name(ex) + " has a single memory B");
      }
      return GameScenario(std::move(state), "A", {"B"}, std::move(mubs),
                          std::move(p));
    }
    case Example::Four: {
      Partition p = partition.value_or(Partition({{0}, {1, 2}}, 3));
      LabelSet mem{"B1", "B2"};
      mem.resize(static_cast<std::size_t>(std::min(p.num_memories(), 2)));
      if (p.num_memories() > 2) {
        throw ValidationError("partition",
                              "example4 has only two memories B1, B2");
      }
      return GameScenario(std::move(state), "A", std::move(mem), pauli_mubs(),
                          std::move(p));
    }
    case Example::Five:
    case Example::Six: {
      Partition p = partition.value_or(Partition::singletons(3));
      LabelSet mem{"B1", "B2", "B3"};
      mem.resize(static_cast<std::size_t>(std::min(p.num_memories(), 3)));
      return GameScenario(std::move(state), "A", std::move(mem), pauli_mubs(),
                          std::move(p));
    }
  }
  throw ValidationError("example", "unknown example");
}

GameScenario build_scenario(Example ex, const ExampleParams& params,
                            std::optional<Partition> partition) {
  switch (ex) {
    case Example::One:
      return scenario_for_state(ex, example1_state(params.theta), partition);
    case Example::Two:
      return scenario_for_state(ex, example2_state(params.phi, params.theta),
                                partition);
    case Example::Three:
      return scenario_for_state(
          ex, random_state(params.kind, {{"A", "B"}, {4, 4}}, params.seed,
                           params.index),
          partition);
    case Example::Four:
      return scenario_for_state(ex, example4_w_state(params.phi, params.theta),
                                partition);
    case Example::Five:
      return scenario_for_state(ex, example5_ghz_state(params.theta), partition);
    case Example::Six:
      return scenario_for_state(
          ex,
          as_four_qubits(random_state(params.kind, {{"A", "B"}, {4, 4}},
                                      params.seed, params.index)),
          partition);
  }
  throw ValidationError("example", "unknown example");
}

}  // namespace cmub
