#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "cmub_eur/game.hpp"
#include "cmub_eur/random.hpp"

namespace cmub {

// cos(theta)|00> + sin(theta)|11>, subsystems A, B.
QuantumState example1_state(double theta);
// sin(phi)cos(theta)|00> + sin(phi)sin(theta)|11> + cos(phi)|22>, A, B.
QuantumState example2_state(double phi, double theta);
// sin(phi)cos(theta)|001> + sin(phi)sin(theta)|010> + cos(phi)|100>,
// subsystems A, B1, B2 with A the first qubit.
QuantumState example4_w_state(double phi, double theta);
// cos(theta)|0000> + sin(theta)|1111>, subsystems A, B1, B2, B3.
QuantumState example5_ghz_state(double theta);

// Reinterprets a 16-dimensional state as four qubits A, B1, B2, B3 by
// splitting each index into bits, most significant bit first.
QuantumState as_four_qubits(const QuantumState& state);

enum class Example { One = 1, Two, Three, Four, Five, Six };

// Accepts "1".."6" and "example1".."example6".
Example parse_example(const std::string& text);
std::string example_name(Example ex);

struct ExampleParams {
  double theta = 0.0;
  double phi = 0.0;
  // Examples 3 and 6 draw item `index` of the batch seeded with `seed`.
  std::uint64_t seed = 0;
  std::uint64_t index = 0;
  StateKind kind = StateKind::Mixed;
};

// Default game for each example:
//   1, 2, 3: one memory B receiving every basis;
//   4: M1 -> B1, {M2, M3} -> B2;
//   5, 6: M_i -> B_i.
// Example 3 uses the ququart table on a random 4x4 state, example 6 the Pauli
// bases on a random 16-dimensional state read as four qubits.
GameScenario build_scenario(Example ex, const ExampleParams& params,
                            std::optional<Partition> partition = std::nullopt);

// The example's game around an already-built state (layout must match).
GameScenario scenario_for_state(Example ex, QuantumState state,
                                std::optional<Partition> partition = std::nullopt);

}  // namespace cmub
