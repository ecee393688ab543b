#include "cmub_eur/random.hpp"

#include <cmath>
#include <numbers>
#include <numeric>

#include "cmub_eur/errors.hpp"

namespace cmub {

void RandomStateSpec::validate() const {
  if (dim < 2) {
    throw ValidationError("random_spec", "dim " + std::to_string(dim) + " < 2");
  }
  if (count < 1) {
    throw ValidationError("random_spec",
                          "count " + std::to_string(count) + " < 1");
  }
}

namespace {

std::mt19937_64 seeded_engine(std::uint64_t seed, std::uint64_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed & 0xffffffffu),
                    static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index & 0xffffffffu),
                    static_cast<std::uint32_t>(index >> 32)};
  return std::mt19937_64(seq);
}

}  // namespace

Rng::Rng(std::uint64_t seed, std::uint64_t index)
    : engine_(seeded_engine(seed, index)) {}

double Rng::uniform() {
  return (static_cast<double>(engine_() >> 11) + 0.5) * 0x1.0p-53;
}

double Rng::normal() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  const double u1 = uniform();
  const double u2 = uniform();
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double phase = 2.0 * std::numbers::pi * u2;
  spare_ = r * std::sin(phase);
  has_spare_ = true;
  return r * std::cos(phase);
}

ComplexMatrix random_mixed_density(int dim, std::uint64_t seed,
                                   std::uint64_t index) {
  Rng rng(seed, index);
  std::vector<double> q(static_cast<std::size_t>(dim));
  q[0] = rng.uniform();
  for (std::size_t k = 1; k < q.size(); ++k) q[k] = rng.uniform() * q[k - 1];
  const double total = std::accumulate(q.begin(), q.end(), 0.0);

  Eigen::MatrixXd r(dim, dim);
  for (int i = 0; i < dim; ++i) {
    for (int j = 0; j < dim; ++j) r(i, j) = rng.uniform(-1.0, 1.0);
  }
  ComplexMatrix h(dim, dim);
  for (int i = 0; i < dim; ++i) {
    for (int j = 0; j < dim; ++j) {
      if (i == j) {
        h(i, j) = r(i, i);
      } else if (i < j) {
        // (U^T + U) on the real side, i(L - L^T) on the imaginary side.
        h(i, j) = Complex(r(i, j), -r(j, i));
      } else {
        h(i, j) = Complex(r(j, i), r(i, j));
      }
    }
  }
  const auto eig = hermitian_eig(h);
  ComplexMatrix rho = ComplexMatrix::Zero(dim, dim);
  for (int k = 0; k < dim; ++k) {
    const ComplexVector v = eig.eigenvectors.col(k);
    rho += (q[static_cast<std::size_t>(k)] / total) * (v * v.adjoint());
  }
  return 0.5 * (rho + rho.adjoint());
}

ComplexVector random_pure_vector(int dim, std::uint64_t seed,
                                 std::uint64_t index) {
  Rng rng(seed, index);
  ComplexVector psi(dim);
  for (int j = 0; j < dim; ++j) {
    const double re = rng.normal();
    const double im = rng.normal();
    psi(j) = Complex(re, im);
  }
  return psi / psi.norm();
}

Layout default_layout(int dim) {
  const int k = static_cast<int>(std::lround(std::sqrt(dim)));
  if (k >= 2 && k * k == dim) return {{"A", "B"}, {k, k}};
  return {{"A"}, {dim}};
}

QuantumState random_state(StateKind kind, const Layout& layout,
                          std::uint64_t seed, std::uint64_t index) {
  const int dim =
      std::accumulate(layout.dims.begin(), layout.dims.end(), 1, std::multiplies<>());
  if (kind == StateKind::Pure) {
    return QuantumState::pure(layout.labels, layout.dims,
                              random_pure_vector(dim, seed, index));
  }
  return QuantumState(layout.labels, layout.dims,
                      random_mixed_density(dim, seed, index));
}

std::vector<QuantumState> random_states(const RandomStateSpec& spec,
                                        const Layout& layout) {
  spec.validate();
  const int dim =
      std::accumulate(layout.dims.begin(), layout.dims.end(), 1, std::multiplies<>());
  if (dim != spec.dim) {
    throw ValidationError("random_spec", "layout dimension " +
                                             std::to_string(dim) +
                                             " differs from requested dim " +
                                             std::to_string(spec.dim));
  }
  std::vector<QuantumState> out;
  out.reserve(static_cast<std::size_t>(spec.count));
  for (int i = 0; i < spec.count; ++i) {
    out.push_back(random_state(spec.kind, layout, spec.seed,
                               static_cast<std::uint64_t>(i)));
  }
  return out;
}

std::vector<QuantumState> random_states(const RandomStateSpec& spec) {
  return random_states(spec, default_layout(spec.dim));
}

std::vector<QuantumState> random_mixed_states(const RandomStateSpec& spec) {
  RandomStateSpec s = spec;
  s.kind = StateKind::Mixed;
  return random_states(s);
}

std::vector<QuantumState> random_pure_states(const RandomStateSpec& spec) {
  RandomStateSpec s = spec;
  s.kind = StateKind::Pure;
  return random_states(s);
}

}  // namespace cmub
