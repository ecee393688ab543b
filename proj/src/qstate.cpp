#include "cmub_eur/qstate.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <sstream>

#include "cmub_eur/errors.hpp"

namespace cmub {

namespace {

std::string fmt_double(double x) {
  std::ostringstream os;
  os.precision(6);
  os << x;
  return os.str();
}

int product(const std::vector<int>& dims) {
  return std::accumulate(dims.begin(), dims.end(), 1, std::multiplies<>());
}

}  // namespace

QuantumState::QuantumState(LabelSet labels, std::vector<int> dims,
                           ComplexMatrix rho)
    : labels_(std::move(labels)), dims_(std::move(dims)), rho_(std::move(rho)) {
  if (labels_.size() != dims_.size()) {
    throw ValidationError("labels", "got " + std::to_string(labels_.size()) +
                                        " labels for " +
                                        std::to_string(dims_.size()) + " dims");
  }
  std::set<std::string> seen;
  for (const auto& l : labels_) {
    if (l.empty()) throw ValidationError("labels", "empty subsystem label");
    if (!seen.insert(l).second) {
      throw ValidationError("labels", "duplicate subsystem label '" + l + "'");
    }
  }
  for (int d : dims_) {
    if (d < 2) {
      throw ValidationError("dims", "subsystem dimension " + std::to_string(d) +
                                        " is below 2");
    }
  }
  const int total = product(dims_);
  if (rho_.rows() != total || rho_.cols() != total) {
    throw ValidationError("dims", "density matrix is " +
                                      std::to_string(rho_.rows()) + "x" +
                                      std::to_string(rho_.cols()) +
                                      " but dims multiply to " +
                                      std::to_string(total));
  }
  if (!rho_.allFinite()) {
    throw ValidationError("finite", "density matrix has non-finite entries");
  }
  const double herm = hermiticity_defect(rho_);
  if (herm > kHermitianTol) {
    throw ValidationError("hermitian",
                          "max |rho - rho^dagger| = " + fmt_double(herm));
  }
  const Complex tr = rho_.trace();
  if (std::abs(tr - Complex(1.0, 0.0)) > kTraceTol) {
    throw ValidationError("trace", "trace(rho) = " + fmt_double(tr.real()) +
                                       (tr.imag() != 0.0
                                            ? " + " + fmt_double(tr.imag()) + "i"
                                            : std::string()) +
                                       ", expected 1");
  }
  const auto spec = hermitian_eig(rho_);
  const double min_eig = spec.eigenvalues.minCoeff();
  if (min_eig < -kPsdTol) {
    throw ValidationError("positive_semidefinite",
                          "smallest eigenvalue is " + fmt_double(min_eig));
  }
}

QuantumState QuantumState::pure(LabelSet labels, std::vector<int> dims,
                                const ComplexVector& psi) {
  const double n = psi.norm();
  if (n == 0.0) throw ValidationError("trace", "zero state vector");
  const ComplexVector unit = psi / n;
  ComplexMatrix rho = unit * unit.adjoint();
  return QuantumState(std::move(labels), std::move(dims), std::move(rho));
}

bool QuantumState::has_label(std::string_view label) const {
  return std::find(labels_.begin(), labels_.end(), label) != labels_.end();
}

std::size_t QuantumState::index_of(std::string_view label) const {
  const auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) {
    throw LabelError("unknown subsystem label '" + std::string(label) + "'");
  }
  return static_cast<std::size_t>(it - labels_.begin());
}

QuantumState QuantumState::relabeled(LabelSet labels,
                                     std::vector<int> dims) const {
  return QuantumState(std::move(labels), std::move(dims), rho_);
}

QuantumState partial_trace(const QuantumState& state, const LabelSet& keep) {
  const auto& dims = state.dims();
  const std::size_t n = dims.size();
  std::vector<bool> kept(n, false);
  for (const auto& l : keep) kept[state.index_of(l)] = true;

  LabelSet out_labels;
  std::vector<int> out_dims;
  for (std::size_t s = 0; s < n; ++s) {
    if (kept[s]) {
      out_labels.push_back(state.labels()[s]);
      out_dims.push_back(dims[s]);
    }
  }

  // Split every full index into (kept part, traced part), both mixed-radix
  // in the original subsystem order.
  const int total = state.total_dim();
  std::vector<int> kept_index(total), traced_index(total);
  for (int f = 0; f < total; ++f) {
    int rem = f;
    int k = 0, t = 0, kstride = 1, tstride = 1;
    for (std::size_t s = n; s-- > 0;) {
      const int digit = rem % dims[s];
      rem /= dims[s];
      if (kept[s]) {
        k += digit * kstride;
        kstride *= dims[s];
      } else {
        t += digit * tstride;
        tstride *= dims[s];
      }
    }
    kept_index[f] = k;
    traced_index[f] = t;
  }

  const int out_dim = product(out_dims);
  ComplexMatrix out = ComplexMatrix::Zero(out_dim, out_dim);
  const ComplexMatrix& rho = state.rho();
  for (int f = 0; f < total; ++f) {
    for (int g = 0; g < total; ++g) {
      if (traced_index[f] == traced_index[g]) {
        out(kept_index[f], kept_index[g]) += rho(f, g);
      }
    }
  }
  out = 0.5 * (out + out.adjoint()).eval();
  return QuantumState(std::move(out_labels), std::move(out_dims),
                      std::move(out));
}

ComplexMatrix embed_operator(const QuantumState& state, std::string_view label,
                             const ComplexMatrix& op) {
  const std::size_t pos = state.index_of(label);
  const auto& dims = state.dims();
  if (op.rows() != dims[pos] || op.cols() != dims[pos]) {
    throw DimensionError("operator on '" + std::string(label) + "' is " +
                         std::to_string(op.rows()) + "x" +
                         std::to_string(op.cols()) + ", subsystem dimension is " +
                         std::to_string(dims[pos]));
  }
  int left = 1, right = 1;
  for (std::size_t s = 0; s < pos; ++s) left *= dims[s];
  for (std::size_t s = pos + 1; s < dims.size(); ++s) right *= dims[s];
  return kron(kron(ComplexMatrix::Identity(left, left), op),
              ComplexMatrix::Identity(right, right));
}

QuantumState post_measurement_state(const QuantumState& state,
                                    const OrthonormalBasis& basis,
                                    std::string_view measured) {
  const int d = state.dim_of(measured);
  if (basis.dim() != d) {
    throw DimensionError("basis dimension " + std::to_string(basis.dim()) +
                         " does not match subsystem '" + std::string(measured) +
                         "' of dimension " + std::to_string(d));
  }
  const int total = state.total_dim();
  ComplexMatrix out = ComplexMatrix::Zero(total, total);
  for (int i = 0; i < d; ++i) {
    const ComplexMatrix p = embed_operator(state, measured, basis.projector(i));
    out.noalias() += p * state.rho() * p;
  }
  out = 0.5 * (out + out.adjoint()).eval();
  return QuantumState(state.labels(), state.dims(), std::move(out));
}

}  // namespace cmub
