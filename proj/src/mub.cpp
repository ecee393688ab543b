#include "cmub_eur/mub.hpp"

#include <charconv>
#include <cmath>
#include <numbers>
#include <sstream>

#include "cmub_eur/errors.hpp"

namespace cmub {

namespace {

using Vecs = std::vector<std::vector<Complex>>;

constexpr Complex kI{0.0, 1.0};

OrthonormalBasis scaled(Vecs vecs, double scale) {
  for (auto& v : vecs) {
    for (auto& x : v) x *= scale;
  }
  return OrthonormalBasis::from_vectors(vecs);
}

}  // namespace

MubSet::MubSet(std::vector<OrthonormalBasis> bases) : bases_(std::move(bases)) {
  if (bases_.empty()) throw ValidationError("cardinality", "no bases given");
  const int d = bases_.front().dim();
  if (bases_.size() != static_cast<std::size_t>(d) + 1) {
    throw ValidationError("cardinality",
                          "a complete set in dimension " + std::to_string(d) +
                              " needs " + std::to_string(d + 1) +
                              " bases, got " + std::to_string(bases_.size()));
  }
  std::vector<ComplexMatrix> mats;
  mats.reserve(bases_.size());
  for (const auto& b : bases_) mats.push_back(b.matrix());
  const MubCheck check = verify_mub(mats, kUnbiasedTol);
  if (!check.passed) {
    std::ostringstream os;
    os << "overlap deviation " << check.max_overlap_deviation
       << ", Gram deviation " << check.max_gram_deviation;
    throw ValidationError("unbiased", os.str());
  }
}

MubCheck verify_mub(std::span<const ComplexMatrix> candidates, double tol) {
  MubCheck out;
  if (candidates.empty()) {
    out.passed = true;
    return out;
  }
  const Eigen::Index d = candidates.front().rows();
  for (const auto& c : candidates) {
    if (c.rows() != d || c.cols() != d) {
      throw DimensionError("verify_mub: all candidate bases must be " +
                           std::to_string(d) + "x" + std::to_string(d));
    }
    out.max_gram_deviation = std::max(out.max_gram_deviation, gram_defect(c));
  }
  const double target = 1.0 / static_cast<double>(d);
  for (std::size_t a = 0; a < candidates.size(); ++a) {
    for (std::size_t b = a + 1; b < candidates.size(); ++b) {
      const ComplexMatrix overlaps = candidates[a].adjoint() * candidates[b];
      const double dev =
          (overlaps.cwiseAbs2().array() - target).abs().maxCoeff();
      out.max_overlap_deviation = std::max(out.max_overlap_deviation, dev);
    }
  }
  out.passed = out.max_overlap_deviation <= tol && out.max_gram_deviation <= tol;
  return out;
}

MubCheck verify_mub(const MubSet& set, double tol) {
  std::vector<ComplexMatrix> mats;
  for (const auto& b : set.bases()) mats.push_back(b.matrix());
  return verify_mub(mats, tol);
}

MubSet pauli_mubs() {
  const double s = 1.0 / std::sqrt(2.0);
  return MubSet({
      OrthonormalBasis::computational(2),
      scaled({{1, 1}, {1, -1}}, s),
      scaled({{1, kI}, {1, -kI}}, s),
  });
}

MubSet qutrit_mubs() {
  const Complex w{-0.5, std::sqrt(3.0) / 2.0};
  const Complex w2 = w * w;
  const double s = 1.0 / std::sqrt(3.0);
  return MubSet({
      OrthonormalBasis::computational(3),
      scaled({{1, 1, 1}, {1, w, w2}, {1, w2, w}}, s),
      scaled({{1, w, w}, {1, w2, 1}, {1, 1, w2}}, s),
      scaled({{1, w2, w2}, {1, w, 1}, {1, 1, w}}, s),
  });
}

MubSet ququart_mubs() {
  const Complex i = kI;
  return MubSet({
      OrthonormalBasis::computational(4),
      scaled({{1, 1, 1, 1}, {1, 1, -1, -1}, {1, -1, -1, 1}, {1, -1, 1, -1}},
             0.5),
      scaled({{1, -1, -i, -i}, {1, -1, i, i}, {1, 1, i, -i}, {1, 1, -i, i}},
             0.5),
      scaled({{1, -i, -i, -1}, {1, -i, i, 1}, {1, i, i, -1}, {1, i, -i, 1}},
             0.5),
      scaled({{1, -i, -1, -i}, {1, -i, 1, i}, {1, i, -1, i}, {1, i, 1, -i}},
             0.5),
  });
}

bool is_odd_prime(int d) {
  if (d < 3 || d % 2 == 0) return false;
  for (int f = 3; f * f <= d; f += 2) {
    if (d % f == 0) return false;
  }
  return true;
}

MubSet prime_mubs(int d) {
  if (!is_odd_prime(d) || d > 31) {
    throw UnsupportedDimension("prime_mubs: " + std::to_string(d) +
                               " is not an odd prime <= 31");
  }
  std::vector<OrthonormalBasis> bases{OrthonormalBasis::computational(d)};
  const double norm = 1.0 / std::sqrt(static_cast<double>(d));
  for (int a = 0; a < d; ++a) {
    ComplexMatrix cols(d, d);
    for (int k = 0; k < d; ++k) {
      for (int j = 0; j < d; ++j) {
        // Reduce the exponent mod d before forming the phase.
        const int e = (a * j * j + k * j) % d;
        cols(j, k) = std::polar(norm, 2.0 * std::numbers::pi * e / d);
      }
    }
    bases.emplace_back(std::move(cols));
  }
  return MubSet(std::move(bases));
}

MubSet standard_mubs(int d) {
  switch (d) {
    case 2:
      return pauli_mubs();
    case 3:
      return qutrit_mubs();
    case 4:
      return ququart_mubs();
    default:
      return prime_mubs(d);
  }
}

MubSet mubs_by_name(const std::string& name) {
  if (name == "pauli") return pauli_mubs();
  if (name == "qutrit") return qutrit_mubs();
  if (name == "ququart") return ququart_mubs();
  auto parse_int = [&](std::string_view digits) {
    int d = 0;
    const auto [ptr, ec] =
        std::from_chars(digits.data(), digits.data() + digits.size(), d);
    if (ec != std::errc() || ptr != digits.data() + digits.size()) {
      throw UnsupportedDimension("unknown MUB set '" + name + "'");
    }
    return d;
  };
  if (name.starts_with("prime:")) {
    return prime_mubs(parse_int(std::string_view(name).substr(6)));
  }
  if (name.size() > 1 && name[0] == 'd') {
    return standard_mubs(parse_int(std::string_view(name).substr(1)));
  }
  throw UnsupportedDimension("unknown MUB set '" + name + "'");
}

}  // namespace cmub
