#include "schubert/numeric.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace schubert {

namespace {

std::uint64_t splitmix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace

RandomSource::RandomSource(std::uint64_t seed) : seed_(seed), engine_(splitmix64(seed)) {}

double RandomSource::uniform01() {
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double RandomSource::gaussian() {
  if (haveSpare_) {
    haveSpare_ = false;
    return spare_;
  }
  // Box-Muller; u1 shifted away from zero so log stays finite.
  const double u1 = (static_cast<double>(engine_() >> 11) + 1.0) * 0x1.0p-53;
  const double u2 = static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  const double radius = std::sqrt(-2.0 * std::log(u1));
  const double angle = 2.0 * std::numbers::pi * u2;
  spare_ = radius * std::sin(angle);
  haveSpare_ = true;
  return radius * std::cos(angle);
}

Complex RandomSource::gaussianComplex() {
  // Sequence the two draws explicitly; argument evaluation order is
  // unspecified and would break reproducibility.
  const double re = gaussian();
  const double im = gaussian();
  return {re, im};
}

Complex RandomSource::unitComplex() {
  const double angle = 2.0 * std::numbers::pi * uniform01();
  return {std::cos(angle), std::sin(angle)};
}

CMatrix RandomSource::gaussianMatrix(int rows, int cols) {
  CMatrix m(rows, cols);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) m(r, c) = gaussianComplex();
  return m;
}

RandomSource RandomSource::fork(std::uint64_t stream) const {
  return RandomSource(splitmix64(seed_ ^ splitmix64(stream + 0x6a09e667f3bcc909ULL)));
}

Complex determinant(const CMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant: matrix must be square");
  if (m.rows() == 0) return {1.0, 0.0};
  return Eigen::PartialPivLU<CMatrix>(m).determinant();
}

int numericalRank(const CMatrix& m, double tol) {
  if (tol <= 0.0) throw std::invalid_argument("numericalRank: tolerance must be positive");
  if (m.size() == 0) return 0;
  Eigen::JacobiSVD<CMatrix> svd(m);
  const auto& sigma = svd.singularValues();
  const double largest = sigma(0);
  if (largest == 0.0) return 0;
  int rank = 0;
  for (Eigen::Index i = 0; i < sigma.size(); ++i)
    if (sigma(i) > tol * largest) ++rank;
  return rank;
}

double conditionEstimate(const CMatrix& m) {
  if (m.size() == 0) return 1.0;
  Eigen::JacobiSVD<CMatrix> svd(m);
  const auto& sigma = svd.singularValues();
  const double smallest = sigma(sigma.size() - 1);
  if (smallest == 0.0) return std::numeric_limits<double>::infinity();
  return sigma(0) / smallest;
}

std::optional<CMatrix> solveLinear(const CMatrix& a, const CMatrix& b) {
  if (a.rows() != b.rows()) throw std::invalid_argument("solveLinear: shape mismatch");
  if (a.rows() < a.cols()) throw std::invalid_argument("solveLinear: underdetermined system");
  if (a.rows() > a.cols()) {
    Eigen::ColPivHouseholderQR<CMatrix> qr(a);
    if (qr.rank() < a.cols()) return std::nullopt;
    return qr.solve(b);
  }
  Eigen::PartialPivLU<CMatrix> lu(a);
  CMatrix x = lu.solve(b);
  if (!x.allFinite()) return std::nullopt;
  const double scale = b.norm() + a.norm() * x.norm();
  if ((a * x - b).norm() > 1e-10 * std::max(scale, 1e-300)) return std::nullopt;
  return x;
}

CMatrix randomFlag(int n, RandomSource& rng) {
  if (n < 2) throw std::invalid_argument("randomFlag: n must be at least 2");
  for (int attempt = 0; attempt < 100; ++attempt) {
    CMatrix m = rng.gaussianMatrix(n, n);
    if (conditionEstimate(m) < 1e6) return m;
  }
  throw std::runtime_error("randomFlag: failed to draw a well-conditioned matrix");
}

}  // namespace schubert
