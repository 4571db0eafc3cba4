#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <random>

#include <Eigen/Dense>

namespace schubert {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;

inline constexpr double kDefaultRankTol = 1e-7;
inline constexpr double kDefaultIncidenceTol = 1e-8;
inline constexpr double kFlagConditionLimit = 1e8;

/// Deterministic random stream: mt19937_64 raw output, uniforms from the top
/// 53 bits, normals via Box-Muller. Every derived quantity is a pure function
/// of the seed, so runs with the same seed reproduce bit-for-bit. Independent
/// substreams come from fork(), which mixes the seed with a stream index;
/// draws on one stream never affect another.
class RandomSource {
 public:
  explicit RandomSource(std::uint64_t seed);

  std::uint64_t seed() const { return seed_; }
  std::uint64_t nextU64() { return engine_(); }

  double uniform01();         // [0, 1)
  double gaussian();          // standard normal
  Complex gaussianComplex();  // independent N(0,1) real and imaginary parts
  Complex unitComplex();      // uniform on the unit circle

  // Entries drawn row by row, left to right.
  CMatrix gaussianMatrix(int rows, int cols);

  RandomSource fork(std::uint64_t stream) const;

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
  bool haveSpare_ = false;
  double spare_ = 0.0;
};

/// Determinant via LU with partial pivoting. Throws std::invalid_argument on
/// a non-square input.
Complex determinant(const CMatrix& m);

/// Number of singular values exceeding tol times the largest one; 0 for the
/// zero (or empty) matrix. tol must be positive.
int numericalRank(const CMatrix& m, double tol = kDefaultRankTol);

/// sigma_max / sigma_min; +inf when singular.
double conditionEstimate(const CMatrix& m);

/// Solve a*x = b. Square systems use LU with a residual acceptance check of
/// 1e-10 relative to the data; tall systems are solved in the least-squares
/// sense via column-pivoted QR. Returns nullopt when the solve is not
/// trustworthy (singular or badly conditioned a), so callers can treat it as
/// a step failure.
std::optional<CMatrix> solveLinear(const CMatrix& a, const CMatrix& b);

/// n x n matrix of independent standard complex Gaussians, regenerated until
/// the condition estimate is below 1e6 (bounded retries).
CMatrix randomFlag(int n, RandomSource& rng);

}  // namespace schubert
