#include "schubert/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace schubert {

namespace {

// Rank of the assembly [A_{1..i} | B_{1..n+1-i}] must be n for flags in
// general position; its one-dimensional kernel picks out the intersection
// line F1_i n F2_{n+1-i}.
constexpr double kGeneralPositionTol = 1e-10;

bool shapesOk(const SchubertInstance& inst) {
  for (const auto& pair : inst.pairs)
    if (pair.flag.rows() != inst.n || pair.flag.cols() != inst.n) return false;
  return true;
}

}  // namespace

CMatrix standardFlag(int n) { return CMatrix::Identity(n, n); }

CMatrix oppositeFlag(int n) {
  CMatrix m = CMatrix::Zero(n, n);
  for (int i = 0; i < n; ++i) m(n - 1 - i, i) = 1.0;
  return m;
}

SchubertProblem problemOf(const SchubertInstance& inst) {
  SchubertProblem p{inst.k, inst.n, {}};
  p.conditions.reserve(inst.pairs.size());
  for (const auto& pair : inst.pairs) p.conditions.push_back(pair.bracket);
  return p;
}

ValidationResult validateInstance(const SchubertInstance& inst) {
  if (auto v = validateProblem(problemOf(inst)); !v) return v;
  for (std::size_t i = 0; i < inst.pairs.size(); ++i) {
    const CMatrix& f = inst.pairs[i].flag;
    if (f.rows() != inst.n || f.cols() != inst.n)
      return {false, "flag is not an n x n matrix", static_cast<int>(i)};
    if (!f.allFinite() || conditionEstimate(f) >= kFlagConditionLimit)
      return {false, "flag is singular or too ill-conditioned", static_cast<int>(i)};
  }
  return {};
}

SchubertInstance randomInstance(const SchubertProblem& p, RandomSource& rng) {
  if (auto v = validateProblem(p); !v) throw std::invalid_argument(v.message);
  std::vector<Bracket> sorted = p.conditions;
  std::stable_sort(sorted.begin(), sorted.end(), conditionLess);
  SchubertInstance inst{p.k, p.n, {}};
  inst.pairs.reserve(sorted.size());
  for (const Bracket& b : sorted) inst.pairs.push_back({b, randomFlag(p.n, rng)});
  return inst;
}

double incidenceResidual(const KPlane& h, const SchubertInstance& inst) {
  if (h.rows() != inst.n || h.cols() != inst.k)
    throw std::invalid_argument("incidenceResidual: k-plane has wrong shape");
  if (!shapesOk(inst)) throw std::invalid_argument("incidenceResidual: flag has wrong shape");
  const int k = inst.k;
  const int n = inst.n;
  double worst = 0.0;
  CMatrix assembly(n, 0);
  for (const auto& [bracket, flag] : inst.pairs) {
    for (int i = 1; i <= k; ++i) {
      const int a = bracket.entries[i - 1];
      if (a >= n - k + i) continue;  // condition automatically satisfied
      assembly.resize(n, k + a);
      assembly.leftCols(k) = h;
      assembly.rightCols(a) = flag.leftCols(a);
      Eigen::JacobiSVD<CMatrix> svd(assembly);
      const auto& sigma = svd.singularValues();
      const int allowed = k + a - i;  // rank bound for dim(H n F_a) >= i
      if (sigma(0) == 0.0) continue;
      worst = std::max(worst, sigma(allowed) / sigma(0));
    }
  }
  return worst;
}

bool checkIncidence(const KPlane& h, const SchubertInstance& inst, double tol) {
  if (tol <= 0.0) throw std::invalid_argument("checkIncidence: tolerance must be positive");
  return incidenceResidual(h, inst) < tol;
}

std::optional<NormalizedInstance> normalizeInstance(const SchubertInstance& inst) {
  if (inst.pairs.size() < 2)
    throw std::invalid_argument("normalizeInstance: need at least two conditions");
  if (!shapesOk(inst)) throw std::invalid_argument("normalizeInstance: flag has wrong shape");
  const int n = inst.n;
  const CMatrix& first = inst.pairs[0].flag;
  const CMatrix& second = inst.pairs[1].flag;

  // Column i of W spans F1_i n F2_{n+1-i}; for flags in general position the
  // kernel of [F1_{1..i} | F2_{1..n+1-i}] is one-dimensional and supplies it.
  CMatrix w(n, n);
  CMatrix assembly(n, n + 1);
  for (int i = 1; i <= n; ++i) {
    assembly.leftCols(i) = first.leftCols(i);
    assembly.rightCols(n + 1 - i) = second.leftCols(n + 1 - i);
    Eigen::JacobiSVD<CMatrix> svd(assembly, Eigen::ComputeFullV);
    const auto& sigma = svd.singularValues();
    if (sigma(n - 1) <= kGeneralPositionTol * sigma(0)) return std::nullopt;
    const CVector kernel = svd.matrixV().col(n);
    CVector wi = first.leftCols(i) * kernel.head(i);
    Eigen::Index pivot;
    wi.cwiseAbs().maxCoeff(&pivot);
    if (std::abs(wi(pivot)) == 0.0) return std::nullopt;
    w.col(i - 1) = wi / wi(pivot);
  }
  if (conditionEstimate(w) >= kFlagConditionLimit) return std::nullopt;
  auto g = solveLinear(w, CMatrix::Identity(n, n));
  if (!g) return std::nullopt;

  // In the new basis the first flag must be upper triangular and the second
  // supported on and below the antidiagonal; anything else means the pair
  // was too close to degenerate.
  const CMatrix f1 = *g * first;
  const CMatrix f2 = *g * second;
  const double scale1 = f1.cwiseAbs().maxCoeff();
  const double scale2 = f2.cwiseAbs().maxCoeff();
  for (int c = 0; c < n; ++c) {
    for (int r = 0; r < n; ++r) {
      if (r > c && std::abs(f1(r, c)) > 1e-6 * scale1) return std::nullopt;
      if (r < n - 1 - c && std::abs(f2(r, c)) > 1e-6 * scale2) return std::nullopt;
    }
  }

  NormalizedInstance result{SchubertInstance{inst.k, inst.n, {}}, *g, std::move(w)};
  result.instance.pairs.reserve(inst.pairs.size());
  // The first two flags are replaced by exact representatives of the same
  // flags; the rest just move to the new basis.
  result.instance.pairs.push_back({inst.pairs[0].bracket, standardFlag(n)});
  result.instance.pairs.push_back({inst.pairs[1].bracket, oppositeFlag(n)});
  for (std::size_t i = 2; i < inst.pairs.size(); ++i)
    result.instance.pairs.push_back({inst.pairs[i].bracket, *g * inst.pairs[i].flag});
  return result;
}

CoordinatePatch buildPatch(const Bracket& a, const Bracket& b) {
  const auto dim = richardsonDimension(a, b);
  if (!dim) throw std::invalid_argument("buildPatch: empty Richardson pairing");
  const int k = a.k();
  const int n = a.n;
  CoordinatePatch patch{k, n, a, std::vector<int>(k, 0), {}};
  for (int i = 0; i < k; ++i) {
    const int gamma = n + 1 - b.entries[k - 1 - i];  // 1-based band start
    patch.lowerBounds[i] = gamma - 1;
    for (int row = gamma - 1; row < a.entries[i] - 1; ++row)
      patch.freePositions.emplace_back(row, i);
  }
  if (patch.dimension() != *dim)
    throw std::logic_error("buildPatch: free position count disagrees with dimension");
  return patch;
}

CoordinatePatch fullChart(int k, int n) {
  std::vector<int> top(k);
  for (int i = 0; i < k; ++i) top[i] = n - k + i + 1;
  const Bracket b{top, n};
  return buildPatch(b, b);
}

KPlane embedPoint(const CoordinatePatch& patch, const CVector& x) {
  if (x.size() != patch.dimension())
    throw std::invalid_argument("embedPoint: coordinate vector has wrong length");
  KPlane h = KPlane::Zero(patch.n, patch.k);
  for (int i = 0; i < patch.k; ++i) h(patch.pivotRows.entries[i] - 1, i) = 1.0;
  for (int j = 0; j < patch.dimension(); ++j) {
    const auto [row, col] = patch.freePositions[j];
    h(row, col) = x(j);
  }
  return h;
}

std::optional<CVector> extractPatchCoordinates(const CoordinatePatch& patch, const KPlane& h) {
  if (h.rows() != patch.n || h.cols() != patch.k)
    throw std::invalid_argument("extractPatchCoordinates: k-plane has wrong shape");
  const int k = patch.k;
  const int n = patch.n;

  std::vector<std::vector<bool>> isFree(n, std::vector<bool>(k, false));
  for (const auto& [row, col] : patch.freePositions) isFree[row][col] = true;

  // Column c of the change of basis is pinned by the pattern's fixed entries:
  // (h * B)(r, c) = 1 at the pivot, 0 at structural zeros. The columns
  // decouple, each giving a small least-squares problem.
  CMatrix basis(k, k);
  for (int c = 0; c < k; ++c) {
    std::vector<int> pinnedRows;
    for (int r = 0; r < n; ++r)
      if (!isFree[r][c]) pinnedRows.push_back(r);
    CMatrix lhs(pinnedRows.size(), k);
    CVector rhs = CVector::Zero(pinnedRows.size());
    for (std::size_t p = 0; p < pinnedRows.size(); ++p) {
      lhs.row(p) = h.row(pinnedRows[p]);
      if (pinnedRows[p] == patch.pivotRows.entries[c] - 1) rhs(p) = 1.0;
    }
    Eigen::ColPivHouseholderQR<CMatrix> qr(lhs);
    if (qr.rank() < k) return std::nullopt;
    basis.col(c) = qr.solve(rhs);
  }
  if (!basis.allFinite() || conditionEstimate(basis) >= 1e10) return std::nullopt;

  const CMatrix embedded = h * basis;
  const double scale = std::max(1.0, embedded.cwiseAbs().maxCoeff());
  for (int c = 0; c < k; ++c)
    for (int r = 0; r < n; ++r) {
      if (isFree[r][c]) continue;
      const Complex expected = (r == patch.pivotRows.entries[c] - 1) ? 1.0 : 0.0;
      if (std::abs(embedded(r, c) - expected) > 1e-8 * scale) return std::nullopt;
    }

  CVector x(patch.dimension());
  for (int j = 0; j < patch.dimension(); ++j) {
    const auto [row, col] = patch.freePositions[j];
    x(j) = embedded(row, col);
  }
  return x;
}

double spanDistance(const CMatrix& a, const CMatrix& b) {
  if (a.rows() != b.rows()) throw std::invalid_argument("spanDistance: ambient mismatch");
  const auto projector = [](const CMatrix& m) {
    Eigen::HouseholderQR<CMatrix> qr(m);
    CMatrix q = qr.householderQ() * CMatrix::Identity(m.rows(), m.cols());
    return CMatrix(q * q.adjoint());
  };
  return (projector(a) - projector(b)).norm();
}

}  // namespace schubert
