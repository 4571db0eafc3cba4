#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "schubert/combinatorics.hpp"
#include "schubert/numeric.hpp"

namespace schubert {

/// A k-plane in C^n as an n x k matrix; only the column span matters.
using KPlane = CMatrix;

/// Ordered list of (bracket, flag) pairs. A flag is an invertible n x n
/// matrix whose first i columns span the i-th flag subspace.
struct SchubertInstance {
  struct Pair {
    Bracket bracket;
    CMatrix flag;
  };

  int k = 0;
  int n = 0;
  std::vector<Pair> pairs;
};

CMatrix standardFlag(int n);  // identity: F_i = <e_1, ..., e_i>
CMatrix oppositeFlag(int n);  // antidiagonal: F_i = <e_n, ..., e_{n+1-i}>

SchubertProblem problemOf(const SchubertInstance& inst);
ValidationResult validateInstance(const SchubertInstance& inst);

/// Pairs each condition with an independent random flag. Conditions are put
/// in canonical solver order (decreasing codimension) first.
SchubertInstance randomInstance(const SchubertProblem& p, RandomSource& rng);

/// Worst violation of the rank conditions dim(H n F_{a_i}) >= i over all
/// pairs and all nontrivial indices, measured as the relative singular value
/// sigma_{m+1}/sigma_1 of [H | first a_i flag columns] with m = k + a_i - i.
double incidenceResidual(const KPlane& h, const SchubertInstance& inst);

bool checkIncidence(const KPlane& h, const SchubertInstance& inst,
                    double tol = kDefaultIncidenceTol);

struct NormalizedInstance {
  SchubertInstance instance;  // first flag = identity, second = antidiagonal
  CMatrix g;                  // change of basis applied to every flag
  CMatrix gInverse;
};

/// Finds g in GL_n taking the first flag to the standard flag and the second
/// to the opposite flag, and applies it to the whole instance. Requires at
/// least two pairs, with the first two flags in general position; returns
/// nullopt when they are degenerate (callers regenerate, nothing is repaired
/// silently).
std::optional<NormalizedInstance> normalizeInstance(const SchubertInstance& inst);

/// Echelon chart on the Richardson cell X_a(standard) n X_b(opposite):
/// column i has a 1 in row pivotRows[i], zeros below it and above
/// lowerBounds[i], and one free coordinate in every row of the band in
/// between. Rows here are 0-based; bracket entries stay 1-based.
struct CoordinatePatch {
  int k = 0;
  int n = 0;
  Bracket pivotRows;
  std::vector<int> lowerBounds;                    // 0-based band start per column
  std::vector<std::pair<int, int>> freePositions;  // (row, column), 0-based

  int dimension() const { return static_cast<int>(freePositions.size()); }
};

/// Throws when the Richardson pairing of (a, b) is empty.
CoordinatePatch buildPatch(const Bracket& a, const Bracket& b);

/// Dense chart covering the whole Grassmannian (both conditions trivial).
CoordinatePatch fullChart(int k, int n);

/// n x k matrix with 1 at the pivots, x_j at the j-th free position and 0
/// elsewhere; affine-linear in x, rank k for every x.
KPlane embedPoint(const CoordinatePatch& patch, const CVector& x);

/// Inverse of embedPoint up to column operations: finds the basis of span(h)
/// matching the patch pattern and returns its free entries. nullopt when h
/// does not lie in the chart (or is too close to its boundary).
std::optional<CVector> extractPatchCoordinates(const CoordinatePatch& patch, const KPlane& h);

/// Frobenius distance between the orthogonal projectors onto the column
/// spans; 0 iff equal subspaces, independent of the chosen bases.
double spanDistance(const CMatrix& a, const CMatrix& b);

}  // namespace schubert
