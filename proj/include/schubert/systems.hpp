#pragma once

#include <span>
#include <utility>
#include <vector>

#include "schubert/geometry.hpp"

namespace schubert {

/// The tracker's view of a polynomial map C^m -> C^e.
class SquareSystem {
 public:
  virtual ~SquareSystem() = default;
  virtual int numVars() const = 0;
  virtual int numEquations() const = 0;
  virtual void evaluate(const CVector& x, CVector& r) const = 0;
  virtual void evaluateWithJacobian(const CVector& x, CVector& r, CMatrix& jac) const = 0;
};

/// det of a square submatrix of [H(x) | flag columns]. The patch pattern
/// guarantees every variable occupies exactly one entry of the assembly, so
/// the derivative with respect to a variable is a single cofactor.
struct MinorEquation {
  struct Slot {
    int var;
    int row, col;  // position inside base
  };

  CMatrix base;  // assembly with all variables at zero
  std::vector<Slot> slots;
  double scale = 1.0;
  int degree = 0;
  // provenance: which condition and which rank index the minor encodes
  int conditionIndex = 0;
  int rankIndex = 0;
  std::vector<int> rowSubset;  // global rows of the ambient assembly
  std::vector<int> colSubset;  // assembly columns; entries >= k refer to flag column (c - k)
};

/// A single minor or a complex-linear combination of minors of one condition.
struct SystemEquation {
  std::vector<std::pair<Complex, int>> terms;  // (weight, minor index)
  int degree = 0;
  int conditionIndex = 0;
  int conditionCodim = 0;
};

class DeterminantalSystem : public SquareSystem {
 public:
  DeterminantalSystem(int numVars, std::vector<MinorEquation> minors,
                      std::vector<SystemEquation> equations);

  int numVars() const override { return numVars_; }
  int numEquations() const override { return static_cast<int>(equations_.size()); }
  void evaluate(const CVector& x, CVector& r) const override;
  void evaluateWithJacobian(const CVector& x, CVector& r, CMatrix& jac) const override;

  std::vector<int> degrees() const;  // per equation, exact total degree in x

  const std::vector<MinorEquation>& minors() const { return minors_; }
  const std::vector<SystemEquation>& equations() const { return equations_; }

 private:
  int numVars_;
  std::vector<MinorEquation> minors_;
  std::vector<SystemEquation> equations_;
};

/// Imposes each pair's rank conditions on the patch coordinates: for every
/// nontrivial index i, all minors of size k + a_i - i + 1 of
/// [H(x) | first a_i flag columns] become equations.
DeterminantalSystem buildConditionSystem(const CoordinatePatch& patch,
                                         std::span<const SchubertInstance::Pair> pairs);

/// Conditions 3..s of a normalized instance on the patch of the first two.
DeterminantalSystem buildSystem(const SchubertInstance& normalized, const CoordinatePatch& patch);

/// Replaces each condition's minors by codimension-many random complex
/// Gaussian combinations; true solutions are preserved. Systems that are
/// already square per condition are returned unchanged.
DeterminantalSystem squareUp(const DeterminantalSystem& sys, RandomSource& rng);

namespace detail {

/// det plus the cofactors at the requested entries. Uses det * inverse from
/// one LU when the determinant is comfortably nonzero; falls back to direct
/// cofactor expansion near the solution set, where the assembly is singular
/// but the cofactors stay well conditioned.
void cofactorsAt(const CMatrix& m, const std::vector<std::pair<int, int>>& entries, Complex& det,
                 std::vector<Complex>& cof);

/// det plus the full adjugate, same dual-path strategy.
void adjugateOf(const CMatrix& m, Complex& det, CMatrix& adj);

}  // namespace detail

}  // namespace schubert
