#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace schubert {

/// Schubert condition on Gr(k,n) as a strictly increasing sequence
/// 1 <= entries[0] < ... < entries[k-1] <= n. k is the sequence length.
struct Bracket {
  std::vector<int> entries;
  int n = 0;

  int k() const { return static_cast<int>(entries.size()); }
  bool operator==(const Bracket&) const = default;
};

/// The same condition as a weakly decreasing sequence bounded by n-k,
/// padded to exactly k parts.
struct Partition {
  std::vector<int> parts;
  int k = 0;
  int n = 0;

  bool operator==(const Partition&) const = default;
};

struct SchubertProblem {
  int k = 0;
  int n = 0;
  std::vector<Bracket> conditions;
};

struct ValidationResult {
  bool ok = true;
  std::string message;
  int index = -1;  // offending condition, or -1 for a global failure

  explicit operator bool() const { return ok; }
};

std::optional<std::string> validateBracket(const Bracket& b);
std::optional<std::string> validatePartition(const Partition& p);

/// Pads or trims trailing zeros to length k and validates.
Partition makePartition(std::vector<int> parts, int k, int n);

int codimension(const Bracket& b);  // k(n-k) - sum(entries[i] - (i+1))
int weight(const Partition& p);

Partition bracket2partition(const Bracket& b);
Bracket partition2bracket(const Partition& p);

ValidationResult validateProblem(const SchubertProblem& p);

/// Orders conditions the way the solver consumes them: decreasing
/// codimension, ties broken lexicographically.
bool conditionLess(const Bracket& a, const Bracket& b);

/// Formal nonnegative combination of Schubert classes indexed by partitions
/// in the k x (n-k) box. Zero coefficients are never stored.
class CohomologyClass {
 public:
  CohomologyClass(int k, int n);
  static CohomologyClass identity(int k, int n);

  int k() const { return k_; }
  int n() const { return n_; }
  const std::map<std::vector<int>, long long>& terms() const { return terms_; }
  long long coefficient(const std::vector<int>& parts) const;
  void add(const std::vector<int>& parts, long long coeff);
  bool empty() const { return terms_.empty(); }

 private:
  int k_;
  int n_;
  std::map<std::vector<int>, long long> terms_;
};

/// Littlewood-Richardson product with a single Schur class, truncated to the
/// k x (n-k) box. Coefficients are counts of skew semistandard tableaux whose
/// reverse reading word is a lattice word.
CohomologyClass multiplyClass(const CohomologyClass& c, const Partition& p);

/// Number of solutions of the Schubert problem: the coefficient of the box
/// partition in the product of all condition classes.
long long lrNumber(const SchubertProblem& p);

/// Renders the product as e.g. "[ 2 4 ]^4 = +2[1 2]": groups of identical
/// brackets with multiplicity exponents (omitted when 1), joined by "*",
/// followed by the solution count on the point class.
std::string formatLRrule(const SchubertProblem& p);

/// Dimension k(n-k) - |a| - |b| of the Richardson pairing, or nullopt when
/// the pairing is empty (a[i] + b[k-1-i] < n+1 for some i).
std::optional<int> richardsonDimension(const Bracket& a, const Bracket& b);

}  // namespace schubert
