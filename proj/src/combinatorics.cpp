#include "schubert/combinatorics.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace schubert {

namespace {

int boxWidth(int k, int n) { return n - k; }

// Counts skew semistandard tableaux of shape nu/mu with content p whose
// reverse reading word (rows top to bottom, each row right to left) is a
// lattice word. Cells are filled in that same order, so all three
// constraints can be checked incrementally.
long long countLRTableaux(const std::vector<int>& nu, const std::vector<int>& mu,
                          const std::vector<int>& content) {
  const int k = static_cast<int>(nu.size());
  int values = 0;
  for (int v : content)
    if (v > 0) ++values;

  struct Cell {
    int row, col;
  };
  std::vector<Cell> cells;
  for (int r = 0; r < k; ++r) {
    const int lo = r < static_cast<int>(mu.size()) ? mu[r] : 0;
    for (int c = nu[r] - 1; c >= lo; --c) cells.push_back({r, c});
  }
  int total = 0;
  for (int v : content) total += v;
  if (static_cast<int>(cells.size()) != total)
    throw std::logic_error("countLRTableaux: cell/content mismatch");
  if (cells.empty()) return 1;

  std::vector<int> counts(values + 1, 0);
  // grid[r][c] = value placed, 0 if blank/unfilled
  std::vector<std::vector<int>> grid(k);
  for (int r = 0; r < k; ++r) grid[r].assign(nu[r], 0);

  long long found = 0;
  auto fill = [&](auto&& self, std::size_t idx) -> void {
    if (idx == cells.size()) {
      ++found;
      return;
    }
    const auto [r, c] = cells[idx];
    const int rightNeighbor = (c + 1 < nu[r]) ? grid[r][c + 1] : 0;
    const int muAbove = (r > 0 && r - 1 < static_cast<int>(mu.size())) ? mu[r - 1] : 0;
    const int above = (r > 0 && c >= muAbove) ? grid[r - 1][c] : 0;
    for (int v = 1; v <= values; ++v) {
      if (counts[v] >= content[v - 1]) continue;
      if (v > 1 && counts[v] + 1 > counts[v - 1]) continue;  // lattice word
      if (rightNeighbor != 0 && v > rightNeighbor) continue;  // rows weakly increase
      if (above != 0 && v <= above) continue;                 // columns strictly increase
      ++counts[v];
      grid[r][c] = v;
      self(self, idx + 1);
      grid[r][c] = 0;
      --counts[v];
    }
  };
  fill(fill, 0);
  return found;
}

// All nu with mu <= nu <= (width^k) and |nu| = |mu| + |p|, paired with the
// LR coefficient c^nu_{mu,p}; zero coefficients dropped.
void expandProduct(const std::vector<int>& mu, const std::vector<int>& content, int k, int width,
                   std::map<std::vector<int>, long long>& out, long long scale) {
  int add = 0;
  for (int v : content) add += v;
  if (add == 0) {
    out[mu] += scale;
    return;
  }
  std::vector<int> nu(k, 0);
  auto rec = [&](auto&& self, int row, int remaining) -> void {
    if (row == k) {
      if (remaining != 0) return;
      const long long c = countLRTableaux(nu, mu, content);
      if (c > 0) out[nu] += scale * c;
      return;
    }
    const int hi = std::min(width, row == 0 ? width : nu[row - 1]);
    for (int v = mu[row]; v <= hi; ++v) {
      const int used = v - mu[row];
      if (used > remaining) continue;
      nu[row] = v;
      self(self, row + 1, remaining - used);
    }
    nu[row] = 0;
  };
  rec(rec, 0, add);
}

}  // namespace

std::optional<std::string> validateBracket(const Bracket& b) {
  const int k = b.k();
  if (k < 1) return "bracket is empty";
  if (k >= b.n) return "bracket length must be smaller than n";
  int prev = 0;
  for (int i = 0; i < k; ++i) {
    const int e = b.entries[i];
    if (e <= prev) return "bracket entries must be strictly increasing and at least 1";
    if (e > b.n) return "bracket entry exceeds n";
    prev = e;
  }
  return std::nullopt;
}

std::optional<std::string> validatePartition(const Partition& p) {
  if (p.k < 1 || p.k >= p.n) return "partition needs 1 <= k < n";
  if (static_cast<int>(p.parts.size()) != p.k) return "partition must have exactly k parts";
  int prev = p.n - p.k;
  for (int part : p.parts) {
    if (part < 0) return "partition parts must be nonnegative";
    if (part > prev) return "partition parts must weakly decrease and fit in the box";
    prev = part;
  }
  return std::nullopt;
}

Partition makePartition(std::vector<int> parts, int k, int n) {
  while (static_cast<int>(parts.size()) > k && parts.back() == 0) parts.pop_back();
  if (static_cast<int>(parts.size()) > k)
    throw std::invalid_argument("partition has more than k nonzero parts");
  parts.resize(k, 0);
  Partition p{std::move(parts), k, n};
  if (auto err = validatePartition(p)) throw std::invalid_argument(*err);
  return p;
}

int codimension(const Bracket& b) {
  if (auto err = validateBracket(b)) throw std::invalid_argument(*err);
  const int k = b.k();
  int dim = 0;
  for (int i = 0; i < k; ++i) dim += b.entries[i] - (i + 1);
  return k * (b.n - k) - dim;
}

int weight(const Partition& p) {
  return std::accumulate(p.parts.begin(), p.parts.end(), 0);
}

Partition bracket2partition(const Bracket& b) {
  if (auto err = validateBracket(b)) throw std::invalid_argument(*err);
  const int k = b.k();
  std::vector<int> parts(k);
  for (int i = 0; i < k; ++i) parts[i] = b.n - k - b.entries[i] + (i + 1);
  return Partition{std::move(parts), k, b.n};
}

Bracket partition2bracket(const Partition& p) {
  if (auto err = validatePartition(p)) throw std::invalid_argument(*err);
  std::vector<int> entries(p.k);
  for (int i = 0; i < p.k; ++i) entries[i] = p.n - p.k + (i + 1) - p.parts[i];
  return Bracket{std::move(entries), p.n};
}

ValidationResult validateProblem(const SchubertProblem& p) {
  if (p.k < 1 || p.k >= p.n) return {false, "need 1 <= k < n", -1};
  if (p.conditions.empty()) return {false, "no conditions given", -1};
  int sum = 0;
  for (std::size_t i = 0; i < p.conditions.size(); ++i) {
    const Bracket& b = p.conditions[i];
    if (b.k() != p.k)
      return {false, "condition has wrong length for k", static_cast<int>(i)};
    if (b.n != p.n) return {false, "condition declared for a different n", static_cast<int>(i)};
    if (auto err = validateBracket(b)) return {false, *err, static_cast<int>(i)};
    sum += codimension(b);
  }
  const int target = p.k * (p.n - p.k);
  if (sum != target) {
    std::ostringstream os;
    os << "codimensions sum to " << sum << ", expected k(n-k) = " << target;
    return {false, os.str(), -1};
  }
  return {};
}

bool conditionLess(const Bracket& a, const Bracket& b) {
  const int ca = codimension(a);
  const int cb = codimension(b);
  if (ca != cb) return ca > cb;
  return a.entries < b.entries;
}

CohomologyClass::CohomologyClass(int k, int n) : k_(k), n_(n) {}

CohomologyClass CohomologyClass::identity(int k, int n) {
  CohomologyClass c(k, n);
  c.terms_[std::vector<int>(k, 0)] = 1;
  return c;
}

long long CohomologyClass::coefficient(const std::vector<int>& parts) const {
  auto it = terms_.find(parts);
  return it == terms_.end() ? 0 : it->second;
}

void CohomologyClass::add(const std::vector<int>& parts, long long coeff) {
  if (coeff == 0) return;
  if (static_cast<int>(parts.size()) != k_ || (!parts.empty() && parts.front() > n_ - k_))
    throw std::invalid_argument("partition does not fit the k x (n-k) box");
  auto [it, inserted] = terms_.try_emplace(parts, coeff);
  if (!inserted && (it->second += coeff) == 0) terms_.erase(it);
}

CohomologyClass multiplyClass(const CohomologyClass& c, const Partition& p) {
  if (p.k != c.k() || p.n != c.n())
    throw std::invalid_argument("multiplyClass: mismatched Grassmannian");
  if (auto err = validatePartition(p)) throw std::invalid_argument(*err);
  CohomologyClass result(c.k(), c.n());
  std::map<std::vector<int>, long long> terms;
  for (const auto& [mu, coeff] : c.terms())
    expandProduct(mu, p.parts, c.k(), boxWidth(c.k(), c.n()), terms, coeff);
  for (const auto& [nu, coeff] : terms) result.add(nu, coeff);
  return result;
}

long long lrNumber(const SchubertProblem& p) {
  if (auto v = validateProblem(p); !v) throw std::invalid_argument(v.message);
  CohomologyClass c = CohomologyClass::identity(p.k, p.n);
  for (const Bracket& b : p.conditions) {
    c = multiplyClass(c, bracket2partition(b));
    if (c.empty()) return 0;
  }
  return c.coefficient(std::vector<int>(p.k, p.n - p.k));
}

std::string formatLRrule(const SchubertProblem& p) {
  const long long d = lrNumber(p);  // also validates
  std::vector<Bracket> sorted = p.conditions;
  std::stable_sort(sorted.begin(), sorted.end(), conditionLess);

  std::ostringstream os;
  std::size_t i = 0;
  bool first = true;
  while (i < sorted.size()) {
    std::size_t j = i;
    while (j < sorted.size() && sorted[j] == sorted[i]) ++j;
    if (!first) os << "*";
    first = false;
    os << "[";
    for (int e : sorted[i].entries) os << " " << e;
    os << " ]";
    if (j - i > 1) os << "^" << (j - i);
    i = j;
  }
  os << " = +" << d << "[";
  for (int i2 = 1; i2 <= p.k; ++i2) os << (i2 == 1 ? "" : " ") << i2;
  os << "]";
  return os.str();
}

std::optional<int> richardsonDimension(const Bracket& a, const Bracket& b) {
  if (a.n != b.n || a.k() != b.k())
    throw std::invalid_argument("richardsonDimension: brackets live on different Grassmannians");
  const int k = a.k();
  for (int i = 0; i < k; ++i)
    if (a.entries[i] + b.entries[k - 1 - i] < a.n + 1) return std::nullopt;
  return k * (a.n - k) - codimension(a) - codimension(b);
}

}  // namespace schubert
