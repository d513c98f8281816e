#pragma once

#include <cstdint>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "bpow/bounded_powers.hpp"

namespace bpow {

/// Raised when the iterated-sumset computation would exceed its element
/// budget; the instance is beyond desk scale, never silently misreported.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

constexpr std::size_t kDefaultSumsetBudget = 10'000'000;

/// Krull dimension of the semigroup ring: rational rank of {b - b_0} plus 1.
/// Exact fraction-free integer elimination.
inline int krull_dim(const GeneratorSet& B) {
  if (B.members.empty()) throw std::invalid_argument("empty generator set");
  const int n = (int)B.members[0].size();
  std::vector<std::vector<long long>> rows;
  for (std::size_t i = 1; i < B.members.size(); ++i) {
    std::vector<long long> row(n);
    for (int j = 0; j < n; ++j) row[j] = B.members[i][j] - B.members[0][j];
    rows.push_back(std::move(row));
  }
  int rank = 0;
  for (int col = 0; col < n && rank < (int)rows.size(); ++col) {
    int pivot = -1;
    for (int r = rank; r < (int)rows.size(); ++r)
      if (rows[r][col] != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    std::swap(rows[rank], rows[pivot]);
    for (int r = rank + 1; r < (int)rows.size(); ++r) {
      if (rows[r][col] == 0) continue;
      long long a = rows[rank][col], b = rows[r][col];
      long long g = std::gcd(a, b);
      long long ma = b / g, mb = a / g;
      for (int j = col; j < n; ++j) rows[r][j] = rows[r][j] * mb - rows[rank][j] * ma;
      long long rg = 0;
      for (long long x : rows[r]) rg = std::gcd(rg, x);
      if (rg > 1)
        for (long long& x : rows[r]) x /= rg;
    }
    ++rank;
  }
  return rank + 1;
}

/// H(k) = number of distinct sums of k generators, for k = 0..kmax.
inline std::vector<long long> hilbert_function(const GeneratorSet& B, int kmax,
                                               std::size_t budget = kDefaultSumsetBudget) {
  if (B.members.empty()) throw std::invalid_argument("empty generator set");
  if (kmax < 0) throw std::invalid_argument("kmax must be >= 0");
  std::vector<long long> H{1};
  std::set<ExponentVector> layer;
  layer.insert(ExponentVector(B.members[0].size(), 0));
  for (int k = 1; k <= kmax; ++k) {
    std::set<ExponentVector> next;
    for (const auto& s : layer)
      for (const auto& b : B.members) {
        ExponentVector t(s.size());
        for (std::size_t i = 0; i < s.size(); ++i) t[i] = s[i] + b[i];
        next.insert(std::move(t));
        if (next.size() > budget) throw BudgetExceeded("sumset budget exceeded");
      }
    layer = std::move(next);
    H.push_back((long long)layer.size());
  }
  return H;
}

/// Krull dimension, Hilbert function values, and h-vector of the semigroup
/// ring generated by an equal-degree family.
struct HilbertData {
  int dim = 0;
  std::vector<long long> values;   // H(0..dim+3)
  std::vector<long long> hvector;  // trailing zeros stripped
};

/// h-vector via the (1-t)^dim transform of the Hilbert series, evaluated out
/// to dim+3 with a 3-coefficient zero margin.  A non-vanishing tail means the
/// Hilbert function is not the expected polynomial and is reported, never
/// guessed around.
inline HilbertData h_vector(const GeneratorSet& B,
                            std::size_t budget = kDefaultSumsetBudget) {
  HilbertData data;
  data.dim = krull_dim(B);
  const int kmax = data.dim + 3;
  data.values = hilbert_function(B, kmax, budget);
  std::vector<long long> binom(data.dim + 1);
  binom[0] = 1;
  for (int i = 1; i <= data.dim; ++i) binom[i] = binom[i - 1] * (data.dim - i + 1) / i;
  std::vector<long long> h(kmax + 1, 0);
  for (int j = 0; j <= kmax; ++j)
    for (int i = 0; i <= std::min(j, data.dim); ++i)
      h[j] += (i % 2 ? -1 : 1) * binom[i] * data.values[j - i];
  for (int j = kmax; j > kmax - 3; --j)
    if (h[j] != 0)
      throw std::runtime_error("Hilbert function not polynomial within margin");
  int last = kmax;
  while (last > 0 && h[last] == 0) --last;
  data.hvector.assign(h.begin(), h.begin() + last + 1);
  return data;
}

/// Generators are algebraically independent exactly when their count equals
/// the dimension.
inline bool is_polynomial_ring(const GeneratorSet& B) {
  std::set<ExponentVector> distinct(B.members.begin(), B.members.end());
  return (int)distinct.size() == krull_dim(B);
}

enum class Method { oracle, classification, both };

inline const char* method_name(Method m) {
  switch (m) {
    case Method::oracle: return "oracle";
    case Method::classification: return "classification";
    default: return "both";
  }
}

struct GorensteinVerdict {
  bool gorenstein = false;
  Method method = Method::oracle;
  std::vector<long long> hvector;  // oracle evidence, when computed
  std::string case_label;          // classification evidence, when computed
};

/// Stanley's symmetry criterion: for these Cohen-Macaulay graded domains,
/// Gorenstein iff the h-vector is palindromic.  Negative h entries would
/// violate the CM assumption and are flagged.
inline GorensteinVerdict gorenstein_oracle(const GeneratorSet& B,
                                           std::size_t budget = kDefaultSumsetBudget) {
  HilbertData data = h_vector(B, budget);
  for (long long h : data.hvector)
    if (h < 0) throw std::runtime_error("negative h-vector entry: CM assumption violated");
  GorensteinVerdict verdict;
  verdict.method = Method::oracle;
  verdict.hvector = data.hvector;
  std::vector<long long> rev(data.hvector.rbegin(), data.hvector.rend());
  verdict.gorenstein = (rev == data.hvector);
  return verdict;
}

}  // namespace bpow
