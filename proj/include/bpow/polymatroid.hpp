#pragma once

#include <optional>
#include <set>
#include <stdexcept>

#include "bpow/bounded_powers.hpp"

namespace bpow {

/// Witness that the one-sided exchange property fails: u_i > v_i but no j
/// with u_j < v_j yields u - e_i + e_j in the family.
struct ExchangeCounterexample {
  ExponentVector u, v;
  int index;  // 0-based coordinate i
};

/// Checks the discrete-polymatroid base exchange property.  Returns the
/// lexicographically least failing (u, v, i), or nullopt when the family is
/// a set of polymatroid bases.
inline std::optional<ExchangeCounterexample> check_exchange(const GeneratorSet& B) {
  std::set<ExponentVector> members(B.members.begin(), B.members.end());
  std::vector<ExponentVector> sorted(members.begin(), members.end());
  for (const auto& u : sorted)
    for (const auto& v : sorted)
      for (int i = 0; i < (int)u.size(); ++i) {
        if (u[i] <= v[i]) continue;
        bool found = false;
        for (int j = 0; j < (int)u.size() && !found; ++j) {
          if (u[j] >= v[j]) continue;
          ExponentVector w = u;
          --w[i];
          ++w[j];
          found = members.count(w) > 0;
        }
        if (!found) return ExchangeCounterexample{u, v, i};
      }
  return std::nullopt;
}

/// Complement supports of a squarefree base family: {1 - b : b in B}.  When
/// the input is a set of matroid bases, so is the output (dual matroid).
inline GeneratorSet dual_matroidal(const GeneratorSet& B) {
  GeneratorSet out;
  for (const auto& b : B.members) {
    ExponentVector d(b.size());
    for (int i = 0; i < (int)b.size(); ++i) {
      if (b[i] != 0 && b[i] != 1) throw std::invalid_argument("base family is not squarefree");
      d[i] = 1 - b[i];
    }
    out.members.push_back(std::move(d));
  }
  std::sort(out.members.begin(), out.members.end());
  out.common_degree = out.members.empty() ? 0 : (int)B.members[0].size() - B.common_degree;
  return out;
}

}  // namespace bpow
