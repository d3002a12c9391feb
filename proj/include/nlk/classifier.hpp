#ifndef NLK_CLASSIFIER_HPP
#define NLK_CLASSIFIER_HPP

#include <string>

#include "nlk/metric.hpp"

namespace nlk {

enum class CaseLabel { abelian, case1_isotropic_center, case2_reductive, case3_mixed, out_of_range };

std::string to_string(CaseLabel c);

/// Basis-independent invariants the decision is made from.
struct InvariantProfile {
  std::size_t dim_center = 0;
  std::size_t dim_derived = 0;
  bool center_isotropic = false;
  std::size_t dim_center_cap_derived = 0;
  bool solvable = false;
  bool perfect = false;
};

InvariantProfile invariant_profile(const MetricAlgebra& ma);

struct ClassificationReport {
  CaseLabel label = CaseLabel::out_of_range;
  int n = 0;
  int d = 0;
  int k = 0;
  int l = 0;   ///< case 3 only
  int k1 = 0;  ///< case 3 only: dim(C(g) ∩ g¹)
  InvariantProfile profile;
};

/// Sorts an (n+k)-dimensional metric n-Lie algebra, 2 <= k <= n+1, into
/// abelian / isotropic center / reductive / mixed. Throws PreconditionError
/// for unverified input and InconsistencyError when the computed invariants
/// contradict the case they select.
ClassificationReport classify(const MetricAlgebra& ma);

}  // namespace nlk

#endif  // NLK_CLASSIFIER_HPP
