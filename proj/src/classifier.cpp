#include "nlk/classifier.hpp"

#include "nlk/error.hpp"

namespace nlk {

std::string to_string(CaseLabel c) {
  switch (c) {
    case CaseLabel::abelian: return "abelian";
    case CaseLabel::case1_isotropic_center: return "case1_isotropic_center";
    case CaseLabel::case2_reductive: return "case2_reductive";
    case CaseLabel::case3_mixed: return "case3_mixed";
    case CaseLabel::out_of_range: return "out_of_range";
  }
  return "unknown";
}

InvariantProfile invariant_profile(const MetricAlgebra& ma) {
  const Algebra& a = ma.algebra();
  const Subspace c = center(a);
  const Subspace g1 = derived_algebra(a);
  InvariantProfile p;
  p.dim_center = c.dim();
  p.dim_derived = g1.dim();
  p.center_isotropic = is_isotropic(ma.form(), c);
  p.dim_center_cap_derived = intersect(c, g1).dim();
  p.solvable = is_solvable(a, Subspace::full(ma.udim()));
  p.perfect = g1.is_full();
  return p;
}

ClassificationReport classify(const MetricAlgebra& ma) {
  if (!ma.status().all()) throw PreconditionError("classify: metric algebra has not passed every check");
  const Algebra& a = ma.algebra();

  ClassificationReport rep;
  rep.n = a.arity();
  rep.d = a.dim();
  rep.k = rep.d - rep.n;
  rep.profile = invariant_profile(ma);

  if (rep.k < 2 || rep.k > rep.n + 1) {
    rep.label = CaseLabel::out_of_range;
    return rep;
  }
  if (a.tensor.is_zero()) {
    rep.label = CaseLabel::abelian;
    return rep;
  }

  const auto n = static_cast<std::size_t>(rep.n);
  const auto k = static_cast<std::size_t>(rep.k);
  const InvariantProfile& p = rep.profile;
  auto inconsistent = [&](const std::string& why) {
    throw InconsistencyError("classify (" + to_string(rep.label) + "): " + why);
  };

  const Subspace c = center(a);
  const Subspace g1 = derived_algebra(a);

  if (is_subset(c, g1)) {
    rep.label = CaseLabel::case1_isotropic_center;
    if (p.dim_center != k - 1) inconsistent("dim C(g) = " + std::to_string(p.dim_center) + ", expected k-1");
    if (p.dim_derived != n + 1) inconsistent("dim g^1 = " + std::to_string(p.dim_derived) + ", expected n+1");
    return rep;
  }

  if (p.dim_center_cap_derived == 0) {
    rep.label = CaseLabel::case2_reductive;
    if (!sum(c, g1).is_full()) inconsistent("C(g) + g^1 is not the whole algebra");
    if (p.dim_derived != n + 1) inconsistent("dim g^1 = " + std::to_string(p.dim_derived) + ", expected n+1");
    if (!is_perfect(restrict_algebra(a, g1))) inconsistent("g^1 is not perfect");
    return rep;
  }

  rep.label = CaseLabel::case3_mixed;
  rep.k1 = static_cast<int>(p.dim_center_cap_derived);
  rep.l = rep.k - rep.k1 - 1;
  if (rep.l < 1 || rep.l >= rep.k - 1) {
    inconsistent("l = " + std::to_string(rep.l) + " outside [1, k-1)");
  }
  return rep;
}

}  // namespace nlk
