#ifndef NLK_CATALOG_HPP
#define NLK_CATALOG_HPP

#include <optional>
#include <span>
#include <string>

#include "nlk/metric.hpp"

namespace nlk {

enum class Family { abelian, simple, g0, case1, case2, case3, ortho_sum };

std::string to_string(Family f);
/// Throws ParseError for unknown names.
Family parse_family(std::string_view name);

/// Parameters for build(). Unused fields are ignored by the chosen family.
/// ortho_sum builds `copies` orthogonal copies of g0(n, lambda, mu).
struct FamilyParams {
  Family family = Family::abelian;
  int n = 2;
  int k = 2;
  int l = 1;
  int d = 0;       ///< abelian only
  int copies = 2;  ///< ortho_sum only
  Scalar a = 1;
  Scalar c = 1;
  Scalar lambda = 1;
  Scalar mu = 1;
};

/// Empty bracket on Q^d; identity gram unless one is supplied.
MetricAlgebra build_abelian(int n, int d, const std::optional<Mat>& gram = std::nullopt);

/// The simple (n+1)-dimensional algebra [e_1..ê_r..e_{n+1}] = (-1)^{r+1} c e_r
/// with the identity form.
MetricAlgebra build_simple(int n, const Scalar& c);

/// The perfect 2(n+1)-dimensional algebra s ⋉ r with r the regular module of
/// the simple algebra, basis x_1..x_{n+1}, y_1..y_{n+1}, and gram
/// [[λI, μI], [μI, 0]].
MetricAlgebra build_g0(int n, const Scalar& lambda, const Scalar& mu);

/// (n+k)-dimensional algebra with isotropic center span{e_1..e_{k-1}}.
MetricAlgebra build_case1(int n, int k, const Scalar& a);

/// (k-1)-dimensional nondegenerate center ⊕ the simple algebra.
MetricAlgebra build_case2(int n, int k, const Scalar& c);

/// l-dimensional nondegenerate central block ⊕ build_case1(n, k-l, a).
MetricAlgebra build_case3(int n, int k, int l, const Scalar& a);

/// Block-diagonal bracket and gram; all parts must share the arity.
MetricAlgebra ortho_direct_sum(std::span<const MetricAlgebra> parts);

MetricAlgebra build(const FamilyParams& p);

}  // namespace nlk

#endif  // NLK_CATALOG_HPP
