#ifndef NLK_METRIC_HPP
#define NLK_METRIC_HPP

#include <optional>
#include <string>
#include <vector>

#include "nlk/algebra.hpp"
#include "nlk/linalg.hpp"

namespace nlk {

/// Symmetric bilinear form given by its Gram matrix in the standard basis.
class Form {
 public:
  Form() = default;
  /// Throws PreconditionError unless gram is square and symmetric.
  explicit Form(Mat gram);
  /// Holds any square matrix; for checker workflows that must report an
  /// asymmetric input instead of rejecting it.
  static Form unchecked(Mat gram);
  static Form identity(std::size_t dim) { return Form(Mat::identity(dim)); }

  std::size_t dim() const { return gram_.rows(); }
  const Mat& gram() const { return gram_; }

  Scalar operator()(const Vec& u, const Vec& v) const;
  /// Gram matrix of the form restricted to W, in W's canonical basis.
  Mat restricted(const Subspace& w) const;

  friend bool operator==(const Form&, const Form&) = default;

 private:
  Mat gram_ = Mat(0, 0);
};

Form permute_basis(const Form& b, std::span<const int> perm);

struct MetricStatus {
  bool fundamental_identity_ok = false;
  bool symmetric_ok = false;
  bool invariance_ok = false;
  bool nondegenerate_ok = false;

  bool all() const { return fundamental_identity_ok && symmetric_ok && invariance_ok && nondegenerate_ok; }
};

/// Every checker's report for one (algebra, form) pair.
struct MetricReport {
  ViolationReport fundamental_identity{ViolationKind::fundamental_identity, {}};
  ViolationReport symmetry{ViolationKind::symmetry, {}};
  ViolationReport invariance{ViolationKind::invariance, {}};
  ViolationReport nondegeneracy{ViolationKind::nondegeneracy, {}};

  bool ok() const { return fundamental_identity.ok() && symmetry.ok() && invariance.ok() && nondegeneracy.ok(); }
};

/// An algebra paired with a bilinear form. The status flags start false
/// and are only written by verify().
class MetricAlgebra {
 public:
  MetricAlgebra() = default;
  MetricAlgebra(Algebra algebra, Form form);

  /// Builds and verifies in one step.
  static MetricAlgebra verified(Algebra algebra, Form form, SweepOptions opts = {});

  const Algebra& algebra() const { return algebra_; }
  const Form& form() const { return form_; }
  const MetricStatus& status() const { return status_; }
  int arity() const { return algebra_.arity(); }
  int dim() const { return algebra_.dim(); }
  std::size_t udim() const { return algebra_.udim(); }

  MetricReport verify(SweepOptions opts = {});

 private:
  Algebra algebra_;
  Form form_;
  MetricStatus status_;
};

/// Claimed Levi data, checked by verify_levi.
struct LeviAnnotation {
  std::vector<Subspace> simple_parts;
  Subspace radical;
  std::optional<Subspace> iso_ideal;
};

struct LeviReport {
  ViolationReport violations{ViolationKind::levi, {}};
  std::vector<std::string> checks_run;  ///< names of the conditions that were evaluated

  bool ok() const { return violations.ok(); }
};

ViolationReport check_invariance(const Algebra& a, const Form& b, SweepOptions opts = {});
ViolationReport check_symmetry(const Form& b);
ViolationReport check_nondegeneracy(const Form& b);
MetricReport check_metric(const Algebra& a, const Form& b, SweepOptions opts = {});

/// {x : B(w, x) = 0 for all w in W}
Subspace orthogonal_complement(const Form& b, const Subspace& w);
bool is_isotropic(const Form& b, const Subspace& w);
bool is_coisotropic(const Form& b, const Subspace& w);
bool is_nondegenerate_subspace(const Form& b, const Subspace& w);
/// W ∩ W⊥
Subspace form_radical(const Form& b, const Subspace& w);

struct FormSpace {
  std::vector<Form> basis;
  std::size_t dimension = 0;
};

/// Every symmetric bilinear form satisfying the invariance identity. The
/// basis may contain degenerate forms.
FormSpace invariant_form_space(const Algebra& a);

struct MetricQuotient {
  MetricAlgebra algebra;
  Subspace transversal;    ///< complement(I) ∩ I⊥, the representatives used
  bool collapsed = false;  ///< I = I⊥, the result is 0-dimensional
};

/// (I⊥ / I, B) for an isotropic ideal I.
MetricQuotient metric_quotient(const MetricAlgebra& ma, const Subspace& ideal);

struct OrthoSplit {
  Subspace central;  ///< nondegenerate central ideal, complement of C ∩ g¹ in C
  Subspace core;     ///< its orthogonal complement; has isotropic center
};

OrthoSplit ortho_split(const MetricAlgebra& ma);

/// e'_1..e'_l with B(c_r, e'_s) = δ_rs against C's canonical basis and
/// B(e'_r, e'_s) = 0.
std::vector<Vec> dual_isotropic_basis(const MetricAlgebra& ma, const Subspace& c);

/// Arity-(n-l) bracket [x_1..x_{n-l}]_0 = [x_1..x_{n-l}, e'_1..e'_l] built
/// from the first l canonical center vectors and their isotropic duals.
MetricAlgebra reduce_by_center(const MetricAlgebra& ma, int l);

LeviReport verify_levi(const MetricAlgebra& ma, const LeviAnnotation& ann);

}  // namespace nlk

#endif  // NLK_METRIC_HPP
