#include "nlk/metric.hpp"

#include <string>

#include "nlk/error.hpp"
#include "nlk/sweep.hpp"

namespace nlk {

namespace {

std::size_t to_size(int v) { return static_cast<std::size_t>(v); }

void require_dims(const Algebra& a, const Form& b, const char* what) {
  if (a.udim() != b.dim()) {
    throw DimensionError(std::string(what) + ": algebra dimension " + std::to_string(a.dim()) +
                         " does not match form dimension " + std::to_string(b.dim()));
  }
}

void require_dims(const Form& b, const Subspace& w, const char* what) {
  if (w.ambient_dim() != b.dim()) throw DimensionError(std::string(what) + ": subspace and form dimensions differ");
}

void require_verified(const MetricAlgebra& ma, const char* what) {
  if (!ma.status().all()) throw PreconditionError(std::string(what) + ": metric algebra has not passed every check");
}

std::vector<Subspace> filled(const Subspace& s, int times) { return std::vector<Subspace>(to_size(times), s); }

}  // namespace

// ---------------------------------------------------------------- Form

Form::Form(Mat gram) : gram_(std::move(gram)) {
  if (gram_.rows() != gram_.cols()) throw PreconditionError("gram matrix is not square");
  if (!gram_.is_symmetric()) throw PreconditionError("gram matrix is not symmetric");
}

Form Form::unchecked(Mat gram) {
  if (gram.rows() != gram.cols()) throw PreconditionError("gram matrix is not square");
  Form f;
  f.gram_ = std::move(gram);
  return f;
}

Scalar Form::operator()(const Vec& u, const Vec& v) const { return dot(u, gram_ * v); }

Mat Form::restricted(const Subspace& w) const {
  require_dims(*this, w, "Form::restricted");
  return w.basis() * gram_ * w.basis().transpose();
}

Form permute_basis(const Form& b, std::span<const int> perm) {
  const std::size_t d = b.dim();
  if (perm.size() != d) throw DimensionError("permutation has wrong length");
  Mat g(d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) g(to_size(perm[i] - 1), to_size(perm[j] - 1)) = b.gram()(i, j);
  return Form::unchecked(std::move(g));
}

// ---------------------------------------------------------------- MetricAlgebra

MetricAlgebra::MetricAlgebra(Algebra algebra, Form form) : algebra_(std::move(algebra)), form_(std::move(form)) {
  require_dims(algebra_, form_, "MetricAlgebra");
}

MetricAlgebra MetricAlgebra::verified(Algebra algebra, Form form, SweepOptions opts) {
  MetricAlgebra ma(std::move(algebra), std::move(form));
  ma.verify(opts);
  return ma;
}

MetricReport MetricAlgebra::verify(SweepOptions opts) {
  MetricReport r = check_metric(algebra_, form_, opts);
  status_.fundamental_identity_ok = r.fundamental_identity.ok();
  status_.symmetric_ok = r.symmetry.ok();
  status_.invariance_ok = r.invariance.ok();
  status_.nondegenerate_ok = r.nondegeneracy.ok();
  return r;
}

// ---------------------------------------------------------------- checkers

ViolationReport check_invariance(const Algebra& a, const Form& b, SweepOptions opts) {
  require_dims(a, b, "check_invariance");
  return kernels::invariance_parallel(a, b.gram(), opts.workers);
}

ViolationReport check_symmetry(const Form& b) {
  ViolationReport report{ViolationKind::symmetry, {}};
  const Mat& g = b.gram();
  for (std::size_t i = 0; i < g.rows(); ++i)
    for (std::size_t j = i + 1; j < g.cols(); ++j)
      if (g(i, j) != g(j, i)) {
        report.witnesses.push_back(
            {{Tuple{static_cast<int>(i + 1), static_cast<int>(j + 1)}}, Scalar(g(i, j) - g(j, i)), {}});
      }
  return report;
}

ViolationReport check_nondegeneracy(const Form& b) {
  ViolationReport report{ViolationKind::nondegeneracy, {}};
  const Subspace radical = nullspace(b.gram());
  for (std::size_t i = 0; i < radical.dim(); ++i) {
    report.witnesses.push_back({{}, radical.basis_vector(i),
                                "gram rank " + std::to_string(b.dim() - radical.dim()) + " < " + std::to_string(b.dim())});
  }
  return report;
}

MetricReport check_metric(const Algebra& a, const Form& b, SweepOptions opts) {
  require_dims(a, b, "check_metric");
  MetricReport r;
  r.fundamental_identity = check_fundamental_identity(a, opts);
  r.symmetry = check_symmetry(b);
  r.invariance = check_invariance(a, b, opts);
  r.nondegeneracy = check_nondegeneracy(b);
  return r;
}

// ---------------------------------------------------------------- orthogonality

Subspace orthogonal_complement(const Form& b, const Subspace& w) {
  require_dims(b, w, "orthogonal_complement");
  return nullspace(w.basis() * b.gram());
}

bool is_isotropic(const Form& b, const Subspace& w) {
  const Mat g = b.restricted(w);
  for (std::size_t i = 0; i < g.rows(); ++i)
    for (std::size_t j = 0; j < g.cols(); ++j)
      if (sgn(g(i, j)) != 0) return false;
  return true;
}

bool is_coisotropic(const Form& b, const Subspace& w) { return is_subset(orthogonal_complement(b, w), w); }

bool is_nondegenerate_subspace(const Form& b, const Subspace& w) { return form_radical(b, w).is_zero(); }

Subspace form_radical(const Form& b, const Subspace& w) { return intersect(w, orthogonal_complement(b, w)); }

// ---------------------------------------------------------------- invariant forms

FormSpace invariant_form_space(const Algebra& a) {
  const int d = a.dim();
  const std::size_t unknowns = to_size(d) * to_size(d + 1) / 2;
  // Unknown for B_pq = B_qp, p <= q.
  auto slot = [d](int p, int q) {
    if (p > q) std::swap(p, q);
    return to_size(p) * to_size(2 * d - p + 1) / 2 + to_size(q - p);
  };

  RowReducer rows(unknowns);
  std::vector<int> idx;
  std::vector<SparseVec> image(to_size(d));
  for_each_combination(d, a.arity() - 1, [&](std::span<const int> tuple) {
    if (rows.full()) return;
    idx.assign(tuple.begin(), tuple.end());
    idx.push_back(0);
    std::vector<int> active;
    for (int p = 0; p < d; ++p) {
      idx.back() = p;
      int s = 1;
      const SparseVec* v = a.tensor.lookup0(idx, s);
      image[to_size(p)].clear();
      if (v == nullptr) continue;
      image[to_size(p)] = *v;
      if (s < 0)
        for (auto& [_, c] : image[to_size(p)]) c = -c;
      active.push_back(p);
    }
    if (active.empty()) return;
    // Equation (p, q): sum_m [T,e_p]_m B_mq + sum_m [T,e_q]_m B_mp = 0.
    std::vector<char> done(to_size(d) * to_size(d), 0);
    for (int p : active) {
      for (int q = 0; q < d && !rows.full(); ++q) {
        const int lo = std::min(p, q), hi = std::max(p, q);
        auto& flag = done[to_size(lo) * to_size(d) + to_size(hi)];
        if (flag) continue;
        flag = 1;
        Vec row(unknowns);
        for (const auto& [m, c] : image[to_size(lo)]) row[slot(m, hi)] += c;
        for (const auto& [m, c] : image[to_size(hi)]) row[slot(m, lo)] += c;
        rows.add(std::move(row));
      }
    }
  });

  const Subspace solutions = nullspace(rows.subspace().basis());
  FormSpace out;
  out.dimension = solutions.dim();
  for (std::size_t k = 0; k < solutions.dim(); ++k) {
    const Vec v = solutions.basis_vector(k);
    Mat g(to_size(d), to_size(d));
    for (int p = 0; p < d; ++p)
      for (int q = 0; q < d; ++q) g(to_size(p), to_size(q)) = v[slot(p, q)];
    out.basis.emplace_back(std::move(g));
  }
  return out;
}

// ---------------------------------------------------------------- quotient

MetricQuotient metric_quotient(const MetricAlgebra& ma, const Subspace& ideal) {
  require_verified(ma, "metric_quotient");
  const Algebra& a = ma.algebra();
  const Form& b = ma.form();
  if (ideal.ambient_dim() != ma.udim()) throw DimensionError("metric_quotient: ideal has wrong ambient dimension");
  if (!is_ideal(a, ideal)) throw PreconditionError("metric_quotient: subspace is not an ideal");
  if (!is_isotropic(b, ideal)) throw PreconditionError("metric_quotient: ideal is not isotropic");

  if (ideal.is_zero()) return {ma, Subspace::full(ma.udim()), false};

  const Subspace perp = orthogonal_complement(b, ideal);
  if (perp == ideal) {
    return {MetricAlgebra::verified(Algebra(StructureTensor(a.arity(), 0)), Form(Mat(0, 0))), Subspace::zero(ma.udim()),
            true};
  }

  const Subspace transversal = intersect(complement(ideal), perp);
  const std::vector<Vec> reps = transversal.basis_vectors();
  const int q = static_cast<int>(reps.size());

  StructureTensor t(a.arity(), q);
  std::vector<Vec> args(to_size(a.arity()));
  for_each_combination(q, a.arity(), [&](std::span<const int> c) {
    for (std::size_t s = 0; s < c.size(); ++s) args[s] = reps[to_size(c[s])];
    const Vec v = ideal.reduce(bracket(a, args));
    if (v.is_zero()) return;
    auto coords = transversal.coordinates(v);
    if (!coords) throw VerificationError("metric_quotient: bracket left the orthogonal complement of the ideal");
    Tuple key;
    for (int i : c) key.push_back(i + 1);
    t.set(key, *coords);
  });

  MetricAlgebra out = MetricAlgebra::verified(Algebra(std::move(t)), Form(b.restricted(transversal)));
  if (!out.status().all()) throw VerificationError("metric_quotient: quotient failed the metric checks");
  return {std::move(out), transversal, false};
}

// ---------------------------------------------------------------- orthogonal split

OrthoSplit ortho_split(const MetricAlgebra& ma) {
  require_verified(ma, "ortho_split");
  const Algebra& a = ma.algebra();
  const Form& b = ma.form();
  const std::size_t d = ma.udim();

  const Subspace c = center(a);
  const Subspace k = intersect(c, derived_algebra(a));

  // B restricted to C has radical C ∩ C⊥ = C ∩ g¹, so any complement of K
  // inside C is nondegenerate; partial sums along the way need not be.
  RowReducer grown(d);
  for (std::size_t i = 0; i < k.dim(); ++i) grown.add(k.basis_vector(i));
  std::vector<Vec> picked;
  for (std::size_t i = 0; i < c.dim(); ++i) {
    Vec v = c.basis_vector(i);
    if (grown.add(v)) picked.push_back(std::move(v));
  }
  const Subspace central = span(picked, d);
  const Subspace core = orthogonal_complement(b, central);

  auto fail = [](const std::string& why) { throw VerificationError("ortho_split: " + why); };
  if (!is_ideal(a, central) || !is_ideal(a, core)) fail("a summand is not an ideal");
  if (!is_nondegenerate_subspace(b, central) || !is_nondegenerate_subspace(b, core)) fail("a summand is degenerate");
  if (!sum(central, core).is_full() || !intersect(central, core).is_zero()) fail("summands do not split the space");
  const Algebra core_alg = restrict_algebra(a, core);
  const Form core_form(b.restricted(core));
  if (!is_isotropic(core_form, center(core_alg))) fail("center of the remaining ideal is not isotropic");
  return {central, core};
}

// ---------------------------------------------------------------- dual basis / reduction

std::vector<Vec> dual_isotropic_basis(const MetricAlgebra& ma, const Subspace& c) {
  const Form& b = ma.form();
  require_dims(b, c, "dual_isotropic_basis");
  if (!is_isotropic(b, c)) throw PreconditionError("dual_isotropic_basis: subspace is not isotropic");
  if (!check_nondegeneracy(b).ok()) throw PreconditionError("dual_isotropic_basis: form is degenerate");

  const std::size_t d = ma.udim();
  const std::size_t l = c.dim();
  if (l == 0) return {};

  // Solve (c_r^T G) f_s = δ_rs with free variables set to zero.
  const Mat m = c.basis() * b.gram();
  Mat aug(l, d + l);
  for (std::size_t r = 0; r < l; ++r) {
    for (std::size_t j = 0; j < d; ++j) aug(r, j) = m(r, j);
    aug(r, d + r) = 1;
  }
  const RrefResult red = rref(aug);
  if (red.rank != l || (l > 0 && red.pivots.back() >= d)) {
    throw VerificationError("dual_isotropic_basis: pairing with the subspace is not surjective");
  }
  std::vector<Vec> f(l, Vec(d));
  for (std::size_t s = 0; s < l; ++s)
    for (std::size_t i = 0; i < red.rank; ++i) f[s][red.pivots[i]] = red.reduced(i, d + s);

  // e'_s = f_s - 1/2 sum_r B(f_s, f_r) c_r makes the dual side totally isotropic.
  std::vector<Vec> out;
  out.reserve(l);
  for (std::size_t s = 0; s < l; ++s) {
    Vec e = f[s];
    for (std::size_t r = 0; r < l; ++r) e.add_scaled(Scalar(-b(f[s], f[r]) / 2), c.basis_vector(r));
    out.push_back(std::move(e));
  }
  return out;
}

MetricAlgebra reduce_by_center(const MetricAlgebra& ma, int l) {
  require_verified(ma, "reduce_by_center");
  if (l == 0) return ma;
  const int n = ma.arity();
  const Subspace c = center(ma.algebra());
  if (l < 0 || to_size(l) > c.dim()) {
    throw PreconditionError("reduce_by_center: l = " + std::to_string(l) + " outside [0, dim C(g) = " +
                            std::to_string(c.dim()) + "]");
  }
  if (n - l < 2) throw PreconditionError("reduce_by_center: reduced arity n - l must be at least 2");

  std::vector<Vec> head;
  for (int i = 0; i < l; ++i) head.push_back(c.basis_vector(to_size(i)));
  const Subspace cl = span(head, ma.udim());
  if (!is_isotropic(ma.form(), cl)) throw PreconditionError("reduce_by_center: selected central vectors are not isotropic");
  const std::vector<Vec> duals = dual_isotropic_basis(ma, cl);

  const int d = ma.dim();
  StructureTensor t(n - l, d);
  std::vector<Vec> args(to_size(n));
  for (int s = 0; s < l; ++s) args[to_size(n - l + s)] = duals[to_size(s)];
  for_each_combination(d, n - l, [&](std::span<const int> combo) {
    for (std::size_t s = 0; s < combo.size(); ++s) args[s] = Vec::unit(to_size(d), to_size(combo[s]) + 1);
    Vec v = bracket(ma.algebra(), args);
    if (v.is_zero()) return;
    Tuple key;
    for (int i : combo) key.push_back(i + 1);
    t.set(key, v);
  });

  MetricAlgebra out = MetricAlgebra::verified(Algebra(std::move(t), ma.algebra().labels), ma.form());
  if (!out.status().all()) throw VerificationError("reduce_by_center: reduced algebra failed the metric checks");
  return out;
}

// ---------------------------------------------------------------- Levi annotations

LeviReport verify_levi(const MetricAlgebra& ma, const LeviAnnotation& ann) {
  LeviReport report;
  auto fail = [&](const std::string& why) { report.violations.witnesses.push_back({{}, std::monostate{}, why}); };

  const Algebra& a = ma.algebra();
  const Form& b = ma.form();
  const std::size_t d = ma.udim();
  const int n = ma.arity();

  bool dims_ok = ann.radical.ambient_dim() == d;
  for (const auto& s : ann.simple_parts) dims_ok = dims_ok && s.ambient_dim() == d;
  if (ann.iso_ideal) dims_ok = dims_ok && ann.iso_ideal->ambient_dim() == d;
  report.checks_run.push_back("annotation_dimensions");
  if (!dims_ok) {
    fail("annotation subspaces do not live in the algebra's space");
    return report;
  }

  const Subspace& r = ann.radical;
  const Subspace r_perp = orthogonal_complement(b, r);

  // (a) each claimed simple part is a perfect (n+1)-dimensional subalgebra
  report.checks_run.push_back("simple_parts");
  for (std::size_t i = 0; i < ann.simple_parts.size(); ++i) {
    const Subspace& s = ann.simple_parts[i];
    const std::string name = "s[" + std::to_string(i + 1) + "]";
    if (s.dim() != to_size(n + 1)) fail(name + " has dimension " + std::to_string(s.dim()) + ", expected n+1");
    if (!is_subalgebra(a, s)) {
      fail(name + " is not a subalgebra");
      continue;
    }
    if (!is_perfect(restrict_algebra(a, s))) fail(name + " is not perfect");
  }

  // (b) the simple parts commute and s ⊕ r = g
  report.checks_run.push_back("levi_directness");
  Subspace s_total = Subspace::zero(d);
  std::size_t dim_sum = 0;
  for (const auto& s : ann.simple_parts) {
    s_total = sum(s_total, s);
    dim_sum += s.dim();
  }
  if (s_total.dim() != dim_sum) fail("simple parts are not linearly independent");
  for (std::size_t i = 0; i < ann.simple_parts.size(); ++i) {
    for (std::size_t j = i + 1; j < ann.simple_parts.size(); ++j) {
      auto args = filled(s_total, n);
      args[0] = ann.simple_parts[i];
      args[1] = ann.simple_parts[j];
      if (!bracket_span(a, args).is_zero()) {
        fail("s[" + std::to_string(i + 1) + "] and s[" + std::to_string(j + 1) + "] do not bracket to zero");
      }
    }
  }
  if (!intersect(s_total, r).is_zero()) fail("s ∩ r is nonzero");
  if (!sum(s_total, r).is_full()) fail("s + r is not the whole algebra");

  // (c) r is a solvable ideal
  report.checks_run.push_back("radical_solvable_ideal");
  const bool r_ideal = is_ideal(a, r);
  if (!r_ideal) fail("r is not an ideal");
  if (!is_solvable(a, r)) fail("r is not solvable");

  // (d) C_g(r) = C(g) + r⊥ and [s, .., s, r⊥] = r⊥
  report.checks_run.push_back("centralizer_of_radical");
  if (centralizer(a, r) != sum(center(a), r_perp)) fail("C_g(r) differs from C(g) + r⊥");
  report.checks_run.push_back("semisimple_action_on_radical_perp");
  {
    auto args = filled(s_total, n);
    args.back() = r_perp;
    if (bracket_span(a, args) != r_perp) fail("[s, .., s, r⊥] differs from r⊥");
  }

  // (e) necessary conditions on a claimed isomaximal ideal
  if (ann.iso_ideal) {
    report.checks_run.push_back("iso_ideal");
    const Subspace& iso = *ann.iso_ideal;
    if (!is_ideal(a, iso)) fail("I is not an ideal");
    if (!is_isotropic(b, iso)) fail("I is not isotropic");
    if (!is_subset(intersect(r, r_perp), iso)) fail("r ∩ r⊥ is not contained in I");
    if (!is_subset(iso, r)) fail("I is not contained in r");
  }

  // (f) an isotropic radical is self-orthogonal
  if (is_isotropic(b, r)) {
    report.checks_run.push_back("isotropic_radical_self_orthogonal");
    if (r != r_perp) fail("r is isotropic but r ≠ r⊥");
  }
  return report;
}

}  // namespace nlk
