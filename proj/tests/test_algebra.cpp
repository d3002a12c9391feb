#include "doctest.h"
#include "nlk/algebra.hpp"
#include "nlk/catalog.hpp"
#include "nlk/error.hpp"
#include "nlk/sweep.hpp"
#include "support.hpp"

using namespace nlk;

namespace {

Vec e(std::size_t d, std::size_t i) { return Vec::unit(d, i); }

Subspace span_units(std::size_t d, std::initializer_list<std::size_t> idx) {
  std::vector<Vec> v;
  for (auto i : idx) v.push_back(Vec::unit(d, i));
  return span(v, d);
}

Vec br(const Algebra& a, std::initializer_list<Vec> args) {
  const std::vector<Vec> v(args);
  return bracket(a, v);
}

/// Arity-2 table that breaks the Jacobi identity.
Algebra bad_jacobi() {
  StructureTensor t(2, 3);
  t.set(std::vector<int>{1, 2}, e(3, 2));
  t.set(std::vector<int>{1, 3}, e(3, 3));
  t.set(std::vector<int>{2, 3}, e(3, 1));
  return Algebra(std::move(t));
}

}  // namespace

TEST_CASE("bracket on the simple 3-Lie algebra") {
  const Algebra s = build_simple(3, 1).algebra();
  CHECK(br(s, {e(4, 2), e(4, 3), e(4, 4)}) == e(4, 1));
  CHECK(br(s, {e(4, 3), e(4, 2), e(4, 4)}) == -e(4, 1));
  CHECK(br(s, {e(4, 2), e(4, 2), e(4, 4)}).is_zero());
  CHECK(br(s, {e(4, 1), e(4, 3), e(4, 4)}) == -e(4, 2));
  CHECK_THROWS_AS(br(s, {e(3, 1), e(4, 3), e(4, 4)}), DimensionError);
}

TEST_CASE("structure tensor storage") {
  StructureTensor t(3, 5);
  t.set(std::vector<int>{4, 2, 1}, Vec{0, 0, 1, 0, 0});
  CHECK(t.get(std::vector<int>{1, 2, 4}) == Vec{0, 0, -1, 0, 0});
  CHECK(t.get(std::vector<int>{2, 1, 4}) == Vec{0, 0, 1, 0, 0});
  CHECK(t.nonzero_count() == 1);
  CHECK_THROWS(t.set(std::vector<int>{1, 1, 2}, Vec{1, 0, 0, 0, 0}));
  t.set(std::vector<int>{1, 2, 4}, Vec(5));
  CHECK(t.is_zero());
}

TEST_CASE("antisymmetry and multilinearity on random inputs") {
  testing::rng(11);
  for (const auto& [name, ma] : testing::catalog_sample()) {
    CAPTURE(name);
    const Algebra& a = ma.algebra();
    const std::size_t d = a.udim();
    const auto n = static_cast<std::size_t>(a.arity());
    for (int trial = 0; trial < 10; ++trial) {
      std::vector<Vec> args;
      for (std::size_t i = 0; i < n; ++i) args.push_back(testing::random_vec(d));
      const Vec base = bracket(a, args);

      auto swapped = args;
      std::swap(swapped[0], swapped[n - 1]);
      CHECK(bracket(a, swapped) == -base);

      auto repeated = args;
      repeated[1] = repeated[0];
      CHECK(bracket(a, repeated).is_zero());

      const Scalar alpha = testing::random_scalar(), beta = testing::random_scalar();
      const Vec u = testing::random_vec(d);
      auto mixed = args;
      mixed[0] = alpha * args[0] + beta * u;
      auto only_u = args;
      only_u[0] = u;
      CHECK(bracket(a, mixed) == alpha * base + beta * bracket(a, only_u));
    }
  }
}

TEST_CASE("canonical bracket matches the dense tensor oracle") {
  testing::rng(12);
  for (const auto& [name, ma] : testing::catalog_sample()) {
    CAPTURE(name);
    const Algebra& a = ma.algebra();
    const testing::DenseTensor dense(a);
    for (int trial = 0; trial < 10; ++trial) {
      std::vector<Vec> args;
      for (int i = 0; i < a.arity(); ++i) args.push_back(testing::random_vec(a.udim()));
      CHECK(bracket(a, args) == dense.bracket(args));
    }
  }
}

TEST_CASE("fundamental identity checker") {
  CHECK(check_fundamental_identity(build_simple(3, 1).algebra()).ok());
  CHECK(check_fundamental_identity(build_abelian(3, 5).algebra()).ok());

  const ViolationReport r = check_fundamental_identity(bad_jacobi());
  REQUIRE_FALSE(r.ok());
  const Witness& w = r.witnesses.front();
  CHECK(w.tuples == std::vector<Tuple>{{1, 2}, {3}});
  CHECK(std::get<Vec>(w.residual) == Vec{2, 0, 0});
}

TEST_CASE("serial reference and OpenMP kernels agree") {
  std::vector<testing::Named> cases = testing::catalog_sample();
  cases.push_back({"bad_jacobi", MetricAlgebra(bad_jacobi(), Form::identity(3))});
  // a table with many violations: random entries on a small arity-3 algebra
  testing::rng(13);
  StructureTensor t(3, 5);
  for (const auto& key : combinations(5, 3)) {
    Tuple k1;
    for (int i : key) k1.push_back(i + 1);
    t.set(k1, testing::random_vec(5));
  }
  cases.push_back({"random", MetricAlgebra(Algebra(t), Form::identity(5))});

  for (const auto& [name, ma] : cases) {
    CAPTURE(name);
    const Algebra& a = ma.algebra();
    const auto ref = kernels::fundamental_identity_reference(a);
    for (int w : {1, 2, 3}) {
      const auto par = kernels::fundamental_identity_parallel(a, w);
      REQUIRE(par.witnesses.size() == ref.witnesses.size());
      for (std::size_t i = 0; i < ref.witnesses.size(); ++i) {
        CHECK(par.witnesses[i].tuples == ref.witnesses[i].tuples);
        CHECK(std::get<Vec>(par.witnesses[i].residual) == std::get<Vec>(ref.witnesses[i].residual));
      }
    }
    Mat gram = ma.form().gram();
    gram(0, 0) += 1;
    const auto iref = kernels::invariance_reference(a, gram);
    for (int w : {1, 2, 3}) {
      const auto ipar = kernels::invariance_parallel(a, gram, w);
      REQUIRE(ipar.witnesses.size() == iref.witnesses.size());
      for (std::size_t i = 0; i < iref.witnesses.size(); ++i) {
        CHECK(ipar.witnesses[i].tuples == iref.witnesses[i].tuples);
        CHECK(std::get<Scalar>(ipar.witnesses[i].residual) == std::get<Scalar>(iref.witnesses[i].residual));
      }
    }
  }
  CHECK_THROWS_AS(kernels::fundamental_identity_parallel(bad_jacobi(), 0), PreconditionError);
}

TEST_CASE("bracket_span and derived series") {
  const Algebra s = build_simple(3, 1).algebra();
  CHECK(derived_algebra(s).is_full());
  CHECK(is_perfect(s));
  CHECK(derived_algebra(build_abelian(3, 5).algebra()).is_zero());

  const Algebra m = build_case1(3, 2, 1).algebra();
  const Subspace g1 = derived_algebra(m);
  CHECK(g1 == span_units(5, {1, 2, 3, 4}));
  const std::vector<Subspace> slots{g1, g1, g1};
  CHECK(bracket_span(m, slots) == span_units(5, {1}));

  const auto series = derived_series(m, Subspace::full(5));
  REQUIRE(series.size() == 4);
  CHECK(series[1] == g1);
  CHECK(series[2] == span_units(5, {1}));
  CHECK(series[3].is_zero());
  CHECK(is_solvable(m, Subspace::full(5)));
  CHECK(is_solvable(build_abelian(3, 4).algebra(), Subspace::full(4)));
  CHECK_FALSE(is_solvable(s, Subspace::full(4)));
}

TEST_CASE("center and centralizer") {
  const Algebra m = build_case1(3, 2, 1).algebra();
  CHECK(center(m) == span_units(5, {1}));
  const Algebra s = build_simple(3, 1).algebra();
  CHECK(center(s).is_zero());
  CHECK(centralizer(s, span_units(4, {1})) == span_units(4, {1}));
  CHECK(center(build_abelian(2, 3).algebra()).is_full());
}

TEST_CASE("ideal predicates") {
  const Algebra m = build_case1(3, 2, 1).algebra();
  CHECK(is_ideal(m, span_units(5, {1})));
  CHECK_FALSE(is_abelian_ideal(m, span_units(5, {1, 2, 3, 4})));
  CHECK(is_subalgebra(m, Subspace::zero(5)));
  CHECK(is_subalgebra(build_simple(3, 1).algebra(), Subspace::zero(4)));
  CHECK_FALSE(is_ideal(m, span_units(5, {5})));
}

TEST_CASE("center, derived algebra and centralizers of ideals are ideals") {
  testing::rng(14);
  for (const auto& [name, ma] : testing::catalog_sample()) {
    CAPTURE(name);
    const Algebra& a = ma.algebra();
    CHECK(is_ideal(a, center(a)));
    CHECK(is_ideal(a, derived_algebra(a)));
    for (int trial = 0; trial < 5; ++trial) {
      const Subspace i = testing::generated_ideal(a, testing::random_vec(a.udim()));
      CHECK(is_ideal(a, i));
      CHECK(is_ideal(a, centralizer(a, i)));
    }
  }
}

TEST_CASE("quotient algebra") {
  const Algebra m = build_case1(3, 2, 1).algebra();
  const auto q0 = quotient_algebra(m, Subspace::zero(5));
  CHECK(q0.algebra.tensor == m.tensor);
  CHECK(q0.projection == Mat::identity(5));

  const auto q = quotient_algebra(m, span_units(5, {1}));
  CHECK(q.algebra.dim() == 4);
  CHECK(q.algebra.arity() == 3);
  CHECK(bracket_basis(q.algebra, std::vector<int>{1, 2, 3}).is_zero());
  CHECK(check_fundamental_identity(q.algebra).ok());

  const auto qg = quotient_algebra(m, Subspace::full(5));
  CHECK(qg.algebra.dim() == 0);
  CHECK_THROWS_AS(quotient_algebra(m, span_units(5, {5})), PreconditionError);
}

TEST_CASE("restriction") {
  const Algebra s = build_simple(3, 1).algebra();
  CHECK(restrict_algebra(s, Subspace::zero(4)).dim() == 0);
  CHECK(restrict_algebra(s, Subspace::full(4)).tensor == s.tensor);
  CHECK_THROWS(restrict_algebra(s, span_units(4, {1, 2, 3})));
}

TEST_CASE("basis permutation is an isomorphism") {
  testing::rng(15);
  for (const auto& [name, ma] : testing::catalog_sample()) {
    CAPTURE(name);
    const Algebra& a = ma.algebra();
    const auto perm = testing::random_permutation(a.dim());
    const Algebra p = permute_basis(a, perm);
    CHECK(check_fundamental_identity(p).ok());
    CHECK(center(p).dim() == center(a).dim());
    CHECK(derived_algebra(p).dim() == derived_algebra(a).dim());
    CHECK(p.tensor.nonzero_count() == a.tensor.nonzero_count());
  }
}
