#include "doctest.h"
#include "nlk/catalog.hpp"
#include "nlk/classifier.hpp"
#include "nlk/error.hpp"
#include "support.hpp"

using namespace nlk;

namespace {

Vec br(const Algebra& a, std::initializer_list<int> idx) { return bracket_basis(a, std::vector<int>(idx)); }

Subspace range_units(std::size_t d, std::size_t from, std::size_t to) {
  std::vector<Vec> v;
  for (auto i = from; i <= to; ++i) v.push_back(Vec::unit(d, i));
  return span(v, d);
}

}  // namespace

TEST_CASE("abelian builder") {
  const MetricAlgebra a = build_abelian(3, 5);
  CHECK(a.status().all());
  CHECK(invariant_form_space(a.algebra()).dimension == 15);
  CHECK(center(a.algebra()).is_full());
  CHECK(classify(a).label == CaseLabel::abelian);
  CHECK_THROWS_AS(build_abelian(3, 2, Mat{{1, 1}, {1, 1}}), PreconditionError);
}

TEST_CASE("simple builder") {
  const MetricAlgebra s = build_simple(3, 1);
  CHECK(br(s.algebra(), {1, 3, 4}) == -Vec::unit(4, 2));
  CHECK(center(s.algebra()).is_zero());
  CHECK(invariant_form_space(s.algebra()).dimension == 1);
  CHECK_THROWS_AS(build_simple(3, 0), PreconditionError);
}

TEST_CASE("g0 builder") {
  const MetricAlgebra g = build_g0(3, 1, 1);
  const Algebra& a = g.algebra();
  CHECK(a.dim() == 8);
  // basis x1..x4 = e1..e4, y1..y4 = e5..e8
  CHECK(br(a, {3, 4, 6}) == Vec::unit(8, 5));
  CHECK(br(a, {5, 6, 1}).is_zero());
  CHECK(a.tensor.nonzero_count() == 16);
  CHECK(is_perfect(a));
  CHECK(a.labels.front() == "x1");
  CHECK(a.labels.back() == "y4");
  CHECK_THROWS_AS(build_g0(3, 0, 1), PreconditionError);
  CHECK_THROWS_AS(build_g0(3, 1, 0), PreconditionError);
}

TEST_CASE("g0 passes the axioms for several parameters") {
  for (int n = 2; n <= 4; ++n)
    for (const Scalar& l : {Scalar(1), Scalar(-2), Scalar(1, 3)})
      for (const Scalar& m : {Scalar(1), Scalar(5, 2)}) {
        const MetricAlgebra g = build_g0(n, l, m);
        CHECK(check_metric(g.algebra(), g.form()).ok());
        CHECK(g.dim() == 2 * (n + 1));
      }
}

TEST_CASE("case1 builder") {
  const MetricAlgebra m = build_case1(3, 2, 1);
  CHECK(br(m.algebra(), {2, 3, 4}) == Vec::unit(5, 1));
  CHECK(br(m.algebra(), {3, 4, 5}) == -Vec::unit(5, 2));
  CHECK(center(m.algebra()).dim() == 1);
  for (int n = 2; n <= 4; ++n)
    for (int k = 2; k <= n + 1; ++k) {
      const MetricAlgebra c = build_case1(n, k, Scalar(3, 2));
      CAPTURE(n);
      CAPTURE(k);
      CHECK(c.algebra().tensor.nonzero_count() == static_cast<std::size_t>(n + 1));
      const auto d = static_cast<std::size_t>(n + k);
      CHECK(center(c.algebra()) == range_units(d, 1, static_cast<std::size_t>(k - 1)));
      CHECK(derived_algebra(c.algebra()) == range_units(d, 1, static_cast<std::size_t>(n + 1)));
      CHECK(is_solvable(c.algebra(), Subspace::full(d)));
    }
  CHECK_THROWS_AS(build_case1(3, 1, 1), PreconditionError);
  CHECK_THROWS_AS(build_case1(3, 5, 1), PreconditionError);
  CHECK_THROWS_AS(build_case1(3, 2, 0), PreconditionError);
}

TEST_CASE("case2 builder") {
  const MetricAlgebra m = build_case2(3, 3, 1);
  const Subspace c = center(m.algebra());
  const Subspace g1 = derived_algebra(m.algebra());
  CHECK(c == range_units(6, 1, 2));
  CHECK(is_nondegenerate_subspace(m.form(), c));
  CHECK(g1.dim() == 4);
  CHECK(intersect(c, g1).is_zero());
  CHECK(sum(c, g1).is_full());
}

TEST_CASE("case3 builder") {
  const MetricAlgebra m = build_case3(3, 4, 1, 1);
  CHECK(m.dim() == 7);
  const Subspace c = center(m.algebra());
  const Subspace g1 = derived_algebra(m.algebra());
  CHECK(intersect(c, g1).dim() == 2);
  CHECK(c.dim() == 3);
  CHECK(g1.dim() == 4);
  CHECK_THROWS_AS(build_case3(3, 4, 3, 1), PreconditionError);
  CHECK_THROWS_AS(build_case3(3, 4, 0, 1), PreconditionError);
}

TEST_CASE("orthogonal direct sums") {
  const MetricAlgebra g = build_g0(3, 1, 1);
  const std::vector<MetricAlgebra> two{g, g};
  const MetricAlgebra s = ortho_direct_sum(two);
  CHECK(s.dim() == 16);
  CHECK(invariant_form_space(s.algebra()).dimension == 4);

  const std::vector<MetricAlgebra> with_empty{g, build_abelian(3, 0)};
  const MetricAlgebra e = ortho_direct_sum(with_empty);
  CHECK(e.algebra().tensor == g.algebra().tensor);
  CHECK(e.form() == g.form());

  const std::vector<MetricAlgebra> abelians{build_abelian(3, 2), build_abelian(3, 3)};
  CHECK(ortho_direct_sum(abelians).algebra().tensor.is_zero());

  const std::vector<MetricAlgebra> mismatch{build_simple(2, 1), build_simple(3, 1)};
  CHECK_THROWS_AS(ortho_direct_sum(mismatch), DimensionError);
}

TEST_CASE("family dispatch") {
  FamilyParams p;
  p.family = parse_family("case3");
  p.n = 4;
  p.k = 4;
  p.l = 1;
  p.a = 2;
  CHECK(build(p).algebra() == build_case3(4, 4, 1, 2).algebra());
  CHECK(to_string(Family::ortho_sum) == "ortho_sum");
  CHECK_THROWS_AS(parse_family("nonsense"), ParseError);
}
