#include "nlk/catalog.hpp"

#include <string>
#include <vector>

#include "nlk/error.hpp"

namespace nlk {

namespace {

std::size_t to_size(int v) { return static_cast<std::size_t>(v); }

int sign_of(int exponent) { return (exponent % 2 == 0) ? 1 : -1; }

std::vector<std::string> numbered(const std::string& stem, int from, int to) {
  std::vector<std::string> out;
  for (int i = from; i <= to; ++i) out.push_back(stem + std::to_string(i));
  return out;
}

MetricAlgebra finish(Algebra a, Form b, const char* what) {
  MetricAlgebra ma = MetricAlgebra::verified(std::move(a), std::move(b));
  if (!ma.status().all()) throw VerificationError(std::string(what) + ": built algebra failed the metric checks");
  return ma;
}

void require(bool cond, const std::string& msg) {
  if (!cond) throw PreconditionError(msg);
}

void require_arity(int n) { require(n >= 2, "arity n must be at least 2"); }

}  // namespace

std::string to_string(Family f) {
  switch (f) {
    case Family::abelian: return "abelian";
    case Family::simple: return "simple";
    case Family::g0: return "g0";
    case Family::case1: return "case1";
    case Family::case2: return "case2";
    case Family::case3: return "case3";
    case Family::ortho_sum: return "ortho_sum";
  }
  return "unknown";
}

Family parse_family(std::string_view name) {
  for (Family f : {Family::abelian, Family::simple, Family::g0, Family::case1, Family::case2, Family::case3,
                   Family::ortho_sum}) {
    if (to_string(f) == name) return f;
  }
  throw ParseError("unknown family \"" + std::string(name) + "\"");
}

MetricAlgebra build_abelian(int n, int d, const std::optional<Mat>& gram) {
  require_arity(n);
  require(d >= 0, "dimension must be non-negative");
  Mat g = gram.value_or(Mat::identity(to_size(d)));
  require(g.rows() == to_size(d) && g.cols() == to_size(d), "gram matrix must be d x d");
  require(g.is_symmetric(), "gram matrix must be symmetric");
  Form b(std::move(g));
  require(check_nondegeneracy(b).ok(), "gram matrix is degenerate");
  return finish(Algebra(StructureTensor(n, d), numbered("e", 1, d)), std::move(b), "build_abelian");
}

MetricAlgebra build_simple(int n, const Scalar& c) {
  require_arity(n);
  require(sgn(c) != 0, "c must be nonzero");
  const int d = n + 1;
  StructureTensor t(n, d);
  for (int r = 1; r <= d; ++r) {
    Tuple key;
    for (int i = 1; i <= d; ++i)
      if (i != r) key.push_back(i);
    t.set(key, Scalar(sign_of(r + 1) * c) * Vec::unit(to_size(d), to_size(r)));
  }
  return finish(Algebra(std::move(t), numbered("e", 1, d)), Form::identity(to_size(d)), "build_simple");
}

MetricAlgebra build_g0(int n, const Scalar& lambda, const Scalar& mu) {
  require_arity(n);
  require(sgn(lambda) != 0 && sgn(mu) != 0, "lambda * mu must be nonzero");
  const int m = n + 1;
  const int d = 2 * m;
  auto x = [](int i) { return i; };
  auto y = [m](int i) { return m + i; };
  StructureTensor t(n, d);

  // [x_1..x̂_i..x_{n+1}] = (-1)^{i+1} x_i
  for (int i = 1; i <= m; ++i) {
    Tuple key;
    for (int s = 1; s <= m; ++s)
      if (s != i) key.push_back(x(s));
    t.set(key, Scalar(sign_of(i + 1)) * Vec::unit(to_size(d), to_size(x(i))));
  }
  // For i < j, with x_i and x_j omitted:
  //   [.., y_j] = (-1)^{n-j+i} y_i,   [.., y_i] = (-1)^{n-i+j+1} y_j
  for (int i = 1; i <= m; ++i) {
    for (int j = i + 1; j <= m; ++j) {
      Tuple base;
      for (int s = 1; s <= m; ++s)
        if (s != i && s != j) base.push_back(x(s));
      Tuple with_yj = base;
      with_yj.push_back(y(j));
      t.set(with_yj, Scalar(sign_of(n - j + i)) * Vec::unit(to_size(d), to_size(y(i))));
      Tuple with_yi = base;
      with_yi.push_back(y(i));
      t.set(with_yi, Scalar(sign_of(n - i + j + 1)) * Vec::unit(to_size(d), to_size(y(j))));
    }
  }

  Mat g(to_size(d), to_size(d));
  for (int i = 1; i <= m; ++i) {
    g(to_size(x(i) - 1), to_size(x(i) - 1)) = lambda;
    g(to_size(x(i) - 1), to_size(y(i) - 1)) = mu;
    g(to_size(y(i) - 1), to_size(x(i) - 1)) = mu;
  }
  auto labels = numbered("x", 1, m);
  for (auto& s : numbered("y", 1, m)) labels.push_back(s);
  return finish(Algebra(std::move(t), std::move(labels)), Form(std::move(g)), "build_g0");
}

MetricAlgebra build_case1(int n, int k, const Scalar& a) {
  require_arity(n);
  require(2 <= k && k <= n + 1, "case1 needs 2 <= k <= n+1");
  require(sgn(a) != 0, "a must be nonzero");
  const int d = n + k;
  StructureTensor t(n, d);
  // Every nonzero bracket omits exactly one of e_k..e_{n+k}.
  auto omit = [&](int skipped) {
    Tuple key;
    for (int i = k; i <= d; ++i)
      if (i != skipped) key.push_back(i);
    return key;
  };
  for (int i = k; i <= n + 1; ++i) t.set(omit(i), Scalar(sign_of(n + i) * a) * Vec::unit(to_size(d), to_size(i)));
  for (int r = 1; r <= k - 1; ++r)
    t.set(omit(n + 1 + r), Scalar(sign_of(r + 1) * a) * Vec::unit(to_size(d), to_size(r)));

  // B(e_r, e_{n+1+r}) = 1 for central e_r, B(e_i, e_i) = 1 for k <= i <= n+1.
  Mat g(to_size(d), to_size(d));
  for (int r = 1; r <= k - 1; ++r) {
    g(to_size(r - 1), to_size(n + r)) = 1;
    g(to_size(n + r), to_size(r - 1)) = 1;
  }
  for (int i = k; i <= n + 1; ++i) g(to_size(i - 1), to_size(i - 1)) = 1;
  return finish(Algebra(std::move(t), numbered("e", 1, d)), Form(std::move(g)), "build_case1");
}

MetricAlgebra build_case2(int n, int k, const Scalar& c) {
  require_arity(n);
  require(2 <= k && k <= n + 1, "case2 needs 2 <= k <= n+1");
  const MetricAlgebra parts[] = {build_abelian(n, k - 1), build_simple(n, c)};
  MetricAlgebra sum = ortho_direct_sum(parts);
  auto labels = numbered("x", 1, k - 1);
  for (auto& s : numbered("e", 1, n + 1)) labels.push_back(s);
  return finish(Algebra(sum.algebra().tensor, std::move(labels)), sum.form(), "build_case2");
}

MetricAlgebra build_case3(int n, int k, int l, const Scalar& a) {
  require_arity(n);
  require(2 <= k && k <= n + 1, "case3 needs 2 <= k <= n+1");
  require(1 <= l && l < k - 1, "case3 needs 1 <= l < k-1");
  const MetricAlgebra parts[] = {build_abelian(n, l), build_case1(n, k - l, a)};
  MetricAlgebra sum = ortho_direct_sum(parts);
  auto labels = numbered("x", 1, l);
  for (auto& s : numbered("e", 1, n + k - l)) labels.push_back(s);
  return finish(Algebra(sum.algebra().tensor, std::move(labels)), sum.form(), "build_case3");
}

MetricAlgebra ortho_direct_sum(std::span<const MetricAlgebra> parts) {
  if (parts.empty()) throw PreconditionError("ortho_direct_sum needs at least one part");
  const int n = parts.front().arity();
  int d = 0;
  for (const auto& p : parts) {
    if (p.arity() != n) throw DimensionError("ortho_direct_sum: arity mismatch");
    d += p.dim();
  }

  StructureTensor t(n, d);
  Mat g(to_size(d), to_size(d));
  std::vector<std::string> labels;
  bool all_labelled = true;
  int offset = 0;
  for (const auto& p : parts) {
    for (const auto& [key, value] : p.algebra().tensor.entries()) {
      Tuple shifted;
      for (int i : key) shifted.push_back(i + offset);
      Vec v(to_size(d));
      for (std::size_t m = 0; m < value.size(); ++m) v[to_size(offset) + m] = value[m];
      t.set(shifted, v);
    }
    const Mat& pg = p.form().gram();
    for (std::size_t i = 0; i < pg.rows(); ++i)
      for (std::size_t j = 0; j < pg.cols(); ++j) g(to_size(offset) + i, to_size(offset) + j) = pg(i, j);
    all_labelled = all_labelled && p.algebra().labels.size() == p.udim();
    for (const auto& s : p.algebra().labels) labels.push_back(s);
    offset += p.dim();
  }
  if (!all_labelled) labels.clear();
  return MetricAlgebra::verified(Algebra(std::move(t), std::move(labels)), Form::unchecked(std::move(g)));
}

MetricAlgebra build(const FamilyParams& p) {
  switch (p.family) {
    case Family::abelian: return build_abelian(p.n, p.d);
    case Family::simple: return build_simple(p.n, p.c);
    case Family::g0: return build_g0(p.n, p.lambda, p.mu);
    case Family::case1: return build_case1(p.n, p.k, p.a);
    case Family::case2: return build_case2(p.n, p.k, p.c);
    case Family::case3: return build_case3(p.n, p.k, p.l, p.a);
    case Family::ortho_sum: {
      require(p.copies >= 1, "ortho_sum needs at least one copy");
      std::vector<MetricAlgebra> parts(to_size(p.copies), build_g0(p.n, p.lambda, p.mu));
      return ortho_direct_sum(parts);
    }
  }
  throw PreconditionError("unknown family");
}

}  // namespace nlk
