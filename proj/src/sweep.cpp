#include "nlk/sweep.hpp"

#include <omp.h>

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <iterator>
#include <string>
#include <string_view>

#include "nlk/error.hpp"

namespace nlk::kernels {

namespace {

std::size_t to_size(int v) { return static_cast<std::size_t>(v); }

Tuple one_based(std::span<const int> idx0) {
  Tuple t;
  t.reserve(idx0.size());
  for (int i : idx0) t.push_back(i + 1);
  return t;
}

/// Dense accumulator that remembers which coordinates it touched.
class Accumulator {
 public:
  explicit Accumulator(std::size_t dim) : values_(dim), touched_(dim, 0) {}

  void add(int index, const Scalar& s) {
    auto i = to_size(index);
    if (!touched_[i]) {
      touched_[i] = 1;
      order_.push_back(i);
    }
    values_[i] += s;
  }

  bool is_zero() const {
    for (auto i : order_)
      if (sgn(values_[i]) != 0) return false;
    return true;
  }

  Vec take() const {
    Vec v(values_.size());
    for (auto i : order_) v[i] = values_[i];
    return v;
  }

  void clear() {
    for (auto i : order_) {
      values_[i] = 0;
      touched_[i] = 0;
    }
    order_.clear();
  }

 private:
  std::vector<Scalar> values_;
  std::vector<char> touched_;
  std::vector<std::size_t> order_;
};

void sweep_fi_x(const StructureTensor& t, std::span<const int> x, const std::vector<std::vector<int>>& ys,
                std::vector<Witness>& out) {
  const std::size_t n = x.size();
  const auto d = to_size(t.dim());
  Accumulator acc(d);
  std::vector<int> idx(n);
  std::vector<int> xs(x.begin(), x.end());
  const SparseVec* xval = t.lookup_sorted0(x);
  Scalar prod;

  for (const auto& y : ys) {
    std::copy(y.begin(), y.end(), idx.begin() + 1);

    // [[x_1..x_n], y_2..y_n]
    if (xval != nullptr) {
      for (const auto& [m, c] : *xval) {
        idx[0] = m;
        int s = 1;
        const SparseVec* v = t.lookup0(idx, s);
        if (v == nullptr) continue;
        for (const auto& [p, c2] : *v) {
          prod = c * c2;
          if (s < 0) prod = -prod;
          acc.add(p, prod);
        }
      }
    }

    // - sum_i [x_1.., [x_i, y_2..y_n], .., x_n]
    for (std::size_t i = 0; i < n; ++i) {
      idx[0] = x[i];
      int si = 1;
      const SparseVec* inner = t.lookup0(idx, si);
      if (inner == nullptr) continue;
      for (const auto& [m, c] : *inner) {
        xs[i] = m;
        int so = 1;
        const SparseVec* outer = t.lookup0(xs, so);
        if (outer == nullptr) continue;
        for (const auto& [p, c2] : *outer) {
          prod = c * c2;
          if (si * so > 0) prod = -prod;
          acc.add(p, prod);
        }
      }
      xs[i] = x[i];
    }

    if (!acc.is_zero()) out.push_back({{one_based(x), one_based(y)}, acc.take(), {}});
    acc.clear();
  }
}

void sweep_invariance_t(const StructureTensor& t, const Mat& gram, std::span<const int> tuple,
                        std::vector<Witness>& out) {
  const int d = t.dim();
  const std::size_t n = tuple.size() + 1;
  std::vector<int> idx(tuple.begin(), tuple.end());
  idx.push_back(0);
  // row[p] = [T, e_p] as a sparse vector with sign folded in.
  std::vector<SparseVec> row(to_size(d));
  for (int p = 0; p < d; ++p) {
    idx[n - 1] = p;
    int s = 1;
    const SparseVec* v = t.lookup0(idx, s);
    if (v == nullptr) continue;
    row[to_size(p)] = *v;
    if (s < 0)
      for (auto& [_, c] : row[to_size(p)]) c = -c;
  }
  Scalar r;
  for (int p = 0; p < d; ++p) {
    for (int q = p; q < d; ++q) {
      r = 0;
      for (const auto& [m, c] : row[to_size(p)]) r += c * gram(to_size(m), to_size(q));
      for (const auto& [m, c] : row[to_size(q)]) r += c * gram(to_size(m), to_size(p));
      if (sgn(r) != 0) out.push_back({{one_based(tuple), Tuple{p + 1, q + 1}}, r, {}});
    }
  }
}

void require_gram(const Algebra& a, const Mat& gram) {
  if (gram.rows() != a.udim() || gram.cols() != a.udim()) throw DimensionError("gram matrix does not match algebra dimension");
}

}  // namespace

ViolationReport fundamental_identity_reference(const Algebra& a) {
  ViolationReport report{ViolationKind::fundamental_identity, {}};
  const std::size_t d = a.udim();
  const int n = a.arity();
  const auto ys = combinations(a.dim(), n - 1);
  for_each_combination(a.dim(), n, [&](std::span<const int> x) {
    std::vector<Vec> xv;
    for (int i : x) xv.push_back(Vec::unit(d, to_size(i) + 1));
    const Vec bx = bracket(a, xv);
    for (const auto& y : ys) {
      std::vector<Vec> args{bx};
      for (int j : y) args.push_back(Vec::unit(d, to_size(j) + 1));
      Vec residual = bracket(a, args);
      for (std::size_t i = 0; i < x.size(); ++i) {
        args[0] = xv[i];
        std::vector<Vec> outer = xv;
        outer[i] = bracket(a, args);
        residual -= bracket(a, outer);
      }
      if (!residual.is_zero()) report.witnesses.push_back({{one_based(x), one_based(y)}, residual, {}});
    }
  });
  return report;
}

ViolationReport fundamental_identity_parallel(const Algebra& a, int workers) {
  if (workers < 1) throw PreconditionError("worker count must be >= 1");
  const int n = a.arity();
  const auto xs = combinations(a.dim(), n);
  const auto ys = combinations(a.dim(), n - 1);
  std::vector<std::vector<Witness>> per_x(xs.size());
  const auto count = static_cast<long>(xs.size());

#pragma omp parallel for schedule(dynamic, 1) num_threads(workers)
  for (long i = 0; i < count; ++i) {
    sweep_fi_x(a.tensor, xs[static_cast<std::size_t>(i)], ys, per_x[static_cast<std::size_t>(i)]);
  }

  ViolationReport report{ViolationKind::fundamental_identity, {}};
  for (auto& w : per_x) std::move(w.begin(), w.end(), std::back_inserter(report.witnesses));
  return report;
}

ViolationReport invariance_reference(const Algebra& a, const Mat& gram) {
  require_gram(a, gram);
  ViolationReport report{ViolationKind::invariance, {}};
  const std::size_t d = a.udim();
  for_each_combination(a.dim(), a.arity() - 1, [&](std::span<const int> tuple) {
    std::vector<int> key = one_based(tuple);
    key.push_back(0);
    for (std::size_t p = 0; p < d; ++p) {
      for (std::size_t q = p; q < d; ++q) {
        key.back() = static_cast<int>(p + 1);
        const Vec tp = bracket_basis(a, key);
        key.back() = static_cast<int>(q + 1);
        const Vec tq = bracket_basis(a, key);
        const Scalar r = dot(tp, gram.col(q)) + dot(tq, gram.col(p));
        if (sgn(r) != 0) {
          report.witnesses.push_back(
              {{one_based(tuple), Tuple{static_cast<int>(p + 1), static_cast<int>(q + 1)}}, r, {}});
        }
      }
    }
  });
  return report;
}

ViolationReport invariance_parallel(const Algebra& a, const Mat& gram, int workers) {
  require_gram(a, gram);
  if (workers < 1) throw PreconditionError("worker count must be >= 1");
  const auto ts = combinations(a.dim(), a.arity() - 1);
  std::vector<std::vector<Witness>> per_t(ts.size());
  const auto count = static_cast<long>(ts.size());

#pragma omp parallel for schedule(dynamic, 1) num_threads(workers)
  for (long i = 0; i < count; ++i) {
    sweep_invariance_t(a.tensor, gram, ts[static_cast<std::size_t>(i)], per_t[static_cast<std::size_t>(i)]);
  }

  ViolationReport report{ViolationKind::invariance, {}};
  for (auto& w : per_t) std::move(w.begin(), w.end(), std::back_inserter(report.witnesses));
  return report;
}

int workers_from_env() {
  const char* raw = std::getenv("NLK_WORKERS");
  if (raw == nullptr) return 1;
  std::string_view s(raw);
  int value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size() || value < 1) {
    throw ParseError("NLK_WORKERS must be an integer >= 1, got \"" + std::string(s) + "\"");
  }
  return value;
}

}  // namespace nlk::kernels
