#include "nlk/algebra.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <string>

#include "nlk/error.hpp"
#include "nlk/sweep.hpp"

namespace nlk {

namespace {

constexpr int kMaxArity = 16;

std::size_t to_size(int v) { return static_cast<std::size_t>(v); }

void require_dim(const Algebra& a, const Subspace& w, const char* what) {
  if (w.ambient_dim() != a.udim()) {
    throw DimensionError(std::string(what) + ": subspace lives in dimension " + std::to_string(w.ambient_dim()) +
                         ", algebra has dimension " + std::to_string(a.dim()));
  }
}

std::vector<Subspace> repeated(const Subspace& s, int times) { return std::vector<Subspace>(to_size(times), s); }

}  // namespace

// ---------------------------------------------------------------- helpers

SparseVec to_sparse(const Vec& v) {
  SparseVec out;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (sgn(v[i]) != 0) out.emplace_back(static_cast<int>(i), v[i]);
  return out;
}

Vec to_dense(const SparseVec& v, std::size_t dim) {
  Vec out(dim);
  for (const auto& [i, c] : v) out[to_size(i)] = c;
  return out;
}

std::size_t binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

std::vector<std::vector<int>> combinations(int n, int k) {
  std::vector<std::vector<int>> out;
  for_each_combination(n, k, [&](std::span<const int> c) { out.emplace_back(c.begin(), c.end()); });
  return out;
}

std::string to_string(ViolationKind k) {
  switch (k) {
    case ViolationKind::fundamental_identity: return "fundamental_identity";
    case ViolationKind::invariance: return "invariance";
    case ViolationKind::symmetry: return "symmetry";
    case ViolationKind::nondegeneracy: return "nondegeneracy";
    case ViolationKind::levi: return "levi";
  }
  return "unknown";
}

// ---------------------------------------------------------------- StructureTensor

StructureTensor::StructureTensor(int arity, int dim) : arity_(arity), dim_(dim) {
  if (arity < 2 || arity > kMaxArity) throw PreconditionError("arity must lie in [2, 16], got " + std::to_string(arity));
  if (dim < 0) throw PreconditionError("negative dimension");
  table_.resize(binomial(to_size(dim), to_size(arity)));
}

std::size_t StructureTensor::rank_of(std::span<const int> sorted) const {
  std::size_t r = 0;
  for (std::size_t i = 0; i < sorted.size(); ++i) r += binomial(to_size(sorted[i]), i + 1);
  return r;
}

const SparseVec* StructureTensor::lookup_sorted0(std::span<const int> sorted) const {
  const SparseVec& v = table_[rank_of(sorted)];
  return v.empty() ? nullptr : &v;
}

const SparseVec* StructureTensor::lookup0(std::span<const int> indices, int& sign) const {
  std::array<int, kMaxArity> buf{};
  const std::size_t n = indices.size();
  std::copy(indices.begin(), indices.end(), buf.begin());
  int s = 1;
  for (std::size_t i = 1; i < n; ++i) {
    const int key = buf[i];
    std::size_t j = i;
    while (j > 0 && buf[j - 1] > key) {
      buf[j] = buf[j - 1];
      --j;
      s = -s;
    }
    buf[j] = key;
    if (j > 0 && buf[j - 1] == key) return nullptr;
  }
  sign = s;
  return lookup_sorted0(std::span<const int>(buf.data(), n));
}

void StructureTensor::set(std::span<const int> indices, const Vec& value) {
  if (static_cast<int>(indices.size()) != arity_) throw DimensionError("tensor key has wrong length");
  if (value.size() != to_size(dim_)) throw DimensionError("tensor value has wrong length");
  std::vector<int> idx0;
  for (int i : indices) {
    if (i < 1 || i > dim_) throw DimensionError("tensor index " + std::to_string(i) + " out of range");
    idx0.push_back(i - 1);
  }
  int sign = 1;
  for (std::size_t i = 1; i < idx0.size(); ++i) {
    for (std::size_t j = i; j > 0 && idx0[j - 1] > idx0[j]; --j) {
      std::swap(idx0[j - 1], idx0[j]);
      sign = -sign;
    }
  }
  for (std::size_t i = 1; i < idx0.size(); ++i)
    if (idx0[i] == idx0[i - 1]) throw PreconditionError("tensor key repeats an index");
  SparseVec sv = to_sparse(value);
  if (sign < 0)
    for (auto& [_, c] : sv) c = -c;
  table_[rank_of(idx0)] = std::move(sv);
}

Vec StructureTensor::get(std::span<const int> indices) const {
  if (static_cast<int>(indices.size()) != arity_) throw DimensionError("tensor key has wrong length");
  std::vector<int> idx0;
  for (int i : indices) {
    if (i < 1 || i > dim_) throw DimensionError("tensor index " + std::to_string(i) + " out of range");
    idx0.push_back(i - 1);
  }
  int sign = 1;
  const SparseVec* v = lookup0(idx0, sign);
  Vec out(to_size(dim_));
  if (v == nullptr) return out;
  for (const auto& [i, c] : *v) out[to_size(i)] = sign > 0 ? c : Scalar(-c);
  return out;
}

std::vector<std::pair<Tuple, Vec>> StructureTensor::entries() const {
  std::vector<std::pair<Tuple, Vec>> out;
  for_each_combination(dim_, arity_, [&](std::span<const int> c) {
    const SparseVec* v = lookup_sorted0(c);
    if (v == nullptr) return;
    Tuple t;
    for (int i : c) t.push_back(i + 1);
    out.emplace_back(std::move(t), to_dense(*v, to_size(dim_)));
  });
  return out;
}

std::size_t StructureTensor::nonzero_count() const {
  return static_cast<std::size_t>(std::count_if(table_.begin(), table_.end(), [](const SparseVec& v) { return !v.empty(); }));
}

// ---------------------------------------------------------------- bracket

namespace {

struct Expansion {
  const StructureTensor& tensor;
  std::vector<SparseVec> supports;
  std::vector<int> chosen;
  std::vector<char> used;
  Vec& out;

  void run(std::size_t slot, const Scalar& coeff) {
    if (slot == supports.size()) {
      int sign = 1;
      const SparseVec* v = tensor.lookup0(chosen, sign);
      if (v == nullptr) return;
      for (const auto& [m, c] : *v) {
        if (sign > 0) out[to_size(m)] += coeff * c;
        else out[to_size(m)] -= coeff * c;
      }
      return;
    }
    for (const auto& [i, c] : supports[slot]) {
      if (used[to_size(i)]) continue;
      used[to_size(i)] = 1;
      chosen[slot] = i;
      run(slot + 1, coeff * c);
      used[to_size(i)] = 0;
    }
  }
};

}  // namespace

Vec bracket(const Algebra& a, std::span<const Vec> args) {
  if (static_cast<int>(args.size()) != a.arity()) {
    throw DimensionError("bracket expects " + std::to_string(a.arity()) + " arguments, got " +
                         std::to_string(args.size()));
  }
  Vec out(a.udim());
  Expansion e{a.tensor, {}, std::vector<int>(args.size()), std::vector<char>(a.udim(), 0), out};
  for (const auto& v : args) {
    if (v.size() != a.udim()) throw DimensionError("bracket argument has wrong length");
    e.supports.push_back(to_sparse(v));
    if (e.supports.back().empty()) return out;
  }
  e.run(0, Scalar(1));
  return out;
}

Vec bracket_basis(const Algebra& a, std::span<const int> indices) { return a.tensor.get(indices); }

ViolationReport check_fundamental_identity(const Algebra& a, SweepOptions opts) {
  return kernels::fundamental_identity_parallel(a, opts.workers);
}

// ---------------------------------------------------------------- subspaces

Subspace bracket_span(const Algebra& a, std::span<const Subspace> spaces) {
  const int n = a.arity();
  if (static_cast<int>(spaces.size()) != n) throw DimensionError("bracket_span expects one subspace per slot");
  for (const auto& s : spaces) require_dim(a, s, "bracket_span");

  // Slots holding the same subspace only need strictly increasing choices of
  // basis vectors: other orders differ by a sign, repeats vanish.
  std::vector<std::size_t> group_of(spaces.size());
  std::vector<std::vector<std::size_t>> groups;
  for (std::size_t i = 0; i < spaces.size(); ++i) {
    std::size_t g = 0;
    for (; g < groups.size(); ++g)
      if (spaces[groups[g].front()] == spaces[i]) break;
    if (g == groups.size()) groups.emplace_back();
    groups[g].push_back(i);
    group_of[i] = g;
  }

  RowReducer acc(a.udim());
  if (a.tensor.is_zero()) return acc.subspace();

  std::vector<std::vector<Vec>> bases;
  std::vector<std::vector<std::vector<int>>> choices;
  for (const auto& g : groups) {
    const Subspace& s = spaces[g.front()];
    if (s.dim() < g.size()) return acc.subspace();
    bases.push_back(s.basis_vectors());
    choices.push_back(combinations(static_cast<int>(s.dim()), static_cast<int>(g.size())));
  }

  std::vector<std::size_t> pick(groups.size(), 0);
  std::vector<Vec> args(spaces.size());
  while (true) {
    for (std::size_t g = 0; g < groups.size(); ++g) {
      const auto& combo = choices[g][pick[g]];
      for (std::size_t j = 0; j < groups[g].size(); ++j) args[groups[g][j]] = bases[g][to_size(combo[j])];
    }
    acc.add(bracket(a, args));
    if (acc.full()) break;

    std::size_t g = 0;
    for (; g < groups.size(); ++g) {
      if (++pick[g] < choices[g].size()) break;
      pick[g] = 0;
    }
    if (g == groups.size()) break;
  }
  return acc.subspace();
}

Subspace derived_algebra(const Algebra& a) {
  auto full = repeated(Subspace::full(a.udim()), a.arity());
  return bracket_span(a, full);
}

std::vector<Subspace> derived_series(const Algebra& a, const Subspace& ideal) {
  require_dim(a, ideal, "derived_series");
  std::vector<Subspace> series{ideal};
  while (!series.back().is_zero()) {
    auto args = repeated(series.back(), a.arity());
    Subspace next = bracket_span(a, args);
    if (next == series.back()) break;
    series.push_back(std::move(next));
  }
  return series;
}

bool is_solvable(const Algebra& a, const Subspace& ideal) { return derived_series(a, ideal).back().is_zero(); }

bool is_perfect(const Algebra& a) { return derived_algebra(a).is_full(); }

Subspace centralizer(const Algebra& a, const Subspace& w) {
  require_dim(a, w, "centralizer");
  const std::size_t d = a.udim();
  const int n = a.arity();
  // Column j of each constraint block is [e_j, w, e_T]; x is central for W
  // iff sum_j x_j [e_j, w, e_T] = 0 for all w and all (n-2)-tuples T.
  RowReducer rows(d);
  std::vector<Vec> args(to_size(n));
  for (std::size_t wi = 0; wi < w.dim() && !rows.full(); ++wi) {
    args[1] = w.basis_vector(wi);
    for_each_combination(a.dim(), n - 2, [&](std::span<const int> t) {
      if (rows.full()) return;
      for (std::size_t s = 0; s < t.size(); ++s) args[s + 2] = Vec::unit(d, to_size(t[s]) + 1);
      Mat block(d, d);
      for (std::size_t j = 0; j < d; ++j) {
        args[0] = Vec::unit(d, j + 1);
        const Vec col = bracket(a, args);
        for (std::size_t m = 0; m < d; ++m) block(m, j) = col[m];
      }
      for (std::size_t m = 0; m < d && !rows.full(); ++m) rows.add(block.row(m));
    });
  }
  return nullspace(rows.subspace().basis());
}

Subspace center(const Algebra& a) {
  const std::size_t d = a.udim();
  const int n = a.arity();
  RowReducer rows(d);
  std::vector<int> idx(to_size(n));
  for_each_combination(a.dim(), n - 1, [&](std::span<const int> s) {
    if (rows.full()) return;
    std::copy(s.begin(), s.end(), idx.begin() + 1);
    Mat block(d, d);
    bool any = false;
    for (std::size_t j = 0; j < d; ++j) {
      idx[0] = static_cast<int>(j);
      int sign = 1;
      const SparseVec* v = a.tensor.lookup0(idx, sign);
      if (v == nullptr) continue;
      any = true;
      for (const auto& [m, c] : *v) block(to_size(m), j) = sign > 0 ? c : Scalar(-c);
    }
    if (!any) return;
    for (std::size_t m = 0; m < d && !rows.full(); ++m) rows.add(block.row(m));
  });
  return nullspace(rows.subspace().basis());
}

bool is_ideal(const Algebra& a, const Subspace& w) {
  require_dim(a, w, "is_ideal");
  auto args = repeated(Subspace::full(a.udim()), a.arity());
  args[0] = w;
  return is_subset(bracket_span(a, args), w);
}

bool is_abelian_ideal(const Algebra& a, const Subspace& w) {
  if (!is_ideal(a, w)) return false;
  auto args = repeated(Subspace::full(a.udim()), a.arity());
  args[0] = w;
  args[1] = w;
  return bracket_span(a, args).is_zero();
}

bool is_subalgebra(const Algebra& a, const Subspace& w) {
  require_dim(a, w, "is_subalgebra");
  auto args = repeated(w, a.arity());
  return is_subset(bracket_span(a, args), w);
}

// ---------------------------------------------------------------- quotient / restriction

QuotientAlgebra quotient_algebra(const Algebra& a, const Subspace& ideal) {
  require_dim(a, ideal, "quotient_algebra");
  if (!is_ideal(a, ideal)) throw PreconditionError("quotient_algebra: subspace is not an ideal");

  const std::size_t d = a.udim();
  const Subspace transversal = complement(ideal);
  const std::vector<std::size_t>& kept = transversal.pivots();
  const std::size_t q = kept.size();

  Mat projection(q, d);
  for (std::size_t col = 0; col < d; ++col) {
    const Vec r = ideal.reduce(Vec::unit(d, col + 1));
    for (std::size_t i = 0; i < q; ++i) projection(i, col) = r[kept[i]];
  }

  StructureTensor t(a.arity(), static_cast<int>(q));
  std::vector<int> old_idx(to_size(a.arity()));
  for_each_combination(static_cast<int>(q), a.arity(), [&](std::span<const int> c) {
    for (std::size_t s = 0; s < c.size(); ++s) old_idx[s] = static_cast<int>(kept[to_size(c[s])]);
    const SparseVec* v = a.tensor.lookup_sorted0(old_idx);
    if (v == nullptr) return;
    Vec image = projection * to_dense(*v, d);
    if (image.is_zero()) return;
    Tuple key;
    for (int i : c) key.push_back(i + 1);
    t.set(key, image);
  });

  std::vector<std::string> labels;
  if (a.labels.size() == d)
    for (auto i : kept) labels.push_back(a.labels[i]);
  return {Algebra(std::move(t), std::move(labels)), std::move(projection)};
}

Algebra restrict_algebra(const Algebra& a, const Subspace& w) {
  require_dim(a, w, "restrict_algebra");
  const std::vector<Vec> basis = w.basis_vectors();
  StructureTensor t(a.arity(), static_cast<int>(w.dim()));
  std::vector<Vec> args(to_size(a.arity()));
  for_each_combination(static_cast<int>(w.dim()), a.arity(), [&](std::span<const int> c) {
    for (std::size_t s = 0; s < c.size(); ++s) args[s] = basis[to_size(c[s])];
    const Vec v = bracket(a, args);
    if (v.is_zero()) return;
    auto coords = w.coordinates(v);
    if (!coords) throw PreconditionError("restrict_algebra: subspace is not closed under the bracket");
    Tuple key;
    for (int i : c) key.push_back(i + 1);
    t.set(key, *coords);
  });
  return Algebra(std::move(t));
}

Algebra permute_basis(const Algebra& a, std::span<const int> perm) {
  const std::size_t d = a.udim();
  if (perm.size() != d) throw DimensionError("permutation has wrong length");
  std::vector<char> seen(d, 0);
  for (int p : perm) {
    if (p < 1 || to_size(p) > d || seen[to_size(p - 1)]) throw PreconditionError("not a permutation of 1..d");
    seen[to_size(p - 1)] = 1;
  }
  StructureTensor t(a.arity(), a.dim());
  for (const auto& [key, value] : a.tensor.entries()) {
    Tuple k;
    for (int i : key) k.push_back(perm[to_size(i - 1)]);
    Vec v(d);
    for (std::size_t m = 0; m < d; ++m) v[to_size(perm[m] - 1)] = value[m];
    t.set(k, v);
  }
  std::vector<std::string> labels;
  if (a.labels.size() == d) {
    labels.resize(d);
    for (std::size_t i = 0; i < d; ++i) labels[to_size(perm[i] - 1)] = a.labels[i];
  }
  return Algebra(std::move(t), std::move(labels));
}

}  // namespace nlk
