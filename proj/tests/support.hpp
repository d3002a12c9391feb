// Shared test helpers: independent oracles, seeded random inputs and a
// representative list of catalog algebras.
//
// The oracles deliberately avoid the library's own machinery (sorted-tuple
// lookup, RowReducer, canonical subspaces) so that agreement is evidence.

#ifndef NLK_TESTS_SUPPORT_HPP
#define NLK_TESTS_SUPPORT_HPP

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "nlk/algebra.hpp"
#include "nlk/catalog.hpp"
#include "nlk/linalg.hpp"
#include "nlk/metric.hpp"

namespace nlk::testing {

// ---------------------------------------------------------------- randomness

inline std::mt19937_64& rng(std::uint64_t reseed = 0) {
  static std::mt19937_64 gen(0x6e6c6bULL);
  if (reseed != 0) gen.seed(reseed);
  return gen;
}

inline int uniform_int(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng()); }

/// Small rationals p/q with |p| <= 5, 1 <= q <= 3, roughly a third of them 0.
inline Scalar random_scalar(bool allow_zero = true) {
  while (true) {
    Scalar s(uniform_int(-5, 5), uniform_int(1, 3));
    s.canonicalize();
    if (allow_zero || s != 0) return s;
  }
}

inline Vec random_vec(std::size_t d) {
  Vec v(d);
  for (std::size_t i = 0; i < d; ++i) v[i] = random_scalar();
  return v;
}

/// Span of up to max_gens random vectors; dimension is usually max_gens.
inline Subspace random_subspace(std::size_t d, std::size_t max_gens) {
  std::vector<Vec> gens;
  const std::size_t m = max_gens == 0 ? 0 : static_cast<std::size_t>(uniform_int(0, static_cast<int>(max_gens)));
  for (std::size_t i = 0; i < m; ++i) gens.push_back(random_vec(d));
  return span(gens, d);
}

/// Random subspace of a given subspace: random combinations of its basis.
inline Subspace random_subspace_of(const Subspace& s) {
  std::vector<Vec> gens;
  const int m = uniform_int(0, static_cast<int>(s.dim()));
  for (int i = 0; i < m; ++i) {
    Vec v(s.ambient_dim());
    for (const auto& b : s.basis_vectors()) v.add_scaled(random_scalar(), b);
    gens.push_back(std::move(v));
  }
  return span(gens, s.ambient_dim());
}

/// 1-based permutation of {1..d}.
inline std::vector<int> random_permutation(int d) {
  std::vector<int> p(static_cast<std::size_t>(d));
  std::iota(p.begin(), p.end(), 1);
  std::shuffle(p.begin(), p.end(), rng());
  return p;
}

// ---------------------------------------------------------------- exact rank oracle

/// Plain Gaussian elimination on a copy; shares no code with rref/RowReducer.
inline std::size_t naive_rank(std::vector<std::vector<Scalar>> rows, std::size_t cols) {
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t piv = rank;
    while (piv < rows.size() && rows[piv][c] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[rank]);
    for (std::size_t r = rank + 1; r < rows.size(); ++r) {
      if (rows[r][c] == 0) continue;
      const Scalar f = rows[r][c] / rows[rank][c];
      for (std::size_t j = c; j < cols; ++j) rows[r][j] -= f * rows[rank][j];
    }
    ++rank;
  }
  return rank;
}

// ---------------------------------------------------------------- dense bracket oracle

/// The full d^n structure tensor, filled once by explicit antisymmetrization
/// of the stored sorted entries over all n! orderings.
class DenseTensor {
 public:
  explicit DenseTensor(const Algebra& a) : n_(a.arity()), d_(a.udim()) {
    std::size_t total = 1;
    for (int i = 0; i < n_; ++i) total *= d_;
    table_.assign(total, Vec(d_));
    for (const auto& [key, value] : a.tensor.entries()) {
      std::vector<int> order(key.size());
      std::iota(order.begin(), order.end(), 0);
      do {
        // sign by counting inversions of the ordering
        int inv = 0;
        for (std::size_t i = 0; i < order.size(); ++i)
          for (std::size_t j = i + 1; j < order.size(); ++j)
            if (order[i] > order[j]) ++inv;
        std::size_t flat = 0;
        for (int o : order) flat = flat * d_ + static_cast<std::size_t>(key[static_cast<std::size_t>(o)] - 1);
        table_[flat] = (inv % 2 == 0) ? value : -value;
      } while (std::next_permutation(order.begin(), order.end()));
    }
  }

  /// Σ over every index tuple of Π v_j[i_j] · T[i_1..i_n].
  Vec bracket(const std::vector<Vec>& args) const {
    Vec out(d_);
    std::vector<std::size_t> idx(static_cast<std::size_t>(n_), 0);
    for (std::size_t flat = 0; flat < table_.size(); ++flat) {
      std::size_t rest = flat;
      for (int j = n_ - 1; j >= 0; --j) {
        idx[static_cast<std::size_t>(j)] = rest % d_;
        rest /= d_;
      }
      if (table_[flat].is_zero()) continue;
      Scalar coeff = 1;
      for (int j = 0; j < n_ && coeff != 0; ++j) coeff *= args[static_cast<std::size_t>(j)][idx[static_cast<std::size_t>(j)]];
      if (coeff != 0) out.add_scaled(coeff, table_[flat]);
    }
    return out;
  }

  const Vec& at(const std::vector<std::size_t>& idx0) const {
    std::size_t flat = 0;
    for (std::size_t i : idx0) flat = flat * d_ + i;
    return table_[flat];
  }

  std::size_t size() const { return table_.size(); }

 private:
  int n_;
  std::size_t d_;
  std::vector<Vec> table_;
};

/// Dimension of the invariant symmetric form space by naive enumeration of
/// every ordered (n-1)-tuple x and ordered pair (p, q):
///   Σ_m [x, e_p]_m B_mq + [x, e_q]_m B_mp = 0.
inline std::size_t naive_form_space_dim(const Algebra& a) {
  const DenseTensor t(a);
  const std::size_t d = a.udim();
  const int n = a.arity();
  auto slot = [d](std::size_t p, std::size_t q) {
    if (p > q) std::swap(p, q);
    return p * d - p * (p - 1) / 2 + (q - p);  // row-major upper triangle
  };
  const std::size_t unknowns = d * (d + 1) / 2;
  std::vector<std::vector<Scalar>> rows;
  std::vector<std::size_t> x(static_cast<std::size_t>(n - 1), 0);
  std::size_t tuples = 1;
  for (int i = 0; i < n - 1; ++i) tuples *= d;
  for (std::size_t flat = 0; flat < tuples; ++flat) {
    std::size_t rest = flat;
    for (int j = n - 2; j >= 0; --j) {
      x[static_cast<std::size_t>(j)] = rest % d;
      rest /= d;
    }
    for (std::size_t p = 0; p < d; ++p) {
      for (std::size_t q = 0; q < d; ++q) {
        std::vector<Scalar> row(unknowns);
        auto idx = x;
        idx.push_back(p);
        const Vec& xp = t.at(idx);
        idx.back() = q;
        const Vec& xq = t.at(idx);
        bool nonzero = false;
        for (std::size_t m = 0; m < d; ++m) {
          if (xp[m] != 0) row[slot(m, q)] += xp[m], nonzero = true;
          if (xq[m] != 0) row[slot(m, p)] += xq[m], nonzero = true;
        }
        if (nonzero) rows.push_back(std::move(row));
      }
    }
  }
  std::sort(rows.begin(), rows.end(), [](const auto& l, const auto& r) {
    return std::lexicographical_compare(l.begin(), l.end(), r.begin(), r.end());
  });
  rows.erase(std::unique(rows.begin(), rows.end()), rows.end());
  return unknowns - naive_rank(std::move(rows), unknowns);
}

// ---------------------------------------------------------------- catalog sample

struct Named {
  std::string name;
  MetricAlgebra ma;
};

/// A spread of catalog algebras small enough for dense-tensor oracles.
inline std::vector<Named> catalog_sample() {
  std::vector<Named> out;
  out.push_back({"abelian(3,5)", build_abelian(3, 5)});
  out.push_back({"simple(2,1)", build_simple(2, 1)});
  out.push_back({"simple(3,1)", build_simple(3, 1)});
  out.push_back({"simple(4,-2/3)", build_simple(4, Scalar(-2, 3))});
  out.push_back({"g0(2,1,1)", build_g0(2, 1, 1)});
  out.push_back({"g0(3,2,1)", build_g0(3, 2, 1)});
  out.push_back({"case1(3,2,1)", build_case1(3, 2, 1)});
  out.push_back({"case1(3,3,1)", build_case1(3, 3, 1)});
  out.push_back({"case1(3,4,3/2)", build_case1(3, 4, Scalar(3, 2))});
  out.push_back({"case1(4,3,1)", build_case1(4, 3, 1)});
  out.push_back({"case2(3,3,1)", build_case2(3, 3, 1)});
  out.push_back({"case3(3,4,1,1)", build_case3(3, 4, 1, 1)});
  out.push_back({"case3(4,4,1,2)", build_case3(4, 4, 1, 2)});
  const MetricAlgebra g = build_g0(2, 1, 2);
  const std::vector<MetricAlgebra> parts{g, g};
  out.push_back({"g0(2,1,2)+g0(2,1,2)", ortho_direct_sum(parts)});
  return out;
}

/// Ideal generated by v: close span{v} under [W, g, ..., g].
inline Subspace generated_ideal(const Algebra& a, const Vec& v) {
  const std::size_t d = a.udim();
  const std::vector<Vec> gens{v};
  Subspace w = span(gens, d);
  while (true) {
    std::vector<Subspace> slots(static_cast<std::size_t>(a.arity()), Subspace::full(d));
    slots[0] = w;
    const Subspace next = sum(w, bracket_span(a, slots));
    if (next == w) return w;
    w = next;
  }
}

/// Coordinate subsets S with gram[S,S] = 0, grown greedily in a random order.
inline Subspace random_coordinate_isotropic(const Form& b) {
  const auto order = random_permutation(static_cast<int>(b.dim()));
  std::vector<std::size_t> chosen;
  for (int o : order) {
    const auto i = static_cast<std::size_t>(o - 1);
    bool ok = b.gram()(i, i) == 0;
    for (std::size_t j : chosen) ok = ok && b.gram()(i, j) == 0;
    if (ok) chosen.push_back(i);
  }
  std::vector<Vec> gens;
  for (std::size_t i : chosen) gens.push_back(Vec::unit(b.dim(), i + 1));
  return span(gens, b.dim());
}

}  // namespace nlk::testing

#endif  // NLK_TESTS_SUPPORT_HPP
