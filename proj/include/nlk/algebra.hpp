#ifndef NLK_ALGEBRA_HPP
#define NLK_ALGEBRA_HPP

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "nlk/linalg.hpp"

namespace nlk {

/// Index tuple, 1-based. Structure-tensor keys are strictly increasing.
using Tuple = std::vector<int>;

/// Sparse vector: (0-based coordinate, nonzero coefficient), sorted by coordinate.
using SparseVec = std::vector<std::pair<int, Scalar>>;

SparseVec to_sparse(const Vec& v);
Vec to_dense(const SparseVec& v, std::size_t dim);

/// Number of k-subsets of an n-set (0 when k > n).
std::size_t binomial(std::size_t n, std::size_t k);

/// Calls f(std::span<const int>) for every strictly increasing k-tuple of
/// 0-based indices below n, in lexicographic order.
template <class F>
void for_each_combination(int n, int k, F&& f) {
  if (k < 0 || k > n) return;
  std::vector<int> c(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) c[static_cast<std::size_t>(i)] = i;
  while (true) {
    f(std::span<const int>(c));
    int i = k - 1;
    while (i >= 0 && c[static_cast<std::size_t>(i)] == n - k + i) --i;
    if (i < 0) return;
    ++c[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j) c[static_cast<std::size_t>(j)] = c[static_cast<std::size_t>(j - 1)] + 1;
  }
}

/// All strictly increasing k-tuples below n (0-based), lexicographic.
std::vector<std::vector<int>> combinations(int n, int k);

/// Antisymmetric structure constants of an n-ary bracket on Q^d. Only
/// strictly increasing index tuples are stored; an absent key is a zero
/// bracket, and any other ordering is recovered by the permutation sign.
class StructureTensor {
 public:
  StructureTensor() = default;
  StructureTensor(int arity, int dim);

  int arity() const { return arity_; }
  int dim() const { return dim_; }

  /// Sets [e_{i_1}, ..., e_{i_n}] = value for 1-based indices in any order;
  /// the sign of the sorting permutation is applied. Repeated indices throw.
  void set(std::span<const int> indices, const Vec& value);
  /// Bracket of basis vectors, 1-based indices in any order.
  Vec get(std::span<const int> indices) const;

  /// Fast path for kernels: 0-based indices in any order. Returns the stored
  /// sparse value (or nullptr when zero) and writes the permutation sign.
  const SparseVec* lookup0(std::span<const int> indices, int& sign) const;
  /// 0-based, strictly increasing.
  const SparseVec* lookup_sorted0(std::span<const int> sorted) const;

  /// Nonzero entries in lexicographic key order, keys 1-based.
  std::vector<std::pair<Tuple, Vec>> entries() const;
  std::size_t nonzero_count() const;
  bool is_zero() const { return nonzero_count() == 0; }

  friend bool operator==(const StructureTensor&, const StructureTensor&) = default;

 private:
  std::size_t rank_of(std::span<const int> sorted) const;

  int arity_ = 2;
  int dim_ = 0;
  std::vector<SparseVec> table_;  // indexed by combinatorial rank
};

/// An n-Lie algebra candidate: structure tensor plus optional basis labels.
/// The fundamental identity is not enforced here, see
/// check_fundamental_identity.
struct Algebra {
  StructureTensor tensor;
  std::vector<std::string> labels;

  Algebra() = default;
  explicit Algebra(StructureTensor t, std::vector<std::string> l = {})
      : tensor(std::move(t)), labels(std::move(l)) {}

  int arity() const { return tensor.arity(); }
  int dim() const { return tensor.dim(); }
  std::size_t udim() const { return static_cast<std::size_t>(tensor.dim()); }

  friend bool operator==(const Algebra&, const Algebra&) = default;
};

enum class ViolationKind { fundamental_identity, invariance, symmetry, nondegeneracy, levi };

std::string to_string(ViolationKind k);

struct Witness {
  std::vector<Tuple> tuples;  ///< offending index tuples, 1-based
  std::variant<std::monostate, Vec, Scalar> residual;
  std::string note;           ///< optional human-readable detail
};

/// Outcome of one checker. Passing means no witnesses.
struct ViolationReport {
  ViolationKind kind;
  std::vector<Witness> witnesses;

  bool ok() const { return witnesses.empty(); }
};

/// Options shared by the basis-tuple sweeps.
struct SweepOptions {
  int workers = 1;
};

/// Multilinear expansion over the supports of the arguments; each choice of
/// distinct basis indices is sorted, signed and looked up.
Vec bracket(const Algebra& a, std::span<const Vec> args);
/// Bracket of basis vectors, 1-based indices.
Vec bracket_basis(const Algebra& a, std::span<const int> indices);

/// Checks [[x_1..x_n], y_2..y_n] = sum_i [x_1.., [x_i, y_2..y_n], .., x_n]
/// on every sorted x-tuple and sorted y-tuple of basis vectors.
ViolationReport check_fundamental_identity(const Algebra& a, SweepOptions opts = {});

/// Span of [b_1, ..., b_n] over basis vectors b_i of W_i.
Subspace bracket_span(const Algebra& a, std::span<const Subspace> spaces);

Subspace derived_algebra(const Algebra& a);
/// I, [I,..,I], ... until two consecutive terms agree.
std::vector<Subspace> derived_series(const Algebra& a, const Subspace& ideal);
bool is_solvable(const Algebra& a, const Subspace& ideal);
bool is_perfect(const Algebra& a);

/// {x : [x, W, g, ..., g] = 0}
Subspace centralizer(const Algebra& a, const Subspace& w);
Subspace center(const Algebra& a);

bool is_ideal(const Algebra& a, const Subspace& w);
bool is_abelian_ideal(const Algebra& a, const Subspace& w);
bool is_subalgebra(const Algebra& a, const Subspace& w);

struct QuotientAlgebra {
  Algebra algebra;
  Mat projection;  ///< (d - dim I) x d, old coordinates to quotient coordinates
};

/// g / I on the transversal complement(I). Throws PreconditionError if I is
/// not an ideal.
QuotientAlgebra quotient_algebra(const Algebra& a, const Subspace& ideal);

/// The algebra structure on a subalgebra W, in coordinates of W's canonical
/// basis. Throws PreconditionError if W is not closed under the bracket.
Algebra restrict_algebra(const Algebra& a, const Subspace& w);

/// Relabels the basis: old e_i becomes new e_{perm[i-1]} (perm is a 1-based
/// permutation of 1..d).
Algebra permute_basis(const Algebra& a, std::span<const int> perm);

}  // namespace nlk

#endif  // NLK_ALGEBRA_HPP
