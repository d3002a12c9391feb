#ifndef NLK_LINALG_HPP
#define NLK_LINALG_HPP

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

#include "nlk/scalar.hpp"

namespace nlk {

/// Dense coordinate vector of fixed length.
class Vec {
 public:
  Vec() = default;
  explicit Vec(std::size_t dim) : entries_(dim) {}
  explicit Vec(std::vector<Scalar> entries) : entries_(std::move(entries)) {}
  Vec(std::initializer_list<Scalar> entries) : entries_(entries) {}

  /// Standard basis vector e_index, index is 1-based.
  static Vec unit(std::size_t dim, std::size_t index);

  std::size_t size() const { return entries_.size(); }
  const Scalar& operator[](std::size_t i) const { return entries_[i]; }
  Scalar& operator[](std::size_t i) { return entries_[i]; }
  std::span<const Scalar> entries() const { return entries_; }

  bool is_zero() const;
  /// Index of the first nonzero entry, or size() for the zero vector.
  std::size_t leading_index() const;

  Vec& operator+=(const Vec& other);
  Vec& operator-=(const Vec& other);
  Vec& operator*=(const Scalar& s);
  /// this += s * other
  Vec& add_scaled(const Scalar& s, const Vec& other);

  friend Vec operator+(Vec a, const Vec& b) { return a += b; }
  friend Vec operator-(Vec a, const Vec& b) { return a -= b; }
  friend Vec operator*(const Scalar& s, Vec a) { return a *= s; }
  friend Vec operator-(Vec a) { return a *= Scalar(-1); }

  friend bool operator==(const Vec&, const Vec&) = default;

 private:
  std::vector<Scalar> entries_;
};

Scalar dot(const Vec& a, const Vec& b);

/// Row-major dense matrix.
class Mat {
 public:
  Mat() = default;
  Mat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  Mat(std::initializer_list<std::initializer_list<Scalar>> rows);

  static Mat identity(std::size_t n);
  /// Stacks the given vectors as rows; every vector must have length cols.
  static Mat from_rows(std::span<const Vec> rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }

  Vec row(std::size_t r) const;
  Vec col(std::size_t c) const;
  Mat transpose() const;
  bool is_symmetric() const;

  friend Mat operator*(const Mat& a, const Mat& b);
  friend Vec operator*(const Mat& a, const Vec& v);
  friend bool operator==(const Mat&, const Mat&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

struct RrefResult {
  Mat reduced;                      ///< nonzero rows only
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;  ///< 0-based pivot column of each row
};

/// Unique reduced row-echelon form, zero rows dropped.
RrefResult rref(const Mat& m);

/// Linear subspace of Q^d stored by its canonical RREF basis. Two subspaces
/// compare equal iff they are equal as sets.
class Subspace {
 public:
  Subspace() = default;

  static Subspace zero(std::size_t ambient_dim);
  static Subspace full(std::size_t ambient_dim);

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.rows(); }
  bool is_zero() const { return dim() == 0; }
  bool is_full() const { return dim() == ambient_; }

  const Mat& basis() const { return basis_; }
  Vec basis_vector(std::size_t i) const { return basis_.row(i); }
  std::vector<Vec> basis_vectors() const;
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  /// Coordinates of v against basis(), or nullopt if v is not in the span.
  std::optional<Vec> coordinates(const Vec& v) const;
  /// v minus its components along the pivot columns; zero iff v is inside.
  Vec reduce(const Vec& v) const;

  friend bool operator==(const Subspace&, const Subspace&) = default;

 private:
  friend class RowReducer;
  Subspace(std::size_t ambient, Mat basis, std::vector<std::size_t> pivots)
      : ambient_(ambient), basis_(std::move(basis)), pivots_(std::move(pivots)) {}

  std::size_t ambient_ = 0;
  Mat basis_ = Mat(0, 0);
  std::vector<std::size_t> pivots_;
};

/// Incremental row space. Rows are kept fully reduced at all times, so the
/// final subspace is canonical regardless of insertion order.
class RowReducer {
 public:
  explicit RowReducer(std::size_t cols) : cols_(cols) {}

  /// Returns true if v enlarged the span.
  bool add(Vec v);
  std::size_t rank() const { return rows_.size(); }
  bool full() const { return rows_.size() == cols_; }
  Subspace subspace() const;

 private:
  std::size_t cols_;
  std::vector<Vec> rows_;               // sorted by pivot
  std::vector<std::size_t> pivots_;
};

/// {v : m v = 0}
Subspace nullspace(const Mat& m);
Subspace span(std::span<const Vec> vs, std::size_t ambient_dim);
Subspace sum(const Subspace& a, const Subspace& b);
Subspace intersect(const Subspace& a, const Subspace& b);
bool contains(const Subspace& a, const Vec& v);
/// a ⊆ b
bool is_subset(const Subspace& a, const Subspace& b);
/// Standard basis vectors at the non-pivot columns of a.
Subspace complement(const Subspace& a);

}  // namespace nlk

#endif  // NLK_LINALG_HPP
