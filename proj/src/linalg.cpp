#include "nlk/linalg.hpp"

#include <algorithm>
#include <string>

#include "nlk/error.hpp"

namespace nlk {

namespace {

void require_same_size(std::size_t a, std::size_t b, const char* what) {
  if (a != b) {
    throw DimensionError(std::string(what) + ": dimension mismatch (" + std::to_string(a) + " vs " +
                         std::to_string(b) + ")");
  }
}

}  // namespace

// ---------------------------------------------------------------- Vec

Vec Vec::unit(std::size_t dim, std::size_t index) {
  if (index < 1 || index > dim) throw DimensionError("unit vector index out of range");
  Vec v(dim);
  v[index - 1] = 1;
  return v;
}

bool Vec::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const Scalar& s) { return sgn(s) == 0; });
}

std::size_t Vec::leading_index() const {
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (sgn(entries_[i]) != 0) return i;
  }
  return entries_.size();
}

Vec& Vec::operator+=(const Vec& other) {
  require_same_size(size(), other.size(), "Vec +");
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += other.entries_[i];
  return *this;
}

Vec& Vec::operator-=(const Vec& other) {
  require_same_size(size(), other.size(), "Vec -");
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] -= other.entries_[i];
  return *this;
}

Vec& Vec::operator*=(const Scalar& s) {
  for (auto& e : entries_) e *= s;
  return *this;
}

Vec& Vec::add_scaled(const Scalar& s, const Vec& other) {
  require_same_size(size(), other.size(), "Vec add_scaled");
  if (sgn(s) == 0) return *this;
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (sgn(other.entries_[i]) != 0) entries_[i] += s * other.entries_[i];
  }
  return *this;
}

Scalar dot(const Vec& a, const Vec& b) {
  require_same_size(a.size(), b.size(), "dot");
  Scalar acc = 0;
  for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
  return acc;
}

// ---------------------------------------------------------------- Mat

Mat::Mat(std::initializer_list<std::initializer_list<Scalar>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw DimensionError("ragged matrix literal");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

Mat Mat::identity(std::size_t n) {
  Mat m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Mat Mat::from_rows(std::span<const Vec> rows, std::size_t cols) {
  Mat m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    require_same_size(rows[r].size(), cols, "Mat::from_rows");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

Vec Mat::row(std::size_t r) const {
  return Vec(std::vector<Scalar>(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                                 data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_)));
}

Vec Mat::col(std::size_t c) const {
  Vec v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

Mat Mat::transpose() const {
  Mat t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

bool Mat::is_symmetric() const {
  if (rows_ != cols_) return false;
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = r + 1; c < cols_; ++c)
      if ((*this)(r, c) != (*this)(c, r)) return false;
  return true;
}

Mat operator*(const Mat& a, const Mat& b) {
  require_same_size(a.cols_, b.rows_, "Mat *");
  Mat out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Scalar& aik = a(i, k);
      if (sgn(aik) == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += aik * b(k, j);
    }
  return out;
}

Vec operator*(const Mat& a, const Vec& v) {
  require_same_size(a.cols_, v.size(), "Mat * Vec");
  Vec out(a.rows_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) out[i] += a(i, k) * v[k];
  return out;
}

// ---------------------------------------------------------------- RREF

RrefResult rref(const Mat& m) {
  RowReducer reducer(m.cols());
  for (std::size_t r = 0; r < m.rows() && !reducer.full(); ++r) reducer.add(m.row(r));
  Subspace s = reducer.subspace();
  return {s.basis(), s.dim(), s.pivots()};
}

bool RowReducer::add(Vec v) {
  require_same_size(v.size(), cols_, "RowReducer::add");
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const Scalar coeff = v[pivots_[i]];
    if (sgn(coeff) != 0) v.add_scaled(-coeff, rows_[i]);
  }
  const std::size_t lead = v.leading_index();
  if (lead == cols_) return false;

  const Scalar inv = 1 / v[lead];
  v *= inv;
  for (auto& row : rows_) {
    const Scalar coeff = row[lead];
    if (sgn(coeff) != 0) row.add_scaled(-coeff, v);
  }
  auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), lead);
  const auto offset = pos - pivots_.begin();
  pivots_.insert(pos, lead);
  rows_.insert(rows_.begin() + offset, std::move(v));
  return true;
}

Subspace RowReducer::subspace() const {
  return Subspace(cols_, Mat::from_rows(rows_, cols_), pivots_);
}

// ---------------------------------------------------------------- Subspace

Subspace Subspace::zero(std::size_t ambient_dim) { return Subspace(ambient_dim, Mat(0, ambient_dim), {}); }

Subspace Subspace::full(std::size_t ambient_dim) {
  std::vector<std::size_t> piv(ambient_dim);
  for (std::size_t i = 0; i < ambient_dim; ++i) piv[i] = i;
  return Subspace(ambient_dim, Mat::identity(ambient_dim), std::move(piv));
}

std::vector<Vec> Subspace::basis_vectors() const {
  std::vector<Vec> out;
  out.reserve(dim());
  for (std::size_t i = 0; i < dim(); ++i) out.push_back(basis_.row(i));
  return out;
}

Vec Subspace::reduce(const Vec& v) const {
  require_same_size(v.size(), ambient_, "Subspace::reduce");
  Vec out = v;
  for (std::size_t i = 0; i < dim(); ++i) {
    const Scalar coeff = out[pivots_[i]];
    if (sgn(coeff) != 0) out.add_scaled(-coeff, basis_.row(i));
  }
  return out;
}

std::optional<Vec> Subspace::coordinates(const Vec& v) const {
  if (!reduce(v).is_zero()) return std::nullopt;
  // In RREF the coordinate along row i is the entry at its pivot column.
  Vec c(dim());
  for (std::size_t i = 0; i < dim(); ++i) c[i] = v[pivots_[i]];
  return c;
}

Subspace nullspace(const Mat& m) {
  const RrefResult r = rref(m);
  const std::size_t n = m.cols();
  std::vector<bool> is_pivot(n, false);
  for (auto p : r.pivots) is_pivot[p] = true;

  RowReducer out(n);
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    Vec v(n);
    v[free] = 1;
    for (std::size_t i = 0; i < r.rank; ++i) v[r.pivots[i]] = -r.reduced(i, free);
    out.add(std::move(v));
  }
  return out.subspace();
}

Subspace span(std::span<const Vec> vs, std::size_t ambient_dim) {
  RowReducer r(ambient_dim);
  for (const auto& v : vs) {
    if (r.full()) break;
    r.add(v);
  }
  return r.subspace();
}

Subspace sum(const Subspace& a, const Subspace& b) {
  require_same_size(a.ambient_dim(), b.ambient_dim(), "sum");
  RowReducer r(a.ambient_dim());
  for (std::size_t i = 0; i < a.dim(); ++i) r.add(a.basis_vector(i));
  for (std::size_t i = 0; i < b.dim() && !r.full(); ++i) r.add(b.basis_vector(i));
  return r.subspace();
}

Subspace intersect(const Subspace& a, const Subspace& b) {
  require_same_size(a.ambient_dim(), b.ambient_dim(), "intersect");
  // a ∩ b = (ann a + ann b)^ann, with ann taken against the standard dot product.
  const Subspace ann_a = nullspace(a.basis());
  const Subspace ann_b = nullspace(b.basis());
  return nullspace(sum(ann_a, ann_b).basis());
}

bool contains(const Subspace& a, const Vec& v) {
  require_same_size(a.ambient_dim(), v.size(), "contains");
  return a.reduce(v).is_zero();
}

bool is_subset(const Subspace& a, const Subspace& b) {
  require_same_size(a.ambient_dim(), b.ambient_dim(), "is_subset");
  for (std::size_t i = 0; i < a.dim(); ++i)
    if (!contains(b, a.basis_vector(i))) return false;
  return true;
}

Subspace complement(const Subspace& a) {
  const std::size_t n = a.ambient_dim();
  std::vector<bool> is_pivot(n, false);
  for (auto p : a.pivots()) is_pivot[p] = true;
  RowReducer r(n);
  for (std::size_t i = 0; i < n; ++i)
    if (!is_pivot[i]) r.add(Vec::unit(n, i + 1));
  return r.subspace();
}

}  // namespace nlk
