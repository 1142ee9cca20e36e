#include "superpoisson/matrix.hpp"

#include <algorithm>

namespace spo {

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(std::size_t cols, const std::vector<Vec>& rows) {
  Matrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i)
    std::copy(rows[i].begin(), rows[i].end(), m.data_.begin() + static_cast<long>(i * cols));
  return m;
}

Matrix Matrix::from_columns(std::size_t rows, const std::vector<Vec>& cols) {
  Matrix m(rows, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) m.set_column(j, cols[j]);
  return m;
}

Vec Matrix::row(std::size_t i) const {
  return Vec(data_.begin() + static_cast<long>(i * cols_),
             data_.begin() + static_cast<long>((i + 1) * cols_));
}

Vec Matrix::column(std::size_t j) const {
  Vec v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
  return v;
}

void Matrix::set_column(std::size_t j, const Vec& v) {
  for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = v[i];
}

void Matrix::append_row(const Vec& v) {
  data_.insert(data_.end(), v.begin(), v.end());
  ++rows_;
}

bool Matrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](Scalar c) { return c == 0; });
}

Vec apply(const Field& f, const Matrix& m, const Vec& v) {
  Vec out(m.rows(), 0);
  for (std::size_t j = 0; j < m.cols(); ++j) {
    if (!v[j]) continue;
    for (std::size_t i = 0; i < m.rows(); ++i) out[i] ^= f.mul(m(i, j), v[j]);
  }
  return out;
}

Matrix multiply(const Field& f, const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw Error(ErrorKind::DimensionMismatch, "matrix product");
  Matrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      Scalar x = a(i, k);
      if (!x) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) ^= f.mul(x, b(k, j));
    }
  return c;
}

Matrix sum(const Matrix& a, const Matrix& b) {
  Matrix c = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) ^= b(i, j);
  return c;
}

Matrix transpose(const Matrix& a) {
  Matrix t(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) t(j, i) = a(i, j);
  return t;
}

namespace {

// GF(2) elimination on rows packed 64 entries per word.
Echelon rref_gf2(const Matrix& m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  const std::size_t words = (cols + 63) / 64;
  std::vector<std::uint64_t> bits(rows * words, 0);
  for (std::size_t i = 0; i < rows; ++i) {
    const Scalar* r = m.row_ptr(i);
    std::uint64_t* w = bits.data() + i * words;
    for (std::size_t j = 0; j < cols; ++j)
      if (r[j] & 1) w[j >> 6] |= std::uint64_t{1} << (j & 63);
  }
  Echelon e;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    const std::size_t wc = c >> 6;
    const std::uint64_t mask = std::uint64_t{1} << (c & 63);
    std::size_t p = r;
    while (p < rows && !(bits[p * words + wc] & mask)) ++p;
    if (p == rows) continue;
    if (p != r)
      std::swap_ranges(bits.begin() + static_cast<long>(p * words),
                       bits.begin() + static_cast<long>((p + 1) * words),
                       bits.begin() + static_cast<long>(r * words));
    const std::uint64_t* pr = bits.data() + r * words;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r) continue;
      std::uint64_t* w = bits.data() + i * words;
      if (!(w[wc] & mask)) continue;
      for (std::size_t k = wc; k < words; ++k) w[k] ^= pr[k];
    }
    e.pivots.push_back(c);
    ++r;
  }
  e.reduced = Matrix(rows, cols);
  for (std::size_t i = 0; i < r; ++i) {
    const std::uint64_t* w = bits.data() + i * words;
    for (std::size_t j = 0; j < cols; ++j)
      if (w[j >> 6] >> (j & 63) & 1) e.reduced(i, j) = 1;
  }
  return e;
}

Echelon rref_general(const Field& f, const Matrix& m) {
  Echelon e;
  e.reduced = m;
  Matrix& a = e.reduced;
  const std::size_t rows = a.rows(), cols = a.cols();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a(p, c) == 0) ++p;
    if (p == rows) continue;
    if (p != r)
      for (std::size_t j = 0; j < cols; ++j) std::swap(a(p, j), a(r, j));
    Scalar iv = f.inv(a(r, c));
    for (std::size_t j = c; j < cols; ++j) a(r, j) = f.mul(a(r, j), iv);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a(i, c) == 0) continue;
      Scalar x = a(i, c);
      for (std::size_t j = c; j < cols; ++j) a(i, j) ^= f.mul(x, a(r, j));
    }
    e.pivots.push_back(c);
    ++r;
  }
  return e;
}

}  // namespace

Echelon rref(const Field& f, const Matrix& m) {
  return f.degree() == 1 ? rref_gf2(m) : rref_general(f, m);
}

std::size_t rank(const Field& f, const Matrix& m) { return rref(f, m).rank(); }

std::vector<Vec> kernel_basis(const Field& f, const Matrix& m) {
  Echelon e = rref(f, m);
  const std::size_t cols = m.cols();
  std::vector<bool> is_pivot(cols, false);
  for (std::size_t c : e.pivots) is_pivot[c] = true;
  std::vector<Vec> out;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    Vec v(cols, 0);
    v[free] = 1;
    for (std::size_t k = 0; k < e.pivots.size(); ++k) v[e.pivots[k]] = e.reduced(k, free);
    out.push_back(std::move(v));
  }
  return out;
}

std::size_t quotient_dim(const Field& f, const std::vector<Vec>& big, const std::vector<Vec>& small) {
  std::size_t dim = !big.empty() ? big[0].size() : (!small.empty() ? small[0].size() : 0);
  SpanBasis span(f, dim);
  for (const Vec& v : big) span.insert(v);
  SpanBasis sub(f, dim);
  for (const Vec& v : small) {
    if (!span.contains(v)) throw Error(ErrorKind::NotASubspace, "vector outside the larger span");
    sub.insert(v);
  }
  return span.rank() - sub.rank();
}

std::optional<Vec> solve(const Field& f, const Matrix& m, const Vec& b) {
  Matrix aug(m.rows(), m.cols() + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
    aug(i, m.cols()) = b[i];
  }
  Echelon e = rref(f, aug);
  Vec x(m.cols(), 0);
  for (std::size_t k = 0; k < e.pivots.size(); ++k) {
    if (e.pivots[k] == m.cols()) return std::nullopt;
    x[e.pivots[k]] = e.reduced(k, m.cols());
  }
  return x;
}

Vec SpanBasis::reduce(Vec v) const {
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    Scalar c = v[pivots_[k]];
    if (c) axpy(*field_, v, c, rows_[k]);
  }
  return v;
}

bool SpanBasis::insert(Vec v) {
  v = reduce(std::move(v));
  std::size_t p = 0;
  while (p < v.size() && v[p] == 0) ++p;
  if (p == v.size()) return false;
  Scalar iv = field_->inv(v[p]);
  if (iv != 1) v = scaled(*field_, iv, v);
  for (auto& r : rows_)
    if (r[p]) axpy(*field_, r, r[p], v);
  auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), p) - pivots_.begin();
  pivots_.insert(pivots_.begin() + pos, p);
  rows_.insert(rows_.begin() + pos, std::move(v));
  return true;
}

void canonicalize(SparseRow& row) {
  std::sort(row.begin(), row.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  std::size_t out = 0;
  for (std::size_t i = 0; i < row.size();) {
    std::uint32_t col = row[i].first;
    Scalar acc = 0;
    while (i < row.size() && row[i].first == col) acc ^= row[i++].second;
    if (acc) row[out++] = {col, acc};
  }
  row.resize(out);
}

std::size_t SparseMatrix::nonzeros() const {
  std::size_t n = 0;
  for (const auto& r : data_) n += r.size();
  return n;
}

bool SparseMatrix::is_zero() const {
  for (const auto& r : data_)
    for (const auto& [c, v] : r)
      if (v) return false;
  return true;
}

Matrix SparseMatrix::to_dense() const {
  Matrix m(rows(), cols_);
  for (std::size_t i = 0; i < rows(); ++i)
    for (const auto& [c, v] : data_[i]) m(i, c) ^= v;
  return m;
}

Vec SparseMatrix::apply(const Field& f, const Vec& v) const {
  Vec out(rows(), 0);
  for (std::size_t i = 0; i < rows(); ++i)
    for (const auto& [c, x] : data_[i]) out[i] ^= f.mul(x, v[c]);
  return out;
}

SparseMatrix multiply(const Field& f, const SparseMatrix& a, const SparseMatrix& b) {
  if (a.cols() != b.rows()) throw Error(ErrorKind::DimensionMismatch, "sparse product");
  SparseMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    SparseRow acc;
    for (const auto& [k, x] : a.row(i))
      for (const auto& [j, y] : b.row(k)) acc.emplace_back(j, f.mul(x, y));
    canonicalize(acc);
    c.row(i) = std::move(acc);
  }
  return c;
}

}  // namespace spo
