#include "cohext/linalg.hpp"

#include <algorithm>
#include <utility>

namespace cohext {

Vec zero_vec(const Field& f, std::size_t n) { return Vec(n, f.zero()); }

Vec unit_vec(const Field& f, std::size_t n, std::size_t i) {
  Vec v(n, f.zero());
  v.at(i) = f.one();
  return v;
}

bool is_zero(const Vec& v) {
  for (Fe x : v)
    if (!x.is_zero()) return false;
  return true;
}

Vec add(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw Error(ErrorCode::DimensionMismatch, "vector sizes differ");
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

Vec sub(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw Error(ErrorCode::DimensionMismatch, "vector sizes differ");
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

Vec scale(const Vec& a, Fe s) {
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] * s;
  return r;
}

Vec frobenius(const Vec& a) {
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i].frob();
  return r;
}

Vec frobenius_inv(const Vec& a) {
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i].frob_inv();
  return r;
}

// ---------------------------------------------------------------------------
// Matrix

Matrix::Matrix(Field f, std::size_t rows, std::size_t cols)
    : f_(std::move(f)), rows_(rows), cols_(cols), a_(rows * cols, 0) {}

Matrix Matrix::identity(Field f, std::size_t n) {
  Matrix m(std::move(f), n, n);
  for (std::size_t i = 0; i < n; ++i) m.a_[i * n + i] = 1;
  return m;
}

Matrix Matrix::from_columns(Field f, std::size_t rows, const std::vector<Vec>& cols) {
  Matrix m(std::move(f), rows, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) m.set_column(j, cols[j]);
  return m;
}

Vec Matrix::column(std::size_t j) const {
  Vec v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = at(i, j);
  return v;
}

void Matrix::set_column(std::size_t j, const Vec& v) {
  if (v.size() != rows_) throw Error(ErrorCode::DimensionMismatch, "column length differs from row count");
  for (std::size_t i = 0; i < rows_; ++i) set(i, j, v[i]);
}

std::vector<Vec> Matrix::columns() const {
  std::vector<Vec> out;
  out.reserve(cols_);
  for (std::size_t j = 0; j < cols_; ++j) out.push_back(column(j));
  return out;
}

Vec Matrix::apply(const Vec& v) const {
  if (v.size() != cols_) throw Error(ErrorCode::DimensionMismatch, "matrix-vector size mismatch");
  const detail::FieldData* fd = f_.data();
  Vec r(rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    std::uint16_t acc = 0;
    for (std::size_t j = 0; j < cols_; ++j)
      acc = fd->add[acc * fd->q + fd->mul[a_[i * cols_ + j] * fd->q + v[j].code()]];
    r[i] = f_.raw(acc);
  }
  return r;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols_ != o.rows_) throw Error(ErrorCode::DimensionMismatch, "matrix product size mismatch");
  const detail::FieldData* fd = f_.data();
  Matrix r(f_, rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t l = 0; l < cols_; ++l) {
      std::uint16_t x = a_[i * cols_ + l];
      if (!x) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) {
        std::uint16_t& dst = r.a_[i * o.cols_ + j];
        dst = fd->add[dst * fd->q + fd->mul[x * fd->q + o.a_[l * o.cols_ + j]]];
      }
    }
  return r;
}

Matrix Matrix::operator+(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw Error(ErrorCode::DimensionMismatch, "matrix sum size mismatch");
  Matrix r = *this;
  for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = (f_.raw(a_[i]) + f_.raw(o.a_[i])).code();
  return r;
}

Matrix Matrix::operator-(const Matrix& o) const { return *this + o * (-f_.one()); }

Matrix Matrix::operator*(Fe s) const {
  Matrix r = *this;
  for (auto& x : r.a_) x = (f_.raw(x) * s).code();
  return r;
}

Matrix Matrix::transpose() const {
  Matrix r(f_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r.a_[j * rows_ + i] = a_[i * cols_ + j];
  return r;
}

Matrix Matrix::frobenius() const {
  Matrix r = *this;
  for (auto& x : r.a_) x = f_.raw(x).frob().code();
  return r;
}

Matrix Matrix::frobenius_inv() const {
  Matrix r = *this;
  for (auto& x : r.a_) x = f_.raw(x).frob_inv().code();
  return r;
}

Matrix Matrix::pow(std::uint64_t e) const {
  if (rows_ != cols_) throw Error(ErrorCode::DimensionMismatch, "power of a non-square matrix");
  Matrix result = identity(f_, rows_);
  Matrix base = *this;
  while (e) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

bool Matrix::is_zero() const {
  for (auto x : a_)
    if (x) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Prime field elimination

namespace fp {

std::vector<std::size_t> rref(Dense& m, const kernels::RowKernels& k) {
  const auto p = static_cast<std::uint8_t>(m.p);
  std::uint8_t inv[16] = {0};
  for (int a = 1; a < m.p; ++a)
    for (int b = 1; b < m.p; ++b)
      if ((a * b) % m.p == 1) inv[a] = static_cast<std::uint8_t>(b);

  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols && r < m.rows; ++c) {
    std::size_t piv = r;
    while (piv < m.rows && m.at(piv, c) == 0) ++piv;
    if (piv == m.rows) continue;
    if (piv != r)
      std::swap_ranges(m.a.begin() + static_cast<std::ptrdiff_t>(piv * m.cols),
                       m.a.begin() + static_cast<std::ptrdiff_t>((piv + 1) * m.cols),
                       m.a.begin() + static_cast<std::ptrdiff_t>(r * m.cols));
    std::uint8_t* prow = &m.a[r * m.cols];
    const std::size_t tail = m.cols - c;
    if (prow[c] != 1) k.scale_mod(prow + c, inv[prow[c]], tail, p);
    for (std::size_t i = 0; i < m.rows; ++i) {
      if (i == r) continue;
      std::uint8_t x = m.at(i, c);
      if (x) k.axpy_mod(&m.a[i * m.cols] + c, prow + c, static_cast<std::uint8_t>(p - x), tail, p);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

std::vector<std::vector<std::uint8_t>> kernel(const Dense& m, const kernels::RowKernels& k) {
  Dense red = m;
  std::vector<std::size_t> pivots = rref(red, k);
  std::vector<bool> is_pivot(m.cols, false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<std::vector<std::uint8_t>> out;
  for (std::size_t f = 0; f < m.cols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<std::uint8_t> v(m.cols, 0);
    v[f] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) {
      std::uint8_t x = red.at(r, f);
      if (x) v[pivots[r]] = static_cast<std::uint8_t>(m.p - x);
    }
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace fp

namespace {

fp::Dense to_dense(const Matrix& m) {
  fp::Dense d(m.field().p(), m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) d.at(i, j) = static_cast<std::uint8_t>(m.code(i, j));
  return d;
}

Matrix from_dense(const Field& f, const fp::Dense& d) {
  Matrix m(f, d.rows, d.cols);
  for (std::size_t i = 0; i < d.rows; ++i)
    for (std::size_t j = 0; j < d.cols; ++j) m.set(i, j, f.raw(d.at(i, j)));
  return m;
}

Rref rref_general(const Matrix& in) {
  Rref out{in, {}};
  Matrix& m = out.reduced;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t piv = r;
    while (piv < m.rows() && m.at(piv, c).is_zero()) ++piv;
    if (piv == m.rows()) continue;
    if (piv != r)
      for (std::size_t j = 0; j < m.cols(); ++j) {
        Fe t = m.at(r, j);
        m.set(r, j, m.at(piv, j));
        m.set(piv, j, t);
      }
    Fe s = m.at(r, c).inv();
    for (std::size_t j = c; j < m.cols(); ++j) m.set(r, j, m.at(r, j) * s);
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r) continue;
      Fe x = m.at(i, c);
      if (x.is_zero()) continue;
      for (std::size_t j = c; j < m.cols(); ++j) m.set(i, j, m.at(i, j) - x * m.at(r, j));
    }
    out.pivots.push_back(c);
    ++r;
  }
  return out;
}

}  // namespace

Rref rref(const Matrix& m) {
  if (m.field().k() == 1) {
    fp::Dense d = to_dense(m);
    auto pivots = fp::rref(d);
    return {from_dense(m.field(), d), std::move(pivots)};
  }
  return rref_general(m);
}

std::size_t rank(const Matrix& m) { return rref(m).pivots.size(); }

std::vector<Vec> kernel(const Matrix& m) {
  Rref r = rref(m);
  const Field& f = m.field();
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : r.pivots) is_pivot[c] = true;
  std::vector<Vec> out;
  for (std::size_t fc = 0; fc < m.cols(); ++fc) {
    if (is_pivot[fc]) continue;
    Vec v = unit_vec(f, m.cols(), fc);
    for (std::size_t i = 0; i < r.pivots.size(); ++i) v[r.pivots[i]] = -r.reduced.at(i, fc);
    out.push_back(std::move(v));
  }
  return out;
}

std::vector<Vec> column_basis(const Matrix& m) {
  Rref r = rref(m);
  std::vector<Vec> out;
  for (auto c : r.pivots) out.push_back(m.column(c));
  return out;
}

std::optional<Solution> solve(const Matrix& m, const Vec& b) {
  if (b.size() != m.rows()) throw Error(ErrorCode::DimensionMismatch, "right-hand side length differs from rows");
  const Field& f = m.field();
  Matrix aug(f, m.rows(), m.cols() + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) aug.set(i, j, m.at(i, j));
    aug.set(i, m.cols(), b[i]);
  }
  Rref r = rref(aug);
  if (!r.pivots.empty() && r.pivots.back() == m.cols()) return std::nullopt;
  Solution s;
  s.x = zero_vec(f, m.cols());
  for (std::size_t i = 0; i < r.pivots.size(); ++i) s.x[r.pivots[i]] = r.reduced.at(i, m.cols());
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : r.pivots) is_pivot[c] = true;
  for (std::size_t fc = 0; fc < m.cols(); ++fc) {
    if (is_pivot[fc]) continue;
    Vec v = unit_vec(f, m.cols(), fc);
    for (std::size_t i = 0; i < r.pivots.size(); ++i) v[r.pivots[i]] = -r.reduced.at(i, fc);
    s.kernel.push_back(std::move(v));
  }
  return s;
}

std::optional<Matrix> inverse(const Matrix& m) {
  if (m.rows() != m.cols()) throw Error(ErrorCode::DimensionMismatch, "inverse of a non-square matrix");
  const std::size_t n = m.rows();
  const Field& f = m.field();
  Matrix aug(f, n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug.set(i, j, m.at(i, j));
    aug.set(i, n + i, f.one());
  }
  Rref r = rref(aug);
  if (r.pivots.size() < n || r.pivots[n - 1] != n - 1) return std::nullopt;
  Matrix inv(f, n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv.set(i, j, r.reduced.at(i, n + j));
  return inv;
}

// ---------------------------------------------------------------------------
// Additive maps through the F_p blow-up: coordinate j*k + s of F_q^n is the
// t^s digit of entry j.

namespace {

void expand_into(const Vec& v, int p, int k, std::uint8_t* out) {
  for (std::size_t j = 0; j < v.size(); ++j) {
    int c = v[j].code();
    for (int s = 0; s < k; ++s) {
      out[j * k + s] = static_cast<std::uint8_t>(c % p);
      c /= p;
    }
  }
}

Vec collapse(const Field& f, const std::uint8_t* digits, std::size_t n) {
  const int p = f.p(), k = f.k();
  Vec v(n);
  for (std::size_t j = 0; j < n; ++j) {
    int code = 0, w = 1;
    for (int s = 0; s < k; ++s) {
      code += digits[j * k + s] * w;
      w *= p;
    }
    v[j] = f.raw(static_cast<std::uint16_t>(code));
  }
  return v;
}

Vec basis_input(const Field& f, std::size_t in_dim, std::size_t idx) {
  const int k = f.k();
  Vec e = zero_vec(f, in_dim);
  int code = 1;
  for (std::size_t s = 0; s < idx % k; ++s) code *= f.p();
  e[idx / k] = f.raw(static_cast<std::uint16_t>(code));
  return e;
}

// Rows are output digits, columns are input basis vectors.
fp::Dense blow_up(const Field& f, std::size_t in_dim, std::size_t out_dim, const AdditiveFn& fn) {
  const int k = f.k();
  const std::size_t in_n = in_dim * k, out_n = out_dim * k;
  fp::Dense m(f.p(), out_n, in_n);
  std::vector<std::uint8_t> col(out_n);
  for (std::size_t c = 0; c < in_n; ++c) {
    Vec img = fn(basis_input(f, in_dim, c));
    if (img.size() != out_dim) throw Error(ErrorCode::DimensionMismatch, "additive map returned wrong length");
    expand_into(img, f.p(), k, col.data());
    for (std::size_t r = 0; r < out_n; ++r) m.at(r, c) = col[r];
  }
  return m;
}

}  // namespace

std::vector<Vec> additive_kernel(const Field& f, std::size_t in_dim, std::size_t out_dim, const AdditiveFn& fn) {
  fp::Dense m = blow_up(f, in_dim, out_dim, fn);
  std::vector<Vec> out;
  for (const auto& v : fp::kernel(m)) out.push_back(collapse(f, v.data(), in_dim));
  return out;
}

std::vector<Vec> additive_image(const Field& f, std::size_t in_dim, std::size_t out_dim, const AdditiveFn& fn) {
  fp::Dense m = blow_up(f, in_dim, out_dim, fn);
  fp::Dense red = m;
  auto pivots = fp::rref(red);
  std::vector<Vec> out;
  std::vector<std::uint8_t> col(m.rows);
  for (auto c : pivots) {
    for (std::size_t r = 0; r < m.rows; ++r) col[r] = m.at(r, c);
    out.push_back(collapse(f, col.data(), out_dim));
  }
  return out;
}

std::optional<Vec> additive_solve(const Field& f, std::size_t in_dim, std::size_t out_dim, const AdditiveFn& fn,
                                  const Vec& target) {
  if (target.size() != out_dim) throw Error(ErrorCode::DimensionMismatch, "target length differs from codomain");
  fp::Dense m = blow_up(f, in_dim, out_dim, fn);
  fp::Dense aug(m.p, m.rows, m.cols + 1);
  std::vector<std::uint8_t> t(m.rows);
  expand_into(target, f.p(), f.k(), t.data());
  for (std::size_t r = 0; r < m.rows; ++r) {
    for (std::size_t c = 0; c < m.cols; ++c) aug.at(r, c) = m.at(r, c);
    aug.at(r, m.cols) = t[r];
  }
  auto pivots = fp::rref(aug);
  if (!pivots.empty() && pivots.back() == m.cols) return std::nullopt;
  std::vector<std::uint8_t> x(m.cols, 0);
  for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = aug.at(i, m.cols);
  return collapse(f, x.data(), in_dim);
}

Vec SemilinearMap::apply(const Vec& v) const { return add(a.apply(frobenius(v)), b.apply(v)); }

std::vector<Vec> semilinear_kernel(const SemilinearMap& m) {
  return additive_kernel(m.a.field(), m.a.cols(), m.a.rows(), [&](const Vec& v) { return m.apply(v); });
}

std::vector<Vec> image_additive(const SemilinearMap& m) {
  return additive_image(m.a.field(), m.a.cols(), m.a.rows(), [&](const Vec& v) { return m.apply(v); });
}

std::vector<Vec> fp_span_elements(const Field& f, std::size_t dim, const std::vector<Vec>& basis) {
  std::vector<Vec> out;
  const int p = f.p();
  std::vector<int> c(basis.size(), 0);
  while (true) {
    Vec v = zero_vec(f, dim);
    for (std::size_t i = 0; i < basis.size(); ++i)
      if (c[i]) v = add(v, scale(basis[i], f.from_int(c[i])));
    out.push_back(std::move(v));
    std::size_t i = basis.size();
    while (i > 0) {
      --i;
      if (++c[i] < p) break;
      c[i] = 0;
      if (i == 0) return out;
    }
    if (basis.empty()) return out;
  }
}

}  // namespace cohext

namespace cohext {

// Digit position of coefficient s of entry j: entries in order, and inside an
// entry the most significant digit first, so lexicographic order on digit
// vectors is lexicographic order on entry codes.
FpSubspace::FpSubspace(const Field& f, std::size_t n, const std::vector<Vec>& gens) : f_(f), n_(n) {
  const int p = f.p();
  const std::size_t cols = n * static_cast<std::size_t>(f.k());
  fp::Dense m(p, gens.size(), cols);
  for (std::size_t r = 0; r < gens.size(); ++r) {
    auto d = digits(gens[r]);
    for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = static_cast<std::uint8_t>(d[c]);
  }
  pivots_ = fp::rref(m);
  for (std::size_t r = 0; r < pivots_.size(); ++r) {
    std::vector<int> row(cols);
    for (std::size_t c = 0; c < cols; ++c) row[c] = m.at(r, c);
    basis_.push_back(from_digits(row));
    rows_.push_back(std::move(row));
  }
}

std::vector<int> FpSubspace::digits(const Vec& v) const {
  if (v.size() != n_) throw Error(ErrorCode::DimensionMismatch, "vector length differs from the subspace ambient");
  const std::size_t k = static_cast<std::size_t>(f_.k());
  std::vector<int> d(n_ * k);
  for (std::size_t j = 0; j < n_; ++j) {
    auto c = v[j].coeffs();
    for (std::size_t s = 0; s < k; ++s) d[j * k + (k - 1 - s)] = c[s];
  }
  return d;
}

Vec FpSubspace::from_digits(const std::vector<int>& d) const {
  const std::size_t k = static_cast<std::size_t>(f_.k());
  Vec v(n_);
  std::vector<int> c(k);
  for (std::size_t j = 0; j < n_; ++j) {
    for (std::size_t s = 0; s < k; ++s) c[s] = d[j * k + (k - 1 - s)];
    v[j] = f_.from_coeffs(c);
  }
  return v;
}

Vec FpSubspace::reduce(const Vec& v) const {
  const int p = f_.p();
  auto d = digits(v);
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    int a = d[pivots_[r]];
    if (a == 0) continue;
    for (std::size_t c = 0; c < d.size(); ++c) d[c] = ((d[c] - a * rows_[r][c]) % p + p) % p;
  }
  return from_digits(d);
}

std::uint64_t FpSubspace::size() const {
  std::uint64_t s = 1;
  for (std::size_t i = 0; i < basis_.size(); ++i) s *= static_cast<std::uint64_t>(f_.p());
  return s;
}

std::vector<Vec> fp_basis_of_span(const Field& f, const std::vector<Vec>& fq_basis) {
  std::vector<Vec> out;
  Fe t = f.gen();
  for (const Vec& v : fq_basis) {
    Fe c = f.one();
    for (int s = 0; s < f.k(); ++s) {
      out.push_back(scale(v, c));
      c = c * t;
    }
  }
  return out;
}

}  // namespace cohext
