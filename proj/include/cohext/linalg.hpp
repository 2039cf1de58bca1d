#pragma once
// Dense linear algebra over F_{p^k}, additive (F_p-linear) maps, and the
// semilinear maps v -> A v^{(p)} + B v that describe p-th power operators.
//
// Elimination is deterministic: columns are scanned left to right and the
// first row at or below the current rank with a nonzero entry becomes the
// pivot. Over the prime field the row operations go through the SIMD row
// kernels.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "cohext/field.hpp"
#include "cohext/kernels.hpp"

namespace cohext {

using Vec = std::vector<Fe>;

Vec zero_vec(const Field& f, std::size_t n);
Vec unit_vec(const Field& f, std::size_t n, std::size_t i);
bool is_zero(const Vec& v);
Vec add(const Vec& a, const Vec& b);
Vec sub(const Vec& a, const Vec& b);
Vec scale(const Vec& a, Fe s);
Vec frobenius(const Vec& a);
Vec frobenius_inv(const Vec& a);

class Matrix {
 public:
  Matrix() = default;
  Matrix(Field f, std::size_t rows, std::size_t cols);

  static Matrix identity(Field f, std::size_t n);
  static Matrix from_columns(Field f, std::size_t rows, const std::vector<Vec>& cols);

  const Field& field() const noexcept { return f_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Fe at(std::size_t i, std::size_t j) const { return f_.raw(a_[i * cols_ + j]); }
  void set(std::size_t i, std::size_t j, Fe v) { a_[i * cols_ + j] = v.code(); }
  std::uint16_t code(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  Vec column(std::size_t j) const;
  void set_column(std::size_t j, const Vec& v);
  std::vector<Vec> columns() const;

  Vec apply(const Vec& v) const;
  Matrix operator*(const Matrix& o) const;
  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix operator*(Fe s) const;
  Matrix transpose() const;
  /// Entrywise Frobenius.
  Matrix frobenius() const;
  Matrix frobenius_inv() const;
  Matrix pow(std::uint64_t e) const;

  bool is_zero() const;
  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
  }

 private:
  Field f_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::uint16_t> a_;
};

struct Rref {
  Matrix reduced;
  std::vector<std::size_t> pivots;
};

Rref rref(const Matrix& m);
std::size_t rank(const Matrix& m);
/// Basis of the null space, one vector per free column in increasing order.
std::vector<Vec> kernel(const Matrix& m);
/// Basis of the column space taken from the pivot columns of m.
std::vector<Vec> column_basis(const Matrix& m);

struct Solution {
  Vec x;                    // particular solution, free variables set to zero
  std::vector<Vec> kernel;  // null space basis
};

/// Solves m x = b. Returns nullopt when the system is inconsistent.
std::optional<Solution> solve(const Matrix& m, const Vec& b);
std::optional<Matrix> inverse(const Matrix& m);

/// An F_p-linear map F_q^in -> F_q^out given as a callback.
using AdditiveFn = std::function<Vec(const Vec&)>;

/// F_p-basis of the kernel of an additive map.
std::vector<Vec> additive_kernel(const Field& f, std::size_t in_dim, std::size_t out_dim, const AdditiveFn& fn);
/// F_p-basis of the image of an additive map.
std::vector<Vec> additive_image(const Field& f, std::size_t in_dim, std::size_t out_dim, const AdditiveFn& fn);
/// Some preimage of target, or nullopt.
std::optional<Vec> additive_solve(const Field& f, std::size_t in_dim, std::size_t out_dim, const AdditiveFn& fn,
                                  const Vec& target);

/// v -> a v^{(p)} + b v.
struct SemilinearMap {
  Matrix a;
  Matrix b;
  Vec apply(const Vec& v) const;
};

std::vector<Vec> semilinear_kernel(const SemilinearMap& m);
std::vector<Vec> image_additive(const SemilinearMap& m);

/// All F_p-linear combinations of the given vectors (with repetitions if they
/// are dependent), in lexicographic order of the coefficient tuples.
std::vector<Vec> fp_span_elements(const Field& f, std::size_t dim, const std::vector<Vec>& basis);

/// An F_p-subspace W of F_q^n. Vectors are compared lexicographically by the
/// codes of their entries; reduce(v) returns the least element of v + W.
class FpSubspace {
 public:
  FpSubspace(const Field& f, std::size_t n, const std::vector<Vec>& gens);

  std::size_t dim() const noexcept { return basis_.size(); }
  std::size_t ambient() const noexcept { return n_; }
  /// Reduced echelon basis.
  const std::vector<Vec>& basis() const noexcept { return basis_; }
  Vec reduce(const Vec& v) const;
  bool contains(const Vec& v) const { return is_zero(reduce(v)); }
  /// |W| = p^dim.
  std::uint64_t size() const;

 private:
  std::vector<int> digits(const Vec& v) const;
  Vec from_digits(const std::vector<int>& d) const;

  Field f_;
  std::size_t n_;
  std::vector<std::vector<int>> rows_;  // digit rows, pivot entry 1
  std::vector<std::size_t> pivots_;
  std::vector<Vec> basis_;
};

/// F_p-basis of the F_q-span of vectors (each v together with t^s v).
std::vector<Vec> fp_basis_of_span(const Field& f, const std::vector<Vec>& fq_basis);

/// Dense elimination over the prime field on byte rows.
namespace fp {

struct Dense {
  int p = 2;
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<std::uint8_t> a;  // row-major, rows * cols

  Dense() = default;
  Dense(int p_, std::size_t r, std::size_t c) : p(p_), rows(r), cols(c), a(r * c, 0) {}
  std::uint8_t& at(std::size_t i, std::size_t j) { return a[i * cols + j]; }
  std::uint8_t at(std::size_t i, std::size_t j) const { return a[i * cols + j]; }
};

/// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(Dense& m, const kernels::RowKernels& k = kernels::active());
std::vector<std::vector<std::uint8_t>> kernel(const Dense& m, const kernels::RowKernels& k = kernels::active());

}  // namespace fp

}  // namespace cohext
