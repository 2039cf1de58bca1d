#pragma once
// Low degrees of the cobar complex of A = u(h) together with the operators
// P (p-th power), D_z^m and Phi_z built from rho_z, and the second cohomology
// H^2 in explicit coordinates.
//
// H^2 coordinates. For p > 2 a class is
//     sum_{i<j} mu_ij [x_i (x) x_j] + [omega(sum_i mu_i x_i)]
// and for p = 2 it is sum_{i<=j} mu_ij [x_i (x) x_j]. Since omega is
// p-semilinear at the level of classes, the "linear" coordinates used for
// elimination carry nu_i = mu_i^p in place of mu_i.

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "cohext/sparse.hpp"
#include "cohext/uenv.hpp"

namespace cohext {

struct H2Coord {
  int p = 0;
  std::size_t d = 0;
  Vec wedge;  // p > 2: (i, j) with i < j, row-major; p == 2: i <= j, row-major
  Vec omega;  // p > 2: mu_1..mu_d; empty for p == 2

  static H2Coord zero(const Field& f, std::size_t d);
  /// Coordinates in the fixed order: wedge entries, then omega entries.
  static H2Coord unflatten(const Field& f, std::size_t d, const Vec& v);
  Vec flatten() const;
  bool is_zero() const;

  friend bool operator==(const H2Coord& a, const H2Coord& b) { return a.wedge == b.wedge && a.omega == b.omega; }
  friend bool operator<(const H2Coord& a, const H2Coord& b);
};

/// Number of H^2 coordinates, d(d+1)/2.
std::size_t h2_dim(std::size_t d);
/// Index pairs of the wedge coordinates for the given prime.
std::vector<std::pair<std::size_t, std::size_t>> h2_pairs(int p, std::size_t d);

class Cobar {
 public:
  explicit Cobar(TypeT t);

  const TypeT& type() const noexcept { return t_; }
  const UEnv& algebra() const noexcept { return a_; }
  const Field& field() const noexcept { return t_.field(); }
  const std::vector<AlgElem>& rho_table() const noexcept { return rho_; }

  AlgElem rho(const AlgElem& x) const;
  Tensor2 rho(const Tensor2& x) const;
  Tensor3 rho(const Tensor3& x) const;
  template <class T>
  T rho_pow(T x, std::uint64_t k) const {
    for (std::uint64_t i = 0; i < k && !x.is_zero(); ++i) x = rho(x);
    return x;
  }

  Tensor2 d1(const AlgElem& a) const;
  Tensor3 d2(const Tensor2& t) const;
  Tensor2 omega(const Vec& x) const;

  AlgElem calP(const AlgElem& x) const { return a_.pth_power(x); }
  Tensor2 calP(const Tensor2& x) const { return a_.pth_power(x); }
  Tensor3 calP(const Tensor3& x) const { return a_.pth_power(x); }

  /// D^0 = id, D^m = P D^{m-1} + rho^{p^m - p^{m-1}} D^{m-1}.
  AlgElem calD(int m, const AlgElem& x) const;
  Tensor2 calD(int m, const Tensor2& x) const;
  Tensor3 calD(int m, const Tensor3& x) const;
  /// D^m = P D^{m-1} + rho^{p^m - 1}.
  AlgElem calD_closed(int m, const AlgElem& x) const;
  Tensor2 calD_closed(int m, const Tensor2& x) const;
  Tensor3 calD_closed(int m, const Tensor3& x) const;

  /// Phi_z = D^n + sum_i lambda_i D^i.
  AlgElem Phi(const AlgElem& x) const;
  Tensor2 Phi(const Tensor2& x) const;
  Tensor3 Phi(const Tensor3& x) const;
  /// Phi_z restricted to h (it preserves h).
  Vec Phi_h(const Vec& v) const;

  bool is_cocycle(const Tensor2& t) const;
  /// The unique witness in A_{>=2} with d1(a) = t, if t is a coboundary.
  std::optional<AlgElem> coboundary_witness(const Tensor2& t) const;
  /// Throws NotCoboundary.
  AlgElem is_coboundary(const Tensor2& t) const;

  Tensor2 standard(const H2Coord& xi) const;

  struct Reduction {
    H2Coord coord;
    AlgElem witness;  // t - standard(coord) = d1(witness)
  };
  /// Throws NotCocycle.
  Reduction h2_reduce(const Tensor2& t) const;
  /// Linear coordinates of the class of a cocycle (nu_i in place of mu_i).
  Vec h2_linear(const Tensor2& t) const;

  /// Throws NotCocycle.
  bool is_z_cocycle(const Tensor2& chi) const;
  bool is_z_characteristic(const H2Coord& xi) const;

  struct Admissibility {
    bool admissible = false;
    AlgElem base;     // the A_{>=2} witness of Phi(standard(xi))
    AlgElem witness;  // base + h with rho(witness) = 0, when admissible
  };
  /// Throws NotZCharacteristic.
  Admissibility is_admissible(const H2Coord& xi) const;

  /// F_p-basis of the z-characteristic classes from the closed-form
  /// conditions; requires n == 1.
  std::vector<H2Coord> zchar_basis() const;
  /// F_p-basis as the kernel of xi -> [Phi(standard(xi))]; any n.
  std::vector<H2Coord> zchar_basis_generic() const;
  /// Every z-characteristic class; throws BudgetExceeded beyond budget.
  std::vector<H2Coord> zchar_enumerate(std::uint64_t budget = 2'000'000) const;

 private:
  TypeT t_;
  UEnv a_;
  std::vector<AlgElem> rho_;
  std::vector<Tensor2> rcop_;          // reduced coproduct of each monomial
  std::vector<std::uint64_t> high_;  // monomials of degree >= 2
  SparseEchelon b2_;                  // d1 of the monomials in high_
  SparseEchelon h2_;                  // same, followed by the standard basis
  std::vector<Tensor2> std_basis_;
};

}  // namespace cohext
