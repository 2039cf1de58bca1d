#pragma once
// The restricted enveloping algebra A = u(h) of an abelian restricted Lie
// algebra, as a commutative and cocommutative Hopf algebra on the PBW basis.
//
// Monomial x^s = x_1^{s_1} ... x_d^{s_d} (0 <= s_i < p) has index
// m = s_1 + s_2 p + ... + s_d p^{d-1}; the unit is index 0. Tensor keys are
// m1 * N + m2 and (m1 * N + m2) * N + m3 with N = p^d.

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "cohext/combo.hpp"
#include "cohext/rlie.hpp"

namespace cohext {

struct AlgTag;
struct Tensor2Tag;
struct Tensor3Tag;
using AlgElem = Combo<AlgTag>;
using Tensor2 = Combo<Tensor2Tag>;
using Tensor3 = Combo<Tensor3Tag>;

class UEnv {
 public:
  explicit UEnv(AbelianRLA h);

  const AbelianRLA& rla() const noexcept { return h_; }
  const Field& field() const noexcept { return h_.field; }
  int p() const noexcept { return p_; }
  std::size_t d() const noexcept { return h_.d; }
  std::uint64_t dim() const noexcept { return n_; }

  std::vector<int> exps(std::uint64_t m) const;
  std::uint64_t monomial(std::span<const int> exps) const;
  int degree(std::uint64_t m) const { return degree_[m]; }
  std::uint64_t gen_index(std::size_t i) const { return pow_p_[i]; }

  AlgElem one() const { return AlgElem::single(0, field().one()); }
  AlgElem gen(std::size_t i) const { return AlgElem::single(pow_p_.at(i), field().one()); }
  AlgElem mono(std::uint64_t m) const { return AlgElem::single(m, field().one()); }
  /// The degree-one element sum v_i x_i.
  AlgElem embed(const Vec& v) const;
  /// Coefficients of x_1..x_d.
  Vec linear_part(const AlgElem& a) const;
  /// Terms of total degree >= 2.
  AlgElem higher_part(const AlgElem& a) const;
  Fe counit(const AlgElem& a) const { return a.coeff(0, field().zero()); }

  AlgElem mono_mult(std::uint64_t a, std::uint64_t b) const;
  AlgElem mult(const AlgElem& a, const AlgElem& b) const;
  /// Left multiplication by a single monomial, accumulated with coefficient c.
  void mult_mono_into(std::uint64_t m, Fe c, const AlgElem& b, Accumulator& acc) const;
  AlgElem pow(const AlgElem& a, std::uint64_t e) const;
  /// a^p, computed semilinearly from the tables.
  AlgElem pth_power(const AlgElem& a) const;
  const AlgElem& mono_pth_power(std::uint64_t m) const { return pw_[m]; }

  /// Full coproduct in A (x) A.
  Tensor2 coproduct(const AlgElem& a) const;
  const Tensor2& mono_coproduct(std::uint64_t m) const { return cop_[m]; }
  /// Delta(a) - a (x) 1 - 1 (x) a; throws NotAugmented unless counit(a) == 0.
  Tensor2 reduced_coproduct(const AlgElem& a) const;
  AlgElem antipode(const AlgElem& a) const;

  /// Basis of the primitive elements inside the augmentation ideal.
  std::vector<AlgElem> primitive_basis() const;

  // Tensor helpers.
  std::uint64_t key2(std::uint64_t a, std::uint64_t b) const { return a * n_ + b; }
  std::pair<std::uint64_t, std::uint64_t> split2(std::uint64_t k) const { return {k / n_, k % n_}; }
  std::uint64_t key3(std::uint64_t a, std::uint64_t b, std::uint64_t c) const { return (a * n_ + b) * n_ + c; }
  Tensor2 tensor(const AlgElem& a, const AlgElem& b) const;
  Tensor3 tensor(const Tensor2& a, const AlgElem& b) const;
  Tensor3 tensor(const AlgElem& a, const Tensor2& b) const;
  /// Componentwise product in A (x) A.
  Tensor2 mult(const Tensor2& a, const Tensor2& b) const;
  Tensor2 pth_power(const Tensor2& t) const;
  Tensor3 pth_power(const Tensor3& t) const;
  /// (f (x) f)(t) for a linear map f given on monomials.
  Tensor2 apply_each(const Tensor2& t, const std::vector<AlgElem>& f) const;
  Tensor3 apply_each(const Tensor3& t, const std::vector<AlgElem>& f) const;
  /// Applies a linear map given on monomials to an element.
  AlgElem apply(const AlgElem& a, const std::vector<AlgElem>& f) const;
  /// True when every tensor factor is a non-unit monomial.
  bool in_augmentation(const Tensor2& t) const;

 private:
  AlgElem compute_mono_mult(std::uint64_t a, std::uint64_t b) const;

  AbelianRLA h_;
  int p_;
  std::uint64_t n_;
  std::vector<std::uint64_t> pow_p_;
  std::vector<int> degree_;
  std::vector<AlgElem> times_gen_;  // m * d + i -> x_i x^m
  std::vector<AlgElem> table_;      // m1 * N + m2, when cached
  std::vector<AlgElem> pw_;
  std::vector<Tensor2> cop_;
};

/// The derivation of A extending rho, tabulated on monomials.
std::vector<AlgElem> derivation_table(const UEnv& a, const Matrix& rho);
AlgElem rho_apply(const UEnv& a, const Matrix& rho, const AlgElem& x);

/// Same check as module_hopf_check(TypeT) for an arbitrary tabulated linear map.
ModuleCheck module_hopf_check(const UEnv& a, const std::vector<AlgElem>& table, int max_degree = -1);

/// Algebra automorphism of A extending g, tabulated on monomials. Throws
/// NotInvertible or NotPMapCompatible.
std::vector<AlgElem> extend_automorphism(const UEnv& a, const Matrix& g);

}  // namespace cohext
