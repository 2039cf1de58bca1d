#pragma once
// Finite fields F_{p^k} for small p and k, table driven.
//
// An element is stored as a code c = a_0 + a_1 p + ... + a_{k-1} p^{k-1}, where
// a_0 + a_1 t + ... + a_{k-1} t^{k-1} is the reduced residue modulo the defining
// polynomial. Codes below p are exactly the prime subfield, so F_p embeds in
// every F_{p^k} by keeping the code.

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "cohext/error.hpp"

namespace cohext {

namespace detail {
struct FieldData;
}

class Field;

/// Field element. Carries a pointer to the tables of its field; the owning
/// Field (or anything holding a copy of it) must outlive the element.
class Fe {
 public:
  Fe() = default;

  std::uint16_t code() const noexcept { return v_; }
  bool is_zero() const noexcept { return v_ == 0; }
  bool is_one() const noexcept { return v_ == 1; }
  bool valid() const noexcept { return f_ != nullptr; }

  Fe operator+(Fe o) const;
  Fe operator-(Fe o) const;
  Fe operator*(Fe o) const;
  Fe operator/(Fe o) const;  // throws DivisionByZero
  Fe operator-() const;
  Fe& operator+=(Fe o) { return *this = *this + o; }
  Fe& operator-=(Fe o) { return *this = *this - o; }
  Fe& operator*=(Fe o) { return *this = *this * o; }

  Fe inv() const;  // throws DivisionByZero
  Fe pow(std::uint64_t e) const;
  Fe frob() const;
  Fe frob_inv() const;

  /// Little-endian coefficients over F_p, length k.
  std::vector<int> coeffs() const;

  friend bool operator==(Fe a, Fe b) noexcept { return a.v_ == b.v_; }
  friend bool operator<(Fe a, Fe b) noexcept { return a.v_ < b.v_; }

 private:
  friend class Field;
  Fe(const detail::FieldData* f, std::uint16_t v) : f_(f), v_(v) {}

  const detail::FieldData* f_ = nullptr;
  std::uint16_t v_ = 0;
};

/// Handle to an immutable field context. Cheap to copy, safe to share.
class Field {
 public:
  /// modulus is the little-endian coefficient list of a monic polynomial of
  /// degree k (k + 1 entries, last one 1). It may be empty when k == 1.
  static Field make(int p, int k, std::span<const int> modulus = {});
  static Field prime(int p) { return make(p, 1); }

  /// The default quadratic/cubic extension used across the tests and CLI:
  /// the lexicographically first monic irreducible polynomial of degree k.
  static Field extension(int p, int k);

  int p() const noexcept;
  int k() const noexcept;
  int size() const noexcept;  // q = p^k
  const std::vector<int>& modulus() const noexcept;

  Fe zero() const { return {d_.get(), 0}; }
  Fe one() const { return {d_.get(), 1}; }
  Fe from_code(int code) const;
  /// No range check; for codes read back from tables of this field.
  Fe raw(std::uint16_t code) const noexcept { return {d_.get(), code}; }
  Fe from_int(long long v) const;  // image of an integer in the prime field
  Fe from_coeffs(std::span<const int> coeffs) const;
  /// The class of t; one() for prime fields.
  Fe gen() const;

  Fe add(Fe a, Fe b) const { return a + b; }
  Fe sub(Fe a, Fe b) const { return a - b; }
  Fe mul(Fe a, Fe b) const { return a * b; }
  Fe neg(Fe a) const { return -a; }
  Fe inv(Fe a) const { return a.inv(); }
  Fe frobenius(Fe a) const { return a.frob(); }
  Fe frobenius_inv(Fe a) const { return a.frob_inv(); }

  /// All q elements in code order.
  std::vector<Fe> elements() const;

  /// Fields with the same p, k and modulus compare equal.
  bool operator==(const Field& o) const noexcept {
    return d_ == o.d_ || (p() == o.p() && k() == o.k() && modulus() == o.modulus());
  }

  const detail::FieldData* data() const noexcept { return d_.get(); }

  std::string name() const;

 private:
  std::shared_ptr<const detail::FieldData> d_;
};

namespace detail {
struct FieldData {
  int p = 0;
  int k = 0;
  int q = 0;
  std::vector<int> modulus;
  std::vector<std::uint16_t> add;  // q*q
  std::vector<std::uint16_t> mul;  // q*q
  std::vector<std::uint16_t> neg;
  std::vector<std::uint16_t> inv;  // inv[0] unused
  std::vector<std::uint16_t> frob;
  std::vector<std::uint16_t> frob_inv;
};
}  // namespace detail

inline Fe Fe::operator+(Fe o) const { return {f_, f_->add[v_ * f_->q + o.v_]}; }
inline Fe Fe::operator-(Fe o) const { return {f_, f_->add[v_ * f_->q + f_->neg[o.v_]]}; }
inline Fe Fe::operator*(Fe o) const { return {f_, f_->mul[v_ * f_->q + o.v_]}; }
inline Fe Fe::operator-() const { return {f_, f_->neg[v_]}; }
inline Fe Fe::frob() const { return {f_, f_->frob[v_]}; }
inline Fe Fe::frob_inv() const { return {f_, f_->frob_inv[v_]}; }

bool is_prime(int n);

/// Binomial coefficient C(n, r) reduced mod p (Lucas).
int binom_mod(long long n, long long r, int p);

}  // namespace cohext
