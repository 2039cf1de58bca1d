#pragma once
// Restricted Lie algebra data: an abelian restricted Lie algebra h given by its
// p-map matrix, a one-dimensional g = k z with z^{[p^n]} relation
// f(z) = z^{p^n} + lambda_{n-1} z^{p^{n-1}} + ... + lambda_0 z, and a type
// T = (g, h, rho) where rho is the action of z on h.

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "cohext/linalg.hpp"

namespace cohext {

/// Column j of pmap holds the coordinates of x_j^{[p]}. The p-map of a general
/// element is p-semilinear: (sum c_j x_j)^{[p]} = sum c_j^p x_j^{[p]}.
struct AbelianRLA {
  Field field;
  std::size_t d = 0;
  Matrix pmap;

  static AbelianRLA make(Matrix pmap);
  /// P v^{(p)}.
  Vec pth_power(const Vec& v) const;
};

struct OneDimRLA {
  Field field;
  std::vector<Fe> lambdas;  // lambda_0 .. lambda_{n-1}

  int n() const noexcept { return static_cast<int>(lambdas.size()); }
};

struct TypeT {
  OneDimRLA g;
  AbelianRLA h;
  Matrix rho;  // column j = rho_z(x_j)

  const Field& field() const noexcept { return h.field; }
  std::size_t d() const noexcept { return h.d; }
  int p() const noexcept { return h.field.p(); }
  int n() const noexcept { return g.n(); }
  /// The scalar lambda of z^p + lambda z; requires n == 1.
  Fe lambda() const;
};

TypeT make_type(Matrix pmap, std::vector<Fe> lambdas, Matrix rho);

struct Violation {
  std::string condition;
  std::string message;
  Vec witness;
};

struct ValidationReport {
  std::vector<Violation> violations;
  std::vector<std::string> notes;

  bool ok() const noexcept { return violations.empty(); }
};

/// Checks that rho is an algebraic representation of g on h:
///   "pmap_annihilated": rho(x_j^{[p]}) = 0 for every j (witness x_j),
///   "restricted":       f(rho) = rho^{p^n} + sum lambda_i rho^{p^i} = 0 (witness x_j).
/// The bracket condition is vacuous for abelian h and one-dimensional g; it
/// is recorded in notes.
ValidationReport validate_type(const TypeT& t);

/// True iff the p-map of h is injective.
bool is_torus(const AbelianRLA& h);

struct ModuleCheck {
  bool ok = true;
  std::string failure;       // which identity failed
  std::uint64_t witness = 0;  // monomial index
};

/// Verifies that the derivation extending rho makes u(h) a module Hopf algebra:
/// Leibniz rule, compatibility with the coproduct and the counit, on all
/// monomials of total degree <= max_degree (negative means all).
ModuleCheck module_hopf_check(const TypeT& t, int max_degree = -1);

namespace types {

TypeT zero(const Field& f, std::size_t d, int n = 1);
/// x_i^{[p]} = x_i, rho = 0, f(z) = z^{p^n} - z.
TypeT split_torus(const Field& f, std::size_t d, int n = 1);
/// d = 2: x^{[p]} = 0, y^{[p]} = y, rho(x) = y, rho(y) = 0, f(z) = z^{p^n}.
TypeT alambda(const Field& f, int n = 1);
/// d = 3: x1^{[p]} = x3^{[p]} = 0, x2^{[p]} = x3, rho(x1) = x2, rho(x2) = rho(x3) = 0, f(z) = z^p.
TypeT three_dim_nilpotent(const Field& f);

struct Named {
  std::string name;
  TypeT type;
};

/// Named valid types of dimension <= max_d used across checks and examples.
std::vector<Named> catalog(const Field& f, std::size_t max_d = 3);

/// A valid type of dimension d: either rho = 0 with random p-map and lambda,
/// or a catalog type of that dimension.
template <class Rng>
TypeT random_type(const Field& f, std::size_t d, Rng& rng);

}  // namespace types

}  // namespace cohext

namespace cohext::types {

template <class Rng>
Matrix random_matrix(const Field& f, std::size_t r, std::size_t c, Rng& rng) {
  std::uniform_int_distribution<int> dist(0, f.size() - 1);
  Matrix m(f, r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m.set(i, j, f.from_code(dist(rng)));
  return m;
}

template <class Rng>
TypeT random_type(const Field& f, std::size_t d, Rng& rng) {
  std::vector<Named> same;
  for (auto& t : catalog(f, d))
    if (t.type.d() == d) same.push_back(std::move(t));
  if (rng() % 2 == 0 || same.empty()) {
    Matrix pm = random_matrix(f, d, d, rng);
    Fe lambda = f.from_code(std::uniform_int_distribution<int>(0, f.size() - 1)(rng));
    return make_type(std::move(pm), {lambda}, Matrix(f, d, d));
  }
  return same[rng() % same.size()].type;
}

}  // namespace cohext::types
