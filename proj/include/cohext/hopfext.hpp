#pragma once
// Extension data D = (T, z, Theta, chi) and the Hopf algebra u(D) it presents:
// generated by A = u(h) and w with
//     w a - a w = rho_z(a),   f(w) + Theta = 0,   Delta(w) = w (x) 1 + 1 (x) w + chi.
//
// Basis. u(D) is a free left A-module on 1, w, ..., w^{q-1} with q = p^n. The
// basis element x^m w^e has key m + N e, N = dim A; the dimension is N q.
// Tensor keys are b1 * D + b2 and (b1 * D + b2) * D + b3.

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "cohext/cobar.hpp"

namespace cohext {

struct HopfTag;
struct HTensor2Tag;
using HopfElem = Combo<HopfTag>;
using HTensor2 = Combo<HTensor2Tag>;

struct ExtData {
  TypeT type;
  AlgElem theta;
  Tensor2 chi;
};

bool same_type(const TypeT& a, const TypeT& b);

/// Type conditions from validate_type, then
///   "ThetaNotAugmented": epsilon(Theta) = 0,
///   "ChiNotCocycle":     chi in A+ (x) A+ with d2(chi) = 0,
///   "RhoThetaNonzero":   rho_z(Theta) = 0,
///   "PhiChiMismatch":    Phi_z(chi) = d1(Theta).
/// Every failing condition is reported; the message names the first offending term.
ValidationReport validate_data(const Cobar& c, const ExtData& data);
ValidationReport validate_data(const ExtData& data);

/// Abstract finite-dimensional Hopf structure on a basis 0..dim-1.
class HopfStructure {
 public:
  virtual ~HopfStructure() = default;
  virtual const Field& field() const = 0;
  virtual std::uint64_t dim() const = 0;
  virtual std::uint64_t unit() const = 0;
  virtual std::vector<Term> mult(std::uint64_t a, std::uint64_t b) const = 0;
  virtual std::vector<Term> coproduct(std::uint64_t b) const = 0;
  virtual Fe counit(std::uint64_t b) const = 0;
  virtual std::vector<Term> antipode(std::uint64_t b) const = 0;
  virtual std::string label(std::uint64_t b) const { return std::to_string(b); }
};

struct CheckOptions {
  bool exhaustive = true;         // otherwise seeded random sampling
  std::uint64_t seed = 1;
  int trials = 500;
  std::uint64_t exhaustive_limit = 64;  // auto mode: exhaustive iff dim <= limit
  bool automatic = true;
};

struct CheckReport {
  bool ok = true;
  std::string failure;  // name of the first identity that failed
  std::string witness;  // basis elements involved
  std::uint64_t checks = 0;
  bool exhaustive = true;
  std::uint64_t seed = 0;
};

/// Associativity, unit, coassociativity, counit, multiplicativity of the
/// coproduct and counit, and the antipode identities.
CheckReport check_structure(const HopfStructure& h, const CheckOptions& opt = {});

class HopfAlg : public HopfStructure {
 public:
  /// Throws InvalidData (with the violated condition) unless validate is false.
  explicit HopfAlg(ExtData data, bool validate = true);

  const ExtData& data() const noexcept { return data_; }
  const Cobar& cobar() const noexcept { return cobar_; }
  const UEnv& base() const noexcept { return cobar_.algebra(); }
  const Field& field() const override { return cobar_.field(); }
  std::uint64_t dim() const override { return d_; }
  std::uint64_t unit() const override { return 0; }
  std::uint64_t wdeg() const noexcept { return q_; }

  std::uint64_t key(std::uint64_t m, std::uint64_t e) const { return m + n_ * e; }
  std::pair<std::uint64_t, std::uint64_t> split(std::uint64_t b) const { return {b % n_, b / n_}; }

  HopfElem one() const { return HopfElem::single(0, field().one()); }
  HopfElem w() const { return HopfElem::single(key(0, 1), field().one()); }
  HopfElem basis(std::uint64_t b) const { return HopfElem::single(b, field().one()); }
  HopfElem embed(const AlgElem& a) const;
  HTensor2 embed(const Tensor2& t) const;
  /// The A-part of an element whose w-exponents are all zero; nullopt otherwise.
  std::optional<AlgElem> restrict_to_base(const HopfElem& u) const;

  std::vector<Term> mult(std::uint64_t a, std::uint64_t b) const override;
  std::vector<Term> coproduct(std::uint64_t b) const override;
  Fe counit(std::uint64_t b) const override { return b == 0 ? field().one() : field().zero(); }
  std::vector<Term> antipode(std::uint64_t b) const override;
  std::string label(std::uint64_t b) const override;

  HopfElem mult(const HopfElem& u, const HopfElem& v) const;
  HopfElem pow(const HopfElem& u, std::uint64_t e) const;
  HTensor2 coproduct(const HopfElem& u) const;
  Fe counit(const HopfElem& u) const { return u.coeff(0, field().zero()); }
  HopfElem antipode(const HopfElem& u) const;
  HTensor2 tensor(const HopfElem& a, const HopfElem& b) const;
  HTensor2 mult(const HTensor2& a, const HTensor2& b) const;

  /// Basis of the primitive elements.
  std::vector<HopfElem> primitive_space() const;

 private:
  std::vector<Term> compute_mult(std::uint64_t a, std::uint64_t b) const;
  std::vector<Term> compute_coproduct(std::uint64_t b) const;
  std::vector<Term> compute_antipode(std::uint64_t b) const;

  ExtData data_;
  Cobar cobar_;
  std::uint64_t n_, q_, d_;
  std::vector<std::vector<AlgElem>> rho_pow_;  // rho^j on monomials, j < q
  std::vector<HopfElem> wr_;                   // normal form of w^E, E < 2q
  std::vector<HTensor2> dw_;                   // Delta(w)^e, e < q
  std::vector<HopfElem> sw_;                   // S(w)^e, e < q
  std::vector<std::vector<Term>> mult_table_, cop_table_, s_table_;
};

/// check_structure plus Delta(w^{p^m}) = w^{p^m} (x) 1 + 1 (x) w^{p^m} + D^m(chi)
/// for 0 <= m <= n.
CheckReport check_hopf_axioms(const HopfAlg& h, const CheckOptions& opt = {});

/// True iff the classes of D^i(chi), 0 <= i < n, are linearly independent in H^2.
bool thmAc_criterion(const Cobar& c, const Tensor2& chi);
bool thmAc_criterion(const HopfAlg& h);

/// sigma(z^i, z^j) for the cleft section z^m -> w^m. Throws OutOfRange.
AlgElem cleft_sigma(const HopfAlg& h, std::uint64_t i, std::uint64_t j);

/// g(z) = gamma z together with the matrix of g on h.
struct AutElem {
  Fe gamma;
  Matrix g;

  friend bool operator==(const AutElem& a, const AutElem& b) { return a.gamma == b.gamma && a.g == b.g; }
};

AutElem aut_identity(const TypeT& t);
/// Conditions "invertible", "pmap" (g P = P g^{(p)}), "rho" (rho g = gamma g rho)
/// and "lambda" (lambda_i (gamma^{p^n} - gamma^{p^i}) = 0).
ValidationReport validate_aut(const TypeT& t, const AutElem& a);
/// outer after inner: (gamma_o gamma_i, g_o g_i).
AutElem aut_compose(const AutElem& outer, const AutElem& inner);
AutElem aut_inverse(const AutElem& a);

/// The action g.(Theta, chi) = (gamma^{p^n} g(Theta), gamma (g (x) g)(chi)).
ExtData act_data(const Cobar& c, const AutElem& g, const ExtData& d);
/// The data D' for which (t, g) is an isomorphism from D:
/// Theta' = gamma^{p^n} g(Theta - Phi(t)), chi' = gamma (g (x) g)(chi - d1(t)).
ExtData transport(const Cobar& c, const ExtData& d, const AlgElem& t, const AutElem& g);
/// Phi(t) = Theta - gamma^{-p^n} g^{-1}(Theta') and
/// d1(t) = chi - gamma^{-1} (g^{-1} (x) g^{-1})(chi'). Throws TypeMismatch.
bool iso_check(const Cobar& c, const AlgElem& t, const AutElem& g, const ExtData& dprime, const ExtData& d);

struct IsoPair {
  AlgElem t;
  AutElem g;
};
/// (t, g): D -> D' followed by (t', g'): D' -> D'' is (t + gamma^{-1} g^{-1}(t'), g' g).
IsoPair iso_compose(const Cobar& c, const IsoPair& first, const IsoPair& second);

/// The algebra automorphism of A induced by g, on monomials.
std::vector<AlgElem> aut_table(const Cobar& c, const Matrix& g);

/// The data of Example A(lambda): rho(x) = y, x^{[p]} = 0, y^{[p]} = y,
/// Theta = x^{p-1} y - x and chi = lambda x (x) y + omega(x). Not necessarily valid.
ExtData alambda_data(const Field& f, Fe lambda);

/// Valid data for the type of c: chi = standard(xi) + d1(b), Theta = a + Phi(b) + h
/// with xi a random admissible class (or 0), b in A+ and h in Ker rho.
ExtData random_valid_data(const Cobar& c, std::mt19937_64& rng);

/// Multiplication, coproduct, counit and antipode tables on a basis.
struct StructureConstants {
  Field field;
  std::uint64_t dim = 0;
  std::uint64_t unit = 0;
  std::vector<std::string> labels;
  std::vector<std::vector<Term>> mult;  // a * dim + b
  std::vector<std::vector<Term>> coproduct;
  std::vector<Fe> counit;
  std::vector<std::vector<Term>> antipode;
};

StructureConstants export_structure(const HopfStructure& h);

class TableHopf : public HopfStructure {
 public:
  explicit TableHopf(StructureConstants s) : s_(std::move(s)) {}
  const Field& field() const override { return s_.field; }
  std::uint64_t dim() const override { return s_.dim; }
  std::uint64_t unit() const override { return s_.unit; }
  std::vector<Term> mult(std::uint64_t a, std::uint64_t b) const override { return s_.mult.at(a * s_.dim + b); }
  std::vector<Term> coproduct(std::uint64_t b) const override { return s_.coproduct.at(b); }
  Fe counit(std::uint64_t b) const override { return s_.counit.at(b); }
  std::vector<Term> antipode(std::uint64_t b) const override { return s_.antipode.at(b); }
  std::string label(std::uint64_t b) const override { return s_.labels.empty() ? std::to_string(b) : s_.labels.at(b); }

 private:
  StructureConstants s_;
};

}  // namespace cohext
