#pragma once
// Classification of extension data up to equivalence and isomorphism.
//
// A class of H^2(B, A) is stored as (theta, xi, psi): the data
// (psi + theta, standard(xi)) represents it, psi is the unique A_{>=2}
// witness of Phi_z(standard(xi)), and theta in h is the least element of its
// coset modulo Phi_z(h). Classes with xi = 0 are the primitively generated
// ones; they make up H^2(g, h).
//
// Geometric mode models the algebraically closed picture of the semisimple
// case: lines in the F_p-coefficient space of H^2 of the split torus, up to
// GL(d, F_p).

#include <cstdint>
#include <istream>
#include <vector>

#include "cohext/hopfext.hpp"

namespace cohext {

struct H2Class {
  Vec theta;
  H2Coord xi;
  AlgElem psi;

  friend bool operator==(const H2Class& a, const H2Class& b) { return a.theta == b.theta && a.xi == b.xi; }
  friend bool operator<(const H2Class& a, const H2Class& b) {
    if (a.theta != b.theta) return a.theta < b.theta;
    return a.xi < b.xi;
  }
};

struct EnumOptions {
  bool include_pg = false;  // also list the classes with xi = 0
  std::uint64_t budget = 2'000'000;
  unsigned threads = 1;
};

struct OrbitReport {
  std::vector<H2Class> reps;
  std::vector<std::uint64_t> sizes;
  std::uint64_t total = 0;
  std::uint64_t group_order = 0;
};

struct PreparedAut {
  AutElem aut;
  std::vector<AlgElem> table;  // g on the monomials of A
};

class Classifier {
 public:
  explicit Classifier(const Cobar& c);

  const Cobar& cobar() const noexcept { return c_; }
  /// Phi_z(h) and Ker(rho_z | h) as F_p-subspaces of h.
  const FpSubspace& phi_image() const noexcept { return image_; }
  const FpSubspace& rho_kernel() const noexcept { return kernel_; }

  /// Class of valid data; throws NotCocycle if chi is not a cocycle.
  H2Class classify(const ExtData& d) const;
  /// The representative (psi + theta, standard(xi)).
  ExtData data(const H2Class& c) const;

  /// Every class of H^2(B, A) with xi != 0 (and, with include_pg, xi = 0).
  /// Sorted by theta, then wedge, then omega coordinates.
  std::vector<H2Class> st_enumerate(const EnumOptions& opt = {}) const;
  /// Classes with xi = 0: Ker rho_z modulo Phi_z(h).
  std::vector<H2Class> h2_lie() const;
  /// |Ker rho_z| / |Phi_z(h)|. Throws NotAdmissible.
  std::uint64_t fiber_size(const H2Coord& xi) const;

  PreparedAut prepare(const AutElem& g) const;
  H2Class act(const PreparedAut& g, const H2Class& c) const;
  H2Class act(const AutElem& g, const H2Class& c) const { return act(prepare(g), c); }
  H2Coord act_on_xi(const PreparedAut& g, const H2Coord& xi) const;

  /// Orbits of the group on the classes; representatives are the least class
  /// of each orbit, listed in increasing order.
  OrbitReport orbits(const std::vector<H2Class>& classes, const std::vector<AutElem>& group) const;

 private:
  std::vector<H2Class> classes_for(const H2Coord& xi) const;

  const Cobar& c_;
  FpSubspace image_;
  FpSubspace kernel_;
  std::vector<Vec> complement_;  // F_p-basis of Ker rho_z independent modulo Phi_z(h)
};

/// F_p-basis of Ker(Phi_z : h -> h).
std::vector<Vec> h1(const Cobar& c);

/// All automorphisms of the type. Throws BudgetExceeded when (q - 1) q^{d^2}
/// exceeds the budget.
std::vector<AutElem> aut_enumerate(const TypeT& t, std::uint64_t budget = 5'000'000);

struct LineOrbitReport {
  int p = 0;
  std::size_t d = 0;
  std::vector<std::vector<int>> reps;  // normalized coordinates, first nonzero entry 1
  std::vector<std::uint64_t> sizes;
  std::uint64_t lines = 0;
  std::uint64_t group_order = 0;
};

/// Coordinates of a line: p > 2 wedge (i < j) then omega; p = 2 the
/// coefficients of the quadratic form sum_{i <= j} mu_ij x_i x_j.
std::vector<int> geometric_act(int p, std::size_t d, const std::vector<int>& g, const std::vector<int>& v);
LineOrbitReport semisimple_classify(int p, std::size_t d, std::uint64_t budget = 50'000'000);

struct CensusRecord {
  int p = 0;
  int d = 0;
  std::uint64_t count = 0;
};

/// Groups of order p^{d+1} with Frattini subgroup C_p: (2, 2) -> 3, (3, 1) -> 1.
std::vector<CensusRecord> builtin_census();
/// CSV with header "p,d,count"; lines starting with '#' are ignored. Throws MalformedInput.
std::vector<CensusRecord> parse_census(std::istream& in);

struct CensusVerdict {
  bool match = false;
  std::uint64_t orbits = 0;
  std::uint64_t census = 0;
};
/// Throws MissingRecord if there is no record for (p, d).
CensusVerdict census_compare(const LineOrbitReport& r, const std::vector<CensusRecord>& census);

}  // namespace cohext
