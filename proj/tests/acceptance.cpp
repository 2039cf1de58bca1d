// Acceptance run: one PASS/FAIL line per criterion, exact comparisons only.
// Exit status is the number of failing criteria.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "cohext/classify.hpp"
#include "oracle.hpp"

using namespace cohext;

namespace {

struct Outcome {
  std::uint64_t checks = 0;
  std::uint64_t failures = 0;
  std::string first;

  void expect(bool ok, const std::string& what) {
    ++checks;
    if (ok) return;
    if (failures++ == 0) first = what;
  }
};

struct Case {
  std::string name;
  TypeT type;
};

std::uint64_t ipow(std::uint64_t b, std::size_t e) {
  std::uint64_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

std::string label(const Case& c) {
  return c.name + " F" + std::to_string(c.type.field().size()) + " n=" + std::to_string(c.type.n());
}

// Catalog types over F_p for p in {2, 3} and d <= 3, with n = 1 and, where
// the restricted condition still holds, n = 2 via f(z) = z^{p^2} + lambda z^p.
std::vector<Case> suite_types() {
  std::vector<Case> out;
  for (int p : {2, 3}) {
    Field f = Field::prime(p);
    for (const auto& [name, t] : types::catalog(f, 3)) {
      out.push_back({name, t});
      TypeT t2 = t;
      t2.g.lambdas = {f.zero(), t.g.lambdas[0]};
      if (validate_type(t2).ok()) out.push_back({name, t2});
    }
  }
  return out;
}

// Catalog types over F_p and F_{p^2} with d(d+1)/2 coefficients of at most
// 729 elements, n = 1.
std::vector<Case> coefficient_suite() {
  std::vector<Case> out;
  for (Field f : {Field::prime(2), Field::prime(3), Field::extension(2, 2), Field::extension(3, 2)})
    for (const auto& [name, t] : types::catalog(f, 3))
      if (ipow(static_cast<std::uint64_t>(f.size()), h2_dim(t.d())) <= 729) out.push_back({name, t});
  return out;
}

std::vector<ExtData> suite_data(const Cobar& c, std::uint64_t seed, int randoms) {
  std::vector<ExtData> out{{c.type(), {}, {}}};
  std::mt19937_64 rng(seed);
  for (int i = 0; i < randoms; ++i) out.push_back(random_valid_data(c, rng));
  return out;
}

Vec all_vec(const Field& f, std::size_t d, std::uint64_t code) {
  Vec v(d);
  for (auto& e : v) {
    e = f.from_code(static_cast<int>(code % static_cast<std::uint64_t>(f.size())));
    code /= static_cast<std::uint64_t>(f.size());
  }
  return v;
}

std::vector<Tensor2> basis_tensors(const UEnv& a) {
  std::vector<Tensor2> out;
  for (std::uint64_t l = 1; l < a.dim(); ++l)
    for (std::uint64_t r = 1; r < a.dim(); ++r) out.push_back(a.tensor(a.mono(l), a.mono(r)));
  return out;
}

Matrix lift(const Matrix& m, const Field& big) {
  Matrix r(big, m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r.set(i, j, big.from_int(m.code(i, j)));
  return r;
}

Vec lift(const Vec& v, const Field& big) {
  Vec r;
  for (Fe x : v) r.push_back(big.from_int(x.code()));
  return r;
}

// ---------------------------------------------------------------------------

Outcome pbw_dimension() {
  Outcome o;
  for (const Case& cs : suite_types()) {
    Cobar c(cs.type);
    for (const ExtData& d : suite_data(c, 101, 2)) {
      HopfAlg h(d);
      const auto p = static_cast<std::uint64_t>(cs.type.p());
      o.expect(h.dim() == ipow(p, cs.type.d() + static_cast<std::size_t>(cs.type.n())), label(cs) + " dimension");
      HopfElem w = h.w();
      for (std::uint64_t e = 0; e < h.wdeg(); ++e) {
        HopfElem we = h.pow(w, e);
        for (std::uint64_t m = 0; m < c.algebra().dim(); ++m)
          o.expect(h.mult(h.basis(m), we) == h.basis(h.key(m, e)), label(cs) + " PBW monomial");
      }
    }
  }
  return o;
}

Outcome hopf_axioms() {
  Outcome o;
  for (const Case& cs : suite_types()) {
    Cobar c(cs.type);
    for (const ExtData& d : suite_data(c, 202, 1)) {
      HopfAlg h(d);
      if (h.dim() > 729) continue;
      CheckOptions opt;
      opt.seed = 7;
      opt.trials = 500;
      CheckReport r = check_hopf_axioms(h, opt);
      o.expect(r.ok, label(cs) + ": " + r.failure + " at " + r.witness);
      o.expect(r.exhaustive == (h.dim() <= 64), label(cs) + " check mode");
    }
  }
  return o;
}

Outcome primitive_criterion() {
  Outcome o;
  std::mt19937_64 rng(303);
  for (auto [p, d] : std::vector<std::pair<int, std::size_t>>{{2, 1}, {2, 2}, {3, 1}, {3, 2}}) {
    Field f = Field::prime(p);
    for (int trial = 0; trial < 100; ++trial) {
      TypeT t = types::random_type(f, d, rng);
      Cobar c(t);
      HopfAlg h(random_valid_data(c, rng));
      const bool crit = thmAc_criterion(h);
      const std::size_t prim = h.primitive_space().size();
      o.expect(prim >= d, "primitive space smaller than h");
      o.expect(crit == (prim == d), "criterion disagrees for p=" + std::to_string(p) + " d=" + std::to_string(d));
    }
  }
  return o;
}

Outcome operator_identities() {
  Outcome o;
  std::vector<Case> cases = suite_types();
  for (const auto& [name, t] : types::catalog(Field::extension(2, 2), 3)) cases.push_back({name, t});
  for (const Case& cs : cases) {
    Cobar c(cs.type);
    const UEnv& a = c.algebra();
    if (a.dim() > 27) continue;
    const int n = cs.type.n();
    const std::string l = label(cs);
    for (std::uint64_t m = 1; m < a.dim(); ++m) {
      AlgElem x = a.mono(m);
      o.expect(c.d1(c.Phi(x)) == c.Phi(c.d1(x)), l + " d1 Phi");
      o.expect(c.d1(c.rho(x)) == c.rho(c.d1(x)), l + " d1 rho");
      o.expect(c.rho(c.Phi(x)).is_zero(), l + " rho Phi");
      for (int k = 1; k <= n; ++k) o.expect(c.calD(k, x) == c.calD_closed(k, x), l + " D formula");
    }
    for (const Tensor2& t2 : basis_tensors(a)) {
      o.expect(c.d2(c.Phi(t2)) == c.Phi(c.d2(t2)), l + " d2 Phi");
      o.expect(c.d2(c.rho(t2)) == c.rho(c.d2(t2)), l + " d2 rho");
      o.expect(c.rho(c.Phi(t2)).is_zero(), l + " rho Phi on tensors");
      for (int k = 1; k <= n; ++k) o.expect(c.calD(k, t2) == c.calD_closed(k, t2), l + " D formula on tensors");
    }
  }
  return o;
}

Outcome trivial_identity() {
  Outcome o;
  for (Field f : {Field::prime(2), Field::prime(3), Field::extension(2, 2), Field::extension(3, 2), Field::prime(5),
                  Field::prime(7)})
    for (const auto& [name, t] : types::catalog(f, 3)) {
      const std::uint64_t hsize = ipow(static_cast<std::uint64_t>(f.size()), t.d());
      if (hsize > 81) continue;
      Cobar c(t);
      const UEnv& a = c.algebra();
      for (std::uint64_t code = 0; code < hsize; ++code) {
        Vec v = all_vec(f, t.d(), code);
        AlgElem x = a.embed(v);
        AlgElem rhs = -a.mult(a.pow(x, static_cast<std::uint64_t>(f.p() - 1)), c.rho(x));
        o.expect(c.rho(c.omega(v)) == (rhs.is_zero() ? Tensor2{} : c.d1(rhs)), name + " F" + std::to_string(f.size()));
      }
    }
  return o;
}

Outcome oracle_equivalence() {
  Outcome o;
  Field f = Field::prime(2);
  std::vector<Case> cases{{"split1", types::split_torus(f, 1)}, {"zero1", types::zero(f, 1)},
                          {"split2", types::split_torus(f, 2)}, {"zero2", types::zero(f, 2)},
                          {"alambda", types::alambda(f)}};
  for (const Case& cs : cases) {
    Cobar c(cs.type);
    Classifier k(c);
    oracle::Counts counts = oracle::brute_e2(c);
    o.expect(k.st_enumerate({true}).size() == counts.all, cs.name + " total");
    o.expect(k.st_enumerate({false}).size() == counts.non_pg, cs.name + " non-primitively generated");
  }
  o.expect(oracle::brute_e2(Cobar(cases[0].type)).all == 4, "T_1 total is 4");
  o.expect(oracle::brute_e2(Cobar(cases[0].type)).non_pg == 2, "T_1 count is 2");
  return o;
}

Outcome fiber_law() {
  Outcome o;
  for (const Case& cs : coefficient_suite()) {
    Cobar c(cs.type);
    Classifier k(c);
    const Field& f = cs.type.field();
    const std::uint64_t hsize = ipow(static_cast<std::uint64_t>(f.size()), cs.type.d());
    std::uint64_t kernel = 0;
    std::set<Vec> image;
    for (std::uint64_t code = 0; code < hsize; ++code) {
      Vec v = all_vec(f, cs.type.d(), code);
      if (is_zero(cs.type.rho.apply(v))) ++kernel;
      image.insert(c.Phi_h(v));
    }
    const std::uint64_t expected = kernel / image.size();
    o.expect(kernel % image.size() == 0, label(cs) + " index");
    auto classes = k.st_enumerate();
    std::map<H2Coord, std::uint64_t> per_xi;
    for (const auto& cl : classes) ++per_xi[cl.xi];
    std::uint64_t sum = 0;
    for (const auto& [xi, count] : per_xi) {
      const std::uint64_t fs = k.fiber_size(xi);
      o.expect(fs == expected, label(cs) + " fiber size");
      o.expect(count == fs, label(cs) + " classes over xi");
      sum += fs;
    }
    o.expect(sum == classes.size(), label(cs) + " fiber sum");
  }
  return o;
}

Outcome torus_admissibility() {
  Outcome o;
  for (const Case& cs : coefficient_suite()) {
    const TypeT& t = cs.type;
    const bool g_torus = !t.g.lambdas[0].is_zero();
    if (!is_torus(t.h) && !g_torus) continue;
    Cobar c(t);
    for (const H2Coord& xi : c.zchar_enumerate()) o.expect(c.is_admissible(xi).admissible, label(cs));
  }
  for (int p : {2, 3}) {
    Field f = Field::prime(p);
    Cobar c(types::three_dim_nilpotent(f));
    H2Coord xi = H2Coord::zero(f, 3);
    (p == 2 ? xi.wedge[0] : xi.omega[0]) = f.one();
    o.expect(c.is_z_characteristic(xi), "[omega(x1)] is z-characteristic, p=" + std::to_string(p));
    o.expect(!c.is_admissible(xi).admissible, "[omega(x1)] is not admissible, p=" + std::to_string(p));
  }
  return o;
}

Outcome semisimple() {
  Outcome o;
  std::ifstream in(COHEXT_FIXTURES "/census.csv");
  o.expect(static_cast<bool>(in), "census fixture readable");
  std::vector<CensusRecord> fixture = in ? parse_census(in) : std::vector<CensusRecord>{};
  for (auto [p, d, count] : std::vector<std::tuple<int, std::size_t, std::size_t>>{{2, 2, 3}, {3, 1, 1}}) {
    LineOrbitReport r = semisimple_classify(p, d);
    const std::string l = "(" + std::to_string(p) + "," + std::to_string(d) + ")";
    o.expect(r.reps.size() == count, l + " orbit count");
    o.expect(census_compare(r, builtin_census()).match, l + " built-in census");
    if (!fixture.empty()) o.expect(census_compare(r, fixture).match, l + " fixture census");
  }
  return o;
}

Outcome cleft_sigma_identity() {
  Outcome o;
  for (const Case& cs : suite_types()) {
    Cobar c(cs.type);
    for (const ExtData& d : suite_data(c, 1010, 2)) {
      HopfAlg h(d);
      const std::uint64_t q = h.wdeg();
      AlgElem top = cleft_sigma(h, q - 1, 1);
      o.expect(top == -d.theta, label(cs) + " sigma = -Theta");
      o.expect(top == cleft_sigma(h, 1, q - 1), label(cs) + " symmetry");
    }
  }
  return o;
}

Outcome isomorphism_calculus() {
  Outcome o;
  for (const Case& cs : suite_types()) {
    if (cs.type.n() != 1) continue;
    const TypeT& t = cs.type;
    std::vector<AutElem> group;
    try {
      group = aut_enumerate(t);
    } catch (const Error&) {
      continue;
    }
    Cobar c(t);
    std::mt19937_64 rng(1111);
    const UEnv& a = c.algebra();
    std::vector<AlgElem> shifts{AlgElem{}};
    for (int i = 0; i < 2; ++i) {
      std::vector<Term> ts;
      std::uniform_int_distribution<int> coef(0, t.field().size() - 1);
      for (std::uint64_t m = 1; m < a.dim(); ++m) ts.push_back({m, t.field().from_code(coef(rng))});
      shifts.push_back(AlgElem::from_terms(ts));
    }
    std::vector<AutElem> sample;
    const std::size_t step = std::max<std::size_t>(1, group.size() / 6);
    for (std::size_t i = 0; i < group.size(); i += step) sample.push_back(group[i]);

    for (const ExtData& d : suite_data(c, 1212, 1)) {
      std::size_t limit = std::min<std::size_t>(group.size(), 200);
      for (std::size_t i = 0; i < limit; ++i) {
        const AutElem& g = group[i * group.size() / limit];
        ExtData img = act_data(c, g, d);
        o.expect(validate_data(c, img).ok(), label(cs) + " action preserves validity");
        o.expect(iso_check(c, AlgElem{}, g, img, d), label(cs) + " action with t = 0");
      }
      for (const AutElem& g : sample)
        for (const AlgElem& s : shifts) {
          ExtData d1 = transport(c, d, s, g);
          o.expect(iso_check(c, s, g, d1, d), label(cs) + " transport");
          for (const AutElem& g2 : sample)
            for (const AlgElem& s2 : shifts) {
              ExtData d2 = transport(c, d1, s2, g2);
              IsoPair comp = iso_compose(c, {s, g}, {s2, g2});
              o.expect(iso_check(c, comp.t, comp.g, d2, d), label(cs) + " composition");
            }
        }
    }
  }
  return o;
}

Outcome base_change() {
  Outcome o;
  for (int p : {2, 3}) {
    Field small = Field::prime(p);
    Field big = Field::extension(p, 2);
    for (const auto& [name, t] : types::catalog(small, 3)) {
      Cobar c(t);
      TypeT tb = make_type(lift(t.h.pmap, big), {big.from_int(t.g.lambdas[0].code())}, lift(t.rho, big));
      Cobar cb(tb);
      for (const H2Coord& xi : c.zchar_enumerate()) {
        if (!c.is_admissible(xi).admissible) continue;
        H2Coord xb{xi.p, xi.d, lift(xi.wedge, big), lift(xi.omega, big)};
        o.expect(cb.is_z_characteristic(xb), name + " stays z-characteristic");
        o.expect(cb.is_z_characteristic(xb) && cb.is_admissible(xb).admissible, name + " stays admissible");
      }
    }
  }
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {"PBW dimension p^{d+n}", pbw_dimension},
      {"Hopf axioms and power identity", hopf_axioms},
      {"primitive criterion vs primitive dimension", primitive_criterion},
      {"operator identities", operator_identities},
      {"rho(omega(x)) = d1(-x^{p-1} rho(x))", trivial_identity},
      {"oracle equivalence", oracle_equivalence},
      {"fiber law", fiber_law},
      {"torus admissibility", torus_admissibility},
      {"semisimple classification vs census", semisimple},
      {"cleft sigma identity", cleft_sigma_identity},
      {"isomorphism calculus", isomorphism_calculus},
      {"base change F_p -> F_{p^2}", base_change},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    try {
      o = criteria[i].run();
    } catch (const std::exception& e) {
      o.failures = 1;
      o.first = std::string("exception: ") + e.what();
    }
    const bool pass = o.failures == 0 && o.checks > 0;
    failed += pass ? 0 : 1;
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%s %2zu  %-45s %8llu checks %7.2fs", pass ? "PASS" : "FAIL", i + 1, criteria[i].name,
                static_cast<unsigned long long>(o.checks), secs);
    if (!pass) std::printf(", %llu failed, first: %s", static_cast<unsigned long long>(o.failures), o.first.c_str());
    std::printf("\n");
    std::fflush(stdout);
  }
  return failed;
}
