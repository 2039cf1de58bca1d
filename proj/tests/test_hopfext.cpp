#include "cohext/hopfext.hpp"
#include "doctest.h"
#include "suite.hpp"

using namespace cohext;

namespace {

ExtData trivial(const TypeT& t) { return {t, AlgElem{}, Tensor2{}}; }

ExtData torus_omega(const Field& f) {
  TypeT t = types::split_torus(f, 1);
  Cobar c(t);
  return {t, AlgElem{}, c.omega(unit_vec(f, 1, 0))};
}

bool has(const ValidationReport& r, const std::string& cond) {
  for (const auto& v : r.violations)
    if (v.condition == cond) return true;
  return false;
}

}  // namespace

TEST_CASE("validate_data examples") {
  Field f = Field::prime(2);
  CHECK(validate_data(trivial(types::split_torus(f, 2))).ok());
  CHECK(validate_data(torus_omega(f)).ok());

  TypeT t = types::alambda(f);
  Cobar c(t);
  ExtData bad{t, c.algebra().gen(0), Tensor2{}};
  auto rep = validate_data(c, bad);
  CHECK(has(rep, "RhoThetaNonzero"));

  ExtData notcocycle{t, AlgElem{}, c.algebra().tensor(c.algebra().mult(c.algebra().gen(0), c.algebra().gen(1)),
                                                      c.algebra().gen(0))};
  CHECK(has(validate_data(c, notcocycle), "ChiNotCocycle"));
  CHECK_THROWS_AS(HopfAlg{bad}, Error);
}

TEST_CASE("A(lambda) fixture reports per condition") {
  Field f2 = Field::prime(2);
  auto r0 = validate_data(alambda_data(f2, f2.zero()));
  CHECK(r0.ok());
  auto r1 = validate_data(alambda_data(f2, f2.one()));
  CHECK_FALSE(has(r1, "RhoThetaNonzero"));
  CHECK(has(r1, "PhiChiMismatch"));

  Field f3 = Field::prime(3);
  auto r3 = validate_data(alambda_data(f3, f3.zero()));
  CHECK(has(r3, "RhoThetaNonzero"));
}

TEST_CASE("construction examples") {
  Field f2 = Field::prime(2);
  HopfAlg h(torus_omega(f2));
  CHECK(h.dim() == 4);
  HopfElem x = h.embed(h.base().gen(0));
  CHECK(h.mult(x, x) == x);
  CHECK(h.mult(h.w(), h.w()) == h.w());
  CHECK(h.coproduct(h.w()) == h.tensor(h.w(), h.one()) + h.tensor(h.one(), h.w()) + h.tensor(x, x));
  CHECK(h.antipode(x) == -x);
  HopfElem sw = h.antipode(h.w());
  HopfElem conv = h.mult(sw, h.one()) + h.mult(h.one(), h.w()) + h.mult(h.antipode(x), x);
  CHECK(conv.is_zero());
  CHECK(check_hopf_axioms(h).ok);
  CHECK(h.primitive_space().size() == 1);
  CHECK(thmAc_criterion(h));

  HopfAlg al(ExtData{types::alambda(f2), AlgElem{}, Tensor2{}});
  HopfElem ax = al.embed(al.base().gen(0)), ay = al.embed(al.base().gen(1));
  CHECK(al.mult(al.w(), ax) == al.mult(ax, al.w()) + ay);

  Field f3 = Field::prime(3);
  HopfAlg triv(trivial(types::zero(f3, 1)));
  HopfElem tx = triv.embed(triv.base().gen(0));
  CHECK(triv.mult(triv.w(), tx) == triv.mult(tx, triv.w()));
  CHECK(triv.antipode(triv.w()) == -triv.w());
  CHECK(triv.primitive_space().size() == 2);
  CHECK_FALSE(thmAc_criterion(triv));
}

TEST_CASE("Hopf axioms on the catalog, n = 1 and n = 2") {
  for (int p : {2, 3})
    for (int n : {1, 2}) {
      Field f = Field::prime(p);
      std::mt19937_64 rng(11 + p + n);
      for (const auto& [name, t0] : types::catalog(f, 2)) {
        if (n == 2 && t0.d() > 1 && p == 3) continue;
        TypeT t = t0;
        if (n == 2) {
          t.g.lambdas = {f.zero(), t0.g.lambdas[0]};
          if (!validate_type(t).ok()) continue;
        }
        Cobar c(t);
        ExtData data = random_valid_data(c, rng);
        INFO(name << " p=" << p << " n=" << n);
        REQUIRE(validate_data(c, data).ok());
        HopfAlg h(data);
        CHECK(h.dim() == c.algebra().dim() * static_cast<std::uint64_t>(n == 1 ? p : p * p));
        CheckOptions opt;
        opt.trials = 60;
        auto rep = check_hopf_axioms(h, opt);
        CHECK_MESSAGE(rep.ok, rep.failure << " at " << rep.witness);
      }
    }
}

TEST_CASE("corrupted chi is detected") {
  Field f = Field::prime(2);
  TypeT t = types::split_torus(f, 1);
  Cobar c(t);
  const UEnv& a = c.algebra();
  ExtData d{t, AlgElem{}, a.tensor(a.gen(0), a.gen(0)) + a.tensor(a.one(), a.gen(0))};
  HopfAlg h(d, false);
  CHECK_FALSE(check_hopf_axioms(h).ok);
}

TEST_CASE("primitive space and Theorem A(c) agree") {
  for (int p : {2, 3}) {
    Field f = Field::prime(p);
    std::mt19937_64 rng(5 * p);
    for (const auto& [name, t] : types::catalog(f, 2)) {
      Cobar c(t);
      for (int i = 0; i < 6; ++i) {
        ExtData d = random_valid_data(c, rng);
        HopfAlg h(d);
        auto prim = h.primitive_space();
        CHECK((prim.size() == t.d()) == thmAc_criterion(h));
      }
    }
  }

  Field f = Field::prime(3);
  TypeT t = types::zero(f, 2);
  Cobar c(t);
  AlgElem a = c.algebra().mult(c.algebra().gen(0), c.algebra().gen(1));
  HopfAlg h(ExtData{t, c.Phi(a), c.d1(a)});
  auto prim = h.primitive_space();
  CHECK(prim.size() == 3);
  HopfElem cand = h.w() + h.embed(a);
  CHECK(h.coproduct(cand) == h.tensor(cand, h.one()) + h.tensor(h.one(), cand));
}

TEST_CASE("cleft sigma") {
  Field f = Field::prime(2);
  TypeT t = types::split_torus(f, 1);
  Cobar c(t);
  HopfAlg h(ExtData{t, c.algebra().gen(0), Tensor2{}});
  CHECK(cleft_sigma(h, 1, 1) == c.algebra().gen(0));
  CHECK(cleft_sigma(h, 0, 0) == c.algebra().one());
  CHECK(cleft_sigma(h, 0, 1).is_zero());
  CHECK_THROWS_AS(cleft_sigma(h, 2, 0), Error);

  Field f3 = Field::prime(3);
  HopfAlg triv(trivial(types::zero(f3, 1)));
  CHECK(cleft_sigma(triv, 2, 1).is_zero());

  std::mt19937_64 rng(99);
  for (int p : {2, 3}) {
    Field fp = Field::prime(p);
    for (const auto& [name, ty] : types::catalog(fp, 2)) {
      Cobar cc(ty);
      HopfAlg hh(random_valid_data(cc, rng));
      const std::uint64_t q = hh.wdeg();
      CHECK(cleft_sigma(hh, q - 1, 1) == -hh.data().theta);
      CHECK(cleft_sigma(hh, 1, q - 1) == cleft_sigma(hh, q - 1, 1));
    }
  }
}

TEST_CASE("automorphisms and isomorphisms") {
  Field f = Field::prime(3);
  std::mt19937_64 rng(7);
  TypeT t = types::split_torus(f, 2);
  Cobar c(t);
  ExtData d = random_valid_data(c, rng);
  AutElem id = aut_identity(t);
  CHECK(validate_aut(t, id).ok());
  CHECK(iso_check(c, AlgElem{}, id, d, d));

  AutElem g{-f.one(), suite::mat(f, 2, {1, 1, 0, 1})};
  REQUIRE(validate_aut(t, g).ok());
  ExtData gd = act_data(c, g, d);
  CHECK(validate_data(c, gd).ok());
  CHECK(iso_check(c, AlgElem{}, g, gd, d));

  const UEnv& a = c.algebra();
  AlgElem s = a.mult(a.gen(0), a.gen(1)) + a.gen(1);
  ExtData eq{t, d.theta + c.Phi(s), d.chi + c.d1(s)};
  CHECK(iso_check(c, s, id, d, eq));

  AlgElem t1 = a.pow(a.gen(0), 2);
  ExtData d1 = transport(c, d, t1, g);
  CHECK(iso_check(c, t1, g, d1, d));
  AutElem g2{f.one(), suite::mat(f, 2, {0, 1, 1, 0})};
  REQUIRE(validate_aut(t, g2).ok());
  AlgElem t2 = a.mult(a.gen(0), a.pow(a.gen(1), 2));
  ExtData d2 = transport(c, d1, t2, g2);
  CHECK(iso_check(c, t2, g2, d2, d1));
  IsoPair comp = iso_compose(c, {t1, g}, {t2, g2});
  CHECK(iso_check(c, comp.t, comp.g, d2, d));

  AutElem bad{f.one(), suite::mat(f, 2, {1, 1, 1, 1})};
  CHECK_FALSE(validate_aut(t, bad).ok());
  CHECK_THROWS_AS(iso_check(c, AlgElem{}, id, d, ExtData{types::zero(f, 2), {}, {}}), Error);
}

TEST_CASE("structure export round trip") {
  Field f = Field::prime(2);
  HopfAlg h(torus_omega(f));
  TableHopf table(export_structure(h));
  auto a = check_structure(h);
  auto b = check_structure(table);
  CHECK(a.ok);
  CHECK(b.ok);
  CHECK(a.checks == b.checks);
}
