#include <fstream>
#include <set>
#include <sstream>

#include "cohext/classify.hpp"
#include "doctest.h"
#include "oracle.hpp"
#include "suite.hpp"

using namespace cohext;

TEST_CASE("FpSubspace gives least coset representatives") {
  for (Field f : {Field::prime(3), Field::extension(2, 2)}) {
    std::mt19937_64 rng(4);
    for (int trial = 0; trial < 20; ++trial) {
      std::vector<Vec> gens;
      std::uniform_int_distribution<int> c(0, f.size() - 1);
      for (int g = 0; g < 2; ++g) {
        Vec v(2);
        for (auto& e : v) e = f.from_code(c(rng));
        gens.push_back(v);
      }
      FpSubspace w(f, 2, gens);
      std::set<Vec> span;
      for (const Vec& v : fp_span_elements(f, 2, gens)) span.insert(v);
      CHECK(span.size() == w.size());
      Vec v{f.from_code(c(rng)), f.from_code(c(rng))};
      Vec best = v;
      for (const Vec& s : span) best = std::min(best, add(v, s));
      CHECK(w.reduce(v) == best);
    }
  }
}

TEST_CASE("st_enumerate on the split torus T_1 over F_2") {
  Field f = Field::prime(2);
  Cobar c(types::split_torus(f, 1));
  Classifier k(c);
  auto cls = k.st_enumerate();
  REQUIRE(cls.size() == 2);
  for (const auto& x : cls) CHECK_FALSE(x.xi.is_zero());
  CHECK(k.st_enumerate({true}).size() == 4);
  CHECK(k.h2_lie().size() == 2);
  CHECK(k.fiber_size(cls[0].xi) == 2);
  auto rep = k.orbits(cls, aut_enumerate(c.type()));
  CHECK(rep.reps.size() == 2);
  CHECK(k.orbits({}, aut_enumerate(c.type())).reps.empty());
}

TEST_CASE("oracle equivalence for p = 2") {
  Field f = Field::prime(2);
  std::vector<TypeT> ts{types::split_torus(f, 1), types::zero(f, 1), types::split_torus(f, 2), types::zero(f, 2),
                        types::alambda(f)};
  for (const TypeT& t : ts) {
    Cobar c(t);
    Classifier k(c);
    auto counts = oracle::brute_e2(c);
    CHECK(k.st_enumerate({true}).size() == counts.all);
    CHECK(k.st_enumerate({false}).size() == counts.non_pg);
  }
}

TEST_CASE("classes, data and the group action") {
  for (int p : {2, 3}) {
    Field f = Field::prime(p);
    for (const auto& [name, t] : types::catalog(f, 2)) {
      Cobar c(t);
      Classifier k(c);
      auto all = k.st_enumerate({true});
      auto group = aut_enumerate(t);
      INFO(name << " p=" << p);
      REQUIRE_FALSE(group.empty());
      std::uint64_t fibers = 0;
      std::set<H2Coord> xis;
      for (const auto& cl : all) {
        ExtData d = k.data(cl);
        CHECK(validate_data(c, d).ok());
        CHECK(k.classify(d) == cl);
        CHECK(k.act(aut_identity(t), cl) == cl);
        if (!cl.xi.is_zero()) xis.insert(cl.xi);
      }
      for (const auto& xi : xis) fibers += k.fiber_size(xi);
      CHECK(fibers == k.st_enumerate().size());

      for (std::size_t i = 0; i < std::min<std::size_t>(group.size(), 6); ++i)
        for (std::size_t j = 0; j < std::min<std::size_t>(group.size(), 6); ++j)
          for (std::size_t m = 0; m < all.size(); m += 3) {
            H2Class lhs = k.act(group[i], k.act(group[j], all[m]));
            CHECK(lhs == k.act(aut_compose(group[i], group[j]), all[m]));
          }

      auto rep = k.orbits(k.st_enumerate(), group);
      std::uint64_t sum = 0;
      for (auto s : rep.sizes) {
        CHECK(rep.group_order % s == 0);
        sum += s;
      }
      CHECK(sum == rep.total);
    }
  }
}

TEST_CASE("torus types: every z-characteristic class is admissible") {
  for (Field f : {Field::prime(2), Field::prime(3), Field::extension(2, 2)})
    for (const auto& [name, t] : types::catalog(f, 2)) {
      if (!is_torus(t.h) && t.lambda().is_zero()) continue;
      Cobar c(t);
      for (const auto& xi : c.zchar_enumerate()) CHECK(c.is_admissible(xi).admissible);
    }
}

TEST_CASE("h1 and h2_lie") {
  Field f2 = Field::prime(2);
  Cobar t2(types::split_torus(f2, 2));
  CHECK(h1(t2).size() == 2);
  CHECK(Classifier(t2).h2_lie().size() == 4);

  Field f3 = Field::prime(3);
  Cobar z(types::zero(f3, 2));
  CHECK(h1(z).size() == 2);

  Cobar lam(make_type(Matrix(f3, 2, 2), {f3.one()}, Matrix(f3, 2, 2)));
  CHECK(h1(lam).empty());
  CHECK(Classifier(lam).h2_lie().size() == 1);

  for (Field f : {Field::prime(2), Field::prime(3), Field::extension(2, 2)})
    for (const auto& [name, t] : types::catalog(f, 2)) {
      Cobar c(t);
      auto a = h1(c);
      auto b = additive_kernel(f, t.d(), t.d(), [&](const Vec& v) { return c.Phi_h(v); });
      CHECK(FpSubspace(f, t.d(), a).basis() == FpSubspace(f, t.d(), b).basis());
    }
}

TEST_CASE("automorphism groups") {
  Field f2 = Field::prime(2);
  CHECK(aut_enumerate(types::split_torus(f2, 2)).size() == 6);
  Field f3 = Field::prime(3);
  CHECK(aut_enumerate(types::split_torus(f3, 2)).size() == 2 * 48);
  auto g = aut_enumerate(types::alambda(f3));
  CHECK(std::find(g.begin(), g.end(), aut_identity(types::alambda(f3))) != g.end());
  CHECK_THROWS_AS(aut_enumerate(types::split_torus(Field::prime(7), 3), 1000), Error);
}

TEST_CASE("swap acts trivially on x1 (x) x2 in characteristic 2") {
  Field f = Field::prime(2);
  Cobar c(types::split_torus(f, 2));
  Classifier k(c);
  H2Coord xi = H2Coord::zero(f, 2);
  xi.wedge[1] = f.one();
  auto g = k.prepare({f.one(), suite::mat(f, 2, {0, 1, 1, 0})});
  CHECK(k.act_on_xi(g, xi) == xi);
}

TEST_CASE("geometric mode") {
  auto r22 = semisimple_classify(2, 2);
  CHECK(r22.lines == 7);
  CHECK(r22.reps.size() == 3);
  CHECK(census_compare(r22, builtin_census()).match);
  auto r31 = semisimple_classify(3, 1);
  CHECK(r31.reps.size() == 1);
  CHECK(census_compare(r31, builtin_census()).match);
  CHECK(semisimple_classify(2, 1).reps.size() == 1);
  CHECK_THROWS_AS(census_compare(semisimple_classify(2, 3), builtin_census()), Error);

  for (int p : {2, 3})
    for (std::size_t d : {1u, 2u}) {
      Field f = Field::prime(p);
      Cobar c(types::split_torus(f, d));
      Classifier k(c);
      for (const AutElem& a : aut_enumerate(c.type())) {
        auto prepared = k.prepare(a);
        std::vector<int> gi;
        for (std::size_t i = 0; i < d * d; ++i) gi.push_back(a.g.at(i / d, i % d).code());
        for (const H2Coord& xi : c.zchar_enumerate()) {
          std::vector<int> v;
          for (const Fe& e : xi.flatten()) v.push_back(e.code());
          auto img = k.act_on_xi(prepared, xi).flatten();
          std::vector<int> expect = geometric_act(p, d, gi, v);
          std::vector<int> got;
          for (const Fe& e : img) got.push_back(e.code());
          for (int& x : expect) x = x * a.gamma.code() % p;
          CHECK(got == expect);
        }
      }
    }
}

TEST_CASE("census parsing") {
  std::istringstream ok("# groups\np,d,count\n2,2,3\n\n# more\n3,1,1\n");
  auto recs = parse_census(ok);
  REQUIRE(recs.size() == 2);
  CHECK(recs[1].count == 1);
  std::istringstream bad1("p,d\n2,2\n");
  CHECK_THROWS_AS(parse_census(bad1), Error);
  std::istringstream bad2("p,d,count\n2,x,3\n");
  CHECK_THROWS_AS(parse_census(bad2), Error);
  std::istringstream bad3("");
  CHECK_THROWS_AS(parse_census(bad3), Error);
}

TEST_CASE("census fixture") {
  std::ifstream in(COHEXT_FIXTURES "/census.csv");
  REQUIRE(in);
  auto census = parse_census(in);
  for (auto [p, d] : std::vector<std::pair<int, std::size_t>>{{2, 1}, {2, 2}, {2, 3}, {3, 1}, {3, 2}, {5, 2}}) {
    auto v = census_compare(semisimple_classify(p, d), census);
    INFO("p=" << p << " d=" << d);
    CHECK(v.match);
  }
}
