#include <set>

#include "cohext/cobar.hpp"
#include "doctest.h"
#include "suite.hpp"

using namespace cohext;

namespace {

std::vector<Field> fields() { return {Field::prime(2), Field::prime(3), Field::extension(2, 2)}; }

std::vector<Tensor2> basis_tensors(const UEnv& a) {
  std::vector<Tensor2> out;
  for (std::uint64_t l = 1; l < a.dim(); ++l)
    for (std::uint64_t r = 1; r < a.dim(); ++r) out.push_back(Tensor2::single(a.key2(l, r), a.field().one()));
  return out;
}

}  // namespace

TEST_CASE("differential examples") {
  Field f = Field::prime(3);
  Cobar c(types::zero(f, 2));
  const UEnv& a = c.algebra();
  CHECK(c.d1(a.gen(0)).is_zero());
  AlgElem xy = a.mult(a.gen(0), a.gen(1));
  Tensor2 sym = a.tensor(a.gen(0), a.gen(1)) + a.tensor(a.gen(1), a.gen(0));
  CHECK(c.d1(xy) == -sym);
  CHECK(c.d2(a.tensor(a.gen(0), a.gen(1))).is_zero());
  CHECK(c.is_coboundary(sym) == -xy);
  CHECK(c.is_coboundary(Tensor2{}).is_zero());
  CHECK_THROWS_AS(c.d1(a.one()), Error);
}

TEST_CASE("omega examples") {
  Field f2 = Field::prime(2);
  Cobar t1(types::split_torus(f2, 1));
  const UEnv& a = t1.algebra();
  Tensor2 w = t1.omega(unit_vec(f2, 1, 0));
  CHECK(w == a.tensor(a.gen(0), a.gen(0)));
  CHECK(t1.is_cocycle(w));
  CHECK_THROWS_AS(t1.is_coboundary(w), Error);

  Field f3 = Field::prime(3);
  Cobar z(types::zero(f3, 1));
  const UEnv& b = z.algebra();
  AlgElem x2 = b.pow(b.gen(0), 2);
  CHECK(z.omega(unit_vec(f3, 1, 0)) == b.tensor(b.gen(0), x2) + b.tensor(x2, b.gen(0)));
}

TEST_CASE("d2 d1 = 0 and the operators commute with the differentials") {
  for (const Field& f : fields())
    for (const auto& [name, t] : suite::small_types(f)) {
      Cobar c(t);
      const UEnv& a = c.algebra();
      if (a.dim() > 27) continue;
      INFO(name << " " << f.name());
      for (std::uint64_t m = 1; m < a.dim(); ++m) {
        AlgElem x = a.mono(m);
        CHECK(c.d2(c.d1(x)).is_zero());
        CHECK(c.d1(c.calP(x)) == c.calP(c.d1(x)));
        CHECK(c.d1(c.rho(x)) == c.rho(c.d1(x)));
        CHECK(c.d1(c.Phi(x)) == c.Phi(c.d1(x)));
        CHECK(c.rho(c.Phi(x)).is_zero());
        for (int k = 1; k <= 2; ++k) CHECK(c.calD(k, x) == c.calD_closed(k, x));
      }
      if (a.dim() > 9) continue;
      for (const Tensor2& t2 : basis_tensors(a)) {
        CHECK(c.d2(c.calP(t2)) == c.calP(c.d2(t2)));
        CHECK(c.d2(c.Phi(t2)) == c.Phi(c.d2(t2)));
        CHECK(c.rho(c.Phi(t2)).is_zero());
        for (int k = 1; k <= 2; ++k) CHECK(c.calD(k, t2) == c.calD_closed(k, t2));
      }
    }
}

TEST_CASE("calD with zero rho is the p-th power") {
  Field f = Field::prime(3);
  Cobar c(types::zero(f, 2));
  for (const Tensor2& t : basis_tensors(c.algebra())) CHECK(c.calD(1, t) == c.calP(t));
}

TEST_CASE("split torus p = 2: Phi(x1 (x) x2) = 0") {
  Field f = Field::prime(2);
  Cobar c(types::split_torus(f, 2));
  const UEnv& a = c.algebra();
  CHECK(c.Phi(a.tensor(a.gen(0), a.gen(1))).is_zero());
}

TEST_CASE("rho(omega(x)) = d1(-x^{p-1} rho(x))") {
  for (const Field& f : fields())
    for (const auto& [name, t] : suite::small_types(f)) {
      Cobar c(t);
      const UEnv& a = c.algebra();
      std::uint64_t hsize = 1;
      for (std::size_t i = 0; i < t.d(); ++i) hsize *= static_cast<std::uint64_t>(f.size());
      if (hsize > 81) continue;
      for (std::uint64_t code = 0; code < hsize; ++code) {
        Vec v(t.d());
        std::uint64_t r = code;
        for (auto& e : v) {
          e = f.from_code(static_cast<int>(r % f.size()));
          r /= f.size();
        }
        AlgElem x = a.embed(v);
        AlgElem rhs = -a.mult(a.pow(x, static_cast<std::uint64_t>(f.p() - 1)), c.rho(x));
        CHECK(c.rho(c.omega(v)) == (rhs.is_zero() ? Tensor2{} : c.d1(rhs)));
      }
    }
}

TEST_CASE("h2_reduce examples and omega at class level") {
  Field f = Field::prime(3);
  Cobar c(types::zero(f, 2));
  const UEnv& a = c.algebra();
  auto r0 = c.h2_reduce(c.d1(a.mult(a.gen(0), a.gen(1))));
  CHECK(r0.coord.is_zero());

  auto r1 = c.h2_reduce(a.tensor(a.gen(1), a.gen(0)));
  CHECK(r1.coord.wedge[0] == -f.one());
  CHECK(is_zero(r1.coord.omega));
  CHECK(a.tensor(a.gen(1), a.gen(0)) - c.standard(r1.coord) == c.d1(r1.witness));

  auto r2 = c.h2_reduce(c.omega(unit_vec(f, 2, 0)));
  CHECK(r2.coord.omega == unit_vec(f, 2, 0));
  CHECK(is_zero(r2.coord.wedge));

  CHECK_THROWS_AS(c.h2_reduce(a.tensor(a.mult(a.gen(0), a.gen(1)), a.gen(0))), Error);

  Field f9 = Field::extension(3, 2);
  Cobar c9(types::zero(f9, 2));
  Fe g = f9.gen();
  Vec x = unit_vec(f9, 2, 0), y = unit_vec(f9, 2, 1);
  auto lhs = c9.h2_reduce(c9.omega(scale(x, g))).coord;
  auto base = c9.h2_reduce(c9.omega(x)).coord;
  CHECK(lhs.omega == scale(x, g));
  CHECK(c9.coboundary_witness(c9.standard(lhs) - c9.standard(base) * g.pow(3)).has_value());
  auto sum = c9.h2_reduce(c9.omega(add(x, y)) - c9.omega(x) - c9.omega(y)).coord;
  CHECK(sum.is_zero());
}

TEST_CASE("z-characteristic examples") {
  Field f2 = Field::prime(2);
  Cobar t2(types::split_torus(f2, 2));
  auto all = t2.zchar_enumerate();
  CHECK(all.size() == 8);

  Field f4 = Field::extension(2, 2);
  Cobar t4(types::split_torus(f4, 2));
  H2Coord xi = H2Coord::zero(f4, 2);
  CHECK(t4.is_z_characteristic(xi));
  xi.wedge[1] = f4.gen();
  CHECK_FALSE(t4.is_z_characteristic(xi));
  xi.wedge[1] = f4.one();
  CHECK(t4.is_z_characteristic(xi));
  CHECK(t4.zchar_enumerate().size() == 8);

  Field f3 = Field::prime(3);
  Cobar z(types::zero(f3, 2));
  CHECK(z.zchar_enumerate().size() == 27);
}

TEST_CASE("zchar formula, generic route and exhaustive scan agree") {
  for (const Field& f : fields())
    for (const auto& [name, t] : suite::small_types(f)) {
      Cobar c(t);
      const std::size_t dim = h2_dim(t.d());
      std::uint64_t total = 1;
      for (std::size_t i = 0; i < dim; ++i) total *= static_cast<std::uint64_t>(f.size());
      if (total > 729 || c.algebra().dim() > 27) continue;
      INFO(name << " " << f.name());
      auto listed = c.zchar_enumerate();
      std::set<H2Coord> formula(listed.begin(), listed.end());
      std::set<H2Coord> generic;
      std::vector<Vec> gb;
      for (const auto& b : c.zchar_basis_generic()) gb.push_back(b.flatten());
      for (const Vec& v : fp_span_elements(f, dim, gb)) generic.insert(H2Coord::unflatten(f, t.d(), v));
      CHECK(formula == generic);

      std::set<H2Coord> scanned;
      for (std::uint64_t code = 0; code < total; ++code) {
        Vec v(dim);
        std::uint64_t r = code;
        for (auto& e : v) {
          e = f.from_code(static_cast<int>(r % f.size()));
          r /= f.size();
        }
        H2Coord xi = H2Coord::unflatten(f, t.d(), v);
        if (c.is_z_characteristic(xi)) scanned.insert(xi);
      }
      CHECK(formula == scanned);
    }
}

TEST_CASE("admissibility") {
  for (int p : {2, 3}) {
    Field f = Field::prime(p);
    Cobar c(types::three_dim_nilpotent(f));
    H2Coord xi = H2Coord::zero(f, 3);
    auto zero = c.is_admissible(xi);
    CHECK(zero.admissible);
    CHECK(zero.witness.is_zero());

    if (p == 2) {
      xi.wedge[0] = f.one();  // (1,1) slot: x1 (x) x1 = omega(x1)
    } else {
      xi.omega[0] = f.one();
    }
    CHECK(c.is_z_characteristic(xi));
    CHECK_FALSE(c.is_admissible(xi).admissible);
  }

  for (const Field& f : fields())
    for (const auto& [name, t] : suite::small_types(f)) {
      Cobar c(t);
      if (c.algebra().dim() > 27) continue;
      bool torus = is_torus(t.h) || !t.lambda().is_zero();
      for (const H2Coord& xi : c.zchar_enumerate()) {
        auto adm = c.is_admissible(xi);
        if (torus) CHECK(adm.admissible);
        if (!adm.admissible) continue;
        CHECK(c.rho(adm.witness).is_zero());
        CHECK(c.Phi(c.standard(xi)) == c.d1(adm.witness));
      }
    }
}

TEST_CASE("non z-characteristic class is rejected") {
  Field f4 = Field::extension(2, 2);
  Cobar c(types::split_torus(f4, 1));
  H2Coord xi = H2Coord::zero(f4, 1);
  xi.wedge[0] = f4.gen();
  CHECK_THROWS_AS(c.is_admissible(xi), Error);
}
