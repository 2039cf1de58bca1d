#include "cohext/uenv.hpp"
#include "doctest.h"
#include "suite.hpp"

using namespace cohext;

namespace {

std::vector<Field> fields() { return {Field::prime(2), Field::prime(3), Field::extension(2, 2)}; }

}  // namespace

TEST_CASE("multiplication examples") {
  Field f3 = Field::prime(3);
  UEnv a3(AbelianRLA::make(Matrix(f3, 1, 1)));
  CHECK(a3.mult(a3.gen(0), a3.pow(a3.gen(0), 2)).is_zero());

  Field f2 = Field::prime(2);
  UEnv split(AbelianRLA::make(Matrix::identity(f2, 2)));
  CHECK(split.mult(split.gen(1), split.gen(1)) == split.gen(1));

  UEnv nil(AbelianRLA::make(suite::mat(f2, 2, {0, 0, 1, 0})));
  CHECK(nil.mult(nil.gen(0), nil.gen(0)) == nil.gen(1));
}

TEST_CASE("associative and commutative, coproduct multiplicative") {
  for (const Field& f : fields())
    for (const auto& [name, t] : suite::small_types(f)) {
      UEnv a(t.h);
      if (a.dim() > 27) continue;
      INFO(name << " " << f.name());
      const std::uint64_t n = a.dim();
      bool ok = true;
      for (std::uint64_t x = 0; x < n && ok; ++x)
        for (std::uint64_t y = 0; y < n && ok; ++y) {
          AlgElem xy = a.mono_mult(x, y);
          ok = xy == a.mono_mult(y, x);
          ok = ok && a.coproduct(xy) == a.mult(a.mono_coproduct(x), a.mono_coproduct(y));
          for (std::uint64_t z = 0; z < n && ok; ++z)
            ok = a.mult(xy, a.mono(z)) == a.mult(a.mono(x), a.mono_mult(y, z));
        }
      CHECK(ok);
    }
}

TEST_CASE("coproduct examples and counit") {
  Field f3 = Field::prime(3);
  UEnv a(AbelianRLA::make(Matrix(f3, 2, 2)));
  CHECK(a.reduced_coproduct(a.gen(0)).is_zero());
  AlgElem x2 = a.pow(a.gen(0), 2);
  Tensor2 expect = a.tensor(x2, a.one()) + a.tensor(a.gen(0), a.gen(0)) * f3.from_int(2) + a.tensor(a.one(), x2);
  CHECK(a.coproduct(x2) == expect);
  AlgElem xy = a.mult(a.gen(0), a.gen(1));
  CHECK(a.reduced_coproduct(xy) == a.tensor(a.gen(0), a.gen(1)) + a.tensor(a.gen(1), a.gen(0)));
  CHECK_THROWS_AS(a.reduced_coproduct(a.one()), Error);

  for (std::uint64_t m = 0; m < a.dim(); ++m) {
    AlgElem left, right;
    for (const Term& t : a.mono_coproduct(m).terms()) {
      auto [l, r] = a.split2(t.key);
      if (l == 0) left.add_scaled(a.mono(r), t.c);
      if (r == 0) right.add_scaled(a.mono(l), t.c);
    }
    CHECK(left == a.mono(m));
    CHECK(right == a.mono(m));
  }
}

TEST_CASE("antipode convolution") {
  for (const Field& f : fields())
    for (const auto& [name, t] : suite::small_types(f)) {
      UEnv a(t.h);
      if (a.dim() > 27) continue;
      for (std::uint64_t m = 0; m < a.dim(); ++m) {
        AlgElem s;
        for (const Term& x : a.mono_coproduct(m).terms()) {
          auto [l, r] = a.split2(x.key);
          s.add_scaled(a.mult(a.antipode(a.mono(l)), a.mono(r)), x.c);
        }
        CHECK(s == a.one() * a.counit(a.mono(m)));
      }
    }
}

TEST_CASE("derivation") {
  Field f2 = Field::prime(2);
  TypeT t = types::alambda(f2);
  UEnv a(t.h);
  CHECK(rho_apply(a, t.rho, a.mult(a.gen(0), a.gen(1))) == a.gen(1));
  CHECK(rho_apply(a, t.rho, a.one()).is_zero());
  for (std::uint64_t m = 0; m < a.dim(); ++m) CHECK(rho_apply(a, Matrix(f2, 2, 2), a.mono(m)).is_zero());

  for (int p : {2, 3})
    for (const auto& [name, ty] : suite::small_types(Field::prime(p))) {
      UEnv u(ty.h);
      if (u.dim() > 27) continue;
      auto table = derivation_table(u, ty.rho);
      for (std::uint64_t x = 0; x < u.dim(); ++x)
        for (std::uint64_t y = 0; y < u.dim(); ++y) {
          AlgElem lhs = u.apply(u.mono_mult(x, y), table);
          AlgElem rhs = u.mult(table[x], u.mono(y)) + u.mult(u.mono(x), table[y]);
          CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("automorphism extension") {
  Field f2 = Field::prime(2);
  UEnv a(AbelianRLA::make(Matrix::identity(f2, 2)));
  auto id = extend_automorphism(a, Matrix::identity(f2, 2));
  for (std::uint64_t m = 0; m < a.dim(); ++m) CHECK(id[m] == a.mono(m));

  auto sw = extend_automorphism(a, suite::mat(f2, 2, {0, 1, 1, 0}));
  CHECK(sw[1] == a.mono(2));
  CHECK(sw[2] == a.mono(1));
  CHECK(sw[3] == a.mono(3));

  UEnv z(AbelianRLA::make(Matrix(f2, 2, 2)));
  CHECK_NOTHROW(extend_automorphism(z, suite::mat(f2, 2, {1, 1, 0, 1})));
  CHECK_THROWS_AS(extend_automorphism(z, Matrix(f2, 2, 2)), Error);

  UEnv nil(AbelianRLA::make(suite::mat(f2, 2, {0, 0, 1, 0})));
  CHECK_THROWS_AS(extend_automorphism(nil, suite::mat(f2, 2, {0, 1, 1, 0})), Error);
}

TEST_CASE("primitive basis is h") {
  for (const Field& f : fields())
    for (const auto& [name, t] : suite::small_types(f)) {
      UEnv a(t.h);
      if (a.dim() > 27) continue;
      auto prim = a.primitive_basis();
      REQUIRE(prim.size() == a.d());
      for (const auto& x : prim) {
        CHECK(a.higher_part(x).is_zero());
        CHECK(a.reduced_coproduct(x).is_zero());
        CHECK(a.reduced_coproduct(a.pth_power(x)).is_zero());
      }
    }
}
