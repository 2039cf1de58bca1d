#include <random>

#include "cohext/linalg.hpp"
#include "cohext/sparse.hpp"
#include "doctest.h"

using namespace cohext;

namespace {

Matrix random_matrix(const Field& f, std::size_t r, std::size_t c, std::mt19937_64& rng, int zero_bias = 0) {
  Matrix m(f, r, c);
  std::uniform_int_distribution<int> d(0, f.size() - 1 + zero_bias);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) {
      int x = d(rng);
      m.set(i, j, x >= f.size() ? f.zero() : f.from_code(x));
    }
  return m;
}

Vec random_vec(const Field& f, std::size_t n, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> d(0, f.size() - 1);
  Vec v(n);
  for (auto& x : v) x = f.from_code(d(rng));
  return v;
}

std::vector<Field> fields() { return {Field::prime(2), Field::prime(3), Field::extension(2, 2), Field::extension(3, 2)}; }

}  // namespace

TEST_CASE("solve, kernel and rank-nullity") {
  std::mt19937_64 rng(3);
  for (const Field& f : fields()) {
    for (int trial = 0; trial < 60; ++trial) {
      std::size_t r = 1 + rng() % 7, c = 1 + rng() % 7;
      Matrix m = random_matrix(f, r, c, rng, trial % 2 ? f.size() : 0);
      auto ker = kernel(m);
      CHECK(rank(m) + ker.size() == c);
      for (const auto& v : ker) CHECK(is_zero(m.apply(v)));
      Vec x = random_vec(f, c, rng);
      Vec b = m.apply(x);
      auto s = solve(m, b);
      REQUIRE(s.has_value());
      CHECK(m.apply(s->x) == b);
      CHECK(s->kernel.size() == ker.size());
      CHECK(column_basis(m).size() == rank(m));
    }
  }
}

TEST_CASE("inconsistent system") {
  Field f = Field::prime(3);
  Matrix m(f, 2, 1);
  m.set(0, 0, f.one());
  m.set(1, 0, f.one());
  Vec b{f.one(), f.zero()};
  CHECK_FALSE(solve(m, b).has_value());
}

TEST_CASE("inverse and powers") {
  std::mt19937_64 rng(5);
  for (const Field& f : fields()) {
    for (int trial = 0; trial < 30; ++trial) {
      Matrix m = random_matrix(f, 4, 4, rng);
      auto inv = inverse(m);
      CHECK(inv.has_value() == (rank(m) == 4));
      if (inv) {
        CHECK(m * *inv == Matrix::identity(f, 4));
        CHECK(*inv * m == Matrix::identity(f, 4));
      }
      CHECK(m.pow(3) == m * m * m);
      CHECK(m.pow(0) == Matrix::identity(f, 4));
    }
  }
}

TEST_CASE("semilinear kernel and image over extension fields") {
  std::mt19937_64 rng(9);
  for (const Field& f : fields()) {
    for (int trial = 0; trial < 30; ++trial) {
      std::size_t n = 1 + rng() % 3;
      SemilinearMap L{random_matrix(f, n, n, rng, f.size()), random_matrix(f, n, n, rng, f.size())};
      auto ker = semilinear_kernel(L);
      auto img = image_additive(L);
      CHECK(ker.size() + img.size() == n * static_cast<std::size_t>(f.k()));
      for (const auto& v : ker) CHECK(is_zero(L.apply(v)));
      for (const auto& v : fp_span_elements(f, n, ker)) CHECK(is_zero(L.apply(v)));
      Vec x = random_vec(f, n, rng);
      Vec t = L.apply(x);
      auto pre = additive_solve(f, n, n, [&](const Vec& v) { return L.apply(v); }, t);
      REQUIRE(pre.has_value());
      CHECK(L.apply(*pre) == t);
    }
  }
}

TEST_CASE("semilinear kernel counts by brute force") {
  Field f = Field::extension(2, 2);
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 20; ++trial) {
    SemilinearMap L{random_matrix(f, 2, 2, rng, 2), random_matrix(f, 2, 2, rng, 2)};
    std::size_t count = 0;
    for (Fe a : f.elements())
      for (Fe b : f.elements())
        if (is_zero(L.apply({a, b}))) ++count;
    std::size_t expected = 1;
    for (std::size_t i = 0; i < semilinear_kernel(L).size(); ++i) expected *= 2;
    CHECK(count == expected);
  }
}

TEST_CASE("sparse echelon agrees with dense elimination") {
  std::mt19937_64 rng(17);
  for (const Field& f : fields()) {
    for (int trial = 0; trial < 30; ++trial) {
      std::size_t r = 1 + rng() % 8, c = 1 + rng() % 8;
      Matrix m = random_matrix(f, r, c, rng, 2 * f.size());
      SparseEchelon se(f);
      for (std::size_t j = 0; j < c; ++j) {
        std::vector<Term> col;
        for (std::size_t i = 0; i < r; ++i)
          if (!m.at(i, j).is_zero()) col.push_back({i * 7 + 3, m.at(i, j)});
        se.insert(col);
      }
      CHECK(se.rank() == rank(m));
      for (const auto& rel : se.relations()) CHECK(is_zero(m.apply(rel)));
      Vec x = random_vec(f, c, rng);
      Vec b = m.apply(x);
      std::vector<Term> bt;
      for (std::size_t i = 0; i < r; ++i)
        if (!b[i].is_zero()) bt.push_back({i * 7 + 3, b[i]});
      auto sol = se.express(bt);
      REQUIRE(sol.has_value());
      CHECK(m.apply(*sol) == b);
      CHECK(se.contains(bt));
    }
  }
}

TEST_CASE("F_p span enumeration") {
  Field f = Field::prime(3);
  std::vector<Vec> basis{{f.one(), f.zero()}, {f.zero(), f.one()}};
  auto all = fp_span_elements(f, 2, basis);
  CHECK(all.size() == 9);
  CHECK(is_zero(all.front()));
  CHECK(fp_span_elements(f, 2, {}).size() == 1);
}
