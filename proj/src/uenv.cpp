#include "cohext/uenv.hpp"

#include <algorithm>
#include <numeric>

#include "cohext/sparse.hpp"

namespace cohext {

namespace {
constexpr std::uint64_t kTableLimit = 128;
}

UEnv::UEnv(AbelianRLA h) : h_(std::move(h)), p_(h_.field.p()), n_(1) {
  const std::size_t d = h_.d;
  for (std::size_t i = 0; i < d; ++i) {
    pow_p_.push_back(n_);
    n_ *= static_cast<std::uint64_t>(p_);
  }
  degree_.resize(n_);
  for (std::uint64_t m = 0; m < n_; ++m) {
    auto e = exps(m);
    degree_[m] = std::accumulate(e.begin(), e.end(), 0);
  }

  std::vector<std::uint64_t> order(n_);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) { return degree_[a] < degree_[b]; });

  const Field& f = h_.field;
  times_gen_.resize(n_ * d);
  for (std::uint64_t m : order) {
    for (std::size_t i = 0; i < d; ++i) {
      int s = static_cast<int>((m / pow_p_[i]) % static_cast<std::uint64_t>(p_));
      if (s < p_ - 1) {
        times_gen_[m * d + i] = AlgElem::single(m + pow_p_[i], f.one());
        continue;
      }
      // x_i^p = x_i^{[p]}, a linear combination of generators.
      const std::uint64_t rest = m - static_cast<std::uint64_t>(p_ - 1) * pow_p_[i];
      AlgElem acc;
      for (std::size_t j = 0; j < d; ++j) {
        Fe c = h_.pmap.at(j, i);
        if (!c.is_zero()) acc.add_scaled(times_gen_[rest * d + j], c);
      }
      times_gen_[m * d + i] = std::move(acc);
    }
  }

  if (n_ <= kTableLimit) {
    table_.resize(n_ * n_);
    for (std::uint64_t a = 0; a < n_; ++a)
      for (std::uint64_t b = 0; b < n_; ++b) table_[a * n_ + b] = compute_mono_mult(a, b);
  }

  pw_.resize(n_);
  std::vector<AlgElem> gen_p(d);
  for (std::size_t i = 0; i < d; ++i) gen_p[i] = embed(h_.pmap.column(i));
  for (std::uint64_t m = 0; m < n_; ++m) {
    AlgElem r = one();
    auto e = exps(m);
    for (std::size_t i = 0; i < d; ++i)
      for (int k = 0; k < e[i]; ++k) r = mult(r, gen_p[i]);
    pw_[m] = std::move(r);
  }

  cop_.resize(n_);
  for (std::uint64_t m = 0; m < n_; ++m) {
    auto sigma = exps(m);
    std::vector<Term> terms;
    std::vector<int> tau(d, 0);
    while (true) {
      int c = 1;
      std::uint64_t left = 0, right = 0;
      for (std::size_t i = 0; i < d; ++i) {
        c = c * binom_mod(sigma[i], tau[i], p_) % p_;
        left += static_cast<std::uint64_t>(tau[i]) * pow_p_[i];
        right += static_cast<std::uint64_t>(sigma[i] - tau[i]) * pow_p_[i];
      }
      if (c) terms.push_back({key2(left, right), f.from_int(c)});
      std::size_t i = 0;
      for (; i < d; ++i) {
        if (tau[i] < sigma[i]) {
          ++tau[i];
          break;
        }
        tau[i] = 0;
      }
      if (i == d) break;
    }
    cop_[m] = Tensor2::from_terms(std::move(terms));
  }
}

std::vector<int> UEnv::exps(std::uint64_t m) const {
  if (m >= n_) throw Error(ErrorCode::OutOfRange, "monomial index out of range");
  std::vector<int> e(h_.d);
  for (std::size_t i = 0; i < h_.d; ++i) {
    e[i] = static_cast<int>(m % static_cast<std::uint64_t>(p_));
    m /= static_cast<std::uint64_t>(p_);
  }
  return e;
}

std::uint64_t UEnv::monomial(std::span<const int> e) const {
  if (e.size() != h_.d) throw Error(ErrorCode::DimensionMismatch, "exponent vector has wrong length");
  std::uint64_t m = 0;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] < 0 || e[i] >= p_) throw Error(ErrorCode::OutOfRange, "exponent outside [0, p)");
    m += static_cast<std::uint64_t>(e[i]) * pow_p_[i];
  }
  return m;
}

AlgElem UEnv::embed(const Vec& v) const {
  if (v.size() != h_.d) throw Error(ErrorCode::DimensionMismatch, "vector length differs from dim h");
  std::vector<Term> terms;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!v[i].is_zero()) terms.push_back({pow_p_[i], v[i]});
  return AlgElem::from_terms(std::move(terms));
}

Vec UEnv::linear_part(const AlgElem& a) const {
  Vec v = zero_vec(field(), h_.d);
  for (std::size_t i = 0; i < h_.d; ++i) v[i] = a.coeff(pow_p_[i], field().zero());
  return v;
}

AlgElem UEnv::higher_part(const AlgElem& a) const {
  std::vector<Term> terms;
  for (const Term& t : a.terms())
    if (degree_[t.key] >= 2) terms.push_back(t);
  return AlgElem::from_sorted(std::move(terms));
}

AlgElem UEnv::compute_mono_mult(std::uint64_t a, std::uint64_t b) const {
  const std::size_t d = h_.d;
  AlgElem cur = mono(a);
  auto e = exps(b);
  for (std::size_t i = 0; i < d; ++i) {
    for (int k = 0; k < e[i]; ++k) {
      AlgElem next;
      for (const Term& t : cur.terms()) next.add_scaled(times_gen_[t.key * d + i], t.c);
      cur = std::move(next);
    }
  }
  return cur;
}

AlgElem UEnv::mono_mult(std::uint64_t a, std::uint64_t b) const {
  if (!table_.empty()) return table_[a * n_ + b];
  return compute_mono_mult(a, b);
}

void UEnv::mult_mono_into(std::uint64_t m, Fe c, const AlgElem& b, Accumulator& acc) const {
  for (const Term& t : b.terms()) {
    Fe s = c * t.c;
    if (!table_.empty()) {
      for (const Term& r : table_[m * n_ + t.key].terms()) acc.add(r.key, s * r.c);
    } else {
      AlgElem prod = compute_mono_mult(m, t.key);
      for (const Term& r : prod.terms()) acc.add(r.key, s * r.c);
    }
  }
}

AlgElem UEnv::mult(const AlgElem& a, const AlgElem& b) const {
  if (a.is_zero() || b.is_zero()) return {};
  Accumulator acc(field(), n_);
  for (const Term& t : a.terms()) mult_mono_into(t.key, t.c, b, acc);
  return acc.take_combo<AlgTag>();
}

AlgElem UEnv::pow(const AlgElem& a, std::uint64_t e) const {
  AlgElem result = one();
  AlgElem base = a;
  while (e) {
    if (e & 1) result = mult(result, base);
    e >>= 1;
    if (e) base = mult(base, base);
  }
  return result;
}

AlgElem UEnv::pth_power(const AlgElem& a) const {
  Accumulator acc(field(), n_);
  for (const Term& t : a.terms()) {
    Fe c = t.c.frob();
    for (const Term& r : pw_[t.key].terms()) acc.add(r.key, c * r.c);
  }
  return acc.take_combo<AlgTag>();
}

Tensor2 UEnv::coproduct(const AlgElem& a) const {
  Tensor2 r;
  for (const Term& t : a.terms()) r.add_scaled(cop_[t.key], t.c);
  return r;
}

Tensor2 UEnv::reduced_coproduct(const AlgElem& a) const {
  if (!counit(a).is_zero()) throw Error(ErrorCode::NotAugmented, "reduced coproduct needs an element of the augmentation ideal");
  Tensor2 r = coproduct(a);
  r -= tensor(a, one());
  r -= tensor(one(), a);
  return r;
}

AlgElem UEnv::antipode(const AlgElem& a) const {
  std::vector<Term> terms = a.terms();
  for (Term& t : terms)
    if (degree_[t.key] % 2) t.c = -t.c;
  return AlgElem::from_sorted(std::move(terms));
}

std::vector<AlgElem> UEnv::primitive_basis() const {
  SparseEchelon se(field());
  for (std::uint64_t m = 1; m < n_; ++m) se.insert(reduced_coproduct(mono(m)).terms());
  std::vector<AlgElem> out;
  for (const Vec& rel : se.relations()) {
    std::vector<Term> terms;
    for (std::size_t g = 0; g < rel.size(); ++g)
      if (!rel[g].is_zero()) terms.push_back({g + 1, rel[g]});
    out.push_back(AlgElem::from_sorted(std::move(terms)));
  }
  return out;
}

Tensor2 UEnv::tensor(const AlgElem& a, const AlgElem& b) const {
  std::vector<Term> terms;
  terms.reserve(a.size() * b.size());
  for (const Term& x : a.terms())
    for (const Term& y : b.terms()) terms.push_back({key2(x.key, y.key), x.c * y.c});
  return Tensor2::from_sorted(std::move(terms));
}

Tensor3 UEnv::tensor(const Tensor2& a, const AlgElem& b) const {
  std::vector<Term> terms;
  terms.reserve(a.size() * b.size());
  for (const Term& x : a.terms())
    for (const Term& y : b.terms()) terms.push_back({x.key * n_ + y.key, x.c * y.c});
  return Tensor3::from_sorted(std::move(terms));
}

Tensor3 UEnv::tensor(const AlgElem& a, const Tensor2& b) const {
  std::vector<Term> terms;
  terms.reserve(a.size() * b.size());
  for (const Term& x : a.terms())
    for (const Term& y : b.terms()) terms.push_back({x.key * n_ * n_ + y.key, x.c * y.c});
  return Tensor3::from_sorted(std::move(terms));
}

Tensor2 UEnv::mult(const Tensor2& a, const Tensor2& b) const {
  Accumulator acc(field(), n_ * n_);
  for (const Term& x : a.terms()) {
    auto [x1, x2] = split2(x.key);
    for (const Term& y : b.terms()) {
      auto [y1, y2] = split2(y.key);
      AlgElem l = mono_mult(x1, y1);
      AlgElem r = mono_mult(x2, y2);
      Fe c = x.c * y.c;
      for (const Term& s : l.terms())
        for (const Term& t : r.terms()) acc.add(key2(s.key, t.key), c * s.c * t.c);
    }
  }
  return acc.take_combo<Tensor2Tag>();
}

Tensor2 UEnv::pth_power(const Tensor2& t) const {
  Accumulator acc(field(), n_ * n_);
  for (const Term& x : t.terms()) {
    auto [a, b] = split2(x.key);
    Fe c = x.c.frob();
    for (const Term& s : pw_[a].terms())
      for (const Term& r : pw_[b].terms()) acc.add(key2(s.key, r.key), c * s.c * r.c);
  }
  return acc.take_combo<Tensor2Tag>();
}

Tensor3 UEnv::pth_power(const Tensor3& t) const {
  Accumulator acc(field(), n_ * n_ * n_);
  for (const Term& x : t.terms()) {
    std::uint64_t c3 = x.key % n_, c2 = (x.key / n_) % n_, c1 = x.key / (n_ * n_);
    Fe c = x.c.frob();
    for (const Term& s : pw_[c1].terms())
      for (const Term& r : pw_[c2].terms())
        for (const Term& u : pw_[c3].terms()) acc.add(key3(s.key, r.key, u.key), c * s.c * r.c * u.c);
  }
  return acc.take_combo<Tensor3Tag>();
}

Tensor2 UEnv::apply_each(const Tensor2& t, const std::vector<AlgElem>& f) const {
  Accumulator acc(field(), n_ * n_);
  for (const Term& x : t.terms()) {
    auto [a, b] = split2(x.key);
    for (const Term& s : f[a].terms())
      for (const Term& r : f[b].terms()) acc.add(key2(s.key, r.key), x.c * s.c * r.c);
  }
  return acc.take_combo<Tensor2Tag>();
}

Tensor3 UEnv::apply_each(const Tensor3& t, const std::vector<AlgElem>& f) const {
  Accumulator acc(field(), n_ * n_ * n_);
  for (const Term& x : t.terms()) {
    std::uint64_t c3 = x.key % n_, c2 = (x.key / n_) % n_, c1 = x.key / (n_ * n_);
    for (const Term& s : f[c1].terms())
      for (const Term& r : f[c2].terms())
        for (const Term& u : f[c3].terms()) acc.add(key3(s.key, r.key, u.key), x.c * s.c * r.c * u.c);
  }
  return acc.take_combo<Tensor3Tag>();
}

AlgElem UEnv::apply(const AlgElem& a, const std::vector<AlgElem>& f) const {
  AlgElem r;
  for (const Term& t : a.terms()) r.add_scaled(f[t.key], t.c);
  return r;
}

bool UEnv::in_augmentation(const Tensor2& t) const {
  for (const Term& x : t.terms()) {
    auto [a, b] = split2(x.key);
    if (a == 0 || b == 0) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------

std::vector<AlgElem> derivation_table(const UEnv& a, const Matrix& rho) {
  const std::size_t d = a.d();
  if (rho.rows() != d || rho.cols() != d) throw Error(ErrorCode::DimensionMismatch, "rho must be d x d");
  std::vector<AlgElem> images(d);
  for (std::size_t i = 0; i < d; ++i) images[i] = a.embed(rho.column(i));
  std::vector<AlgElem> table(a.dim());
  for (std::uint64_t m = 0; m < a.dim(); ++m) {
    auto e = a.exps(m);
    AlgElem r;
    for (std::size_t i = 0; i < d; ++i) {
      if (!e[i]) continue;
      r.add_scaled(a.mult(a.mono(m - a.gen_index(i)), images[i]), a.field().from_int(e[i]));
    }
    table[m] = std::move(r);
  }
  return table;
}

AlgElem rho_apply(const UEnv& a, const Matrix& rho, const AlgElem& x) {
  return a.apply(x, derivation_table(a, rho));
}

ModuleCheck module_hopf_check(const UEnv& a, const std::vector<AlgElem>& table, int max_degree) {
  const std::uint64_t n = a.dim();
  if (table.size() != n) throw Error(ErrorCode::DimensionMismatch, "derivation table must cover every monomial");
  auto within = [&](std::uint64_t m) { return max_degree < 0 || a.degree(m) <= max_degree; };
  const std::size_t d = a.d();
  ModuleCheck res;
  auto fail = [&](const char* what, std::uint64_t m) {
    res.ok = false;
    res.failure = what;
    res.witness = m;
    return res;
  };
  if (!table[0].is_zero()) return fail("unit", 0);

  for (std::uint64_t m = 1; m < n; ++m) {
    if (!within(m)) continue;
    auto sigma = a.exps(m);
    // Leibniz on every exponent-wise factorisation m = u * v.
    std::vector<int> tau(d, 0);
    while (true) {
      std::uint64_t u = 0;
      for (std::size_t i = 0; i < d; ++i) u += static_cast<std::uint64_t>(tau[i]) * a.gen_index(i);
      std::uint64_t v = m - u;
      if (u != 0 && v != 0) {
        AlgElem rhs = a.mult(table[u], a.mono(v)) + a.mult(a.mono(u), table[v]);
        if (!(table[m] == rhs)) return fail("leibniz", m);
      }
      std::size_t i = 0;
      for (; i < d; ++i) {
        if (tau[i] < sigma[i]) {
          ++tau[i];
          break;
        }
        tau[i] = 0;
      }
      if (i == d) break;
    }
    // Coderivation: Delta(delta x) = (delta (x) 1 + 1 (x) delta) Delta(x).
    Tensor2 lhs = a.coproduct(table[m]);
    Tensor2 rhs;
    for (const Term& t : a.mono_coproduct(m).terms()) {
      auto [l, r] = a.split2(t.key);
      rhs.add_scaled(a.tensor(table[l], a.mono(r)), t.c);
      rhs.add_scaled(a.tensor(a.mono(l), table[r]), t.c);
    }
    if (!(lhs == rhs)) return fail("coderivation", m);
    if (!a.counit(table[m]).is_zero()) return fail("counit", m);
  }

  // Leibniz across products that need p-map reduction.
  for (std::uint64_t u = 1; u < n; ++u) {
    if (!within(u)) continue;
    for (std::uint64_t v = u; v < n; ++v) {
      if (!within(v)) continue;
      AlgElem prod = a.mono_mult(u, v);
      AlgElem lhs = a.apply(prod, table);
      AlgElem rhs = a.mult(table[u], a.mono(v)) + a.mult(a.mono(u), table[v]);
      if (!(lhs == rhs)) return fail("leibniz_reduced", u);
    }
  }
  return res;
}

std::vector<AlgElem> extend_automorphism(const UEnv& a, const Matrix& g) {
  const std::size_t d = a.d();
  if (g.rows() != d || g.cols() != d) throw Error(ErrorCode::DimensionMismatch, "automorphism must be d x d");
  if (!inverse(g)) throw Error(ErrorCode::NotInvertible, "matrix is not invertible");
  const Matrix& pm = a.rla().pmap;
  if (!(g * pm == pm * g.frobenius())) throw Error(ErrorCode::NotPMapCompatible, "g does not commute with the p-map");
  std::vector<AlgElem> images(d);
  for (std::size_t i = 0; i < d; ++i) images[i] = a.embed(g.column(i));
  std::vector<AlgElem> table(a.dim());
  for (std::uint64_t m = 0; m < a.dim(); ++m) {
    auto e = a.exps(m);
    AlgElem r = a.one();
    for (std::size_t i = 0; i < d; ++i)
      for (int k = 0; k < e[i]; ++k) r = a.mult(r, images[i]);
    table[m] = std::move(r);
  }
  return table;
}

}  // namespace cohext
