#include "cohext/cobar.hpp"

#include <algorithm>

namespace cohext {

std::size_t h2_dim(std::size_t d) { return d * (d + 1) / 2; }

std::vector<std::pair<std::size_t, std::size_t>> h2_pairs(int p, std::size_t d) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = (p == 2 ? i : i + 1); j < d; ++j) out.emplace_back(i, j);
  return out;
}

H2Coord H2Coord::zero(const Field& f, std::size_t d) {
  H2Coord c;
  c.p = f.p();
  c.d = d;
  c.wedge = zero_vec(f, h2_pairs(f.p(), d).size());
  if (f.p() != 2) c.omega = zero_vec(f, d);
  return c;
}

H2Coord H2Coord::unflatten(const Field& f, std::size_t d, const Vec& v) {
  H2Coord c = zero(f, d);
  if (v.size() != c.wedge.size() + c.omega.size())
    throw Error(ErrorCode::DimensionMismatch, "wrong number of H^2 coordinates");
  std::copy(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(c.wedge.size()), c.wedge.begin());
  std::copy(v.begin() + static_cast<std::ptrdiff_t>(c.wedge.size()), v.end(), c.omega.begin());
  return c;
}

Vec H2Coord::flatten() const {
  Vec v = wedge;
  v.insert(v.end(), omega.begin(), omega.end());
  return v;
}

bool H2Coord::is_zero() const { return cohext::is_zero(wedge) && cohext::is_zero(omega); }

bool operator<(const H2Coord& a, const H2Coord& b) { return a.flatten() < b.flatten(); }

namespace {

// (C(p, i) / p) mod p for 0 < i < p.
int omega_coeff(int p, int i) {
  long long c = 1;
  for (int k = 1; k <= i; ++k) c = c * (p - i + k) / k;
  return static_cast<int>((c / p) % p);
}

// Linear H^2 coordinates of the class of a (x) b for a, b in h.
Vec tensor_class(const Field& f, const Vec& a, const Vec& b) {
  const int p = f.p();
  const std::size_t d = a.size();
  auto pairs = h2_pairs(p, d);
  Vec out = zero_vec(f, pairs.size());
  for (std::size_t q = 0; q < pairs.size(); ++q) {
    auto [i, j] = pairs[q];
    if (i == j)
      out[q] = a[i] * b[i];
    else if (p == 2)
      out[q] = a[i] * b[j] + a[j] * b[i];
    else
      out[q] = a[i] * b[j] - a[j] * b[i];
  }
  return out;
}

}  // namespace

Cobar::Cobar(TypeT t) : t_(std::move(t)), a_(t_.h), b2_(t_.field()), h2_(t_.field()) {
  rho_ = derivation_table(a_, t_.rho);
  const std::uint64_t n = a_.dim();
  rcop_.resize(n);
  for (std::uint64_t m = 1; m < n; ++m) rcop_[m] = a_.reduced_coproduct(a_.mono(m));

  for (std::uint64_t m = 1; m < n; ++m)
    if (a_.degree(m) >= 2) high_.push_back(m);
  for (std::uint64_t m : high_) {
    Tensor2 img = -rcop_[m];
    b2_.insert(img.terms());
    h2_.insert(img.terms());
  }

  const Field& f = field();
  const std::size_t d = t_.d();
  for (auto [i, j] : h2_pairs(f.p(), d))
    std_basis_.push_back(Tensor2::single(a_.key2(a_.gen_index(i), a_.gen_index(j)), f.one()));
  if (f.p() != 2)
    for (std::size_t i = 0; i < d; ++i) std_basis_.push_back(omega(unit_vec(f, d, i)));
  for (const Tensor2& s : std_basis_) h2_.insert(s.terms());
}

AlgElem Cobar::rho(const AlgElem& x) const { return a_.apply(x, rho_); }

Tensor2 Cobar::rho(const Tensor2& x) const {
  Accumulator acc(field(), a_.dim() * a_.dim());
  for (const Term& t : x.terms()) {
    auto [l, r] = a_.split2(t.key);
    for (const Term& s : rho_[l].terms()) acc.add(a_.key2(s.key, r), t.c * s.c);
    for (const Term& s : rho_[r].terms()) acc.add(a_.key2(l, s.key), t.c * s.c);
  }
  return acc.take_combo<Tensor2Tag>();
}

Tensor3 Cobar::rho(const Tensor3& x) const {
  const std::uint64_t n = a_.dim();
  Accumulator acc(field(), n * n * n);
  for (const Term& t : x.terms()) {
    std::uint64_t c3 = t.key % n, c2 = (t.key / n) % n, c1 = t.key / (n * n);
    for (const Term& s : rho_[c1].terms()) acc.add(a_.key3(s.key, c2, c3), t.c * s.c);
    for (const Term& s : rho_[c2].terms()) acc.add(a_.key3(c1, s.key, c3), t.c * s.c);
    for (const Term& s : rho_[c3].terms()) acc.add(a_.key3(c1, c2, s.key), t.c * s.c);
  }
  return acc.take_combo<Tensor3Tag>();
}

Tensor2 Cobar::d1(const AlgElem& a) const {
  if (!a_.counit(a).is_zero()) throw Error(ErrorCode::NotAugmented, "d1 is defined on the augmentation ideal");
  Tensor2 r;
  for (const Term& t : a.terms()) r.add_scaled(rcop_[t.key], -t.c);
  return r;
}

Tensor3 Cobar::d2(const Tensor2& t) const {
  if (!a_.in_augmentation(t)) throw Error(ErrorCode::NotAugmented, "d2 is defined on A+ (x) A+");
  Tensor3 r;
  for (const Term& x : t.terms()) {
    auto [l, rr] = a_.split2(x.key);
    r.add_scaled(a_.tensor(rcop_[l], a_.mono(rr)), -x.c);
    r.add_scaled(a_.tensor(a_.mono(l), rcop_[rr]), x.c);
  }
  return r;
}

Tensor2 Cobar::omega(const Vec& x) const {
  const int p = field().p();
  AlgElem e = a_.embed(x);
  std::vector<AlgElem> powers(static_cast<std::size_t>(p));
  powers[0] = a_.one();
  for (int i = 1; i < p; ++i) powers[i] = a_.mult(powers[i - 1], e);
  Tensor2 r;
  for (int i = 1; i < p; ++i) r.add_scaled(a_.tensor(powers[i], powers[p - i]), field().from_int(omega_coeff(p, i)));
  return r;
}

namespace {

template <class T>
T calD_rec(const Cobar& c, int m, const T& x) {
  const auto p = static_cast<std::uint64_t>(c.field().p());
  T cur = x;
  std::uint64_t prev = 1;
  for (int k = 1; k <= m; ++k) {
    std::uint64_t pk = prev * p;
    cur = c.calP(cur) + c.rho_pow(cur, pk - prev);
    prev = pk;
  }
  return cur;
}

template <class T>
T calD_closed_impl(const Cobar& c, int m, const T& x) {
  const auto p = static_cast<std::uint64_t>(c.field().p());
  T cur = x;
  std::uint64_t pk = 1;
  for (int k = 1; k <= m; ++k) {
    pk *= p;
    cur = c.calP(cur) + c.rho_pow(x, pk - 1);
  }
  return cur;
}

template <class T>
T phi_impl(const Cobar& c, const T& x) {
  const auto p = static_cast<std::uint64_t>(c.field().p());
  const auto& lambdas = c.type().g.lambdas;
  T cur = x;
  T total;
  std::uint64_t prev = 1;
  for (std::size_t k = 0; k < lambdas.size(); ++k) {
    total.add_scaled(cur, lambdas[k]);
    std::uint64_t pk = prev * p;
    cur = c.calP(cur) + c.rho_pow(cur, pk - prev);
    prev = pk;
  }
  return total + cur;
}

}  // namespace

AlgElem Cobar::calD(int m, const AlgElem& x) const { return calD_rec(*this, m, x); }
Tensor2 Cobar::calD(int m, const Tensor2& x) const { return calD_rec(*this, m, x); }
Tensor3 Cobar::calD(int m, const Tensor3& x) const { return calD_rec(*this, m, x); }
AlgElem Cobar::calD_closed(int m, const AlgElem& x) const { return calD_closed_impl(*this, m, x); }
Tensor2 Cobar::calD_closed(int m, const Tensor2& x) const { return calD_closed_impl(*this, m, x); }
Tensor3 Cobar::calD_closed(int m, const Tensor3& x) const { return calD_closed_impl(*this, m, x); }
AlgElem Cobar::Phi(const AlgElem& x) const { return phi_impl(*this, x); }
Tensor2 Cobar::Phi(const Tensor2& x) const { return phi_impl(*this, x); }
Tensor3 Cobar::Phi(const Tensor3& x) const { return phi_impl(*this, x); }

Vec Cobar::Phi_h(const Vec& v) const { return a_.linear_part(Phi(a_.embed(v))); }

bool Cobar::is_cocycle(const Tensor2& t) const { return d2(t).is_zero(); }

std::optional<AlgElem> Cobar::coboundary_witness(const Tensor2& t) const {
  auto c = b2_.express(t.terms());
  if (!c) return std::nullopt;
  std::vector<Term> terms;
  for (std::size_t g = 0; g < high_.size(); ++g)
    if (!(*c)[g].is_zero()) terms.push_back({high_[g], (*c)[g]});
  return AlgElem::from_sorted(std::move(terms));
}

AlgElem Cobar::is_coboundary(const Tensor2& t) const {
  auto w = coboundary_witness(t);
  if (!w) throw Error(ErrorCode::NotCoboundary, "tensor is not a coboundary");
  return *w;
}

Tensor2 Cobar::standard(const H2Coord& xi) const {
  const Field& f = field();
  auto pairs = h2_pairs(f.p(), t_.d());
  Tensor2 r;
  for (std::size_t q = 0; q < pairs.size(); ++q) r.add_scaled(std_basis_[q], xi.wedge.at(q));
  if (f.p() != 2) r += omega(xi.omega);
  return r;
}

Vec Cobar::h2_linear(const Tensor2& t) const {
  if (!a_.in_augmentation(t) || !is_cocycle(t)) throw Error(ErrorCode::NotCocycle, "tensor is not a 2-cocycle");
  auto c = h2_.express(t.terms());
  if (!c) throw Error(ErrorCode::NotCocycle, "tensor is not a 2-cocycle");
  return Vec(c->begin() + static_cast<std::ptrdiff_t>(high_.size()), c->end());
}

Cobar::Reduction Cobar::h2_reduce(const Tensor2& t) const {
  Vec lin = h2_linear(t);
  const Field& f = field();
  H2Coord coord = H2Coord::unflatten(f, t_.d(), lin);
  if (f.p() != 2) coord.omega = frobenius_inv(coord.omega);
  auto w = coboundary_witness(t - standard(coord));
  if (!w) throw Error(ErrorCode::InvalidData, "class reduction left a non-coboundary remainder");
  return {std::move(coord), std::move(*w)};
}

bool Cobar::is_z_cocycle(const Tensor2& chi) const {
  if (!a_.in_augmentation(chi) || !is_cocycle(chi)) throw Error(ErrorCode::NotCocycle, "tensor is not a 2-cocycle");
  return b2_.contains(Phi(chi).terms());
}

bool Cobar::is_z_characteristic(const H2Coord& xi) const {
  return cohext::is_zero(h2_linear(Phi(standard(xi))));
}

Cobar::Admissibility Cobar::is_admissible(const H2Coord& xi) const {
  auto base = coboundary_witness(Phi(standard(xi)));
  if (!base) throw Error(ErrorCode::NotZCharacteristic, "class is not z-characteristic");
  Admissibility res;
  res.base = *base;
  AlgElem r = rho(*base);
  if (!a_.higher_part(r).is_zero() || !a_.counit(r).is_zero()) return res;
  auto sol = solve(t_.rho, scale(a_.linear_part(r), -field().one()));
  if (!sol) return res;
  res.admissible = true;
  res.witness = *base + a_.embed(sol->x);
  return res;
}

std::vector<H2Coord> Cobar::zchar_basis() const {
  const Field& f = field();
  const int p = f.p();
  const std::size_t d = t_.d();
  const Fe lambda = t_.lambda();
  auto pairs = h2_pairs(p, d);

  std::vector<Matrix> rpow{Matrix::identity(f, d)};
  for (int k = 1; k < p; ++k) rpow.push_back(t_.rho * rpow.back());

  AdditiveFn wedge_map = [&](const Vec& mu) {
    Vec out = zero_vec(f, pairs.size());
    for (std::size_t q = 0; q < pairs.size(); ++q) {
      if (mu[q].is_zero()) continue;
      auto [i, j] = pairs[q];
      Vec ei = unit_vec(f, d, i), ej = unit_vec(f, d, j);
      out = add(out, scale(tensor_class(f, t_.h.pmap.column(i), t_.h.pmap.column(j)), mu[q].frob()));
      out = add(out, scale(tensor_class(f, ei, ej), lambda * mu[q]));
      for (int k = 0; k < p; ++k) {
        Fe c = f.from_int(binom_mod(p - 1, k, p)) * mu[q];
        out = add(out, scale(tensor_class(f, rpow[k].column(i), rpow[p - 1 - k].column(j)), c));
      }
    }
    return out;
  };

  std::vector<H2Coord> basis;
  for (const Vec& v : additive_kernel(f, pairs.size(), pairs.size(), wedge_map)) {
    H2Coord c = H2Coord::zero(f, d);
    c.wedge = v;
    basis.push_back(std::move(c));
  }
  if (p != 2) {
    SemilinearMap om{t_.h.pmap, Matrix::identity(f, d) * lambda.frob_inv()};
    for (const Vec& v : semilinear_kernel(om)) {
      H2Coord c = H2Coord::zero(f, d);
      c.omega = v;
      basis.push_back(std::move(c));
    }
  }
  return basis;
}

std::vector<H2Coord> Cobar::zchar_basis_generic() const {
  const Field& f = field();
  const std::size_t d = t_.d();
  const std::size_t dim = h2_dim(d);
  std::vector<H2Coord> basis;
  for (const Vec& v : additive_kernel(f, dim, dim, [&](const Vec& x) {
         return h2_linear(Phi(standard(H2Coord::unflatten(f, d, x))));
       }))
    basis.push_back(H2Coord::unflatten(f, d, v));
  return basis;
}

std::vector<H2Coord> Cobar::zchar_enumerate(std::uint64_t budget) const {
  auto basis = t_.n() == 1 ? zchar_basis() : zchar_basis_generic();
  std::uint64_t count = 1;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    count *= static_cast<std::uint64_t>(field().p());
    if (count > budget) throw Error(ErrorCode::BudgetExceeded, "too many z-characteristic classes to list");
  }
  std::vector<Vec> flat;
  for (const auto& b : basis) flat.push_back(b.flatten());
  std::vector<H2Coord> out;
  for (const Vec& v : fp_span_elements(field(), h2_dim(t_.d()), flat))
    out.push_back(H2Coord::unflatten(field(), t_.d(), v));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace cohext
