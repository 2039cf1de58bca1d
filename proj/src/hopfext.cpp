#include "cohext/hopfext.hpp"

#include <deque>

namespace cohext {

namespace {

std::string mono_label(const UEnv& a, std::uint64_t m) {
  if (m == 0) return "1";
  auto e = a.exps(m);
  std::string s;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!s.empty()) s += "*";
    s += "x" + std::to_string(i + 1);
    if (e[i] > 1) s += "^" + std::to_string(e[i]);
  }
  return s;
}

std::string first_term(const UEnv& a, const AlgElem& x) {
  const Term& t = x.terms().front();
  return "coefficient " + std::to_string(t.c.code()) + " at " + mono_label(a, t.key);
}

std::string first_term(const UEnv& a, const Tensor2& x) {
  const Term& t = x.terms().front();
  auto [l, r] = a.split2(t.key);
  return "coefficient " + std::to_string(t.c.code()) + " at " + mono_label(a, l) + " (x) " + mono_label(a, r);
}

std::uint64_t ipow(std::uint64_t b, int e) {
  std::uint64_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

}  // namespace

bool same_type(const TypeT& a, const TypeT& b) {
  return a.field() == b.field() && a.h.pmap == b.h.pmap && a.rho == b.rho && a.g.lambdas == b.g.lambdas;
}

ValidationReport validate_data(const Cobar& c, const ExtData& data) {
  if (!same_type(c.type(), data.type)) throw Error(ErrorCode::TypeMismatch, "data type differs from the cobar type");
  ValidationReport rep = validate_type(data.type);
  const UEnv& a = c.algebra();
  const Fe eps = a.counit(data.theta);
  if (!eps.is_zero())
    rep.violations.push_back({"ThetaNotAugmented", "epsilon(Theta) = " + std::to_string(eps.code()), {}});

  if (!a.in_augmentation(data.chi)) {
    rep.violations.push_back({"ChiNotCocycle", "chi has a unit tensor factor", {}});
  } else if (Tensor3 d = c.d2(data.chi); !d.is_zero()) {
    rep.violations.push_back({"ChiNotCocycle", "d2(chi) != 0", {}});
  }

  AlgElem rt = c.rho(data.theta);
  if (!rt.is_zero()) rep.violations.push_back({"RhoThetaNonzero", "rho_z(Theta) has " + first_term(a, rt), {}});

  AlgElem theta_aug = data.theta - a.one() * eps;
  Tensor2 diff = c.Phi(data.chi) - c.d1(theta_aug);
  if (!diff.is_zero())
    rep.violations.push_back({"PhiChiMismatch", "Phi_z(chi) - d1(Theta) has " + first_term(a, diff), {}});
  return rep;
}

ValidationReport validate_data(const ExtData& data) {
  Cobar c(data.type);
  return validate_data(c, data);
}

// ---------------------------------------------------------------------------
// Generic structure checks

namespace {

class Checker {
 public:
  Checker(const HopfStructure& h, CheckReport& rep)
      : h_(h), f_(h.field()), n_(h.dim()), rep_(rep), z1_(f_, n_), z2_(f_, n_ * n_, kZeroLimit),
        z3_(f_, n_ * n_ * n_, kZeroLimit) {
    if (n_ * n_ <= kCacheLimit) {
      mult_.resize(n_ * n_);
      cop_.resize(n_);
      anti_.resize(n_);
    }
  }

  const std::vector<Term>& mult_of(std::uint64_t a, std::uint64_t b) {
    if (mult_.empty()) return scratch(h_.mult(a, b));
    auto& slot = mult_[a * n_ + b];
    if (!slot) slot = h_.mult(a, b);
    return *slot;
  }

  const std::vector<Term>& cop_of(std::uint64_t b) {
    if (cop_.empty()) return scratch(h_.coproduct(b));
    auto& slot = cop_[b];
    if (!slot) slot = h_.coproduct(b);
    return *slot;
  }

  const std::vector<Term>& anti_of(std::uint64_t b) {
    if (anti_.empty()) return scratch(h_.antipode(b));
    auto& slot = anti_[b];
    if (!slot) slot = h_.antipode(b);
    return *slot;
  }

  std::vector<Term> mult(std::span<const Term> u, std::span<const Term> v) {
    Accumulator acc(f_, n_);
    for (const Term& a : u)
      for (const Term& b : v)
        for (const Term& t : mult_of(a.key, b.key)) acc.add(t.key, a.c * b.c * t.c);
    return acc.take();
  }

  // Adds sign * (u v) in H (x) H to acc, for tensors with sorted keys, grouped by left factor.
  void tmult_into(std::span<const Term> u, std::span<const Term> v, Fe sign, Accumulator& acc) {
    const auto gu = groups(u), gv = groups(v);
    for (const auto& a : gu)
      for (const auto& b : gv) {
        for (const Term& s : a.terms)
          for (const Term& t : b.terms) {
            const Fe st = s.c * t.c;
            for (const Term& y : mult_of(s.key % n_, t.key % n_)) z1_.add(y.key, st * y.c);
          }
        const auto r = z1_.take_unordered();
        if (r.empty()) continue;
        for (const Term& x : mult_of(a.left, b.left)) {
          const Fe xc = sign * x.c;
          for (const Term& y : r) acc.add(x.key * n_ + y.key, xc * y.c);
        }
      }
  }

  struct Group {
    std::uint64_t left;
    std::span<const Term> terms;
  };

  std::vector<Group> groups(std::span<const Term> u) const {
    std::vector<Group> out;
    std::size_t i = 0;
    while (i < u.size()) {
      std::size_t j = i;
      const std::uint64_t left = u[i].key / n_;
      while (j < u.size() && u[j].key / n_ == left) ++j;
      out.push_back({left, u.subspan(i, j - i)});
      i = j;
    }
    return out;
  }

  std::vector<Term> basis(std::uint64_t b) const { return {{b, f_.one()}}; }
  std::vector<Term> scalar_unit(Fe c) const {
    if (c.is_zero()) return {};
    return {{h_.unit(), c}};
  }

  bool fail(const char* what, std::initializer_list<std::uint64_t> bs) {
    rep_.ok = false;
    rep_.failure = what;
    std::string w;
    for (std::uint64_t b : bs) {
      if (!w.empty()) w += ", ";
      w += h_.label(b);
    }
    rep_.witness = w;
    return false;
  }

  bool unit_checks() {
    const std::uint64_t u = h_.unit();
    ++rep_.checks;
    if (h_.counit(u) != f_.one()) return fail("counit_unit", {u});
    if (cop_of(u) != std::vector<Term>{{u * n_ + u, f_.one()}}) return fail("coproduct_unit", {u});
    return true;
  }

  bool single(std::uint64_t b) {
    ++rep_.checks;
    scratch_.clear();
    const std::uint64_t u = h_.unit();
    auto bb = basis(b);
    if (mult_of(u, b) != bb || mult_of(b, u) != bb) return fail("unit", {b});

    auto d = cop_of(b);
    Accumulator left(f_, n_), right(f_, n_);
    for (const Term& t : d) {
      left.add(t.key % n_, t.c * h_.counit(t.key / n_));
      right.add(t.key / n_, t.c * h_.counit(t.key % n_));
    }
    if (left.take() != bb || right.take() != bb) return fail("counit", {b});

    for (const Term& t : d) {
      std::uint64_t x = t.key / n_, y = t.key % n_;
      for (const Term& s : cop_of(x)) z3_.add(s.key * n_ + y, t.c * s.c);
      for (const Term& s : cop_of(y)) z3_.add(x * n_ * n_ + s.key, -(t.c * s.c));
    }
    if (!z3_.take_is_zero()) return fail("coassociativity", {b});

    Accumulator sl(f_, n_), sr(f_, n_);
    for (const Term& t : d) {
      std::uint64_t x = t.key / n_, y = t.key % n_;
      for (const Term& s : anti_of(x))
        for (const Term& m : mult_of(s.key, y)) sl.add(m.key, t.c * s.c * m.c);
      for (const Term& s : anti_of(y))
        for (const Term& m : mult_of(x, s.key)) sr.add(m.key, t.c * s.c * m.c);
    }
    auto expect = scalar_unit(h_.counit(b));
    if (sl.take() != expect || sr.take() != expect) return fail("antipode", {b});
    return true;
  }

  bool pair(std::uint64_t a, std::uint64_t b) {
    ++rep_.checks;
    scratch_.clear();
    const auto& ab = mult_of(a, b);
    Fe e = f_.zero();
    for (const Term& t : ab) e += t.c * h_.counit(t.key);
    if (e != h_.counit(a) * h_.counit(b)) return fail("counit_multiplicative", {a, b});
    const auto& da = cop_of(a);
    const auto& db = cop_of(b);
    for (const Term& t : ab)
      for (const Term& s : cop_of(t.key)) z2_.add(s.key, t.c * s.c);
    tmult_into(da, db, -f_.one(), z2_);
    if (!z2_.take_is_zero()) return fail("coproduct_multiplicative", {a, b});
    return true;
  }

  bool triple(std::uint64_t a, std::uint64_t b, std::uint64_t c) {
    ++rep_.checks;
    scratch_.clear();
    const auto& ab = mult_of(a, b);
    const auto& bc = mult_of(b, c);
    if (mult(ab, basis(c)) != mult(basis(a), bc)) return fail("associativity", {a, b, c});
    return true;
  }

 private:
  static constexpr std::uint64_t kCacheLimit = 1u << 20;
  static constexpr std::uint64_t kZeroLimit = std::uint64_t{1} << 25;

  const std::vector<Term>& scratch(std::vector<Term> v) {
    scratch_.push_back(std::move(v));
    return scratch_.back();
  }

  const HopfStructure& h_;
  Field f_;
  std::uint64_t n_;
  CheckReport& rep_;
  std::vector<std::optional<std::vector<Term>>> mult_, cop_, anti_;
  std::deque<std::vector<Term>> scratch_;
  Accumulator z1_, z2_, z3_;
};

}  // namespace

CheckReport check_structure(const HopfStructure& h, const CheckOptions& opt) {
  CheckReport rep;
  const std::uint64_t n = h.dim();
  rep.exhaustive = opt.automatic ? n <= opt.exhaustive_limit : opt.exhaustive;
  rep.seed = rep.exhaustive ? 0 : opt.seed;
  Checker c(h, rep);
  if (!c.unit_checks()) return rep;
  if (rep.exhaustive) {
    for (std::uint64_t a = 0; a < n; ++a)
      if (!c.single(a)) return rep;
    for (std::uint64_t a = 0; a < n; ++a)
      for (std::uint64_t b = 0; b < n; ++b)
        if (!c.pair(a, b)) return rep;
    for (std::uint64_t a = 0; a < n; ++a)
      for (std::uint64_t b = 0; b < n; ++b)
        for (std::uint64_t x = 0; x < n; ++x)
          if (!c.triple(a, b, x)) return rep;
    return rep;
  }
  std::mt19937_64 rng(opt.seed);
  std::uniform_int_distribution<std::uint64_t> pick(0, n - 1);
  for (int i = 0; i < opt.trials; ++i) {
    std::uint64_t a = pick(rng), b = pick(rng), x = pick(rng);
    if (!c.single(a) || !c.pair(a, b) || !c.triple(a, b, x)) return rep;
  }
  return rep;
}

// ---------------------------------------------------------------------------
// u(D)

HopfAlg::HopfAlg(ExtData data, bool validate) : data_(std::move(data)), cobar_(data_.type) {
  if (validate) {
    auto rep = validate_data(cobar_, data_);
    if (!rep.ok())
      throw Error(ErrorCode::InvalidData, rep.violations[0].condition + ": " + rep.violations[0].message);
  }
  const UEnv& a = base();
  const Field& f = field();
  n_ = a.dim();
  q_ = ipow(static_cast<std::uint64_t>(f.p()), data_.type.n());
  d_ = n_ * q_;

  rho_pow_.resize(q_);
  for (std::uint64_t m = 0; m < n_; ++m) rho_pow_[0].push_back(a.mono(m));
  for (std::uint64_t j = 1; j < q_; ++j)
    for (std::uint64_t m = 0; m < n_; ++m) rho_pow_[j].push_back(cobar_.rho(rho_pow_[j - 1][m]));

  const auto& lambdas = data_.type.g.lambdas;
  wr_.resize(2 * q_);
  for (std::uint64_t e = 0; e < q_; ++e) wr_[e] = HopfElem::single(key(0, e), f.one());
  for (std::uint64_t e = q_; e < 2 * q_; ++e) {
    Accumulator acc(f, d_);
    for (const Term& t : wr_[e - q_].terms()) {
      auto [m, k] = split(t.key);
      for (const Term& s : data_.theta.terms()) {
        AlgElem prod = a.mono_mult(s.key, m);
        for (const Term& r : prod.terms()) acc.add(key(r.key, k), -(t.c * s.c * r.c));
      }
    }
    std::uint64_t pi = 1;
    for (const Fe& l : lambdas) {
      if (!l.is_zero())
        for (const Term& t : wr_[e - q_ + pi].terms()) acc.add(t.key, -(l * t.c));
      pi *= static_cast<std::uint64_t>(f.p());
    }
    wr_[e] = acc.take_combo<HopfTag>();
  }

  const bool tabulate = d_ <= 243;
  if (tabulate) {
    mult_table_.resize(d_ * d_);
    for (std::uint64_t x = 0; x < d_; ++x)
      for (std::uint64_t y = 0; y < d_; ++y) mult_table_[x * d_ + y] = compute_mult(x, y);
  }

  HTensor2 dw = tensor(w(), one()) + tensor(one(), w()) + embed(data_.chi);
  dw_.push_back(tensor(one(), one()));
  for (std::uint64_t e = 1; e < q_; ++e) dw_.push_back(mult(dw_.back(), dw));

  HopfElem sw = -w();
  for (const Term& t : data_.chi.terms()) {
    auto [l, r] = a.split2(t.key);
    sw -= embed(a.mult(a.antipode(a.mono(l)), a.mono(r)) * t.c);
  }
  sw_.push_back(one());
  for (std::uint64_t e = 1; e < q_; ++e) sw_.push_back(mult(sw_.back(), sw));

  if (tabulate) {
    cop_table_.resize(d_);
    s_table_.resize(d_);
    for (std::uint64_t b = 0; b < d_; ++b) {
      cop_table_[b] = compute_coproduct(b);
      s_table_[b] = compute_antipode(b);
    }
  }
}

HopfElem HopfAlg::embed(const AlgElem& a) const { return HopfElem::from_sorted(a.terms()); }

HTensor2 HopfAlg::embed(const Tensor2& t) const {
  std::vector<Term> out;
  out.reserve(t.size());
  for (const Term& x : t.terms()) {
    auto [l, r] = base().split2(x.key);
    out.push_back({l * d_ + r, x.c});
  }
  return HTensor2::from_terms(std::move(out));
}

std::optional<AlgElem> HopfAlg::restrict_to_base(const HopfElem& u) const {
  for (const Term& t : u.terms())
    if (t.key >= n_) return std::nullopt;
  return AlgElem::from_sorted(u.terms());
}

std::vector<Term> HopfAlg::compute_mult(std::uint64_t x, std::uint64_t y) const {
  const UEnv& a = base();
  const Field& f = field();
  auto [m1, e1] = split(x);
  auto [m2, e2] = split(y);
  std::vector<AlgElem> coef(2 * q_);
  for (std::uint64_t j = 0; j <= e1; ++j) {
    int c = binom_mod(static_cast<long long>(e1), static_cast<long long>(j), f.p());
    if (c == 0 || rho_pow_[j][m2].is_zero()) continue;
    Accumulator acc(f, n_);
    a.mult_mono_into(m1, f.from_int(c), rho_pow_[j][m2], acc);
    coef[e1 - j + e2] += acc.take_combo<AlgTag>();
  }
  Accumulator out(f, d_);
  for (std::uint64_t e = 0; e < coef.size(); ++e) {
    if (coef[e].is_zero()) continue;
    if (e < q_) {
      for (const Term& t : coef[e].terms()) out.add(key(t.key, e), t.c);
      continue;
    }
    for (const Term& r : wr_[e].terms()) {
      auto [mr, er] = split(r.key);
      for (const Term& t : coef[e].terms()) {
        AlgElem prod = a.mono_mult(t.key, mr);
        for (const Term& s : prod.terms()) out.add(key(s.key, er), t.c * r.c * s.c);
      }
    }
  }
  return out.take();
}

std::vector<Term> HopfAlg::mult(std::uint64_t x, std::uint64_t y) const {
  if (!mult_table_.empty()) return mult_table_[x * d_ + y];
  return compute_mult(x, y);
}

std::vector<Term> HopfAlg::compute_coproduct(std::uint64_t b) const {
  const UEnv& a = base();
  auto [m, e] = split(b);
  Accumulator acc(field(), d_ * d_);
  for (const Term& c : a.mono_coproduct(m).terms()) {
    auto [l, r] = a.split2(c.key);
    for (const Term& t : dw_[e].terms()) {
      auto [l2, le] = split(t.key / d_);
      auto [r2, re] = split(t.key % d_);
      const AlgElem& lp = a.mono_mult(l, l2);
      const AlgElem& rp = a.mono_mult(r, r2);
      for (const Term& x : lp.terms())
        for (const Term& y : rp.terms()) acc.add(key(x.key, le) * d_ + key(y.key, re), c.c * t.c * x.c * y.c);
    }
  }
  return acc.take();
}

std::vector<Term> HopfAlg::coproduct(std::uint64_t b) const {
  if (!cop_table_.empty()) return cop_table_[b];
  return compute_coproduct(b);
}

std::vector<Term> HopfAlg::compute_antipode(std::uint64_t b) const {
  auto [m, e] = split(b);
  return mult(sw_[e], embed(base().antipode(base().mono(m)))).terms();
}

std::vector<Term> HopfAlg::antipode(std::uint64_t b) const {
  if (!s_table_.empty()) return s_table_[b];
  return compute_antipode(b);
}

std::string HopfAlg::label(std::uint64_t b) const {
  auto [m, e] = split(b);
  if (e == 0) return mono_label(base(), m);
  std::string s = m == 0 ? "" : mono_label(base(), m) + "*";
  s += "w";
  if (e > 1) s += "^" + std::to_string(e);
  return s;
}

HopfElem HopfAlg::mult(const HopfElem& u, const HopfElem& v) const {
  Accumulator acc(field(), d_);
  for (const Term& a : u.terms())
    for (const Term& b : v.terms())
      for (const Term& t : mult(a.key, b.key)) acc.add(t.key, a.c * b.c * t.c);
  return acc.take_combo<HopfTag>();
}

HopfElem HopfAlg::pow(const HopfElem& u, std::uint64_t e) const {
  HopfElem r = one();
  for (std::uint64_t i = 0; i < e; ++i) r = mult(r, u);
  return r;
}

HTensor2 HopfAlg::coproduct(const HopfElem& u) const {
  Accumulator acc(field(), d_ * d_);
  for (const Term& a : u.terms())
    for (const Term& t : coproduct(a.key)) acc.add(t.key, a.c * t.c);
  return acc.take_combo<HTensor2Tag>();
}

HopfElem HopfAlg::antipode(const HopfElem& u) const {
  Accumulator acc(field(), d_);
  for (const Term& a : u.terms())
    for (const Term& t : antipode(a.key)) acc.add(t.key, a.c * t.c);
  return acc.take_combo<HopfTag>();
}

HTensor2 HopfAlg::tensor(const HopfElem& a, const HopfElem& b) const {
  std::vector<Term> out;
  for (const Term& x : a.terms())
    for (const Term& y : b.terms()) out.push_back({x.key * d_ + y.key, x.c * y.c});
  return HTensor2::from_terms(std::move(out));
}

HTensor2 HopfAlg::mult(const HTensor2& a, const HTensor2& b) const {
  Accumulator acc(field(), d_ * d_);
  for (const Term& x : a.terms())
    for (const Term& y : b.terms()) {
      auto l = mult(x.key / d_, y.key / d_);
      auto r = mult(x.key % d_, y.key % d_);
      for (const Term& s : l)
        for (const Term& t : r) acc.add(s.key * d_ + t.key, x.c * y.c * s.c * t.c);
    }
  return acc.take_combo<HTensor2Tag>();
}

std::vector<HopfElem> HopfAlg::primitive_space() const {
  SparseEchelon ech(field());
  for (std::uint64_t b = 0; b < d_; ++b) {
    HTensor2 r = coproduct(basis(b)) - tensor(basis(b), one()) - tensor(one(), basis(b));
    ech.insert(r.terms());
  }
  std::vector<HopfElem> out;
  for (const Vec& rel : ech.relations()) {
    std::vector<Term> terms;
    for (std::uint64_t b = 0; b < rel.size(); ++b)
      if (!rel[b].is_zero()) terms.push_back({b, rel[b]});
    out.push_back(HopfElem::from_sorted(std::move(terms)));
  }
  return out;
}

CheckReport check_hopf_axioms(const HopfAlg& h, const CheckOptions& opt) {
  CheckReport rep = check_structure(h, opt);
  if (!rep.ok) return rep;
  const Cobar& c = h.cobar();
  std::uint64_t pm = 1;
  for (int m = 0; m <= h.data().type.n(); ++m) {
    ++rep.checks;
    HopfElem wp = h.pow(h.w(), pm);
    HTensor2 rhs = h.tensor(wp, h.one()) + h.tensor(h.one(), wp) + h.embed(c.calD(m, h.data().chi));
    if (h.coproduct(wp) != rhs) {
      rep.ok = false;
      rep.failure = "power_identity";
      rep.witness = "m=" + std::to_string(m);
      return rep;
    }
    pm *= static_cast<std::uint64_t>(h.field().p());
  }
  return rep;
}

bool thmAc_criterion(const Cobar& c, const Tensor2& chi) {
  const int n = c.type().n();
  std::vector<Vec> cols;
  for (int i = 0; i < n; ++i) cols.push_back(c.h2_linear(c.calD(i, chi)));
  Matrix m = Matrix::from_columns(c.field(), cols.front().size(), cols);
  return rank(m) == static_cast<std::size_t>(n);
}

bool thmAc_criterion(const HopfAlg& h) { return thmAc_criterion(h.cobar(), h.data().chi); }

AlgElem cleft_sigma(const HopfAlg& h, std::uint64_t i, std::uint64_t j) {
  const std::uint64_t q = h.wdeg();
  if (i >= q || j >= q) throw Error(ErrorCode::OutOfRange, "sigma arguments must be below p^n");
  const Field& f = h.field();
  const int p = f.p();
  const auto& lambdas = h.data().type.g.lambdas;

  std::vector<Vec> zr(2 * q, zero_vec(f, q));
  for (std::uint64_t e = 0; e < q; ++e) zr[e][e] = f.one();
  for (std::uint64_t e = q; e < 2 * q; ++e) {
    std::uint64_t pi = 1;
    for (const Fe& l : lambdas) {
      zr[e] = sub(zr[e], scale(zr[e - q + pi], l));
      pi *= static_cast<std::uint64_t>(p);
    }
  }

  std::vector<HopfElem> wpow{h.one()};
  for (std::uint64_t e = 1; e < 2 * q; ++e) wpow.push_back(h.mult(wpow.back(), h.w()));

  HopfElem s;
  for (std::uint64_t a = 0; a <= i; ++a)
    for (std::uint64_t b = 0; b <= j; ++b) {
      Fe c = f.from_int(binom_mod(static_cast<long long>(i), static_cast<long long>(a), p) *
                        binom_mod(static_cast<long long>(j), static_cast<long long>(b), p));
      if (c.is_zero()) continue;
      const Vec& z = zr[i - a + j - b];
      for (std::uint64_t k = 0; k < q; ++k) {
        if (z[k].is_zero()) continue;
        Fe sign = k % 2 ? -f.one() : f.one();
        s.add_scaled(wpow[a + b + k], c * z[k] * sign);
      }
    }
  auto r = h.restrict_to_base(s);
  if (!r) throw Error(ErrorCode::InvalidData, "cocycle value left the base algebra");
  return *r;
}

// ---------------------------------------------------------------------------
// Automorphisms and isomorphisms

AutElem aut_identity(const TypeT& t) { return {t.field().one(), Matrix::identity(t.field(), t.d())}; }

ValidationReport validate_aut(const TypeT& t, const AutElem& a) {
  ValidationReport rep;
  const Field& f = t.field();
  if (a.gamma.is_zero()) rep.violations.push_back({"invertible", "gamma = 0", {}});
  if (!inverse(a.g)) rep.violations.push_back({"invertible", "g is singular", {}});
  if (!(a.g * t.h.pmap == t.h.pmap * a.g.frobenius()))
    rep.violations.push_back({"pmap", "g does not commute with the p-map", {}});
  if (!(t.rho * a.g == a.g * t.rho * a.gamma))
    rep.violations.push_back({"rho", "rho g != gamma g rho", {}});
  const std::uint64_t p = static_cast<std::uint64_t>(f.p());
  const Fe top = a.gamma.pow(ipow(p, t.n()));
  std::uint64_t pi = 1;
  for (const Fe& l : t.g.lambdas) {
    if (!(l * (top - a.gamma.pow(pi))).is_zero()) {
      rep.violations.push_back({"lambda", "g does not preserve f(z)", {}});
      break;
    }
    pi *= p;
  }
  return rep;
}

AutElem aut_compose(const AutElem& outer, const AutElem& inner) {
  return {outer.gamma * inner.gamma, outer.g * inner.g};
}

AutElem aut_inverse(const AutElem& a) {
  auto gi = inverse(a.g);
  if (!gi || a.gamma.is_zero()) throw Error(ErrorCode::NotInvertible, "automorphism is not invertible");
  return {a.gamma.inv(), *gi};
}

std::vector<AlgElem> aut_table(const Cobar& c, const Matrix& g) { return extend_automorphism(c.algebra(), g); }

namespace {

Fe gamma_top(const Cobar& c, Fe gamma) {
  return gamma.pow(ipow(static_cast<std::uint64_t>(c.field().p()), c.type().n()));
}

}  // namespace

ExtData act_data(const Cobar& c, const AutElem& g, const ExtData& d) {
  return transport(c, d, AlgElem{}, g);
}

ExtData transport(const Cobar& c, const ExtData& d, const AlgElem& t, const AutElem& g) {
  if (!same_type(c.type(), d.type)) throw Error(ErrorCode::TypeMismatch, "data type differs from the cobar type");
  const UEnv& a = c.algebra();
  auto table = aut_table(c, g.g);
  AlgElem theta = d.theta;
  Tensor2 chi = d.chi;
  if (!t.is_zero()) {
    theta -= c.Phi(t);
    chi -= c.d1(t);
  }
  return {d.type, a.apply(theta, table) * gamma_top(c, g.gamma), a.apply_each(chi, table) * g.gamma};
}

bool iso_check(const Cobar& c, const AlgElem& t, const AutElem& g, const ExtData& dprime, const ExtData& d) {
  if (!same_type(c.type(), d.type) || !same_type(c.type(), dprime.type))
    throw Error(ErrorCode::TypeMismatch, "isomorphism data must share the type");
  if (!validate_aut(c.type(), g).ok()) return false;
  const UEnv& a = c.algebra();
  if (!a.counit(t).is_zero()) return false;
  AutElem gi = aut_inverse(g);
  auto table = aut_table(c, gi.g);
  AlgElem theta_back = a.apply(dprime.theta, table) * gamma_top(c, gi.gamma);
  if (!(c.Phi(t) == d.theta - theta_back)) return false;
  Tensor2 chi_back = a.apply_each(dprime.chi, table) * gi.gamma;
  Tensor2 dt = t.is_zero() ? Tensor2{} : c.d1(t);
  return dt == d.chi - chi_back;
}

IsoPair iso_compose(const Cobar& c, const IsoPair& first, const IsoPair& second) {
  AutElem gi = aut_inverse(first.g);
  AlgElem t = first.t + c.algebra().apply(second.t, aut_table(c, gi.g)) * gi.gamma;
  return {t, aut_compose(second.g, first.g)};
}

// ---------------------------------------------------------------------------
// Fixtures

ExtData alambda_data(const Field& f, Fe lambda) {
  TypeT t = types::alambda(f);
  Cobar c(t);
  const UEnv& a = c.algebra();
  AlgElem x = a.gen(0), y = a.gen(1);
  AlgElem theta = a.mult(a.pow(x, static_cast<std::uint64_t>(f.p() - 1)), y) - x;
  Tensor2 chi = a.tensor(x, y) * lambda + c.omega(unit_vec(f, 2, 0));
  return {std::move(t), std::move(theta), std::move(chi)};
}

ExtData random_valid_data(const Cobar& c, std::mt19937_64& rng) {
  const Field& f = c.field();
  const UEnv& a = c.algebra();
  std::uniform_int_distribution<int> coef(0, f.size() - 1);
  std::uniform_int_distribution<int> fp(0, f.p() - 1);

  H2Coord xi = H2Coord::zero(f, c.type().d());
  AlgElem base;
  auto basis = c.type().n() == 1 ? c.zchar_basis() : c.zchar_basis_generic();
  for (int attempt = 0; attempt < 4 && !basis.empty(); ++attempt) {
    Vec v = zero_vec(f, h2_dim(c.type().d()));
    for (const auto& b : basis) v = add(v, scale(b.flatten(), f.from_int(fp(rng))));
    H2Coord cand = H2Coord::unflatten(f, c.type().d(), v);
    auto adm = c.is_admissible(cand);
    if (adm.admissible) {
      xi = cand;
      base = adm.witness;
      break;
    }
  }

  std::vector<Term> bt;
  for (std::uint64_t m = 1; m < a.dim(); ++m)
    if (rng() % 3 == 0) bt.push_back({m, f.from_code(coef(rng))});
  AlgElem b = AlgElem::from_terms(std::move(bt));

  Vec h = zero_vec(f, c.type().d());
  for (const Vec& k : kernel(c.type().rho)) h = add(h, scale(k, f.from_code(coef(rng))));

  Tensor2 chi = c.standard(xi);
  AlgElem theta = base + a.embed(h);
  if (!b.is_zero()) {
    chi += c.d1(b);
    theta += c.Phi(b);
  }
  return {c.type(), std::move(theta), std::move(chi)};
}

StructureConstants export_structure(const HopfStructure& h) {
  StructureConstants s;
  s.field = h.field();
  s.dim = h.dim();
  s.unit = h.unit();
  for (std::uint64_t b = 0; b < s.dim; ++b) {
    s.labels.push_back(h.label(b));
    s.coproduct.push_back(h.coproduct(b));
    s.counit.push_back(h.counit(b));
    s.antipode.push_back(h.antipode(b));
    for (std::uint64_t y = 0; y < s.dim; ++y) s.mult.push_back(h.mult(b, y));
  }
  return s;
}

}  // namespace cohext
