#include "cohext/classify.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <sstream>
#include <string>
#include <thread>

namespace cohext {

namespace {

Fe gamma_top(const Cobar& c, Fe gamma) {
  std::uint64_t e = 1;
  for (int i = 0; i < c.type().n(); ++i) e *= static_cast<std::uint64_t>(c.field().p());
  return gamma.pow(e);
}

std::uint64_t checked_pow(std::uint64_t b, std::uint64_t e, std::uint64_t limit) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 0; i < e; ++i) {
    if (r > limit / b) return limit + 1;
    r *= b;
  }
  return r;
}

std::vector<Vec> phi_image_basis(const Cobar& c) {
  const std::size_t d = c.type().d();
  return additive_image(c.field(), d, d, [&](const Vec& v) { return c.Phi_h(v); });
}

}  // namespace

Classifier::Classifier(const Cobar& c)
    : c_(c),
      image_(c.field(), c.type().d(), phi_image_basis(c)),
      kernel_(c.field(), c.type().d(), fp_basis_of_span(c.field(), kernel(c.type().rho))) {
  std::vector<Vec> reduced;
  for (const Vec& v : kernel_.basis()) reduced.push_back(image_.reduce(v));
  complement_ = FpSubspace(c.field(), c.type().d(), reduced).basis();
}

H2Class Classifier::classify(const ExtData& d) const {
  const UEnv& a = c_.algebra();
  auto red = c_.h2_reduce(d.chi);
  AlgElem th = d.theta;
  if (!red.witness.is_zero()) th -= c_.Phi(red.witness);
  H2Class k;
  k.xi = std::move(red.coord);
  k.psi = a.higher_part(th);
  k.theta = image_.reduce(a.linear_part(th));
  return k;
}

ExtData Classifier::data(const H2Class& k) const {
  return {c_.type(), k.psi + c_.algebra().embed(k.theta), c_.standard(k.xi)};
}

std::vector<H2Class> Classifier::classes_for(const H2Coord& xi) const {
  if (!c_.is_z_characteristic(xi)) return {};
  auto adm = c_.is_admissible(xi);
  if (!adm.admissible) return {};
  Vec h0 = c_.algebra().linear_part(adm.witness);
  std::vector<H2Class> out;
  for (const Vec& v : fp_span_elements(c_.field(), c_.type().d(), complement_))
    out.push_back({image_.reduce(add(h0, v)), xi, adm.base});
  return out;
}

std::vector<H2Class> Classifier::st_enumerate(const EnumOptions& opt) const {
  std::vector<H2Coord> zs = c_.zchar_enumerate(opt.budget);
  if (!opt.include_pg) std::erase_if(zs, [](const H2Coord& x) { return x.is_zero(); });
  const std::uint64_t per = checked_pow(static_cast<std::uint64_t>(c_.field().p()), complement_.size(), opt.budget);
  if (per > opt.budget || (!zs.empty() && zs.size() > opt.budget / per))
    throw Error(ErrorCode::BudgetExceeded, "too many classes to list");

  const unsigned workers = std::max(1u, std::min<unsigned>(opt.threads, static_cast<unsigned>(zs.size())));
  std::vector<std::vector<H2Class>> parts(zs.size());
  auto run = [&](unsigned w) {
    for (std::size_t i = w; i < zs.size(); i += workers) parts[i] = classes_for(zs[i]);
  };
  if (workers == 1) {
    run(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(run, w);
    for (auto& t : pool) t.join();
  }
  std::vector<H2Class> out;
  for (auto& p : parts)
    for (auto& k : p) out.push_back(std::move(k));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<H2Class> Classifier::h2_lie() const {
  auto out = classes_for(H2Coord::zero(c_.field(), c_.type().d()));
  std::sort(out.begin(), out.end());
  return out;
}

std::uint64_t Classifier::fiber_size(const H2Coord& xi) const {
  if (!c_.is_z_characteristic(xi) || !c_.is_admissible(xi).admissible)
    throw Error(ErrorCode::NotAdmissible, "class is not admissible");
  return kernel_.size() / image_.size();
}

PreparedAut Classifier::prepare(const AutElem& g) const { return {g, aut_table(c_, g.g)}; }

H2Class Classifier::act(const PreparedAut& g, const H2Class& k) const {
  const UEnv& a = c_.algebra();
  ExtData d = data(k);
  ExtData img{c_.type(), a.apply(d.theta, g.table) * gamma_top(c_, g.aut.gamma), a.apply_each(d.chi, g.table) * g.aut.gamma};
  return classify(img);
}

H2Coord Classifier::act_on_xi(const PreparedAut& g, const H2Coord& xi) const {
  return c_.h2_reduce(c_.algebra().apply_each(c_.standard(xi), g.table) * g.aut.gamma).coord;
}

OrbitReport Classifier::orbits(const std::vector<H2Class>& classes, const std::vector<AutElem>& group) const {
  OrbitReport rep;
  std::vector<H2Class> sorted = classes;
  std::sort(sorted.begin(), sorted.end());
  rep.total = sorted.size();
  rep.group_order = group.size();
  std::map<H2Class, std::size_t> index;
  for (std::size_t i = 0; i < sorted.size(); ++i) index.emplace(sorted[i], i);
  std::vector<PreparedAut> prepared;
  for (const AutElem& g : group) prepared.push_back(prepare(g));

  std::vector<bool> seen(sorted.size(), false);
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (seen[i]) continue;
    std::deque<std::size_t> queue{i};
    seen[i] = true;
    std::uint64_t size = 0;
    while (!queue.empty()) {
      std::size_t cur = queue.front();
      queue.pop_front();
      ++size;
      for (const PreparedAut& g : prepared) {
        auto it = index.find(act(g, sorted[cur]));
        if (it == index.end()) throw Error(ErrorCode::InvalidData, "group action left the class set");
        if (!seen[it->second]) {
          seen[it->second] = true;
          queue.push_back(it->second);
        }
      }
    }
    rep.reps.push_back(sorted[i]);
    rep.sizes.push_back(size);
  }
  return rep;
}

std::vector<Vec> h1(const Cobar& c) {
  const TypeT& t = c.type();
  const std::size_t d = t.d();
  if (t.n() == 1) {
    Matrix b = Matrix::identity(t.field(), d) * t.lambda() + t.rho.pow(static_cast<std::uint64_t>(t.p() - 1));
    return semilinear_kernel({t.h.pmap, b});
  }
  return additive_kernel(t.field(), d, d, [&](const Vec& v) { return c.Phi_h(v); });
}

std::vector<AutElem> aut_enumerate(const TypeT& t, std::uint64_t budget) {
  const Field& f = t.field();
  const std::size_t d = t.d();
  const auto q = static_cast<std::uint64_t>(f.size());
  const std::uint64_t mats = checked_pow(q, d * d, budget);
  if (mats > budget || mats > budget / (q - 1)) throw Error(ErrorCode::BudgetExceeded, "automorphism scan too large");

  std::vector<AutElem> out;
  std::vector<int> digits(d * d, 0);
  for (std::uint64_t idx = 0; idx < mats; ++idx) {
    std::uint64_t r = idx;
    for (std::size_t i = d * d; i-- > 0;) {
      digits[i] = static_cast<int>(r % q);
      r /= q;
    }
    Matrix g(f, d, d);
    for (std::size_t i = 0; i < d * d; ++i) g.set(i / d, i % d, f.from_code(digits[i]));
    if (!(g * t.h.pmap == t.h.pmap * g.frobenius()) || !inverse(g)) continue;
    for (std::uint64_t gc = 1; gc < q; ++gc) {
      AutElem a{f.from_code(static_cast<int>(gc)), g};
      if (validate_aut(t, a).ok()) out.push_back(std::move(a));
    }
  }
  std::stable_sort(out.begin(), out.end(), [](const AutElem& a, const AutElem& b) { return a.gamma < b.gamma; });
  return out;
}

// ---------------------------------------------------------------------------
// Geometric mode

std::vector<int> geometric_act(int p, std::size_t d, const std::vector<int>& g, const std::vector<int>& v) {
  auto pairs = h2_pairs(p, d);
  std::vector<int> out(v.size(), 0);
  auto at = [&](std::size_t i, std::size_t j) { return g[i * d + j]; };
  std::vector<std::vector<std::size_t>> slot(d, std::vector<std::size_t>(d, 0));
  for (std::size_t s = 0; s < pairs.size(); ++s) {
    slot[pairs[s].first][pairs[s].second] = s;
    slot[pairs[s].second][pairs[s].first] = s;
  }
  for (std::size_t s = 0; s < pairs.size(); ++s) {
    const int mu = v[s];
    if (mu == 0) continue;
    auto [i, j] = pairs[s];
    for (std::size_t k = 0; k < d; ++k)
      for (std::size_t l = 0; l < d; ++l) {
        int c = at(k, i) * at(l, j) % p;
        if (c == 0) continue;
        if (p == 2) {
          out[slot[k][l]] += mu * c;
        } else if (k < l) {
          out[slot[k][l]] += mu * c;
        } else if (k > l) {
          out[slot[k][l]] -= mu * c;
        }
      }
  }
  if (p != 2)
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) out[pairs.size() + i] += at(i, j) * v[pairs.size() + j];
  for (int& x : out) x = ((x % p) + p) % p;
  return out;
}

namespace {

std::vector<int> normalize_line(int p, std::vector<int> v) {
  auto it = std::find_if(v.begin(), v.end(), [](int x) { return x != 0; });
  if (it == v.end()) return v;
  int inv = 1;
  while (inv * *it % p != 1) ++inv;
  for (int& x : v) x = x * inv % p;
  return v;
}

}  // namespace

LineOrbitReport semisimple_classify(int p, std::size_t d, std::uint64_t budget) {
  if (!is_prime(p)) throw Error(ErrorCode::NonPrime, "p must be prime");
  if (d == 0) throw Error(ErrorCode::DimensionMismatch, "d must be positive");
  const std::size_t dim = h2_dim(d);
  const auto pp = static_cast<std::uint64_t>(p);
  const std::uint64_t points = checked_pow(pp, dim, budget);
  const std::uint64_t mats = checked_pow(pp, d * d, budget);
  if (points > budget || mats > budget) throw Error(ErrorCode::BudgetExceeded, "geometric classification too large");

  Field f = Field::prime(p);
  std::vector<std::vector<int>> gl;
  for (std::uint64_t idx = 0; idx < mats; ++idx) {
    std::vector<int> g(d * d);
    std::uint64_t r = idx;
    for (std::size_t i = d * d; i-- > 0;) {
      g[i] = static_cast<int>(r % pp);
      r /= pp;
    }
    Matrix m(f, d, d);
    for (std::size_t i = 0; i < d * d; ++i) m.set(i / d, i % d, f.from_int(g[i]));
    if (rank(m) == d) gl.push_back(std::move(g));
  }

  std::vector<std::vector<int>> lines;
  for (std::uint64_t idx = 1; idx < points; ++idx) {
    std::vector<int> v(dim);
    std::uint64_t r = idx;
    for (std::size_t i = dim; i-- > 0;) {
      v[i] = static_cast<int>(r % pp);
      r /= pp;
    }
    if (normalize_line(p, v) == v) lines.push_back(std::move(v));
  }
  std::map<std::vector<int>, std::size_t> index;
  for (std::size_t i = 0; i < lines.size(); ++i) index.emplace(lines[i], i);

  LineOrbitReport rep;
  rep.p = p;
  rep.d = d;
  rep.lines = lines.size();
  rep.group_order = (pp - 1) * gl.size();
  std::vector<bool> seen(lines.size(), false);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    if (seen[i]) continue;
    std::deque<std::size_t> queue{i};
    seen[i] = true;
    std::uint64_t size = 0;
    while (!queue.empty()) {
      std::size_t cur = queue.front();
      queue.pop_front();
      ++size;
      for (const auto& g : gl) {
        std::size_t j = index.at(normalize_line(p, geometric_act(p, d, g, lines[cur])));
        if (!seen[j]) {
          seen[j] = true;
          queue.push_back(j);
        }
      }
    }
    rep.reps.push_back(lines[i]);
    rep.sizes.push_back(size);
  }
  return rep;
}

std::vector<CensusRecord> builtin_census() { return {{2, 2, 3}, {3, 1, 1}}; }

namespace {

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

long long parse_int(const std::string& field, int line) {
  std::string t = trim(field);
  std::size_t used = 0;
  long long v = -1;
  try {
    v = std::stoll(t, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (t.empty() || used != t.size() || v < 0)
    throw Error(ErrorCode::MalformedInput, "census line " + std::to_string(line) + ": bad integer '" + t + "'");
  return v;
}

}  // namespace

std::vector<CensusRecord> parse_census(std::istream& in) {
  std::vector<CensusRecord> out;
  std::string raw;
  int line = 0;
  bool header = false;
  while (std::getline(in, raw)) {
    ++line;
    std::string s = trim(raw);
    if (s.empty() || s[0] == '#') continue;
    std::vector<std::string> fields;
    std::stringstream ss(s);
    std::string part;
    while (std::getline(ss, part, ',')) fields.push_back(part);
    if (!s.empty() && s.back() == ',') fields.emplace_back();
    if (!header) {
      if (fields.size() != 3 || trim(fields[0]) != "p" || trim(fields[1]) != "d" || trim(fields[2]) != "count")
        throw Error(ErrorCode::MalformedInput, "census header must be p,d,count");
      header = true;
      continue;
    }
    if (fields.size() != 3)
      throw Error(ErrorCode::MalformedInput, "census line " + std::to_string(line) + ": expected 3 fields");
    out.push_back({static_cast<int>(parse_int(fields[0], line)), static_cast<int>(parse_int(fields[1], line)),
                   static_cast<std::uint64_t>(parse_int(fields[2], line))});
  }
  if (!header) throw Error(ErrorCode::MalformedInput, "census file has no header");
  return out;
}

CensusVerdict census_compare(const LineOrbitReport& r, const std::vector<CensusRecord>& census) {
  for (const CensusRecord& c : census)
    if (c.p == r.p && static_cast<std::size_t>(c.d) == r.d) return {c.count == r.reps.size(), r.reps.size(), c.count};
  throw Error(ErrorCode::MissingRecord,
              "no census record for p=" + std::to_string(r.p) + ", d=" + std::to_string(r.d));
}

}  // namespace cohext
