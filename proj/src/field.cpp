#include "cohext/field.hpp"

#include <sstream>

namespace cohext {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NonPrime: return "NonPrime";
    case ErrorCode::ReducibleModulus: return "ReducibleModulus";
    case ErrorCode::DegreeMismatch: return "DegreeMismatch";
    case ErrorCode::Unsupported: return "Unsupported";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::NotAugmented: return "NotAugmented";
    case ErrorCode::NotPMapCompatible: return "NotPMapCompatible";
    case ErrorCode::NotInvertible: return "NotInvertible";
    case ErrorCode::NotCocycle: return "NotCocycle";
    case ErrorCode::NotCoboundary: return "NotCoboundary";
    case ErrorCode::NotZCharacteristic: return "NotZCharacteristic";
    case ErrorCode::NotAdmissible: return "NotAdmissible";
    case ErrorCode::InvalidType: return "InvalidType";
    case ErrorCode::InvalidData: return "InvalidData";
    case ErrorCode::TypeMismatch: return "TypeMismatch";
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::MissingRecord: return "MissingRecord";
    case ErrorCode::MalformedInput: return "MalformedInput";
  }
  return "Unknown";
}

bool is_prime(int n) {
  if (n < 2) return false;
  for (int d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

int binom_mod(long long n, long long r, int p) {
  if (r < 0 || r > n) return 0;
  // Lucas: product of digit binomials.
  long long result = 1;
  while (n > 0 || r > 0) {
    long long ni = n % p, ri = r % p;
    if (ri > ni) return 0;
    long long c = 1;
    for (long long i = 0; i < ri; ++i) c = c * (ni - i) / (i + 1);
    result = result * (c % p) % p;
    n /= p;
    r /= p;
  }
  return static_cast<int>(result);
}

namespace {

using Poly = std::vector<int>;  // little-endian, length k

// Multiply two residues modulo the monic modulus of degree k.
Poly mul_mod(const Poly& a, const Poly& b, const std::vector<int>& modulus, int p) {
  const int k = static_cast<int>(a.size());
  std::vector<int> prod(2 * k - 1, 0);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
  for (int deg = 2 * k - 2; deg >= k; --deg) {
    int c = prod[deg];
    if (c == 0) continue;
    prod[deg] = 0;
    // t^k = -sum_{i<k} m_i t^i
    for (int i = 0; i < k; ++i) prod[deg - k + i] = ((prod[deg - k + i] - c * modulus[i]) % p + p) % p;
  }
  prod.resize(k);
  return prod;
}

Poly decode(int code, int p, int k) {
  Poly c(k);
  for (int i = 0; i < k; ++i) {
    c[i] = code % p;
    code /= p;
  }
  return c;
}

int encode(const Poly& c, int p) {
  int code = 0;
  for (int i = static_cast<int>(c.size()) - 1; i >= 0; --i) code = code * p + c[i];
  return code;
}

bool has_root(const std::vector<int>& poly, int p) {
  for (int x = 0; x < p; ++x) {
    long long acc = 0;
    for (int i = static_cast<int>(poly.size()) - 1; i >= 0; --i) acc = (acc * x + poly[i]) % p;
    if (acc == 0) return true;
  }
  return false;
}

}  // namespace

Field Field::make(int p, int k, std::span<const int> modulus) {
  if (!is_prime(p)) throw Error(ErrorCode::NonPrime, std::to_string(p) + " is not prime");
  if (k < 1) throw Error(ErrorCode::DegreeMismatch, "extension degree must be >= 1");
  if (p > 7 || k > 3)
    throw Error(ErrorCode::Unsupported, "supported fields have p <= 7 and k <= 3");

  auto d = std::make_shared<detail::FieldData>();
  d->p = p;
  d->k = k;
  int q = 1;
  for (int i = 0; i < k; ++i) q *= p;
  d->q = q;

  if (k == 1) {
    if (!modulus.empty()) {
      if (modulus.size() != 2 || modulus[1] != 1)
        throw Error(ErrorCode::DegreeMismatch, "a degree-1 modulus must be monic linear");
    }
    d->modulus = {0, 1};
  } else {
    if (modulus.size() != static_cast<std::size_t>(k + 1))
      throw Error(ErrorCode::DegreeMismatch, "modulus must have k+1 coefficients");
    if (modulus[k] != 1) throw Error(ErrorCode::DegreeMismatch, "modulus must be monic");
    d->modulus.assign(modulus.begin(), modulus.end());
    for (int& c : d->modulus) {
      if (c < 0 || c >= p) throw Error(ErrorCode::DegreeMismatch, "modulus coefficient out of range");
    }
    // For k <= 3 a polynomial is irreducible iff it has no root.
    if (has_root(d->modulus, p)) throw Error(ErrorCode::ReducibleModulus, "modulus has a root in F_p");
  }

  const std::size_t qq = static_cast<std::size_t>(q) * q;
  d->add.resize(qq);
  d->mul.resize(qq);
  d->neg.resize(q);
  d->inv.assign(q, 0);
  d->frob.resize(q);
  d->frob_inv.resize(q);

  std::vector<int> mod_low(d->modulus.begin(), d->modulus.begin() + k);
  if (k == 1) mod_low = {0};
  for (int a = 0; a < q; ++a) {
    Poly pa = decode(a, p, k);
    Poly na(k);
    for (int i = 0; i < k; ++i) na[i] = (p - pa[i]) % p;
    d->neg[a] = static_cast<std::uint16_t>(encode(na, p));
    for (int b = 0; b < q; ++b) {
      Poly pb = decode(b, p, k);
      Poly s(k);
      for (int i = 0; i < k; ++i) s[i] = (pa[i] + pb[i]) % p;
      d->add[a * q + b] = static_cast<std::uint16_t>(encode(s, p));
      Poly m = (k == 1) ? Poly{pa[0] * pb[0] % p} : mul_mod(pa, pb, mod_low, p);
      d->mul[a * q + b] = static_cast<std::uint16_t>(encode(m, p));
    }
  }
  for (int a = 1; a < q; ++a)
    for (int b = 1; b < q; ++b)
      if (d->mul[a * q + b] == 1) {
        d->inv[a] = static_cast<std::uint16_t>(b);
        break;
      }
  for (int a = 0; a < q; ++a) {
    int r = 1;
    for (int i = 0; i < p; ++i) r = d->mul[r * q + a];
    d->frob[a] = static_cast<std::uint16_t>(r);
  }
  // Frobenius inverse is Frobenius iterated k-1 times.
  for (int a = 0; a < q; ++a) {
    int r = a;
    for (int i = 0; i + 1 < k; ++i) r = d->frob[r];
    d->frob_inv[a] = static_cast<std::uint16_t>(r);
  }

  Field f;
  f.d_ = std::move(d);
  return f;
}

Field Field::extension(int p, int k) {
  if (k == 1) return make(p, 1);
  if (!is_prime(p)) throw Error(ErrorCode::NonPrime, std::to_string(p) + " is not prime");
  std::vector<int> m(k + 1, 0);
  m[k] = 1;
  int total = 1;
  for (int i = 0; i < k; ++i) total *= p;
  for (int code = 0; code < total; ++code) {
    int c = code;
    for (int i = 0; i < k; ++i) {
      m[i] = c % p;
      c /= p;
    }
    if (!has_root(m, p)) return make(p, k, m);
  }
  throw Error(ErrorCode::ReducibleModulus, "no irreducible polynomial found");
}

int Field::p() const noexcept { return d_->p; }
int Field::k() const noexcept { return d_->k; }
int Field::size() const noexcept { return d_->q; }
const std::vector<int>& Field::modulus() const noexcept { return d_->modulus; }

Fe Field::from_code(int code) const {
  if (code < 0 || code >= d_->q) throw Error(ErrorCode::OutOfRange, "field element code out of range");
  return {d_.get(), static_cast<std::uint16_t>(code)};
}

Fe Field::from_int(long long v) const {
  long long r = v % d_->p;
  if (r < 0) r += d_->p;
  return {d_.get(), static_cast<std::uint16_t>(r)};
}

Fe Field::from_coeffs(std::span<const int> coeffs) const {
  if (coeffs.size() > static_cast<std::size_t>(d_->k))
    throw Error(ErrorCode::OutOfRange, "too many coefficients for field element");
  Poly c(d_->k, 0);
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i] < 0 || coeffs[i] >= d_->p) throw Error(ErrorCode::OutOfRange, "coefficient out of range");
    c[i] = coeffs[i];
  }
  return {d_.get(), static_cast<std::uint16_t>(encode(c, d_->p))};
}

Fe Field::gen() const { return d_->k == 1 ? one() : from_code(d_->p); }

std::vector<Fe> Field::elements() const {
  std::vector<Fe> out;
  out.reserve(d_->q);
  for (int c = 0; c < d_->q; ++c) out.push_back({d_.get(), static_cast<std::uint16_t>(c)});
  return out;
}

std::string Field::name() const {
  std::ostringstream os;
  os << "F_" << d_->q;
  return os.str();
}

Fe Fe::inv() const {
  if (v_ == 0) throw Error(ErrorCode::DivisionByZero, "inverse of zero");
  return {f_, f_->inv[v_]};
}

Fe Fe::operator/(Fe o) const { return *this * o.inv(); }

Fe Fe::pow(std::uint64_t e) const {
  Fe base = *this;
  Fe r{f_, 1};
  while (e) {
    if (e & 1) r = r * base;
    base = base * base;
    e >>= 1;
  }
  return r;
}

std::vector<int> Fe::coeffs() const { return decode(v_, f_->p, f_->k); }

}  // namespace cohext
