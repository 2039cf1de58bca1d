#include "cohext/rlie.hpp"

#include "cohext/uenv.hpp"

namespace cohext {

AbelianRLA AbelianRLA::make(Matrix pmap) {
  if (pmap.rows() != pmap.cols()) throw Error(ErrorCode::DimensionMismatch, "p-map matrix must be square");
  AbelianRLA h;
  h.field = pmap.field();
  h.d = pmap.rows();
  h.pmap = std::move(pmap);
  return h;
}

Vec AbelianRLA::pth_power(const Vec& v) const { return pmap.apply(frobenius(v)); }

Fe TypeT::lambda() const {
  if (g.n() != 1) throw Error(ErrorCode::Unsupported, "scalar lambda requires dim B = p");
  return g.lambdas[0];
}

TypeT make_type(Matrix pmap, std::vector<Fe> lambdas, Matrix rho) {
  if (lambdas.empty()) throw Error(ErrorCode::InvalidType, "f(z) needs n >= 1");
  if (rho.rows() != pmap.rows() || rho.cols() != pmap.cols())
    throw Error(ErrorCode::DimensionMismatch, "rho and p-map dimensions differ");
  TypeT t;
  t.h = AbelianRLA::make(std::move(pmap));
  t.g.field = t.h.field;
  t.g.lambdas = std::move(lambdas);
  t.rho = std::move(rho);
  return t;
}

ValidationReport validate_type(const TypeT& t) {
  ValidationReport report;
  const Field& f = t.field();
  const std::size_t d = t.d();
  if (t.rho.rows() != d || t.rho.cols() != d || t.h.pmap.rows() != d || t.h.pmap.cols() != d)
    throw Error(ErrorCode::DimensionMismatch, "type matrices must be d x d");

  Matrix rp = t.rho * t.h.pmap;
  for (std::size_t j = 0; j < d; ++j) {
    if (is_zero(rp.column(j))) continue;
    report.violations.push_back(
        {"pmap_annihilated", "rho_z(x_" + std::to_string(j + 1) + "^[p]) != 0", unit_vec(f, d, j)});
    break;
  }

  Matrix fr(f, d, d);
  std::uint64_t pi = 1;
  for (int i = 0; i < t.n(); ++i) {
    fr = fr + t.rho.pow(pi) * t.g.lambdas[i];
    pi *= static_cast<std::uint64_t>(t.p());
  }
  fr = fr + t.rho.pow(pi);
  for (std::size_t j = 0; j < d; ++j) {
    if (is_zero(fr.column(j))) continue;
    report.violations.push_back(
        {"restricted", "f(rho_z) does not vanish on x_" + std::to_string(j + 1), unit_vec(f, d, j)});
    break;
  }
  report.notes.emplace_back("bracket condition holds: g is one-dimensional and h is abelian");
  return report;
}

bool is_torus(const AbelianRLA& h) {
  SemilinearMap m{h.pmap, Matrix(h.field, h.d, h.d)};
  return semilinear_kernel(m).empty();
}

ModuleCheck module_hopf_check(const TypeT& t, int max_degree) {
  UEnv a(t.h);
  return module_hopf_check(a, derivation_table(a, t.rho), max_degree);
}

namespace types {

namespace {

std::vector<Fe> lambdas_for(const Field& f, int n, Fe lambda0) {
  std::vector<Fe> l(static_cast<std::size_t>(n), f.zero());
  l[0] = lambda0;
  return l;
}

}  // namespace

TypeT zero(const Field& f, std::size_t d, int n) {
  return make_type(Matrix(f, d, d), lambdas_for(f, n, f.zero()), Matrix(f, d, d));
}

TypeT split_torus(const Field& f, std::size_t d, int n) {
  return make_type(Matrix::identity(f, d), lambdas_for(f, n, -f.one()), Matrix(f, d, d));
}

TypeT alambda(const Field& f, int n) {
  Matrix pm(f, 2, 2);
  pm.set(1, 1, f.one());
  Matrix r(f, 2, 2);
  r.set(1, 0, f.one());
  return make_type(std::move(pm), lambdas_for(f, n, f.zero()), std::move(r));
}

TypeT three_dim_nilpotent(const Field& f) {
  Matrix pm(f, 3, 3);
  pm.set(2, 1, f.one());
  Matrix r(f, 3, 3);
  r.set(1, 0, f.one());
  return make_type(std::move(pm), {f.zero()}, std::move(r));
}

std::vector<Named> catalog(const Field& f, std::size_t max_d) {
  std::vector<Named> out;
  const Fe one = f.one();
  for (std::size_t d = 1; d <= max_d; ++d) {
    out.push_back({"zero" + std::to_string(d), zero(f, d)});
    out.push_back({"split" + std::to_string(d), split_torus(f, d)});
  }
  out.push_back({"torus_g", make_type(Matrix(f, 1, 1), {-one}, Matrix::identity(f, 1))});
  if (max_d >= 2) {
    out.push_back({"alambda", alambda(f)});
    Matrix nil(f, 2, 2);
    nil.set(0, 1, one);
    out.push_back({"nilp_pmap", make_type(std::move(nil), {one}, Matrix(f, 2, 2))});
    Matrix pm(f, 2, 2), r(f, 2, 2);
    pm.set(0, 0, one);
    r.set(1, 1, one);
    out.push_back({"mixed", make_type(std::move(pm), {-one}, std::move(r))});
  }
  if (max_d >= 3) out.push_back({"nil3", three_dim_nilpotent(f)});
  return out;
}

}  // namespace types

}  // namespace cohext
