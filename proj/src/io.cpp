#include "cohext/io.hpp"

namespace cohext::io {

namespace {

[[noreturn]] void malformed(const std::string& what) { throw Error(ErrorCode::MalformedInput, what); }

const Json& need(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) malformed(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

std::int64_t as_int(const Json& j, const char* what) {
  if (!j.is_number_integer()) malformed(std::string(what) + " must be an integer");
  return j.get<std::int64_t>();
}

std::uint64_t as_count(const Json& j, const char* what) {
  auto v = as_int(j, what);
  if (v < 0) malformed(std::string(what) + " must be nonnegative");
  return static_cast<std::uint64_t>(v);
}

const Json& as_array(const Json& j, const char* what) {
  if (!j.is_array()) malformed(std::string(what) + " must be a list");
  return j;
}

std::vector<Term> parse_terms(const Field& f, const Json& j) {
  std::vector<Term> out;
  for (const Json& t : as_array(j, "term list")) {
    if (!t.is_array() || t.size() != 2) malformed("structure term must be [key, coefficient]");
    out.push_back({as_count(t[0], "key"), parse_fe(f, t[1])});
  }
  detail::normalize_terms(out);
  return out;
}

Json terms_json(const std::vector<Term>& ts) {
  Json a = Json::array();
  for (const Term& t : ts) a.push_back(Json::array({t.key, fe_json(t.c)}));
  return a;
}

ExtData parse_data_part(const TypeT& t, const UEnv& a, const Json& j) {
  ExtData d{t, {}, {}};
  if (j.contains("theta")) d.theta = parse_alg(a, j.at("theta"));
  if (j.contains("chi")) d.chi = parse_tensor(a, j.at("chi"));
  return d;
}

}  // namespace

Field parse_field(const Json& j) {
  int p = static_cast<int>(as_int(need(j, "p"), "field.p"));
  int k = j.contains("k") ? static_cast<int>(as_int(j.at("k"), "field.k")) : 1;
  if (j.contains("modulus")) {
    std::vector<int> mod;
    for (const Json& c : as_array(j.at("modulus"), "field.modulus")) mod.push_back(static_cast<int>(as_int(c, "modulus")));
    return Field::make(p, k, mod);
  }
  return k == 1 ? Field::prime(p) : Field::extension(p, k);
}

Json field_json(const Field& f) {
  Json j{{"p", f.p()}, {"k", f.k()}};
  if (f.k() > 1) j["modulus"] = f.modulus();
  return j;
}

Fe parse_fe(const Field& f, const Json& j) {
  if (j.is_number_integer()) {
    auto v = j.get<std::int64_t>();
    if (v < 0 || v >= f.size()) malformed("field element " + std::to_string(v) + " out of range");
    return f.from_code(static_cast<int>(v));
  }
  if (j.is_array()) {
    if (j.size() > static_cast<std::size_t>(f.k())) malformed("too many coefficients for a field element");
    std::vector<int> c;
    for (const Json& x : j) {
      auto v = as_int(x, "coefficient");
      if (v < 0 || v >= f.p()) malformed("coefficient out of range");
      c.push_back(static_cast<int>(v));
    }
    return f.from_coeffs(c);
  }
  malformed("field element must be an integer or a coefficient list");
}

Json fe_json(Fe x) { return x.code(); }

Matrix parse_matrix(const Field& f, std::size_t rows, std::size_t cols, const Json& j) {
  as_array(j, "matrix");
  if (j.size() != cols) malformed("matrix must have " + std::to_string(cols) + " columns");
  Matrix m(f, rows, cols);
  for (std::size_t c = 0; c < cols; ++c) {
    const Json& col = as_array(j[c], "matrix column");
    if (col.size() != rows) malformed("matrix column must have " + std::to_string(rows) + " entries");
    for (std::size_t r = 0; r < rows; ++r) m.set(r, c, parse_fe(f, col[r]));
  }
  return m;
}

Json matrix_json(const Matrix& m) {
  Json a = Json::array();
  for (std::size_t c = 0; c < m.cols(); ++c) {
    Json col = Json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) col.push_back(m.code(r, c));
    a.push_back(col);
  }
  return a;
}

std::uint64_t parse_mono(const UEnv& a, const Json& j) {
  if (j.is_number_integer()) {
    auto v = as_count(j, "monomial index");
    if (v >= a.dim()) malformed("monomial index out of range");
    return v;
  }
  as_array(j, "monomial");
  if (j.size() != a.d()) malformed("monomial must have " + std::to_string(a.d()) + " exponents");
  std::vector<int> e;
  for (const Json& x : j) {
    auto v = as_int(x, "exponent");
    if (v < 0 || v >= a.p()) malformed("exponent out of range");
    e.push_back(static_cast<int>(v));
  }
  return a.monomial(e);
}

Json mono_json(const UEnv& a, std::uint64_t m) { return a.exps(m); }

AlgElem parse_alg(const UEnv& a, const Json& j) {
  std::vector<Term> ts;
  for (const Json& t : as_array(j, "term list")) ts.push_back({parse_mono(a, need(t, "mono")), parse_fe(a.field(), need(t, "c"))});
  return AlgElem::from_terms(std::move(ts));
}

Json alg_json(const UEnv& a, const AlgElem& x) {
  Json out = Json::array();
  for (const Term& t : x.terms()) out.push_back({{"mono", mono_json(a, t.key)}, {"c", fe_json(t.c)}});
  return out;
}

Tensor2 parse_tensor(const UEnv& a, const Json& j) {
  std::vector<Term> ts;
  for (const Json& t : as_array(j, "tensor term list"))
    ts.push_back({a.key2(parse_mono(a, need(t, "left")), parse_mono(a, need(t, "right"))), parse_fe(a.field(), need(t, "c"))});
  return Tensor2::from_terms(std::move(ts));
}

Json tensor_json(const UEnv& a, const Tensor2& t) {
  Json out = Json::array();
  for (const Term& x : t.terms()) {
    auto [l, r] = a.split2(x.key);
    out.push_back({{"left", mono_json(a, l)}, {"right", mono_json(a, r)}, {"c", fe_json(x.c)}});
  }
  return out;
}

JobSpec parse_job(const Json& j) {
  if (!j.is_object()) malformed("document must be an object");
  auto version = as_int(need(j, "schema_version"), "schema_version");
  if (version != kSchemaVersion) malformed("unsupported schema_version " + std::to_string(version));

  Field f = parse_field(need(j, "field"));
  const Json& h = need(j, "h");
  std::size_t d = as_count(need(h, "dim"), "h.dim");
  if (d == 0) malformed("h.dim must be positive");
  std::uint64_t monomials = 1;
  for (std::size_t i = 0; i < d; ++i)
    if ((monomials *= static_cast<std::uint64_t>(f.p())) > kMaxMonomials)
      throw Error(ErrorCode::BudgetExceeded, "u(h) would have more than " + std::to_string(kMaxMonomials) + " monomials");
  Matrix pmap = h.contains("pmap") ? parse_matrix(f, d, d, h.at("pmap")) : Matrix(f, d, d);
  std::vector<Fe> lambdas;
  int n = 1;
  if (j.contains("g")) {
    const Json& g = j.at("g");
    if (g.contains("n")) n = static_cast<int>(as_int(g.at("n"), "g.n"));
    if (n < 1) malformed("g.n must be positive");
    if (g.contains("lambdas"))
      for (const Json& x : as_array(g.at("lambdas"), "g.lambdas")) lambdas.push_back(parse_fe(f, x));
  }
  if (lambdas.empty()) lambdas.assign(static_cast<std::size_t>(n), f.zero());
  if (lambdas.size() != static_cast<std::size_t>(n)) malformed("g.lambdas must have n entries");
  Matrix rho = j.contains("rho") ? parse_matrix(f, d, d, j.at("rho")) : Matrix(f, d, d);

  JobSpec s;
  TypeT t = make_type(std::move(pmap), std::move(lambdas), std::move(rho));
  UEnv a(t.h);
  s.data = parse_data_part(t, a, j);
  if (j.contains("target")) s.target = parse_data_part(t, a, j.at("target"));
  if (j.contains("iso")) {
    const Json& iso = j.at("iso");
    IsoPair ip;
    ip.t = iso.contains("t") ? parse_alg(a, iso.at("t")) : AlgElem{};
    ip.g.gamma = iso.contains("gamma") ? parse_fe(f, iso.at("gamma")) : f.one();
    ip.g.g = iso.contains("g") ? parse_matrix(f, d, d, iso.at("g")) : Matrix::identity(f, d);
    s.iso = ip;
  }
  if (j.contains("sigma")) {
    const Json& sg = j.at("sigma");
    s.sigma = std::pair{as_count(need(sg, "i"), "sigma.i"), as_count(need(sg, "j"), "sigma.j")};
  }
  if (j.contains("options")) {
    const Json& o = j.at("options");
    if (o.contains("mode")) {
      if (!o.at("mode").is_string()) malformed("options.mode must be a string");
      s.options.mode = o.at("mode").get<std::string>();
      if (s.options.mode != "literal" && s.options.mode != "geometric") malformed("options.mode must be literal or geometric");
    }
    if (o.contains("includePrimitivelyGenerated")) {
      if (!o.at("includePrimitivelyGenerated").is_boolean()) malformed("includePrimitivelyGenerated must be a boolean");
      s.options.include_pg = o.at("includePrimitivelyGenerated").get<bool>();
    }
    if (o.contains("budget")) s.options.budget = as_count(o.at("budget"), "options.budget");
    if (o.contains("seed")) s.options.seed = as_count(o.at("seed"), "options.seed");
  }
  return s;
}

JobSpec parse_job_text(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    malformed(e.what());
  }
  return parse_job(j);
}

Json type_json(const TypeT& t) {
  Json lambdas = Json::array();
  for (Fe x : t.g.lambdas) lambdas.push_back(fe_json(x));
  return {{"field", field_json(t.field())},
          {"h", {{"dim", t.d()}, {"pmap", matrix_json(t.h.pmap)}}},
          {"g", {{"n", t.n()}, {"lambdas", lambdas}}},
          {"rho", matrix_json(t.rho)}};
}

Json to_json(const JobSpec& s) {
  UEnv a(s.data.type.h);
  Json j = type_json(s.data.type);
  j["schema_version"] = kSchemaVersion;
  j["theta"] = alg_json(a, s.data.theta);
  j["chi"] = tensor_json(a, s.data.chi);
  if (s.target) j["target"] = {{"theta", alg_json(a, s.target->theta)}, {"chi", tensor_json(a, s.target->chi)}};
  if (s.iso)
    j["iso"] = {{"t", alg_json(a, s.iso->t)}, {"gamma", fe_json(s.iso->g.gamma)}, {"g", matrix_json(s.iso->g.g)}};
  if (s.sigma) j["sigma"] = {{"i", s.sigma->first}, {"j", s.sigma->second}};
  j["options"] = {{"mode", s.options.mode},
                  {"includePrimitivelyGenerated", s.options.include_pg},
                  {"budget", s.options.budget},
                  {"seed", s.options.seed}};
  return j;
}

Json h2_json(const H2Coord& xi) {
  Json w = Json::array(), o = Json::array();
  for (Fe x : xi.wedge) w.push_back(fe_json(x));
  for (Fe x : xi.omega) o.push_back(fe_json(x));
  return {{"wedge", w}, {"omega", o}};
}

Json class_json(const UEnv& a, const H2Class& c) {
  Json th = Json::array();
  for (Fe x : c.theta) th.push_back(fe_json(x));
  return {{"theta", th}, {"xi", h2_json(c.xi)}, {"psi", alg_json(a, c.psi)}};
}

Json structure_json(const StructureConstants& s) {
  Json mult = Json::array(), cop = Json::array(), anti = Json::array(), counit = Json::array();
  for (std::uint64_t a = 0; a < s.dim; ++a)
    for (std::uint64_t b = 0; b < s.dim; ++b) {
      const auto& ts = s.mult[a * s.dim + b];
      if (!ts.empty()) mult.push_back({a, b, terms_json(ts)});
    }
  for (std::uint64_t b = 0; b < s.dim; ++b) {
    Json row = Json::array();
    for (const Term& t : s.coproduct[b]) row.push_back(Json::array({t.key / s.dim, t.key % s.dim, fe_json(t.c)}));
    cop.push_back(row);
    anti.push_back(terms_json(s.antipode[b]));
    counit.push_back(fe_json(s.counit[b]));
  }
  return {{"schema_version", kSchemaVersion},
          {"kind", "structure_constants"},
          {"field", field_json(s.field)},
          {"dim", s.dim},
          {"unit", s.unit},
          {"labels", s.labels},
          {"mult", mult},
          {"coproduct", cop},
          {"counit", counit},
          {"antipode", anti}};
}

StructureConstants parse_structure(const Json& j) {
  if (!j.is_object()) malformed("document must be an object");
  if (as_int(need(j, "schema_version"), "schema_version") != kSchemaVersion) malformed("unsupported schema_version");
  const Json& body = j.contains("structure") ? j.at("structure") : j;
  StructureConstants s{parse_field(need(body, "field")), 0, 0, {}, {}, {}, {}, {}};
  const Field& f = s.field;
  s.dim = as_count(need(body, "dim"), "dim");
  if (s.dim == 0 || s.dim > 4096) malformed("dim out of range");
  s.unit = as_count(need(body, "unit"), "unit");
  if (s.unit >= s.dim) malformed("unit out of range");
  if (body.contains("labels"))
    for (const Json& l : as_array(body.at("labels"), "labels")) {
      if (!l.is_string()) malformed("labels must be strings");
      s.labels.push_back(l.get<std::string>());
    }
  if (!s.labels.empty() && s.labels.size() != s.dim) malformed("labels must have dim entries");

  s.mult.assign(s.dim * s.dim, {});
  for (const Json& e : as_array(need(body, "mult"), "mult")) {
    if (!e.is_array() || e.size() != 3) malformed("mult entry must be [a, b, terms]");
    auto a = as_count(e[0], "mult index"), b = as_count(e[1], "mult index");
    if (a >= s.dim || b >= s.dim) malformed("mult index out of range");
    s.mult[a * s.dim + b] = parse_terms(f, e[2]);
    for (const Term& t : s.mult[a * s.dim + b])
      if (t.key >= s.dim) malformed("mult term out of range");
  }
  const Json& cop = as_array(need(body, "coproduct"), "coproduct");
  const Json& anti = as_array(need(body, "antipode"), "antipode");
  const Json& counit = as_array(need(body, "counit"), "counit");
  if (cop.size() != s.dim || anti.size() != s.dim || counit.size() != s.dim)
    malformed("coproduct, counit and antipode must have dim entries");
  for (std::uint64_t b = 0; b < s.dim; ++b) {
    std::vector<Term> ts;
    for (const Json& e : as_array(cop[b], "coproduct row")) {
      if (!e.is_array() || e.size() != 3) malformed("coproduct term must be [b1, b2, c]");
      auto l = as_count(e[0], "coproduct index"), r = as_count(e[1], "coproduct index");
      if (l >= s.dim || r >= s.dim) malformed("coproduct index out of range");
      ts.push_back({l * s.dim + r, parse_fe(f, e[2])});
    }
    detail::normalize_terms(ts);
    s.coproduct.push_back(std::move(ts));
    s.antipode.push_back(parse_terms(f, anti[b]));
    for (const Term& t : s.antipode.back())
      if (t.key >= s.dim) malformed("antipode term out of range");
    s.counit.push_back(parse_fe(f, counit[b]));
  }
  return s;
}

}  // namespace cohext::io
