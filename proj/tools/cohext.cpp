// cohext: command-line front end.
//
//   cohext validate   --input job.json
//   cohext construct  --input job.json --out tables.json
//   cohext construct  --verify tables.json
//   cohext primitives --input job.json
//   cohext h2         --input job.json [--include-pg]
//   cohext orbits     --input job.json [--mode literal|geometric] [--census PATH]
//   cohext semisimple P D [--census PATH]
//   cohext sigma      --input job.json
//   cohext iso-check  --input job.json
//
// Exit codes: 0 ok, 1 domain violation, 2 malformed input, 3 budget exceeded.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "cohext/io.hpp"

using namespace cohext;
using io::Json;

namespace {

constexpr int kOk = 0;
constexpr int kViolation = 1;
constexpr int kMalformed = 2;
constexpr int kBudget = 3;

int exit_code(ErrorCode c) {
  switch (c) {
    case ErrorCode::MalformedInput:
      return kMalformed;
    case ErrorCode::BudgetExceeded:
      return kBudget;
    default:
      return kViolation;
  }
}

struct Flags {
  std::string input;
  std::string out;
  std::string mode;
  bool include_pg = false;
  std::optional<std::uint64_t> budget;
  std::optional<std::uint64_t> seed;
  std::string census;
  std::string format = "json";
  std::string verify;
  std::vector<int> pd;
};

struct Report {
  explicit Report(std::string name) : command(std::move(name)) {}

  std::string command;
  std::string status = "ok";
  Json payload = Json::object();
  Json diagnostics = Json::array();
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> text;
  int exit = kOk;

  void diagnose(const std::string& condition, const std::string& message) {
    diagnostics.push_back({{"condition", condition}, {"message", message}});
  }
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::MalformedInput, "cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

io::JobSpec load(const Flags& fl) {
  if (fl.input.empty()) throw Error(ErrorCode::MalformedInput, "--input is required");
  io::JobSpec s = io::parse_job_text(read_file(fl.input));
  if (!fl.mode.empty()) s.options.mode = fl.mode;
  if (fl.include_pg) s.options.include_pg = true;
  if (fl.budget) s.options.budget = *fl.budget;
  if (fl.seed) s.options.seed = *fl.seed;
  return s;
}

std::string join(const Vec& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + std::to_string(v[i].code());
  return s;
}

std::string h2_text(const H2Coord& xi) {
  std::string s = "[" + join(xi.wedge) + "]";
  if (!xi.omega.empty()) s += " omega [" + join(xi.omega) + "]";
  return s;
}

std::string terms_text(const HopfStructure& h, const std::vector<Term>& ts) {
  if (ts.empty()) return "0";
  std::string s;
  for (const Term& t : ts) {
    if (!s.empty()) s += " + ";
    s += std::to_string(t.c.code()) + "*" + h.label(t.key);
  }
  return s;
}

std::string alg_text(const UEnv& a, const AlgElem& x) {
  if (x.is_zero()) return "0";
  std::string s;
  for (const Term& t : x.terms()) {
    if (!s.empty()) s += " + ";
    s += std::to_string(t.c.code()) + "*x^(";
    auto e = a.exps(t.key);
    for (std::size_t i = 0; i < e.size(); ++i) s += (i ? "," : "") + std::to_string(e[i]);
    s += ")";
  }
  return s;
}

Json check_json(const CheckReport& r) {
  Json j{{"ok", r.ok}, {"checks", r.checks}, {"exhaustive", r.exhaustive}, {"seed", r.seed}};
  if (!r.ok) j["failure"] = {{"identity", r.failure}, {"witness", r.witness}};
  return j;
}

CheckOptions check_options(std::uint64_t seed) {
  CheckOptions o;
  o.seed = seed;
  return o;
}

bool add_violations(Report& rep, const ValidationReport& v) {
  for (const auto& x : v.violations) rep.diagnose(x.condition, x.message);
  if (v.ok()) return true;
  rep.status = "violation";
  rep.exit = kViolation;
  return false;
}

Json class_row(const Classifier& k, const H2Class& c, std::optional<std::uint64_t> fiber) {
  Json j = io::class_json(k.cobar().algebra(), c);
  if (fiber) j["fiber"] = *fiber;
  return j;
}

// ---------------------------------------------------------------------------

Report cmd_validate(const Flags& fl) {
  Report rep{"validate"};
  io::JobSpec s = load(fl);
  Cobar c(s.data.type);
  ValidationReport v = validate_data(c, s.data);
  add_violations(rep, v);
  rep.payload = {{"valid", v.ok()}, {"notes", v.notes}, {"torus", is_torus(s.data.type.h)}};
  rep.header = {"condition", "message"};
  for (const auto& x : v.violations) rep.rows.push_back({x.condition, x.message});
  rep.text.push_back(v.ok() ? "valid" : "invalid");
  return rep;
}

Report cmd_verify(const Flags& fl) {
  Report rep{"construct"};
  Json doc;
  try {
    doc = Json::parse(read_file(fl.verify));
  } catch (const Json::parse_error& e) {
    throw Error(ErrorCode::MalformedInput, e.what());
  }
  std::uint64_t seed = fl.seed.value_or(1);
  if (!fl.seed && doc.contains("payload") && doc["payload"].contains("summary"))
    seed = doc["payload"]["summary"].value("seed", std::uint64_t{1});
  TableHopf t(io::parse_structure(doc.contains("payload") ? Json{{"schema_version", doc.at("schema_version")},
                                                                 {"structure", doc["payload"].at("structure")}}
                                                           : doc));
  CheckReport r = check_structure(t, check_options(seed));
  rep.payload = {{"dim", t.dim()}, {"summary", check_json(r)}};
  if (!r.ok) {
    rep.status = "violation";
    rep.exit = kViolation;
    rep.diagnose(r.failure, r.witness);
  }
  rep.header = {"dim", "ok", "checks", "exhaustive", "seed"};
  rep.rows.push_back({std::to_string(t.dim()), r.ok ? "true" : "false", std::to_string(r.checks),
                      r.exhaustive ? "true" : "false", std::to_string(r.seed)});
  rep.text.push_back("dimension " + std::to_string(t.dim()) + ", axioms " + (r.ok ? "hold" : "fail: " + r.failure) +
                     " (" + std::to_string(r.checks) + " checks)");
  return rep;
}

bool is_commutative(const StructureConstants& s) {
  for (std::uint64_t a = 0; a < s.dim; ++a)
    for (std::uint64_t b = a + 1; b < s.dim; ++b)
      if (s.mult[a * s.dim + b] != s.mult[b * s.dim + a]) return false;
  return true;
}

bool is_cocommutative(const StructureConstants& s) {
  for (const auto& row : s.coproduct) {
    std::vector<Term> flipped;
    for (const Term& t : row) flipped.push_back({(t.key % s.dim) * s.dim + t.key / s.dim, t.c});
    if (HopfElem::from_terms(flipped).terms() != row) return false;
  }
  return true;
}

Report cmd_construct(const Flags& fl) {
  if (!fl.verify.empty()) return cmd_verify(fl);
  Report rep{"construct"};
  io::JobSpec s = load(fl);
  Cobar c(s.data.type);
  if (!add_violations(rep, validate_data(c, s.data))) return rep;
  std::uint64_t q = 1;
  for (int i = 0; i < s.data.type.n(); ++i) q *= static_cast<std::uint64_t>(s.data.type.p());
  const std::uint64_t dim = c.algebra().dim() * q;
  if (dim * dim > s.options.budget) throw Error(ErrorCode::BudgetExceeded, "structure table has dim^2 > budget entries");

  HopfAlg h(s.data, false);
  StructureConstants sc = export_structure(h);
  CheckOptions opt = check_options(s.options.seed);
  CheckReport summary = check_structure(h, opt);
  CheckReport axioms = check_hopf_axioms(h, opt);
  auto prim = h.primitive_space();
  Json pb = Json::array();
  for (const auto& v : prim) pb.push_back(terms_text(h, v.terms()));
  rep.payload = {{"dim", dim},
                 {"wdeg", q},
                 {"seed", s.options.seed},
                 {"primitive_dim", prim.size()},
                 {"primitive_basis", pb},
                 {"commutative", is_commutative(sc)},
                 {"cocommutative", is_cocommutative(sc)},
                 {"summary", check_json(summary)},
                 {"axioms", check_json(axioms)},
                 {"structure", io::structure_json(sc)}};
  if (!axioms.ok) {
    rep.status = "violation";
    rep.exit = kViolation;
    rep.diagnose(axioms.failure, axioms.witness);
  }
  rep.header = {"a", "b", "product"};
  for (std::uint64_t a = 0; a < dim; ++a)
    for (std::uint64_t b = 0; b < dim; ++b) rep.rows.push_back({h.label(a), h.label(b), terms_text(h, sc.mult[a * dim + b])});
  rep.text.push_back("dimension " + std::to_string(dim) + ", primitive dimension " + std::to_string(prim.size()));
  rep.text.push_back(std::string("axioms ") + (axioms.ok ? "hold" : "fail: " + axioms.failure) + " (" +
                     std::to_string(axioms.checks) + " checks, " + (axioms.exhaustive ? "exhaustive" : "seed " + std::to_string(axioms.seed)) + ")");
  rep.text.push_back(std::string(is_commutative(sc) ? "commutative" : "noncommutative") + ", " +
                     (is_cocommutative(sc) ? "cocommutative" : "noncocommutative"));
  return rep;
}

Report cmd_primitives(const Flags& fl) {
  Report rep{"primitives"};
  io::JobSpec s = load(fl);
  Cobar c(s.data.type);
  if (!add_violations(rep, validate_data(c, s.data))) return rep;
  HopfAlg h(s.data, false);
  auto prim = h.primitive_space();
  bool crit = thmAc_criterion(h);
  const std::size_t d = s.data.type.d();
  Json pb = Json::array();
  rep.header = {"index", "element"};
  for (std::size_t i = 0; i < prim.size(); ++i) {
    pb.push_back(terms_text(h, prim[i].terms()));
    rep.rows.push_back({std::to_string(i), terms_text(h, prim[i].terms())});
  }
  rep.payload = {{"primitive_dim", prim.size()},
                 {"h_dim", d},
                 {"basis", pb},
                 {"criterion", crit},
                 {"consistent", crit == (prim.size() == d)}};
  rep.text.push_back("primitive dimension " + std::to_string(prim.size()) + " (dim h = " + std::to_string(d) + ")");
  rep.text.push_back(std::string("independence criterion: ") + (crit ? "true" : "false"));
  for (const auto& v : pb) rep.text.push_back("  " + v.get<std::string>());
  return rep;
}

Report cmd_h2(const Flags& fl) {
  Report rep{"h2"};
  io::JobSpec s = load(fl);
  Cobar c(s.data.type);
  if (!add_violations(rep, validate_type(s.data.type))) return rep;
  Classifier k(c);
  const UEnv& a = c.algebra();

  Json chi = nullptr;
  if (c.is_cocycle(s.data.chi)) {
    auto r = c.h2_reduce(s.data.chi);
    chi = {{"class", io::h2_json(r.coord)}, {"witness", io::alg_json(a, r.witness)},
           {"z_characteristic", c.is_z_characteristic(r.coord)}};
    if (c.is_z_characteristic(r.coord)) chi["admissible"] = c.is_admissible(r.coord).admissible;
  } else {
    rep.diagnose("ChiNotCocycle", "the chi of the input is not a cocycle");
  }

  Json zb = Json::array(), h1b = Json::array();
  for (const auto& x : c.zchar_basis_generic()) zb.push_back(io::h2_json(x));
  auto h1v = h1(c);
  for (const auto& v : h1v) {
    Json e = Json::array();
    for (Fe x : v) e.push_back(io::fe_json(x));
    h1b.push_back(e);
  }
  auto classes = k.st_enumerate({s.options.include_pg, s.options.budget});
  Json cls = Json::array();
  rep.header = {"index", "theta", "wedge", "omega", "fiber"};
  std::uint64_t fiber = k.rho_kernel().size() / k.phi_image().size();
  for (std::size_t i = 0; i < classes.size(); ++i) {
    cls.push_back(class_row(k, classes[i], fiber));
    rep.rows.push_back({std::to_string(i), join(classes[i].theta), join(classes[i].xi.wedge), join(classes[i].xi.omega),
                        std::to_string(fiber)});
  }
  rep.payload = {{"chi", chi},
                 {"zchar_basis", zb},
                 {"h1_basis", h1b},
                 {"h1_fp_dim", h1v.size()},
                 {"phi_image_size", k.phi_image().size()},
                 {"rho_kernel_size", k.rho_kernel().size()},
                 {"include_pg", s.options.include_pg},
                 {"class_count", classes.size()},
                 {"classes", cls}};
  rep.text.push_back(std::to_string(classes.size()) + " classes" + (s.options.include_pg ? " (with primitively generated)" : ""));
  rep.text.push_back("H^1 has F_p-dimension " + std::to_string(h1v.size()) + ", fiber size " + std::to_string(fiber));
  for (const auto& cl : classes) rep.text.push_back("  theta [" + join(cl.theta) + "] xi " + h2_text(cl.xi));
  return rep;
}

void census_report(Report& rep, const LineOrbitReport& r, const Flags& fl) {
  std::vector<CensusRecord> census = builtin_census();
  if (!fl.census.empty()) {
    std::ifstream in(fl.census);
    if (!in) throw Error(ErrorCode::MalformedInput, "cannot read " + fl.census);
    census = parse_census(in);
  }
  Json reps = Json::array();
  rep.header = {"index", "representative", "size"};
  for (std::size_t i = 0; i < r.reps.size(); ++i) {
    reps.push_back({{"coords", r.reps[i]}, {"size", r.sizes[i]}});
    std::string v;
    for (int x : r.reps[i]) v += (v.empty() ? "" : " ") + std::to_string(x);
    rep.rows.push_back({std::to_string(i), v, std::to_string(r.sizes[i])});
  }
  rep.payload = {{"mode", "geometric"},
                 {"p", r.p},
                 {"d", r.d},
                 {"lines", r.lines},
                 {"group_order", r.group_order},
                 {"orbit_count", r.reps.size()},
                 {"orbits", reps}};
  std::string line = std::to_string(r.reps.size()) + (r.reps.size() == 1 ? " orbit" : " orbits");
  try {
    CensusVerdict v = census_compare(r, census);
    rep.payload["census"] = {{"count", v.census}, {"match", v.match}};
    line += " = " + std::to_string(v.census) + (v.census == 1 ? " group" : " groups") + ", " + (v.match ? "MATCH" : "MISMATCH");
  } catch (const Error& e) {
    if (e.code() != ErrorCode::MissingRecord) throw;
    rep.payload["census"] = nullptr;
    rep.diagnose("MissingRecord", "no census record; comparison skipped");
    line += ", census comparison skipped";
  }
  rep.text.push_back(line);
  rep.text.push_back(std::to_string(r.lines) + " lines, group order " + std::to_string(r.group_order));
}

bool is_split_torus(const TypeT& t) {
  return t.h.pmap == Matrix::identity(t.field(), t.d()) && t.rho.is_zero();
}

Report cmd_orbits(const Flags& fl) {
  Report rep{"orbits"};
  io::JobSpec s = load(fl);
  const TypeT& t = s.data.type;
  if (!add_violations(rep, validate_type(t))) return rep;
  if (s.options.mode == "geometric") {
    if (!is_split_torus(t)) {
      rep.status = "violation";
      rep.exit = kViolation;
      rep.diagnose("NotSplitTorus", "geometric mode needs x_i^[p] = x_i and rho = 0");
      return rep;
    }
    census_report(rep, semisimple_classify(t.p(), t.d(), s.options.budget), fl);
    return rep;
  }

  auto group = aut_enumerate(t, s.options.budget);
  Cobar c(t);
  Classifier k(c);
  auto classes = k.st_enumerate({s.options.include_pg, s.options.budget});
  OrbitReport r = k.orbits(classes, group);
  std::uint64_t fiber = k.rho_kernel().size() / k.phi_image().size();
  Json reps = Json::array();
  rep.header = {"index", "theta", "wedge", "omega", "size"};
  for (std::size_t i = 0; i < r.reps.size(); ++i) {
    Json e = class_row(k, r.reps[i], fiber);
    e["size"] = r.sizes[i];
    reps.push_back(e);
    rep.rows.push_back({std::to_string(i), join(r.reps[i].theta), join(r.reps[i].xi.wedge), join(r.reps[i].xi.omega),
                        std::to_string(r.sizes[i])});
  }
  rep.payload = {{"mode", "literal"},
                 {"include_pg", s.options.include_pg},
                 {"class_count", r.total},
                 {"group_order", r.group_order},
                 {"h1_fp_dim", h1(c).size()},
                 {"fiber", fiber},
                 {"orbit_count", r.reps.size()},
                 {"orbits", reps}};
  rep.text.push_back(std::to_string(r.total) + " classes, " + std::to_string(r.reps.size()) + " orbits, group order " +
                     std::to_string(r.group_order));
  for (std::size_t i = 0; i < r.reps.size(); ++i)
    rep.text.push_back("  theta [" + join(r.reps[i].theta) + "] xi " + h2_text(r.reps[i].xi) + "  size " +
                       std::to_string(r.sizes[i]));
  return rep;
}

Report cmd_semisimple(const Flags& fl) {
  Report rep{"semisimple"};
  int p = 0;
  std::size_t d = 0;
  std::uint64_t budget = fl.budget.value_or(50'000'000);
  if (fl.pd.size() == 2) {
    p = fl.pd[0];
    if (fl.pd[1] < 1) throw Error(ErrorCode::MalformedInput, "d must be positive");
    d = static_cast<std::size_t>(fl.pd[1]);
  } else if (!fl.input.empty()) {
    io::JobSpec s = load(fl);
    p = s.data.type.p();
    d = s.data.type.d();
    if (fl.budget) budget = s.options.budget;
  } else {
    throw Error(ErrorCode::MalformedInput, "semisimple needs P D or --input");
  }
  census_report(rep, semisimple_classify(p, d, budget), fl);
  return rep;
}

Report cmd_sigma(const Flags& fl) {
  Report rep{"sigma"};
  io::JobSpec s = load(fl);
  Cobar c(s.data.type);
  if (!add_violations(rep, validate_data(c, s.data))) return rep;
  HopfAlg h(s.data, false);
  const std::uint64_t q = h.wdeg();
  auto [i, j] = s.sigma.value_or(std::pair{q - 1, std::uint64_t{1}});
  const UEnv& a = c.algebra();
  AlgElem v = cleft_sigma(h, i, j);
  AlgElem top = cleft_sigma(h, q - 1, 1);
  bool identity = top == -s.data.theta;
  bool symmetric = top == cleft_sigma(h, 1, q - 1);
  rep.payload = {{"i", i}, {"j", j}, {"sigma", io::alg_json(a, v)}, {"top_equals_minus_theta", identity},
                 {"top_symmetric", symmetric}};
  if (!identity || !symmetric) {
    rep.status = "violation";
    rep.exit = kViolation;
    rep.diagnose("CleftIdentity", "sigma(z^{q-1}, z) differs from -Theta or is not symmetric");
  }
  rep.header = {"mono", "c"};
  for (const Term& t : v.terms()) {
    std::string m;
    for (int e : a.exps(t.key)) m += (m.empty() ? "" : " ") + std::to_string(e);
    rep.rows.push_back({m, std::to_string(t.c.code())});
  }
  rep.text.push_back("sigma(z^" + std::to_string(i) + ", z^" + std::to_string(j) + ") = " + alg_text(a, v));
  rep.text.push_back(std::string("sigma(z^{q-1}, z) = -Theta: ") + (identity ? "yes" : "no") +
                     ", symmetric: " + (symmetric ? "yes" : "no"));
  return rep;
}

Report cmd_iso(const Flags& fl) {
  Report rep{"iso-check"};
  io::JobSpec s = load(fl);
  if (!s.target || !s.iso) throw Error(ErrorCode::MalformedInput, "iso-check needs \"target\" and \"iso\"");
  Cobar c(s.data.type);
  bool ok = add_violations(rep, validate_data(c, s.data));
  ok = add_violations(rep, validate_data(c, *s.target)) && ok;
  ok = add_violations(rep, validate_aut(s.data.type, s.iso->g)) && ok;
  if (!ok) return rep;
  bool iso = iso_check(c, s.iso->t, s.iso->g, *s.target, s.data);
  rep.payload = {{"isomorphism", iso}};
  if (!iso) {
    rep.status = "violation";
    rep.exit = kViolation;
    rep.diagnose("NotIsomorphism", "(t, g) does not map the data to the target");
  }
  rep.header = {"isomorphism"};
  rep.rows.push_back({iso ? "true" : "false"});
  rep.text.push_back(iso ? "isomorphism" : "not an isomorphism");
  return rep;
}

// ---------------------------------------------------------------------------

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string r = "\"";
  for (char ch : s) r += ch == '"' ? std::string("\"\"") : std::string(1, ch);
  return r + "\"";
}

std::string render(const Report& rep, const std::string& format) {
  std::ostringstream os;
  if (format == "csv") {
    auto line = [&](const std::vector<std::string>& v) {
      for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << csv_field(v[i]);
      os << '\n';
    };
    line(rep.header);
    for (const auto& r : rep.rows) line(r);
  } else if (format == "text") {
    os << rep.command << ": " << rep.status << '\n';
    for (const auto& l : rep.text) os << l << '\n';
    for (const auto& d : rep.diagnostics) {
      os << "  " << d["condition"].get<std::string>() << ": " << d["message"].get<std::string>() << '\n';
    }
  } else {
    Json j{{"schema_version", io::kSchemaVersion},
           {"command", rep.command},
           {"status", rep.status},
           {"payload", rep.payload},
           {"diagnostics", rep.diagnostics}};
    os << j.dump(2) << '\n';
  }
  return os.str();
}

int emit(const Report& rep, const Flags& fl) {
  std::string text = render(rep, fl.format);
  if (rep.command == "construct" && rep.exit != kOk && fl.verify.empty()) {
    std::cout << text;
    return rep.exit;
  }
  if (fl.out.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(fl.out, std::ios::binary);
    if (!out) throw Error(ErrorCode::MalformedInput, "cannot write " + fl.out);
    out << text;
  }
  return rep.exit;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Connected Hopf algebras u(D) over finite fields"};
  app.require_subcommand(1);
  Flags fl;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--input", fl.input, "job specification (JSON)");
    sub->add_option("--out", fl.out, "write the report here instead of stdout");
    sub->add_option("--format", fl.format, "json, csv or text")->check(CLI::IsMember({"json", "csv", "text"}));
    sub->add_option("--budget", fl.budget, "enumeration budget");
    sub->add_option("--seed", fl.seed, "seed for randomized checks");
    sub->add_option("--mode", fl.mode, "literal or geometric")->check(CLI::IsMember({"literal", "geometric"}));
    sub->add_flag("--include-pg", fl.include_pg, "also list primitively generated classes");
    sub->add_option("--census", fl.census, "census CSV (p,d,count)");
  };

  std::vector<std::pair<CLI::App*, Report (*)(const Flags&)>> cmds;
  auto add = [&](const char* name, const char* help, Report (*fn)(const Flags&)) {
    CLI::App* sub = app.add_subcommand(name, help);
    common(sub);
    cmds.push_back({sub, fn});
    return sub;
  };
  add("validate", "check a type and its data", cmd_validate);
  add("construct", "build u(D) and write its structure constants", cmd_construct)
      ->add_option("--verify", fl.verify, "re-check a structure-constants document");
  add("primitives", "primitive elements of u(D)", cmd_primitives);
  add("h2", "second cohomology, classes and fibers", cmd_h2);
  add("orbits", "isomorphism classes up to Aut(T)", cmd_orbits);
  add("semisimple", "orbits of quadratic forms and the p-group census", cmd_semisimple)
      ->add_option("pd", fl.pd, "P D")
      ->expected(2);
  add("sigma", "cleft cocycle sigma(z^i, z^j)", cmd_sigma);
  add("iso-check", "check an isomorphism (t, g) between two data", cmd_iso);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kMalformed;
  }

  for (auto& [sub, fn] : cmds) {
    if (!sub->parsed()) continue;
    try {
      return emit(fn(fl), fl);
    } catch (const Error& e) {
      Report rep{sub->get_name()};
      rep.status = "error";
      rep.exit = exit_code(e.code());
      std::string msg = e.what();
      const std::string prefix = std::string(to_string(e.code())) + ": ";
      if (msg.rfind(prefix, 0) == 0) msg.erase(0, prefix.size());
      rep.diagnose(std::string(to_string(e.code())), msg);
      std::cerr << e.what() << '\n';
      std::cout << render(rep, fl.format == "csv" ? "json" : fl.format);
      return rep.exit;
    } catch (const std::exception& e) {
      std::cerr << "error: " << e.what() << '\n';
      return kMalformed;
    }
  }
  return kMalformed;
}
