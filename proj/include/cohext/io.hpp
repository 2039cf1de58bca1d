#pragma once
// JSON documents read and written by the command-line tool.
//
// Conventions:
//   field element  integer code sum a_i p^i, or the list [a_0, ..., a_{k-1}]
//   matrix         list of columns
//   monomial       exponent list [e_1, ..., e_d] (0 <= e_i < p), or its index
//   theta          [{"mono": m, "c": c}, ...]
//   chi            [{"left": m, "right": m, "c": c}, ...]
// Every document carries "schema_version". Shape errors throw MalformedInput.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cohext/classify.hpp"
#include "json.hpp"

namespace cohext::io {

using Json = nlohmann::json;

inline constexpr int kSchemaVersion = 1;
inline constexpr std::uint64_t kMaxMonomials = 4096;

struct JobOptions {
  std::string mode = "literal";
  bool include_pg = false;
  std::uint64_t budget = 2'000'000;
  std::uint64_t seed = 1;
};

struct JobSpec {
  ExtData data;
  JobOptions options;
  std::optional<ExtData> target;  // D' for iso-check
  std::optional<IsoPair> iso;     // (t, g) for iso-check
  std::optional<std::pair<std::uint64_t, std::uint64_t>> sigma;
};

JobSpec parse_job(const Json& j);
JobSpec parse_job_text(const std::string& text);
Json to_json(const JobSpec& s);

Fe parse_fe(const Field& f, const Json& j);
Json fe_json(Fe x);
Matrix parse_matrix(const Field& f, std::size_t rows, std::size_t cols, const Json& j);
Json matrix_json(const Matrix& m);
Json field_json(const Field& f);
Field parse_field(const Json& j);

std::uint64_t parse_mono(const UEnv& a, const Json& j);
Json mono_json(const UEnv& a, std::uint64_t m);
AlgElem parse_alg(const UEnv& a, const Json& j);
Json alg_json(const UEnv& a, const AlgElem& x);
Tensor2 parse_tensor(const UEnv& a, const Json& j);
Json tensor_json(const UEnv& a, const Tensor2& t);

Json type_json(const TypeT& t);
Json h2_json(const H2Coord& xi);
Json class_json(const UEnv& a, const H2Class& c);

Json structure_json(const StructureConstants& s);
StructureConstants parse_structure(const Json& j);

}  // namespace cohext::io
