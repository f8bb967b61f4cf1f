#pragma once

// JSON encoding of fields, algebras, forms and results. Field elements travel
// as exact strings ("p/q" or "p/q+r/s*sqrt(d)"); no floating point anywhere.

#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "hc/cones.hpp"

namespace hc {

using Json = nlohmann::ordered_json;

Json to_json(const FieldDesc& F);
FieldDesc field_from_json(const Json& j);

Json to_json(const FieldElem& x);
FieldElem elem_from_json(const Json& j);

/// Coordinate array of strings.
Json to_json(const DElem& x);
DElem delem_from_json(const DivisionAlgebra& D, const Json& j);

Json to_json(const MatD& x);
MatD matrix_from_json(const DivisionAlgebra& D, const Json& j);

Json to_json(const DivisionAlgebra& D);
DivisionAlgebra division_from_json(const FieldDesc& F, const Json& j);

Json to_json(const AlgebraWithInvolution& A);
/// {"field", "div", "ell", "phi"}; phi defaults to the identity.
AlgebraWithInvolution algebra_from_json(const Json& j);

/// {"rank": k, "gram": [[block, ...], ...]}
Json to_json(const HermitianForm& h);
HermitianForm form_from_json(const AlgebraWithInvolution& A, const Json& j);

Json to_json(const QuadraticFormF& q);
Json to_json(const OrderingInfo& info);
Json to_json(const PositiveCone& K);
Json to_json(const DiagonalizationResult& d);
Json to_json(const SylvesterDecomposition& d);

OrderingId ordering_from_json(const FieldDesc& F, const Json& j);
/// "+P0" / "-P1", or {"P": .., "eps": ..}.
PositiveCone cone_from_json(const AlgebraWithInvolution& A, const Json& j);

struct Task {
  std::string command;
  Json args;
};

struct ProblemFile {
  AlgebraWithInvolution algebra;
  std::map<std::string, HermitianForm> forms;
  std::map<std::string, MatD> elements;
  std::vector<Task> tasks;
};

inline constexpr const char* kSchema = "hcalc/1";

ProblemFile problem_from_json(const Json& j);
ProblemFile load_problem(const std::string& path);

}  // namespace hc
