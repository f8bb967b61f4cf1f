#include "hc/io.hpp"

#include <fstream>
#include <sstream>

namespace hc {

namespace {

[[noreturn]] void parse_error(const std::string& what) { throw Error(ErrorCode::ParseError, what); }

const Json& field_of(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) parse_error(std::string("missing key \"") + key + "\"");
  return j.at(key);
}

int int_of(const Json& j, const char* what) {
  if (!j.is_number_integer()) parse_error(std::string(what) + " must be an integer");
  return j.get<int>();
}

std::string string_of(const Json& j, const char* what) {
  if (!j.is_string()) parse_error(std::string(what) + " must be a string");
  return j.get<std::string>();
}

}  // namespace

Json to_json(const FieldDesc& F) {
  if (F.kind() == FieldKind::rationals) return Json{{"kind", "rationals"}};
  return Json{{"kind", "real_quadratic"}, {"d", F.radicand()}};
}

FieldDesc field_from_json(const Json& j) {
  const std::string kind = string_of(field_of(j, "kind"), "field kind");
  if (kind == "rationals") return FieldDesc::rationals();
  if (kind == "real_quadratic") {
    const Json& d = field_of(j, "d");
    if (!d.is_number_integer()) parse_error("field d must be an integer");
    return FieldDesc::real_quadratic(d.get<long>());
  }
  parse_error("unknown field kind \"" + kind + "\"");
}

Json to_json(const FieldElem& x) { return x.to_string(); }

FieldElem elem_from_json(const Json& j) {
  if (j.is_number_integer()) return FieldElem(j.get<long>());
  if (j.is_string()) return FieldElem::parse(j.get<std::string>());
  parse_error("field element must be a string or an integer");
}

Json to_json(const DElem& x) {
  Json out = Json::array();
  for (int i = 0; i < x.dim(); ++i) out.push_back(to_json(x.coord(i)));
  return out;
}

DElem delem_from_json(const DivisionAlgebra& D, const Json& j) {
  if (!j.is_array()) return D.scalar(elem_from_json(j));
  if (static_cast<int>(j.size()) > D.dim()) parse_error("too many coordinates for " + std::to_string(D.dim()) + "-dimensional D");
  std::vector<FieldElem> c(static_cast<size_t>(D.dim()));
  for (size_t i = 0; i < j.size(); ++i) c[i] = elem_from_json(j[i]);
  return D.elem(std::move(c));
}

Json to_json(const MatD& x) {
  Json out = Json::array();
  for (Eigen::Index i = 0; i < x.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index k = 0; k < x.cols(); ++k) row.push_back(to_json(x(i, k)));
    out.push_back(std::move(row));
  }
  return out;
}

MatD matrix_from_json(const DivisionAlgebra& D, const Json& j) {
  if (!j.is_array() || j.empty() || !j[0].is_array()) parse_error("matrix must be a nonempty array of rows");
  const auto n = static_cast<Eigen::Index>(j.size());
  const auto m = static_cast<Eigen::Index>(j[0].size());
  MatD x(n, m);
  for (Eigen::Index i = 0; i < n; ++i) {
    const Json& row = j[static_cast<size_t>(i)];
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != m) parse_error("ragged matrix rows");
    for (Eigen::Index k = 0; k < m; ++k) x(i, k) = delem_from_json(D, row[static_cast<size_t>(k)]);
  }
  return x;
}

Json to_json(const DivisionAlgebra& D) {
  const auto& d = D.desc();
  switch (d.kind) {
    case DivisionKind::split: return Json{{"kind", "split"}};
    case DivisionKind::quad: return Json{{"kind", "quad"}, {"d", to_json(d.p)}};
    case DivisionKind::quat: return Json{{"kind", "quat"}, {"a", to_json(d.p)}, {"b", to_json(d.q)}};
  }
  return {};
}

DivisionAlgebra division_from_json(const FieldDesc& F, const Json& j) {
  const std::string kind = string_of(field_of(j, "kind"), "div kind");
  if (kind == "split") return DivisionAlgebra::split(F);
  if (kind == "quad") return DivisionAlgebra::quad(F, elem_from_json(field_of(j, "d")));
  if (kind == "quat") return DivisionAlgebra::quat(F, elem_from_json(field_of(j, "a")), elem_from_json(field_of(j, "b")));
  parse_error("unknown div kind \"" + kind + "\"");
}

Json to_json(const AlgebraWithInvolution& A) {
  return Json{{"field", to_json(A.field())}, {"div", to_json(A.division())}, {"ell", A.ell()}, {"phi", to_json(A.phi())}};
}

AlgebraWithInvolution algebra_from_json(const Json& j) {
  const FieldDesc F = field_from_json(field_of(j, "field"));
  const DivisionAlgebra D = division_from_json(F, j.contains("div") ? j.at("div") : Json{{"kind", "split"}});
  const int ell = j.contains("ell") ? int_of(j.at("ell"), "ell") : 1;
  if (ell < 1) parse_error("ell must be positive");
  if (!j.contains("phi")) return AlgebraWithInvolution::transpose_type(D, ell);
  return AlgebraWithInvolution(D, ell, matrix_from_json(D, j.at("phi")));
}

Json to_json(const HermitianForm& h) {
  Json gram = Json::array();
  for (int i = 0; i < h.rank(); ++i) {
    Json row = Json::array();
    for (int k = 0; k < h.rank(); ++k) row.push_back(to_json(h.block(i, k)));
    gram.push_back(std::move(row));
  }
  return Json{{"rank", h.rank()}, {"gram", std::move(gram)}};
}

HermitianForm form_from_json(const AlgebraWithInvolution& A, const Json& j) {
  const auto& D = A.division();
  if (j.is_object() && j.contains("diag")) {
    std::vector<MatD> elems;
    for (const auto& e : j.at("diag")) elems.push_back(matrix_from_json(D, e));
    return diag_sigma(A, elems);
  }
  const int k = int_of(field_of(j, "rank"), "rank");
  const Json& gram = field_of(j, "gram");
  const int ell = A.ell();
  if (k < 0 || !gram.is_array() || static_cast<int>(gram.size()) != k) parse_error("gram must have rank rows");
  MatD flat(k * ell, k * ell);
  for (int i = 0; i < k; ++i) {
    const Json& row = gram[static_cast<size_t>(i)];
    if (!row.is_array() || static_cast<int>(row.size()) != k) parse_error("gram must have rank columns");
    for (int c = 0; c < k; ++c) {
      const MatD b = matrix_from_json(D, row[static_cast<size_t>(c)]);
      if (b.rows() != ell || b.cols() != ell) parse_error("gram blocks must be ell x ell");
      flat.block(i * ell, c * ell, ell, ell) = b;
    }
  }
  return HermitianForm(A, std::move(flat));
}

Json to_json(const QuadraticFormF& q) {
  Json out = Json::array();
  for (const auto& e : q.entries) out.push_back(to_json(e));
  return out;
}

Json to_json(const OrderingInfo& info) {
  return Json{{"P", info.P.name()}, {"class", to_string(info.cls)}, {"n_P", info.n_P}, {"nil", info.nil}};
}

Json to_json(const PositiveCone& K) { return Json{{"P", K.P.name()}, {"eps", K.eps}}; }

Json to_json(const DiagonalizationResult& d) {
  Json entries = Json::array();
  for (const auto& e : d.entries) entries.push_back(to_json(e));
  return Json{{"entries", std::move(entries)}, {"rank", d.rank()}, {"witness", to_json(d.witness)}};
}

Json to_json(const SylvesterDecomposition& d) {
  Json betas = Json::array();
  for (const auto& b : d.betas) betas.push_back(to_json(b));
  Json pos = Json::array();
  for (const auto& e : d.pos_entries) pos.push_back(to_json(e));
  Json neg = Json::array();
  for (const auto& e : d.neg_entries) neg.push_back(to_json(e));
  return Json{{"t", d.t}, {"betas", std::move(betas)}, {"r", d.r}, {"s", d.s}, {"pos", std::move(pos)}, {"neg", std::move(neg)}};
}

OrderingId ordering_from_json(const FieldDesc& F, const Json& j) {
  OrderingId P;
  if (j.is_number_integer()) {
    P.index = j.get<int>();
  } else {
    const std::string s = string_of(j, "ordering");
    if (s.size() < 2 || s[0] != 'P') parse_error("ordering must look like \"P0\"");
    try {
      P.index = std::stoi(s.substr(1));
    } catch (const std::exception&) {
      parse_error("ordering must look like \"P0\"");
    }
  }
  check_ordering(F, P);
  return P;
}

PositiveCone cone_from_json(const AlgebraWithInvolution& A, const Json& j) {
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    if (s.size() < 2 || (s[0] != '+' && s[0] != '-')) parse_error("cone must look like \"+P0\" or \"-P0\"");
    const OrderingId P = ordering_from_json(A.field(), Json(s.substr(1)));
    require_non_nil(A, P);
    return {A, P, s[0] == '+' ? 1 : -1};
  }
  const OrderingId P = ordering_from_json(A.field(), field_of(j, "P"));
  const int eps = j.contains("eps") ? int_of(j.at("eps"), "eps") : 1;
  if (eps != 1 && eps != -1) parse_error("eps must be 1 or -1");
  require_non_nil(A, P);
  return {A, P, eps};
}

ProblemFile problem_from_json(const Json& j) {
  try {
    if (!j.is_object()) parse_error("problem must be a JSON object");
    if (j.contains("schema") && string_of(j.at("schema"), "schema") != kSchema) {
      parse_error("unsupported schema \"" + j.at("schema").get<std::string>() + "\"");
    }
    Json alg = field_of(j, "algebra");
    if (j.contains("field")) {
      if (alg.contains("field") && alg.at("field") != j.at("field")) parse_error("field and algebra.field differ");
      alg["field"] = j.at("field");
    }
    ProblemFile p{algebra_from_json(alg), {}, {}, {}};
    if (j.contains("elements")) {
      for (const auto& [name, value] : j.at("elements").items()) {
        p.elements.emplace(name, matrix_from_json(p.algebra.division(), value));
      }
    }
    if (j.contains("forms")) {
      for (const auto& [name, value] : j.at("forms").items()) {
        p.forms.emplace(name, form_from_json(p.algebra, value));
      }
    }
    if (j.contains("tasks")) {
      for (const auto& t : j.at("tasks")) {
        p.tasks.push_back({string_of(field_of(t, "command"), "command"), t.contains("args") ? t.at("args") : Json::object()});
      }
    }
    return p;
  } catch (const nlohmann::json::exception& e) {
    parse_error(e.what());
  }
}

ProblemFile load_problem(const std::string& path) {
  std::ifstream in(path);
  if (!in) parse_error("cannot open " + path);
  Json j;
  try {
    j = Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    parse_error(path + ": " + e.what());
  }
  return problem_from_json(j);
}

}  // namespace hc
