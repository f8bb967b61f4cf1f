#include "commands.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

#include "hc/morita.hpp"

namespace hc::cli {

namespace {

[[noreturn]] void bad_args(const std::string& what) { throw Error(ErrorCode::ParseError, what); }

std::string name_arg(const Json& args, const char* key) {
  if (!args.contains(key) || !args.at(key).is_string()) bad_args(std::string("task needs a \"") + key + "\" name");
  return args.at(key).get<std::string>();
}

const HermitianForm& form_arg(const ProblemFile& p, const Json& args) {
  const std::string name = name_arg(args, "form");
  auto it = p.forms.find(name);
  if (it == p.forms.end()) bad_args("unknown form \"" + name + "\"");
  return it->second;
}

const MatD& element_named(const ProblemFile& p, const std::string& name) {
  auto it = p.elements.find(name);
  if (it == p.elements.end()) bad_args("unknown element \"" + name + "\"");
  return it->second;
}

std::vector<MatD> elements_arg(const ProblemFile& p, const Json& args) {
  std::vector<MatD> out;
  if (args.contains("elements")) {
    for (const auto& n : args.at("elements")) {
      if (!n.is_string()) bad_args("element names must be strings");
      out.push_back(element_named(p, n.get<std::string>()));
    }
  } else {
    out.push_back(element_named(p, name_arg(args, "element")));
  }
  return out;
}

OrderingId ordering_arg(const ProblemFile& p, const Json& args) {
  if (!args.contains("ordering")) bad_args("task needs an \"ordering\"");
  return ordering_from_json(p.algebra.field(), args.at("ordering"));
}

PivotStrategy pivot_arg(const Json& args) {
  if (!args.contains("pivot")) return PivotStrategy::first;
  const std::string s = args.at("pivot").is_string() ? args.at("pivot").get<std::string>() : "";
  if (s == "first") return PivotStrategy::first;
  if (s == "last") return PivotStrategy::last;
  bad_args("pivot must be \"first\" or \"last\"");
}

Json cones_json(const std::vector<PositiveCone>& cones) {
  Json out = Json::array();
  for (const auto& K : cones) out.push_back(to_json(K));
  return out;
}

Json signatures(const HermitianForm& h) {
  Json out = Json::object();
  for (auto P : orderings(h.algebra().field())) out[P.name()] = sign_eta(h, P);
  return out;
}

}  // namespace

int default_budget() {
  if (const char* env = std::getenv("HC_BUDGET")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0 && v < 1'000'000) return static_cast<int>(v);
  }
  return 64;
}

const std::vector<std::string>& task_commands() {
  static const std::vector<std::string> names = {"classify", "sign",   "diag",         "collapse",   "cones",     "member",
                                                 "posinv",   "hsigma", "presylvester", "maximal-on", "represents"};
  return names;
}

Outcome execute(const ProblemFile& p, const Task& task, const Options& options) {
  const auto& A = p.algebra;
  const Json& args = task.args;
  const std::string& cmd = task.command;

  if (cmd == "classify") {
    Json out = Json::array();
    for (const auto& info : classify_all(A)) out.push_back(to_json(info));
    return {out, std::nullopt};
  }
  if (cmd == "sign") {
    const HermitianForm& h = form_arg(p, args);
    if (args.contains("cone")) {
      const PositiveCone K = cone_from_json(A, args.at("cone"));
      return {Json{{K.name(), sign_cone(h, K)}}, std::nullopt};
    }
    return {signatures(h), std::nullopt};
  }
  if (cmd == "diag") return {to_json(diagonalize(form_arg(p, args), pivot_arg(args))), std::nullopt};
  if (cmd == "collapse") {
    const HermitianForm reduced = full_reduction(form_arg(p, args));
    return {Json{{"algebra", to_json(reduced.algebra())}, {"form", to_json(reduced)}}, std::nullopt};
  }
  if (cmd == "cones") return {cones_json(enumerate_cones(A)), std::nullopt};
  if (cmd == "member") {
    const MatD& u = element_named(p, name_arg(args, "element"));
    if (!args.contains("cone")) bad_args("member needs a \"cone\"");
    const PositiveCone K = cone_from_json(A, args.at("cone"));
    const bool in = member(u, K);
    return {Json{{"cone", K.name()}, {"member", in}}, in};
  }
  if (cmd == "posinv") {
    const OrderingId P = ordering_arg(p, args);
    const auto pi = positive_involution_at(A, P);
    return {Json{{"P", P.name()}, {"b", to_json(pi.b)}, {"tau_phi", to_json(pi.tau.phi())}}, std::nullopt};
  }
  if (cmd == "hsigma") {
    return {cones_json(harrison_sigma(A, elements_arg(p, args))), std::nullopt};
  }
  if (cmd == "presylvester") {
    const OrderingId P = ordering_arg(p, args);
    const auto dec = pre_sylvester(form_arg(p, args), P, pivot_arg(args));
    Json out = to_json(dec);
    out["sign"] = sylvester_sign(dec, PositiveCone{dec.form.algebra(), P, 1});
    return {out, std::nullopt};
  }
  if (cmd == "maximal-on") {
    const MatD& u = element_named(p, name_arg(args, "element"));
    std::vector<OrderingId> Y;
    if (args.contains("orderings")) {
      for (const auto& o : args.at("orderings")) Y.push_back(ordering_from_json(A.field(), o));
    } else {
      Y = x_tilde(A);
    }
    const bool maximal = is_maximal_on(A, u, Y);
    Json ys = Json::array();
    for (auto P : Y) ys.push_back(P.name());
    return {Json{{"orderings", ys}, {"maximal", maximal}}, maximal};
  }
  if (cmd == "represents") {
    const HermitianForm& h = form_arg(p, args);
    const MatD& u = element_named(p, name_arg(args, "element"));
    const int budget = args.contains("budget") ? args.at("budget").get<int>() : options.budget;
    const auto w = weakly_represents(h, u, budget, options.seed);
    if (!w) return {Json{{"represented", "unknown"}, {"budget", budget}}, false};
    return {Json{{"represented", "yes"}, {"copies", w->copies}, {"vector", to_json(w->vector)}}, true};
  }
  bad_args("unknown command \"" + cmd + "\"");
}

RunReport run(const ProblemFile& problem, const Options& options) {
  RunReport report{Json::array(), 0};
  for (const auto& task : problem.tasks) {
    Json entry{{"command", task.command}};
    try {
      Outcome o = execute(problem, task, options);
      entry["result"] = std::move(o.result);
      if (o.verdict && !*o.verdict && report.exit_code == 0) report.exit_code = 1;
    } catch (const Error& e) {
      entry["error"] = std::string(to_string(e.code()));
      entry["message"] = e.what();
      report.exit_code = 2;
    }
    report.output.push_back(std::move(entry));
  }
  return report;
}

namespace {

std::string scalar_text(const Json& j) { return j.is_string() ? j.get<std::string>() : j.dump(); }

bool has_object(const Json& j) {
  if (j.is_object()) return true;
  return j.is_array() && std::any_of(j.begin(), j.end(), [](const Json& x) { return has_object(x); });
}

// Objects become "key  value" lines; arrays without objects stay on one line.
void render(const Json& j, std::ostringstream& out, const std::string& indent) {
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) {
      if (has_object(v)) {
        out << indent << k << ":\n";
        render(v, out, indent + "  ");
      } else {
        out << indent << k << "  " << scalar_text(v) << "\n";
      }
    }
  } else if (j.is_array() && has_object(j)) {
    for (const auto& v : j) {
      if (has_object(v)) {
        out << indent << "-\n";
        render(v, out, indent + "  ");
      } else {
        out << indent << "- " << scalar_text(v) << "\n";
      }
    }
  } else {
    out << indent << scalar_text(j) << "\n";
  }
}

}  // namespace

std::string as_table(const Json& j) {
  std::ostringstream out;
  render(j, out, "");
  return out.str();
}

}  // namespace hc::cli
