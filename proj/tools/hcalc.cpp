#include <iostream>
#include <map>
#include <optional>

#include <CLI11.hpp>

#include "commands.hpp"
#include "hc/zoo.hpp"
#include "verify.hpp"

namespace {

struct TaskFlags {
  std::string file;
  std::string form;
  std::string element;
  std::vector<std::string> elements;
  std::string cone;
  std::string ordering;
  std::vector<std::string> orderings;
  std::string pivot;
};

hc::Json task_args(const TaskFlags& f) {
  hc::Json args = hc::Json::object();
  if (!f.form.empty()) args["form"] = f.form;
  if (!f.element.empty()) args["element"] = f.element;
  if (!f.elements.empty()) args["elements"] = f.elements;
  if (!f.cone.empty()) args["cone"] = f.cone;
  if (!f.ordering.empty()) args["ordering"] = f.ordering;
  if (!f.orderings.empty()) args["orderings"] = f.orderings;
  if (!f.pivot.empty()) args["pivot"] = f.pivot;
  return args;
}

void emit(const hc::Json& j, bool table) {
  if (table) {
    std::cout << hc::cli::as_table(j);
  } else {
    std::cout << j.dump(2) << "\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"hcalc: hermitian forms, signatures and positive cones over algebras with involution"};
  app.require_subcommand(1);

  hc::cli::Options options;
  options.budget = hc::cli::default_budget();
  std::optional<int> budget_flag;
  bool table = false;
  app.add_option("--seed", options.seed, "RNG seed for sampled checks")->capture_default_str();
  app.add_option("--budget", budget_flag, "search budget for weak representations (default 64 or $HC_BUDGET)");
  auto* json_flag = app.add_flag("--json", "JSON output (default)");
  app.add_flag("--table", table, "plain-text output")->excludes(json_flag);

  TaskFlags flags;
  std::map<CLI::App*, std::string> task_apps;
  auto add_task = [&](const std::string& name, const std::string& help) {
    CLI::App* sub = app.add_subcommand(name, help)->fallthrough();
    sub->add_option("file", flags.file, "problem JSON")->required()->check(CLI::ExistingFile);
    task_apps[sub] = name;
    return sub;
  };
  add_task("classify", "class, n_P and nil flag of every ordering");
  add_task("sign", "signature of a form at every ordering, or at a cone")
      ->add_option("--form", flags.form)->required();
  app.get_subcommand("sign")->add_option("--cone", flags.cone, "e.g. +P0");
  auto* diag = add_task("diag", "diagonalize a form over (D, theta)");
  diag->add_option("--form", flags.form)->required();
  diag->add_option("--pivot", flags.pivot)->check(CLI::IsMember({"first", "last"}));
  add_task("collapse", "full reduction of a form to (D, theta)")->add_option("--form", flags.form)->required();
  add_task("cones", "positive cones of the algebra");
  auto* mem = add_task("member", "cone membership of an element (exit 1 if not a member)");
  mem->add_option("--element", flags.element)->required();
  mem->add_option("--cone", flags.cone)->required();
  add_task("posinv", "an involution positive at an ordering")->add_option("--ordering", flags.ordering)->required();
  add_task("hsigma", "cones containing all given elements")->add_option("--element", flags.elements)->required();
  auto* ps = add_task("presylvester", "pre-Sylvester decomposition of a form");
  ps->add_option("--form", flags.form)->required();
  ps->add_option("--ordering", flags.ordering)->required();
  ps->add_option("--pivot", flags.pivot)->check(CLI::IsMember({"first", "last"}));
  auto* mx = add_task("maximal-on", "maximality of an element on a set of orderings (exit 1 if not)");
  mx->add_option("--element", flags.element)->required();
  mx->add_option("--orderings", flags.orderings, "default: all non-nil orderings")->delimiter(',');
  auto* rep = add_task("represents", "search m x h for a vector X with value u (exit 1 if none found)");
  rep->add_option("--form", flags.form)->required();
  rep->add_option("--element", flags.element)->required();

  std::string run_file;
  auto* run = app.add_subcommand("run", "execute the tasks listed in a problem file")->fallthrough();
  run->add_option("file", run_file, "problem JSON")->required()->check(CLI::ExistingFile);

  std::vector<int> only;
  auto* selftest = app.add_subcommand("selftest", "run the acceptance suite on the built-in zoo")->fallthrough();
  selftest->add_option("--criteria", only, "subset of criteria, e.g. 1,4")->delimiter(',');
  auto* zoo = app.add_subcommand("zoo", "list the built-in algebras")->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }
  if (budget_flag) {
    if (*budget_flag < 1) {
      std::cerr << "ParseError: --budget must be positive\n";
      return 2;
    }
    options.budget = *budget_flag;
  }

  try {
    if (zoo->parsed()) {
      hc::Json out = hc::Json::array();
      for (const auto& z : hc::zoo()) out.push_back(hc::Json{{"name", z.name}, {"algebra", hc::to_json(z.algebra)}});
      emit(out, table);
      return 0;
    }
    if (selftest->parsed()) {
      bool all = true;
      hc::Json out = hc::Json::array();
      for (const auto& r : hc::verify::run_all(options.seed, only)) {
        all = all && r.pass;
        if (table) {
          std::cout << hc::verify::format_line(r) << "\n";
        } else {
          out.push_back(hc::Json{{"criterion", r.id}, {"title", r.title}, {"pass", r.pass}, {"detail", r.detail}});
        }
      }
      if (!table) emit(out, false);
      return all ? 0 : 1;
    }
    if (run->parsed()) {
      const auto report = hc::cli::run(hc::load_problem(run_file), options);
      emit(report.output, table);
      return report.exit_code;
    }
    for (const auto& [sub, name] : task_apps) {
      if (!sub->parsed()) continue;
      const hc::ProblemFile problem = hc::load_problem(flags.file);
      const auto outcome = hc::cli::execute(problem, {name, task_args(flags)}, options);
      emit(outcome.result, table);
      return outcome.verdict && !*outcome.verdict ? 1 : 0;
    }
  } catch (const hc::Error& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "InternalInvariantViolation: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
