#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "fibcalc/cli/report.hpp"

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw fibcalc::MalformedInput("cannot open '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fibered knot, disk and 2-knot calculator"};
  app.require_subcommand(1);

  fibcalc::ReportOptions options;
  std::optional<std::uint64_t> budget;
  unsigned workers = 1;
  bool json = false;
  std::string path;

  auto* run = app.add_subcommand("run", "Execute a surgery script");
  run->add_option("script", path, "Script file")->required();
  run->add_flag("--json", json, "Canonical JSON output");
  run->add_option("--hom-budget", budget, "Search-node budget for homomorphism counting");
  run->add_option("--workers", workers, "Threads for homomorphism counting")->check(CLI::Range(1u, 256u));

  auto* catalog = app.add_subcommand("catalog", "List catalog objects and finite groups");

  auto* report = app.add_subcommand("report", "Report invariants of a serialized object");
  report->add_option("object", path, "Object JSON file")->required();
  report->add_flag("--json", json, "Canonical JSON output");
  report->add_option("--hom-budget", budget, "Search-node budget for homomorphism counting");
  report->add_option("--workers", workers, "Threads for homomorphism counting")->check(CLI::Range(1u, 256u));

  CLI11_PARSE(app, argc, argv);

  try {
    options.hom.budget = budget ? *budget : fibcalc::default_hom_budget();
    options.hom.workers = workers;
    if (*catalog) {
      std::cout << "objects:\n";
      for (const auto& n : fibcalc::catalog_object_names())
        std::cout << "  " << n << " (" << fibcalc::object_kind(fibcalc::catalog_object(n)) << ")\n";
      std::cout << "groups:\n";
      for (const auto& g : fibcalc::catalog_group_names())
        std::cout << "  " << g << " (order " << fibcalc::catalog_group(g).order() << ")\n";
      return 0;
    }
    if (*run) {
      const fibcalc::SurgeryScript script = fibcalc::parse_script(read_file(path));
      const fibcalc::ExecutionResult result = fibcalc::execute(script, options);
      if (json) std::cout << result.to_json().dump(2) << "\n";
      else std::cout << result.to_text();
      if (result.error) std::cerr << "error: line " << result.error->line << ": " << result.error->message << "\n";
      return result.exit_code();
    }
    const fibcalc::Json j = fibcalc::Json::parse(read_file(path));
    const fibcalc::InvariantReport r = fibcalc::make_report(fibcalc::deserialize(j), options);
    std::cout << (json ? r.to_json() + "\n" : r.to_text());
    return 0;
  } catch (const fibcalc::Json::exception& e) {
    std::cerr << "error: invalid JSON: " << e.what() << "\n";
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
  }
  return 1;
}
