#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fibcalc/cli/script.hpp"
#include "fibcalc/cli/serialize.hpp"

namespace fibcalc {

struct ReportOptions {
  HomCountOptions hom;
  std::vector<std::string> groups = {"S3", "S4", "A4", "D4"};
};

// Invariants of one object, in a fixed field order.
struct InvariantReport {
  Json data;

  std::string to_json() const { return data.dump(2); }
  std::string to_text() const;
};

InvariantReport make_report(const Object& o, const ReportOptions& options = {});

struct ExecutionError {
  std::size_t statement = 0;  // 1-based
  int line = 0;
  std::string message;
};

struct ExecutionResult {
  std::vector<InvariantReport> reports;
  std::optional<ExecutionError> error;

  int exit_code() const { return error ? 1 : 0; }
  Json to_json() const;
  std::string to_text() const;
};

// Names resolve to earlier bindings first, then to the catalog.
ExecutionResult execute(const SurgeryScript& script, const ReportOptions& options = {});

// Catalog objects addressable from scripts, by name.
std::vector<std::string> catalog_object_names();
Object catalog_object(const std::string& name);

}  // namespace fibcalc
