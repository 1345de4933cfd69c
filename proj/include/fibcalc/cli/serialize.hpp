#pragma once

#include <string>
#include <variant>

#include "fibcalc/twoknot/two_knot.hpp"
#include "json.hpp"

namespace fibcalc {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

// Schema violation at a JSON pointer path such as "/monodromy/action/1".
class SchemaError : public MalformedInput {
 public:
  SchemaError(std::string path, const std::string& message)
      : MalformedInput((path.empty() ? "/" : path) + ": " + message), path_(std::move(path)) {}
  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

using Object = std::variant<FiberedKnot, FiberedDisk, FiberedTwoKnot, CurveSpec, SurgeryPlan>;

// "knot", "disk", "two_knot", "curve" or "plan".
std::string object_kind(const Object& o);

Json serialize(const Object& o);
Object deserialize(const Json& j);

bool same_object(const Object& a, const Object& b);  // field-wise, including names

Json matrix_to_json(const IntMatrix& m);
IntMatrix matrix_from_json(const Json& j, const std::string& path = "");

}  // namespace fibcalc
