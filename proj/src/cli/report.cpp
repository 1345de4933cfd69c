#include "fibcalc/cli/report.hpp"

#include <charconv>
#include <fstream>
#include <map>
#include <sstream>

namespace fibcalc {

namespace {

Json alexander_json(const LaurentPoly& p) { return p.dense_coefficients(); }

Json hom_counts(const GroupPresentation& p, const ReportOptions& options) {
  Json out;
  for (const auto& g : options.groups) out[g] = count_homs(p, catalog_group(g), options.hom);
  return out;
}

Json curve_summary(const CurveSpec& c) {
  return {{"name", c.name}, {"genus", c.genus}, {"class", c.homology_class}};
}

Json knot_report(const FiberedKnot& k, const ReportOptions& options) {
  Json r;
  r["kind"] = "knot";
  r["name"] = k.name;
  r["ambient"] = k.ambient.to_string();
  r["genus"] = k.genus();
  r["alexander"] = alexander_json(alexander_poly(k));
  if (k.monodromy.pi1_action()) {
    const GroupPresentation g = knot_group(k);
    r["h1"] = h1(g);
    r["hom_counts"] = hom_counts(g, options);
  } else {
    r["h1"] = nullptr;
    r["hom_counts"] = nullptr;
  }
  Json word = nullptr;
  if (k.monodromy.twist_word()) {
    word = Json::array();
    for (const auto& s : *k.monodromy.twist_word()) word.push_back({{"curve", s.curve.name}, {"exponent", s.exponent}});
  }
  r["twist_word"] = word;
  r["warnings"] = validate_knot(k);
  return r;
}

Json disk_report(const FiberedDisk& d, const ReportOptions& options) {
  Json r;
  r["kind"] = "disk";
  r["name"] = d.name;
  r["ambient"] = d.ambient.to_string();
  r["fiber"] = {{"genus", d.fiber.genus}, {"summand", d.fiber.summand_label ? Json(*d.fiber.summand_label) : Json(nullptr)}};
  r["is_homotopy_ribbon"] = is_homotopy_ribbon(d);
  r["boundary_alexander"] = alexander_json(alexander_poly(boundary_knot(d)));
  r["cg_compatible"] = disk_cg_report(d).ok();
  if (d.fiber.is_handlebody()) {
    const GroupPresentation g = exterior_presentation(d);
    r["h1"] = h1(g);
    r["hom_counts"] = hom_counts(g, options);
    r["boundary_surjective"] = boundary_surjectivity_check(d);
  } else {
    r["h1"] = nullptr;
    r["hom_counts"] = nullptr;
    r["boundary_surjective"] = nullptr;
  }
  Json history = Json::array();
  for (const auto& h : d.twist_history) history.push_back({{"curve", h.disk_boundary.name}, {"multiplier", h.multiplier}});
  r["twist_history"] = history;
  return r;
}

Json two_knot_report(const FiberedTwoKnot& s, const ReportOptions& options) {
  Json r;
  r["kind"] = "two_knot";
  r["name"] = s.name;
  r["ambient"] = to_string(s.ambient);
  r["fiber_rank"] = s.fiber_rank;
  r["gluck_parity"] = s.gluck_parity;
  r["alexander"] = alexander_json(alexander_poly(s));
  const GroupPresentation g = two_knot_group(s);
  r["h1"] = h1(g);
  r["hom_counts"] = hom_counts(g, options);
  r["provenance"] = {{"construction", s.provenance.construction}, {"spun", s.provenance.spun}};
  r["gluck_classes"] = "at most 2";
  return r;
}

Json curve_report(const CurveSpec& c) {
  Json r;
  r["kind"] = "curve";
  r.update(curve_summary(c));
  r["flags"] = {{"bounds_disk_in_handlebody", c.flags.bounds_disk_in_handlebody},
                {"unknotted_in_ambient", c.flags.unknotted_in_ambient},
                {"fiber_framing_zero", c.flags.fiber_framing_zero}};
  r["has_pi1_payload"] = c.pi1_payload.has_value();
  return r;
}

Json plan_report(const SurgeryPlan& p) {
  Json r;
  r["kind"] = "plan";
  r["source_genus"] = p.source_genus;
  r["target_genus"] = p.target_genus;
  r["phases"] = p.phase_count();
  Json steps = Json::array();
  for (const auto& s : p.steps)
    steps.push_back({{"phase", s.phase}, {"torus_id", s.torus_id}, {"curve", s.curve.name}, {"twist_sign", s.twist_sign}});
  r["steps"] = steps;
  return r;
}

void render(std::ostringstream& os, const Json& j, int indent) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  for (const auto& [key, value] : j.items()) {
    const bool nested = value.is_object() || (value.is_array() && !value.empty() && value.front().is_object());
    if (!nested) {
      os << pad << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump()) << "\n";
    } else if (value.is_object()) {
      os << pad << key << ":\n";
      render(os, value, indent + 2);
    } else {
      os << pad << key << ":\n";
      for (const auto& item : value) {
        os << pad << "  -\n";
        render(os, item, indent + 4);
      }
    }
  }
}

}  // namespace

std::string InvariantReport::to_text() const {
  std::ostringstream os;
  render(os, data, 0);
  return os.str();
}

InvariantReport make_report(const Object& o, const ReportOptions& options) {
  return {std::visit(
      [&](const auto& x) -> Json {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, FiberedKnot>) return knot_report(x, options);
        else if constexpr (std::is_same_v<T, FiberedDisk>) return disk_report(x, options);
        else if constexpr (std::is_same_v<T, FiberedTwoKnot>) return two_knot_report(x, options);
        else if constexpr (std::is_same_v<T, CurveSpec>) return curve_report(x);
        else return plan_report(x);
      },
      o)};
}

Json ExecutionResult::to_json() const {
  Json out;
  out["schema_version"] = kSchemaVersion;
  Json list = Json::array();
  for (const auto& r : reports) list.push_back(r.data);
  out["reports"] = list;
  out["error"] = error ? Json{{"statement", error->statement}, {"line", error->line}, {"message", error->message}} : Json(nullptr);
  return out;
}

std::string ExecutionResult::to_text() const {
  std::string out;
  for (std::size_t i = 0; i < reports.size(); ++i) out += (i ? "\n" : "") + reports[i].to_text();
  return out;
}

std::vector<std::string> catalog_object_names() {
  std::vector<std::string> out = curated_monodromy_names();
  for (const auto& c : curated_curve_names()) out.push_back(c);
  out.push_back("trivial_disk");
  out.push_back("unknotted_sphere");
  return out;
}

Object catalog_object(const std::string& name) {
  if (name == "trivial_disk") return trivial_disk();
  if (name == "unknotted_sphere") return unknotted_sphere();
  const CuratedPayload p = curated_payload(name);
  if (std::holds_alternative<CurveSpec>(p)) return std::get<CurveSpec>(p);
  return catalog_knot(name);
}

namespace {

class Interpreter {
 public:
  explicit Interpreter(const ReportOptions& options) : options_(options) {}

  std::optional<InvariantReport> run(const Statement& st) {
    const auto& a = st.args;
    const std::string& v = st.verb;
    Object result;
    if (v == "load") {
      result = load(a[0]);
    } else if (v == "spin") {
      result = spin(get<FiberedKnot>(a[0]));
    } else if (v == "halfspin") {
      result = half_spin(get<FiberedKnot>(a[0]));
    } else if (v == "double") {
      result = double_disk(get<FiberedDisk>(a[0]), integer(a[1]));
    } else if (v == "disktwist") {
      result = disk_twist(get<FiberedDisk>(a[0]), get<CurveSpec>(a[1]), integer(a[2]));
    } else if (v == "stallingstwist") {
      result = stallings_twist(get<FiberedKnot>(a[0]), get<CurveSpec>(a[1]), integer(a[2]));
    } else if (v == "glucktwist") {
      result = gluck(get<FiberedTwoKnot>(a[0]));
    } else if (v == "torustwist") {
      result = torus_twist(get<FiberedTwoKnot>(a[0]), get<CurveSpec>(a[1]));
    } else if (v == "connectsum") {
      result = connected_sum(get<FiberedKnot>(a[0]), get<FiberedKnot>(a[1]));
    } else if (v == "plan") {
      result = torus_surgery_plan(get<FiberedKnot>(a[0]), get<FiberedKnot>(a[1]));
    } else if (v == "report") {
      return make_report(resolve(a[0]), options_);
    } else {
      throw MalformedInput("unknown verb '" + v + "'");
    }
    if (st.binding) env_.insert_or_assign(*st.binding, std::move(result));
    return std::nullopt;
  }

 private:
  Object resolve(const std::string& name) const {
    if (const auto it = env_.find(name); it != env_.end()) return it->second;
    try {
      return catalog_object(name);
    } catch (const UnknownName&) {
      throw UnknownName("'" + name + "' is neither bound nor a catalog name");
    }
  }

  template <class T>
  T get(const std::string& name) const {
    Object o = resolve(name);
    if (!std::holds_alternative<T>(o)) {
      static const char* expected = std::is_same_v<T, FiberedKnot>      ? "knot"
                                    : std::is_same_v<T, FiberedDisk>    ? "disk"
                                    : std::is_same_v<T, FiberedTwoKnot> ? "two_knot"
                                    : std::is_same_v<T, CurveSpec>      ? "curve"
                                                                        : "plan";
      throw PreconditionError("'" + name + "' is a " + object_kind(o) + ", expected a " + expected);
    }
    return std::get<T>(std::move(o));
  }

  static Int integer(const std::string& s) {
    Int v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size()) throw MalformedInput("expected an integer, got '" + s + "'");
    return v;
  }

  static Object load(const std::string& name) {
    if (!name.ends_with(".json")) return catalog_object(name);
    std::ifstream in(name);
    if (!in) throw MalformedInput("cannot open '" + name + "'");
    Json j;
    try {
      j = Json::parse(in);
    } catch (const Json::parse_error& e) {
      throw MalformedInput("'" + name + "' is not valid JSON: " + e.what());
    }
    return deserialize(j);
  }

  const ReportOptions& options_;
  std::map<std::string, Object> env_;
};

}  // namespace

ExecutionResult execute(const SurgeryScript& script, const ReportOptions& options) {
  ExecutionResult out;
  Interpreter interp(options);
  for (std::size_t i = 0; i < script.statements.size(); ++i) {
    const Statement& st = script.statements[i];
    try {
      if (auto r = interp.run(st)) out.reports.push_back(std::move(*r));
    } catch (const std::exception& e) {
      out.error = ExecutionError{i + 1, st.line,
                                 "statement " + std::to_string(i + 1) + " (" + st.verb + "): " + e.what()};
      break;
    }
  }
  return out;
}

}  // namespace fibcalc
