#include "fibcalc/cli/serialize.hpp"

namespace fibcalc {

std::string object_kind(const Object& o) {
  static const char* kinds[] = {"knot", "disk", "two_knot", "curve", "plan"};
  return kinds[o.index()];
}

namespace {

Json word_list(const std::vector<FreeWord>& words, const std::vector<std::string>& names) {
  Json out = Json::array();
  for (const auto& w : words) out.push_back(format_word(w, names));
  return out;
}

Json map_to_json(const FreeGroupMap& f, const std::vector<std::string>& names) {
  Json out;
  out["images"] = word_list(f.images(), names);
  out["inverse"] = f.inverse_images() ? word_list(*f.inverse_images(), names) : Json(nullptr);
  return out;
}

Json optional_map(const std::optional<FreeGroupMap>& f, const std::vector<std::string>& names) {
  return f ? map_to_json(*f, names) : Json(nullptr);
}

Json curve_to_json(const CurveSpec& c) {
  Json out;
  out["name"] = c.name;
  out["genus"] = c.genus;
  out["class"] = c.homology_class;
  out["flags"] = {{"bounds_disk_in_handlebody", c.flags.bounds_disk_in_handlebody},
                  {"unknotted_in_ambient", c.flags.unknotted_in_ambient},
                  {"fiber_framing_zero", c.flags.fiber_framing_zero}};
  out["payload"] = optional_map(c.pi1_payload, surface_generator_names(c.genus));
  return out;
}

Json monodromy_to_json(const SurfaceMonodromy& m) {
  Json out;
  out["genus"] = m.genus();
  out["action"] = matrix_to_json(m.homological_action());
  out["pi1"] = optional_map(m.pi1_action(), surface_generator_names(m.genus()));
  if (m.twist_word()) {
    Json steps = Json::array();
    for (const auto& s : *m.twist_word()) steps.push_back({{"curve", curve_to_json(s.curve)}, {"exponent", s.exponent}});
    out["twist_word"] = steps;
  } else {
    out["twist_word"] = nullptr;
  }
  return out;
}

Json header(const std::string& kind, const std::string& name) {
  Json out;
  out["schema_version"] = kSchemaVersion;
  out["kind"] = kind;
  out["name"] = name;
  return out;
}

// Path-tracking reader.
class Reader {
 public:
  Reader(const Json& j, std::string path) : j_(j), path_(std::move(path)) {}

  const Json& json() const { return j_; }
  const std::string& path() const { return path_; }

  [[noreturn]] void fail(const std::string& msg) const { throw SchemaError(path_, msg); }

  Reader at(const std::string& key) const {
    if (!j_.is_object()) fail("expected an object");
    const auto it = j_.find(key);
    if (it == j_.end()) throw SchemaError(path_ + "/" + key, "missing field");
    return Reader(*it, path_ + "/" + key);
  }
  Reader at(std::size_t i) const { return Reader(j_.at(i), path_ + "/" + std::to_string(i)); }
  bool is_null() const { return j_.is_null(); }
  std::size_t size() const {
    if (!j_.is_array()) fail("expected an array");
    return j_.size();
  }
  Int integer() const {
    if (!j_.is_number_integer()) fail("expected an integer");
    return j_.get<Int>();
  }
  int small_int() const {
    const Int v = integer();
    if (v < -1'000'000 || v > 1'000'000) fail("integer out of range");
    return static_cast<int>(v);
  }
  std::string string() const {
    if (!j_.is_string()) fail("expected a string");
    return j_.get<std::string>();
  }
  bool boolean() const {
    if (!j_.is_boolean()) fail("expected a boolean");
    return j_.get<bool>();
  }
  std::vector<Int> int_vector() const {
    std::vector<Int> out;
    for (std::size_t i = 0; i < size(); ++i) out.push_back(at(i).integer());
    return out;
  }

 private:
  const Json& j_;
  std::string path_;
};

// Runs f, converting library errors into schema errors at r's path.
template <class F>
auto guarded(const Reader& r, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const SchemaError&) {
    throw;
  } catch (const Error& e) {
    r.fail(e.what());
  }
}

std::vector<FreeWord> read_words(const Reader& r, const std::vector<std::string>& names) {
  std::vector<FreeWord> out;
  for (std::size_t i = 0; i < r.size(); ++i) {
    const Reader w = r.at(i);
    out.push_back(guarded(w, [&] { return parse_word(w.string(), names); }));
  }
  return out;
}

FreeGroupMap read_map(const Reader& r, const std::vector<std::string>& names) {
  auto images = read_words(r.at("images"), names);
  if (images.size() != names.size()) r.at("images").fail("expected " + std::to_string(names.size()) + " images");
  std::optional<std::vector<FreeWord>> inverse;
  if (!r.at("inverse").is_null()) {
    inverse = read_words(r.at("inverse"), names);
    if (inverse->size() != names.size()) r.at("inverse").fail("expected " + std::to_string(names.size()) + " images");
  }
  return guarded(r, [&] { return FreeGroupMap(std::move(images), std::move(inverse)); });
}

std::optional<FreeGroupMap> read_optional_map(const Reader& r, const std::vector<std::string>& names) {
  if (r.is_null()) return std::nullopt;
  return read_map(r, names);
}

int read_genus(const Reader& r) {
  const int g = r.small_int();
  if (g < 0) r.fail("genus must be nonnegative");
  return g;
}

CurveSpec read_curve(const Reader& r) {
  CurveSpec c;
  c.name = r.at("name").string();
  c.genus = read_genus(r.at("genus"));
  c.homology_class = r.at("class").int_vector();
  const Reader f = r.at("flags");
  c.flags.bounds_disk_in_handlebody = f.at("bounds_disk_in_handlebody").boolean();
  c.flags.unknotted_in_ambient = f.at("unknotted_in_ambient").boolean();
  c.flags.fiber_framing_zero = f.at("fiber_framing_zero").boolean();
  c.pi1_payload = read_optional_map(r.at("payload"), surface_generator_names(c.genus));
  guarded(r, [&] { c.validate(); });
  return c;
}

SurfaceMonodromy read_monodromy(const Reader& r) {
  const int g = read_genus(r.at("genus"));
  IntMatrix action = matrix_from_json(r.at("action").json(), r.at("action").path());
  auto pi1 = read_optional_map(r.at("pi1"), surface_generator_names(g));
  std::optional<TwistWord> word;
  const Reader w = r.at("twist_word");
  if (!w.is_null()) {
    word.emplace();
    for (std::size_t i = 0; i < w.size(); ++i) word->push_back({read_curve(w.at(i).at("curve")), w.at(i).at("exponent").integer()});
  }
  return guarded(r, [&] { return SurfaceMonodromy(g, std::move(action), std::move(pi1), std::move(word)); });
}

template <class Enum>
Enum read_enum(const Reader& r, std::initializer_list<std::pair<const char*, Enum>> options) {
  const std::string s = r.string();
  for (const auto& [name, value] : options)
    if (s == name) return value;
  r.fail("unknown value '" + s + "'");
}

}  // namespace

Json matrix_to_json(const IntMatrix& m) {
  Json out = Json::array();
  for (const auto& row : m.to_rows()) out.push_back(row);
  return out;
}

IntMatrix matrix_from_json(const Json& j, const std::string& path) {
  const Reader r(j, path);
  std::vector<std::vector<Int>> rows;
  for (std::size_t i = 0; i < r.size(); ++i) {
    rows.push_back(r.at(i).int_vector());
    if (rows.back().size() != rows.front().size())
      r.at(i).fail("ragged matrix: row has " + std::to_string(rows.back().size()) + " entries, expected " +
                   std::to_string(rows.front().size()));
  }
  return guarded(r, [&] { return IntMatrix::from_rows(rows); });
}

Json serialize(const Object& o) {
  return std::visit(
      [](const auto& x) -> Json {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, FiberedKnot>) {
          Json out = header("knot", x.name);
          out["ambient"] = {{"kind", x.ambient.kind == KnotAmbient::Kind::S3 ? "S3" : "homology_sphere"},
                            {"descriptor", x.ambient.descriptor}};
          out["monodromy"] = monodromy_to_json(x.monodromy);
          return out;
        } else if constexpr (std::is_same_v<T, FiberedDisk>) {
          Json out = header("disk", x.name);
          static const char* kinds[] = {"B4", "homotopy_B4", "contractible"};
          out["ambient"] = {{"kind", kinds[static_cast<int>(x.ambient.kind)]}, {"descriptor", x.ambient.descriptor}};
          out["fiber"] = {{"genus", x.fiber.genus},
                          {"summand", x.fiber.summand_label ? Json(*x.fiber.summand_label) : Json(nullptr)}};
          out["handlebody_pi1"] = map_to_json(x.monodromy.pi1_action(), handlebody_generator_names(x.monodromy.genus()));
          out["boundary"] = monodromy_to_json(x.monodromy.boundary());
          Json history = Json::array();
          for (const auto& h : x.twist_history) history.push_back({{"curve", curve_to_json(h.disk_boundary)}, {"multiplier", h.multiplier}});
          out["twist_history"] = history;
          return out;
        } else if constexpr (std::is_same_v<T, FiberedTwoKnot>) {
          Json out = header("two_knot", x.name);
          out["ambient"] = to_string(x.ambient);
          out["fiber_rank"] = x.fiber_rank;
          out["monodromy"] = map_to_json(x.monodromy_pi1, handlebody_generator_names(x.fiber_rank));
          out["gluck_parity"] = x.gluck_parity;
          out["provenance"] = {{"construction", x.provenance.construction}, {"spun", x.provenance.spun}};
          return out;
        } else if constexpr (std::is_same_v<T, CurveSpec>) {
          Json out = header("curve", x.name);
          Json body = curve_to_json(x);
          body.erase("name");
          out.update(body);
          return out;
        } else {
          Json out = header("plan", "");
          out.erase("name");
          out["source_genus"] = x.source_genus;
          out["target_genus"] = x.target_genus;
          Json steps = Json::array();
          for (const auto& s : x.steps)
            steps.push_back({{"phase", s.phase}, {"torus_id", s.torus_id}, {"curve", curve_to_json(s.curve)}, {"twist_sign", s.twist_sign}});
          out["steps"] = steps;
          return out;
        }
      },
      o);
}

Object deserialize(const Json& j) {
  const Reader r(j, "");
  const Reader version = r.at("schema_version");
  if (version.integer() != kSchemaVersion)
    version.fail("unsupported schema version " + std::to_string(version.integer()) + " (this build reads version " +
                 std::to_string(kSchemaVersion) + ")");
  const std::string kind = r.at("kind").string();
  if (kind == "knot") {
    const Reader amb = r.at("ambient");
    KnotAmbient ambient{read_enum<KnotAmbient::Kind>(amb.at("kind"), {{"S3", KnotAmbient::Kind::S3},
                                                                         {"homology_sphere", KnotAmbient::Kind::HomologySphere}}),
                        amb.at("descriptor").string()};
    return FiberedKnot{r.at("name").string(), ambient, read_monodromy(r.at("monodromy"))};
  }
  if (kind == "disk") {
    FiberedDisk d;
    d.name = r.at("name").string();
    const Reader amb = r.at("ambient");
    d.ambient.kind = read_enum<DiskAmbient::Kind>(amb.at("kind"), {{"B4", DiskAmbient::Kind::B4},
                                                                    {"homotopy_B4", DiskAmbient::Kind::HomotopyB4},
                                                                    {"contractible", DiskAmbient::Kind::Contractible}});
    d.ambient.descriptor = amb.at("descriptor").string();
    const Reader fib = r.at("fiber");
    d.fiber.genus = read_genus(fib.at("genus"));
    if (!fib.at("summand").is_null()) d.fiber.summand_label = fib.at("summand").string();
    SurfaceMonodromy boundary = read_monodromy(r.at("boundary"));
    FreeGroupMap pi1 = read_map(r.at("handlebody_pi1"), handlebody_generator_names(boundary.genus()));
    d.monodromy = guarded(r, [&] { return HandlebodyMonodromy(std::move(pi1), std::move(boundary)); });
    if (d.fiber.genus != d.monodromy.genus()) r.at("fiber").at("genus").fail("fiber genus differs from boundary genus");
    const Reader hist = r.at("twist_history");
    for (std::size_t i = 0; i < hist.size(); ++i)
      d.twist_history.push_back({read_curve(hist.at(i).at("curve")), hist.at(i).at("multiplier").integer()});
    return d;
  }
  if (kind == "two_knot") {
    FiberedTwoKnot s;
    s.name = r.at("name").string();
    s.ambient = read_enum<TwoKnotAmbient>(r.at("ambient"), {{"S4", TwoKnotAmbient::S4}, {"homotopy_S4", TwoKnotAmbient::HomotopyS4}});
    s.fiber_rank = read_genus(r.at("fiber_rank"));
    s.monodromy_pi1 = read_map(r.at("monodromy"), handlebody_generator_names(s.fiber_rank));
    s.gluck_parity = r.at("gluck_parity").small_int();
    s.provenance.construction = r.at("provenance").at("construction").string();
    s.provenance.spun = r.at("provenance").at("spun").boolean();
    guarded(r, [&] { s.validate(); });
    return s;
  }
  if (kind == "curve") return read_curve(r);
  if (kind == "plan") {
    SurgeryPlan p;
    p.source_genus = read_genus(r.at("source_genus"));
    p.target_genus = read_genus(r.at("target_genus"));
    const Reader steps = r.at("steps");
    for (std::size_t i = 0; i < steps.size(); ++i) {
      const Reader s = steps.at(i);
      PlanStep step{s.at("phase").small_int(), s.at("torus_id").string(), read_curve(s.at("curve")), s.at("twist_sign").small_int()};
      if (step.twist_sign < -1 || step.twist_sign > 1) s.at("twist_sign").fail("twist sign must be -1, 0 or 1");
      p.steps.push_back(std::move(step));
    }
    return p;
  }
  r.at("kind").fail("unknown object kind '" + kind + "'");
}

bool same_object(const Object& a, const Object& b) {
  if (a.index() != b.index()) return false;
  return std::visit(
      [&](const auto& x) {
        using T = std::decay_t<decltype(x)>;
        const T& y = std::get<T>(b);
        if constexpr (std::is_same_v<T, FiberedTwoKnot>)
          return x == y && x.name == y.name && x.provenance == y.provenance;
        else if constexpr (std::is_same_v<T, FiberedKnot> || std::is_same_v<T, FiberedDisk>)
          return x == y && x.name == y.name;
        else
          return x == y;
      },
      a);
}

}  // namespace fibcalc
