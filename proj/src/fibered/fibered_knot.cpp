#include "fibcalc/fibered/fibered_knot.hpp"

namespace fibcalc {

std::string KnotAmbient::to_string() const {
  return kind == Kind::S3 ? "S3" : "homology_sphere(" + descriptor + ")";
}

FiberedKnot unknot() { return {"unknot", KnotAmbient::s3(), SurfaceMonodromy::identity(0)}; }

std::vector<std::string> catalog_knot_names() { return curated_monodromy_names(); }

FiberedKnot catalog_knot(const std::string& name) {
  const CuratedPayload payload = curated_payload(name);
  if (!std::holds_alternative<SurfaceMonodromy>(payload))
    throw UnknownName("catalog entry '" + name + "' is a curve, not a knot");
  return {name, KnotAmbient::s3(), std::get<SurfaceMonodromy>(payload)};
}

GroupPresentation knot_group(const FiberedKnot& k) {
  if (!k.monodromy.pi1_action())
    throw Unsupported("knot '" + k.name + "' carries only homological monodromy data; no group presentation");
  return mapping_torus_presentation(*k.monodromy.pi1_action(), surface_generator_names(k.genus()));
}

LaurentPoly alexander_poly(const FiberedKnot& k) {
  return normalize_alexander(char_poly(k.monodromy.homological_action()));
}

std::vector<std::string> validate_knot(const FiberedKnot& k) {
  std::vector<std::string> warnings;
  const Int at_one = alexander_poly(k).evaluate_at_one();
  if (k.ambient.kind == KnotAmbient::Kind::S3 && at_one != 1 && at_one != -1)
    warnings.push_back("|Delta(1)| = " + std::to_string(checked::abs(at_one)) + " for a knot in S3; expected 1");
  return warnings;
}

FiberedKnot stallings_twist(const FiberedKnot& k, const CurveSpec& c, Int m) {
  if (!c.flags.fiber_framing_zero)
    throw PreconditionError("Stallings twist along '" + c.name + "' requires fiber framing zero");
  if (c.genus != k.genus())
    throw RankMismatch("curve '" + c.name + "' lives on genus " + std::to_string(c.genus) + ", knot fiber has genus " +
                       std::to_string(k.genus()));
  FiberedKnot out = k;
  out.monodromy = compose_monodromy(k.monodromy, twist_monodromy(c, m));
  if (m != 0) out.name = "stallings(" + k.name + "," + c.name + "," + std::to_string(m) + ")";
  return out;
}

bool distinctness_bound(Int m, int genus) {
  if (genus < 2) throw PreconditionError("the distinctness bound needs genus >= 2, got " + std::to_string(genus));
  const Int a = checked::abs(m);
  return a == 1 || a > checked::sub(checked::mul(9, genus), 3);
}

FiberedKnot connected_sum(const FiberedKnot& k1, const FiberedKnot& k2) {
  if (!(k1.ambient == k2.ambient))
    throw PreconditionError("connected sum of knots in different ambients (" + k1.ambient.to_string() + ", " +
                            k2.ambient.to_string() + ")");
  return {k1.name + "#" + k2.name, k1.ambient, boundary_connected_sum(k1.monodromy, k2.monodromy)};
}

FiberedKnot mirror_knot(const FiberedKnot& k) { return {"-" + k.name, k.ambient, mirror(k.monodromy)}; }

FiberedKnot dual_knot_surgery_descriptor(const FiberedKnot& k, Int n) {
  if (k.ambient.kind != KnotAmbient::Kind::S3) throw PreconditionError("dual knot surgery needs a knot in S3");
  if (n == 0) throw PreconditionError("0-surgery does not yield a homology sphere");
  FiberedKnot out = k;
  out.ambient = KnotAmbient::homology_sphere("S3_{1/" + std::to_string(n) + "}(" + k.name + ")");
  out.name = "dual(" + k.name + ",1/" + std::to_string(n) + ")";
  return out;
}

}  // namespace fibcalc
