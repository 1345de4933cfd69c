#include "fibcalc/ribbon/fibered_disk.hpp"

namespace fibcalc {

std::string DiskAmbient::to_string() const {
  switch (kind) {
    case Kind::B4: return "B4";
    case Kind::HomotopyB4: return "homotopy_B4";
    case Kind::Contractible: return "contractible(" + descriptor + ")";
  }
  return {};
}

FiberedDisk trivial_disk() {
  return {"trivial_disk", DiskAmbient::b4(), FiberType::handlebody(0), HandlebodyMonodromy::identity(0), {}};
}

FiberedDisk half_spin(const FiberedKnot& k) {
  if (k.ambient.kind != KnotAmbient::Kind::S3)
    throw PreconditionError("half-spinning needs a knot in S3, got " + k.ambient.to_string());
  const int g = k.genus();
  if (g == 0) {
    FiberedDisk d = trivial_disk();
    d.name = "halfspin(" + k.name + ")";
    return d;
  }
  if (!k.monodromy.pi1_action())
    throw Unsupported("knot '" + k.name + "' has no pi_1 monodromy; the handlebody action is undetermined");
  const SurfaceMonodromy boundary = transport(boundary_connected_sum(k.monodromy, mirror(k.monodromy)), half_spin_basis(g));
  return {"halfspin(" + k.name + ")", DiskAmbient::b4(), FiberType::handlebody(2 * g),
          HandlebodyMonodromy(*k.monodromy.pi1_action(), boundary), {}};
}

FiberedKnot boundary_knot(const FiberedDisk& d) {
  KnotAmbient ambient = KnotAmbient::s3();
  if (d.ambient.kind == DiskAmbient::Kind::Contractible)
    ambient = KnotAmbient::homology_sphere("boundary(" + d.ambient.descriptor + ")");
  return {"boundary(" + d.name + ")", ambient, d.monodromy.boundary()};
}

FiberedDisk disk_twist(const FiberedDisk& d, const CurveSpec& e, Int m) {
  if (!e.flags.bounds_disk_in_handlebody)
    throw PreconditionError("disk twist along '" + e.name + "' requires a curve bounding a disk in the handlebody");
  if (!d.fiber.is_handlebody()) throw Unsupported("disk twists need a handlebody fiber");
  if (e.genus != d.monodromy.genus())
    throw RankMismatch("curve '" + e.name + "' lives on genus " + std::to_string(e.genus) + ", disk boundary has genus " +
                       std::to_string(d.monodromy.genus()));
  if (m == 0) return d;
  FiberedDisk out = d;
  out.monodromy = HandlebodyMonodromy(d.monodromy.pi1_action(),
                                      compose_monodromy(d.monodromy.boundary(), twist_monodromy(e, m)));
  if (!e.flags.unknotted_in_ambient && out.ambient.kind == DiskAmbient::Kind::B4)
    out.ambient = DiskAmbient::homotopy_b4();
  out.twist_history.push_back({e, m});
  out.name = "disktwist(" + d.name + "," + e.name + "," + std::to_string(m) + ")";
  return out;
}

bool is_homotopy_ribbon(const FiberedDisk& d) { return d.fiber.is_handlebody(); }

GroupPresentation exterior_presentation(const FiberedDisk& d) {
  if (!d.fiber.is_handlebody())
    throw Unsupported("exterior presentation of a fiber with summand '" + *d.fiber.summand_label + "'");
  return mapping_torus_presentation(d.monodromy.pi1_action(), handlebody_generator_names(d.monodromy.genus()));
}

bool boundary_surjectivity_check(const FiberedDisk& d, const std::optional<IntMatrix>& identification) {
  if (!d.fiber.is_handlebody()) throw Unsupported("surjectivity check needs a handlebody fiber");
  const int g = d.monodromy.genus();
  const IntMatrix q = identification ? *identification : standard_quotient(g);
  if (q.rows() != g || q.cols() != 2 * g)
    throw RankMismatch("identification must be " + std::to_string(g) + " x " + std::to_string(2 * g));
  if (g == 0) return true;
  const auto diag = smith_normal_form(q).diagonal();
  if (static_cast<int>(diag.size()) < g) return false;
  for (Int x : diag)
    if (x != 1) return false;
  return true;
}

FiberedDisk fiber_sum_with_summand(const FiberedDisk& d, const std::string& summand_label) {
  if (summand_label.empty()) throw MalformedInput("summand label must be nonempty");
  FiberedDisk out = d;
  out.fiber = FiberType::with_summand(d.fiber.genus, summand_label);
  out.name = d.name + "#" + summand_label;
  return out;
}

CgReport disk_cg_report(const FiberedDisk& d) {
  const int g = d.monodromy.genus();
  return cg_compatibility(d.monodromy.boundary().homological_action(), standard_lagrangian(g),
                          abelianize(d.monodromy.pi1_action()));
}

}  // namespace fibcalc
