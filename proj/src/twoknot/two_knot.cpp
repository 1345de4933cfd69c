#include "fibcalc/twoknot/two_knot.hpp"

#include <algorithm>
#include <cstdlib>

namespace fibcalc {

std::string to_string(TwoKnotAmbient a) { return a == TwoKnotAmbient::S4 ? "S4" : "homotopy_S4"; }

void FiberedTwoKnot::validate() const {
  if (monodromy_pi1.rank() != fiber_rank)
    throw RankMismatch("monodromy rank " + std::to_string(monodromy_pi1.rank()) + " differs from fiber rank " +
                       std::to_string(fiber_rank));
  if (gluck_parity != 0 && gluck_parity != 1) throw InvariantViolation("Gluck parity must be 0 or 1");
  if (!monodromy_pi1.has_inverse()) throw InvariantViolation("2-knot monodromy carries no inverse witness");
  if (fiber_rank == 0) return;
  const IntMatrix a = abelianize(monodromy_pi1);
  const Int det = (IntMatrix::identity(fiber_rank) - a).determinant();
  if (det != 1 && det != -1) throw InvariantViolation("H_1 of the 2-knot exterior is not Z (det(I - A) = " + std::to_string(det) + ")");
}

FiberedTwoKnot unknotted_sphere() {
  return {"unknotted_sphere", TwoKnotAmbient::S4, 0, FreeGroupMap::identity(0), 0, {"unknotted", true}};
}

FiberedTwoKnot double_disk(const FiberedDisk& d, Int framing) {
  if (!d.fiber.is_handlebody())
    throw Unsupported("doubling a disk whose fiber has summand '" + *d.fiber.summand_label + "'");
  const auto parity = static_cast<int>(((framing % 2) + 2) % 2);
  FiberedTwoKnot s{"double(" + d.name + "," + std::to_string(framing) + ")",
                   d.ambient.kind == DiskAmbient::Kind::B4 ? TwoKnotAmbient::S4 : TwoKnotAmbient::HomotopyS4,
                   d.monodromy.genus() == 0 ? 0 : d.monodromy.pi1_action().rank(),
                   d.monodromy.pi1_action(),
                   parity,
                   {"double_disk", false}};
  s.validate();
  return s;
}

FiberedTwoKnot spin(const FiberedKnot& k) {
  FiberedTwoKnot s = double_disk(half_spin(k), 0);
  s.name = "spin(" + k.name + ")";
  s.provenance = {"spin", true};
  return s;
}

FiberedTwoKnot gluck(const FiberedTwoKnot& s) {
  FiberedTwoKnot out = s;
  out.gluck_parity ^= 1;
  const std::string prefix = "gluck(";
  if (s.name.starts_with(prefix) && s.name.ends_with(")"))
    out.name = s.name.substr(prefix.size(), s.name.size() - prefix.size() - 1);
  else
    out.name = prefix + s.name + ")";
  return out;
}

FiberedTwoKnot sphere_twist(const FiberedTwoKnot& s, Int m) {
  FiberedTwoKnot out = s;
  if (m % 2 != 0) out.gluck_parity ^= 1;
  return out;
}

GroupPresentation two_knot_group(const FiberedTwoKnot& s) {
  return mapping_torus_presentation(s.monodromy_pi1, handlebody_generator_names(s.fiber_rank));
}

LaurentPoly alexander_poly(const FiberedTwoKnot& s) {
  return normalize_alexander(char_poly(abelianize(s.monodromy_pi1)));
}

FillingDescriptor FillingDescriptor::negative_reciprocal(std::string base, Int m) {
  if (m == 0) return {std::move(base), 1, 0};
  if (m > 0) return {std::move(base), -1, m};
  return {std::move(base), 1, checked::neg(m)};
}

std::string FillingDescriptor::to_string() const {
  if (is_trivial_filling()) return base;
  return base + "(" + std::to_string(numerator) + "/" + std::to_string(denominator) + ")";
}

bool ContractibilityReport::trivial_homology() const {
  return interior_h1.empty() && std::all_of(h1_snf.begin(), h1_snf.end(), [](Int d) { return d == 1; });
}

bool ContractibilityReport::only_trivial_homs() const {
  return std::all_of(hom_counts.begin(), hom_counts.end(), [](const auto& kv) { return kv.second == 1; });
}

std::vector<std::string> contractibility_groups() { return {"S3", "S4", "A4"}; }

std::vector<HalvingFamilyEntry> halving_family(const FiberedTwoKnot& s, const std::vector<Int>& slopes,
                                               const std::string& base, const HomCountOptions& options) {
  s.validate();
  GroupPresentation interior = two_knot_group(s);
  interior.relators.push_back(FreeWord::generator(interior.rank(), interior.rank()));
  ContractibilityReport report;
  if (s.fiber_rank > 0)
    report.h1_snf = smith_normal_form(IntMatrix::identity(s.fiber_rank) - abelianize(s.monodromy_pi1)).diagonal();
  report.interior_h1 = h1(interior);
  for (const auto& name : contractibility_groups()) report.hom_counts[name] = count_homs(interior, catalog_group(name), options);
  std::vector<HalvingFamilyEntry> out;
  for (Int m : slopes) out.push_back({m, interior, FillingDescriptor::negative_reciprocal(base, m), report});
  return out;
}

Int seifert_filling_multiplicity(Int a, Int b, Int m) {
  if (checked::gcd(a, b) != 1)
    throw PreconditionError("slope " + std::to_string(a) + "/" + std::to_string(b) + " is not in lowest terms");
  return checked::sub(checked::mul(a, m), b);
}

FiberedTwoKnot torus_twist(const FiberedTwoKnot& s, const CurveSpec& c, Int m) {
  if (!s.provenance.spun)
    throw PreconditionError("torus twist along '" + c.name + "' needs a spun 2-knot or an explicit fiber automorphism");
  if (2 * c.genus != s.fiber_rank)
    throw RankMismatch("curve '" + c.name + "' lives on genus " + std::to_string(c.genus) + ", fiber rank is " +
                       std::to_string(s.fiber_rank));
  if (!c.pi1_payload) throw Unsupported("curve '" + c.name + "' has no pi_1 payload");
  if (m == 0) return s;
  FiberedTwoKnot out = s;
  out.monodromy_pi1 = compose(s.monodromy_pi1, *twist_monodromy(c, m).pi1_action());
  out.name = "torustwist(" + s.name + "," + c.name + "," + std::to_string(m) + ")";
  return out;
}

FiberedTwoKnot torus_twist(const FiberedTwoKnot& s, const FreeGroupMap& fiber_automorphism, const std::string& label) {
  if (fiber_automorphism.rank() != s.fiber_rank) throw RankMismatch("fiber automorphism has the wrong rank");
  if (!fiber_automorphism.has_inverse()) throw PreconditionError("fiber automorphism carries no inverse witness");
  FiberedTwoKnot out = s;
  out.monodromy_pi1 = compose(s.monodromy_pi1, fiber_automorphism);
  out.name = "torustwist(" + s.name + "," + label + ")";
  out.validate();
  return out;
}

int SurgeryPlan::phase_count() const {
  int n = 0;
  for (const auto& s : steps) n = std::max(n, s.phase);
  return n;
}

std::vector<PlanStep> SurgeryPlan::phase(int p) const {
  std::vector<PlanStep> out;
  std::copy_if(steps.begin(), steps.end(), std::back_inserter(out), [p](const PlanStep& s) { return s.phase == p; });
  return out;
}

namespace {

const TwistWord& require_word(const FiberedKnot& k) {
  if (!k.monodromy.twist_word()) throw PreconditionError("monodromy of '" + k.name + "' is not given as a twist word");
  return *k.monodromy.twist_word();
}

TwistWord embed_word(const TwistWord& w, int genus) {
  TwistWord out;
  for (const auto& s : w) out.push_back({s.curve.genus == genus ? s.curve : embed_curve(s.curve, genus, 0), s.exponent});
  return out;
}

TwistWord concat(TwistWord a, const TwistWord& b) {
  a.insert(a.end(), b.begin(), b.end());
  return reduce_twist_word(a);
}

class PlanBuilder {
 public:
  void twist_phase(const TwistWord& w) {
    if (w.empty()) return;
    ++phase_;
    for (const auto& s : w)
      for (Int k = 0; k < checked::abs(s.exponent); ++k) add(s.curve, s.exponent > 0 ? 1 : -1);
  }
  void handle_phase(int genus, int first_handle, int last_handle, bool ascending) {
    if (first_handle > last_handle) return;
    ++phase_;
    for (int i = 0; i <= last_handle - first_handle; ++i) {
      const int h = ascending ? first_handle + i : last_handle - i;
      const std::string a = "a" + std::to_string(h), b = "b" + std::to_string(h);
      for (const auto& name : ascending ? std::vector{a, b} : std::vector{b, a}) add(standard_curve(genus, name), 0);
    }
  }
  std::vector<PlanStep> steps;

 private:
  void add(const CurveSpec& c, int sign) {
    steps.push_back({phase_, "T" + std::to_string(steps.size() + 1), c, sign});
  }
  int phase_ = 0;
};

// Index of the free generator dual to a standard stabilization curve.
int handle_generator(const CurveSpec& c) {
  int index = 0;
  for (std::size_t i = 0; i < c.homology_class.size(); ++i) {
    if (c.homology_class[i] == 0) continue;
    if (index != 0 || c.homology_class[i] != 1) throw MalformedInput("stabilization curve '" + c.name + "' is not a standard curve");
    index = static_cast<int>(i) + 1;
  }
  if (index == 0) throw MalformedInput("stabilization curve '" + c.name + "' is null-homologous");
  return index;
}

FreeWord restrict_word(const FreeWord& w, int rank) {
  for (int l : w.letters())
    if (std::abs(l) > rank) throw PreconditionError("destabilized generator still appears in the monodromy");
  return FreeWord(rank, std::span<const int>(w.letters()));
}

FiberedTwoKnot destabilize(const FiberedTwoKnot& s, int generator) {
  const int r = s.fiber_rank;
  if (generator != r) throw PreconditionError("destabilization must remove the last fiber generator");
  const FreeWord x = FreeWord::generator(r, r);
  if (s.monodromy_pi1.image(r) != x || !s.monodromy_pi1.has_inverse() || (*s.monodromy_pi1.inverse_images())[static_cast<std::size_t>(r - 1)] != x)
    throw PreconditionError("monodromy does not fix the destabilized generator");
  std::vector<FreeWord> img, inv;
  for (int i = 0; i < r - 1; ++i) {
    img.push_back(restrict_word(s.monodromy_pi1.images()[static_cast<std::size_t>(i)], r - 1));
    inv.push_back(restrict_word((*s.monodromy_pi1.inverse_images())[static_cast<std::size_t>(i)], r - 1));
  }
  FiberedTwoKnot out = s;
  out.fiber_rank = r - 1;
  out.monodromy_pi1 = FreeGroupMap(std::move(img), std::move(inv));
  return out;
}

}  // namespace

SurgeryPlan torus_surgery_plan(const FiberedKnot& k1, const FiberedKnot& k2) {
  const TwistWord& w1 = require_word(k1);
  const TwistWord& w2 = require_word(k2);
  for (const auto* k : {&k1, &k2})
    if (k->ambient.kind != KnotAmbient::Kind::S3) throw PreconditionError("planner needs knots in S3");
  const int g1 = k1.genus(), g2 = k2.genus();
  SurgeryPlan plan{g1, g2, {}};
  if (k1 == k2) return plan;
  PlanBuilder b;
  if (g1 == g2) {
    b.twist_phase(concat(inverse_twist_word(w1), w2));
  } else if (g2 > g1) {
    b.handle_phase(g2, g1 + 1, g2, true);
    b.twist_phase(concat(inverse_twist_word(embed_word(w1, g2)), w2));
  } else {
    b.twist_phase(concat(inverse_twist_word(w1), embed_word(w2, g1)));
    b.handle_phase(g1, g2 + 1, g1, false);
  }
  plan.steps = std::move(b.steps);
  return plan;
}

FiberedTwoKnot replay_plan(const FiberedTwoKnot& s, const SurgeryPlan& plan) {
  if (s.fiber_rank != 2 * plan.source_genus)
    throw RankMismatch("plan starts at genus " + std::to_string(plan.source_genus) + ", 2-knot has fiber rank " +
                       std::to_string(s.fiber_rank));
  FiberedTwoKnot cur = s;
  for (const auto& step : plan.steps) {
    if (step.twist_sign != 0) {
      cur = torus_twist(cur, step.curve, step.twist_sign);
      continue;
    }
    const int gen = handle_generator(step.curve);
    if (plan.target_genus > plan.source_genus) {
      if (gen != cur.fiber_rank + 1) throw PreconditionError("stabilization out of order at " + step.torus_id);
      cur.monodromy_pi1 = cur.monodromy_pi1.embed(gen, 0);
      cur.fiber_rank = gen;
    } else {
      cur = destabilize(cur, gen);
    }
  }
  if (cur.fiber_rank != 2 * plan.target_genus) throw InvariantViolation("plan did not reach the target genus");
  cur.name = "replay(" + s.name + ")";
  cur.validate();
  return cur;
}

}  // namespace fibcalc
