#pragma once

#include <map>
#include <string>
#include <vector>

#include "fibcalc/invariants/invariants.hpp"
#include "fibcalc/ribbon/fibered_disk.hpp"

namespace fibcalc {

enum class TwoKnotAmbient { S4, HomotopyS4 };
std::string to_string(TwoKnotAmbient a);

struct TwoKnotProvenance {
  std::string construction;
  bool spun = false;  // fiber group is pi_1 of a once-punctured surface (torus twists allowed)

  friend bool operator==(const TwoKnotProvenance&, const TwoKnotProvenance&) = default;
};

// A fibered 2-knot with fiber (#_g S^1 x S^2)°, recorded through the pi_1
// action of its monodromy on F_g and the Gluck parity.
struct FiberedTwoKnot {
  std::string name;
  TwoKnotAmbient ambient = TwoKnotAmbient::S4;
  int fiber_rank = 0;
  FreeGroupMap monodromy_pi1;
  int gluck_parity = 0;
  TwoKnotProvenance provenance;

  // Rank, parity, inverse witness and H_1 = Z.
  void validate() const;

  friend bool operator==(const FiberedTwoKnot& a, const FiberedTwoKnot& b) {
    return a.ambient == b.ambient && a.fiber_rank == b.fiber_rank && a.monodromy_pi1 == b.monodromy_pi1 &&
           a.gluck_parity == b.gluck_parity;
  }
};

FiberedTwoKnot unknotted_sphere();

FiberedTwoKnot double_disk(const FiberedDisk& d, Int framing);
FiberedTwoKnot spin(const FiberedKnot& k);
FiberedTwoKnot gluck(const FiberedTwoKnot& s);

// Twisting m times along a sphere in the exterior: toggles parity when m is
// odd, leaves pi_1 data alone.
FiberedTwoKnot sphere_twist(const FiberedTwoKnot& s, Int m);

GroupPresentation two_knot_group(const FiberedTwoKnot& s);
LaurentPoly alexander_poly(const FiberedTwoKnot& s);

// Y(p/q) with gcd(p, q) = 1 and q >= 0; the slope -1/m of a halving family.
struct FillingDescriptor {
  std::string base;
  Int numerator = 1;
  Int denominator = 0;

  static FillingDescriptor negative_reciprocal(std::string base, Int m);
  bool is_trivial_filling() const { return denominator == 0; }
  std::string to_string() const;

  friend bool operator==(const FillingDescriptor&, const FillingDescriptor&) = default;
};

struct ContractibilityReport {
  std::vector<Int> h1_snf;             // SNF diagonal of I - A
  std::vector<Int> interior_h1;        // h1 of the interior presentation
  std::map<std::string, std::uint64_t> hom_counts;

  bool trivial_homology() const;
  bool only_trivial_homs() const;
  bool ok() const { return trivial_homology() && only_trivial_homs(); }
};

struct HalvingFamilyEntry {
  Int slope = 0;
  GroupPresentation interior_presentation;
  FillingDescriptor boundary_descriptor;
  ContractibilityReport contractibility;
};

// Groups checked by the contractibility report.
std::vector<std::string> contractibility_groups();

std::vector<HalvingFamilyEntry> halving_family(const FiberedTwoKnot& s, const std::vector<Int>& slopes,
                                               const std::string& base = "Y", const HomCountOptions& options = {});

// Distance between slopes a/b and -1/m, i.e. a m - b. Requires gcd(a, b) = 1.
Int seifert_filling_multiplicity(Int a, Int b, Int m);

// Twist along the torus c x S^1: composes the monodromy with the pi_1 action
// of tau_c^m. Needs spun provenance, a matching genus and a pi_1 payload.
FiberedTwoKnot torus_twist(const FiberedTwoKnot& s, const CurveSpec& c, Int m = 1);
// The same with the induced fiber automorphism supplied directly.
FiberedTwoKnot torus_twist(const FiberedTwoKnot& s, const FreeGroupMap& fiber_automorphism, const std::string& label);

struct PlanStep {
  int phase = 1;
  std::string torus_id;
  CurveSpec curve;
  int twist_sign = 0;  // +-1 twist; 0 stabilizes or destabilizes along curve's handle

  friend bool operator==(const PlanStep&, const PlanStep&) = default;
};

struct SurgeryPlan {
  int source_genus = 0;
  int target_genus = 0;
  std::vector<PlanStep> steps;

  int phase_count() const;
  std::vector<PlanStep> phase(int p) const;

  friend bool operator==(const SurgeryPlan&, const SurgeryPlan&) = default;
};

// Torus surgeries taking spin(k1) to spin(k2). Both monodromies must carry twist words.
SurgeryPlan torus_surgery_plan(const FiberedKnot& k1, const FiberedKnot& k2);

// Applies the plan's steps to s in order.
FiberedTwoKnot replay_plan(const FiberedTwoKnot& s, const SurgeryPlan& plan);

}  // namespace fibcalc
