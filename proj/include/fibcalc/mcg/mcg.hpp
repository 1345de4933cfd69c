#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "fibcalc/algebra/free_group.hpp"
#include "fibcalc/algebra/int_matrix.hpp"

namespace fibcalc {

// Homology of a genus-g surface uses the basis ([a1],[b1],...,[ag],[bg]) with
// <a_i, b_i> = +1. A right-handed Dehn twist along c acts by x -> x + <x,c> c.

IntMatrix symplectic_form(int genus);
Int intersection_pairing(const std::vector<Int>& x, const std::vector<Int>& y);
bool is_symplectic(const IntMatrix& a);

// x -> x + m <x,c> c as a 2g x 2g matrix.
IntMatrix transvection(const std::vector<Int>& homology_class, Int multiplier = 1);

struct CurveFlags {
  bool bounds_disk_in_handlebody = false;
  bool unknotted_in_ambient = false;
  bool fiber_framing_zero = false;

  friend bool operator==(const CurveFlags&, const CurveFlags&) = default;
};

// A simple closed curve on Sigma_g, known through its homology class and an
// optional pi_1 action of the right-handed twist along it.
struct CurveSpec {
  std::string name;
  int genus = 0;
  std::vector<Int> homology_class;
  std::optional<FreeGroupMap> pi1_payload;
  CurveFlags flags;

  // Throws InvariantViolation / MalformedInput when the fields disagree.
  void validate() const;

  friend bool operator==(const CurveSpec&, const CurveSpec&) = default;
};

IntMatrix transvection(const CurveSpec& c);

// A pi_1 realization of the twist for classes supported only on a-curves or
// only on b-curves, e.g. a_i, b_i, a_i - a_j, b_i + b_j. Returns nullopt for
// mixed classes.
std::optional<FreeGroupMap> algebraic_twist_payload(int genus, const std::vector<Int>& homology_class);

// Builds and validates a curve, attaching algebraic_twist_payload when one
// exists and no payload is given.
CurveSpec make_curve(std::string name, int genus, std::vector<Int> homology_class, CurveFlags flags = {},
                     std::optional<FreeGroupMap> payload = std::nullopt);

// Standard curves "a<i>", "b<i>" and the chain curve "d<i>" with class
// a_i - a_{i+1}.
CurveSpec standard_curve(int genus, const std::string& name);

struct TwistStep {
  CurveSpec curve;
  Int exponent = 0;

  friend bool operator==(const TwistStep&, const TwistStep&) = default;
};

// tau_{c_0}^{e_0} o tau_{c_1}^{e_1} o ...
using TwistWord = std::vector<TwistStep>;

// Merges adjacent steps on the same curve and drops zero exponents.
TwistWord reduce_twist_word(const TwistWord& word);
TwistWord inverse_twist_word(const TwistWord& word);

class SurfaceMonodromy {
 public:
  SurfaceMonodromy() : SurfaceMonodromy(identity(0)) {}
  // Validates symplecticity, pi_1/homology agreement and, when a twist word is
  // given, that the word multiplies out to the stored action.
  SurfaceMonodromy(int genus, IntMatrix homological_action, std::optional<FreeGroupMap> pi1_action,
                   std::optional<TwistWord> twist_word);

  static SurfaceMonodromy identity(int genus);
  static SurfaceMonodromy from_twist_word(int genus, const TwistWord& word);

  int genus() const { return genus_; }
  const IntMatrix& homological_action() const { return action_; }
  const std::optional<FreeGroupMap>& pi1_action() const { return pi1_; }
  const std::optional<TwistWord>& twist_word() const { return word_; }

  friend bool operator==(const SurfaceMonodromy&, const SurfaceMonodromy&) = default;

 private:
  struct Unchecked {};
  SurfaceMonodromy(Unchecked, int genus, IntMatrix action, std::optional<FreeGroupMap> pi1,
                   std::optional<TwistWord> word);
  friend SurfaceMonodromy compose_monodromy(const SurfaceMonodromy&, const SurfaceMonodromy&);

  int genus_ = 0;
  IntMatrix action_;
  std::optional<FreeGroupMap> pi1_;
  std::optional<TwistWord> word_;
};

// tau_c^m. Needs an inverse witness on the payload when m < 0.
SurfaceMonodromy twist_monodromy(const CurveSpec& c, Int m = 1);

// m1 o m2.
SurfaceMonodromy compose_monodromy(const SurfaceMonodromy& m1, const SurfaceMonodromy& m2);

// The same map on the oppositely oriented fiber, written in the standard basis:
// conjugation by b_i -> b_i^{-1}.
SurfaceMonodromy mirror(const SurfaceMonodromy& m);
CurveSpec mirror_curve(const CurveSpec& c);

SurfaceMonodromy boundary_connected_sum(const SurfaceMonodromy& m1, const SurfaceMonodromy& m2);

// Places a curve on the handles [offset+1, offset+genus] of a larger surface.
CurveSpec embed_curve(const CurveSpec& c, int total_genus, int handle_offset);

// A symplectic change of basis. Column j of `matrix` is the j-th new basis
// class in old coordinates; `pi1` sends new generators to old words.
struct BasisChange {
  int genus = 0;
  IntMatrix matrix;
  FreeGroupMap pi1;

  void validate() const;
};

// Rewrites data given in old coordinates into new coordinates.
SurfaceMonodromy transport(const SurfaceMonodromy& m, const BasisChange& change);
CurveSpec transport(const CurveSpec& c, const BasisChange& change);

// Basis of the boundary of Sigma_g x I adapted to the handlebody: the old
// coordinates are Sigma_g (handles 1..g) followed by its mirror (handles
// g+1..2g); in new coordinates the kernel of inclusion into the handlebody is
// span{b_1..b_2g} and a_j maps to the j-th generator of pi_1(Sigma_g).
BasisChange half_spin_basis(int genus);

// Rows b_1..b_g, and the projection a_i -> e_i, b_i -> 0.
IntMatrix standard_lagrangian(int genus);
IntMatrix standard_quotient(int genus);

struct CgReport {
  bool lagrangian = false;       // isotropic primitive rank-g summand, kernel of the identification
  bool preserved = false;        // S maps span(L) into itself
  bool quotient_matches = false; // induced map on Z^{2g}/span(L) is A
  std::string detail;

  bool ok() const { return lagrangian && preserved && quotient_matches; }
};

// Homological conditions for a closed surface monodromy S to extend over a
// handlebody whose pi_1 action abelianizes to A. L holds a basis of the
// Lagrangian in its rows; `identification` (g x 2g) identifies Z^{2g}/span(L)
// with Z^g.
CgReport cg_compatibility(const IntMatrix& s, const IntMatrix& lagrangian, const IntMatrix& a,
                          const std::optional<IntMatrix>& identification = std::nullopt);

// Monodromy of H_g together with its restriction to the boundary surface.
class HandlebodyMonodromy {
 public:
  HandlebodyMonodromy() : HandlebodyMonodromy(identity(0)) {}
  // Requires an inverse witness and the cg_compatibility conditions against
  // the standard Lagrangian.
  HandlebodyMonodromy(FreeGroupMap pi1_action, SurfaceMonodromy boundary);

  static HandlebodyMonodromy identity(int genus);

  int genus() const { return boundary_.genus(); }
  const FreeGroupMap& pi1_action() const { return pi1_; }
  const SurfaceMonodromy& boundary() const { return boundary_; }

  // pi_1-level form of the compatibility: q o boundary = pi1_action o q for the
  // quotient q: a_i -> x_i, b_i -> 1. Nullopt when the boundary has no payload.
  std::optional<bool> pi1_quotient_compatible() const;

  friend bool operator==(const HandlebodyMonodromy&, const HandlebodyMonodromy&) = default;

 private:
  FreeGroupMap pi1_;
  SurfaceMonodromy boundary_;
};

// Catalog lookup: knot monodromies (trefoil_R, trefoil_L, figure8,
// square_knot, granny_knot, cinquefoil, unknot) and curves (standard curves,
// Stallings curves of the square knot, half-spin disks).
using CuratedPayload = std::variant<CurveSpec, SurfaceMonodromy>;
CuratedPayload curated_payload(const std::string& name);
std::vector<std::string> curated_monodromy_names();
std::vector<std::string> curated_curve_names();

// Boundary of the disk a x I in Sigma_g x I, where a is the proper arc on
// Sigma_g dual to the curve `dual_to` ("a<k>" or "b<k>"): the Stallings curve
// on Sigma_g # -Sigma_g in block coordinates.
CurveSpec half_spin_stallings_curve(int genus, const std::string& dual_to);
// The same curve in half_spin_basis coordinates, flagged as bounding an
// unknotted disk in the handlebody fiber.
CurveSpec half_spin_disk_curve(int genus, const std::string& dual_to);

}  // namespace fibcalc
