#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fibcalc/fibered/fibered_knot.hpp"
#include "fibcalc/mcg/mcg.hpp"

namespace fibcalc {

struct DiskAmbient {
  enum class Kind { B4, HomotopyB4, Contractible };
  Kind kind = Kind::B4;
  std::string descriptor;

  static DiskAmbient b4() { return {}; }
  static DiskAmbient homotopy_b4() { return {Kind::HomotopyB4, {}}; }
  static DiskAmbient contractible(std::string d) { return {Kind::Contractible, std::move(d)}; }
  std::string to_string() const;

  friend bool operator==(const DiskAmbient&, const DiskAmbient&) = default;
};

// Fiber of a fibered disk: a handlebody H_g, or H_g with an extra closed
// summand (modeled by label only).
struct FiberType {
  int genus = 0;
  std::optional<std::string> summand_label;

  static FiberType handlebody(int g) { return {g, std::nullopt}; }
  static FiberType with_summand(int g, std::string label) { return {g, std::move(label)}; }
  bool is_handlebody() const { return !summand_label; }

  friend bool operator==(const FiberType&, const FiberType&) = default;
};

struct DiskTwistRecord {
  CurveSpec disk_boundary;
  Int multiplier = 0;

  friend bool operator==(const DiskTwistRecord&, const DiskTwistRecord&) = default;
};

// A fibered disk-knot whose exterior is the mapping torus of `monodromy` on
// the handlebody fiber.
struct FiberedDisk {
  std::string name;  // display label only
  DiskAmbient ambient;
  FiberType fiber;
  HandlebodyMonodromy monodromy;
  std::vector<DiskTwistRecord> twist_history;

  // Every field except the display name and the twist history.
  bool same_data(const FiberedDisk& other) const {
    return ambient == other.ambient && fiber == other.fiber && monodromy == other.monodromy;
  }
  friend bool operator==(const FiberedDisk& a, const FiberedDisk& b) {
    return a.same_data(b) && a.twist_history == b.twist_history;
  }
};

FiberedDisk trivial_disk();

// (B^3, K°) x I: fiber H_{2g} = Sigma_g° x I with pi_1 action that of K, and
// boundary monodromy K # -K written in half_spin_basis coordinates.
FiberedDisk half_spin(const FiberedKnot& k);

FiberedKnot boundary_knot(const FiberedDisk& d);

// Twist m times along the disk E in the handlebody fiber. The handlebody pi_1
// action is left unchanged; the boundary monodromy picks up tau_{dE}^m.
FiberedDisk disk_twist(const FiberedDisk& d, const CurveSpec& e, Int m);

// Fibered disks are homotopy-ribbon exactly when the fiber is a handlebody.
bool is_homotopy_ribbon(const FiberedDisk& d);

// HNN presentation of pi_1 of the exterior on x1..xg, t.
GroupPresentation exterior_presentation(const FiberedDisk& d);

// Whether pi_1(boundary) -> pi_1(H_g) is onto, checked on H_1 for the given
// identification (g x 2g; standard a_i -> e_i, b_i -> 0 by default).
bool boundary_surjectivity_check(const FiberedDisk& d, const std::optional<IntMatrix>& identification = std::nullopt);

// Fiber-preserving sum with a fibered 2-knot whose fiber is not #S^1 x S^2.
FiberedDisk fiber_sum_with_summand(const FiberedDisk& d, const std::string& summand_label);

// The boundary-compatibility report of the disk's own monodromy.
CgReport disk_cg_report(const FiberedDisk& d);

}  // namespace fibcalc
