#pragma once

#include <string>
#include <vector>

#include "fibcalc/algebra/laurent.hpp"
#include "fibcalc/fibered/presentation.hpp"
#include "fibcalc/mcg/mcg.hpp"

namespace fibcalc {

// Where a 1-knot lives. Homology spheres are opaque descriptors that record
// the surgery they came from; nothing is computed on them.
struct KnotAmbient {
  enum class Kind { S3, HomologySphere };
  Kind kind = Kind::S3;
  std::string descriptor;

  static KnotAmbient s3() { return {}; }
  static KnotAmbient homology_sphere(std::string d) { return {Kind::HomologySphere, std::move(d)}; }
  std::string to_string() const;

  friend bool operator==(const KnotAmbient&, const KnotAmbient&) = default;
};

// A fibered knot with fiber Sigma_g minus a disk; pi_1 of the fiber is
// F_{2g} on a1, b1, ..., ag, bg.
struct FiberedKnot {
  std::string name;  // display label only, not part of equality
  KnotAmbient ambient;
  SurfaceMonodromy monodromy;

  int genus() const { return monodromy.genus(); }

  friend bool operator==(const FiberedKnot& a, const FiberedKnot& b) {
    return a.ambient == b.ambient && a.monodromy == b.monodromy;
  }
};

FiberedKnot unknot();
FiberedKnot catalog_knot(const std::string& name);
std::vector<std::string> catalog_knot_names();

// HNN presentation <a1, b1, ..., t | t x t^-1 phi(x)^-1>. Throws Unsupported
// for knots known only homologically.
GroupPresentation knot_group(const FiberedKnot& k);

// normalize_alexander(det(tI - A)).
LaurentPoly alexander_poly(const FiberedKnot& k);

// Warnings for data that violates expectations on knots in S^3 (|Delta(1)| = 1).
std::vector<std::string> validate_knot(const FiberedKnot& k);

// Monodromy phi o tau_c^m. Requires c to have fiber framing zero.
FiberedKnot stallings_twist(const FiberedKnot& k, const CurveSpec& c, Int m);

// True when twisting m times along a Stallings curve provably changes a knot
// of genus g >= 2: |m| = 1 or |m| > 9g - 3. False only means the bound is
// silent; it never asserts the knots are equal. Throws PreconditionError for g < 2.
bool distinctness_bound(Int m, int genus);

FiberedKnot connected_sum(const FiberedKnot& k1, const FiberedKnot& k2);

// The reverse of the knot in the mirrored fiber (monodromy via mcg mirror).
FiberedKnot mirror_knot(const FiberedKnot& k);

// The dual knot of 1/n surgery on k: identical exterior, ambient retagged as
// the homology sphere S3_{1/n}(k). n = 0 is rejected.
FiberedKnot dual_knot_surgery_descriptor(const FiberedKnot& k, Int n);

}  // namespace fibcalc
