#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "fibcalc/algebra/laurent.hpp"
#include "fibcalc/fibered/presentation.hpp"

namespace fibcalc {

// Element of the integral group ring Z[F_n]: word -> coefficient, no zeros.
using GroupRingElement = std::map<FreeWord, Int>;

GroupRingElement ring_add(const GroupRingElement& x, const GroupRingElement& y);
GroupRingElement ring_multiply(const GroupRingElement& x, const GroupRingElement& y);
GroupRingElement ring_element(const FreeWord& w, Int coeff = 1);
std::string to_string(const GroupRingElement& x, std::span<const std::string> names);

// d w / d x_j.
GroupRingElement fox_derivative(const FreeWord& w, int j);

// Checks sum_j (dw/dx_j)(x_j - 1) = w - 1.
bool fox_identity_holds(const FreeWord& w);

// Rows are relators, columns generators.
using FoxMatrix = std::vector<std::vector<GroupRingElement>>;
FoxMatrix fox_matrix(const GroupPresentation& p);

// Image of a group ring element under x_i -> t^{e_i}.
LaurentPoly abelianize_element(const GroupRingElement& x, const std::vector<Int>& assignment);

// H_1 as SNF diagonal with unit entries dropped: [] trivial, [0] = Z, [2] = Z/2.
std::vector<Int> h1(const GroupPresentation& p);

// A surjection H_1 -> Z as exponents e_i (x_i -> t^{e_i}). Throws
// PreconditionError unless H_1 = Z. Sign chosen so the last nonzero e_i is positive.
std::vector<Int> abelianization_assignment(const GroupPresentation& p);

// First elementary ideal generator of the Alexander module, normalized.
LaurentPoly alexander_from_presentation(const GroupPresentation& p,
                                        const std::optional<std::vector<Int>>& assignment = std::nullopt);

// <a, b | a b a B A B>.
GroupPresentation trefoil_two_bridge_presentation();

class FiniteGroupTable {
 public:
  // Verifies closure, associativity, identity and inverses.
  FiniteGroupTable(std::string name, std::vector<std::string> element_names, std::vector<int> table);

  // Closure of the given permutations of {0..degree-1} under composition.
  static FiniteGroupTable from_permutations(std::string name, int degree, const std::vector<std::vector<int>>& generators);

  const std::string& name() const { return name_; }
  int order() const { return n_; }
  int identity() const { return identity_; }
  int multiply(int x, int y) const { return table_[static_cast<std::size_t>(x * n_ + y)]; }
  int inverse(int x) const { return inverse_[static_cast<std::size_t>(x)]; }
  const std::vector<std::string>& element_names() const { return names_; }

 private:
  std::string name_;
  int n_ = 0;
  std::vector<std::string> names_;
  std::vector<int> table_;
  std::vector<int> inverse_;
  int identity_ = 0;
};

// "Z1".."Z12", "S3", "S4", "A4", "D4".
FiniteGroupTable catalog_group(const std::string& name);
std::vector<std::string> catalog_group_names();

struct HomCountOptions {
  std::uint64_t budget = 100'000'000;  // search nodes
  unsigned workers = 1;
};

// The FIBCALC_HOM_BUDGET override, or the default.
std::uint64_t default_hom_budget();

// Exact number of homomorphisms P -> G. Generator "t", if present, is
// assigned first. Throws BudgetExceeded when the search needs more nodes than
// the budget allows.
std::uint64_t count_homs(const GroupPresentation& p, const FiniteGroupTable& g, const HomCountOptions& options = {});

}  // namespace fibcalc
