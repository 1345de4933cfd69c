#pragma once

#include <string>
#include <vector>

#include "fibcalc/algebra/free_group.hpp"

namespace fibcalc {

// A finite group presentation. Relators are reduced words over the generators.
struct GroupPresentation {
  std::vector<std::string> generator_names;
  std::vector<FreeWord> relators;

  int rank() const { return static_cast<int>(generator_names.size()); }
  void validate() const;

  // One relator per line, e.g. "< a1 b1 t | t a1 T B1 A1 ... >".
  std::string to_string() const;

  friend bool operator==(const GroupPresentation&, const GroupPresentation&) = default;
};

// HNN presentation of a mapping torus: generators names..., t and relators
// t x_i t^{-1} phi(x_i)^{-1}.
GroupPresentation mapping_torus_presentation(const FreeGroupMap& phi, std::vector<std::string> fiber_names);

}  // namespace fibcalc
