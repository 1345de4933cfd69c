#include "fibcalc/fibered/presentation.hpp"

namespace fibcalc {

void GroupPresentation::validate() const {
  for (const auto& r : relators)
    if (r.rank() != rank()) throw RankMismatch("relator rank differs from the number of generators");
}

std::string GroupPresentation::to_string() const {
  std::string out = "<";
  for (const auto& n : generator_names) out += " " + n;
  out += " |";
  for (std::size_t i = 0; i < relators.size(); ++i) {
    out += (i ? ", " : " ") + format_word(relators[i], generator_names);
  }
  return out + " >";
}

GroupPresentation mapping_torus_presentation(const FreeGroupMap& phi, std::vector<std::string> fiber_names) {
  const int n = phi.rank();
  if (static_cast<int>(fiber_names.size()) != n) throw RankMismatch("one name per fiber generator is required");
  GroupPresentation p;
  p.generator_names = std::move(fiber_names);
  p.generator_names.push_back("t");
  const int total = n + 1;
  const FreeWord t = FreeWord::generator(total, total);
  for (int i = 1; i <= n; ++i) {
    const FreeWord x = FreeWord::generator(total, i);
    p.relators.push_back(t * x * t.inverse() * phi.image(i).embed(total, 0).inverse());
  }
  return p;
}

}  // namespace fibcalc
