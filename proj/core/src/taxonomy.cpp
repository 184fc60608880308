#include "perfreq/taxonomy.hpp"

#include <stdexcept>

namespace perfreq {

const TaxonomyTree& taxonomy() {
  static const TaxonomyTree tree{{
      {Role::Independent, {Aspect::Capacity, Aspect::ResourceConstraint}},
      {Role::Dependent,
       {Aspect::TimeBehavior, Aspect::SpeedThroughput, Aspect::Efficiency}},
  }};
  return tree;
}

Role classify_role(Aspect a) {
  switch (a) {
    case Aspect::Capacity:
    case Aspect::ResourceConstraint:
      return Role::Independent;
    case Aspect::TimeBehavior:
    case Aspect::SpeedThroughput:
    case Aspect::Efficiency:
      return Role::Dependent;
  }
  throw std::logic_error("unhandled aspect");
}

std::vector<std::pair<Aspect, Role>> expected_aspects() {
  std::vector<std::pair<Aspect, Role>> out;
  for (const TaxonomyNode& node : taxonomy().roots) {
    for (Aspect a : node.aspects) out.emplace_back(a, node.role);
  }
  return out;
}

}  // namespace perfreq
