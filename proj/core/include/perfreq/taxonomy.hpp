#pragma once

#include <utility>
#include <vector>

#include "perfreq/model.hpp"

namespace perfreq {

// Two-level classification tree: each role node lists the aspects that fall
// under it. Kept as data (not just the classify function) so deeper
// sub-categories can be attached later without changing callers.
struct TaxonomyNode {
  Role role;
  std::vector<Aspect> aspects;
};

struct TaxonomyTree {
  std::vector<TaxonomyNode> roots;
};

const TaxonomyTree& taxonomy();

// Total mapping aspect -> role. Capacity and ResourceConstraint shape the
// test setup (independent); TimeBehavior, SpeedThroughput and Efficiency are
// measured outcomes (dependent).
Role classify_role(Aspect a);

// All five (aspect, role) pairs; the completeness check walks this to find
// aspects a model never mentions.
std::vector<std::pair<Aspect, Role>> expected_aspects();

}  // namespace perfreq
