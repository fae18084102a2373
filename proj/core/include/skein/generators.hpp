#pragma once

#include "skein/diagram.hpp"

#include <string>
#include <vector>

namespace skein {

enum class Family {
  hopf_chain,
  hopf_ring,
  dbl_hopf_chain,
  dbl_hopf_half_ring,
  dbl_hopf_ring,
  brunnian_chain,
  brunnian_chain_dblleft,
  brunnian_chain_dblends,
  brunnian_ring,
  brunnian_half_ring_plus,
  brunnian_half_ring_minus,
  borromean,
  l2_hopf_chain,
  l2_hopf_ring,
};

struct FamilySpec {
  Family family;
  /// Component count for simple families; composition list (n_1..n_k) for
  /// the level-two Hopf families; empty for borromean.
  std::vector<int> sizes;
};

const char* family_name(Family f);
Family family_from_name(const std::string& name);

/// Builds the family's planar diagram.  Deterministic: identical specs give
/// identical labeled diagrams.  Throws std::invalid_argument outside the
/// family's size bounds.
PlanarDiagram generate(const FamilySpec& spec);

/// Same diagram with the family's calibrated component orientations.
OrientedDiagram generate_oriented(const FamilySpec& spec);

}  // namespace skein
