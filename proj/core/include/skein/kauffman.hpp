#pragma once

#include "skein/diagram.hpp"
#include "skein/laurent.hpp"

#include <map>
#include <vector>

namespace skein {

/// Loop value delta = -A^2 - A^{-2}.
LaurentPoly bracket_delta();

/// Catalan numbers via the a_n = sum a_k a_{n-1-k} recursion (n <= 30).
Int catalan(int n);

/// True when gathering terms wins: 2^k strictly exceeds Catalan(n_strands).
bool region_worth(int k_crossings, int n_strands);

/// Kauffman bracket by full state-sum enumeration over 2^c smoothings.
/// Throws bracket_cap_error beyond the crossing cap.
class bracket_cap_error : public std::runtime_error {
 public:
  explicit bracket_cap_error(const std::string& w) : std::runtime_error(w) {}
};

LaurentPoly bracket_naive(const PlanarDiagram& pd, int crossing_cap = 24, int threads = 0);

/// A partially resolved region: weighted sum of boundary pairings.
/// Keys are pairings of boundary arc labels; planarity of the source diagram
/// keeps the key count within Catalan(n).
struct Tangle {
  std::vector<int> boundary;  // arc labels, sorted
  std::map<std::vector<std::pair<int, int>>, LaurentPoly> matchings;
};

struct Region {
  std::vector<int> crossings;  // indices into pd.crossings
};

struct RegionPlan {
  std::vector<Region> regions;
};

/// Resolves all 2^k smoothings of the region, gathering equal boundary
/// pairings; closed internal loops are absorbed as delta factors.
Tangle resolve_region(const PlanarDiagram& pd, const Region& region);

/// Glues two tangles along their shared boundary arcs.
Tangle merge_tangles(const Tangle& a, const Tangle& b);

/// Greedy region planner: grows regions along the strand graph and closes
/// them when gathering is worthwhile; falls back to single crossings.
RegionPlan plan_regions(const PlanarDiagram& pd);

/// Bracket by region contraction; equals bracket_naive wherever both run.
LaurentPoly bracket_gathered(const PlanarDiagram& pd, const RegionPlan& plan);
LaurentPoly bracket_gathered(const PlanarDiagram& pd);

/// gathered for large diagrams, naive below the cap.
LaurentPoly bracket_auto(const PlanarDiagram& pd);

}  // namespace skein
