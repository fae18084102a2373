#pragma once

#include "skein/laurent.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace skein {

/// One crossing of a planar diagram.  The four arc labels are listed
/// clockwise starting with an arc of the over-strand, so positions 0 and 2
/// carry the over-strand and positions 1 and 3 the under-strand.
struct Crossing {
  std::array<int, 4> arc;
  int over(int k) const { return arc[k ? 2 : 0]; }
  int under(int k) const { return arc[k ? 3 : 1]; }
};

/// Planar link diagram: crossing list plus a count of crossingless circles.
struct PlanarDiagram {
  std::vector<Crossing> crossings;
  int free_loops = 0;

  int crossing_count() const { return static_cast<int>(crossings.size()); }
  bool empty() const { return crossings.empty(); }
};

/// Per-crossing smoothing choice.  A joins corners 0-1 and 2-3,
/// B joins 0-3 and 1-2.
enum class Smoothing : uint8_t { A = 0, B = 1 };

using SmoothingState = std::vector<Smoothing>;

struct Violation {
  int arc;
  int occurrences;
  std::string message;
};

/// Checks the arc-occurrence invariant: every label appears exactly twice.
std::vector<Violation> validate(const PlanarDiagram& pd);
bool is_valid(const PlanarDiagram& pd);

/// Arc label -> component index (components numbered by smallest arc label).
std::vector<int> components(const PlanarDiagram& pd, std::vector<int>* arc_component = nullptr);
int component_count(const PlanarDiagram& pd);

/// Number of disjoint circles after applying the smoothing state,
/// including free loops.  The diagram must be valid and closed.
int count_loops(const PlanarDiagram& pd, const SmoothingState& s);
int count_loops(const PlanarDiagram& pd, uint64_t state_bits);

/// Splits into connected diagrams (connectivity through shared arcs);
/// each free loop becomes its own single-circle diagram.
std::vector<PlanarDiagram> split_disjoint(const PlanarDiagram& pd);

/// Swap over/under at every crossing.
PlanarDiagram mirror(const PlanarDiagram& pd);

/// Relabels arcs densely 0..m-1 preserving relative order.
PlanarDiagram normalize_labels(const PlanarDiagram& pd);

struct SimplifyResult {
  PlanarDiagram diagram;
  LaurentPoly multiplier;  // bracket(original) = multiplier * bracket(simplified)
};

/// Removes Reidemeister-1 kinks (each worth a -A^{+-3} bracket factor) and
/// cancelling Reidemeister-2 pairs until none remain.
SimplifyResult simplify(const PlanarDiagram& pd);

/// Reidemeister moves only, no bracket bookkeeping (HOMFLY-safe).
PlanarDiagram simplify_plain(const PlanarDiagram& pd);

struct CrossingOrientation;

/// Removes the given crossings and splices the given arc-label pairs;
/// spliced strands whose every occurrence disappears become free loops.
/// Orientation flags for surviving crossings are carried through when given.
PlanarDiagram remove_and_splice(const PlanarDiagram& pd, const std::vector<int>& remove,
                                const std::vector<std::pair<int, int>>& splices,
                                std::vector<CrossingOrientation>* orient_flags = nullptr);

// --- oriented diagrams -----------------------------------------------------

struct CrossingOrientation {
  uint8_t over_in;   // 0 or 2
  uint8_t under_in;  // 1 or 3
};

struct OrientedDiagram {
  PlanarDiagram pd;
  std::vector<CrossingOrientation> orient;

  /// +1 when rotating the incoming-under direction counterclockwise by a
  /// quarter turn aligns it with the incoming-over direction.
  int sign(int crossing) const {
    return orient[crossing].under_in == (orient[crossing].over_in + 1) % 4 ? 1 : -1;
  }
};

/// Assigns directions per component (false = default traversal direction,
/// true = reversed) and derives the per-crossing incoming flags.
OrientedDiagram orient(const PlanarDiagram& pd, const std::vector<bool>& reverse_component);
OrientedDiagram orient_default(const PlanarDiagram& pd);

int writhe(const OrientedDiagram& od);

/// R1/R2 simplification carrying the orientation flags through.
OrientedDiagram simplify_oriented(const OrientedDiagram& od);

// --- serialization ----------------------------------------------------------

std::string pd_to_json(const PlanarDiagram& pd);
std::string pd_to_json(const OrientedDiagram& od);
std::string pd_to_text(const PlanarDiagram& pd);

/// Parses the JSON form; both parsers reject invalid arc multiplicity.
PlanarDiagram pd_from_json(const std::string& text);
std::optional<OrientedDiagram> oriented_from_json(const std::string& text);

/// Text form: one crossing per line "X a b c d", optional "loops n".
PlanarDiagram pd_from_text(const std::string& text);

}  // namespace skein
