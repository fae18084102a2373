#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace skein {

/// Edge-coloured multigraph subject to the link-graph axioms:
/// max valency 3, monochrome subgraphs are trees, binary vertices are
/// monochrome, and no vertex meets more than two colours.
struct LinkGraph {
  struct Edge {
    int u, v;
    int colour;
  };
  std::vector<int> vertices;  // ids, not necessarily dense
  std::vector<Edge> edges;

  std::vector<int> incident_edges(int v) const;
  int valency(int v) const;
  std::set<int> colours_at(int v) const;
  std::set<int> colours() const;
};

struct GraphViolation {
  int axiom;  // 1..4 as in the definition; 0 = structural
  std::string message;
};

std::vector<GraphViolation> validate_graph(const LinkGraph& g);
bool is_valid_graph(const LinkGraph& g);

/// Applies the three unravelling moves to a fixed point.  Every monochrome
/// component of the result is either all-trivalent or a single edge.
LinkGraph reduce(const LinkGraph& g);

/// True when reduce(g) consists solely of monochrome single-edge components.
bool is_unlinked(const LinkGraph& g);

/// Vertices that are univalent or non-monochrome trivalent: the object
/// alphabet of the disconnection category.
std::set<int> m_vertices(const LinkGraph& g);

/// Splits the doubled-colour tree at a trivalent vertex of M_G; returns the
/// two leaf sets L+(v), L-(v) (deterministic order).
std::pair<std::set<int>, std::set<int>> leaf_partition(const LinkGraph& g, int v);

/// Least fixed point of the disconnection implications containing S:
/// univalent vertices are free, and a trivalent v joins once one of its
/// leaf sets is contained.
std::set<int> closure(const LinkGraph& g, const std::set<int>& S);

/// True iff closure(S) reaches all of M_G, i.e. S is initial in the
/// disconnection category.
bool is_initial(const LinkGraph& g, const std::set<int>& S);

/// Endpoint vertices of a colour: exactly one incident edge of that colour.
std::set<int> colour_endpoints(const LinkGraph& g, int colour);

struct BrunnianReport {
  bool is_brunnian = false;
  bool is_strongly_brunnian = false;
  std::map<int, bool> colour_verdicts;              // colour -> endpoints initial?
  std::vector<std::set<int>> minimal_initial_sets;  // up to the size bound
  bool search_complete = true;                      // false when bounds were hit
};

BrunnianReport brunnian_report(const LinkGraph& g, int max_set_size = 3,
                               int exhaustive_limit = 20);

// --- input formats ----------------------------------------------------------

/// JSON: {"vertices":[...], "edges":[{"u":..,"v":..,"colour":..}, ...]};
/// colours may be strings (mapped to ids) or integers.
LinkGraph graph_from_json(const std::string& text);
std::string graph_to_json(const LinkGraph& g);

/// DOT subset: `graph name { a -- b [color=red]; ... }`.
LinkGraph graph_from_dot(const std::string& text);

}  // namespace skein
