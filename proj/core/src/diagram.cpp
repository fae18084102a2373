#include "skein/diagram.hpp"

#include <json.hpp>

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace skein {

namespace {

// Slot id = 4 * crossing + position.
inline int slot_id(int crossing, int pos) { return 4 * crossing + pos; }

// arc label -> list of slots holding it
std::map<int, std::vector<int>> arc_slots(const PlanarDiagram& pd) {
  std::map<int, std::vector<int>> m;
  for (int c = 0; c < pd.crossing_count(); ++c)
    for (int k = 0; k < 4; ++k) m[pd.crossings[c].arc[k]].push_back(slot_id(c, k));
  return m;
}

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

std::vector<Violation> validate(const PlanarDiagram& pd) {
  std::vector<Violation> out;
  std::map<int, int> count;
  for (const auto& x : pd.crossings)
    for (int k = 0; k < 4; ++k) {
      if (x.arc[k] < 0) out.push_back({x.arc[k], 1, "negative arc label"});
      ++count[x.arc[k]];
    }
  for (const auto& [arc, n] : count) {
    if (n != 2) {
      std::ostringstream os;
      os << "arc " << arc << " occurs " << n << " times (expected 2)";
      out.push_back({arc, n, os.str()});
    }
  }
  if (pd.free_loops < 0) out.push_back({-1, 0, "negative free_loops"});
  return out;
}

bool is_valid(const PlanarDiagram& pd) { return validate(pd).empty(); }

std::vector<int> components(const PlanarDiagram& pd, std::vector<int>* arc_component) {
  auto slots = arc_slots(pd);
  std::vector<int> arcs;
  arcs.reserve(slots.size());
  for (const auto& [a, s] : slots) arcs.push_back(a);
  std::map<int, int> index;
  for (size_t i = 0; i < arcs.size(); ++i) index[arcs[i]] = static_cast<int>(i);

  UnionFind uf(static_cast<int>(arcs.size()));
  for (const auto& x : pd.crossings) {
    uf.unite(index[x.arc[0]], index[x.arc[2]]);
    uf.unite(index[x.arc[1]], index[x.arc[3]]);
  }
  // Components numbered in order of their smallest arc label.
  std::map<int, int> root_to_comp;
  std::vector<int> comp_of_arc(arcs.size());
  for (size_t i = 0; i < arcs.size(); ++i) {
    int r = uf.find(static_cast<int>(i));
    if (!root_to_comp.count(r)) root_to_comp[r] = static_cast<int>(root_to_comp.size());
  }
  for (size_t i = 0; i < arcs.size(); ++i) comp_of_arc[i] = root_to_comp[uf.find(static_cast<int>(i))];

  if (arc_component) {
    arc_component->assign(arcs.empty() ? 0 : *std::max_element(arcs.begin(), arcs.end()) + 1, -1);
    for (size_t i = 0; i < arcs.size(); ++i) (*arc_component)[arcs[i]] = comp_of_arc[i];
  }
  return comp_of_arc;
}

int component_count(const PlanarDiagram& pd) {
  auto comp = components(pd);
  int n = comp.empty() ? 0 : *std::max_element(comp.begin(), comp.end()) + 1;
  return n + pd.free_loops;
}

int count_loops(const PlanarDiagram& pd, uint64_t state_bits) {
  const int c = pd.crossing_count();
  if (c == 0) return pd.free_loops;

  // partner through arcs
  std::vector<int> arc_partner(4 * c, -1);
  {
    std::map<int, int> first_slot;
    for (int i = 0; i < c; ++i)
      for (int k = 0; k < 4; ++k) {
        int a = pd.crossings[i].arc[k];
        int s = slot_id(i, k);
        auto it = first_slot.find(a);
        if (it == first_slot.end()) {
          first_slot[a] = s;
        } else {
          arc_partner[s] = it->second;
          arc_partner[it->second] = s;
          first_slot.erase(it);
        }
      }
    if (!first_slot.empty()) throw std::invalid_argument("count_loops: diagram has open arcs");
  }
  // partner through smoothings: A joins 0-1 / 2-3, B joins 0-3 / 1-2
  std::vector<int> sm_partner(4 * c);
  for (int i = 0; i < c; ++i) {
    bool b = (state_bits >> i) & 1;
    if (!b) {
      sm_partner[slot_id(i, 0)] = slot_id(i, 1);
      sm_partner[slot_id(i, 1)] = slot_id(i, 0);
      sm_partner[slot_id(i, 2)] = slot_id(i, 3);
      sm_partner[slot_id(i, 3)] = slot_id(i, 2);
    } else {
      sm_partner[slot_id(i, 0)] = slot_id(i, 3);
      sm_partner[slot_id(i, 3)] = slot_id(i, 0);
      sm_partner[slot_id(i, 1)] = slot_id(i, 2);
      sm_partner[slot_id(i, 2)] = slot_id(i, 1);
    }
  }
  std::vector<char> seen(4 * c, 0);
  int loops = 0;
  for (int s0 = 0; s0 < 4 * c; ++s0) {
    if (seen[s0]) continue;
    ++loops;
    int s = s0;
    while (!seen[s]) {
      seen[s] = 1;
      int t = sm_partner[s];
      seen[t] = 1;
      s = arc_partner[t];
    }
  }
  return loops + pd.free_loops;
}

int count_loops(const PlanarDiagram& pd, const SmoothingState& s) {
  if (static_cast<int>(s.size()) != pd.crossing_count())
    throw std::invalid_argument("smoothing state length mismatch");
  uint64_t bits = 0;
  for (size_t i = 0; i < s.size(); ++i)
    if (s[i] == Smoothing::B) bits |= (uint64_t{1} << i);
  return count_loops(pd, bits);
}

std::vector<PlanarDiagram> split_disjoint(const PlanarDiagram& pd) {
  std::vector<PlanarDiagram> out;
  const int c = pd.crossing_count();
  if (c > 0) {
    UnionFind uf(c);
    std::map<int, int> arc_first;
    for (int i = 0; i < c; ++i)
      for (int k = 0; k < 4; ++k) {
        int a = pd.crossings[i].arc[k];
        auto it = arc_first.find(a);
        if (it == arc_first.end())
          arc_first[a] = i;
        else
          uf.unite(i, it->second);
      }
    std::map<int, int> root_to_idx;
    for (int i = 0; i < c; ++i) {
      int r = uf.find(i);
      if (!root_to_idx.count(r)) {
        root_to_idx[r] = static_cast<int>(out.size());
        out.push_back(PlanarDiagram{});
      }
      out[root_to_idx[r]].crossings.push_back(pd.crossings[i]);
    }
  }
  for (int i = 0; i < pd.free_loops; ++i) out.push_back(PlanarDiagram{{}, 1});
  return out;
}

PlanarDiagram mirror(const PlanarDiagram& pd) {
  PlanarDiagram m = pd;
  for (auto& x : m.crossings) x.arc = {x.arc[1], x.arc[2], x.arc[3], x.arc[0]};
  return m;
}

PlanarDiagram normalize_labels(const PlanarDiagram& pd) {
  std::map<int, int> relabel;
  for (const auto& x : pd.crossings)
    for (int k = 0; k < 4; ++k) relabel.emplace(x.arc[k], 0);
  int next = 0;
  for (auto& [old_label, fresh] : relabel) fresh = next++;
  PlanarDiagram out = pd;
  for (auto& x : out.crossings)
    for (int k = 0; k < 4; ++k) x.arc[k] = relabel[x.arc[k]];
  return out;
}

// ---------------------------------------------------------------------------
// Reidemeister simplification

namespace {

// Face orbits of the combinatorial map: phi = (rotate clockwise) o (arc hop).
std::vector<std::vector<int>> face_orbits(const PlanarDiagram& pd) {
  const int c = pd.crossing_count();
  std::vector<int> arc_partner(4 * c, -1);
  std::map<int, int> first_slot;
  for (int i = 0; i < c; ++i)
    for (int k = 0; k < 4; ++k) {
      int a = pd.crossings[i].arc[k];
      int s = slot_id(i, k);
      auto it = first_slot.find(a);
      if (it == first_slot.end()) {
        first_slot[a] = s;
      } else {
        arc_partner[s] = it->second;
        arc_partner[it->second] = s;
        first_slot.erase(it);
      }
    }
  std::vector<std::vector<int>> orbits;
  std::vector<char> seen(4 * c, 0);
  for (int s0 = 0; s0 < 4 * c; ++s0) {
    if (seen[s0]) continue;
    std::vector<int> orbit;
    int s = s0;
    while (!seen[s]) {
      seen[s] = 1;
      orbit.push_back(s);
      int t = arc_partner[s];
      s = (t / 4) * 4 + (t % 4 + 1) % 4;
    }
    orbits.push_back(std::move(orbit));
  }
  return orbits;
}

}  // namespace

PlanarDiagram remove_and_splice(const PlanarDiagram& pd, const std::vector<int>& remove,
                                const std::vector<std::pair<int, int>>& splices,
                                std::vector<CrossingOrientation>* orient_flags) {
  std::set<int> gone(remove.begin(), remove.end());
  std::map<int, int> parent;  // arc union-find over labels
  std::function<int(int)> find = [&](int a) {
    auto it = parent.find(a);
    if (it == parent.end() || it->second == a) return a;
    int r = find(it->second);
    parent[a] = r;
    return r;
  };
  for (auto [a, b] : splices) {
    parent.emplace(a, a);
    parent.emplace(b, b);
    int ra = find(a), rb = find(b);
    if (ra != rb) parent[ra] = rb;
  }
  PlanarDiagram out;
  out.free_loops = pd.free_loops;
  std::vector<CrossingOrientation> kept_flags;
  std::set<int> groups_present;
  for (int i = 0; i < pd.crossing_count(); ++i) {
    if (gone.count(i)) continue;
    Crossing x = pd.crossings[i];
    for (int k = 0; k < 4; ++k) {
      x.arc[k] = find(x.arc[k]);
      groups_present.insert(x.arc[k]);
    }
    out.crossings.push_back(x);
    if (orient_flags) kept_flags.push_back((*orient_flags)[i]);
  }
  // A spliced strand with no surviving occurrence closed into a circle.
  std::set<int> groups_spliced;
  for (auto [a, b] : splices) {
    groups_spliced.insert(find(a));
    groups_spliced.insert(find(b));
  }
  for (int g : groups_spliced)
    if (!groups_present.count(g)) ++out.free_loops;
  if (orient_flags) *orient_flags = std::move(kept_flags);
  return out;
}

namespace {

// One simplification pass; returns false when no move applies.
bool simplify_step(PlanarDiagram& pd, LaurentPoly* multiplier,
                   std::vector<CrossingOrientation>* orient_flags) {
  // R1: an arc occupying two adjacent positions of one crossing.
  for (int i = 0; i < pd.crossing_count(); ++i) {
    const auto& x = pd.crossings[i];
    for (int k = 0; k < 4; ++k) {
      if (x.arc[k] != x.arc[(k + 1) % 4]) continue;
      int p = x.arc[(k + 2) % 4];
      int q = x.arc[(k + 3) % 4];
      if (multiplier) *multiplier *= LaurentPoly::monomial("A", k % 2 == 0 ? 6 : -6, -1);
      pd = remove_and_splice(pd, {i}, {{p, q}}, orient_flags);
      return true;
    }
  }

  // R2: a bigon face whose arcs keep consistent over/under parity.
  for (const auto& orbit : face_orbits(pd)) {
    if (orbit.size() != 2) continue;
    int d1 = orbit[0], d2 = orbit[1];
    int c1 = d1 / 4, j1 = d1 % 4;
    int c2 = d2 / 4, j2 = d2 % 4;
    if (c1 == c2) continue;
    // arc(d1) runs from (c1, j1) to (c2, s) with d2 = (c2, (s+1)%4)
    int s = (j2 + 3) % 4;
    if (pd.crossings[c1].arc[j1] != pd.crossings[c2].arc[s]) continue;  // defensive
    if ((j1 % 2) != (s % 2)) continue;  // clasp, not removable
    int t = (j1 + 3) % 4;
    pd = remove_and_splice(
        pd, {c1, c2},
        {{pd.crossings[c1].arc[(j1 + 2) % 4], pd.crossings[c2].arc[(s + 2) % 4]},
         {pd.crossings[c1].arc[(t + 2) % 4], pd.crossings[c2].arc[(j2 + 2) % 4]}},
        orient_flags);
    return true;
  }
  return false;
}

}  // namespace

SimplifyResult simplify(const PlanarDiagram& pd) {
  SimplifyResult r{pd, LaurentPoly::unit("A")};
  while (simplify_step(r.diagram, &r.multiplier, nullptr)) {
  }
  return r;
}

PlanarDiagram simplify_plain(const PlanarDiagram& pd) {
  PlanarDiagram out = pd;
  while (simplify_step(out, nullptr, nullptr)) {
  }
  return out;
}

OrientedDiagram simplify_oriented(const OrientedDiagram& od) {
  OrientedDiagram out = od;
  while (simplify_step(out.pd, nullptr, &out.orient)) {
  }
  return out;
}

// ---------------------------------------------------------------------------
// Orientation

OrientedDiagram orient(const PlanarDiagram& pd, const std::vector<bool>& reverse_component) {
  if (!is_valid(pd)) throw std::invalid_argument("orient: invalid diagram");
  const int c = pd.crossing_count();

  auto slots = arc_slots(pd);
  // arc -> the slot the arc points into; free-standing loops have no crossings.
  std::map<int, int> to_slot;

  std::vector<int> arc_comp;
  auto comp_of = components(pd, &arc_comp);
  int n_components = comp_of.empty() ? 0 : *std::max_element(comp_of.begin(), comp_of.end()) + 1;
  if (static_cast<int>(reverse_component.size()) != n_components)
    throw std::invalid_argument("orient: one direction flag per component required");

  std::set<int> visited;
  for (const auto& [a0, sl] : slots) {
    if (visited.count(a0)) continue;
    // Walk the strand starting along a0 toward its first-listed slot.
    int arc = a0;
    int to = sl[0];
    while (!visited.count(arc)) {
      visited.insert(arc);
      to_slot[arc] = to;
      int cr = to / 4, k = to % 4;
      int exit = slot_id(cr, (k + 2) % 4);
      int next_arc = pd.crossings[cr].arc[(k + 2) % 4];
      const auto& ns = slots[next_arc];
      arc = next_arc;
      to = (ns[0] == exit) ? ns[1] : ns[0];
    }
  }
  // Apply component reversals.
  for (auto& [a, d] : to_slot) {
    if (reverse_component[arc_comp[a]]) {
      const auto& sl = slots[a];
      d = (sl[0] == d) ? sl[1] : sl[0];
    }
  }

  OrientedDiagram od{pd, {}};
  od.orient.resize(c);
  for (int i = 0; i < c; ++i) {
    int over_in = -1, under_in = -1;
    for (int k = 0; k < 4; ++k) {
      int a = pd.crossings[i].arc[k];
      if (to_slot[a] == slot_id(i, k)) {
        if (k % 2 == 0) {
          if (over_in != -1) throw std::logic_error("orient: two incoming over arcs");
          over_in = k;
        } else {
          if (under_in != -1) throw std::logic_error("orient: two incoming under arcs");
          under_in = k;
        }
      }
    }
    if (over_in < 0 || under_in < 0) throw std::logic_error("orient: inconsistent direction");
    od.orient[i] = {static_cast<uint8_t>(over_in), static_cast<uint8_t>(under_in)};
  }
  return od;
}

OrientedDiagram orient_default(const PlanarDiagram& pd) {
  int n = component_count(pd) - pd.free_loops;
  return orient(pd, std::vector<bool>(std::max(n, 0), false));
}

int writhe(const OrientedDiagram& od) {
  int w = 0;
  for (int i = 0; i < od.pd.crossing_count(); ++i) w += od.sign(i);
  return w;
}

// ---------------------------------------------------------------------------
// Serialization

using nlohmann::json;

static json pd_json_obj(const PlanarDiagram& pd) {
  json j;
  j["crossings"] = json::array();
  for (const auto& x : pd.crossings) j["crossings"].push_back({x.arc[0], x.arc[1], x.arc[2], x.arc[3]});
  j["free_loops"] = pd.free_loops;
  return j;
}

std::string pd_to_json(const PlanarDiagram& pd) { return pd_json_obj(pd).dump(); }

std::string pd_to_json(const OrientedDiagram& od) {
  json j = pd_json_obj(od.pd);
  j["orientation"] = json::array();
  for (const auto& o : od.orient) j["orientation"].push_back({o.over_in, o.under_in});
  return j.dump();
}

std::string pd_to_text(const PlanarDiagram& pd) {
  std::ostringstream os;
  for (const auto& x : pd.crossings)
    os << "X " << x.arc[0] << " " << x.arc[1] << " " << x.arc[2] << " " << x.arc[3] << "\n";
  if (pd.free_loops > 0) os << "loops " << pd.free_loops << "\n";
  return os.str();
}

static PlanarDiagram pd_from_json_obj(const json& j) {
  PlanarDiagram pd;
  for (const auto& row : j.at("crossings")) {
    if (row.size() != 4) throw std::invalid_argument("crossing needs 4 arc labels");
    pd.crossings.push_back(Crossing{{row[0].get<int>(), row[1].get<int>(), row[2].get<int>(), row[3].get<int>()}});
  }
  if (j.contains("free_loops")) pd.free_loops = j.at("free_loops").get<int>();
  auto bad = validate(pd);
  if (!bad.empty()) throw std::invalid_argument("invalid diagram: " + bad.front().message);
  return pd;
}

PlanarDiagram pd_from_json(const std::string& text) {
  return pd_from_json_obj(json::parse(text));
}

std::optional<OrientedDiagram> oriented_from_json(const std::string& text) {
  json j = json::parse(text);
  PlanarDiagram pd = pd_from_json_obj(j);
  if (!j.contains("orientation")) return std::nullopt;
  OrientedDiagram od{pd, {}};
  for (const auto& row : j.at("orientation"))
    od.orient.push_back({row[0].get<uint8_t>(), row[1].get<uint8_t>()});
  if (od.orient.size() != pd.crossings.size())
    throw std::invalid_argument("orientation block length mismatch");
  for (const auto& o : od.orient)
    if (o.over_in % 2 != 0 || o.under_in % 2 != 1)
      throw std::invalid_argument("orientation flags must be (even, odd) positions");
  return od;
}

PlanarDiagram pd_from_text(const std::string& text) {
  PlanarDiagram pd;
  std::istringstream is(text);
  std::string line;
  while (std::getline(is, line)) {
    std::istringstream ls(line);
    std::string head;
    if (!(ls >> head)) continue;
    if (head == "X") {
      Crossing x{};
      if (!(ls >> x.arc[0] >> x.arc[1] >> x.arc[2] >> x.arc[3]))
        throw std::invalid_argument("bad crossing line: " + line);
      pd.crossings.push_back(x);
    } else if (head == "loops") {
      ls >> pd.free_loops;
    } else if (head[0] == '#') {
      continue;
    } else {
      throw std::invalid_argument("unrecognized line: " + line);
    }
  }
  auto bad = validate(pd);
  if (!bad.empty()) throw std::invalid_argument("invalid diagram: " + bad.front().message);
  return pd;
}

}  // namespace skein
