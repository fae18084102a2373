#include "skein/linkgraph.hpp"

#include <json.hpp>

#include <algorithm>
#include <functional>
#include <regex>
#include <sstream>
#include <stdexcept>

namespace skein {

std::vector<int> LinkGraph::incident_edges(int v) const {
  std::vector<int> out;
  for (int i = 0; i < static_cast<int>(edges.size()); ++i)
    if (edges[i].u == v || edges[i].v == v) out.push_back(i);
  return out;
}

int LinkGraph::valency(int v) const {
  int n = 0;
  for (const auto& e : edges) {
    if (e.u == v) ++n;
    if (e.v == v) ++n;  // a self-loop counts twice
  }
  return n;
}

std::set<int> LinkGraph::colours_at(int v) const {
  std::set<int> out;
  for (const auto& e : edges)
    if (e.u == v || e.v == v) out.insert(e.colour);
  return out;
}

std::set<int> LinkGraph::colours() const {
  std::set<int> out;
  for (const auto& e : edges) out.insert(e.colour);
  return out;
}

namespace {

bool vertex_exists(const LinkGraph& g, int v) {
  return std::find(g.vertices.begin(), g.vertices.end(), v) != g.vertices.end();
}

// Connected components of a single colour's subgraph; used for the tree axiom
// and the leaf partition.
struct ColourSub {
  std::set<int> verts;
  std::vector<int> edge_ids;
};

ColourSub colour_subgraph(const LinkGraph& g, int colour) {
  ColourSub s;
  for (int i = 0; i < static_cast<int>(g.edges.size()); ++i) {
    if (g.edges[i].colour != colour) continue;
    s.edge_ids.push_back(i);
    s.verts.insert(g.edges[i].u);
    s.verts.insert(g.edges[i].v);
  }
  return s;
}

}  // namespace

std::vector<GraphViolation> validate_graph(const LinkGraph& g) {
  std::vector<GraphViolation> out;
  for (const auto& e : g.edges) {
    if (!vertex_exists(g, e.u) || !vertex_exists(g, e.v))
      out.push_back({0, "edge endpoint not in vertex list"});
    if (e.u == e.v)
      out.push_back({0, "self-attachment loops are not modeled"});
  }
  for (int v : g.vertices) {
    int val = g.valency(v);
    if (val > 3) {
      std::ostringstream os;
      os << "vertex " << v << " has valency " << val;
      out.push_back({1, os.str()});
    }
    auto cols = g.colours_at(v);
    if (val == 2 && cols.size() != 1) {
      std::ostringstream os;
      os << "binary vertex " << v << " is not monochrome";
      out.push_back({3, os.str()});
    }
    if (cols.size() > 2) {
      std::ostringstream os;
      os << "vertex " << v << " meets " << cols.size() << " colours";
      out.push_back({4, os.str()});
    }
  }
  // Axiom 2: each maximal monochrome subgraph is a forest of trees.
  for (int colour : g.colours()) {
    auto sub = colour_subgraph(g, colour);
    // cycle check via union-find
    std::map<int, int> parent;
    std::function<int(int)> find = [&](int a) {
      if (parent[a] == a) return a;
      return parent[a] = find(parent[a]);
    };
    for (int v : sub.verts) parent[v] = v;
    for (int id : sub.edge_ids) {
      int ru = find(g.edges[id].u), rv = find(g.edges[id].v);
      if (ru == rv) {
        std::ostringstream os;
        os << "colour " << colour << " contains a cycle";
        out.push_back({2, os.str()});
        break;
      }
      parent[ru] = rv;
    }
  }
  return out;
}

bool is_valid_graph(const LinkGraph& g) { return validate_graph(g).empty(); }

// ---------------------------------------------------------------------------
// Unravelling moves

namespace {

// Move 1: remove a binary (necessarily monochrome) vertex, merging its edges.
// Move 2: remove a unary vertex whose neighbour is monochrome.
// Move 3: a unary vertex attached by the doubled colour of a bichrome
//         ternary vertex detaches both: the vertex splits into two leaves.
bool reduce_step(LinkGraph& g) {
  for (int v : g.vertices) {
    auto inc = g.incident_edges(v);
    if (inc.size() == 2) {
      const auto e1 = g.edges[inc[0]];
      const auto e2 = g.edges[inc[1]];
      int a = e1.u == v ? e1.v : e1.u;
      int b = e2.u == v ? e2.v : e2.u;
      LinkGraph h;
      h.vertices = g.vertices;
      h.vertices.erase(std::remove(h.vertices.begin(), h.vertices.end(), v), h.vertices.end());
      for (int i = 0; i < static_cast<int>(g.edges.size()); ++i)
        if (i != inc[0] && i != inc[1]) h.edges.push_back(g.edges[i]);
      h.edges.push_back({a, b, e1.colour});
      g = std::move(h);
      return true;
    }
  }
  for (int v : g.vertices) {
    auto inc = g.incident_edges(v);
    if (inc.size() != 1) continue;
    const auto e = g.edges[inc[0]];
    int u = e.u == v ? e.v : e.u;
    auto cols = g.colours_at(u);
    if (cols.size() == 1 && g.valency(u) >= 2) {
      // move 2: drop the leaf and its edge
      LinkGraph h;
      h.vertices = g.vertices;
      h.vertices.erase(std::remove(h.vertices.begin(), h.vertices.end(), v), h.vertices.end());
      for (int i = 0; i < static_cast<int>(g.edges.size()); ++i)
        if (i != inc[0]) h.edges.push_back(g.edges[i]);
      g = std::move(h);
      return true;
    }
    if (cols.size() == 2 && g.valency(u) == 3) {
      // doubled colour at u
      std::map<int, int> count;
      for (int id : g.incident_edges(u)) ++count[g.edges[id].colour];
      int doubled = count.begin()->second == 2 ? count.begin()->first : std::next(count.begin())->first;
      if (e.colour != doubled) continue;  // hooked through the odd colour: stuck
      // move 3: delete v and its edge; split u into two fresh leaves
      int fresh1 = *std::max_element(g.vertices.begin(), g.vertices.end()) + 1;
      int fresh2 = fresh1 + 1;
      LinkGraph h;
      for (int w : g.vertices)
        if (w != v && w != u) h.vertices.push_back(w);
      h.vertices.push_back(fresh1);
      h.vertices.push_back(fresh2);
      for (int i = 0; i < static_cast<int>(g.edges.size()); ++i) {
        if (i == inc[0]) continue;
        auto ed = g.edges[i];
        if (ed.u == u || ed.v == u) {
          int& end = ed.u == u ? ed.u : ed.v;
          end = (ed.colour == doubled) ? fresh1 : fresh2;
        }
        h.edges.push_back(ed);
      }
      g = std::move(h);
      return true;
    }
  }
  return false;
}

}  // namespace

LinkGraph reduce(const LinkGraph& g) {
  LinkGraph out = g;
  while (reduce_step(out)) {
  }
  return out;
}

bool is_unlinked(const LinkGraph& g) {
  LinkGraph r = reduce(g);
  // Every component must be a single monochrome edge: equivalently every
  // vertex is univalent and no vertex meets two colours.
  for (int v : r.vertices)
    if (r.valency(v) != 1) return false;
  return true;
}

std::set<int> m_vertices(const LinkGraph& g) {
  std::set<int> out;
  for (int v : g.vertices) {
    int val = g.valency(v);
    if (val == 1) out.insert(v);
    if (val == 3 && g.colours_at(v).size() == 2) out.insert(v);
  }
  return out;
}

std::pair<std::set<int>, std::set<int>> leaf_partition(const LinkGraph& g, int v) {
  if (g.valency(v) != 3 || g.colours_at(v).size() != 2)
    throw std::invalid_argument("leaf_partition: vertex must be bichrome trivalent");
  std::map<int, int> count;
  for (int id : g.incident_edges(v)) ++count[g.edges[id].colour];
  int doubled = -1;
  for (auto [colour, n] : count)
    if (n == 2) doubled = colour;
  if (doubled < 0) throw std::logic_error("leaf_partition: no doubled colour");

  auto sub = colour_subgraph(g, doubled);
  // Flood the tree from each of v's two doubled-colour edges separately.
  std::vector<int> seeds;
  for (int id : sub.edge_ids)
    if (g.edges[id].u == v || g.edges[id].v == v)
      seeds.push_back(g.edges[id].u == v ? g.edges[id].v : g.edges[id].u);
  if (seeds.size() != 2) throw std::logic_error("leaf_partition: expected two tree edges");

  auto flood = [&](int start) {
    std::set<int> seen{start};
    std::vector<int> stack{start};
    while (!stack.empty()) {
      int cur = stack.back();
      stack.pop_back();
      for (int id : sub.edge_ids) {
        const auto& e = g.edges[id];
        if (e.u != cur && e.v != cur) continue;
        int nxt = e.u == cur ? e.v : e.u;
        if (nxt == v || seen.count(nxt)) continue;
        seen.insert(nxt);
        stack.push_back(nxt);
      }
    }
    return seen;
  };
  auto side_plus = flood(seeds[0]);
  auto side_minus = flood(seeds[1]);

  // Leaves of the doubled-colour tree, split by side.
  std::set<int> l_plus, l_minus;
  for (int w : sub.verts) {
    if (w == v) continue;
    int deg = 0;
    for (int id : sub.edge_ids)
      if (g.edges[id].u == w || g.edges[id].v == w) ++deg;
    if (deg != 1) continue;
    if (side_plus.count(w)) l_plus.insert(w);
    else if (side_minus.count(w)) l_minus.insert(w);
  }
  return {l_plus, l_minus};
}

std::set<int> closure(const LinkGraph& g, const std::set<int>& S) {
  auto mg = m_vertices(g);
  for (int v : S)
    if (!mg.count(v)) throw std::invalid_argument("closure: set not contained in M_G");
  std::set<int> R = S;
  for (int v : mg)
    if (g.valency(v) == 1) R.insert(v);

  bool changed = true;
  while (changed) {
    changed = false;
    for (int v : mg) {
      if (R.count(v) || g.valency(v) != 3) continue;
      auto [lp, lm] = leaf_partition(g, v);
      auto contained = [&](const std::set<int>& side) {
        for (int w : side)
          if (!R.count(w)) return false;
        return true;
      };
      if (contained(lp) || contained(lm)) {
        R.insert(v);
        changed = true;
      }
    }
  }
  return R;
}

bool is_initial(const LinkGraph& g, const std::set<int>& S) {
  return closure(g, S) == m_vertices(g);
}

std::set<int> colour_endpoints(const LinkGraph& g, int colour) {
  std::set<int> out;
  for (int v : g.vertices) {
    int n = 0;
    for (const auto& e : g.edges)
      if (e.colour == colour && (e.u == v || e.v == v)) ++n;
    if (n == 1) out.insert(v);
  }
  return out;
}

BrunnianReport brunnian_report(const LinkGraph& g, int max_set_size, int exhaustive_limit) {
  BrunnianReport rep;
  rep.is_brunnian = true;
  for (int colour : g.colours()) {
    bool ok = is_initial(g, colour_endpoints(g, colour));
    rep.colour_verdicts[colour] = ok;
    if (!ok) rep.is_brunnian = false;
  }
  auto mg = m_vertices(g);
  rep.is_strongly_brunnian = true;
  for (int v : mg)
    if (!is_initial(g, {v})) rep.is_strongly_brunnian = false;

  if (static_cast<int>(mg.size()) > exhaustive_limit) {
    rep.search_complete = false;
    return rep;
  }
  // exhaustive search for inclusion-minimal initial sets, by size
  std::vector<int> verts(mg.begin(), mg.end());
  std::vector<std::set<int>> found;
  std::function<void(size_t, size_t, std::vector<int>&)> visit = [&](size_t start, size_t want,
                                                                     std::vector<int>& cur) {
    if (cur.size() == want) {
      std::set<int> s(cur.begin(), cur.end());
      for (const auto& smaller : found) {
        if (std::includes(s.begin(), s.end(), smaller.begin(), smaller.end())) return;
      }
      if (is_initial(g, s)) found.push_back(s);
      return;
    }
    for (size_t i = start; i < verts.size(); ++i) {
      cur.push_back(verts[i]);
      visit(i + 1, want, cur);
      cur.pop_back();
    }
  };
  for (int size = 0; size <= max_set_size && size <= static_cast<int>(verts.size()); ++size) {
    std::vector<int> cur;
    visit(0, static_cast<size_t>(size), cur);
  }
  rep.minimal_initial_sets = std::move(found);
  if (max_set_size < static_cast<int>(verts.size())) rep.search_complete = false;
  return rep;
}

// ---------------------------------------------------------------------------
// Input formats

using nlohmann::json;

LinkGraph graph_from_json(const std::string& text) {
  json j = json::parse(text);
  LinkGraph g;
  std::map<std::string, int> colour_ids;
  auto colour_id = [&](const json& c) -> int {
    if (c.is_number_integer()) return c.get<int>();
    std::string name = c.get<std::string>();
    auto it = colour_ids.find(name);
    if (it != colour_ids.end()) return it->second;
    int id = static_cast<int>(colour_ids.size());
    colour_ids[name] = id;
    return id;
  };
  for (const auto& v : j.at("vertices")) g.vertices.push_back(v.get<int>());
  for (const auto& e : j.at("edges"))
    g.edges.push_back({e.at("u").get<int>(), e.at("v").get<int>(), colour_id(e.at("colour"))});
  auto bad = validate_graph(g);
  if (!bad.empty()) throw std::invalid_argument("invalid link graph: " + bad.front().message);
  return g;
}

std::string graph_to_json(const LinkGraph& g) {
  json j;
  j["vertices"] = g.vertices;
  j["edges"] = json::array();
  for (const auto& e : g.edges) j["edges"].push_back({{"u", e.u}, {"v", e.v}, {"colour", e.colour}});
  return j.dump();
}

LinkGraph graph_from_dot(const std::string& text) {
  LinkGraph g;
  std::map<std::string, int> colour_ids;
  std::set<int> verts;
  static const std::regex edge_re(
      R"((\d+)\s*--\s*(\d+)\s*(?:\[\s*color\s*=\s*\"?([A-Za-z0-9_]+)\"?\s*\])?\s*;?)");
  for (auto it = std::sregex_iterator(text.begin(), text.end(), edge_re);
       it != std::sregex_iterator(); ++it) {
    int u = std::stoi((*it)[1].str());
    int v = std::stoi((*it)[2].str());
    std::string colour = (*it)[3].matched ? (*it)[3].str() : "black";
    auto cit = colour_ids.find(colour);
    int cid;
    if (cit == colour_ids.end()) {
      cid = static_cast<int>(colour_ids.size());
      colour_ids[colour] = cid;
    } else {
      cid = cit->second;
    }
    g.edges.push_back({u, v, cid});
    verts.insert(u);
    verts.insert(v);
  }
  g.vertices.assign(verts.begin(), verts.end());
  auto bad = validate_graph(g);
  if (!bad.empty()) throw std::invalid_argument("invalid link graph: " + bad.front().message);
  return g;
}

}  // namespace skein
