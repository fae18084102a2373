#include "skein/homfly.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace skein {

LaurentPoly2 homfly_delta() {
  // -(l + l^{-1}) m^{-1}
  return LaurentPoly2::monomial(2, -2, Gauss(Int(-1))) +
         LaurentPoly2::monomial(-2, -2, Gauss(Int(-1)));
}

OrientedDiagram switch_crossing(const OrientedDiagram& od, int index) {
  OrientedDiagram out = od;
  auto& x = out.pd.crossings[index];
  x.arc = {x.arc[1], x.arc[2], x.arc[3], x.arc[0]};
  auto& o = out.orient[index];
  uint8_t new_over = (o.under_in + 3) % 4;
  uint8_t new_under = (o.over_in + 3) % 4;
  o.over_in = new_over;
  o.under_in = new_under;
  return out;
}

OrientedDiagram smooth_crossing(const OrientedDiagram& od, int index) {
  const auto& x = od.pd.crossings[index];
  const auto& o = od.orient[index];
  // in -> out respecting directions: over_in joins under_out, under_in joins over_out
  std::vector<std::pair<int, int>> splices = {
      {x.arc[o.over_in], x.arc[(o.under_in + 2) % 4]},
      {x.arc[o.under_in], x.arc[(o.over_in + 2) % 4]},
  };
  OrientedDiagram out = od;
  out.pd = remove_and_splice(od.pd, {index}, splices, &out.orient);
  return out;
}

namespace {

// Deterministic canonical key: dense labels, lexicographically sorted
// crossing records with their orientation flags.
std::string memo_key(const OrientedDiagram& od) {
  std::map<int, int> relabel;
  for (const auto& x : od.pd.crossings)
    for (int k = 0; k < 4; ++k) relabel.emplace(x.arc[k], 0);
  int next = 0;
  for (auto& [a, r] : relabel) r = next++;
  std::vector<std::array<int, 6>> rows;
  for (size_t i = 0; i < od.pd.crossings.size(); ++i) {
    const auto& x = od.pd.crossings[i];
    rows.push_back({relabel[x.arc[0]], relabel[x.arc[1]], relabel[x.arc[2]], relabel[x.arc[3]],
                    od.orient[i].over_in, od.orient[i].under_in});
  }
  std::sort(rows.begin(), rows.end());
  std::ostringstream os;
  os << od.pd.free_loops << ";";
  for (const auto& r : rows) {
    for (int v : r) os << v << ",";
    os << "|";
  }
  return os.str();
}

// Splits an oriented diagram into connected pieces, flags carried along.
std::vector<OrientedDiagram> split_oriented(const OrientedDiagram& od) {
  std::vector<OrientedDiagram> out;
  const int c = od.pd.crossing_count();
  std::map<int, int> arc_first;
  std::vector<int> group(c, -1);
  // union-find over crossings
  std::vector<int> parent(c);
  for (int i = 0; i < c; ++i) parent[i] = i;
  std::function<int(int)> find = [&](int a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };
  for (int i = 0; i < c; ++i)
    for (int k = 0; k < 4; ++k) {
      int a = od.pd.crossings[i].arc[k];
      auto it = arc_first.find(a);
      if (it == arc_first.end())
        arc_first[a] = i;
      else
        parent[find(i)] = find(it->second);
    }
  std::map<int, int> root_idx;
  for (int i = 0; i < c; ++i) {
    int r = find(i);
    auto it = root_idx.find(r);
    if (it == root_idx.end()) {
      root_idx[r] = static_cast<int>(out.size());
      out.push_back(OrientedDiagram{});
    }
    auto& piece = out[root_idx[r]];
    piece.pd.crossings.push_back(od.pd.crossings[i]);
    piece.orient.push_back(od.orient[i]);
  }
  return out;
}

struct HomflyContext {
  std::map<std::string, LaurentPoly2> memo;
  LaurentPoly2 dh = homfly_delta();
};

LaurentPoly2 homfly_rec(OrientedDiagram od, HomflyContext& ctx);

// P of a disjoint union: dh^{pieces-1} times the product over pieces.
LaurentPoly2 homfly_split(const OrientedDiagram& od, HomflyContext& ctx) {
  auto pieces = split_oriented(od);
  int total_pieces = static_cast<int>(pieces.size()) + od.pd.free_loops;
  LaurentPoly2 result = ctx.dh.pow(static_cast<unsigned>(total_pieces - 1));
  for (auto& piece : pieces) result = result * homfly_rec(std::move(piece), ctx);
  return result;
}

LaurentPoly2 homfly_rec(OrientedDiagram od, HomflyContext& ctx) {
  od = simplify_oriented(od);
  if (od.pd.empty()) {
    if (od.pd.free_loops == 0)
      throw std::invalid_argument("homfly: empty diagram has no invariant");
    return ctx.dh.pow(static_cast<unsigned>(od.pd.free_loops - 1));
  }
  if (od.pd.free_loops > 0 || split_disjoint(od.pd).size() > 1) return homfly_split(od, ctx);

  std::string key = memo_key(od);
  auto hit = ctx.memo.find(key);
  if (hit != ctx.memo.end()) return hit->second;

  // Traverse components in order from their basepoints; the first crossing
  // met on its under-strand is the branch point.
  const int c = od.pd.crossing_count();
  std::map<int, std::vector<int>> slots;
  for (int i = 0; i < c; ++i)
    for (int k = 0; k < 4; ++k) slots[od.pd.crossings[i].arc[k]].push_back(4 * i + k);
  std::map<int, int> to_slot;
  for (int i = 0; i < c; ++i) {
    const auto& o = od.orient[i];
    to_slot[od.pd.crossings[i].arc[o.over_in]] = 4 * i + o.over_in;
    to_slot[od.pd.crossings[i].arc[o.under_in]] = 4 * i + o.under_in;
  }

  int bad_crossing = -1;
  int n_components = 0;
  {
    std::set<int> arc_seen;
    std::vector<char> crossing_seen(c, 0);
    for (const auto& [a0, sl] : slots) {
      if (arc_seen.count(a0)) continue;
      ++n_components;
      int arc = a0;
      while (!arc_seen.count(arc)) {
        arc_seen.insert(arc);
        int s = to_slot[arc];
        int cr = s / 4, k = s % 4;
        if (!crossing_seen[cr]) {
          crossing_seen[cr] = 1;
          if (k % 2 == 1 && bad_crossing < 0) bad_crossing = cr;  // met under first
        }
        int exit = (k + 2) % 4;
        int next_arc = od.pd.crossings[cr].arc[exit];
        arc = next_arc;
      }
      if (bad_crossing >= 0) break;
    }
    if (bad_crossing < 0) {
      // Count the remaining components without the early break.
      // (all crossings met over-first: descending, hence an unlink)
      n_components = component_count(od.pd);
    }
  }

  LaurentPoly2 result;
  if (bad_crossing < 0) {
    result = ctx.dh.pow(static_cast<unsigned>(n_components - 1));
  } else {
    int eps = od.sign(bad_crossing);
    LaurentPoly2 p_switch = homfly_rec(switch_crossing(od, bad_crossing), ctx);
    LaurentPoly2 p_smooth = homfly_rec(smooth_crossing(od, bad_crossing), ctx);
    if (eps > 0) {
      // P(L+) = -l^{-2} P(L-) - l^{-1} m P(L0)
      result = LaurentPoly2::monomial(-4, 0, Gauss(Int(-1))) * p_switch +
               LaurentPoly2::monomial(-2, 2, Gauss(Int(-1))) * p_smooth;
    } else {
      result = LaurentPoly2::monomial(4, 0, Gauss(Int(-1))) * p_switch +
               LaurentPoly2::monomial(2, 2, Gauss(Int(-1))) * p_smooth;
    }
  }
  ctx.memo.emplace(std::move(key), result);
  return result;
}

}  // namespace

LaurentPoly2 homfly(const OrientedDiagram& od, int crossing_cap) {
  auto bad = validate(od.pd);
  if (!bad.empty()) throw std::invalid_argument("homfly: " + bad.front().message);
  if (od.orient.size() != od.pd.crossings.size())
    throw std::invalid_argument("homfly: orientation flags missing");
  if (od.pd.crossing_count() > crossing_cap) {
    std::ostringstream os;
    os << "homfly: " << od.pd.crossing_count() << " crossings exceeds cap " << crossing_cap;
    throw homfly_cap_error(os.str());
  }
  HomflyContext ctx;
  return homfly_rec(od, ctx);
}

LaurentPoly jones(const LaurentPoly2& p) {
  GaussPoly l_img = GaussPoly::monomial("q", -2, gauss_i());
  GaussPoly m_img = GaussPoly::monomial("q", -1, gauss_i()) +
                    GaussPoly::monomial("q", 1, Gauss(Int(0), Int(-1)));
  return p.substitute(l_img, m_img);
}

LaurentPoly alexander(const LaurentPoly2& p) {
  GaussPoly l_img = GaussPoly::monomial("t", 0, gauss_i());
  GaussPoly m_img = GaussPoly::monomial("t", 1, gauss_i()) +
                    GaussPoly::monomial("t", -1, Gauss(Int(0), Int(-1)));
  return p.substitute(l_img, m_img);
}

}  // namespace skein
