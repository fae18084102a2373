#include "skein/kauffman.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <set>
#include <sstream>
#include <thread>

namespace skein {

LaurentPoly bracket_delta() {
  LaurentPoly d("A");
  d.set_coeff(4, -1);
  d.set_coeff(-4, -1);
  return d;
}

Int catalan(int n) {
  if (n < 0 || n > 30) throw std::invalid_argument("catalan: n out of range");
  static std::vector<Int> cache{1};
  while (static_cast<int>(cache.size()) <= n) {
    int m = static_cast<int>(cache.size());
    Int s = 0;
    for (int k = 0; k < m; ++k) s += cache[k] * cache[m - 1 - k];
    cache.push_back(s);
  }
  return cache[n];
}

bool region_worth(int k_crossings, int n_strands) {
  if (n_strands < 0) throw std::invalid_argument("region_worth: negative strand count");
  if (k_crossings >= 64) return true;
  Int states = Int(1) << k_crossings;
  return states > catalan(n_strands);
}

// ---------------------------------------------------------------------------
// Naive state sum

namespace {

int threads_from_env() {
  if (const char* env = std::getenv("SKEIN_THREADS")) {
    int n = std::atoi(env);
    if (n > 0) return n;
  }
  return 1;
}

// Accumulates counts per (A-count, loop count); the polynomial is assembled
// once at the end, which keeps the hot loop free of bignum work.
using StateCounts = std::map<std::pair<int, int>, Int>;

StateCounts enumerate_states(const PlanarDiagram& pd, uint64_t begin, uint64_t end) {
  const int c = pd.crossing_count();
  StateCounts counts;
  for (uint64_t bits = begin; bits < end; ++bits) {
    int b_count = static_cast<int>(__builtin_popcountll(bits));
    int loops = count_loops(pd, bits);
    counts[{c - 2 * b_count, loops}] += 1;
  }
  return counts;
}

}  // namespace

LaurentPoly bracket_naive(const PlanarDiagram& pd, int crossing_cap, int threads) {
  auto bad = validate(pd);
  if (!bad.empty()) throw std::invalid_argument("bracket_naive: " + bad.front().message);
  const int c = pd.crossing_count();
  if (c > crossing_cap) {
    std::ostringstream os;
    os << "bracket_naive: " << c << " crossings exceeds cap " << crossing_cap
       << "; use bracket_gathered";
    throw bracket_cap_error(os.str());
  }
  if (c == 0) {
    if (pd.free_loops == 0)
      throw std::invalid_argument("bracket_naive: empty diagram has no bracket");
    return bracket_delta().pow(static_cast<unsigned>(pd.free_loops - 1));
  }

  if (threads <= 0) threads = threads_from_env();
  const uint64_t total = uint64_t{1} << c;
  StateCounts counts;
  if (threads <= 1 || total < (uint64_t{1} << 16)) {
    counts = enumerate_states(pd, 0, total);
  } else {
    unsigned n = std::min<unsigned>(threads, std::thread::hardware_concurrency());
    if (n < 2) n = 2;
    std::vector<StateCounts> parts(n);
    std::vector<std::thread> pool;
    uint64_t chunk = total / n;
    for (unsigned t = 0; t < n; ++t) {
      uint64_t lo = t * chunk;
      uint64_t hi = (t + 1 == n) ? total : lo + chunk;
      pool.emplace_back([&, t, lo, hi] { parts[t] = enumerate_states(pd, lo, hi); });
    }
    for (auto& th : pool) th.join();
    for (const auto& p : parts)
      for (const auto& [key, n_states] : p) counts[key] += n_states;
  }

  LaurentPoly delta = bracket_delta();
  std::map<int, LaurentPoly> delta_pow;
  LaurentPoly result = LaurentPoly::zero("A");
  for (const auto& [key, n_states] : counts) {
    auto [net_a, loops] = key;
    auto it = delta_pow.find(loops - 1);
    if (it == delta_pow.end())
      it = delta_pow.emplace(loops - 1, delta.pow(static_cast<unsigned>(loops - 1))).first;
    result += it->second.shifted(2 * net_a, n_states);
  }
  return result;
}

// ---------------------------------------------------------------------------
// Region resolution and tangle contraction

Tangle resolve_region(const PlanarDiagram& pd, const Region& region) {
  const int k = static_cast<int>(region.crossings.size());
  if (k > 24) throw bracket_cap_error("resolve_region: region too large");
  std::set<int> in_region(region.crossings.begin(), region.crossings.end());
  if (static_cast<int>(in_region.size()) != k)
    throw std::invalid_argument("resolve_region: duplicate crossing in region");

  // Slots local to the region: 4 per crossing, in the order listed.
  // Each arc appears on 1 slot (boundary) or 2 slots (internal).
  std::map<int, std::vector<int>> arc_to_local;
  for (int r = 0; r < k; ++r) {
    const auto& x = pd.crossings[region.crossings[r]];
    for (int pos = 0; pos < 4; ++pos) arc_to_local[x.arc[pos]].push_back(4 * r + pos);
  }
  std::vector<int> boundary;
  std::vector<int> arc_partner(4 * k, -1);  // internal connections
  std::vector<int> slot_arc(4 * k);
  for (const auto& [arc, sl] : arc_to_local) {
    for (int s : sl) slot_arc[s] = arc;
    if (sl.size() == 1) {
      boundary.push_back(arc);
    } else if (sl.size() == 2) {
      arc_partner[sl[0]] = sl[1];
      arc_partner[sl[1]] = sl[0];
    } else {
      throw std::invalid_argument("resolve_region: arc used more than twice");
    }
  }

  Tangle t;
  t.boundary = boundary;
  LaurentPoly delta = bracket_delta();
  std::map<int, LaurentPoly> delta_pow{{0, LaurentPoly::unit("A")}};

  std::vector<int> sm_partner(4 * k);
  const uint64_t total = uint64_t{1} << k;
  std::map<std::vector<std::pair<int, int>>, std::map<std::pair<int, int>, Int>> gathered;
  for (uint64_t bits = 0; bits < total; ++bits) {
    for (int r = 0; r < k; ++r) {
      if (!((bits >> r) & 1)) {
        sm_partner[4 * r + 0] = 4 * r + 1;
        sm_partner[4 * r + 1] = 4 * r + 0;
        sm_partner[4 * r + 2] = 4 * r + 3;
        sm_partner[4 * r + 3] = 4 * r + 2;
      } else {
        sm_partner[4 * r + 0] = 4 * r + 3;
        sm_partner[4 * r + 3] = 4 * r + 0;
        sm_partner[4 * r + 1] = 4 * r + 2;
        sm_partner[4 * r + 2] = 4 * r + 1;
      }
    }
    // Trace boundary-to-boundary paths and closed internal loops.
    std::vector<char> seen(4 * k, 0);
    std::vector<std::pair<int, int>> pairing;
    for (int s0 = 0; s0 < 4 * k; ++s0) {
      if (seen[s0] || arc_partner[s0] != -1) continue;  // boundary slots only
      // walk: smoothing edge, then internal arc edge, until another boundary slot
      int s = s0;
      seen[s] = 1;
      int cur = sm_partner[s];
      while (arc_partner[cur] != -1) {
        seen[cur] = 1;
        cur = arc_partner[cur];
        seen[cur] = 1;
        cur = sm_partner[cur];
      }
      seen[cur] = 1;
      int a = slot_arc[s0], b = slot_arc[cur];
      pairing.emplace_back(std::min(a, b), std::max(a, b));
    }
    int loops = 0;
    for (int s0 = 0; s0 < 4 * k; ++s0) {
      if (seen[s0]) continue;
      ++loops;
      int s = s0;
      while (!seen[s]) {
        seen[s] = 1;
        int u = sm_partner[s];
        seen[u] = 1;
        s = arc_partner[u];
      }
    }
    std::sort(pairing.begin(), pairing.end());
    int b_count = static_cast<int>(__builtin_popcountll(bits));
    gathered[pairing][{k - 2 * b_count, loops}] += 1;
  }

  for (const auto& [pairing, counts] : gathered) {
    LaurentPoly coeff = LaurentPoly::zero("A");
    for (const auto& [key, n_states] : counts) {
      auto [net_a, loops] = key;
      auto it = delta_pow.find(loops);
      if (it == delta_pow.end())
        it = delta_pow.emplace(loops, delta.pow(static_cast<unsigned>(loops))).first;
      coeff += it->second.shifted(2 * net_a, n_states);
    }
    if (!coeff.is_zero()) t.matchings[pairing] = coeff;
  }
  // Planarity bound check: at most Catalan(n) distinct pairings.
  if (Int(static_cast<long>(t.matchings.size())) > catalan(static_cast<int>(boundary.size() / 2)))
    throw std::logic_error("resolve_region: matching count exceeds Catalan bound");
  return t;
}

Tangle merge_tangles(const Tangle& a, const Tangle& b) {
  // Arcs present in both boundaries get glued.
  std::set<int> ba(a.boundary.begin(), a.boundary.end());
  std::vector<int> glue;
  for (int arc : b.boundary)
    if (ba.count(arc)) glue.push_back(arc);
  std::set<int> glue_set(glue.begin(), glue.end());

  Tangle out;
  for (int arc : a.boundary)
    if (!glue_set.count(arc)) out.boundary.push_back(arc);
  for (int arc : b.boundary)
    if (!glue_set.count(arc)) out.boundary.push_back(arc);
  std::sort(out.boundary.begin(), out.boundary.end());

  LaurentPoly delta = bracket_delta();
  for (const auto& [m1, c1] : a.matchings) {
    for (const auto& [m2, c2] : b.matchings) {
      // Walk the union of the two pairings through the glued arcs.
      std::map<int, std::vector<std::pair<int, int>>> adj;  // arc -> (pair side, index)
      auto add_edges = [&](const std::vector<std::pair<int, int>>& m, int side) {
        for (int i = 0; i < static_cast<int>(m.size()); ++i) {
          adj[m[i].first].push_back({side, i});
          adj[m[i].second].push_back({side, i});
        }
      };
      add_edges(m1, 0);
      add_edges(m2, 1);

      std::set<std::pair<int, int>> used;  // (side, index)
      std::vector<std::pair<int, int>> pairing;
      int loops = 0;
      auto other_end = [&](int side, int idx, int arc) {
        const auto& p = side == 0 ? m1[idx] : m2[idx];
        return p.first == arc ? p.second : p.first;
      };
      // paths starting at open (non-glued) arcs
      for (const auto& [arc, edges] : adj) {
        if (glue_set.count(arc)) continue;
        for (auto e : edges) {
          if (used.count(e)) continue;
          int cur = arc;
          auto edge = e;
          while (true) {
            used.insert(edge);
            int nxt = other_end(edge.first, edge.second, cur);
            if (!glue_set.count(nxt)) {
              pairing.emplace_back(std::min(arc, nxt), std::max(arc, nxt));
              break;
            }
            // continue through the glued arc on the other side's edge
            std::pair<int, int> next_edge{-1, -1};
            for (auto cand : adj[nxt])
              if (!used.count(cand) && cand != edge) next_edge = cand;
            if (next_edge.first < 0) throw std::logic_error("merge_tangles: broken glue chain");
            cur = nxt;
            edge = next_edge;
          }
        }
      }
      // remaining edges form closed loops through glued arcs
      for (const auto& [arc, edges] : adj) {
        for (auto e : edges) {
          if (used.count(e)) continue;
          ++loops;
          int cur = arc;
          auto edge = e;
          while (!used.count(edge)) {
            used.insert(edge);
            int nxt = other_end(edge.first, edge.second, cur);
            std::pair<int, int> next_edge{-1, -1};
            for (auto cand : adj[nxt])
              if (!used.count(cand)) next_edge = cand;
            if (next_edge.first < 0) break;  // loop closed
            cur = nxt;
            edge = next_edge;
          }
        }
      }
      std::sort(pairing.begin(), pairing.end());
      LaurentPoly coeff = c1 * c2;
      for (int i = 0; i < loops; ++i) coeff *= delta;
      auto it = out.matchings.find(pairing);
      if (it == out.matchings.end())
        out.matchings.emplace(pairing, coeff);
      else {
        it->second += coeff;
        if (it->second.is_zero()) out.matchings.erase(it);
      }
    }
  }
  if (!out.boundary.empty() &&
      Int(static_cast<long>(out.matchings.size())) >
          catalan(static_cast<int>(out.boundary.size() / 2)))
    throw std::logic_error("merge_tangles: matching count exceeds Catalan bound");
  return out;
}

RegionPlan plan_regions(const PlanarDiagram& pd) {
  const int c = pd.crossing_count();
  RegionPlan plan;
  if (c == 0) return plan;

  // crossing adjacency via shared arcs
  std::map<int, std::vector<int>> arc_cross;
  for (int i = 0; i < c; ++i)
    for (int k = 0; k < 4; ++k) arc_cross[pd.crossings[i].arc[k]].push_back(i);

  // An arc with exactly one of its two slots inside the region crosses its
  // boundary curve once.
  auto boundary_size = [&](const std::set<int>& region) {
    std::map<int, int> inside;
    for (int i : region)
      for (int k = 0; k < 4; ++k) ++inside[pd.crossings[i].arc[k]];
    int b = 0;
    for (const auto& [arc, count] : inside)
      if (count == 1) ++b;
    return b;
  };

  std::vector<char> used(c, 0);
  const int kMaxStrands = 8;
  for (int seed = 0; seed < c; ++seed) {
    if (used[seed]) continue;
    std::set<int> region{seed};
    while (true) {
      int b = boundary_size(region);
      int k = static_cast<int>(region.size());
      // candidates: unused crossings sharing an arc with the region
      std::set<int> cands;
      for (int i : region)
        for (int kk = 0; kk < 4; ++kk)
          for (int j : arc_cross[pd.crossings[i].arc[kk]])
            if (!used[j] && !region.count(j)) cands.insert(j);
      if (cands.empty()) break;
      int best = -1, best_b = 1 << 30;
      for (int cand : cands) {
        auto trial = region;
        trial.insert(cand);
        int nb = boundary_size(trial);
        if (nb < best_b) {
          best_b = nb;
          best = cand;
        }
      }
      bool worth = region_worth(k, b / 2);
      if (worth && best_b >= b) break;              // gathering pays off now
      if (best_b / 2 > kMaxStrands && k >= 1) break;  // keep tangles small
      region.insert(best);
    }
    Region r;
    r.crossings.assign(region.begin(), region.end());
    for (int i : r.crossings) used[i] = 1;
    plan.regions.push_back(std::move(r));
  }
  return plan;
}

LaurentPoly bracket_gathered(const PlanarDiagram& pd, const RegionPlan& plan) {
  auto bad = validate(pd);
  if (!bad.empty()) throw std::invalid_argument("bracket_gathered: " + bad.front().message);
  if (pd.empty()) {
    if (pd.free_loops == 0)
      throw std::invalid_argument("bracket_gathered: empty diagram has no bracket");
    return bracket_delta().pow(static_cast<unsigned>(pd.free_loops - 1));
  }
  // Plan must partition the crossings.
  std::set<int> covered;
  for (const auto& r : plan.regions)
    for (int i : r.crossings) {
      if (i < 0 || i >= pd.crossing_count() || covered.count(i))
        throw std::invalid_argument("bracket_gathered: plan does not partition crossings");
      covered.insert(i);
    }
  if (static_cast<int>(covered.size()) != pd.crossing_count())
    throw std::invalid_argument("bracket_gathered: plan does not cover all crossings");

  Tangle acc;
  acc.matchings[{}] = LaurentPoly::unit("A");
  for (const auto& r : plan.regions) acc = merge_tangles(acc, resolve_region(pd, r));

  if (!acc.boundary.empty()) throw std::logic_error("bracket_gathered: boundary not closed");
  LaurentPoly total = LaurentPoly::zero("A");
  auto it = acc.matchings.find({});
  if (it != acc.matchings.end()) total = it->second;
  // Free loops contribute one delta each; normalization is delta^{loops-1}.
  LaurentPoly delta = bracket_delta();
  for (int i = 0; i < pd.free_loops; ++i) total *= delta;
  return total.div_exact(delta);
}

LaurentPoly bracket_gathered(const PlanarDiagram& pd) {
  return bracket_gathered(pd, plan_regions(pd));
}

LaurentPoly bracket_auto(const PlanarDiagram& pd) {
  if (pd.crossing_count() <= 16) return bracket_naive(pd, 16);
  return bracket_gathered(pd);
}

}  // namespace skein
