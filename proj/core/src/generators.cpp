#include "skein/generators.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace skein {

namespace {

// Assembles diagrams from junction templates.  Template boundary ends are
// provisional arc labels; wiring two ends together merges the labels.
class Builder {
 public:
  int fresh() { return next_++; }

  void crossing(int a, int b, int c, int d) { crossings_.push_back({a, b, c, d}); }

  void wire(int a, int b) {
    parent_.emplace(a, a);
    parent_.emplace(b, b);
    int ra = find(a), rb = find(b);
    if (ra != rb) parent_[ra] = rb;
  }

  PlanarDiagram finish(int free_loops = 0) {
    PlanarDiagram pd;
    pd.free_loops = free_loops;
    for (auto& x : crossings_) {
      Crossing c{};
      for (int k = 0; k < 4; ++k) c.arc[k] = find(x[k]);
      pd.crossings.push_back(c);
    }
    return normalize_labels(pd);
  }

 private:
  int find(int a) {
    auto it = parent_.find(a);
    if (it == parent_.end()) return a;
    if (it->second == a) return a;
    int r = find(it->second);
    parent_[a] = r;
    return r;
  }
  std::vector<std::array<int, 4>> crossings_;
  std::map<int, int> parent_;
  int next_ = 0;
};

// Four boundary ends per side.  West ends attach toward the previous
// junction, east ends toward the next.
struct Junction4 {
  std::array<int, 4> west;
  std::array<int, 4> east;
};

struct Junction2 {
  std::array<int, 2> west;  // l_in, l_out
  std::array<int, 2> east;  // r_in, r_out
};

// --- templates --------------------------------------------------------------
// Each template is the crossing pattern of one linkage figure, boundary ends
// listed top to bottom.  Chirality is calibrated against the bracket values
// of the smallest family members (hopf_ring(1), dbl_hopf_ring(2),
// brunnian_half_ring bases).

// Hopf linkage: two hooks clasping; resolving gives coefficients A^2 on the
// split matching and 1 - A^{-4} on the merged one.
Junction2 hopf_junction(Builder& b) {
  int l_in = b.fresh(), l_out = b.fresh(), l_mid = b.fresh();
  int r_in = b.fresh(), r_out = b.fresh(), r_mid = b.fresh();
  b.crossing(r_in, l_mid, r_mid, l_in);
  b.crossing(l_mid, r_out, l_out, r_mid);
  return {{l_in, l_out}, {r_in, r_out}};
}

// Double Hopf linkage: both strands doubled, eight crossings.
// West ends = (outer in, inner in, inner out, outer out); east likewise.
Junction4 dbl_hopf_junction(Builder& b) {
  int e1 = b.fresh(), e2 = b.fresh(), e3 = b.fresh(), e4 = b.fresh();
  int e5 = b.fresh(), e6 = b.fresh(), e7 = b.fresh(), e8 = b.fresh();
  int a1 = b.fresh(), a2 = b.fresh(), a3 = b.fresh();
  int b1 = b.fresh(), b2 = b.fresh(), b3 = b.fresh();
  int c1 = b.fresh(), c2 = b.fresh(), c3 = b.fresh();
  int d1 = b.fresh(), d2 = b.fresh(), d3 = b.fresh();
  b.crossing(a1, c1, e1, e5);
  b.crossing(a2, d1, a1, e6);
  b.crossing(b1, c2, e2, c1);
  b.crossing(b2, d2, b1, d1);
  b.crossing(e7, a3, d3, a2);
  b.crossing(e8, e4, c3, a3);
  b.crossing(d3, b3, d2, b2);
  b.crossing(c3, e3, c2, b3);
  return {{e1, e2, e3, e4}, {e5, e6, e7, e8}};
}

// Brunnian linkage: the eight-crossing junction of the Brunnian figures.
Junction4 brunnian_junction(Builder& b) {
  int E1 = b.fresh(), E2 = b.fresh(), E3 = b.fresh(), E4 = b.fresh();
  int E5 = b.fresh(), E6 = b.fresh(), E7 = b.fresh(), E8 = b.fresh();
  int t1a = b.fresh(), t1b = b.fresh(), t1c = b.fresh();
  int t2a = b.fresh(), t2b = b.fresh(), t2c = b.fresh();
  int t3a = b.fresh(), t3b = b.fresh(), t3c = b.fresh();
  int t4a = b.fresh(), t4b = b.fresh(), t4c = b.fresh();
  b.crossing(E5, t1a, t2a, E1);
  b.crossing(E6, t1b, t3a, t1a);
  b.crossing(t1c, t2b, E2, t2a);
  b.crossing(t4a, t2c, E3, t2b);
  b.crossing(t1b, t3b, t1c, t3a);
  b.crossing(t4b, t3c, t4a, t3b);
  b.crossing(E7, t4c, t3c, t4b);
  b.crossing(E8, E4, t2c, t4c);
  return {{E1, E2, E3, E4}, {E5, E6, E7, E8}};
}

// End-circle clasp at the west end of a chain: a plain circle woven through
// the first long component's two strands.  Hook ends point east, nested.
std::array<int, 4> clasp_west(Builder& b) {
  int W1 = b.fresh(), W2 = b.fresh(), W3 = b.fresh(), W4 = b.fresh();
  int h1m = b.fresh(), h2m = b.fresh();
  int ea = b.fresh(), eb = b.fresh(), ec = b.fresh(), ed = b.fresh();
  b.crossing(W1, eb, h1m, ea);
  b.crossing(W2, ec, h2m, eb);
  b.crossing(ec, W3, ed, h2m);
  b.crossing(ed, W4, ea, h1m);
  return {W1, W2, W3, W4};
}

// End-circle clasp at the east end: the circle traces the course the next
// component's strands would have taken.  Hook ends point west, stacked.
std::array<int, 4> clasp_east(Builder& b) {
  int V1 = b.fresh(), V2 = b.fresh(), V3 = b.fresh(), V4 = b.fresh();
  int u1m = b.fresh(), u2m = b.fresh();
  int ce = b.fresh(), g1 = b.fresh(), g2 = b.fresh(), g3 = b.fresh();
  b.crossing(V1, ce, u1m, g1);
  b.crossing(g1, u1m, g2, V2);
  b.crossing(g2, u2m, g3, V3);
  b.crossing(u2m, ce, V4, g3);
  return {V1, V2, V3, V4};
}

void wire4(Builder& b, const std::array<int, 4>& east, const std::array<int, 4>& west) {
  for (int k = 0; k < 4; ++k) b.wire(east[k], west[k]);
}

// --- families ---------------------------------------------------------------

int size1(const FamilySpec& spec, const char* what) {
  if (spec.sizes.size() != 1)
    throw std::invalid_argument(std::string(what) + ": expected a single size parameter");
  return spec.sizes[0];
}

PlanarDiagram gen_hopf_chain(int n) {
  if (n < 1) throw std::invalid_argument("hopf_chain: n >= 1");
  if (n == 1) return PlanarDiagram{{}, 1};
  Builder b;
  std::vector<Junction2> js;
  for (int i = 0; i + 1 < n; ++i) js.push_back(hopf_junction(b));
  for (size_t i = 0; i + 1 < js.size(); ++i) {
    b.wire(js[i].east[0], js[i + 1].west[0]);
    b.wire(js[i].east[1], js[i + 1].west[1]);
  }
  b.wire(js.front().west[0], js.front().west[1]);
  b.wire(js.back().east[0], js.back().east[1]);
  return b.finish();
}

PlanarDiagram gen_hopf_ring(int n) {
  if (n < 1) throw std::invalid_argument("hopf_ring: n >= 1");
  Builder b;
  std::vector<Junction2> js;
  for (int i = 0; i < n; ++i) js.push_back(hopf_junction(b));
  for (int i = 0; i < n; ++i) {
    const auto& cur = js[i];
    const auto& nxt = js[(i + 1) % n];
    b.wire(cur.east[0], nxt.west[0]);
    b.wire(cur.east[1], nxt.west[1]);
  }
  return b.finish();
}

// Double Hopf chain with n doubled units (2n components).
PlanarDiagram gen_dbl_hopf_chain(int twon) {
  if (twon < 2 || twon % 2 != 0) throw std::invalid_argument("dbl_hopf_chain: even size >= 2");
  int units = twon / 2;
  if (units == 1) return PlanarDiagram{{}, 2};
  Builder b;
  std::vector<Junction4> js;
  for (int i = 0; i + 1 < units; ++i) js.push_back(dbl_hopf_junction(b));
  for (size_t i = 0; i + 1 < js.size(); ++i) wire4(b, js[i].east, js[i + 1].west);
  b.wire(js.front().west[0], js.front().west[3]);
  b.wire(js.front().west[1], js.front().west[2]);
  b.wire(js.back().east[0], js.back().east[3]);
  b.wire(js.back().east[1], js.back().east[2]);
  return b.finish();
}

PlanarDiagram gen_dbl_hopf_ring(int twon) {
  if (twon < 2 || twon % 2 != 0) throw std::invalid_argument("dbl_hopf_ring: even size >= 2");
  int units = twon / 2;
  Builder b;
  std::vector<Junction4> js;
  for (int i = 0; i < units; ++i) js.push_back(dbl_hopf_junction(b));
  for (int i = 0; i < units; ++i) wire4(b, js[i].east, js[(i + 1) % units].west);
  return b.finish();
}

// A ring of `units` junctions with the closing junction replaced by a direct
// splice of its would-be boundary ends; `splice` pairs indices 0..7 where
// 0..3 are the west ends (from unit `units`) and 4..7 the east ends.
template <typename JunctionMaker>
PlanarDiagram gen_ring_spliced(int units, JunctionMaker make,
                               const std::vector<std::pair<int, int>>& splice) {
  Builder b;
  std::vector<Junction4> js;
  for (int i = 0; i + 1 < units; ++i) js.push_back(make(b));
  for (size_t i = 0; i + 1 < js.size(); ++i) wire4(b, js[i].east, js[i + 1].west);
  std::array<int, 8> ends{};
  for (int k = 0; k < 4; ++k) {
    ends[k] = js.back().east[k];   // virtual junction's west side
    ends[4 + k] = js.front().west[k];  // its east side
  }
  for (auto [p, q] : splice) b.wire(ends[p], ends[q]);
  return b.finish();
}

PlanarDiagram gen_dbl_hopf_half_ring(int n) {
  if (n < 3 || n % 2 == 0) throw std::invalid_argument("dbl_hopf_half_ring: odd size >= 3");
  int units = (n + 1) / 2;  // ring of units with one junction spliced
  // Outer strands merge straight through; inner strands cap on each side.
  return gen_ring_spliced(units, dbl_hopf_junction, {{0, 4}, {1, 2}, {3, 7}, {5, 6}});
}

PlanarDiagram gen_brunnian_ring(int n) {
  if (n < 2) throw std::invalid_argument("brunnian_ring: n >= 2");
  Builder b;
  std::vector<Junction4> js;
  for (int i = 0; i < n; ++i) js.push_back(brunnian_junction(b));
  for (int i = 0; i < n; ++i) wire4(b, js[i].east, js[(i + 1) % n].west);
  return b.finish();
}

PlanarDiagram gen_brunnian_half_ring(int n, bool plus) {
  if (n < 3) throw std::invalid_argument("brunnian_half_ring: n >= 3");
  int units = n - 1;
  if (plus)
    return gen_ring_spliced(units, brunnian_junction, {{0, 4}, {1, 2}, {3, 5}, {6, 7}});
  return gen_ring_spliced(units, brunnian_junction, {{0, 6}, {1, 2}, {3, 7}, {4, 5}});
}

PlanarDiagram gen_brunnian_chain(int n) {
  if (n < 2) throw std::invalid_argument("brunnian_chain: n >= 2");
  if (n == 2) {
    Builder b;
    auto j = hopf_junction(b);
    b.wire(j.west[0], j.west[1]);
    b.wire(j.east[0], j.east[1]);
    return b.finish();
  }
  Builder b;
  auto cw = clasp_west(b);
  std::array<int, 4> cur = cw;
  for (int i = 0; i < n - 3; ++i) {
    auto j = brunnian_junction(b);
    wire4(b, cur, j.west);
    cur = j.east;
  }
  auto ce = clasp_east(b);
  wire4(b, cur, ce);
  return b.finish();
}

PlanarDiagram gen_brunnian_chain_dblleft(int n) {
  if (n < 3) throw std::invalid_argument("brunnian_chain_dblleft: n >= 3");
  Builder b;
  if (n == 3) {
    // Doubled pair clasped directly by the end circle.
    auto cw = clasp_west(b);
    b.wire(cw[0], cw[3]);
    b.wire(cw[1], cw[2]);
    return b.finish();
  }
  auto jw = brunnian_junction(b);
  b.wire(jw.west[0], jw.west[1]);  // capped pair replaces the end circle
  b.wire(jw.west[2], jw.west[3]);
  std::array<int, 4> cur = jw.east;
  for (int i = 0; i < n - 4; ++i) {
    auto j = brunnian_junction(b);
    wire4(b, cur, j.west);
    cur = j.east;
  }
  auto ce = clasp_east(b);
  wire4(b, cur, ce);
  return b.finish();
}

PlanarDiagram gen_brunnian_chain_dblends(int n) {
  if (n < 4) throw std::invalid_argument("brunnian_chain_dblends: n >= 4");
  Builder b;
  auto jw = brunnian_junction(b);
  b.wire(jw.west[0], jw.west[1]);
  b.wire(jw.west[2], jw.west[3]);
  std::array<int, 4> cur = jw.east;
  for (int i = 0; i < n - 5; ++i) {
    auto j = brunnian_junction(b);
    wire4(b, cur, j.west);
    cur = j.east;
  }
  if (n == 4) {
    // One junction carries both capped pairs.
    b.wire(jw.east[0], jw.east[3]);
    b.wire(jw.east[1], jw.east[2]);
    return b.finish();
  }
  auto je = brunnian_junction(b);
  wire4(b, cur, je.west);
  b.wire(je.east[0], je.east[3]);
  b.wire(je.east[1], je.east[2]);
  return b.finish();
}

PlanarDiagram gen_borromean() {
  // Three circles with the cyclic dominance pattern (each ring over the next,
  // under the previous); arcs 1..4, 5..8, 9..12 run around the first, second,
  // and third circle.  The diagram is alternating along every component.
  PlanarDiagram pd;
  pd.crossings = {
      Crossing{{5, 1, 6, 2}},  Crossing{{7, 4, 8, 3}},  Crossing{{10, 6, 11, 7}},
      Crossing{{9, 8, 12, 5}}, Crossing{{2, 10, 3, 9}}, Crossing{{1, 12, 4, 11}},
  };
  return normalize_labels(pd);
}

// Level-two Hopf structures: each outer component is a band carrying its own
// ring of inner Hopf junctions; bands link through double Hopf junctions.
struct BandEnds {
  std::array<int, 4> left;   // top outer, top inner, bottom inner, bottom outer
  std::array<int, 4> right;
};

BandEnds make_band(Builder& b, int inner_junctions) {
  BandEnds e;
  for (auto& x : e.left) x = b.fresh();
  for (auto& x : e.right) x = b.fresh();
  int top0 = e.left[0], top1 = e.left[1];
  for (int t = 0; t < inner_junctions; ++t) {
    auto h = hopf_junction(b);
    b.wire(top0, h.west[0]);
    b.wire(top1, h.west[1]);
    top0 = h.east[0];
    top1 = h.east[1];
  }
  b.wire(top0, e.right[0]);
  b.wire(top1, e.right[1]);
  b.wire(e.left[2], e.right[2]);
  b.wire(e.left[3], e.right[3]);
  return e;
}

PlanarDiagram gen_l2_hopf(const std::vector<int>& sizes, bool ring) {
  if (sizes.empty()) throw std::invalid_argument("l2_hopf: component list required");
  for (int n : sizes)
    if (n < 0) throw std::invalid_argument("l2_hopf: sizes must be >= 0");
  const int k = static_cast<int>(sizes.size());
  // Degenerate chains with no crossings at all.
  if (!ring && k == 1 && sizes[0] == 0) return PlanarDiagram{{}, 2};
  Builder b;
  std::vector<BandEnds> bands;
  for (int j = 0; j < k; ++j) bands.push_back(make_band(b, sizes[j]));
  const int outer = ring ? k : k - 1;
  std::vector<Junction4> js;
  for (int j = 0; j < outer; ++j) js.push_back(dbl_hopf_junction(b));
  for (int j = 0; j < outer; ++j) {
    wire4(b, bands[j].right, js[j].west);
    wire4(b, js[j].east, bands[(j + 1) % k].left);
  }
  if (!ring) {
    b.wire(bands.front().left[0], bands.front().left[3]);
    b.wire(bands.front().left[1], bands.front().left[2]);
    b.wire(bands.back().right[0], bands.back().right[3]);
    b.wire(bands.back().right[1], bands.back().right[2]);
  }
  return b.finish();
}

}  // namespace

const char* family_name(Family f) {
  switch (f) {
    case Family::hopf_chain: return "hopf_chain";
    case Family::hopf_ring: return "hopf_ring";
    case Family::dbl_hopf_chain: return "dbl_hopf_chain";
    case Family::dbl_hopf_half_ring: return "dbl_hopf_half_ring";
    case Family::dbl_hopf_ring: return "dbl_hopf_ring";
    case Family::brunnian_chain: return "brunnian_chain";
    case Family::brunnian_chain_dblleft: return "brunnian_chain_dblleft";
    case Family::brunnian_chain_dblends: return "brunnian_chain_dblends";
    case Family::brunnian_ring: return "brunnian_ring";
    case Family::brunnian_half_ring_plus: return "brunnian_half_ring_plus";
    case Family::brunnian_half_ring_minus: return "brunnian_half_ring_minus";
    case Family::borromean: return "borromean";
    case Family::l2_hopf_chain: return "l2_hopf_chain";
    case Family::l2_hopf_ring: return "l2_hopf_ring";
  }
  throw std::logic_error("unknown family");
}

Family family_from_name(const std::string& name) {
  static const std::map<std::string, Family> table = {
      {"hopf_chain", Family::hopf_chain},
      {"hopf_ring", Family::hopf_ring},
      {"dbl_hopf_chain", Family::dbl_hopf_chain},
      {"dbl_hopf_half_ring", Family::dbl_hopf_half_ring},
      {"dbl_hopf_ring", Family::dbl_hopf_ring},
      {"brunnian_chain", Family::brunnian_chain},
      {"brunnian_chain_dblleft", Family::brunnian_chain_dblleft},
      {"brunnian_chain_dblends", Family::brunnian_chain_dblends},
      {"brunnian_ring", Family::brunnian_ring},
      {"brunnian_half_ring_plus", Family::brunnian_half_ring_plus},
      {"brunnian_half_ring_minus", Family::brunnian_half_ring_minus},
      {"borromean", Family::borromean},
      {"l2_hopf_chain", Family::l2_hopf_chain},
      {"l2_hopf_ring", Family::l2_hopf_ring},
  };
  auto it = table.find(name);
  if (it == table.end()) throw std::invalid_argument("unknown family: " + name);
  return it->second;
}

PlanarDiagram generate(const FamilySpec& spec) {
  switch (spec.family) {
    case Family::hopf_chain: return gen_hopf_chain(size1(spec, "hopf_chain"));
    case Family::hopf_ring: return gen_hopf_ring(size1(spec, "hopf_ring"));
    case Family::dbl_hopf_chain: return gen_dbl_hopf_chain(size1(spec, "dbl_hopf_chain"));
    case Family::dbl_hopf_half_ring:
      return gen_dbl_hopf_half_ring(size1(spec, "dbl_hopf_half_ring"));
    case Family::dbl_hopf_ring: return gen_dbl_hopf_ring(size1(spec, "dbl_hopf_ring"));
    case Family::brunnian_chain: return gen_brunnian_chain(size1(spec, "brunnian_chain"));
    case Family::brunnian_chain_dblleft:
      return gen_brunnian_chain_dblleft(size1(spec, "brunnian_chain_dblleft"));
    case Family::brunnian_chain_dblends:
      return gen_brunnian_chain_dblends(size1(spec, "brunnian_chain_dblends"));
    case Family::brunnian_ring: return gen_brunnian_ring(size1(spec, "brunnian_ring"));
    case Family::brunnian_half_ring_plus:
      return gen_brunnian_half_ring(size1(spec, "brunnian_half_ring_plus"), true);
    case Family::brunnian_half_ring_minus:
      return gen_brunnian_half_ring(size1(spec, "brunnian_half_ring_minus"), false);
    case Family::borromean:
      if (!spec.sizes.empty()) throw std::invalid_argument("borromean takes no size");
      return gen_borromean();
    case Family::l2_hopf_chain: return gen_l2_hopf(spec.sizes, false);
    case Family::l2_hopf_ring: return gen_l2_hopf(spec.sizes, true);
  }
  throw std::logic_error("unknown family");
}

OrientedDiagram generate_oriented(const FamilySpec& spec) {
  PlanarDiagram pd = generate(spec);
  int n = component_count(pd) - pd.free_loops;
  std::vector<bool> flags(std::max(n, 0), false);
  return orient(pd, flags);
}

}  // namespace skein
