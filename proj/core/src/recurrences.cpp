#include "skein/recurrences.hpp"

#include <algorithm>
#include <sstream>

namespace skein {

namespace {

LaurentPoly P(std::initializer_list<std::pair<int, long>> whole_terms) {
  LaurentPoly p("A");
  for (auto [e, c] : whole_terms) p.set_coeff(2 * e, p.coeff(2 * e) + c);
  return p;
}

const LaurentPoly& delta() {
  static const LaurentPoly d = P({{2, -1}, {-2, -1}});
  return d;
}

LaurentPoly delta_pow(int n) {
  if (n < 0) throw std::invalid_argument("negative delta power");
  return delta().pow(static_cast<unsigned>(n));
}

const LaurentPoly& one() {
  static const LaurentPoly u = LaurentPoly::unit("A");
  return u;
}

}  // namespace

namespace kb {

LaurentPoly hopfchain(int n) {
  if (n < 1) throw std::invalid_argument("hopfchain: n >= 1");
  return P({{4, -1}, {-4, -1}}).pow(static_cast<unsigned>(n - 1));
}

LaurentPoly hopfring(int n) {
  if (n < 1) throw std::invalid_argument("hopfring: n >= 1");
  static std::vector<LaurentPoly> memo{LaurentPoly(), P({{-6, 1}})};
  while (static_cast<int>(memo.size()) <= n) {
    int m = static_cast<int>(memo.size());
    // kb(n) = A^2 (-A^4 - A^{-4})^{n-1} + (1 - A^{-4}) kb(n-1)
    LaurentPoly v = hopfchain(m).shifted(4) + P({{0, 1}, {-4, -1}}) * memo[m - 1];
    memo.push_back(v);
  }
  return memo[n];
}

LaurentPoly hopfring_closed_form(int n) {
  if (n < 1) throw std::invalid_argument("hopfring_closed_form: n >= 1");
  // -A^2 [ (A^4 - A^{-8})(1 - A^{-4})^{n-1} + (-A^4 - A^{-4})^n ] / (1 + A^4)
  LaurentPoly num = P({{4, 1}, {-8, -1}}) * P({{0, 1}, {-4, -1}}).pow(n - 1) +
                    P({{4, -1}, {-4, -1}}).pow(n);
  num = num.shifted(4, Int(-1));  // times -A^2
  return num.div_exact(P({{0, 1}, {4, 1}}));
}

LaurentPoly dblhopfchain(int twon) {
  if (twon < 2 || twon % 2 != 0) throw std::invalid_argument("dblhopfchain: even size >= 2");
  static std::vector<LaurentPoly> memo{
      // index by n = twon/2; seeded with the two explicit bases
      LaurentPoly(),
      P({{2, -1}, {-2, -1}}),
      P({{14, -1}, {6, -1}, {2, -2}, {-2, -2}, {-6, -1}, {-14, -1}}),
  };
  int n = twon / 2;
  while (static_cast<int>(memo.size()) <= n) {
    int m = static_cast<int>(memo.size());
    LaurentPoly v = P({{6, 1}, {-6, 1}}).pow(2) * memo[m - 1] +
                    P({{12, -1}, {4, 1}, {-4, 1}, {-12, -1}}) * memo[m - 2];
    memo.push_back(v);
  }
  return memo[n];
}

// The gathered contributions of the half-ring resolution table: the
// chain(2n) diagram carries -(A^{-10} + A^2) and the chain(2n-2) diagrams
// gather to (A^{-10} - A^{-6} - A^6 + A^{10}).  The displayed recurrence
// swaps the two; the per-diagram table is what the diagram evaluations
// confirm.
LaurentPoly dblhopfhalfring(int n) {
  if (n < 3 || n % 2 == 0) throw std::invalid_argument("dblhopfhalfring: odd size >= 3");
  static std::vector<LaurentPoly> memo{P({{16, 1}, {8, 1}, {0, 2}})};  // index (n-3)/2
  int idx = (n - 3) / 2;
  while (static_cast<int>(memo.size()) <= idx) {
    int m = static_cast<int>(memo.size());
    int sz = 3 + 2 * m;  // = 2k+1 with dblhopfchain(sz-1), (sz-3) inputs
    LaurentPoly v = -P({{-10, 1}, {2, 1}}) * dblhopfchain(sz - 1) +
                    P({{-10, 1}, {-6, -1}, {6, -1}, {10, 1}}) * dblhopfchain(sz - 3) +
                    P({{-8, -1}, {0, 1}, {4, -1}, {12, 1}}) * memo[m - 1];
    memo.push_back(v);
  }
  return memo[idx];
}

// Seeded at 2n = 2 only; the 2n = 4 step uses the formal
// dblhopfchain(0) = delta^{-1}, realized as an exact division.
LaurentPoly dblhopfring(int twon) {
  if (twon < 2 || twon % 2 != 0) throw std::invalid_argument("dblhopfring: even size >= 2");
  static std::vector<LaurentPoly> memo{
      LaurentPoly(),
      P({{18, -1}, {10, -1}, {6, 1}, {2, -1}}),
  };
  int n = twon / 2;
  while (static_cast<int>(memo.size()) <= n) {
    int m = static_cast<int>(memo.size());
    int sz = 2 * m;
    LaurentPoly chain0_coeff = P({{-8, 1}, {-4, -1}, {0, -2}, {4, 2}, {8, 1}, {12, -1}});
    LaurentPoly chain0_term =
        sz == 4 ? chain0_coeff.div_exact(delta()) : chain0_coeff * dblhopfchain(sz - 4);
    LaurentPoly v = dblhopfchain(sz).shifted(-16) +
                    P({{-8, -2}, {-4, 2}, {0, 2}, {4, -2}}) * dblhopfchain(sz - 2) + chain0_term +
                    P({{-6, 1}, {-2, 1}, {2, -1}, {6, -1}}) * dblhopfhalfring(sz - 1) +
                    P({{0, 1}, {4, -1}, {8, -1}, {12, 1}}) * memo[m - 1];
    memo.push_back(v);
  }
  return memo[n];
}

LaurentPoly brunnianchaindblleft(int n) {
  if (n < 3) throw std::invalid_argument("brunnianchaindblleft: n >= 3");
  static std::vector<LaurentPoly> memo{P({{4, -1}, {-4, -1}}).pow(2)};  // index n-3
  int idx = n - 3;
  while (static_cast<int>(memo.size()) <= idx) {
    int m = static_cast<int>(memo.size());
    int sz = 3 + m;
    LaurentPoly v = P({{12, 1}, {0, 2}, {-12, 1}}) * delta_pow(sz - 3) +
                    P({{10, 1}, {6, -1}, {-6, -1}, {-10, 1}}) * memo[m - 1];
    memo.push_back(v);
  }
  return memo[idx];
}

LaurentPoly brunnianchaindblends(int n) {
  if (n < 4) throw std::invalid_argument("brunnianchaindblends: n >= 4");
  static std::vector<LaurentPoly> memo{dblhopfchain(4)};  // index n-4
  int idx = n - 4;
  while (static_cast<int>(memo.size()) <= idx) {
    int m = static_cast<int>(memo.size());
    int sz = 4 + m;
    LaurentPoly v = P({{12, 1}, {0, 2}, {-12, 1}}) * delta_pow(sz - 3) +
                    P({{10, 1}, {6, -1}, {-6, -1}, {-10, 1}}) * memo[m - 1];
    memo.push_back(v);
  }
  return memo[idx];
}

LaurentPoly brunnianchain(int n) {
  if (n < 2) throw std::invalid_argument("brunnianchain: n >= 2");
  if (n == 2) return P({{4, -1}, {-4, -1}});
  return P({{6, -1}, {-6, -1}}) * delta_pow(n - 2) +
         P({{0, 2}, {4, -1}, {-4, -1}}) * brunnianchaindblleft(n);
}

// The half-ring and ring recurrences consume the Brunnian chain with both
// ends doubled.  The displayed equations and the per-diagram tables disagree
// on that coefficient's sign pattern; the table value -(A^2 - A^{-2})^2 is
// the one the diagram evaluations confirm.
static const LaurentPoly kDblendsCoeffHalfring = P({{4, -1}, {0, 2}, {-4, -1}});
static const LaurentPoly kDblendsCoeffRing = P({{4, -1}, {0, 2}, {-4, -1}});

LaurentPoly brunnianhalfring(int n, bool plus) {
  if (n < 3) throw std::invalid_argument("brunnianhalfring: n >= 3");
  static std::vector<LaurentPoly> memo_plus{P({{0, 2}, {-8, 1}, {-16, 1}})};
  static std::vector<LaurentPoly> memo_minus{P({{16, 1}, {8, 1}, {0, 2}})};
  auto& memo = plus ? memo_plus : memo_minus;
  int idx = n - 3;
  while (static_cast<int>(memo.size()) <= idx) {
    int m = static_cast<int>(memo.size());
    int sz = 3 + m;
    LaurentPoly v = P({{4, 1}, {0, -1}, {-4, 1}}).pow(2) * delta_pow(sz - 1) +
                    kDblendsCoeffHalfring * brunnianchaindblends(sz) +
                    P({{10, 1}, {6, -2}, {2, 1}, {-2, 1}, {-6, -2}, {-10, 1}}) * memo[m - 1];
    memo.push_back(v);
  }
  return memo[idx];
}

// The two-component base.  The flanking-linkage merge the text uses to argue
// for (-A^2 - A^{-2})^2 breaks down at n = 2 (the two flanking linkages
// coincide); this value is the bracket of the two-component ring diagram and
// is the one consistent with the ring's Jones polynomial.
LaurentPoly brunnianring(int n) {
  if (n < 2) throw std::invalid_argument("brunnianring: n >= 2");
  static std::vector<LaurentPoly> memo{
      P({{22, -1}, {18, 2}, {14, -2}, {10, 3}, {6, -2}, {2, -1}, {-2, -1}, {-6, -2}, {-10, 3},
         {-14, -2}, {-18, 2}, {-22, -1}})};  // index n-2
  int idx = n - 2;
  while (static_cast<int>(memo.size()) <= idx) {
    int m = static_cast<int>(memo.size());
    int sz = 2 + m;
    LaurentPoly gathered = -delta_pow(4) + delta_pow(2) * Int(3) + one() * Int(5);
    LaurentPoly q = P({{6, -1}, {2, 1}, {-2, 1}, {-6, -1}});
    LaurentPoly v = gathered * delta_pow(sz - 1) +
                    kDblendsCoeffRing * brunnianchaindblends(sz + 2) +
                    q * (brunnianhalfring(sz + 1, true) + brunnianhalfring(sz + 1, false)) +
                    q * memo[m - 1];
    memo.push_back(v);
  }
  return memo[idx];
}

LaurentPoly l2hopfchain(const std::vector<int>& sizes) {
  if (sizes.empty()) throw std::invalid_argument("l2hopfchain: empty composition");
  for (int n : sizes)
    if (n < 0) throw std::invalid_argument("l2hopfchain: negative entry");
  const int k = static_cast<int>(sizes.size());
  int j = -1;
  for (int i = 0; i < k; ++i)
    if (sizes[i] > 0) {
      j = i;
      break;
    }
  if (j < 0) return dblhopfchain(2 * k);
  if (k == 1) return hopfring(sizes[0]);

  auto sub = [&](int lo, int hi) {  // [lo, hi)
    return std::vector<int>(sizes.begin() + lo, sizes.begin() + hi);
  };
  auto factor = [&](const std::vector<int>& v) {
    return v.empty() ? one() : l2hopfchain(v);
  };
  int dexp = (j > 0 ? 1 : 0) + (j < k - 1 ? 1 : 0);
  LaurentPoly term1 = delta_pow(dexp).shifted(4) * factor(sub(0, j)) * hopfchain(sizes[j]) *
                      factor(sub(j + 1, k));
  std::vector<int> dec = sizes;
  dec[j] -= 1;
  LaurentPoly term2 = P({{0, 1}, {-4, -1}}) * l2hopfchain(dec);
  return term1 + term2;
}

LaurentPoly l2hopfring(const std::vector<int>& sizes) {
  if (sizes.empty()) throw std::invalid_argument("l2hopfring: empty composition");
  for (int n : sizes)
    if (n < 0) throw std::invalid_argument("l2hopfring: negative entry");
  const int k = static_cast<int>(sizes.size());
  int j = -1;
  for (int i = 0; i < k; ++i)
    if (sizes[i] > 0) {
      j = i;
      break;
    }
  if (j < 0) return dblhopfring(2 * k);

  std::vector<int> rest;
  for (int i = j + 1; i < k; ++i) rest.push_back(sizes[i]);
  for (int i = 0; i < j; ++i) rest.push_back(sizes[i]);
  LaurentPoly chain_factor = rest.empty() ? one() : l2hopfchain(rest);
  LaurentPoly term1 = (delta() * hopfchain(sizes[j]) * chain_factor).shifted(4);
  std::vector<int> dec = sizes;
  dec[j] -= 1;
  LaurentPoly term2 = P({{0, 1}, {-4, -1}}) * l2hopfring(dec);
  return term1 + term2;
}

}  // namespace kb

bool family_recurrence(const std::string& family, const std::vector<int>& sizes,
                       LaurentPoly& out) {
  auto n = [&]() -> int {
    if (sizes.size() != 1) throw std::invalid_argument("family_recurrence: one size expected");
    return sizes[0];
  };
  if (family == "hopf_chain") out = kb::hopfchain(n());
  else if (family == "hopf_ring") out = kb::hopfring(n());
  else if (family == "dbl_hopf_chain") out = kb::dblhopfchain(n());
  else if (family == "dbl_hopf_half_ring") out = kb::dblhopfhalfring(n());
  else if (family == "dbl_hopf_ring") out = kb::dblhopfring(n());
  else if (family == "brunnian_chain") out = kb::brunnianchain(n());
  else if (family == "brunnian_chain_dblleft") out = kb::brunnianchaindblleft(n());
  else if (family == "brunnian_chain_dblends") out = kb::brunnianchaindblends(n());
  else if (family == "brunnian_ring") out = kb::brunnianring(n());
  else if (family == "brunnian_half_ring_plus") out = kb::brunnianhalfring(n(), true);
  else if (family == "brunnian_half_ring_minus") out = kb::brunnianhalfring(n(), false);
  else if (family == "borromean") out = kb::brunnianchain(3);
  else if (family == "l2_hopf_chain") out = kb::l2hopfchain(sizes);
  else if (family == "l2_hopf_ring") out = kb::l2hopfring(sizes);
  else return false;
  return true;
}

// ---------------------------------------------------------------------------
// Level-two Brunnian reduction

bool L2BaseSymbol::operator<(const L2BaseSymbol& o) const {
  if (kind != o.kind) return kind < o.kind;
  return entries < o.entries;
}

std::string L2BaseSymbol::str() const {
  std::ostringstream os;
  os << (kind == L2Kind::ring ? "dblbrunnianring[" : "dblbrunnianchain[");
  for (size_t i = 0; i < entries.size(); ++i) {
    if (i) os << ",";
    os << entries[i].n;
    if (entries[i].adorn == L2Entry::Adorn::plus) os << "+";
    if (entries[i].adorn == L2Entry::Adorn::minus) os << "-";
  }
  os << "]";
  return os.str();
}

namespace {

// Standalone bracket of one component after the structure disassembles.
LaurentPoly l2_standalone(const L2Entry& e) {
  using Adorn = L2Entry::Adorn;
  if (e.adorn == Adorn::plain) {
    if (e.n == 0) return delta_pow(3);  // quadrupled circle bundle
    if (e.n == 1) return LaurentPoly::unit("A");
    return kb::brunnianring(e.n);
  }
  if (e.n == 0) return delta_pow(1);  // doubled circle bundle
  return kb::brunnianhalfring(e.n, e.adorn == Adorn::plus);
}

L2BaseSymbol canonical_symbol(L2Kind kind, std::vector<L2Entry> entries) {
  if (kind == L2Kind::ring && entries.size() > 1) {
    // rings are invariant under rotation; pick the least one
    std::vector<L2Entry> best = entries;
    for (size_t r = 1; r < entries.size(); ++r) {
      std::rotate(entries.begin(), entries.begin() + 1, entries.end());
      if (entries < best) best = entries;
    }
    entries = best;
  }
  return L2BaseSymbol{kind, std::move(entries)};
}

void add_scaled(L2Reduction& acc, const L2Reduction& part, const LaurentPoly& c) {
  acc.scalar += part.scalar * c;
  for (const auto& [sym, coeff] : part.symbols) {
    auto it = acc.symbols.find(sym);
    if (it == acc.symbols.end())
      acc.symbols.emplace(sym, coeff * c);
    else {
      it->second += coeff * c;
      if (it->second.is_zero()) acc.symbols.erase(it);
    }
  }
}

}  // namespace

L2Reduction l2brunnian_reduce(L2Kind kind, const std::vector<L2Entry>& entries) {
  using Adorn = L2Entry::Adorn;
  if (entries.empty()) throw std::invalid_argument("l2brunnian_reduce: empty composition");
  for (const auto& e : entries) {
    if (e.n < 0) throw std::invalid_argument("l2brunnian_reduce: negative entry");
    if (e.adorn != Adorn::plain && e.n != 0 && e.n < 3)
      throw std::invalid_argument("l2brunnian_reduce: half-ring entries need n >= 3");
    if (e.adorn == Adorn::plain && e.n > 0 && e.n < 1)
      throw std::invalid_argument("l2brunnian_reduce: bad entry");
  }

  L2Reduction out;
  const int k = static_cast<int>(entries.size());

  // A one-component composition of a plain ring is the level-one ring itself.
  if (k == 1 && entries[0].adorn == Adorn::plain && entries[0].n >= 2) {
    out.scalar = kb::brunnianring(entries[0].n);
    return out;
  }

  // leftmost reducible entry
  int j = -1;
  for (int i = 0; i < k; ++i) {
    const auto& e = entries[i];
    if ((e.adorn == Adorn::plain && e.n >= 1) || (e.adorn != Adorn::plain && e.n >= 3)) {
      j = i;
      break;
    }
  }
  if (j < 0) {
    out.symbols[canonical_symbol(kind, entries)] = LaurentPoly::unit("A");
    return out;
  }

  auto with_entry = [&](L2Entry e) {
    auto v = entries;
    v[j] = e;
    return v;
  };
  LaurentPoly product = one();
  for (int i = 0; i < k; ++i)
    if (i != j) product *= l2_standalone(entries[i]);

  const LaurentPoly q = P({{6, -1}, {2, 1}, {-2, 1}, {-6, -1}});
  const L2Entry& e = entries[j];

  if (e.adorn == Adorn::plain && e.n >= 2) {
    LaurentPoly gathered = -delta_pow(4) + delta_pow(2) * Int(3) + one() * Int(5);
    LaurentPoly scalar_coeff =
        (gathered * delta_pow(e.n - 1) + kb::kDblendsCoeffRing * kb::brunnianchaindblends(e.n + 2)) *
        delta_pow(k - 1);
    out.scalar += scalar_coeff * product;
    add_scaled(out, l2brunnian_reduce(kind, with_entry({e.n + 1, Adorn::plus})), q);
    add_scaled(out, l2brunnian_reduce(kind, with_entry({e.n + 1, Adorn::minus})), q);
    add_scaled(out, l2brunnian_reduce(kind, with_entry({e.n - 1, Adorn::plain})), q);
    return out;
  }
  if (e.adorn == Adorn::plain && e.n == 1) {
    add_scaled(out, l2brunnian_reduce(kind, with_entry({0, Adorn::plain})), q);
    add_scaled(out, l2brunnian_reduce(kind, with_entry({0, Adorn::plus})),
               P({{10, 1}, {6, 1}, {2, -2}, {-2, -2}, {-6, 1}, {-10, 1}}));
    out.scalar += delta() * product;
    return out;
  }
  if (e.n == 3) {
    if (e.adorn == Adorn::plus) {
      add_scaled(out, l2brunnian_reduce(kind, with_entry({0, Adorn::plus})),
                 P({{10, 1}, {6, -1}, {2, 1}, {-6, -1}, {-10, 1}, {-14, -1}}));
      out.scalar += P({{12, 1}, {0, 3}, {-4, -1}, {-8, 1}}) * delta() * product;
    } else {
      add_scaled(out, l2brunnian_reduce(kind, with_entry({0, Adorn::minus})),
                 P({{14, -1}, {10, 1}, {6, -1}, {-2, 1}, {-6, -1}, {-10, 1}}));
      out.scalar += P({{8, 1}, {4, -1}, {0, 3}, {-12, 1}}) * delta() * product;
    }
    return out;
  }
  // half-ring with n >= 4
  LaurentPoly scalar_coeff =
      (P({{4, 1}, {0, -1}, {-4, 1}}).pow(2) * delta_pow(e.n - 1) +
       kb::kDblendsCoeffHalfring * kb::brunnianchaindblends(e.n)) *
      delta_pow(k - 1);
  out.scalar += scalar_coeff * product;
  add_scaled(out,
             l2brunnian_reduce(kind, with_entry({e.n - 1, e.adorn})),
             P({{10, 1}, {6, -2}, {2, 1}, {-2, 1}, {-6, -2}, {-10, 1}}));
  return out;
}

std::vector<L2Entry> parse_l2_entries(const std::string& text) {
  std::vector<L2Entry> out;
  std::istringstream is(text);
  std::string item;
  while (std::getline(is, item, ',')) {
    item.erase(std::remove_if(item.begin(), item.end(), ::isspace), item.end());
    if (item.empty()) continue;
    L2Entry e;
    if (item.back() == '+') {
      e.adorn = L2Entry::Adorn::plus;
      item.pop_back();
    } else if (item.back() == '-') {
      e.adorn = L2Entry::Adorn::minus;
      item.pop_back();
    }
    e.n = std::stoi(item);
    out.push_back(e);
  }
  return out;
}

}  // namespace skein
