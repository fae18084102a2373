#pragma once

#include "skein/laurent.hpp"

#include <map>
#include <string>
#include <vector>

namespace skein {

/// Kauffman-bracket values of the link families by recurrence, independent of
/// any diagram evaluation.  All results are polynomials in A with whole
/// exponents.
namespace kb {

LaurentPoly hopfchain(int n);                 // n >= 1
LaurentPoly hopfring(int n);                  // n >= 1, by recurrence
LaurentPoly hopfring_closed_form(int n);      // the Proposition, exact division
LaurentPoly dblhopfchain(int twon);           // even >= 2
LaurentPoly dblhopfhalfring(int n);           // odd >= 3
LaurentPoly dblhopfring(int twon);            // even >= 2
LaurentPoly brunnianchain(int n);             // n >= 2
LaurentPoly brunnianchaindblleft(int n);      // n >= 3
LaurentPoly brunnianchaindblends(int n);      // n >= 4
LaurentPoly brunnianhalfring(int n, bool plus);  // n >= 3
LaurentPoly brunnianring(int n);              // n >= 2
LaurentPoly l2hopfchain(const std::vector<int>& sizes);
LaurentPoly l2hopfring(const std::vector<int>& sizes);

}  // namespace kb

/// Recurrence value for a generated family, for the verify cross-check.
/// Returns false when the family has no recurrence (borromean is matched
/// against brunnianchain(3) instead).
bool family_recurrence(const std::string& family, const std::vector<int>& sizes,
                       LaurentPoly& out);

// --- level-two Brunnian reduction -------------------------------------------

/// One entry of a level-two Brunnian composition: a component that is a
/// Brunnian ring (plain), half-ring (plus/minus), or already reduced to a
/// doubled (0+/0-) or quadrupled (0) circle bundle.
struct L2Entry {
  int n = 0;
  enum class Adorn { plain, plus, minus } adorn = Adorn::plain;

  bool operator<(const L2Entry& o) const {
    return std::tie(n, adorn) < std::tie(o.n, o.adorn);
  }
  bool operator==(const L2Entry& o) const { return n == o.n && adorn == o.adorn; }
};

enum class L2Kind { ring, chain };

/// A base symbol: a doubled-Brunnian structure whose entries are all 0-ish.
struct L2BaseSymbol {
  L2Kind kind;
  std::vector<L2Entry> entries;  // entries with n == 0
  bool operator<(const L2BaseSymbol& o) const;
  std::string str() const;
};

/// Result of reducing a level-two Brunnian bracket: a fully evaluated scalar
/// part plus a linear combination over unresolved base symbols.
struct L2Reduction {
  LaurentPoly scalar{LaurentPoly::zero("A")};
  std::map<L2BaseSymbol, LaurentPoly> symbols;
};

/// Applies the level-two reduction rules until only base symbols remain.
/// Base symbols are never evaluated.
L2Reduction l2brunnian_reduce(L2Kind kind, const std::vector<L2Entry>& entries);

/// Parses entries like "3", "4+", "0-" from a comma-separated list.
std::vector<L2Entry> parse_l2_entries(const std::string& text);

}  // namespace skein
