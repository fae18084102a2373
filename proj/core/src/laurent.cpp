#include "skein/laurent.hpp"

#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <sstream>

namespace skein {

using nlohmann::json;

namespace {

void check_same_var(const std::string& a, const std::string& b) {
  if (a != b) {
    throw laurent_error("variable tag mismatch: '" + a + "' vs '" + b + "'");
  }
}

// Renders one half-unit exponent as "2", "-3" or "1/2", "-1/2".
std::string exp_str(int half_exp) {
  std::ostringstream os;
  if (half_exp % 2 == 0) {
    os << half_exp / 2;
  } else {
    os << half_exp << "/2";
  }
  return os.str();
}

}  // namespace

// ---------------------------------------------------------------------------
// LaurentPoly

LaurentPoly LaurentPoly::monomial(const std::string& var, int half_exp, Int coeff) {
  LaurentPoly p(var);
  if (coeff != 0) p.terms_[half_exp] = std::move(coeff);
  return p;
}

bool LaurentPoly::is_unit() const {
  return terms_.size() == 1 && terms_.begin()->first == 0 && terms_.begin()->second == 1;
}

Int LaurentPoly::coeff(int half_exp) const {
  auto it = terms_.find(half_exp);
  return it == terms_.end() ? Int(0) : it->second;
}

void LaurentPoly::set_coeff(int half_exp, Int c) {
  if (c == 0) {
    terms_.erase(half_exp);
  } else {
    terms_[half_exp] = std::move(c);
  }
}

int LaurentPoly::min_exp() const {
  if (terms_.empty()) throw laurent_error("min_exp of zero polynomial");
  return terms_.begin()->first;
}

int LaurentPoly::max_exp() const {
  if (terms_.empty()) throw laurent_error("max_exp of zero polynomial");
  return terms_.rbegin()->first;
}

bool LaurentPoly::whole_exponents() const {
  for (const auto& [e, c] : terms_)
    if (e % 2 != 0) return false;
  return true;
}

void LaurentPoly::prune() {
  for (auto it = terms_.begin(); it != terms_.end();) {
    it = (it->second == 0) ? terms_.erase(it) : std::next(it);
  }
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r(var_);
  for (const auto& [e, c] : terms_) r.terms_[e] = -c;
  return r;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
  check_same_var(var_, o.var_);
  LaurentPoly r = *this;
  for (const auto& [e, c] : o.terms_) r.terms_[e] += c;
  r.prune();
  return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const { return *this + (-o); }

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
  check_same_var(var_, o.var_);
  LaurentPoly r(var_);
  for (const auto& [e1, c1] : terms_)
    for (const auto& [e2, c2] : o.terms_) r.terms_[e1 + e2] += c1 * c2;
  r.prune();
  return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  *this = *this + o;
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) {
  *this = *this * o;
  return *this;
}

bool LaurentPoly::operator==(const LaurentPoly& o) const {
  return var_ == o.var_ && terms_ == o.terms_;
}

LaurentPoly LaurentPoly::operator*(const Int& c) const {
  LaurentPoly r(var_);
  if (c == 0) return r;
  for (const auto& [e, k] : terms_) r.terms_[e] = k * c;
  return r;
}

LaurentPoly LaurentPoly::shifted(int half_exp, const Int& c) const {
  LaurentPoly r(var_);
  if (c == 0) return r;
  for (const auto& [e, k] : terms_) r.terms_[e + half_exp] = k * c;
  return r;
}

LaurentPoly LaurentPoly::pow(unsigned n) const {
  LaurentPoly acc = unit(var_);
  for (unsigned i = 0; i < n; ++i) acc *= *this;
  return acc;
}

LaurentPoly LaurentPoly::div_exact(const LaurentPoly& divisor) const {
  check_same_var(var_, divisor.var_);
  if (divisor.is_zero()) throw laurent_error("division by zero polynomial");
  if (is_zero()) return zero(var_);

  // Synthetic division from the top exponent down.  If the division is exact
  // the quotient's exponents live in [min-dmin, max-dtop]; crossing that floor
  // or hitting a non-divisible leading coefficient means a nonzero remainder.
  LaurentPoly rem = *this;
  LaurentPoly quot(var_);
  const int dtop = divisor.max_exp();
  const int qmin = min_exp() - divisor.min_exp();
  const Int& dlead = divisor.terms().rbegin()->second;
  while (!rem.is_zero()) {
    int rtop = rem.max_exp();
    int qe = rtop - dtop;
    if (qe < qmin) break;
    const Int& rlead = rem.terms().rbegin()->second;
    if (rlead % dlead != 0) break;
    Int qc = rlead / dlead;
    quot.terms_[qe] += qc;
    rem = rem - divisor.shifted(qe, qc);
  }
  quot.prune();
  if (!rem.is_zero()) throw laurent_error("nonzero remainder in exact division");
  return quot;
}

LaurentPoly LaurentPoly::conjugate() const {
  LaurentPoly r(var_);
  for (const auto& [e, c] : terms_) r.terms_[-e] = c;
  return r;
}

Int LaurentPoly::eval_at_one() const {
  Int s = 0;
  for (const auto& [e, c] : terms_) s += c;
  return s;
}

std::string LaurentPoly::str() const {
  if (terms_.empty()) return "0";

  // Tables print all-half-exponent polynomials as q^{-1/2}(whole-exponent poly).
  bool all_odd = true;
  for (const auto& [e, c] : terms_)
    if (e % 2 == 0) all_odd = false;
  if (all_odd) {
    LaurentPoly shifted_up = shifted(1);
    return var_ + "^{-1/2} (" + shifted_up.str() + ")";
  }

  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const int e = it->first;
    const Int& c = it->second;
    Int a = c < 0 ? Int(-c) : c;
    if (first) {
      if (c < 0) os << "-";
      first = false;
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    if (a != 1 || e == 0) os << a;
    if (e != 0) {
      if (a != 1) os << " ";
      os << var_;
      if (e != 2) os << "^{" << exp_str(e) << "}";
    }
  }
  return os.str();
}

LaurentPoly LaurentPoly::parse(const std::string& var, const std::string& text) {
  LaurentPoly p(var);
  size_t i = 0;
  const size_t n = text.size();
  auto skip_ws = [&] {
    while (i < n && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  auto parse_int = [&]() -> Int {
    size_t start = i;
    if (i < n && (text[i] == '+' || text[i] == '-')) ++i;
    while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (start == i || (i == start + 1 && !std::isdigit(static_cast<unsigned char>(text[start]))))
      throw laurent_error("expected integer in polynomial text at '" + text.substr(start) + "'");
    return Int(text.substr(start, i - start));
  };

  // Accepts the factored head "q^{-1/2} ( ... )" by distributing the monomial.
  skip_ws();
  int global_shift = 0;
  {
    size_t save = i;
    if (i < n && text.compare(i, var.size(), var) == 0) {
      size_t j = i + var.size();
      if (j < n && text[j] == '^') {
        size_t k = j + 1;
        bool brace = k < n && text[k] == '{';
        if (brace) ++k;
        size_t num_start = k;
        if (k < n && (text[k] == '+' || text[k] == '-')) ++k;
        while (k < n && std::isdigit(static_cast<unsigned char>(text[k]))) ++k;
        if (k + 1 < n && text[k] == '/' && text[k + 1] == '2') {
          std::string num = text.substr(num_start, k - num_start);
          k += 2;
          if (brace) {
            if (k >= n || text[k] != '}') throw laurent_error("unclosed exponent brace");
            ++k;
          }
          size_t m = k;
          while (m < n && std::isspace(static_cast<unsigned char>(text[m]))) ++m;
          if (m < n && text[m] == '(' && text.back() == ')') {
            global_shift = std::stoi(num);
            i = m + 1;
          } else {
            i = save;
          }
        } else {
          i = save;
        }
      }
    }
  }

  bool any = false;
  while (true) {
    skip_ws();
    if (i >= n || text[i] == ')') break;
    int sign = 1;
    if (text[i] == '+') {
      ++i;
    } else if (text[i] == '-') {
      sign = -1;
      ++i;
    }
    skip_ws();
    Int coeff = 1;
    bool saw_coeff = false;
    if (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) {
      size_t start = i;
      while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
      coeff = Int(text.substr(start, i - start));
      saw_coeff = true;
    }
    skip_ws();
    if (i < n && text[i] == '*') {
      ++i;
      skip_ws();
    }
    int half_exp = 0;
    if (i < n && text.compare(i, var.size(), var) == 0) {
      i += var.size();
      half_exp = 2;  // bare variable
      skip_ws();
      if (i < n && text[i] == '^') {
        ++i;
        skip_ws();
        bool brace = i < n && text[i] == '{';
        if (brace) ++i;
        Int e = parse_int();
        int whole = static_cast<int>(e);
        if (i + 1 < n && text[i] == '/' && text[i + 1] == '2') {
          i += 2;
          half_exp = whole;
        } else {
          half_exp = 2 * whole;
        }
        if (brace) {
          if (i >= n || text[i] != '}') throw laurent_error("unclosed exponent brace");
          ++i;
        }
      }
    } else if (!saw_coeff) {
      throw laurent_error("cannot parse polynomial term in '" + text + "'");
    }
    p.terms_[half_exp + global_shift] += sign * coeff;
    any = true;
  }
  if (!any && text.find('0') == std::string::npos)
    throw laurent_error("empty polynomial text");
  p.prune();
  return p;
}

std::string LaurentPoly::json() const {
  nlohmann::json j;
  j["variable"] = var_;
  j["terms"] = nlohmann::json::array();
  for (const auto& [e, c] : terms_) {
    j["terms"].push_back({{"exponent", e}, {"coefficient", c.str()}});
  }
  return j.dump();
}

LaurentPoly LaurentPoly::from_json_text(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  LaurentPoly p(j.at("variable").get<std::string>());
  for (const auto& t : j.at("terms")) {
    Int c(t.at("coefficient").get<std::string>());
    p.terms_[t.at("exponent").get<int>()] += c;
  }
  p.prune();
  return p;
}

// ---------------------------------------------------------------------------
// GaussPoly

GaussPoly GaussPoly::monomial(const std::string& var, int half_exp, Gauss coeff) {
  GaussPoly p(var);
  if (!coeff.is_zero()) p.terms_[half_exp] = std::move(coeff);
  return p;
}

GaussPoly GaussPoly::from_real(const LaurentPoly& p) {
  GaussPoly g(p.var());
  for (const auto& [e, c] : p.terms()) g.terms_[e] = Gauss(c);
  return g;
}

void GaussPoly::prune() {
  for (auto it = terms_.begin(); it != terms_.end();) {
    it = it->second.is_zero() ? terms_.erase(it) : std::next(it);
  }
}

GaussPoly GaussPoly::operator+(const GaussPoly& o) const {
  check_same_var(var_, o.var_);
  GaussPoly r = *this;
  for (const auto& [e, c] : o.terms_) r.terms_[e] += c;
  r.prune();
  return r;
}

GaussPoly GaussPoly::operator*(const GaussPoly& o) const {
  check_same_var(var_, o.var_);
  GaussPoly r(var_);
  for (const auto& [e1, c1] : terms_)
    for (const auto& [e2, c2] : o.terms_) r.terms_[e1 + e2] += c1 * c2;
  r.prune();
  return r;
}

GaussPoly GaussPoly::operator*(const Gauss& c) const {
  GaussPoly r(var_);
  if (c.is_zero()) return r;
  for (const auto& [e, k] : terms_) r.terms_[e] = k * c;
  return r;
}

GaussPoly GaussPoly::pow(unsigned n) const {
  GaussPoly acc = unit(var_);
  for (unsigned i = 0; i < n; ++i) acc = acc * *this;
  return acc;
}

GaussPoly GaussPoly::div_exact(const GaussPoly& divisor) const {
  check_same_var(var_, divisor.var_);
  if (divisor.is_zero()) throw laurent_error("division by zero polynomial");
  GaussPoly quot(var_);
  if (is_zero()) return quot;

  GaussPoly rem = *this;
  const int dtop = divisor.terms_.rbegin()->first;
  const int dbot = divisor.terms_.begin()->first;
  const Gauss dlead = divisor.terms_.rbegin()->second;
  // Unit leading coefficients (+-1, +-i) are the only divisors we meet.
  Gauss dlead_inv;
  if (dlead == Gauss(Int(1)))
    dlead_inv = Gauss(Int(1));
  else if (dlead == Gauss(Int(-1)))
    dlead_inv = Gauss(Int(-1));
  else if (dlead == Gauss(Int(0), Int(1)))
    dlead_inv = Gauss(Int(0), Int(-1));
  else if (dlead == Gauss(Int(0), Int(-1)))
    dlead_inv = Gauss(Int(0), Int(1));
  else
    throw laurent_error("division requires a unit leading coefficient");

  while (!rem.is_zero()) {
    int rtop = rem.terms_.rbegin()->first;
    int rbot = rem.terms_.begin()->first;
    if (rtop - rbot < dtop - dbot) break;
    Gauss qc = rem.terms_.rbegin()->second * dlead_inv;
    int qe = rtop - dtop;
    quot.terms_[qe] += qc;
    GaussPoly sub(var_);
    for (const auto& [e, c] : divisor.terms_) sub.terms_[e + qe] = c * qc;
    rem = rem + (sub * Gauss(Int(-1)));
  }
  quot.prune();
  if (!rem.is_zero())
    throw laurent_error("nonzero remainder in exact division (substitution inconsistency)");
  return quot;
}

LaurentPoly GaussPoly::to_real() const {
  LaurentPoly p(var_);
  for (const auto& [e, c] : terms_) {
    if (!c.is_real())
      throw laurent_error("nonzero imaginary residue after substitution");
    p.set_coeff(e, c.re);
  }
  return p;
}

// ---------------------------------------------------------------------------
// LaurentPoly2

LaurentPoly2 LaurentPoly2::monomial(int l_half, int m_half, Gauss coeff) {
  LaurentPoly2 p;
  if (!coeff.is_zero()) p.terms_[{l_half, m_half}] = std::move(coeff);
  return p;
}

void LaurentPoly2::prune() {
  for (auto it = terms_.begin(); it != terms_.end();) {
    it = it->second.is_zero() ? terms_.erase(it) : std::next(it);
  }
}

bool LaurentPoly2::is_real() const {
  for (const auto& [k, c] : terms_)
    if (!c.is_real()) return false;
  return true;
}

LaurentPoly2 LaurentPoly2::operator-() const {
  LaurentPoly2 r;
  for (const auto& [k, c] : terms_) r.terms_[k] = -c;
  return r;
}

LaurentPoly2 LaurentPoly2::operator+(const LaurentPoly2& o) const {
  LaurentPoly2 r = *this;
  for (const auto& [k, c] : o.terms_) r.terms_[k] += c;
  r.prune();
  return r;
}

LaurentPoly2 LaurentPoly2::operator-(const LaurentPoly2& o) const { return *this + (-o); }

LaurentPoly2 LaurentPoly2::operator*(const LaurentPoly2& o) const {
  LaurentPoly2 r;
  for (const auto& [k1, c1] : terms_)
    for (const auto& [k2, c2] : o.terms_)
      r.terms_[{k1.first + k2.first, k1.second + k2.second}] += c1 * c2;
  r.prune();
  return r;
}

LaurentPoly2& LaurentPoly2::operator+=(const LaurentPoly2& o) {
  *this = *this + o;
  return *this;
}

bool LaurentPoly2::operator==(const LaurentPoly2& o) const { return terms_ == o.terms_; }

LaurentPoly2 LaurentPoly2::pow(unsigned n) const {
  LaurentPoly2 acc = unit();
  for (unsigned i = 0; i < n; ++i) acc = acc * *this;
  return acc;
}

LaurentPoly2 LaurentPoly2::conjugate_l() const {
  LaurentPoly2 r;
  for (const auto& [k, c] : terms_) r.terms_[{-k.first, k.second}] = c;
  return r;
}

LaurentPoly LaurentPoly2::substitute(const GaussPoly& l_image, const GaussPoly& m_image) const {
  check_same_var(l_image.var(), m_image.var());
  const std::string& var = l_image.var();
  if (is_zero()) return LaurentPoly::zero(var);

  // l powers substitute directly; the image must be an invertible monomial
  // when negative powers occur.
  auto l_power = [&](int half_exp) -> GaussPoly {
    int whole = half_exp / 2;
    if (half_exp % 2 != 0) throw laurent_error("half-integer power of l");
    if (whole >= 0) return l_image.pow(static_cast<unsigned>(whole));
    if (l_image.terms().size() != 1)
      throw laurent_error("negative l power needs a monomial image");
    const auto& [e, c] = *l_image.terms().begin();
    Gauss cinv;
    if (c == Gauss(Int(1)))
      cinv = Gauss(Int(1));
    else if (c == Gauss(Int(-1)))
      cinv = Gauss(Int(-1));
    else if (c == Gauss(Int(0), Int(1)))
      cinv = Gauss(Int(0), Int(-1));
    else if (c == Gauss(Int(0), Int(-1)))
      cinv = Gauss(Int(0), Int(1));
    else
      throw laurent_error("l image is not a unit monomial");
    return GaussPoly::monomial(var, -e, cinv).pow(static_cast<unsigned>(-whole));
  };

  // Group by m exponent, clear denominators, divide once at the end.
  int m_min = 0;
  for (const auto& [k, c] : terms_) m_min = std::min(m_min, k.second / 2);

  GaussPoly numerator(var);
  for (const auto& [k, c] : terms_) {
    if (k.second % 2 != 0) throw laurent_error("half-integer power of m");
    int m_pow = k.second / 2;
    GaussPoly term = l_power(k.first) * Gauss(c);
    term = term * m_image.pow(static_cast<unsigned>(m_pow - m_min));
    numerator = numerator + term;
  }
  GaussPoly result =
      m_min < 0 ? numerator.div_exact(m_image.pow(static_cast<unsigned>(-m_min))) : numerator;
  return result.to_real();
}

std::string LaurentPoly2::str() const {
  if (terms_.empty()) return "0";
  // Display order of the result tables: ascending M, then ascending L.
  std::vector<std::pair<Key, Gauss>> by_m(terms_.begin(), terms_.end());
  std::sort(by_m.begin(), by_m.end(), [](const auto& a, const auto& b) {
    if (a.first.second != b.first.second) return a.first.second < b.first.second;
    return a.first.first < b.first.first;
  });

  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : by_m) {
    if (!c.is_real()) {
      os << (first ? "" : " + ") << "(" << c.re.str() << "+" << c.im.str() << "i)"
         << "M^{" << exp_str(k.second) << "}L^{" << exp_str(k.first) << "}";
      first = false;
      continue;
    }
    const Int& v = c.re;
    Int a = v < 0 ? Int(-v) : v;
    if (first) {
      if (v < 0) os << "-";
      first = false;
    } else {
      os << (v < 0 ? " - " : " + ");
    }
    bool has_var = k.first != 0 || k.second != 0;
    if (a != 1 || !has_var) os << a;
    if (k.second != 0) {
      os << "M";
      if (k.second != 2) os << "^{" << exp_str(k.second) << "}";
    }
    if (k.first != 0) {
      os << "L";
      if (k.first != 2) os << "^{" << exp_str(k.first) << "}";
    }
  }
  return os.str();
}

LaurentPoly2 LaurentPoly2::parse(const std::string& text) {
  LaurentPoly2 p;
  size_t i = 0;
  const size_t n = text.size();
  auto skip_ws = [&] {
    while (i < n && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };

  while (true) {
    skip_ws();
    if (i >= n) break;
    int sign = 1;
    if (text[i] == '+') {
      ++i;
    } else if (text[i] == '-') {
      sign = -1;
      ++i;
    }
    skip_ws();
    Int coeff = 1;
    if (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) {
      size_t start = i;
      while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
      coeff = Int(text.substr(start, i - start));
    }
    int le = 0, me = 0;
    bool saw_var = true;
    while (saw_var) {
      skip_ws();
      saw_var = false;
      if (i < n && (text[i] == 'M' || text[i] == 'm' || text[i] == 'L' || text[i] == 'l')) {
        bool is_m = text[i] == 'M' || text[i] == 'm';
        ++i;
        int e = 1;
        skip_ws();
        if (i < n && text[i] == '^') {
          ++i;
          skip_ws();
          bool brace = i < n && text[i] == '{';
          if (brace) ++i;
          size_t start = i;
          if (i < n && (text[i] == '+' || text[i] == '-')) ++i;
          while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
          e = std::stoi(text.substr(start, i - start));
          if (brace) {
            if (i >= n || text[i] != '}') throw laurent_error("unclosed exponent brace");
            ++i;
          }
        }
        (is_m ? me : le) += e;
        saw_var = true;
      }
    }
    p.terms_[{2 * le, 2 * me}] += Gauss(sign * coeff);
  }
  p.prune();
  return p;
}

std::string LaurentPoly2::json() const {
  nlohmann::json j;
  j["variables"] = {"l", "m"};
  j["terms"] = nlohmann::json::array();
  for (const auto& [k, c] : terms_) {
    if (!c.is_real()) throw laurent_error("refusing to serialize non-real polynomial");
    j["terms"].push_back(
        {{"exponent_l", k.first}, {"exponent_m", k.second}, {"coefficient", c.re.str()}});
  }
  return j.dump();
}

LaurentPoly2 LaurentPoly2::from_json_text(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  LaurentPoly2 p;
  for (const auto& t : j.at("terms")) {
    Int c(t.at("coefficient").get<std::string>());
    p.terms_[{t.at("exponent_l").get<int>(), t.at("exponent_m").get<int>()}] += Gauss(c);
  }
  p.prune();
  return p;
}

}  // namespace skein
