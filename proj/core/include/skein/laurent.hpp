#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace skein {

using Int = boost::multiprecision::cpp_int;

/// Gaussian integer a + b*i.  Imaginary parts appear only transiently while
/// substituting l -> i*q^{-1} etc.; finished invariants are real.
struct Gauss {
  Int re{0};
  Int im{0};

  Gauss() = default;
  Gauss(Int r) : re(std::move(r)) {}
  Gauss(Int r, Int i) : re(std::move(r)), im(std::move(i)) {}
  Gauss(long r) : re(r) {}

  bool is_zero() const { return re == 0 && im == 0; }
  bool is_real() const { return im == 0; }

  Gauss operator-() const { return Gauss(-re, -im); }
  Gauss operator+(const Gauss& o) const { return Gauss(re + o.re, im + o.im); }
  Gauss operator-(const Gauss& o) const { return Gauss(re - o.re, im - o.im); }
  Gauss operator*(const Gauss& o) const {
    return Gauss(re * o.re - im * o.im, re * o.im + im * o.re);
  }
  Gauss& operator+=(const Gauss& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  bool operator==(const Gauss& o) const { return re == o.re && im == o.im; }
};

/// The imaginary unit, for building substitution images.
inline Gauss gauss_i() { return Gauss(Int(0), Int(1)); }

class laurent_error : public std::runtime_error {
 public:
  explicit laurent_error(const std::string& what) : std::runtime_error(what) {}
};

/// Sparse exact Laurent polynomial in one variable.
///
/// Exponents are stored in HALF units: a stored key e stands for var^{e/2}.
/// Whole powers therefore have even keys; the odd keys carry the q^{1/2}
/// prefactors that show up in Jones polynomials of even-component links.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  explicit LaurentPoly(std::string var) : var_(std::move(var)) {}

  /// Monomial c * var^{half_exp/2}.
  static LaurentPoly monomial(const std::string& var, int half_exp, Int coeff);
  static LaurentPoly unit(const std::string& var) { return monomial(var, 0, 1); }
  static LaurentPoly zero(const std::string& var) { return LaurentPoly(var); }

  /// Parses the canonical text form, e.g. "-A^{4} - A^{-4}" or "3 q^{1/2} + 2".
  /// Accepts braces or bare exponents and optional whitespace.
  static LaurentPoly parse(const std::string& var, const std::string& text);

  const std::string& var() const { return var_; }
  const std::map<int, Int>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_unit() const;

  Int coeff(int half_exp) const;
  void set_coeff(int half_exp, Int c);
  int min_exp() const;  // half units; throws on zero polynomial
  int max_exp() const;

  /// True when every exponent is a whole power (all stored keys even).
  bool whole_exponents() const;

  LaurentPoly operator-() const;
  LaurentPoly operator+(const LaurentPoly& o) const;
  LaurentPoly operator-(const LaurentPoly& o) const;
  LaurentPoly operator*(const LaurentPoly& o) const;
  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);
  bool operator==(const LaurentPoly& o) const;

  LaurentPoly operator*(const Int& c) const;

  /// Multiply by c * var^{half_exp/2}.
  LaurentPoly shifted(int half_exp, const Int& c = Int(1)) const;

  LaurentPoly pow(unsigned n) const;

  /// Exact division; throws laurent_error when the remainder is nonzero.
  LaurentPoly div_exact(const LaurentPoly& divisor) const;

  /// Image under var -> var^{-1} (mirror symmetry of the Kauffman bracket).
  LaurentPoly conjugate() const;

  /// Sum of coefficients, i.e. the formal evaluation at var = 1.
  Int eval_at_one() const;

  /// Canonical text: descending exponents, explicit signs, exponent 0 as a
  /// bare coefficient.  All-odd-exponent polynomials are rendered with the
  /// q^{-1/2}(...) prefactor the tables use.
  std::string str() const;

  std::string json() const;
  static LaurentPoly from_json_text(const std::string& text);

 private:
  void prune();
  std::string var_{"A"};
  std::map<int, Int> terms_;  // half-unit exponent -> coefficient
  friend class GaussPoly;
};

/// One-variable Laurent polynomial with Gaussian integer coefficients;
/// the substitution workhorse behind jones() and alexander().
class GaussPoly {
 public:
  GaussPoly() = default;
  explicit GaussPoly(std::string var) : var_(std::move(var)) {}

  static GaussPoly monomial(const std::string& var, int half_exp, Gauss coeff);
  static GaussPoly unit(const std::string& var) { return monomial(var, 0, Gauss(Int(1))); }
  static GaussPoly from_real(const LaurentPoly& p);

  const std::string& var() const { return var_; }
  const std::map<int, Gauss>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  GaussPoly operator+(const GaussPoly& o) const;
  GaussPoly operator*(const GaussPoly& o) const;
  GaussPoly operator*(const Gauss& c) const;
  GaussPoly pow(unsigned n) const;

  /// Exact division; throws laurent_error on a nonzero remainder (this is the
  /// error path that flags a wrong sign convention upstream).
  GaussPoly div_exact(const GaussPoly& divisor) const;

  /// Requires every coefficient real; returns the real polynomial.
  LaurentPoly to_real() const;

 private:
  void prune();
  std::string var_{"q"};
  std::map<int, Gauss> terms_;
};

/// Sparse exact Laurent polynomial in the HOMFLY variables (l, m).
/// Exponents are stored in half units for schema uniformity with LaurentPoly,
/// though every HOMFLY value has whole exponents (even keys).
class LaurentPoly2 {
 public:
  using Key = std::pair<int, int>;  // (half-exponent of l, half-exponent of m)

  LaurentPoly2() = default;

  static LaurentPoly2 monomial(int l_half, int m_half, Gauss coeff);
  static LaurentPoly2 unit() { return monomial(0, 0, Gauss(Int(1))); }
  static LaurentPoly2 zero() { return LaurentPoly2(); }

  /// Parses e.g. "M^{-2}L^{-2} + 2M^{-2} + M^{4}" (either variable case).
  static LaurentPoly2 parse(const std::string& text);

  const std::map<Key, Gauss>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_real() const;

  LaurentPoly2 operator-() const;
  LaurentPoly2 operator+(const LaurentPoly2& o) const;
  LaurentPoly2 operator-(const LaurentPoly2& o) const;
  LaurentPoly2 operator*(const LaurentPoly2& o) const;
  LaurentPoly2& operator+=(const LaurentPoly2& o);
  bool operator==(const LaurentPoly2& o) const;

  LaurentPoly2 pow(unsigned n) const;

  /// Image under l -> l^{-1} (mirror image of the oriented link).
  LaurentPoly2 conjugate_l() const;

  /// Substitute 1-variable images for l and m.  Negative powers of m are
  /// handled by putting everything over a power of m_image and dividing
  /// exactly at the end; negative powers of l require l_image to be an
  /// invertible monomial.  The result must come out real.
  LaurentPoly substitute(const GaussPoly& l_image, const GaussPoly& m_image) const;

  /// Canonical text in the tables' display order: ascending M exponent,
  /// then ascending L exponent, uppercase variables.
  std::string str() const;

  std::string json() const;
  static LaurentPoly2 from_json_text(const std::string& text);

 private:
  void prune();
  std::map<Key, Gauss> terms_;
};

}  // namespace skein
