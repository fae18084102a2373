#include <doctest.h>

#include "skein/laurent.hpp"

#include <random>

using namespace skein;

namespace {

LaurentPoly A(const std::string& text) { return LaurentPoly::parse("A", text); }

LaurentPoly random_poly(std::mt19937& rng, const std::string& var = "A") {
  std::uniform_int_distribution<int> n_terms(0, 5), exp(-6, 6), coeff(-4, 4);
  LaurentPoly p(var);
  int k = n_terms(rng);
  for (int i = 0; i < k; ++i) {
    int e = 2 * exp(rng);
    p.set_coeff(e, p.coeff(e) + coeff(rng));
  }
  return p;
}

}  // namespace

TEST_CASE("binomial square") {
  auto p = A("A^{2} + A^{-2}");
  CHECK(p * p == A("A^{4} + 2 + A^{-4}"));
}

TEST_CASE("additive identity and inverse") {
  auto p = A("-A^{4} - A^{-4}");
  CHECK(p + LaurentPoly::zero("A") == p);
  CHECK((p - p).is_zero());
}

TEST_CASE("pow matches repeated multiplication") {
  auto p = A("-A^{4} - A^{-4}");
  CHECK(p.pow(0) == LaurentPoly::unit("A"));
  CHECK(p.pow(1) == p);
  CHECK(p.pow(2) == A("A^{8} + 2 + A^{-8}"));
  auto q = A("-A^{2} - A^{-2}");
  CHECK(q.pow(2) == A("A^{4} + 2 + A^{-4}"));
}

TEST_CASE("variable tag mismatch is a contract violation") {
  auto p = LaurentPoly::unit("A");
  auto q = LaurentPoly::unit("q");
  CHECK_THROWS_AS((void)(p + q), laurent_error);
  CHECK_THROWS_AS((void)(p * q), laurent_error);
}

TEST_CASE("ring axioms on random polynomials") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    auto p = random_poly(rng), q = random_poly(rng), r = random_poly(rng);
    CHECK((p * q) * r == p * (q * r));
    CHECK(p * (q + r) == p * q + p * r);
    CHECK(p + q == q + p);
    CHECK((p + (-p)).is_zero());
  }
}

TEST_CASE("pow is a homomorphism on exponents") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<unsigned> e(0, 8);
  for (int trial = 0; trial < 40; ++trial) {
    auto p = random_poly(rng);
    unsigned a = e(rng), b = e(rng);
    while (a + b > 8) {
      a = e(rng);
      b = e(rng);
    }
    CHECK(p.pow(a + b) == p.pow(a) * p.pow(b));
  }
}

TEST_CASE("exact division") {
  auto num = A("A^{6} + A^{2}");  // A^2 (1 + A^4)
  CHECK(num.div_exact(A("1 + A^{4}")) == A("A^{2}"));
  CHECK_THROWS_AS(A("A^{4} + 1").div_exact(A("1 + A^{2}")), laurent_error);
  // delta divides delta^3
  auto delta = A("-A^{2} - A^{-2}");
  CHECK(delta.pow(3).div_exact(delta) == delta.pow(2));
}

TEST_CASE("half-unit exponents round-trip through text") {
  auto p = LaurentPoly::parse("q", "3 q^{1/2} - 2 q^{-1/2}");
  CHECK(p.coeff(1) == 3);
  CHECK(p.coeff(-1) == -2);
  auto q = LaurentPoly::parse("q", p.str());
  CHECK(p == q);

  // the factored display of all-half-exponent polynomials
  auto jones_style = LaurentPoly::parse("q", "q^{-1/2} (- q^{6} + 4 q^{5} - q^{-5})");
  CHECK(jones_style.coeff(11) == -1);
  CHECK(jones_style.coeff(9) == 4);
  CHECK(jones_style.coeff(-11) == -1);
  CHECK(LaurentPoly::parse("q", jones_style.str()) == jones_style);
}

TEST_CASE("canonical rendering uses descending exponents") {
  auto p = A("- A^{-4} + 2 - A^{4}");
  CHECK(p.str() == "-A^{4} + 2 - A^{-4}");
}

TEST_CASE("renders whole exponents the way the tables do") {
  auto p = LaurentPoly::parse("t", "t^{2} - 4 t + 6 - 4 t^{-1} + t^{-2}");
  CHECK(p.str() == "t^{2} - 4 t + 6 - 4 t^{-1} + t^{-2}");
}

TEST_CASE("json round trip") {
  auto p = A("-A^{14} - A^{6} - 2 A^{2} - 2 A^{-2} - A^{-6} - A^{-14}");
  CHECK(LaurentPoly::from_json_text(p.json()) == p);
}

TEST_CASE("two-variable arithmetic and rendering") {
  auto p = LaurentPoly2::parse("M^{-2}L^{-2} + 2M^{-2} + M^{-2}L^{2} - M^{2}L^{-2} - 2M^{2} - M^{2}L^{2} + M^{4}");
  CHECK(p.str() ==
        "M^{-2}L^{-2} + 2M^{-2} + M^{-2}L^{2} - M^{2}L^{-2} - 2M^{2} - M^{2}L^{2} + M^{4}");
  CHECK(LaurentPoly2::parse(p.str()) == p);
  CHECK(LaurentPoly2::from_json_text(p.json()) == p);
  CHECK((p - p).is_zero());
}

TEST_CASE("substitution is a ring homomorphism") {
  std::mt19937 rng(23);
  std::uniform_int_distribution<int> le(-2, 2), me(0, 2), c(-3, 3);
  auto l_img = GaussPoly::monomial("q", -2, gauss_i());
  auto m_img = GaussPoly::monomial("q", -1, gauss_i()) +
               GaussPoly::monomial("q", 1, Gauss(Int(0), Int(-1)));
  // Keep l+m exponent parity fixed the way genuine HOMFLY outputs do, so the
  // imaginary units cancel and the result realizes.
  auto random2 = [&] {
    LaurentPoly2 p;
    for (int i = 0; i < 4; ++i) {
      int em = me(rng);
      int el = le(rng) * 2 + (em % 2);
      p += LaurentPoly2::monomial(2 * el, 2 * em, Gauss(Int(c(rng))));
    }
    return p;
  };
  for (int trial = 0; trial < 50; ++trial) {
    auto p = random2(), q = random2();
    auto lhs = (p * q).substitute(l_img, m_img);
    auto rhs = p.substitute(l_img, m_img) * q.substitute(l_img, m_img);
    CHECK(lhs == rhs);
  }
}

TEST_CASE("borromean substitutions reproduce the tables") {
  auto borromean = LaurentPoly2::parse(
      "M^{-2}L^{-2} + 2M^{-2} + M^{-2}L^{2} - M^{2}L^{-2} - 2M^{2} - M^{2}L^{2} + M^{4}");

  // l -> i, m -> i (t^{1/2} - t^{-1/2})
  auto alex_l = GaussPoly::monomial("t", 0, gauss_i());
  auto alex_m = GaussPoly::monomial("t", 1, gauss_i()) +
                GaussPoly::monomial("t", -1, Gauss(Int(0), Int(-1)));
  CHECK(borromean.substitute(alex_l, alex_m) ==
        LaurentPoly::parse("t", "t^{2} - 4 t + 6 - 4 t^{-1} + t^{-2}"));

  // l -> i q^{-1}, m -> i (q^{-1/2} - q^{1/2})
  auto jones_l = GaussPoly::monomial("q", -2, gauss_i());
  auto jones_m = GaussPoly::monomial("q", -1, gauss_i()) +
                 GaussPoly::monomial("q", 1, Gauss(Int(0), Int(-1)));
  CHECK(borromean.substitute(jones_l, jones_m) ==
        LaurentPoly::parse("q", "-q^{3} + 3 q^{2} - 2 q + 4 - 2 q^{-1} + 3 q^{-2} - q^{-3}"));

  // unit polynomial maps to 1 under any substitution
  CHECK(LaurentPoly2::unit().substitute(jones_l, jones_m) == LaurentPoly::unit("q"));
}

TEST_CASE("mirror conjugation") {
  auto p = A("A^{6} - 2 A^{2} + A^{-4}");
  CHECK(p.conjugate() == A("A^{4} - 2 A^{-2} + A^{-6}"));
  CHECK(p.conjugate().conjugate() == p);
}
