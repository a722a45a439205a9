#include <doctest.h>

#include <cmath>
#include <numeric>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "abslab/analytic.hpp"

using namespace abslab::analytic;

namespace {

using Wide = boost::multiprecision::number<boost::multiprecision::cpp_bin_float<50>, boost::multiprecision::et_off>;

struct Rational {
  long long num = 0;
  long long den = 1;

  Rational(long long n = 0, long long d = 1) : num(n), den(d) {
    if (den < 0) num = -num, den = -den;
    const long long g = std::gcd(num, den);
    if (g > 1) num /= g, den /= g;
  }
  friend Rational operator+(Rational a, Rational b) { return {a.num * b.den + b.num * a.den, a.den * b.den}; }
  friend Rational operator-(Rational a, Rational b) { return {a.num * b.den - b.num * a.den, a.den * b.den}; }
  friend Rational operator*(Rational a, Rational b) { return {a.num * b.num, a.den * b.den}; }
  friend bool operator==(Rational a, Rational b) { return a.num == b.num && a.den == b.den; }
};

using Series = std::vector<Rational>;
constexpr int kTerms = 9;

Series mul(const Series& a, const Series& b) {
  Series out(kTerms);
  for (int i = 0; i < kTerms; ++i)
    for (int j = 0; i + j < kTerms; ++j) out[i + j] = out[i + j] + a[i] * b[j];
  return out;
}

// 1 / (1 - c u)
Series geometric(Rational c) {
  Series out(kTerms);
  Rational power(1);
  for (int i = 0; i < kTerms; ++i, power = power * c) out[i] = power;
  return out;
}

// square root of a series with constant term 1
Series root(const Series& a) {
  Series b(kTerms);
  b[0] = 1;
  for (int k = 1; k < kTerms; ++k) {
    Rational acc = a[k];
    for (int i = 1; i < k; ++i) acc = acc - b[i] * b[k - i];
    b[k] = acc * Rational(1, 2);
  }
  return b;
}

Series linear(Rational c0, Rational c1) {
  Series out(kTerms);
  out[0] = c0;
  out[1] = c1;
  return out;
}

// Coefficients of thm1_f in powers of u = 1/s, from exact series arithmetic.
Series thm1_coefficients() {
  const Series a = root(mul(linear(1, -1), geometric(-1)));                          // sqrt((s-1)/(s+1))
  const Series b = root(mul(linear(1, Rational(-3, 2)), geometric(Rational(1, 2))));  // sqrt((2s-3)/(2s-1))
  const Series c = root(linear(1, -1));                                               // sqrt(1-1/s)
  Series d(kTerms);
  for (int i = 0; i < kTerms; ++i) d[i] = a[i] - b[i];
  const Series scaled = mul(linear(1, -1), d);  // (1-u)(A-B); constant term vanishes
  Series out(kTerms - 1);
  for (int k = 0; k + 1 < kTerms; ++k) out[k] = Rational(2) * scaled[k + 1] + c[k];
  return out;
}

}  // namespace

TEST_CASE("f and g values") {
  CHECK(f_xy(1.0, 1.0) == 0.0);
  CHECK(f_xy(2.0, 3.0) == doctest::Approx(std::sqrt(3.0 / 5)).epsilon(1e-15));
  CHECK(f_xy(3.0, 3.0) == doctest::Approx(0.8164966).epsilon(1e-7));
  CHECK(g_s(1.0, 1.0, 2.0) == doctest::Approx(0.1297565).epsilon(1e-6));
  CHECK(g_s(1.0, 1.0, 3.0) == doctest::Approx(0.0674899).epsilon(1e-6));
  CHECK(g_s(1e-12, 2.0, 5.0) == doctest::Approx(0.0).epsilon(1e-9));
  CHECK_THROWS_AS(f_xy(0.5, 1.0), std::domain_error);
}

TEST_CASE("merge bound function") {
  CHECK(lemma2_f(3.0, 3.0) == doctest::Approx(0.5465370).epsilon(1e-7));
  CHECK(lemma2_f(4.0, 3.0) > 0);
  CHECK(std::isfinite(lemma2_f(4.0, 3.0)));
  CHECK_THROWS_AS(lemma2_f(3.0, 4.0), std::domain_error);
  CHECK_THROWS_AS(lemma2_f(2.5, 2.5), std::domain_error);
}

TEST_CASE("thm1_f") {
  for (int s = 3; s <= 100; ++s) {
    CHECK(thm1_f<double>(s) > 0);
    CHECK(thm1_f<double>(s + 1) < thm1_f<double>(s));
  }
  CHECK(thm1_f(1e8) < 1e-7);
  CHECK_THROWS_AS(thm1_f(2.9), std::domain_error);
}

TEST_CASE("thm1_f series coefficients against exact series arithmetic") {
  const Series coeff = thm1_coefficients();
  CHECK(coeff[0] == Rational(0));
  for (int k = 0; k < 6; ++k) {
    CHECK(coeff[k + 1] == Rational(kThm1SeriesExact[k].numerator, kThm1SeriesExact[k].denominator));
    CHECK_FALSE(coeff[k + 1] == Rational(kThm1SeriesPrinted[k].numerator, kThm1SeriesPrinted[k].denominator));
  }
  CHECK(coeff[7] == Rational(21333, 16384));
}

TEST_CASE("thm1_f series tail in extended precision") {
  for (double s : {1e1, 1e2, 1e3, 1e4}) {
    const Wide ws(s);
    const Wide exact_tail = abs(thm1_f(ws) - thm1_series(kThm1SeriesExact, ws)) * pow(ws, 7);
    CHECK(exact_tail <= 10);
    const Wide printed_tail = abs(thm1_f(ws) - thm1_series(kThm1SeriesPrinted, ws)) * pow(ws, 7);
    CHECK(printed_tail > 10);
  }
}

TEST_CASE("h cases") {
  CHECK(h_case(HCase::H1, 4.0) == doctest::Approx(-0.0184831).epsilon(1e-5));
  CHECK(h_case(HCase::H2, 5.0) == doctest::Approx(-0.0027525).epsilon(1e-4));
  CHECK(h_case(HCase::H3, 4.0) == doctest::Approx(-0.0052409).epsilon(1e-4));
  CHECK(h_case(HCase::H4, 7.0) == doctest::Approx(-0.0005242).epsilon(1e-3));
  CHECK_THROWS_AS(h_case(HCase::H1, 2.0), std::domain_error);
}

TEST_CASE("A^2 - B^2") {
  // At t = 1 the radical side is -14592; the stated quintic gives -1216.
  CHECK(ab_identity(AbCase::Case1, 1.0) == doctest::Approx(-14592).epsilon(1e-12));
  CHECK(ab_polynomial_printed(AbCase::Case1, 1.0) == -1216);
  for (int t = 1; t <= 20; ++t) {
    const double radical1 = ab_identity<double>(AbCase::Case1, t);
    CHECK(ab_polynomial_exact<double>(AbCase::Case1, t) == doctest::Approx(radical1).epsilon(1e-9));
    const double radical3 = ab_identity<double>(AbCase::Case3, t);
    CHECK(ab_polynomial_printed<double>(AbCase::Case3, t) == doctest::Approx(radical3).epsilon(1e-9));
  }
  for (double t = 1; t <= 100; t += 0.25) {
    CHECK(ab_polynomial_printed(AbCase::Case1, t) <= 0);
    CHECK(ab_polynomial_printed(AbCase::Case3, t) <= 0);
  }
  CHECK_THROWS_AS(ab_identity(AbCase::Case3, 0.5), std::domain_error);
}

TEST_CASE("subcase table") {
  CHECK(subcase24_rhs(4, 0) == doctest::Approx(-0.0364442).epsilon(1e-5));
  CHECK(subcase24_rhs(6, 0) == doctest::Approx(-0.1005855).epsilon(1e-6));
  int points = 0;
  for (int dw = 4; dw <= 6; ++dw)
    for (int k = 0; k <= dw; ++k, ++points) CHECK(subcase24_rhs(dw, k) < 0);
  CHECK(points == 18);
}

TEST_CASE("derivatives") {
  const double h = 1e-6;
  for (double x : {1.5, 2.0, 7.25, 30.0})
    for (double y : {1.5, 3.0, 12.0}) {
      const double fd = (f_xy(x + h, y) - f_xy(x - h, y)) / (2 * h);
      CHECK(df_dx(x, y) == doctest::Approx(fd).epsilon(1e-6));
    }
  for (double x : {5.0, 12.0})
    for (double y : {3.5, 4.5}) {
      const double fd = (lemma2_f(x, y + h) - lemma2_f(x, y - h)) / (2 * h);
      CHECK(lemma2_df_dy(x, y) == doctest::Approx(fd).epsilon(1e-5));
    }
}

TEST_CASE("monotone scans report zero violations on their default grids") {
  for (auto id : all_function_ids()) {
    const auto report = scan_monotone(id);
    INFO(to_string(id));
    CHECK(report.ok());
    CHECK(report.points > 0);
    CHECK(report.max_margin > 0);
  }
}
