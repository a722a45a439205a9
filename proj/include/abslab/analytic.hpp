#pragma once

// Scalar functions behind the ABS extremal inequalities. Everything is
// templated on the scalar type so the same expressions evaluate in double
// and in boost::multiprecision types (the asymptotic checks need the
// latter: thm1_f loses about log10(s) digits to cancellation).

#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace abslab::analytic {

namespace detail {
inline void require(bool ok, const char* what) {
  if (!ok) throw std::domain_error(what);
}
}  // namespace detail

/// sqrt(1 - 2/t), the ABS weight as a function of the degree sum. Concave for t > 2.
template <typename Scalar>
Scalar phi(const Scalar& t) {
  using std::sqrt;
  detail::require(t >= 2, "phi: argument below 2");
  return sqrt(Scalar(1) - Scalar(2) / t);
}

/// f(x, y) = sqrt(1 - 2/(x+y)).
template <typename Scalar>
Scalar f_xy(const Scalar& x, const Scalar& y) {
  detail::require(x + y >= 2, "f_xy: x + y below 2");
  return phi<Scalar>(x + y);
}

/// Closed form of the first partials of f: (x+y-2)^(-1/2) (x+y)^(-3/2).
template <typename Scalar>
Scalar df_dx(const Scalar& x, const Scalar& y) {
  using std::sqrt;
  detail::require(x + y > 2, "df_dx: x + y must exceed 2");
  const Scalar sum = x + y;
  return Scalar(1) / (sqrt(sum - 2) * sum * sqrt(sum));
}

/// g_s(x, y) = f(x+s, y) - f(x, y).
template <typename Scalar>
Scalar g_s(const Scalar& s, const Scalar& x, const Scalar& y) {
  return f_xy<Scalar>(x + s, y) - f_xy<Scalar>(x, y);
}

/// Lower bound on ABS(T) - ABS(T') after merging adjacent branching
/// vertices of degrees x >= y >= 3:
///   (x-1)(f(x,1) - f(x+y-1,0)) + (y-1)(f(y,1) - f(x+y-1,0)) + f(x,y)
template <typename Scalar>
Scalar lemma2_f(const Scalar& x, const Scalar& y) {
  detail::require(y >= 3 && x >= y, "lemma2_f: requires x >= y >= 3");
  const Scalar merged = phi<Scalar>(x + y - 1);
  return (x - 1) * (phi<Scalar>(x + 1) - merged) + (y - 1) * (phi<Scalar>(y + 1) - merged) + phi<Scalar>(x + y);
}

/// Closed-form partial of lemma2_f in y.
template <typename Scalar>
Scalar lemma2_df_dy(const Scalar& x, const Scalar& y) {
  using std::sqrt;
  detail::require(y >= 3 && x >= y, "lemma2_df_dy: requires x >= y >= 3");
  const Scalar s = x + y;
  return Scalar(1) / (s * sqrt(s) * sqrt(s - 2)) - (s - 2) / ((s - 1) * sqrt(s - 1) * sqrt(s - 3)) -
         sqrt((s - 3) / (s - 1)) + (y + 2) / (y + 1) * sqrt((y - 1) / (y + 1));
}

/// (y+2)/(y+1) sqrt((y-1)/(y+1)), the increasing term of lemma2_df_dy.
template <typename Scalar>
Scalar lemma2_helper(const Scalar& y) {
  using std::sqrt;
  detail::require(y >= 1, "lemma2_helper: y below 1");
  return (y + 2) / (y + 1) * sqrt((y - 1) / (y + 1));
}

/// phi(x+y) - phi(x+y+z-2); increasing in x for x >= 1, min(y, z) >= 3.
/// Not to be confused with psi_decay.
template <typename Scalar>
Scalar psi_concavity(const Scalar& x, const Scalar& y, const Scalar& z) {
  detail::require(x >= 1 && y >= 3 && z >= 3, "psi_concavity: requires x >= 1, y >= 3, z >= 3");
  return phi<Scalar>(x + y) - phi<Scalar>(x + y + z - 2);
}

/// 1 / (t^(3/2) sqrt(t-2)); decreasing for t > 2.
template <typename Scalar>
Scalar psi_decay(const Scalar& t) {
  using std::sqrt;
  detail::require(t > 2, "psi_decay: t must exceed 2");
  return Scalar(1) / (t * sqrt(t) * sqrt(t - 2));
}

/// lemma2_f on the diagonal x = y = s:
///   2(s-1)(sqrt(1 - 2/(s+1)) - sqrt(1 - 2/(2s-1))) + sqrt(1 - 1/s)
template <typename Scalar>
Scalar thm1_f(const Scalar& s) {
  using std::sqrt;
  detail::require(s >= 3, "thm1_f: s below 3");
  return 2 * (s - 1) * (phi<Scalar>(s + 1) - phi<Scalar>(2 * s - 1)) + sqrt(Scalar(1) - Scalar(1) / s);
}

struct SeriesTerm {
  long numerator;
  long denominator;
};

/// Six-term expansion of thm1_f at infinity as originally stated. Its
/// coefficients are wrong from the first term on; kept to detect exactly that.
inline constexpr SeriesTerm kThm1SeriesPrinted[6] = {{7, 4}, {-21, 8}, {77, 64}, {-271, 128}, {283, 512}, {-2525, 1024}};
/// Six-term expansion of thm1_f at infinity, exact.
inline constexpr SeriesTerm kThm1SeriesExact[6] = {{9, 4}, {-9, 4}, {105, 64}, {-49, 32}, {717, 512}, {-601, 512}};

/// sum_k terms[k] / s^(k+1)
template <typename Scalar>
Scalar thm1_series(const SeriesTerm (&terms)[6], const Scalar& s) {
  Scalar total = 0;
  Scalar power = 1;
  for (const auto& term : terms) {
    power *= s;
    total += Scalar(term.numerator) / (Scalar(term.denominator) * power);
  }
  return total;
}

enum class HCase { H1, H2, H3, H4 };

std::string_view to_string(HCase which);

/// The four case functions of the maximum-degree argument (t >= 3):
///   h1 = f(3,3) + f(2,3) - f(3,t) - f(2,2) - (t-2)(f(3,t) - f(3,t-1))
///   h2 = 2f(3,3) - f(3,t) - f(2,2) - (t-2)(f(3,t) - f(3,t-1))
///   h3 = 2f(3,3) - f(3,t) - f(2,2) - (t-1)(f(3,t) - f(3,t-1))
///   h4 = f(4,3) - f(4,t) + f(3,3) - f(2,2) - (t-2)(f(4,t) - f(4,t-1))
template <typename Scalar>
Scalar h_case(HCase which, const Scalar& t) {
  detail::require(t >= 3, "h_case: t below 3");
  auto f = [](const Scalar& a, const Scalar& b) { return f_xy<Scalar>(a, b); };
  const Scalar f22 = f(2, 2);
  const Scalar f23 = f(2, 3);
  const Scalar f33 = f(3, 3);
  switch (which) {
    case HCase::H1: return f33 + f23 - f(3, t) - f22 - (t - 2) * (f(3, t) - f(3, t - 1));
    case HCase::H2: return 2 * f33 - f(3, t) - f22 - (t - 2) * (f(3, t) - f(3, t - 1));
    case HCase::H3: return 2 * f33 - f(3, t) - f22 - (t - 1) * (f(3, t) - f(3, t - 1));
    case HCase::H4: return f(4, 3) - f(4, t) + f33 - f22 - (t - 2) * (f(4, t) - f(4, t - 1));
  }
  throw std::domain_error("h_case: unknown case");
}

enum class AbCase { Case1, Case3 };

/// A^2 - B^2 from the radical definitions
///   case1: A = (t^2+3t-2)(t+3)^2 sqrt((t+1)(t+2)),  B = (t^2+5t+2)(t+2)^2 sqrt(t(t+3))
///   case3: A = (t^2+3t-1)(t+3)^2 sqrt((t+1)(t+2)),  B = (t^2+5t+3)(t+2)^2 sqrt(t(t+3))
template <typename Scalar>
Scalar ab_identity(AbCase which, const Scalar& t) {
  using std::sqrt;
  detail::require(t >= 1, "ab_identity: t below 1");
  const bool first = which == AbCase::Case1;
  const Scalar a = (t * t + 3 * t - (first ? 2 : 1)) * (t + 3) * (t + 3) * sqrt((t + 1) * (t + 2));
  const Scalar b = (t * t + 5 * t + (first ? 2 : 3)) * (t + 2) * (t + 2) * sqrt(t * (t + 3));
  return a * a - b * b;
}

/// The polynomial stated for A^2 - B^2:
///   case1: -14t^5 - 137t^4 - 456t^3 - 577t^2 - 140t + 108
///   case3: -(t+2)(t+3)(10t^5 + 97t^4 + 328t^3 + 447t^2 + 180t - 27)
template <typename Scalar>
Scalar ab_polynomial_printed(AbCase which, const Scalar& t) {
  if (which == AbCase::Case1)
    return -(((((14 * t + 137) * t + 456) * t + 577) * t + 140) * t) + 108;
  return -(t + 2) * (t + 3) * (((((10 * t + 97) * t + 328) * t + 447) * t + 180) * t - 27);
}

/// Exact expansions of A^2 - B^2. Case 1 carries the factor (t+2)(t+3)
/// missing from the printed form.
template <typename Scalar>
Scalar ab_polynomial_exact(AbCase which, const Scalar& t) {
  if (which == AbCase::Case1)
    return -(t + 2) * (t + 3) * (((((14 * t + 137) * t + 456) * t + 577) * t + 140) * t - 108);
  return ab_polynomial_printed(AbCase::Case3, t);
}

/// Right-hand side of the last case bound as originally stated, for dw in {4,5,6},
/// 0 <= k <= dw:
///   (4k+1)f(3,3) - 3k f(3,4) - k f(2,2) - f(4,dw)
///     - (k-2)(f(4,dw) - f(3,dw-1)) - (dw-k-1)(f(3,dw) - f(3,dw-1))
double subcase24_rhs(int dw, int k);

// ---------------------------------------------------------------------------
// Monotonicity scans

enum class FunctionId {
  Lemma2DecreasingInY,
  GsDecreasingInX,
  GsDecreasingInY,
  FIncreasingInX,
  H1Decreasing,
  H2Decreasing,
  H3Decreasing,
  H4Decreasing,
  Thm1Decreasing,
  PsiConcavityIncreasingInX,
  PsiDecayDecreasing,
  Lemma2HelperIncreasing,
};

std::string_view to_string(FunctionId id);
std::vector<FunctionId> all_function_ids();

struct Range {
  double lo;
  double hi;
  double step;

  std::vector<double> values() const;
};

/// `sweep` is the variable the monotonicity claim is about. `outer` and
/// `param` fix the other arguments (which ones depends on the function; see
/// `describe`).
struct ScanGrid {
  Range sweep;
  std::optional<Range> outer;
  std::optional<Range> param;
};

/// The grid each claim is checked on by default.
ScanGrid default_grid(FunctionId id);
std::string describe(FunctionId id, const ScanGrid& grid);

struct Violation {
  std::vector<double> point;  ///< arguments at the left end of the failing step
  double value;               ///< the forward difference
  std::string expected_sign;  ///< "negative" or "positive"
};

struct MonotoneScanReport {
  FunctionId function_id;
  std::string grid;
  std::vector<Violation> violations;
  double max_margin;  ///< smallest slack in the claimed direction; negative iff violated
  long points = 0;

  bool ok() const { return violations.empty(); }
};

/// Forward differences along `sweep` at every grid point. Throws
/// std::invalid_argument for an empty grid.
MonotoneScanReport scan_monotone(FunctionId id, const ScanGrid& grid);
inline MonotoneScanReport scan_monotone(FunctionId id) { return scan_monotone(id, default_grid(id)); }

}  // namespace abslab::analytic
