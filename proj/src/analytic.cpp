#include "abslab/analytic.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

namespace abslab::analytic {

std::string_view to_string(HCase which) {
  switch (which) {
    case HCase::H1: return "h1";
    case HCase::H2: return "h2";
    case HCase::H3: return "h3";
    case HCase::H4: return "h4";
  }
  return "?";
}

double subcase24_rhs(int dw, int k) {
  if (dw < 4 || dw > 6 || k < 0 || k > dw)
    throw std::domain_error("subcase24_rhs: requires dw in {4,5,6} and 0 <= k <= dw");
  auto f = [](double a, double b) { return f_xy<double>(a, b); };
  return (4 * k + 1) * f(3, 3) - 3 * k * f(3, 4) - k * f(2, 2) - f(4, dw) - (k - 2) * (f(4, dw) - f(3, dw - 1)) -
         (dw - k - 1) * (f(3, dw) - f(3, dw - 1));
}

std::string_view to_string(FunctionId id) {
  switch (id) {
    case FunctionId::Lemma2DecreasingInY: return "lemma2_f_decreasing_in_y";
    case FunctionId::GsDecreasingInX: return "g_s_decreasing_in_x";
    case FunctionId::GsDecreasingInY: return "g_s_decreasing_in_y";
    case FunctionId::FIncreasingInX: return "f_increasing_in_x";
    case FunctionId::H1Decreasing: return "h1_decreasing";
    case FunctionId::H2Decreasing: return "h2_decreasing";
    case FunctionId::H3Decreasing: return "h3_decreasing";
    case FunctionId::H4Decreasing: return "h4_decreasing";
    case FunctionId::Thm1Decreasing: return "thm1_f_decreasing";
    case FunctionId::PsiConcavityIncreasingInX: return "psi_concavity_increasing_in_x";
    case FunctionId::PsiDecayDecreasing: return "psi_decay_decreasing";
    case FunctionId::Lemma2HelperIncreasing: return "lemma2_helper_increasing";
  }
  return "?";
}

std::vector<FunctionId> all_function_ids() {
  return {FunctionId::Lemma2DecreasingInY, FunctionId::GsDecreasingInX,     FunctionId::GsDecreasingInY,
          FunctionId::FIncreasingInX,      FunctionId::H1Decreasing,        FunctionId::H2Decreasing,
          FunctionId::H3Decreasing,        FunctionId::H4Decreasing,        FunctionId::Thm1Decreasing,
          FunctionId::PsiConcavityIncreasingInX, FunctionId::PsiDecayDecreasing,
          FunctionId::Lemma2HelperIncreasing};
}

std::vector<double> Range::values() const {
  std::vector<double> out;
  if (!(step > 0) || hi < lo) return out;
  for (long i = 0;; ++i) {
    double v = lo + static_cast<double>(i) * step;
    if (v > hi + 1e-9 * step) break;
    out.push_back(v);
  }
  return out;
}

ScanGrid default_grid(FunctionId id) {
  switch (id) {
    case FunctionId::Lemma2DecreasingInY: return {{3, 30, 0.25}, Range{3, 30, 1}, std::nullopt};
    case FunctionId::GsDecreasingInX:
    case FunctionId::GsDecreasingInY: return {{1, 40, 0.5}, Range{1, 40, 0.5}, Range{1, 3, 1}};
    case FunctionId::FIncreasingInX: return {{1, 40, 0.5}, Range{3, 10, 1}, std::nullopt};
    case FunctionId::H1Decreasing:
    case FunctionId::H2Decreasing:
    case FunctionId::H3Decreasing:
    case FunctionId::H4Decreasing: return {{3, 100, 0.25}, std::nullopt, std::nullopt};
    case FunctionId::Thm1Decreasing: return {{3, 100, 0.25}, std::nullopt, std::nullopt};
    case FunctionId::PsiConcavityIncreasingInX: return {{1, 40, 0.5}, Range{3, 20, 1}, Range{3, 20, 1}};
    case FunctionId::PsiDecayDecreasing: return {{2.25, 100, 0.25}, std::nullopt, std::nullopt};
    case FunctionId::Lemma2HelperIncreasing: return {{3, 100, 0.25}, std::nullopt, std::nullopt};
  }
  throw std::invalid_argument("unknown function id");
}

namespace {

struct Axes {
  const char* sweep;
  const char* outer;
  const char* param;
};

Axes axes(FunctionId id) {
  switch (id) {
    case FunctionId::Lemma2DecreasingInY: return {"y", "x", nullptr};
    case FunctionId::GsDecreasingInX: return {"x", "y", "s"};
    case FunctionId::GsDecreasingInY: return {"y", "x", "s"};
    case FunctionId::FIncreasingInX: return {"x", "y", nullptr};
    case FunctionId::Thm1Decreasing: return {"s", nullptr, nullptr};
    case FunctionId::PsiConcavityIncreasingInX: return {"x", "y", "z"};
    case FunctionId::Lemma2HelperIncreasing: return {"y", nullptr, nullptr};
    default: return {"t", nullptr, nullptr};
  }
}

bool increasing_claim(FunctionId id) {
  return id == FunctionId::FIncreasingInX || id == FunctionId::PsiConcavityIncreasingInX ||
         id == FunctionId::Lemma2HelperIncreasing;
}

// Evaluates the scanned function at (sweep, outer, param).
double evaluate(FunctionId id, double sweep, double outer, double param) {
  switch (id) {
    case FunctionId::Lemma2DecreasingInY: return lemma2_f(outer, sweep);
    case FunctionId::GsDecreasingInX: return g_s(param, sweep, outer);
    case FunctionId::GsDecreasingInY: return g_s(param, outer, sweep);
    case FunctionId::FIncreasingInX: return f_xy(sweep, outer);
    case FunctionId::H1Decreasing: return h_case(HCase::H1, sweep);
    case FunctionId::H2Decreasing: return h_case(HCase::H2, sweep);
    case FunctionId::H3Decreasing: return h_case(HCase::H3, sweep);
    case FunctionId::H4Decreasing: return h_case(HCase::H4, sweep);
    case FunctionId::Thm1Decreasing: return thm1_f(sweep);
    case FunctionId::PsiConcavityIncreasingInX: return psi_concavity(sweep, outer, param);
    case FunctionId::PsiDecayDecreasing: return psi_decay(sweep);
    case FunctionId::Lemma2HelperIncreasing: return lemma2_helper(sweep);
  }
  throw std::invalid_argument("unknown function id");
}

std::string format_range(const char* name, const Range& r) {
  std::ostringstream out;
  out << name << " in [" << r.lo << ", " << r.hi << "] step " << r.step;
  return out.str();
}

}  // namespace

std::string describe(FunctionId id, const ScanGrid& grid) {
  const Axes a = axes(id);
  std::string out;
  if (grid.param && a.param) out += format_range(a.param, *grid.param) + "; ";
  if (grid.outer && a.outer) out += format_range(a.outer, *grid.outer) + "; ";
  out += format_range(a.sweep, grid.sweep);
  if (id == FunctionId::Lemma2DecreasingInY) out += " (capped at x)";
  return out;
}

MonotoneScanReport scan_monotone(FunctionId id, const ScanGrid& grid) {
  const Axes a = axes(id);
  const auto sweep = grid.sweep.values();
  const auto outer = a.outer ? (grid.outer ? grid.outer->values() : std::vector<double>{}) : std::vector<double>{0.0};
  const auto param = a.param ? (grid.param ? grid.param->values() : std::vector<double>{}) : std::vector<double>{0.0};
  if (sweep.size() < 2 || outer.empty() || param.empty()) throw std::invalid_argument("scan_monotone: empty grid");

  const bool increasing = increasing_claim(id);
  MonotoneScanReport report{id, describe(id, grid), {}, std::numeric_limits<double>::infinity(), 0};
  for (double p : param) {
    for (double o : outer) {
      std::vector<double> line;
      for (double s : sweep) {
        if (id == FunctionId::Lemma2DecreasingInY && s > o + 1e-12) break;
        line.push_back(s);
      }
      for (std::size_t i = 0; i + 1 < line.size(); ++i) {
        const double diff = evaluate(id, line[i + 1], o, p) - evaluate(id, line[i], o, p);
        const double margin = increasing ? diff : -diff;
        ++report.points;
        report.max_margin = std::min(report.max_margin, margin);
        if (!(margin > 0)) {
          std::vector<double> point;
          if (a.param) point.push_back(p);
          if (a.outer) point.push_back(o);
          point.push_back(line[i]);
          report.violations.push_back({std::move(point), diff, increasing ? "positive" : "negative"});
        }
      }
    }
  }
  if (report.points == 0) throw std::invalid_argument("scan_monotone: grid has no evaluable step");
  return report;
}

}  // namespace abslab::analytic
