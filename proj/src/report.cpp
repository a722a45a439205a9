#include "abslab/report.hpp"

#include <cstdio>

namespace abslab {

using nlohmann::json;

std::string format_real(double value) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

json edges_json(const Graph& g) {
  json edges = json::array();
  for (const auto& e : g.edges()) edges.push_back({e.u, e.v});
  return edges;
}

json to_json(const ExtremalCertificate& cert) {
  json out;
  out["family"] = std::string(to_string(cert.family));
  out["params"] = {{"p", cert.p}};
  if (cert.n) out["params"]["n"] = *cert.n;
  out["orders_searched"] = cert.orders_searched;
  out["candidates"] = cert.candidates;
  out["minimum"] = cert.minimum;

  json minimizers = json::array();
  for (const auto& m : cert.minimizers)
    minimizers.push_back({{"code", m.code.hex()}, {"order", m.tree.order()}, {"value", m.value}, {"edges", edges_json(m.tree)}});
  out["minimizers"] = std::move(minimizers);

  if (cert.bound) {
    out["bound"] = {{"value", cert.bound->value},
                    {"formula", cert.bound->formula},
                    {"printed_formula_value", cert.bound->printed_value},
                    {"matches", cert.bound->matches},
                    {"printed_matches", cert.bound->printed_matches}};
  } else {
    out["bound"] = nullptr;
  }

  json hits = json::array();
  for (const auto& code : cert.tie_tolerance_hits) hits.push_back(code.hex());
  out["tie_tolerance_hits"] = std::move(hits);

  json audits;
  audits["passed"] = cert.property_report.passed();
  if (!cert.property_report.note.empty()) audits["note"] = cert.property_report.note;
  json per = json::array();
  for (const auto& audit : cert.property_report.minimizers) {
    json checks = json::object();
    for (const auto& c : audit.checks) {
      checks[c.name] = {{"passed", c.passed}};
      if (!c.witness.empty()) checks[c.name]["witness"] = c.witness;
    }
    per.push_back({{"code", audit.code.hex()}, {"passed", audit.passed()}, {"checks", std::move(checks)}});
  }
  audits["minimizers"] = std::move(per);
  out["audits"] = std::move(audits);
  if (!cert.note.empty()) out["note"] = cert.note;
  return out;
}

json to_json(const analytic::MonotoneScanReport& report) {
  json violations = json::array();
  for (const auto& v : report.violations)
    violations.push_back({{"point", v.point}, {"value", v.value}, {"expected_sign", v.expected_sign}});
  return {{"function_id", std::string(analytic::to_string(report.function_id))},
          {"grid", report.grid},
          {"points", report.points},
          {"violations", std::move(violations)},
          {"max_margin", report.max_margin}};
}

std::string csv_header() {
  return "family,n,p,candidates,minimum,bound,printed_bound,matches,printed_matches,minimizers\n";
}

std::string csv_row(const ExtremalCertificate& cert) {
  std::string row = std::string(to_string(cert.family)) + "," + (cert.n ? std::to_string(*cert.n) : "") + "," +
                    std::to_string(cert.p) + "," + std::to_string(cert.candidates) + "," + format_real(cert.minimum) + ",";
  if (cert.bound) {
    row += format_real(cert.bound->value) + "," + format_real(cert.bound->printed_value) + "," +
           (cert.bound->matches ? "true" : "false") + "," + (cert.bound->printed_matches ? "true" : "false");
  } else {
    row += ",,,";
  }
  return row + "," + std::to_string(cert.minimizers.size()) + "\n";
}

}  // namespace abslab
