#pragma once

#include <string>

#include <json.hpp>

#include "abslab/analytic.hpp"
#include "abslab/extremal.hpp"
#include "abslab/tree.hpp"

namespace abslab {

nlohmann::json edges_json(const Graph& g);
nlohmann::json to_json(const ExtremalCertificate& cert);
nlohmann::json to_json(const analytic::MonotoneScanReport& report);

std::string csv_header();
/// family,n,p,candidates,minimum,bound,printed_bound,matches,printed_matches,minimizers
std::string csv_row(const ExtremalCertificate& cert);

/// %.17g
std::string format_real(double value);

}  // namespace abslab
