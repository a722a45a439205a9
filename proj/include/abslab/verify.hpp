#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace abslab::verify {

enum class Status {
  Pass,
  Fail,
  ExpectedFailure,  ///< a known misstatement was detected as wrong
  UnexpectedPass,   ///< a known misstatement was not detected
  Info,             ///< finding reported without a pass/fail claim
};

std::string_view to_string(Status s);

struct Check {
  std::string name;
  Status status;
  double margin;  ///< worst-case slack; negative means violated
  std::string detail;
};

struct Section {
  std::string name;
  std::vector<Check> checks;
};

struct Report {
  std::vector<Section> sections;

  bool ok() const;  ///< no Fail and no UnexpectedPass
};

struct Options {
  std::uint64_t seed = 1;
  int workers = 1;
};

Section lemmas_suite(const Options& options);
Section transforms_suite(const Options& options);
Section bounds_suite(const Options& options);

/// suite: lemmas | transforms | bounds | all. Throws std::invalid_argument otherwise.
Report run(std::string_view suite, const Options& options);

nlohmann::json to_json(const Report& report);
std::string to_text(const Report& report);

}  // namespace abslab::verify
