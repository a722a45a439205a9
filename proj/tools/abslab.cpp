// abslab: command-line front end for index evaluation, tree enumeration,
// extremal searches and the verification suites.
//
// Exit status: 0 when every requested check passes, 1 on a verification
// failure, 2 on a usage or input error.

#include <chrono>
#include <cstdlib>
#include <ctime>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "abslab/canonical.hpp"
#include "abslab/enumerate.hpp"
#include "abslab/extremal.hpp"
#include "abslab/indices.hpp"
#include "abslab/report.hpp"
#include "abslab/structure.hpp"
#include "abslab/tree_io.hpp"
#include "abslab/verify.hpp"

using nlohmann::json;
using namespace abslab;

namespace {

constexpr int kDefaultBudget = 18;
constexpr int kHardBudget = 20;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Config {
  std::string format;
  bool no_timestamp = false;
  std::optional<int> budget;
  int workers = 1;
  std::uint64_t seed = 1;
};

int order_cap() {
  int cap = kDefaultBudget;
  if (const char* env = std::getenv("ABSLAB_BUDGET")) {
    try {
      cap = std::stoi(env);
    } catch (const std::exception&) {
      throw UsageError("ABSLAB_BUDGET: not an integer: " + std::string(env));
    }
    if (cap < 1 || cap > kHardBudget)
      throw UsageError("ABSLAB_BUDGET: must lie in 1.." + std::to_string(kHardBudget));
  }
  return cap;
}

int budget(const Config& cfg) {
  const int cap = order_cap();
  if (cfg.budget && *cfg.budget > cap)
    throw UsageError("--budget: " + std::to_string(*cfg.budget) + " exceeds the order cap " + std::to_string(cap) +
                     " (raise it with ABSLAB_BUDGET, at most " + std::to_string(kHardBudget) + ")");
  return cfg.budget.value_or(cap);
}

void require_order(const std::string& flag, int n, const Config& cfg) {
  if (n > budget(cfg))
    throw UsageError(flag + ": order " + std::to_string(n) + " exceeds the budget " + std::to_string(budget(cfg)));
}

std::string format_of(const Config& cfg, const std::string& fallback) {
  return cfg.format.empty() ? fallback : cfg.format;
}

std::string utc_now() {
  const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

void emit_json(json body, const Config& cfg) {
  if (!cfg.no_timestamp) body["timestamp"] = utc_now();
  std::cout << body.dump(2) << "\n";
}

Tree load(const std::string& path) {
  if (path == "-") {
    std::string text((std::istreambuf_iterator<char>(std::cin)), std::istreambuf_iterator<char>());
    return parse_tree(text, "<stdin>");
  }
  return read_tree_file(path);
}

json tree_json(const Tree& t) {
  return {{"order", t.order()}, {"code", canonical_code(t).hex()}, {"abs", index_value(t)}, {"edges", edges_json(t)}};
}

int run_index(const Config& cfg, const std::string& kind_name, const std::string& file) {
  const auto kind = parse_index_kind(kind_name);
  if (!kind) throw UsageError("--kind: unknown index '" + kind_name + "' (abs, abc, sc, randic)");
  const Tree t = load(file);
  const double value = index_value(t, *kind);
  const auto fmt = format_of(cfg, "text");
  if (fmt == "json")
    emit_json({{"kind", std::string(to_string(*kind))}, {"order", t.order()}, {"value", value}}, cfg);
  else if (fmt == "csv")
    std::cout << "kind,order,value\n" << to_string(*kind) << "," << t.order() << "," << format_real(value) << "\n";
  else
    std::cout << format_real(value) << "\n";
  return 0;
}

int run_enum(const Config& cfg, int n, std::optional<int> pendent, std::optional<int> max_degree, bool count_only) {
  require_order("--n", n, cfg);
  const EnumSpec spec{.order = n, .pendent = pendent, .max_degree = max_degree};
  const auto fmt = format_of(cfg, "text");
  if (count_only) {
    const auto count = count_trees(spec);
    if (fmt == "json")
      emit_json({{"n", n}, {"pendent", pendent ? json(*pendent) : json(nullptr)},
                 {"max_degree", max_degree ? json(*max_degree) : json(nullptr)}, {"count", count}},
                cfg);
    else if (fmt == "csv")
      std::cout << "n,pendent,max_degree,count\n"
                << n << "," << (pendent ? std::to_string(*pendent) : "") << ","
                << (max_degree ? std::to_string(*max_degree) : "") << "," << count << "\n";
    else
      std::cout << count << "\n";
    return 0;
  }
  if (fmt == "json") {
    json trees = json::array();
    for_each_tree(spec, [&](const Tree& t) { trees.push_back(tree_json(t)); });
    emit_json({{"n", n}, {"count", trees.size()}, {"trees", std::move(trees)}}, cfg);
  } else if (fmt == "csv") {
    std::cout << "index,code,abs\n";
    long i = 0;
    for_each_tree(spec, [&](const Tree& t) {
      std::cout << i++ << "," << canonical_code(t).hex() << "," << format_real(index_value(t)) << "\n";
    });
  } else {
    bool first = true;
    for_each_tree(spec, [&](const Tree& t) {
      if (!first) std::cout << "\n";
      first = false;
      std::cout << format_tree(t);
    });
  }
  return 0;
}

int run_search(const Config& cfg, std::optional<int> n, int p) {
  SearchOptions options;
  options.max_order = budget(cfg);
  options.workers = cfg.workers;
  const auto cert = n ? brute_force_min(*n, p, options) : brute_force_min_gamma_p(p, options);
  const auto fmt = format_of(cfg, "json");
  if (fmt == "csv") {
    std::cout << csv_header() << csv_row(cert);
  } else if (fmt == "text") {
    std::cout << "family " << to_string(cert.family) << ", p = " << p;
    if (n) std::cout << ", n = " << *n;
    std::cout << "\ncandidates " << cert.candidates << "\nminimum " << format_real(cert.minimum) << "\n";
    if (cert.bound)
      std::cout << "bound (" << cert.bound->formula << ") " << format_real(cert.bound->value)
                << (cert.bound->matches ? " matches" : " DOES NOT MATCH") << "\n";
    std::cout << "minimizers " << cert.minimizers.size() << "\n";
    for (const auto& m : cert.minimizers) std::cout << "  " << m.code.hex() << "\n";
  } else {
    emit_json(to_json(cert), cfg);
  }
  return cert.bound && !cert.bound->matches ? 1 : 0;
}

int run_construct(const Config& cfg, int n, int p) {
  require_order("--n", n, cfg);
  const auto members = construct_gamma_star(GammaStarSpec::from_order(n, p));
  const auto fmt = format_of(cfg, "text");
  if (fmt == "json") {
    json out = json::array();
    for (const auto& t : members) out.push_back(tree_json(t));
    emit_json({{"n", n}, {"p", p}, {"count", members.size()}, {"members", std::move(out)}}, cfg);
  } else if (fmt == "csv") {
    std::cout << "index,code,abs\n";
    for (std::size_t i = 0; i < members.size(); ++i)
      std::cout << i << "," << canonical_code(members[i]).hex() << "," << format_real(index_value(members[i])) << "\n";
  } else {
    std::cout << format_tree_stream(members);
  }
  return 0;
}

int run_member(const Config& cfg, int n, int p, const std::string& file) {
  const Tree t = load(file);
  const bool shape = t.order() == n && pendent_count(t) == p;
  const bool member = shape && is_gamma_star_member(t);
  std::string reason;
  if (t.order() != n)
    reason = "order is " + std::to_string(t.order());
  else if (pendent_count(t) != p)
    reason = "pendent count is " + std::to_string(pendent_count(t));
  else if (!member)
    reason = "edge-type counts or maximum degree differ from the extremal family";
  const auto fmt = format_of(cfg, "text");
  if (fmt == "json")
    emit_json({{"n", n}, {"p", p}, {"member", member}, {"code", canonical_code(t).hex()}, {"reason", reason}}, cfg);
  else if (fmt == "csv")
    std::cout << "n,p,member,code\n" << n << "," << p << "," << (member ? "true" : "false") << ","
              << canonical_code(t).hex() << "\n";
  else
    std::cout << (member ? "member" : "not a member: " + reason) << "\n";
  return member ? 0 : 1;
}

int run_verify(const Config& cfg, const std::string& suite) {
  const auto report = verify::run(suite, {.seed = cfg.seed, .workers = cfg.workers});
  const auto fmt = format_of(cfg, "text");
  if (fmt == "json") {
    auto body = verify::to_json(report);
    body["suite"] = suite;
    body["seed"] = cfg.seed;
    emit_json(std::move(body), cfg);
  } else if (fmt == "csv") {
    std::cout << "section,check,status,margin\n";
    for (const auto& s : report.sections)
      for (const auto& c : s.checks)
        std::cout << s.name << ",\"" << c.name << "\"," << verify::to_string(c.status) << "," << format_real(c.margin)
                  << "\n";
  } else {
    std::cout << verify::to_text(report);
  }
  return report.ok() ? 0 : 1;
}

int run_bounds(const Config& cfg, int n, int p) {
  const double edge_count = gamma_np_lower_bound(n, p);
  const double printed = gamma_np_printed_bound(n, p);
  const auto fmt = format_of(cfg, "text");
  if (fmt == "json")
    emit_json({{"n", n}, {"p", p}, {"edge_count", edge_count}, {"printed", printed}, {"difference", printed - edge_count}},
              cfg);
  else if (fmt == "csv")
    std::cout << "n,p,edge_count,printed,difference\n"
              << n << "," << p << "," << format_real(edge_count) << "," << format_real(printed) << ","
              << format_real(printed - edge_count) << "\n";
  else
    std::cout << "edge-count " << format_real(edge_count) << "\nprinted    " << format_real(printed)
              << "\ndifference " << format_real(printed - edge_count) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"ABS index toolkit for trees"};
  app.require_subcommand(1);
  Config cfg;
  app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"json", "csv", "text"}));
  app.add_flag("--no-timestamp", cfg.no_timestamp, "Omit the timestamp field from JSON reports");
  app.add_option("--budget", cfg.budget, "Largest tree order a command may visit")->check(CLI::PositiveNumber);
  app.add_option("--workers", cfg.workers, "Search threads")->check(CLI::Range(1, 256));
  app.add_option("--seed", cfg.seed, "Seed for randomized samples");

  std::string kind = "abs";
  std::string file;
  int n = 0;
  int p = 0;
  std::optional<int> opt_n;
  std::optional<int> pendent;
  std::optional<int> max_degree;
  bool count_only = false;
  std::string suite;

  auto* index = app.add_subcommand("index", "Evaluate a degree-based index on a tree file");
  index->add_option("--kind", kind, "abs | abc | sc | randic");
  index->add_option("file", file, "Tree file ('-' reads standard input)")->required();

  auto* enumerate = app.add_subcommand("enum", "Enumerate free trees");
  enumerate->add_option("--n", n, "Order")->required()->check(CLI::Range(1, kHardBudget));
  enumerate->add_option("--pendent", pendent, "Pendent vertex count")->check(CLI::NonNegativeNumber);
  enumerate->add_option("--max-degree", max_degree, "Maximum degree")->check(CLI::PositiveNumber);
  enumerate->add_flag("--count-only", count_only, "Print the count instead of the trees");

  auto* search = app.add_subcommand("search", "Exhaustive ABS minimum");
  search->add_option("--n", opt_n, "Order (omit for the pendent-only family)")->check(CLI::PositiveNumber);
  search->add_option("--pendent", p, "Pendent vertex count")->required()->check(CLI::PositiveNumber);

  auto* construct = app.add_subcommand("construct", "Members of the extremal family");
  construct->add_option("--n", n, "Order")->required()->check(CLI::PositiveNumber);
  construct->add_option("--pendent", p, "Pendent vertex count")->required()->check(CLI::PositiveNumber);

  auto* member = app.add_subcommand("member", "Test a tree file for extremal-family membership");
  member->add_option("--n", n, "Order")->required()->check(CLI::PositiveNumber);
  member->add_option("--pendent", p, "Pendent vertex count")->required()->check(CLI::PositiveNumber);
  member->add_option("file", file, "Tree file ('-' reads standard input)")->required();

  auto* verify_cmd = app.add_subcommand("verify", "Run verification suites");
  verify_cmd->add_option("--suite", suite, "lemmas | transforms | bounds | all")
      ->required()
      ->check(CLI::IsMember({"lemmas", "transforms", "bounds", "all"}));

  auto* bounds = app.add_subcommand("bounds", "Edge-count and printed bound side by side");
  bounds->add_option("--n", n, "Order")->required()->check(CLI::PositiveNumber);
  bounds->add_option("--pendent", p, "Pendent vertex count")->required()->check(CLI::PositiveNumber);

  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*index) return run_index(cfg, kind, file);
    if (*enumerate) return run_enum(cfg, n, pendent, max_degree, count_only);
    if (*search) return run_search(cfg, opt_n, p);
    if (*construct) return run_construct(cfg, n, p);
    if (*member) return run_member(cfg, n, p, file);
    if (*verify_cmd) return run_verify(cfg, suite);
    if (*bounds) return run_bounds(cfg, n, p);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
