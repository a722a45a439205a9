#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "abslab/canonical.hpp"
#include "abslab/tree.hpp"

namespace abslab {

/// Parameters of the extremal family for order n = 3p - 2 + t.
struct GammaStarSpec {
  int p = 3;
  int t = 0;

  int order() const { return 3 * p - 2 + t; }
  /// Throws std::invalid_argument unless p >= 3 and n >= 3p - 2.
  static GammaStarSpec from_order(int n, int p);
};

/// p sqrt((p-1)/(p+1)), the minimum ABS over trees with p pendent vertices.
double gamma_p_lower_bound(int p);

/// Minimum ABS over trees of order n with p pendent vertices, p >= 3,
/// n >= 3p - 2, as the edge-type inner product
///   p f(1,2) + t f(2,2) + p f(2,3) + (p-3) f(3,3),   t = n - 3p + 2.
double gamma_np_lower_bound(int n, int p);

/// The closed form as originally stated,
///   (2/sqrt6 + sqrt(3/5) + 1/sqrt3) p + (sqrt2/2) t + 4/sqrt6,
/// which exceeds the true minimum by 4/sqrt6 + sqrt6 for every n, p.
double gamma_np_printed_bound(int n, int p);

/// One representative per isomorphism class of the extremal family: every
/// base tree of order p-2 and maximum degree 3 gets 3-i pendent paths of
/// length two at each vertex of degree i (i = 0 for the single-vertex base),
/// then t extra vertices are distributed over the p pendent paths in every
/// possible way. Emission order is deterministic.
std::vector<Tree> construct_gamma_star(const GammaStarSpec& spec);

/// Maximum degree 3 and edge-type counts {(1,2): p, (2,2): t, (2,3): p,
/// (3,3): p-3} with p the pendent count and t = n - 3p + 2 >= 0.
/// False for order < 7.
bool is_gamma_star_member(const Tree& t);

enum class Family { GammaP, GammaNP };
std::string_view to_string(Family family);

struct SearchOptions {
  int max_order = 18;
  int workers = 1;
  double tie_tolerance = 1e-9;
};

struct Minimizer {
  CanonicalCode code;
  Tree tree;
  double value;
};

struct AuditCheck {
  std::string name;
  bool passed;
  std::string witness;  ///< empty when passed
};

struct MinimizerAudit {
  CanonicalCode code;
  std::vector<AuditCheck> checks;

  bool passed() const;
};

struct PropertyReport {
  std::vector<MinimizerAudit> minimizers;
  std::string note;

  bool passed() const;
};

struct BoundComparison {
  double value;
  std::string formula;  ///< "edge-count" or "star"
  double printed_value;
  bool matches;
  bool printed_matches;
};

struct ExtremalCertificate {
  Family family = Family::GammaNP;
  int p = 0;
  std::optional<int> n;  ///< unset for the pendent-only family
  std::vector<int> orders_searched;
  std::int64_t candidates = 0;
  double minimum = 0;
  std::vector<Minimizer> minimizers;  ///< sorted by code
  std::optional<BoundComparison> bound;
  /// Co-minimizers whose value differs from `minimum` but lies within the tie tolerance.
  std::vector<CanonicalCode> tie_tolerance_hits;
  PropertyReport property_report;
  std::string note;
};

/// Exhaustive minimum of ABS over trees of order n with p pendent vertices
/// (3 <= p <= n-1, n <= options.max_order). All trees within the tie
/// tolerance of the minimum are reported. Bound comparison and audits are
/// filled in when n >= 3p - 2.
ExtremalCertificate brute_force_min(int n, int p, const SearchOptions& options = {});

/// Exhaustive minimum over trees with p pendent vertices and order
/// p+1 .. 2p-2. Larger orders force a degree-2 vertex, whose suppression
/// lowers ABS without changing p, so they cannot hold a minimizer.
ExtremalCertificate brute_force_min_gamma_p(int p, const SearchOptions& options = {});

/// Structural audits of every minimizer in `cert`. Order/pendent family:
/// internal paths of length 1, W2 degrees all 2, W2 degrees <= W3 degrees,
/// W3 degree sum 3p-6+2t, maximum degree 3. Pendent-only family: no vertex
/// of degree 2.
PropertyReport verify_minimizer_properties(const ExtremalCertificate& cert);

/// Trees of order n with p pendent vertices (n >= 3p-2) that are not
/// required to be minimal, checked against "every W2 vertex has degree 2"
/// and "W3 degrees sum to 3p-6+2t".
struct LeafNeighborScan {
  int n;
  int p;
  std::int64_t trees = 0;
  std::int64_t w2_degree_violations = 0;
  std::int64_t w3_sum_violations = 0;
  std::optional<Tree> witness;
};

LeafNeighborScan scan_leaf_neighbor_degrees(int n, int p);

}  // namespace abslab
