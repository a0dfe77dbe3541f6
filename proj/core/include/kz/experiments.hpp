#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "kz/graph.hpp"
#include "kz/homology.hpp"
#include "kz/polarization.hpp"
#include "kz/rng.hpp"
#include "kz/whisker_certificate.hpp"

namespace kz {

enum class ReportFormat { Json, Csv, Text };

struct ExperimentConfig {
  std::vector<uint32_t> primes{PrimeField::kDefaultPrime};
  int nmax = 4;
  int kmax = 0;  ///< 0 caps k at each graph's vertex count
  uint64_t lattice_cap = 200000;
  uint64_t seed = 20240718;
  int jobs = 1;
  int trials = 50;
};

struct DepthCell {
  int k = 0;
  int depth = 0;
  std::optional<int> bound;  ///< certificate bound when G is connected, k <= n
  bool pass = true;          ///< depth <= bound whenever a bound exists
};

struct DepthSeries {
  std::string graph_id;
  int n = 0;
  std::vector<DepthCell> cells;
  bool truncated = false;
  std::string truncation_reason;
};

/// depth(S*/I(G*)^k) for k = 1..kmax, certificate bounds where applicable.
/// Depths are computed at every configured prime; disagreement between
/// primes throws. A capacity overflow truncates the series with a marker.
DepthSeries depth_series(const SimpleGraph& g, const std::string& graph_id, int kmax,
                         const ExperimentConfig& cfg);

/// depth at each configured prime with a loud consistency check
DepthResult depth_multi_prime(const MonomialIdeal& ideal, const ExperimentConfig& cfg);

struct SuiteReport {
  std::string name;
  int cases = 0;
  int passes = 0;
  std::vector<std::string> failures;      ///< one minimal reproducer per failure
  std::vector<std::string> observations;  ///< report-only notes
  bool pass() const { return failures.empty(); }
};

/// trees: depth(S*/I(G*)^k) == n-k+1 for every labeled tree with n <= nmax,
/// k = 1..min(n,3), plus k = 4 when n == 4
SuiteReport run_tree_suite(const ExperimentConfig& cfg);

/// connected bound: certificates verify and depth <= n-k+1 on every
/// connected graph with n <= nmax, k = 1..n
SuiteReport run_whisker_suite(const ExperimentConfig& cfg);

/// stabilization for n <= min(nmax, 3): bipartite whiskers reach depth 1 and
/// non-bipartite reach 0 for k = n..4
SuiteReport run_limit_suite(const ExperimentConfig& cfg);

/// colon identities on seeded random trees (n <= 5, k <= 3), as exact
/// generator-set equalities
SuiteReport run_colon_suite(const ExperimentConfig& cfg);

/// forest-conjecture probe: reports observed depth plateaus against the
/// component count; observational only, never a failure
SuiteReport run_forest_probe(const ExperimentConfig& cfg);

enum class Suite { Trees, Whisker, Limit, Colon, ForestProbe };

/// runs the selected sub-suites in order
std::vector<SuiteReport> run_verification_suite(const ExperimentConfig& cfg,
                                                const std::vector<Suite>& selection);

/// seeded random proper monomial ideal: 1..max_vars variables, 1..max_gens
/// generators of total degree 1..max_degree
MonomialIdeal random_monomial_ideal(Rng& rng, int max_vars, int max_degree, int max_gens);

/// seeded uniform random labeled tree on n vertices
SimpleGraph random_tree(Rng& rng, int n);

std::string emit_depth_series(const std::vector<DepthSeries>& series, ReportFormat format);
std::string emit_suite_reports(const std::vector<SuiteReport>& reports, ReportFormat format);
std::string certificate_json(const WhiskerCertificate& cert);
std::string polarized_basis_report_json(const MonomialIdeal& ideal,
                                        const PolarizedBasisReport& report);

/// runs fn(0..count-1) on `jobs` threads; order of side effects is up to the
/// caller, so deterministic reductions should write into preallocated slots
void parallel_for(int jobs, int count, const std::function<void(int)>& fn);

}  // namespace kz
