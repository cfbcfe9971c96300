#pragma once

#include "grinv/geometry.hpp"
#include "grinv/predict_crosschar.hpp"
#include "grinv/profile.hpp"
#include "grinv/qarith.hpp"

#include <json.hpp>

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace grinv {

/// Default dimension cap for brute-force work; GRINV_CAP overrides it.
inline constexpr Int kDefaultCap = 1500;
/// kDefaultCap, or GRINV_CAP from the environment when it parses as a
/// positive integer.
Int default_cap();

/// Primes dividing the group order, plus the characteristic; sorted.
std::vector<std::uint64_t> relevant_primes(int n, Int q, GraphKind graph, MatrixKind matrix);

/// Predicted profile at `ell`, dispatching on whether ell is the
/// characteristic. case_id is "char-p" in that case.
std::pair<DivisorProfile, CaseTrace> predict_profile(int n, Int q, Int ell, GraphKind graph,
                                                     MatrixKind matrix);

struct PrimeReport {
  std::uint64_t ell = 0;
  std::string case_id;
  std::map<std::string, Int> params;
  DivisorProfile predicted;
  DivisorProfile computed;
  bool match = false;
  std::string error; // non-empty when either side threw
};

struct VerificationReport {
  int n = 0;
  Int q = 0;
  GraphKind graph = GraphKind::Grassmann;
  MatrixKind matrix = MatrixKind::Adjacency;
  std::vector<PrimeReport> per_prime;
  /// Every computed Σ i·e_i equals v_ell(group order), the primes cover the
  /// whole group order, and (Laplacian) v·|K| is the nonzero eigenvalue product.
  bool order_check = false;
  /// Both strongly-regular identities hold entrywise.
  bool srg_identity = false;
  double elapsed_seconds = 0;

  bool all_match() const;
  bool ok() const { return all_match() && order_check && srg_identity; }
};

struct VerifyOptions {
  Int cap = kDefaultCap;
  /// Primes checked in addition to relevant_primes (duplicates ignored).
  std::vector<std::uint64_t> extra_primes;
  int jobs = 1;
};

/// Builds the matrix once and compares prediction with elimination at every
/// relevant prime. Throws DimensionCap when v exceeds the cap.
VerificationReport verify_instance(int n, Int q, GraphKind graph, MatrixKind matrix,
                                   const VerifyOptions &options = {});

/// The entrywise identities A² + (μ-λ)A + (μ-k)I = μJ,
/// (A - rI)(A - sI) = μJ and (L - (k-r)I)(L - (k-s)I) = μJ for the graph's
/// adjacency matrix (recovered from the Laplacian if needed).
bool srg_identities_hold(const IntegerMatrix &m, int n, Int q, GraphKind graph, MatrixKind matrix);

struct GridConfig {
  std::vector<std::pair<int, Int>> pairs;
  std::vector<GraphKind> graphs{GraphKind::Grassmann, GraphKind::SkewLines};
  std::vector<MatrixKind> matrices{MatrixKind::Adjacency, MatrixKind::Laplacian};
  std::vector<std::uint64_t> primes;
  Int cap = kDefaultCap;
  int jobs = 1;
};

/// Reads {pairs: [[n,q]...], graphs?, matrices?, primes?, cap?, jobs?}.
/// Throws ConfigError on anything malformed.
GridConfig parse_grid_config(const nlohmann::json &j);

/// One report per (pair, graph, matrix) in config order. Instances above the
/// cap throw DimensionCap before any work starts.
std::vector<VerificationReport> verify_grid(const GridConfig &config);

nlohmann::ordered_json profile_to_json(const DivisorProfile &p);
nlohmann::ordered_json report_to_json(const VerificationReport &r);
nlohmann::ordered_json reports_to_json(const std::vector<VerificationReport> &reports);
/// One row per (instance, prime).
std::string reports_to_csv(const std::vector<VerificationReport> &reports);
/// Side-by-side listing of every mismatching prime, for stderr.
std::string describe_mismatches(const VerificationReport &r);

/// Runs fn(i) for i in [0, count) on up to `jobs` threads.
void parallel_for(std::size_t count, int jobs, const std::function<void(std::size_t)> &fn);

} // namespace grinv
