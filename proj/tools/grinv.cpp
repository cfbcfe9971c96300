// Command-line front end: parameters, predictions, brute-force profiles and
// grid verification for the Grassmann / skew-lines graphs on 2-spaces.

#include "grinv/errors.hpp"
#include "grinv/exactla.hpp"
#include "grinv/predict_charp.hpp"
#include "grinv/predict_crosschar.hpp"
#include "grinv/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>

using namespace grinv;
using ojson = nlohmann::ordered_json;

namespace {

constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;
constexpr int kExitCap = 3;

struct Instance {
  int n = 4;
  Int q = 2;
  std::string graph = "skew";
  std::string matrix = "adjacency";
};

struct Output {
  std::string path;
  bool csv = false;

  void emit(const std::string &text) const {
    if (path.empty()) {
      std::cout << text;
      return;
    }
    std::ofstream f(path);
    if (!f)
      throw ConfigError("cannot write " + path);
    f << text;
  }
  void emit(const ojson &j) const { emit(j.dump(2) + "\n"); }
};

void add_instance_flags(CLI::App *cmd, Instance &in, bool with_matrix) {
  cmd->add_option("--n", in.n, "Ambient dimension (>= 4)")->required();
  cmd->add_option("--q", in.q, "Field order, a prime power")->required();
  cmd->add_option("--graph", in.graph, "grassmann | skew")->required();
  if (with_matrix)
    cmd->add_option("--matrix", in.matrix, "adjacency | laplacian")->required();
}

void add_output_flags(CLI::App *cmd, Output &out) {
  cmd->add_option("--out", out.path, "Write to this file instead of stdout");
  cmd->add_flag("--csv", out.csv, "CSV instead of JSON");
}

/// Primes to report for predict / compute.
std::vector<std::uint64_t> selected_primes(const Instance &in, std::optional<std::uint64_t> prime, bool all) {
  const GraphKind g = parse_graph_kind(in.graph);
  const MatrixKind m = parse_matrix_kind(in.matrix);
  if (prime) {
    if (!is_prime(*prime))
      throw DomainError("--prime must be prime");
    return {*prime};
  }
  std::set<std::uint64_t> out;
  for (auto p : relevant_primes(in.n, in.q, g, m))
    out.insert(p);
  if (all)
    for (auto p : primes_up_to(200))
      out.insert(p);
  return {out.begin(), out.end()};
}

ojson spectrum_json(const SpectralData &s) {
  ojson j;
  j["theta0"] = s.theta0;
  j["r"] = s.r;
  j["s"] = s.s;
  j["f"] = s.f;
  j["g"] = s.g;
  return j;
}

int cmd_params(const Instance &in, const Output &out) {
  const GraphKind g = parse_graph_kind(in.graph);
  const SrgParameters p = srg_params(in.n, in.q, g);
  if (out.csv) {
    std::ostringstream os;
    os << "n,q,graph,v,k,lambda,mu,adjacency_order,laplacian_order\n"
       << in.n << ',' << in.q << ',' << to_string(g) << ',' << p.v << ',' << p.k << ',' << p.lambda << ','
       << p.mu << ",\"" << group_order(in.n, in.q, g, MatrixKind::Adjacency).to_string() << "\",\""
       << group_order(in.n, in.q, g, MatrixKind::Laplacian).to_string() << "\"\n";
    out.emit(os.str());
    return 0;
  }
  ojson j;
  j["n"] = in.n;
  j["q"] = in.q;
  j["graph"] = std::string(to_string(g));
  j["v"] = p.v;
  j["k"] = p.k;
  j["lambda"] = p.lambda;
  j["mu"] = p.mu;
  j["spectrum"]["adjacency"] = spectrum_json(spectrum(in.n, in.q, g, MatrixKind::Adjacency));
  j["spectrum"]["laplacian"] = spectrum_json(spectrum(in.n, in.q, g, MatrixKind::Laplacian));
  j["group_order"]["adjacency"] = group_order(in.n, in.q, g, MatrixKind::Adjacency).to_string();
  j["group_order"]["laplacian"] = group_order(in.n, in.q, g, MatrixKind::Laplacian).to_string();
  out.emit(j);
  return 0;
}

ojson instance_header(const Instance &in) {
  ojson j;
  j["n"] = in.n;
  j["q"] = in.q;
  j["graph"] = std::string(to_string(parse_graph_kind(in.graph)));
  j["matrix"] = std::string(to_string(parse_matrix_kind(in.matrix)));
  return j;
}

int cmd_predict(const Instance &in, std::optional<std::uint64_t> prime, bool all, const Output &out) {
  const GraphKind g = parse_graph_kind(in.graph);
  const MatrixKind m = parse_matrix_kind(in.matrix);
  brackets(in.n, in.q);
  ojson j = instance_header(in);
  j["primes"] = ojson::array();
  std::ostringstream csv;
  csv << "n,q,graph,matrix,ell,case_id,profile\n";
  for (auto ell : selected_primes(in, prime, all)) {
    auto [profile, trace] = predict_profile(in.n, in.q, static_cast<Int>(ell), g, m);
    ojson e;
    e["ell"] = ell;
    e["case_id"] = trace.case_id;
    e["params"] = trace.params;
    e["profile"] = profile_to_json(profile);
    j["primes"].push_back(std::move(e));
    csv << in.n << ',' << in.q << ',' << to_string(g) << ',' << to_string(m) << ',' << ell << ",\""
        << trace.case_id << "\",\"" << profile.to_string() << "\"\n";
  }
  if (out.csv)
    out.emit(csv.str());
  else
    out.emit(j);
  return 0;
}

int cmd_compute(const Instance &in, std::optional<std::uint64_t> prime, bool all, bool exact, Int cap,
                const Output &out) {
  const GraphKind g = parse_graph_kind(in.graph);
  const MatrixKind m = parse_matrix_kind(in.matrix);
  const Int v = brackets(in.n, in.q).v;
  if (v > cap)
    throw DimensionCap("v = " + std::to_string(v) + " exceeds the dimension cap " + std::to_string(cap));
  const IntegerMatrix mat = build_matrix(in.n, Field::make(in.q), g, m);
  const FactoredInteger order = group_order(in.n, in.q, g, m);
  const Int kernel = m == MatrixKind::Laplacian ? 1 : 0;

  ojson j = instance_header(in);
  std::vector<mpz_class> invariants;
  if (exact) {
    invariants = snf_diag(mat, std::min<Int>(cap, kExactSnfCap));
    j["invariant_factors"] = ojson::array();
    for (const auto &d : invariants)
      j["invariant_factors"].push_back(d.get_str());
  }
  j["primes"] = ojson::array();
  std::ostringstream csv;
  csv << "n,q,graph,matrix,ell,profile\n";
  for (auto ell : selected_primes(in, prime, all)) {
    const DivisorProfile p = exact ? profile_from_invariants(invariants, ell)
                                   : local_profile(mat, ell, LocalBounds{order.valuation(ell), kernel});
    ojson e;
    e["ell"] = ell;
    e["profile"] = profile_to_json(p);
    j["primes"].push_back(std::move(e));
    csv << in.n << ',' << in.q << ',' << to_string(g) << ',' << to_string(m) << ',' << ell << ",\""
        << p.to_string() << "\"\n";
  }
  if (out.csv)
    out.emit(csv.str());
  else
    out.emit(j);
  return 0;
}

struct VerifyFlags {
  std::string grid;
  int n_min = 4;
  int n_max = 0;
  std::vector<Int> qs;
  std::vector<std::string> graphs, matrices;
  std::vector<std::uint64_t> primes;
  bool all_primes = false;
};

int cmd_verify(const VerifyFlags &vf, std::optional<Int> cap, std::optional<int> jobs, const Output &out) {
  GridConfig cfg;
  if (!vf.grid.empty()) {
    std::ifstream f(vf.grid);
    if (!f)
      throw ConfigError("cannot read " + vf.grid);
    nlohmann::json j;
    try {
      f >> j;
    } catch (const std::exception &e) {
      throw ConfigError(std::string("grid file is not valid JSON: ") + e.what());
    }
    cfg = parse_grid_config(j);
  } else {
    if (vf.n_max < 4 || vf.qs.empty())
      throw ConfigError("verify needs --grid, or --n-max (>= 4) with --q");
    for (Int q : vf.qs)
      split_prime_power(q);
    for (int n = std::max(4, vf.n_min); n <= vf.n_max; ++n)
      for (Int q : vf.qs)
        cfg.pairs.emplace_back(n, q);
    cfg.cap = default_cap();
  }
  if (!vf.graphs.empty()) {
    cfg.graphs.clear();
    for (const auto &s : vf.graphs)
      cfg.graphs.push_back(parse_graph_kind(s));
  }
  if (!vf.matrices.empty()) {
    cfg.matrices.clear();
    for (const auto &s : vf.matrices)
      cfg.matrices.push_back(parse_matrix_kind(s));
  }
  for (auto p : vf.primes) {
    if (!is_prime(p))
      throw ConfigError("not a prime: " + std::to_string(p));
    cfg.primes.push_back(p);
  }
  if (vf.all_primes)
    for (auto p : primes_up_to(200))
      cfg.primes.push_back(p);
  if (cap)
    cfg.cap = *cap;
  if (jobs)
    cfg.jobs = *jobs;

  const auto reports = verify_grid(cfg);
  bool ok = true;
  for (const auto &r : reports) {
    if (!r.ok()) {
      ok = false;
      std::cerr << describe_mismatches(r);
      if (!r.order_check)
        std::cerr << "ORDER CHECK FAILED n=" << r.n << " q=" << r.q << ' ' << to_string(r.graph) << ' '
                  << to_string(r.matrix) << '\n';
      if (!r.srg_identity)
        std::cerr << "SRG IDENTITY FAILED n=" << r.n << " q=" << r.q << ' ' << to_string(r.graph) << '\n';
    }
    std::cerr << "n=" << r.n << " q=" << r.q << ' ' << to_string(r.graph) << ' ' << to_string(r.matrix) << ": "
              << (r.ok() ? "ok" : "FAIL") << " (" << r.elapsed_seconds << " s)\n";
  }
  if (out.csv)
    out.emit(reports_to_csv(reports));
  else
    out.emit(reports_to_json(reports));
  return ok ? 0 : kExitMismatch;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Smith and critical groups of the Grassmann and skew-lines graphs on 2-spaces"};
  app.require_subcommand(1);

  Instance in;
  Output out;
  std::optional<std::uint64_t> prime;
  bool all_primes = false, exact = false;
  std::optional<Int> cap;
  std::optional<int> jobs;
  VerifyFlags vf;

  auto *params = app.add_subcommand("params", "Graph parameters, spectra and group orders");
  add_instance_flags(params, in, false);
  add_output_flags(params, out);

  auto *predict = app.add_subcommand("predict", "Closed-form elementary divisor profiles");
  add_instance_flags(predict, in, true);
  predict->add_option("--prime", prime, "Single prime");
  predict->add_flag("--all-primes", all_primes, "Also every prime up to 200");
  add_output_flags(predict, out);

  auto *compute = app.add_subcommand("compute", "Profiles by elimination on the actual matrix");
  add_instance_flags(compute, in, true);
  compute->add_option("--prime", prime, "Single prime");
  compute->add_flag("--all-primes", all_primes, "Also every prime up to 200");
  compute->add_flag("--exact", exact, "Full Smith normal form over the integers (small v only)");
  compute->add_option("--cap", cap, "Dimension cap (default GRINV_CAP or 1500)");
  add_output_flags(compute, out);

  auto *verify = app.add_subcommand("verify", "Compare predictions with elimination over a grid");
  verify->add_option("--grid", vf.grid, "JSON grid file");
  verify->add_option("--n-min", vf.n_min, "Smallest n (default 4)");
  verify->add_option("--n-max", vf.n_max, "Largest n");
  verify->add_option("--q", vf.qs, "Field orders, comma separated")->delimiter(',');
  verify->add_option("--graph", vf.graphs, "Restrict graphs")->delimiter(',');
  verify->add_option("--matrix", vf.matrices, "Restrict matrices")->delimiter(',');
  verify->add_option("--prime", vf.primes, "Extra primes")->delimiter(',');
  verify->add_flag("--all-primes", vf.all_primes, "Also every prime up to 200");
  verify->add_option("--cap", cap, "Dimension cap");
  verify->add_option("--jobs", jobs, "Parallel instances");
  add_output_flags(verify, out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*params)
      return cmd_params(in, out);
    if (*predict)
      return cmd_predict(in, prime, all_primes, out);
    if (*compute)
      return cmd_compute(in, prime, all_primes, exact, cap.value_or(default_cap()), out);
    return cmd_verify(vf, cap, jobs, out);
  } catch (const DimensionCap &e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitCap;
  } catch (const std::invalid_argument &e) { // NotAPrimePower, DimensionError, ConfigError, ...
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const DomainError &e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitMismatch;
  }
}
