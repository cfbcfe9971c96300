#include "grinv/verify.hpp"

#include "grinv/errors.hpp"
#include "grinv/exactla.hpp"
#include "grinv/predict_charp.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <set>
#include <sstream>
#include <thread>

namespace grinv {

Int default_cap() {
  if (const char *env = std::getenv("GRINV_CAP")) {
    char *end = nullptr;
    const long long v = std::strtoll(env, &end, 10);
    if (end != env && *end == '\0' && v > 0)
      return v;
  }
  return kDefaultCap;
}

void parallel_for(std::size_t count, int jobs, const std::function<void(std::size_t)> &fn) {
  const std::size_t workers = std::min<std::size_t>(count, static_cast<std::size_t>(std::max(1, jobs)));
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i)
      fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < workers; ++w)
    pool.emplace_back([&] {
      for (std::size_t i; (i = next.fetch_add(1)) < count;) {
        try {
          fn(i);
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure)
            failure = std::current_exception();
        }
      }
    });
  for (auto &t : pool)
    t.join();
  if (failure)
    std::rethrow_exception(failure);
}

std::vector<std::uint64_t> relevant_primes(int n, Int q, GraphKind graph, MatrixKind matrix) {
  std::set<std::uint64_t> out;
  const FactoredInteger order = group_order(n, q, graph, matrix);
  for (const auto &[prime, e] : order.exponents())
    if (e > 0)
      out.insert(prime);
  out.insert(static_cast<std::uint64_t>(split_prime_power(q).p));
  return {out.begin(), out.end()};
}

std::pair<DivisorProfile, CaseTrace> predict_profile(int n, Int q, Int ell, GraphKind graph,
                                                     MatrixKind matrix) {
  if (ell == split_prime_power(q).p) {
    CaseTrace trace;
    trace.matrix_label = std::string(to_string(graph)) + "-" + std::string(to_string(matrix));
    trace.case_id = "char-p";
    return {predict_charp(n, q, graph, matrix), std::move(trace)};
  }
  return predict_crosschar(n, q, ell, graph, matrix);
}

bool VerificationReport::all_match() const {
  return std::all_of(per_prime.begin(), per_prime.end(), [](const PrimeReport &p) { return p.match; });
}

bool srg_identities_hold(const IntegerMatrix &m, int n, Int q, GraphKind graph, MatrixKind matrix) {
  using Mat = Eigen::MatrixXd;
  const SrgParameters srg = srg_params(n, q, graph);
  const SpectralData sp = spectrum(n, q, graph, MatrixKind::Adjacency);
  const Eigen::Index v = m.rows();
  const Mat id = Mat::Identity(v, v);
  const Mat j = Mat::Constant(v, v, 1.0);
  // Entries stay far below 2^53, so double arithmetic is exact here.
  Mat a = m.cast<double>();
  if (matrix == MatrixKind::Laplacian)
    a = static_cast<double>(srg.k) * id - a;
  const Mat lap = static_cast<double>(srg.k) * id - a;
  const double k = static_cast<double>(srg.k), lambda = static_cast<double>(srg.lambda),
               mu = static_cast<double>(srg.mu), r = static_cast<double>(sp.r),
               s = static_cast<double>(sp.s);

  const Mat a2 = a * a;
  const bool first = (a2 + (mu - lambda) * a + (mu - k) * id - mu * j).cwiseAbs().maxCoeff() == 0;
  const bool second = ((a - r * id) * (a - s * id) - mu * j).cwiseAbs().maxCoeff() == 0;
  const bool third = ((lap - (k - r) * id) * (lap - (k - s) * id) - mu * j).cwiseAbs().maxCoeff() == 0;
  return first && second && third;
}

namespace {

bool check_orders(const VerificationReport &rep, int n, Int q) {
  const FactoredInteger order = group_order(n, q, rep.graph, rep.matrix);
  const Int kernel = rep.matrix == MatrixKind::Laplacian ? 1 : 0;
  std::set<std::uint64_t> seen;
  mpz_class product = 1;
  for (const PrimeReport &p : rep.per_prime) {
    if (!p.error.empty() || p.computed.prime != p.ell)
      return false;
    const Int w = p.computed.weighted_sum();
    if (w != order.valuation(p.ell) || p.computed.zero_count != kernel)
      return false;
    mpz_class part;
    mpz_ui_pow_ui(part.get_mpz_t(), p.ell, static_cast<unsigned long>(w));
    product *= part;
    seen.insert(p.ell);
  }
  for (std::uint64_t prime : order.primes())
    if (!seen.contains(prime))
      return false;
  if (product != order.abs().value())
    return false;
  if (rep.matrix == MatrixKind::Laplacian) {
    const Int v = brackets(n, q).v;
    if (product * v != nonzero_eigenvalue_product(n, q, rep.graph, rep.matrix).abs().value())
      return false;
  }
  return true;
}

} // namespace

VerificationReport verify_instance(int n, Int q, GraphKind graph, MatrixKind matrix,
                                   const VerifyOptions &options) {
  const auto start = std::chrono::steady_clock::now();
  const Int v = brackets(n, q).v;
  if (v > options.cap)
    throw DimensionCap("v = " + std::to_string(v) + " exceeds the dimension cap " + std::to_string(options.cap));

  VerificationReport rep;
  rep.n = n;
  rep.q = q;
  rep.graph = graph;
  rep.matrix = matrix;

  const IntegerMatrix m = build_matrix(n, Field::make(q), graph, matrix);
  rep.srg_identity = srg_identities_hold(m, n, q, graph, matrix);

  std::vector<std::uint64_t> primes = relevant_primes(n, q, graph, matrix);
  for (std::uint64_t ell : options.extra_primes)
    if (std::find(primes.begin(), primes.end(), ell) == primes.end())
      primes.push_back(ell);
  std::sort(primes.begin(), primes.end());

  const FactoredInteger order = group_order(n, q, graph, matrix);
  const Int kernel = matrix == MatrixKind::Laplacian ? 1 : 0;
  rep.per_prime.resize(primes.size());
  parallel_for(primes.size(), options.jobs, [&](std::size_t i) {
    PrimeReport &pr = rep.per_prime[i];
    pr.ell = primes[i];
    try {
      auto [predicted, trace] = predict_profile(n, q, static_cast<Int>(pr.ell), graph, matrix);
      pr.predicted = std::move(predicted);
      pr.case_id = std::move(trace.case_id);
      pr.params = std::move(trace.params);
    } catch (const std::exception &e) {
      pr.error = std::string("prediction: ") + e.what();
    }
    try {
      pr.computed = local_profile(m, pr.ell, LocalBounds{order.valuation(pr.ell), kernel});
    } catch (const std::exception &e) {
      pr.error += (pr.error.empty() ? "" : "; ") + std::string("elimination: ") + e.what();
    }
    pr.match = pr.error.empty() && pr.predicted == pr.computed;
  });

  rep.order_check = check_orders(rep, n, q);
  rep.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

GridConfig parse_grid_config(const nlohmann::json &j) {
  GridConfig cfg;
  try {
    if (!j.is_object())
      throw ConfigError("grid config must be a JSON object");
    if (!j.contains("pairs") || !j.at("pairs").is_array())
      throw ConfigError("grid config needs a \"pairs\" array");
    for (const auto &pair : j.at("pairs")) {
      if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number_integer() || !pair[1].is_number_integer())
        throw ConfigError("each pair must be [n, q] with integer entries");
      const int n = pair[0].get<int>();
      const Int q = pair[1].get<Int>();
      if (n < 4)
        throw ConfigError("n must be at least 4");
      split_prime_power(q);
      cfg.pairs.emplace_back(n, q);
    }
    if (j.contains("graphs")) {
      cfg.graphs.clear();
      for (const auto &g : j.at("graphs"))
        cfg.graphs.push_back(parse_graph_kind(g.get<std::string>()));
    }
    if (j.contains("matrices")) {
      cfg.matrices.clear();
      for (const auto &m : j.at("matrices"))
        cfg.matrices.push_back(parse_matrix_kind(m.get<std::string>()));
    }
    if (j.contains("primes"))
      for (const auto &p : j.at("primes")) {
        const auto ell = p.get<std::uint64_t>();
        if (!is_prime(ell))
          throw ConfigError("not a prime: " + std::to_string(ell));
        cfg.primes.push_back(ell);
      }
    if (j.contains("cap")) {
      cfg.cap = j.at("cap").get<Int>();
      if (cfg.cap <= 0)
        throw ConfigError("cap must be positive");
    }
    if (j.contains("jobs")) {
      cfg.jobs = j.at("jobs").get<int>();
      if (cfg.jobs <= 0)
        throw ConfigError("jobs must be positive");
    }
  } catch (const ConfigError &) {
    throw;
  } catch (const std::exception &e) {
    throw ConfigError(std::string("malformed grid config: ") + e.what());
  }
  return cfg;
}

std::vector<VerificationReport> verify_grid(const GridConfig &config) {
  struct Job {
    int n;
    Int q;
    GraphKind graph;
    MatrixKind matrix;
  };
  std::vector<Job> jobs;
  for (const auto &[n, q] : config.pairs) {
    const Int v = brackets(n, q).v;
    if (v > config.cap)
      throw DimensionCap("(n, q) = (" + std::to_string(n) + ", " + std::to_string(q) + "): v = " +
                         std::to_string(v) + " exceeds the dimension cap " + std::to_string(config.cap));
    for (GraphKind g : config.graphs)
      for (MatrixKind m : config.matrices)
        jobs.push_back({n, q, g, m});
  }
  std::vector<VerificationReport> out(jobs.size());
  VerifyOptions opts;
  opts.cap = config.cap;
  opts.extra_primes = config.primes;
  opts.jobs = 1;
  parallel_for(jobs.size(), config.jobs, [&](std::size_t i) {
    const Job &jb = jobs[i];
    out[i] = verify_instance(jb.n, jb.q, jb.graph, jb.matrix, opts);
  });
  return out;
}

nlohmann::ordered_json profile_to_json(const DivisorProfile &p) {
  nlohmann::ordered_json j = nlohmann::ordered_json::object();
  for (const auto &[i, e] : p.mults)
    j[std::to_string(i)] = e;
  j["zero"] = p.zero_count;
  return j;
}

nlohmann::ordered_json report_to_json(const VerificationReport &r) {
  nlohmann::ordered_json j;
  j["n"] = r.n;
  j["q"] = r.q;
  j["graph"] = std::string(to_string(r.graph));
  j["matrix"] = std::string(to_string(r.matrix));
  j["primes"] = nlohmann::ordered_json::array();
  for (const PrimeReport &p : r.per_prime) {
    nlohmann::ordered_json e;
    e["ell"] = p.ell;
    e["case_id"] = p.case_id;
    e["params"] = p.params;
    e["predicted"] = profile_to_json(p.predicted);
    e["computed"] = profile_to_json(p.computed);
    e["match"] = p.match;
    if (!p.error.empty())
      e["error"] = p.error;
    j["primes"].push_back(std::move(e));
  }
  j["order_check"] = r.order_check;
  j["srg_identity"] = r.srg_identity;
  return j;
}

nlohmann::ordered_json reports_to_json(const std::vector<VerificationReport> &reports) {
  nlohmann::ordered_json j;
  j["instances"] = nlohmann::ordered_json::array();
  for (const auto &r : reports)
    j["instances"].push_back(report_to_json(r));
  return j;
}

std::string reports_to_csv(const std::vector<VerificationReport> &reports) {
  std::ostringstream os;
  os << "n,q,graph,matrix,ell,case_id,predicted,computed,match,order_check,srg_identity\n";
  for (const auto &r : reports)
    for (const auto &p : r.per_prime)
      os << r.n << ',' << r.q << ',' << to_string(r.graph) << ',' << to_string(r.matrix) << ',' << p.ell
         << ",\"" << p.case_id << "\",\"" << p.predicted.to_string() << "\",\"" << p.computed.to_string()
         << "\"," << (p.match ? "true" : "false") << ',' << (r.order_check ? "true" : "false") << ','
         << (r.srg_identity ? "true" : "false") << '\n';
  return os.str();
}

std::string describe_mismatches(const VerificationReport &r) {
  std::ostringstream os;
  for (const auto &p : r.per_prime) {
    if (p.match)
      continue;
    os << "MISMATCH n=" << r.n << " q=" << r.q << ' ' << to_string(r.graph) << ' ' << to_string(r.matrix)
       << " ell=" << p.ell << " [" << p.case_id << "]\n"
       << "  predicted: " << p.predicted.to_string() << "\n"
       << "  computed:  " << p.computed.to_string() << "\n";
    if (!p.error.empty())
      os << "  error:     " << p.error << "\n";
  }
  return os.str();
}

} // namespace grinv
