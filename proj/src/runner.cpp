#include "lindyn/runner.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

#include "lindyn/report.hpp"
#include "lindyn/scramble.hpp"
#include "lindyn/seqspace.hpp"
#include "lindyn/shiftops.hpp"
#include "lindyn/spectral.hpp"
#include "lindyn/unimodal.hpp"

namespace lindyn {

namespace {

std::string csv_num(double x) {
  char buf[48];
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

ShiftOperator make_operator(const ExperimentConfig& cfg) {
  WeightSequence w = WeightSequence::parse(cfg.require("common", "weights"));
  if (auto sup = cfg.get("common", "declared_sup")) {
    w = w.with_declared_sup(cfg.require_double("common", "declared_sup"));
  }
  return ShiftOperator{w};
}

TruncatedVector vector_field(const ExperimentConfig& cfg,
                             const std::string& section,
                             const std::string& key) {
  const std::string text = cfg.require(section, key);
  try {
    return from_json_array(text);
  } catch (const std::exception& e) {
    throw std::invalid_argument("config field " + section + "." + key + ": " +
                                e.what());
  }
}

std::vector<double> parse_double_list(const std::string& text,
                                      const std::string& field) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      out.push_back(std::stod(tok));
    } catch (const std::exception&) {
      throw std::invalid_argument("config field " + field +
                                  " has a non-numeric entry: \"" + tok + "\"");
    }
  }
  if (out.empty()) {
    throw std::invalid_argument("config field " + field + " is empty");
  }
  return out;
}

// "re,im:cre,cim; re,im:cre,cim" -> list of (point, coefficient)
std::vector<std::pair<cplx, cplx>> parse_part(const std::string& text,
                                              const std::string& field) {
  std::vector<std::pair<cplx, cplx>> out;
  std::stringstream terms(text);
  std::string term;
  while (std::getline(terms, term, ';')) {
    std::string t;
    for (char c : term) {
      if (!std::isspace(static_cast<unsigned char>(c))) t += c;
    }
    if (t.empty()) continue;
    const auto colon = t.find(':');
    std::string pt = colon == std::string::npos ? t : t.substr(0, colon);
    std::string co = colon == std::string::npos ? "1,0" : t.substr(colon + 1);
    auto parse_pair = [&](const std::string& s) -> cplx {
      const auto comma = s.find(',');
      try {
        if (comma == std::string::npos) return cplx{std::stod(s), 0.0};
        return cplx{std::stod(s.substr(0, comma)), std::stod(s.substr(comma + 1))};
      } catch (const std::exception&) {
        throw std::invalid_argument("config field " + field +
                                    " has a malformed entry: \"" + term + "\"");
      }
    };
    out.emplace_back(parse_pair(pt), parse_pair(co));
  }
  return out;
}

Json stats_json(const DistributionalStats& s) {
  Json j = Json::object();
  j.set("tau", Json::number(s.tau));
  Json samples = Json::array();
  for (const auto& [n, f] : s.samples) {
    Json row = Json::object();
    row.set("n", Json::integer(n)).set("F", Json::number(f));
    samples.push(std::move(row));
  }
  j.set("samples", std::move(samples));
  j.set("F_lower_est", Json::number(s.F_lower_est));
  j.set("F_upper_est", Json::number(s.F_upper_est));
  return j;
}

struct CommandOutput {
  Json report = Json::object();
  std::string csv;
  bool pass = true;
};

CommandOutput cmd_orbit(const ExperimentConfig& cfg, const ShiftOperator& T) {
  CommandOutput out;
  TruncatedVector v;
  if (cfg.get("orbit", "vector")) {
    v = vector_field(cfg, "orbit", "vector");
  } else {
    const std::int64_t b = cfg.get_int("orbit", "basis", 0);
    if (b < 0) throw std::invalid_argument("config field orbit.basis must be >= 0");
    v = TruncatedVector::basis(static_cast<std::size_t>(b));
  }
  const std::int64_t n_max = cfg.get_int("orbit", "n_max", 32);
  if (n_max < 0) throw std::invalid_argument("config field orbit.n_max must be >= 0");
  const auto norms = orbit_norms(T, v, n_max);
  Json arr = Json::array();
  out.csv = "i,norm\n";
  for (std::size_t i = 0; i < norms.size(); ++i) {
    arr.push(Json::number(norms[i]));
    out.csv += std::to_string(i) + "," + csv_num(norms[i]) + "\n";
  }
  out.report.set("n_max", Json::integer(n_max));
  out.report.set("orbit", std::move(arr));
  out.report.set("pass", Json::boolean(true));
  return out;
}

CommandOutput cmd_eigen(const ExperimentConfig& cfg, const ShiftOperator& T) {
  CommandOutput out;
  const cplx omega{cfg.get_double("eigen", "omega_re", 0.0),
                   cfg.get_double("eigen", "omega_im", 0.0)};
  const std::int64_t order = cfg.get_int("eigen", "order", 0);
  const std::int64_t trunc_len = cfg.get_int("eigen", "trunc_len", 64);
  const double rho_margin = cfg.get_double("eigen", "rho_margin", 0.95);
  const EigenVector ev = gen_eigenvector(T, omega, order, trunc_len, rho_margin);

  out.report.set("omega_re", Json::number(omega.real()));
  out.report.set("omega_im", Json::number(omega.imag()));
  out.report.set("order", Json::integer(order));
  out.report.set("trunc_len", Json::integer(trunc_len));
  out.report.set("tail_bound", Json::number(ev.tail_bound));
  if (order == 0) {
    // residual certificate: ||T v - omega v|| <= |omega| |c_last| + R tail
    const double resid = norm(sub(T.apply(ev.vector), scale(omega, ev.vector)));
    const double last = std::abs(ev.vector.at(ev.vector.support_len() - 1));
    const double bound =
        std::abs(omega) * last + T.norm_bound() * ev.tail_bound + 1e-12;
    out.report.set("residual", Json::number(resid));
    out.report.set("residual_bound", Json::number(bound));
    out.pass = resid <= bound;
  }
  out.report.set("pass", Json::boolean(out.pass));
  out.csv = to_csv(ev.vector);
  return out;
}

CommandOutput cmd_radius(const ExperimentConfig& cfg, const ShiftOperator& T) {
  CommandOutput out;
  const std::int64_t probe_len = cfg.get_int("radius", "probe_len", 512);
  const EigenDisk disk = eigen_disk_radius(T, probe_len);
  out.report.set("probe_len", Json::integer(probe_len));
  out.report.set("radius", Json::number(disk.radius));
  out.report.set("estimate_error", Json::number(disk.estimate_error));
  out.report.set("certified_radius", Json::number(disk.certified_radius()));
  out.csv = "n,geomean\n";
  double acc = 0.0;
  for (std::int64_t n = 1; n <= probe_len; ++n) {
    acc += std::log2(T.weights().at(n));
    out.csv += std::to_string(n) + "," +
               csv_num(std::exp2(acc / static_cast<double>(n))) + "\n";
  }
  out.report.set("pass", Json::boolean(true));
  return out;
}

CommandOutput cmd_mixing(const ExperimentConfig& cfg, const ShiftOperator& T) {
  CommandOutput out;
  const auto x_part = parse_part(cfg.get("mixing", "x_part").value_or(""),
                                 "mixing.x_part");
  const auto y_part = parse_part(cfg.get("mixing", "y_part").value_or(""),
                                 "mixing.y_part");
  const double eps = cfg.get_double("mixing", "eps", 0.01);
  const std::int64_t trunc_len = cfg.get_int("mixing", "trunc_len", 400);
  const MixingWitness w = mixing_witness(T, x_part, y_part, eps, trunc_len);

  out.report.set("N", Json::integer(w.N));
  out.report.set("eps", Json::number(w.eps));
  Json checks = Json::array();
  out.csv = "k,d_in,d_out\n";
  for (const auto& c : w.checks) {
    Json row = Json::object();
    row.set("k", Json::integer(c.k));
    row.set("d_in", Json::number(c.dist_in));
    row.set("d_out", Json::number(c.dist_out));
    checks.push(std::move(row));
    out.csv += std::to_string(c.k) + "," + csv_num(c.dist_in) + "," +
               csv_num(c.dist_out) + "\n";
  }
  out.report.set("checks", std::move(checks));
  out.report.set("M", Json::number(w.M));
  out.report.set("lambda_bar", Json::number(w.lambda_bar));
  out.report.set("rho_bar", Json::number(w.rho_bar));
  out.report.set("pass", Json::boolean(true));  // certified inside the module
  return out;
}

CommandOutput cmd_periodic(const ExperimentConfig& cfg, const ShiftOperator& T) {
  CommandOutput out;
  const std::int64_t p = cfg.require_int("periodic", "p");
  const std::int64_t q = cfg.require_int("periodic", "q");
  const std::int64_t depth = cfg.get_int("periodic", "depth", 1);
  const std::int64_t trunc_len = cfg.get_int("periodic", "trunc_len", 200);
  const double tol = cfg.get_double("periodic", "tol", 1e-8);
  TruncatedVector target;
  if (cfg.get("periodic", "target")) {
    target = vector_field(cfg, "periodic", "target");
  } else {
    const double ang = 2.0 * 3.14159265358979323846 * static_cast<double>(p) /
                       static_cast<double>(q);
    target = eigenvector(T, std::polar(1.0, ang), trunc_len).vector;
  }
  const PeriodicPoint pp =
      periodic_approximant(T, p, q, depth, target, trunc_len, tol);
  out.report.set("p", Json::integer(p));
  out.report.set("q", Json::integer(q));
  out.report.set("depth", Json::integer(depth));
  out.report.set("period", Json::integer(pp.period));
  out.report.set("dist_to_target", Json::number(pp.dist_to_target));
  out.report.set("period_residual", Json::number(pp.period_residual));
  out.report.set("tol", Json::number(tol));
  out.report.set("pass", Json::boolean(pp.periodic_ok));
  out.pass = pp.periodic_ok;
  out.csv = to_csv(pp.point);
  return out;
}

CommandOutput cmd_witness(const ExperimentConfig& cfg, const ShiftOperator& T) {
  CommandOutput out;
  const double gamma = cfg.require_double("witness", "gamma");
  const std::int64_t m = cfg.require_int("witness", "m");
  const UnimodalCertificate cert = nu_witness(T, gamma, m);
  out.report.set("gamma", Json::number(cert.gamma));
  out.report.set("m", Json::integer(cert.m));
  out.report.set("witness_support",
                 Json::integer(static_cast<std::int64_t>(cert.witness.support_len())));
  Json orbit = Json::array();
  out.csv = "i,norm\n";
  for (std::size_t i = 0; i < cert.orbit.size(); ++i) {
    orbit.push(Json::number(cert.orbit[i]));
    out.csv += std::to_string(i) + "," + csv_num(cert.orbit[i]) + "\n";
  }
  out.report.set("orbit_norms", std::move(orbit));
  out.report.set("decay_index", Json::integer(cert.decay_index));
  const CertifyOutcome recheck = certify_nu(T, cert.witness, gamma, m);
  out.report.set("pass", Json::boolean(recheck.passed));
  out.pass = recheck.passed;
  return out;
}

Json pair_report_json(const PairReport& rep) {
  Json j = Json::object();
  Json theta = Json::array();
  for (auto t : rep.theta) theta.push(Json::integer(t));
  j.set("theta", std::move(theta));
  auto blocks_json = [](const std::vector<std::int64_t>& ks) {
    Json a = Json::array();
    for (auto k : ks) a.push(Json::integer(k));
    return a;
  };
  j.set("nonzero_blocks", blocks_json(rep.nonzero_blocks));
  j.set("zero_blocks", blocks_json(rep.zero_blocks));
  auto norm_checks_json = [](const std::vector<BlockNormCheck>& cs) {
    Json a = Json::array();
    for (const auto& c : cs) {
      Json row = Json::object();
      row.set("k", Json::integer(c.k));
      row.set("value", Json::number(c.value));
      row.set("log2_value", Json::number(c.log2_value));
      row.set("bound", Json::number(c.bound));
      row.set("pass", Json::boolean(c.pass));
      a.push(std::move(row));
    }
    return a;
  };
  j.set("lower_checks", norm_checks_json(rep.lower_checks));
  j.set("upper_checks", norm_checks_json(rep.upper_checks));
  auto frac_checks_json = [](const std::vector<BlockFractionCheck>& cs) {
    Json a = Json::array();
    for (const auto& c : cs) {
      Json row = Json::object();
      row.set("k", Json::integer(c.k));
      row.set("n", Json::integer(c.n));
      row.set("F_sample", Json::number(c.f_sample));
      row.set("bound", Json::number(c.bound));
      row.set("bound_with_unit_slack", Json::number(c.bound_alt));
      row.set("applicable", Json::boolean(c.applicable));
      row.set("pass", Json::boolean(c.pass));
      a.push(std::move(row));
    }
    return a;
  };
  j.set("F_caps", frac_checks_json(rep.f_caps));
  j.set("F_floors", frac_checks_json(rep.f_floors));
  j.set("F_half", stats_json(rep.f_half));
  j.set("F_tau", stats_json(rep.f_tau));
  j.set("all_pass", Json::boolean(rep.all_pass));
  return j;
}

CommandOutput cmd_scramble(const ExperimentConfig& cfg, const ShiftOperator& T) {
  CommandOutput out;
  const double gamma = cfg.require_double("scramble", "gamma");
  const std::int64_t K = cfg.get_int("scramble", "K", 4);
  const EpsRule rule = EpsRule::parse(cfg.get("scramble", "eps").value_or("pow2"));
  const std::int64_t P = cfg.get_int("scramble", "P", 2);
  const auto taus = parse_double_list(cfg.get("scramble", "tau").value_or("1"),
                                      "scramble.tau");

  const ScrambleConstruction c = build_construction(T, gamma, K, rule);
  const ConstructionChecks checks = verify_construction(T, c);

  Json jc = Json::object();
  jc.set("gamma", Json::number(c.gamma));
  jc.set("R", Json::number(c.R));
  jc.set("K", Json::integer(c.depth));
  Json eps = Json::array();
  for (double e : c.eps) eps.push(Json::number(e));
  jc.set("eps", std::move(eps));
  Json stages = Json::array();
  for (std::int64_t k = 1; k <= c.depth; ++k) {
    Json st = Json::object();
    st.set("k", Json::integer(k));
    st.set("N", Json::integer(c.N[static_cast<std::size_t>(k)]));
    st.set("N_prime", Json::integer(c.N_prime[static_cast<std::size_t>(k)]));
    st.set("M", Json::integer(c.M[static_cast<std::size_t>(k)]));
    st.set("support", Json::integer(static_cast<std::int64_t>(
                          c.points[static_cast<std::size_t>(k)].support_len())));
    st.set("log2_norm", Json::number(log2_norm(c.points[static_cast<std::size_t>(k)])));
    stages.push(std::move(st));
  }
  jc.set("stages", std::move(stages));
  Json jchecks = Json::object();
  jchecks.set("eps_decreasing", Json::boolean(checks.eps_decreasing));
  jchecks.set("norm_schedule", Json::boolean(checks.norm_schedule));
  jchecks.set("growth", Json::boolean(checks.growth));
  jchecks.set("escape", Json::boolean(checks.escape));
  jchecks.set("block_fraction", Json::boolean(checks.block_fraction));
  jchecks.set("tail_silence", Json::boolean(checks.tail_silence));
  jchecks.set("ordering", Json::boolean(checks.ordering));
  jchecks.set("unit_floor", Json::boolean(checks.unit_floor));
  jchecks.set("tail_sum_quiet", Json::boolean(checks.tail_sum_quiet));
  jchecks.set("all", Json::boolean(checks.all()));
  jc.set("checks", std::move(jchecks));
  out.report.set("construction", std::move(jc));
  out.pass = checks.all();

  const auto family = pair_family(c, P);
  Json pairs = Json::array();
  out.csv = "n,tau,F\n";
  bool first_pair = true;
  for (std::size_t i = 0; i < family.size(); ++i) {
    for (std::size_t j = i + 1; j < family.size(); ++j) {
      for (double tau : taus) {
        const PairReport rep = verify_dc_pair(T, c, family[i], family[j], tau);
        Json pj = pair_report_json(rep);
        pj.set("pair_i", Json::integer(static_cast<std::int64_t>(i)));
        pj.set("pair_j", Json::integer(static_cast<std::int64_t>(j)));
        pairs.push(std::move(pj));
        out.pass = out.pass && rep.all_pass;
        if (first_pair) {
          for (const auto& [n, f] : rep.f_tau.samples) {
            out.csv += std::to_string(n) + "," + csv_num(tau) + "," +
                       csv_num(f) + "\n";
          }
        }
      }
      first_pair = false;
    }
  }
  out.report.set("pairs", std::move(pairs));
  out.report.set("pass", Json::boolean(out.pass));
  return out;
}

CommandOutput cmd_stats(const ExperimentConfig& cfg, const ShiftOperator& T) {
  CommandOutput out;
  const TruncatedVector x = vector_field(cfg, "stats", "x");
  const TruncatedVector y = vector_field(cfg, "stats", "y");
  const auto taus = parse_double_list(cfg.get("stats", "tau").value_or("1"),
                                      "stats.tau");
  const auto win_raw = parse_double_list(
      cfg.get("stats", "window").value_or("8,16,32,64,128"), "stats.window");
  std::vector<std::int64_t> window;
  for (double w : win_raw) window.push_back(static_cast<std::int64_t>(w));

  Json arr = Json::array();
  out.csv = "n,tau,F\n";
  for (double tau : taus) {
    const DistributionalStats s = F_bounds(T, x, y, tau, window);
    for (const auto& [n, f] : s.samples) {
      out.csv += std::to_string(n) + "," + csv_num(tau) + "," + csv_num(f) + "\n";
    }
    arr.push(stats_json(s));
  }
  out.report.set("stats", std::move(arr));
  out.report.set("pass", Json::boolean(true));
  return out;
}

}  // namespace

RunResult run(const std::string& command, const ExperimentConfig& cfg) {
  RunResult res;
  const std::string out_dir = cfg.get("common", "out").value_or("run");
  res.report_path = out_dir + "/report.json";
  res.data_path = out_dir + "/data.csv";

  CommandOutput body;
  try {
    const ShiftOperator T = make_operator(cfg);
    if (command == "orbit") {
      body = cmd_orbit(cfg, T);
    } else if (command == "eigen") {
      body = cmd_eigen(cfg, T);
    } else if (command == "radius") {
      body = cmd_radius(cfg, T);
    } else if (command == "mixing") {
      body = cmd_mixing(cfg, T);
    } else if (command == "periodic") {
      body = cmd_periodic(cfg, T);
    } else if (command == "witness") {
      body = cmd_witness(cfg, T);
    } else if (command == "scramble") {
      body = cmd_scramble(cfg, T);
    } else if (command == "stats") {
      body = cmd_stats(cfg, T);
    } else {
      res.exit_status = 2;
      res.message = "unknown command: " + command;
      return res;
    }
  } catch (const std::invalid_argument& e) {
    res.exit_status = 2;
    res.message = e.what();
    return res;
  } catch (const std::exception& e) {
    res.exit_status = 1;
    res.message = e.what();
    return res;
  }

  Json report = Json::object();
  report.set("schema_version", Json::integer(1));
  report.set("command", Json::str(command));
  report.set("weights", Json::str(cfg.require("common", "weights")));
  if (auto seed = cfg.get("common", "seed")) {
    report.set("seed", Json::integer(cfg.get_int("common", "seed", 0)));
  }
  // body fields appended after the run header
  report.set("result", std::move(body.report));

  atomic_write_file(res.report_path, report.dump());
  atomic_write_file(res.data_path, body.csv);
  res.pass = body.pass;
  res.exit_status = body.pass ? 0 : 1;
  if (!body.pass) res.message = "one or more certified checks failed";
  return res;
}

}  // namespace lindyn
