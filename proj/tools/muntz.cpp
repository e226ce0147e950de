// muntz: sequence specs in, certificates and plot data out.
//
// Exit codes: 0 verified / success, 1 falsified, 2 resource or precision
// limit, 64 usage (malformed flags, specs, or input files).

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "muntz/c0.hpp"
#include "muntz/errors.hpp"
#include "muntz/exponents.hpp"
#include "muntz/functional.hpp"
#include "muntz/json_io.hpp"
#include "muntz/octa.hpp"
#include "muntz/polynomial.hpp"
#include "muntz/spikes.hpp"

namespace {

using muntz::json;

constexpr int kExitVerified = 0;
constexpr int kExitFalsified = 1;
constexpr int kExitLimit = 2;
constexpr int kExitUsage = 64;

void write_text(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw muntz::InvalidInput("cannot open for writing: " + path);
  out << text;
  if (!out) throw muntz::InvalidInput("short write: " + path);
}

json read_json_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw muntz::InvalidInput("cannot open: " + path);
  try {
    return json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw muntz::InvalidInput(path + ": " + e.what());
  }
}

std::vector<double> parse_weights(const std::string& csv) {
  std::vector<double> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) throw muntz::InvalidInput("weights: empty entry");
    std::size_t used = 0;
    double w = 0.0;
    try {
      w = std::stod(item, &used);
    } catch (const std::exception&) {
      throw muntz::InvalidInput("weights: bad number '" + item + "'");
    }
    if (used != item.size())
      throw muntz::InvalidInput("weights: trailing junk in '" + item + "'");
    out.push_back(w);
  }
  if (out.empty()) throw muntz::InvalidInput("weights: empty list");
  return out;
}

std::string fmt(double v, int prec = 10) {
  std::ostringstream os;
  os << std::setprecision(prec) << v;
  return os.str();
}

// Geometric t-grid samples of f for plotting, one row per sample.
void append_csv_rows(std::ostringstream& os, std::size_t tag,
                     const muntz::MuntzPolynomial& f, double t_lo, double t_hi,
                     int points) {
  if (!(t_lo > 0.0) || !(t_hi > t_lo)) return;
  const double ratio = std::log(t_hi / t_lo);
  for (int i = 0; i <= points; ++i) {
    const double t = t_lo * std::exp(ratio * (double(i) / points));
    const auto at = muntz::PointT::from_t(t);
    os << tag << ',' << fmt(at.x(), 12) << ',' << fmt(t, 12) << ','
       << fmt(f.eval(at), 12) << '\n';
  }
}

// ---------------------------------------------------------------- spikes --

struct SpikesConfig {
  std::string lambda;
  std::size_t count = 5;
  double tol = 1e-10;
  std::string out;
  std::string csv;
  bool json_only = false;
};

int run_spikes(const SpikesConfig& cfg) {
  auto seq = muntz::parse_sequence_spec(cfg.lambda, cfg.count + 1);
  if (seq.size() < 2) throw muntz::InvalidInput("spikes: need at least two exponents");
  const std::size_t pairs = std::min(cfg.count, seq.size() - 1);

  std::vector<muntz::SpikeProfile> profiles;
  for (std::size_t k = 1; k <= pairs; ++k)
    profiles.push_back(muntz::profile(muntz::spike_at(seq, k)));

  if (!cfg.json_only) {
    std::cout << std::setw(4) << "k" << std::setw(16) << "lambda_k"
              << std::setw(16) << "lambda_k+1" << std::setw(16) << "argmax_x"
              << std::setw(16) << "norm" << std::setw(16) << "y" << '\n';
    for (std::size_t k = 1; k <= pairs; ++k) {
      const auto& p = profiles[k - 1];
      std::cout << std::setw(4) << k << std::setw(16) << fmt(p.alpha, 8)
                << std::setw(16) << fmt(p.beta, 8) << std::setw(16)
                << fmt(p.argmax.x()) << std::setw(16) << fmt(p.norm)
                << std::setw(16) << fmt(p.y_lower_bound) << '\n';
    }
  }

  json j;
  j["schema"] = "spike-profiles/1";
  j["sequence"] = muntz::sequence_json(seq.prefix(pairs + 1));
  j["profiles"] = json::array();
  for (const auto& p : profiles) j["profiles"].push_back(muntz::profile_json(p));
  if (!cfg.out.empty() || cfg.json_only) write_text(cfg.out, muntz::dump(j));

  if (!cfg.csv.empty()) {
    std::ostringstream os;
    os << "k,x,t,value\n";
    for (std::size_t k = 1; k <= pairs; ++k) {
      const auto& p = profiles[k - 1];
      const auto spike = muntz::spike_at(seq, k);
      const double t_mid =
          p.alpha_zero_edge ? std::log(2.0) / p.beta : p.argmax.t();
      append_csv_rows(os, k, spike.polynomial(), t_mid / 30.0, t_mid * 30.0, 256);
    }
    write_text(cfg.csv, os.str());
  }
  return kExitVerified;
}

// -------------------------------------------------------------------- c0 --

struct C0Config {
  std::string lambda;
  std::size_t n = 4;
  double tol = 1e-10;
  std::size_t prefix = 200;
  std::string out;
  std::string csv;
  bool canonical = false;
  bool json_only = false;
};

int run_c0(const C0Config& cfg) {
  auto seq = muntz::parse_sequence_spec(cfg.lambda, cfg.prefix);
  muntz::SupNormOptions opts;
  opts.tol = cfg.tol;
  const auto cert = muntz::c0_build(seq, cfg.n, opts);

  if (!cfg.json_only) {
    std::ostream& tab = cfg.out.empty() ? std::cerr : std::cout;
    tab << std::setw(4) << "n" << std::setw(6) << "k" << std::setw(14)
        << "alpha" << std::setw(14) << "beta" << std::setw(14) << "norm"
        << std::setw(12) << "level" << std::setw(16) << "a_x" << std::setw(16)
        << "b_x" << '\n';
    for (const auto& pk : cert.picks) {
      tab << std::setw(4) << pk.n << std::setw(6) << pk.k << std::setw(14)
          << fmt(pk.alpha, 6) << std::setw(14) << fmt(pk.beta, 6)
          << std::setw(14) << fmt(pk.scale * pk.spike_norm, 8) << std::setw(12)
          << fmt(pk.level, 6) << std::setw(16) << fmt(pk.interval.a.x())
          << std::setw(16) << fmt(pk.interval.b.x()) << '\n';
    }
    tab << "Muntz partial sum " << fmt(cert.muntz_partial_sum);
    if (cert.rip_tail_bound) tab << ", tail bound " << fmt(*cert.rip_tail_bound);
    tab << '\n';
  }

  write_text(cfg.out, muntz::dump(muntz::certificate_json(cert, cfg.canonical)));

  if (!cfg.csv.empty()) {
    std::ostringstream os;
    os << "n,x,t,value\n";
    for (std::size_t i = 0; i < cert.functions.size(); ++i) {
      const auto& iv = cert.picks[i].interval;
      append_csv_rows(os, cert.picks[i].n, cert.functions[i], iv.b.t() / 8.0,
                      iv.a.t() * 8.0, 256);
    }
    write_text(cfg.csv, os.str());
  }
  return kExitVerified;
}

// ------------------------------------------------------------- verify-c0 --

struct VerifyC0Config {
  std::string cert_path;
  std::size_t grid = 100000;
  std::size_t trials = 1000;
  std::uint64_t seed = 42;
  double tol = 1e-10;
  std::string report;
  bool json_only = false;
};

int run_verify_c0(const VerifyC0Config& cfg) {
  const auto cert = muntz::c0_certificate_from_json(read_json_file(cfg.cert_path));
  muntz::SupNormOptions opts;
  opts.tol = cfg.tol;
  const auto conds = muntz::verify_conditions(cert, cfg.grid, opts);
  const auto ineq = muntz::verify_c0_inequalities(cert, cfg.trials, cfg.seed, opts);
  const bool ok = conds.all_hold && ineq.all_within;

  const json rep = muntz::report_json(conds, ineq);
  if (!cfg.report.empty()) write_text(cfg.report, muntz::dump(rep));

  if (cfg.json_only) {
    if (cfg.report.empty()) write_text("", muntz::dump(rep));
  } else {
    std::cout << std::setw(12) << "condition" << std::setw(16) << "margin"
              << std::setw(8) << "holds" << std::setw(8) << "stage"
              << std::setw(16) << "worst_x" << '\n';
    for (const auto& c : conds.conditions) {
      std::cout << std::setw(12) << c.condition << std::setw(16)
                << fmt(c.margin, 6) << std::setw(8) << (c.holds ? "yes" : "NO")
                << std::setw(8) << c.stage << std::setw(16)
                << fmt(c.worst_point.x()) << '\n';
    }
    std::cout << "basis norms: worst |norm - (1 - 2^-n)| = "
              << fmt(ineq.worst_basis_norm_error, 6) << '\n';
    std::cout << "trials " << ineq.trials.size() << ", seed " << ineq.seed
              << ": norms in [" << fmt(ineq.min_norm) << ", "
              << fmt(ineq.max_norm) << "], want [" << fmt(ineq.m) << ", "
              << fmt(ineq.M) << "]\n";
    std::cout << (ok ? "VERIFIED" : "FALSIFIED") << '\n';
  }
  return ok ? kExitVerified : kExitFalsified;
}

// ------------------------------------------------------------------ octa --

struct OctaConfig {
  std::string slices_path;
  std::string weights;
  double eps = 0.05;
  std::string lambda;
  std::size_t kmax = 64;
  std::size_t prefix = 0;  // 0: derive from kmax
  double tol = 1e-10;
  std::string out;
  bool canonical = false;
  bool json_only = false;
};

int run_octa(const OctaConfig& cfg) {
  const auto slices = muntz::slices_from_json(read_json_file(cfg.slices_path));
  std::vector<double> weights;
  if (cfg.weights.empty()) {
    weights.assign(slices.size(), 1.0 / double(slices.size()));
  } else {
    weights = parse_weights(cfg.weights);
  }
  const std::size_t prefix = cfg.prefix ? cfg.prefix : cfg.kmax + 1;
  auto seq = muntz::parse_sequence_spec(cfg.lambda, prefix);
  muntz::SupNormOptions opts;
  opts.tol = cfg.tol;
  const auto cert =
      muntz::diameter_certificate(slices, weights, cfg.eps, seq, cfg.kmax, opts);

  if (!cfg.json_only) {
    std::ostream& tab = cfg.out.empty() ? std::cerr : std::cout;
    tab << "k = " << cert.chosen_k << " (spike " << fmt(cert.spike_alpha, 6)
        << " / " << fmt(cert.spike_beta, 6) << ", peak x = "
        << fmt(cert.spike_argmax.x()) << ")\n";
    tab << "separation " << fmt(cert.separation) << " >= "
        << fmt(2.0 * cert.scale) << ", |u+| = " << fmt(cert.u_plus_norm)
        << ", |u-| = " << fmt(cert.u_minus_norm) << '\n';
    tab << std::setw(6) << "slice" << std::setw(14) << "norm+"
        << std::setw(14) << "norm-" << std::setw(14) << "member+"
        << std::setw(14) << "member-" << std::setw(14) << "osc"
        << std::setw(14) << "margin" << '\n';
    for (const auto& c : cert.membership) {
      tab << std::setw(6) << c.slice << std::setw(14) << fmt(c.norm_plus, 8)
          << std::setw(14) << fmt(c.norm_minus, 8) << std::setw(14)
          << fmt(c.member_plus, 8) << std::setw(14) << fmt(c.member_minus, 8)
          << std::setw(14) << fmt(c.oscillation, 6) << std::setw(14)
          << fmt(c.margin, 6) << '\n';
    }
    tab << (cert.verified ? "VERIFIED" : "FALSIFIED") << '\n';
  }

  write_text(cfg.out, muntz::dump(muntz::certificate_json(cert, cfg.canonical)));
  return cert.verified ? kExitVerified : kExitFalsified;
}

// -------------------------------------------------------------- weaknull --

struct WeakNullConfig {
  std::string lambda;
  std::string functional;
  std::size_t kmax = 30;
  double threshold = 0.01;
  std::string out;
  std::string csv;
  bool json_only = false;
};

int run_weaknull(const WeakNullConfig& cfg) {
  auto seq = muntz::parse_sequence_spec(cfg.lambda, cfg.kmax + 1);
  const auto mu = muntz::parse_functional_spec(cfg.functional);
  const auto trace = muntz::weak_null_trace(seq, mu, cfg.kmax);

  // Smallest K with every entry below threshold from K on.
  std::optional<std::size_t> settle;
  for (std::size_t i = trace.size(); i-- > 0;) {
    if (trace[i] < cfg.threshold)
      settle = i + 1;
    else
      break;
  }

  if (!cfg.json_only) {
    std::cout << std::setw(4) << "k" << std::setw(18) << "|mu(p_k/|p_k|)|"
              << '\n';
    for (std::size_t i = 0; i < trace.size(); ++i)
      std::cout << std::setw(4) << (i + 1) << std::setw(18) << fmt(trace[i])
                << '\n';
    if (settle)
      std::cout << "below " << fmt(cfg.threshold, 6) << " from k = " << *settle
                << " on\n";
    else
      std::cout << "never settles below " << fmt(cfg.threshold, 6)
                << " within k <= " << trace.size() << '\n';
  }

  json j;
  j["schema"] = "weak-null-trace/1";
  j["threshold"] = cfg.threshold;
  j["trace"] = trace;
  j["settle_k"] = settle ? json(*settle) : json(nullptr);
  if (!cfg.out.empty() || cfg.json_only) write_text(cfg.out, muntz::dump(j));

  if (!cfg.csv.empty()) {
    std::ostringstream os;
    os << "k,value\n";
    for (std::size_t i = 0; i < trace.size(); ++i)
      os << (i + 1) << ',' << fmt(trace[i], 12) << '\n';
    write_text(cfg.csv, os.str());
  }
  return settle ? kExitVerified : kExitFalsified;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Muntz-space laboratory: spikes, c0 copies, slice separation"};
  app.require_subcommand(1);

  SpikesConfig spikes;
  auto* cmd_spikes = app.add_subcommand("spikes", "Profile consecutive spike pairs");
  cmd_spikes->add_option("--lambda", spikes.lambda, "Sequence spec")->required();
  cmd_spikes->add_option("--count", spikes.count, "Number of pairs");
  cmd_spikes->add_option("--tol", spikes.tol, "Relative tolerance");
  cmd_spikes->add_option("--out", spikes.out, "Profile JSON path");
  cmd_spikes->add_option("--csv", spikes.csv, "Plot data CSV path");
  cmd_spikes->add_flag("--json-only", spikes.json_only, "Suppress tables");

  C0Config c0;
  auto* cmd_c0 = app.add_subcommand("c0", "Build a c0-copy certificate");
  cmd_c0->add_option("--lambda", c0.lambda, "Sequence spec")->required();
  cmd_c0->add_option("--n", c0.n, "Number of basis functions");
  cmd_c0->add_option("--tol", c0.tol, "Relative tolerance");
  cmd_c0->add_option("--prefix", c0.prefix, "Family values to materialize");
  cmd_c0->add_option("--out", c0.out, "Certificate path (default stdout)");
  cmd_c0->add_option("--csv", c0.csv, "Plot data CSV path");
  cmd_c0->add_flag("--canonical", c0.canonical, "Omit timestamp");
  cmd_c0->add_flag("--json-only", c0.json_only, "Suppress tables");

  VerifyC0Config vc0;
  auto* cmd_vc0 = app.add_subcommand("verify-c0", "Re-check a c0 certificate");
  cmd_vc0->add_option("cert", vc0.cert_path, "Certificate JSON")->required();
  cmd_vc0->add_option("--grid", vc0.grid, "Grid points per interval");
  cmd_vc0->add_option("--trials", vc0.trials, "Random coefficient trials");
  cmd_vc0->add_option("--seed", vc0.seed, "Trial seed");
  cmd_vc0->add_option("--tol", vc0.tol, "Relative tolerance");
  cmd_vc0->add_option("--report", vc0.report, "Verification report path");
  cmd_vc0->add_flag("--json-only", vc0.json_only, "Suppress tables");

  OctaConfig octa;
  auto* cmd_octa = app.add_subcommand("octa", "Slice separation certificate");
  cmd_octa->add_option("--slices", octa.slices_path, "slices.json")->required();
  cmd_octa->add_option("--weights", octa.weights, "Comma list, default uniform");
  cmd_octa->add_option("--eps", octa.eps, "Perturbation epsilon");
  cmd_octa->add_option("--lambda", octa.lambda, "Sequence spec")->required();
  cmd_octa->add_option("--kmax", octa.kmax, "Largest spike index to scan");
  cmd_octa->add_option("--prefix", octa.prefix, "Family values (default kmax+1)");
  cmd_octa->add_option("--tol", octa.tol, "Relative tolerance");
  cmd_octa->add_option("--out", octa.out, "Certificate path (default stdout)");
  cmd_octa->add_flag("--canonical", octa.canonical, "Omit timestamp");
  cmd_octa->add_flag("--json-only", octa.json_only, "Suppress tables");

  WeakNullConfig wn;
  auto* cmd_wn = app.add_subcommand("weaknull", "Trace |mu| along the spikes");
  cmd_wn->add_option("--lambda", wn.lambda, "Sequence spec")->required();
  cmd_wn->add_option("--functional", wn.functional, "w@x[,w@x...]")->required();
  cmd_wn->add_option("--kmax", wn.kmax, "Pairs to trace");
  cmd_wn->add_option("--threshold", wn.threshold, "Settle threshold");
  cmd_wn->add_option("--out", wn.out, "Trace JSON path");
  cmd_wn->add_option("--csv", wn.csv, "Plot data CSV path");
  cmd_wn->add_flag("--json-only", wn.json_only, "Suppress tables");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (*cmd_spikes) return run_spikes(spikes);
    if (*cmd_c0) return run_c0(c0);
    if (*cmd_vc0) return run_verify_c0(vc0);
    if (*cmd_octa) return run_octa(octa);
    if (*cmd_wn) return run_weaknull(wn);
    std::cerr << "no subcommand\n";
    return kExitUsage;
  } catch (const muntz::InvalidInput& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const muntz::EmptyInterval& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const muntz::ConstructionFailure& e) {
    std::cerr << "falsified: " << e.what() << '\n';
    return kExitFalsified;
  } catch (const muntz::InsufficientSequence& e) {
    std::cerr << "limit: " << e.what() << '\n';
    return kExitLimit;
  } catch (const muntz::ToleranceError& e) {
    std::cerr << "limit: " << e.what() << '\n';
    return kExitLimit;
  } catch (const muntz::NumericalInconsistency& e) {
    std::cerr << "limit: " << e.what() << '\n';
    return kExitLimit;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitLimit;
  }
}
