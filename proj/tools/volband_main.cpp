#include <algorithm>
#include <chrono>
#include <cstdint>
#include <exception>
#include <fstream>
#include <iostream>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include <CLI11.hpp>

#include "volband/csv.hpp"
#include "volband/errors.hpp"
#include "volband/igmc.hpp"
#include "volband/increments.hpp"
#include "volband/manifest.hpp"
#include "volband/sampler.hpp"
#include "volband/sde.hpp"
#include "volband/summary.hpp"

namespace {

using volband::data_error;
using volband::numeric_error;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitData = 3;
constexpr int kExitNumeric = 4;

struct SimulateOptions {
  std::string scenario;
  std::size_t grid = 800001;
  std::size_t n = 4000;
  std::uint64_t seed = 1;
  double horizon = 1.0;
  double x0 = 0.0;
  bool x0_set = false;
  double constant_s = 2.0;
  double eta1 = 6.0;
  double eta2 = 3.0;
  double eta3 = 2.0;
  double drift_slope = 0.0;
  double drift_intercept = 0.0;
  bool drift_set = false;
  std::string vol_steps = "0:2";
  std::string out = "sim";
};

struct FitOptions {
  std::string input;
  std::size_t bins = 0;
  std::size_t bin_width = 0;
  std::string transform = "none";
  std::string prior = "igmc";
  double a0 = 0.1;
  double b0 = 0.1;
  std::vector<double> hyperprior = {0.3, 0.3};
  double fixed_alpha = 0.0;
  double fixed_alpha_zeta = 0.0;
  bool fixed_mode = false;
  bool fixed_zeta_set = false;
  double alpha1 = 0.1;
  std::size_t iters = 200000;
  std::size_t burnin = 1000;
  std::size_t thin = 1;
  double level = 0.95;
  std::uint64_t seed = 1;
  double sigma0 = 1.0;
  double target_accept = 0.5;
  std::size_t adapt_window = 100;
  std::size_t chains = 1;
  double horizon = 1.0;
  std::string out = "fit";
};

// "0:10,0.3:20" -> piecewise constant levels starting at the given times.
std::vector<std::pair<double, double>> parse_vol_steps(const std::string& text,
                                                       double horizon) {
  std::vector<std::pair<double, double>> steps;
  std::size_t begin = 0;
  while (begin <= text.size()) {
    const std::size_t end = std::min(text.find(',', begin), text.size());
    const std::string item = text.substr(begin, end - begin);
    const std::size_t colon = item.find(':');
    if (colon == std::string::npos) {
      throw std::invalid_argument("vol-steps: expected time:value, got '" +
                                  item + "'");
    }
    double t = 0.0;
    double s = 0.0;
    try {
      t = std::stod(item.substr(0, colon));
      s = std::stod(item.substr(colon + 1));
    } catch (const std::exception&) {
      throw std::invalid_argument("vol-steps: non-numeric entry '" + item +
                                  "'");
    }
    if (!(s > 0.0)) {
      throw std::invalid_argument("vol-steps: levels must be positive");
    }
    if (t < 0.0 || t >= horizon) {
      throw std::invalid_argument(
          "vol-steps: times must lie in [0, horizon)");
    }
    if (!steps.empty() && t <= steps.back().first) {
      throw std::invalid_argument("vol-steps: times must increase");
    }
    steps.emplace_back(t, s);
    if (end == text.size()) break;
    begin = end + 1;
  }
  if (steps.empty() || steps.front().first != 0.0) {
    throw std::invalid_argument("vol-steps: first entry must start at 0");
  }
  return steps;
}

double step_value(const std::vector<std::pair<double, double>>& steps,
                  double t) {
  double value = steps.front().second;
  for (const auto& [start, level] : steps) {
    if (start <= t) value = level;
  }
  return value;
}

int run_simulate(const SimulateOptions& opt) {
  const auto start = std::chrono::steady_clock::now();
  volband::Rng rng = volband::Rng::for_stream(opt.seed, 0);

  volband::ObservationRecord fine;
  std::vector<double> fine_vol;  // volatility on the fine grid

  if (opt.scenario == "blocks") {
    const double slope = opt.drift_set ? opt.drift_slope : -10.0;
    const double intercept = opt.drift_set ? opt.drift_intercept : 20.0;
    volband::SdeSpec spec;
    spec.drift = [slope, intercept](double, double x) {
      return slope * x + intercept;
    };
    spec.dispersion = [](double t, double) {
      return volband::blocks_volatility(t);
    };
    spec.initial_value = opt.x0;
    spec.horizon = opt.horizon;
    fine = volband::euler_maruyama(spec, opt.grid, rng);
    fine_vol.resize(fine.times.size());
    for (std::size_t j = 0; j < fine.times.size(); ++j) {
      fine_vol[j] = volband::blocks_volatility(fine.times[j]);
    }
  } else if (opt.scenario == "cir") {
    const double x0 = opt.x0_set ? opt.x0 : 1.0;
    volband::CirPath cir = volband::simulate_cir(
        opt.eta1, opt.eta2, opt.eta3, x0, opt.horizon, opt.grid, rng);
    if (!cir.feller_ok) {
      std::cerr << "warning: 2*eta1 <= eta3^2, the path may hit zero\n";
    }
    fine = std::move(cir.path);
    fine_vol = std::move(cir.realized_volatility);
  } else if (opt.scenario == "constant") {
    volband::SdeSpec spec;
    spec.drift = [&opt](double, double x) {
      return opt.drift_slope * x + opt.drift_intercept;
    };
    spec.dispersion = [&opt](double, double) { return opt.constant_s; };
    spec.initial_value = opt.x0;
    spec.horizon = opt.horizon;
    fine = volband::euler_maruyama(spec, opt.grid, rng);
    fine_vol.assign(fine.times.size(), opt.constant_s);
  } else if (opt.scenario == "custom") {
    const auto steps = parse_vol_steps(opt.vol_steps, opt.horizon);
    volband::SdeSpec spec;
    spec.drift = [&opt](double, double x) {
      return opt.drift_slope * x + opt.drift_intercept;
    };
    spec.dispersion = [&steps](double t, double) {
      return step_value(steps, t);
    };
    spec.initial_value = opt.x0;
    spec.horizon = opt.horizon;
    fine = volband::euler_maruyama(spec, opt.grid, rng);
    fine_vol.resize(fine.times.size());
    for (std::size_t j = 0; j < fine.times.size(); ++j) {
      fine_vol[j] = step_value(steps, fine.times[j]);
    }
  } else {
    throw std::invalid_argument("unknown scenario '" + opt.scenario + "'");
  }

  const volband::ObservationRecord path = volband::subsample(fine, opt.n);
  const std::size_t stride = fine.increment_count() / opt.n;
  std::vector<double> truth(opt.n + 1);
  for (std::size_t i = 0; i <= opt.n; ++i) truth[i] = fine_vol[i * stride];

  const std::string path_file = opt.out + "_path.csv";
  const std::string truth_file = opt.out + "_truth.csv";
  volband::write_observation_csv(path_file, path);
  volband::write_truth_csv(truth_file, path.times, truth);

  const double wall =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();

  volband::RunManifest manifest("simulate");
  manifest.add("scenario", opt.scenario);
  manifest.add("grid", static_cast<std::uint64_t>(opt.grid));
  manifest.add("n", static_cast<std::uint64_t>(opt.n));
  manifest.add("seed", opt.seed);
  manifest.add("horizon", opt.horizon);
  manifest.add("x0", opt.x0_set ? opt.x0
                                : (opt.scenario == "cir" ? 1.0 : opt.x0));
  if (opt.scenario == "cir") {
    manifest.add("eta1", opt.eta1);
    manifest.add("eta2", opt.eta2);
    manifest.add("eta3", opt.eta3);
  }
  if (opt.scenario == "constant") manifest.add("s", opt.constant_s);
  if (opt.scenario == "custom") manifest.add("vol_steps", opt.vol_steps);
  manifest.add("path_csv", path_file);
  manifest.add("path_digest", volband::file_digest(path_file));
  manifest.add("truth_csv", truth_file);
  manifest.add("truth_digest", volband::file_digest(truth_file));
  manifest.add("wall_seconds", wall);
  manifest.write(opt.out + "_manifest.txt");

  std::cout << "wrote " << path_file << " (" << path.values.size()
            << " rows) and " << truth_file << '\n';
  return kExitOk;
}

double median_of(std::vector<double> values) {
  std::sort(values.begin(), values.end());
  const std::size_t n = values.size();
  return n % 2 == 1 ? values[n / 2]
                    : 0.5 * (values[n / 2 - 1] + values[n / 2]);
}

int run_fit(const FitOptions& opt) {
  const auto start = std::chrono::steady_clock::now();

  if ((opt.bins == 0) == (opt.bin_width == 0)) {
    throw std::invalid_argument("fit: give exactly one of --bins/--bin-width");
  }
  if (opt.chains == 0) {
    throw std::invalid_argument("fit: at least one chain required");
  }

  const volband::ObservationRecord raw =
      volband::read_observation_csv(opt.input, opt.horizon);

  // Assemble increments, applying the requested transform.
  volband::ObservationRecord series = raw;
  std::vector<double> direct_increments;
  bool use_direct = false;
  if (opt.transform == "log") {
    series = volband::log_transform(raw);
  } else if (opt.transform == "returns") {
    direct_increments = volband::to_returns(raw);
    use_direct = true;
  } else if (opt.transform != "none") {
    throw std::invalid_argument("fit: unknown transform '" + opt.transform +
                                "'");
  }
  const std::size_t n =
      use_direct ? direct_increments.size() : series.increment_count();

  const volband::BinLayout layout =
      opt.bins > 0 ? volband::build_layout_with_bin_count(n, opt.horizon,
                                                          opt.bins)
                   : volband::build_bin_layout(n, opt.horizon, opt.bin_width);
  const volband::IncrementSet inc =
      use_direct
          ? volband::bin_increments(std::move(direct_increments), layout)
          : volband::compute_increments_and_sums(series, layout);

  volband::SamplerConfig config;
  config.iterations = opt.iters;
  config.burn_in = opt.burnin;
  config.thinning = opt.thin;
  config.alpha1 = opt.alpha1 == 0.0 ? 1e-6 : opt.alpha1;
  if (opt.fixed_mode) {
    config.alpha = volband::AlphaSettings::fixed_at(
        opt.fixed_alpha,
        opt.fixed_zeta_set ? opt.fixed_alpha_zeta : opt.fixed_alpha);
  } else {
    config.alpha = volband::AlphaSettings::with_hyperprior(opt.hyperprior[0],
                                                           opt.hyperprior[1]);
  }
  config.proposal_sigma = opt.sigma0;
  config.target_acceptance = opt.target_accept;
  config.adaptation_window = opt.adapt_window;
  config.iig_shape = opt.a0;
  config.iig_scale = opt.b0;
  config.seed = opt.seed;
  config.validate();
  if (config.kept_count() < 100) {
    throw std::invalid_argument(
        "fit: iters/burnin/thin keep fewer than 100 draws per chain");
  }

  const bool iig = opt.prior == "iig";
  if (!iig && opt.prior != "igmc") {
    throw std::invalid_argument("fit: unknown prior '" + opt.prior + "'");
  }

  // One chain per thread, each on its own seed stream.
  std::vector<volband::ChainOutput> chains(opt.chains);
  std::vector<std::exception_ptr> failures(opt.chains);
  {
    std::vector<std::thread> workers;
    workers.reserve(opt.chains);
    for (std::size_t c = 0; c < opt.chains; ++c) {
      workers.emplace_back([&, c] {
        try {
          volband::SamplerConfig chain_config = config;
          chain_config.stream = c;
          chains[c] = iig ? volband::run_iig_sampler(chain_config, inc, layout)
                          : volband::run_igmc_sampler(chain_config, inc,
                                                      layout);
        } catch (...) {
          failures[c] = std::current_exception();
        }
      });
    }
    for (std::thread& worker : workers) worker.join();
  }
  for (const std::exception_ptr& failure : failures) {
    if (failure) std::rethrow_exception(failure);
  }

  volband::ChainOutput pooled;
  pooled.bins = chains.front().bins;
  for (const volband::ChainOutput& chain : chains) {
    pooled.kept += chain.kept;
    pooled.theta_samples.insert(pooled.theta_samples.end(),
                                chain.theta_samples.begin(),
                                chain.theta_samples.end());
    pooled.alpha_trace.insert(pooled.alpha_trace.end(),
                              chain.alpha_trace.begin(),
                              chain.alpha_trace.end());
    pooled.alpha_accepts += chain.alpha_accepts;
    pooled.alpha_updates += chain.alpha_updates;
    pooled.floor_count += chain.floor_count;
  }
  pooled.final_zeta = chains.back().final_zeta;
  pooled.sigma_final = chains.front().sigma_final;
  if (pooled.alpha_updates > 0) {
    pooled.acceptance_rate = static_cast<double>(pooled.alpha_accepts) /
                             static_cast<double>(pooled.alpha_updates);
  }

  volband::PosteriorSummary summary =
      volband::summarize(pooled, layout, opt.level);
  if (opt.chains > 1) {
    // Pooling concatenates chains, which distorts autocorrelation at the
    // seams; sum per-chain ESS instead.
    std::vector<double> trace(chains.front().kept);
    for (std::size_t k = 0; k < layout.bin_count; ++k) {
      double total = 0.0;
      for (const volband::ChainOutput& chain : chains) {
        for (std::size_t t = 0; t < chain.kept; ++t) {
          trace[t] = chain.theta_at(t, k);
        }
        total += volband::effective_sample_size(trace);
      }
      summary.ess[k] = total;
    }
    if (!chains.front().alpha_trace.empty()) {
      double total = 0.0;
      for (const volband::ChainOutput& chain : chains) {
        total += volband::effective_sample_size(chain.alpha_trace);
      }
      summary.alpha_ess = total;
    }
  }

  const std::string bands_file = opt.out + "_bands.csv";
  const std::string trace_file = opt.out + "_alpha_trace.csv";
  const std::string diag_file = opt.out + "_diagnostics.txt";
  volband::write_band_csv(bands_file, summary);
  {
    std::vector<std::vector<double>> traces;
    for (const volband::ChainOutput& chain : chains) {
      if (!chain.alpha_trace.empty()) traces.push_back(chain.alpha_trace);
    }
    volband::write_alpha_trace_csv(trace_file, traces);
  }

  const double wall =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();

  {
    std::ofstream diag(diag_file);
    if (!diag) throw data_error("cannot write " + diag_file);
    diag << "prior = " << opt.prior << '\n';
    diag << "chains = " << opt.chains << '\n';
    diag << "kept_per_chain = " << chains.front().kept << '\n';
    diag << "bins = " << layout.bin_count << '\n';
    diag << "per_bin = " << layout.per_bin << '\n';
    diag << "remainder = " << layout.remainder << '\n';
    diag << "level = " << volband::format_double(opt.level) << '\n';
    diag << "floor_count = " << pooled.floor_count << '\n';
    for (std::size_t c = 0; c < chains.size(); ++c) {
      diag << "chain" << c << ".acceptance_rate = "
           << volband::format_double(chains[c].acceptance_rate) << '\n';
      diag << "chain" << c << ".sigma_final = "
           << volband::format_double(chains[c].sigma_final) << '\n';
    }
    std::vector<double> ess = summary.ess;
    diag << "theta_ess_min = "
         << volband::format_double(*std::min_element(ess.begin(), ess.end()))
         << '\n';
    diag << "theta_ess_median = " << volband::format_double(median_of(ess))
         << '\n';
    diag << "alpha_mean = " << volband::format_double(summary.alpha_mean)
         << '\n';
    diag << "alpha_band = [" << volband::format_double(summary.alpha_lower)
         << ", " << volband::format_double(summary.alpha_upper) << "]\n";
    diag << "alpha_ess = " << volband::format_double(summary.alpha_ess)
         << '\n';
    diag << "wall_seconds = " << volband::format_double(wall) << '\n';
    if (!diag) throw data_error("write failed for " + diag_file);
  }

  volband::RunManifest manifest("fit");
  manifest.add("input", opt.input);
  manifest.add("input_digest", volband::file_digest(opt.input));
  manifest.add("transform", opt.transform);
  manifest.add("prior", opt.prior);
  if (opt.bins > 0) manifest.add("bins_requested",
                                 static_cast<std::uint64_t>(opt.bins));
  if (opt.bin_width > 0) manifest.add("bin_width",
                                      static_cast<std::uint64_t>(opt.bin_width));
  manifest.add("bins_actual", static_cast<std::uint64_t>(layout.bin_count));
  manifest.add("per_bin", static_cast<std::uint64_t>(layout.per_bin));
  manifest.add("n", static_cast<std::uint64_t>(n));
  manifest.add("horizon", opt.horizon);
  manifest.add("alpha1", config.alpha1);
  if (iig) {
    manifest.add("a0", opt.a0);
    manifest.add("b0", opt.b0);
  } else if (opt.fixed_mode) {
    manifest.add("fixed_alpha", config.alpha.alpha);
    manifest.add("fixed_alpha_zeta", config.alpha.alpha_zeta);
  } else {
    manifest.add("hyperprior_shape", opt.hyperprior[0]);
    manifest.add("hyperprior_scale", opt.hyperprior[1]);
  }
  manifest.add("iters", static_cast<std::uint64_t>(opt.iters));
  manifest.add("burnin", static_cast<std::uint64_t>(opt.burnin));
  manifest.add("thin", static_cast<std::uint64_t>(opt.thin));
  manifest.add("level", opt.level);
  manifest.add("seed", opt.seed);
  manifest.add("sigma0", opt.sigma0);
  manifest.add("target_accept", opt.target_accept);
  manifest.add("adapt_window", static_cast<std::uint64_t>(opt.adapt_window));
  manifest.add("chains", static_cast<std::uint64_t>(opt.chains));
  manifest.add("bands_csv", bands_file);
  manifest.add("bands_digest", volband::file_digest(bands_file));
  manifest.add("alpha_trace_csv", trace_file);
  manifest.add("alpha_trace_digest", volband::file_digest(trace_file));
  manifest.add("diagnostics", diag_file);
  manifest.add("wall_seconds", wall);
  manifest.write(opt.out + "_manifest.txt");

  std::cout << "wrote " << bands_file << " (" << layout.bin_count
            << " bins, level " << opt.level << ")\n";
  return kExitOk;
}

void add_simulate_options(CLI::App* sub, SimulateOptions& opt) {
  sub->add_option("--scenario", opt.scenario, "blocks|cir|constant|custom")
      ->required()
      ->envname("VOLBAND_SCENARIO");
  sub->add_option("--grid", opt.grid, "fine grid points")
      ->check(CLI::Range(std::size_t{2}, std::size_t{100000001}))
      ->envname("VOLBAND_GRID");
  sub->add_option("--n", opt.n, "observations after subsampling")
      ->check(CLI::PositiveNumber)
      ->envname("VOLBAND_N");
  sub->add_option("--seed", opt.seed)->envname("VOLBAND_SEED");
  sub->add_option("--horizon", opt.horizon)
      ->check(CLI::PositiveNumber)
      ->envname("VOLBAND_HORIZON");
  auto* x0 = sub->add_option("--x0", opt.x0, "initial value")
                 ->envname("VOLBAND_X0");
  sub->add_option("--s", opt.constant_s, "constant volatility level")
      ->check(CLI::PositiveNumber)
      ->envname("VOLBAND_S");
  sub->add_option("--eta1", opt.eta1)->check(CLI::PositiveNumber);
  sub->add_option("--eta2", opt.eta2)->check(CLI::PositiveNumber);
  sub->add_option("--eta3", opt.eta3)->check(CLI::PositiveNumber);
  auto* slope = sub->add_option("--drift-slope", opt.drift_slope);
  auto* intercept = sub->add_option("--drift-intercept", opt.drift_intercept);
  sub->callback([&opt, x0, slope, intercept] {
    opt.x0_set = x0->count() > 0;
    opt.drift_set = slope->count() > 0 || intercept->count() > 0;
  });
  sub->add_option("--vol-steps", opt.vol_steps,
                  "piecewise volatility, e.g. 0:10,0.3:20");
  sub->add_option("--out", opt.out, "output file prefix")
      ->envname("VOLBAND_OUT");
}

void add_fit_options(CLI::App* sub, FitOptions& opt) {
  sub->add_option("--input", opt.input, "observation CSV")
      ->required()
      ->envname("VOLBAND_INPUT");
  auto* bins = sub->add_option("--bins", opt.bins, "number of bins")
                   ->envname("VOLBAND_BINS");
  sub->add_option("--bin-width", opt.bin_width, "increments per bin")
      ->excludes(bins)
      ->envname("VOLBAND_BIN_WIDTH");
  sub->add_option("--transform", opt.transform, "log|returns|none")
      ->envname("VOLBAND_TRANSFORM");
  sub->add_option("--prior", opt.prior, "igmc|iig")
      ->envname("VOLBAND_PRIOR");
  sub->add_option("--a0", opt.a0)->check(CLI::PositiveNumber);
  sub->add_option("--b0", opt.b0)->check(CLI::PositiveNumber);
  sub->add_option("--hyperprior", opt.hyperprior,
                  "IG hyperprior shape and scale")
      ->expected(2);
  auto* fixed = sub->add_option("--fixed-alpha", opt.fixed_alpha)
                    ->check(CLI::PositiveNumber);
  auto* fixed_zeta = sub->add_option("--fixed-alpha-zeta", opt.fixed_alpha_zeta)
                         ->check(CLI::PositiveNumber)
                         ->needs(fixed);
  sub->callback([&opt, fixed, fixed_zeta] {
    opt.fixed_mode = fixed->count() > 0;
    opt.fixed_zeta_set = fixed_zeta->count() > 0;
  });
  sub->add_option("--alpha1", opt.alpha1, "0 selects the vague limit 1e-6")
      ->check(CLI::NonNegativeNumber)
      ->envname("VOLBAND_ALPHA1");
  sub->add_option("--iters", opt.iters)
      ->check(CLI::PositiveNumber)
      ->envname("VOLBAND_ITERS");
  sub->add_option("--burnin", opt.burnin)->envname("VOLBAND_BURNIN");
  sub->add_option("--thin", opt.thin)
      ->check(CLI::PositiveNumber)
      ->envname("VOLBAND_THIN");
  sub->add_option("--level", opt.level, "credible band level")
      ->check(CLI::Range(1e-6, 1.0 - 1e-6))
      ->envname("VOLBAND_LEVEL");
  sub->add_option("--seed", opt.seed)->envname("VOLBAND_SEED");
  sub->add_option("--sigma0", opt.sigma0, "initial proposal scale")
      ->check(CLI::PositiveNumber);
  sub->add_option("--target-accept", opt.target_accept)
      ->check(CLI::Range(1e-6, 1.0 - 1e-6));
  sub->add_option("--adapt-window", opt.adapt_window)
      ->check(CLI::PositiveNumber);
  sub->add_option("--chains", opt.chains)
      ->check(CLI::PositiveNumber)
      ->envname("VOLBAND_CHAINS");
  sub->add_option("--horizon", opt.horizon)
      ->check(CLI::PositiveNumber)
      ->envname("VOLBAND_HORIZON");
  sub->add_option("--out", opt.out, "output file prefix")
      ->envname("VOLBAND_OUT");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bayesian volatility bands for discretely observed diffusions"};
  app.require_subcommand(1);
  // Config values fill in flags not given on the command line; sections
  // [simulate] and [fit] address the subcommand options.
  app.set_config("--config")->envname("VOLBAND_CONFIG");

  SimulateOptions sim;
  FitOptions fit;
  CLI::App* sim_cmd = app.add_subcommand("simulate", "generate synthetic paths");
  CLI::App* fit_cmd = app.add_subcommand("fit", "estimate volatility bands");
  add_simulate_options(sim_cmd, sim);
  add_fit_options(fit_cmd, fit);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (sim_cmd->parsed()) return run_simulate(sim);
    return run_fit(fit);
  } catch (const data_error& e) {
    std::cerr << "data error: " << e.what() << '\n';
    return kExitData;
  } catch (const numeric_error& e) {
    std::cerr << "numeric error: " << e.what() << '\n';
    return kExitNumeric;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitNumeric;
  }
}
