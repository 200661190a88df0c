#include <pybind11/functional.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include "volband/csv.hpp"
#include "volband/errors.hpp"
#include "volband/igmc.hpp"
#include "volband/increments.hpp"
#include "volband/likelihood.hpp"
#include "volband/manifest.hpp"
#include "volband/sampler.hpp"
#include "volband/sde.hpp"
#include "volband/summary.hpp"

namespace py = pybind11;

namespace {

py::array_t<double> theta_matrix(const volband::ChainOutput& chain) {
  py::array_t<double> out({chain.kept, chain.bins});
  std::copy(chain.theta_samples.begin(), chain.theta_samples.end(),
            out.mutable_data());
  return out;
}

volband::AlphaSettings alpha_from_args(bool hyperprior, double a, double b) {
  return hyperprior ? volband::AlphaSettings::with_hyperprior(a, b)
                    : volband::AlphaSettings::fixed_at(a, b);
}

}  // namespace

PYBIND11_MODULE(_volband, m) {
  m.doc() = "Bayesian volatility band estimation core";
  m.attr("__version__") = volband::kVersion;

  py::register_exception<volband::data_error>(m, "DataError",
                                              PyExc_ValueError);
  py::register_exception<volband::numeric_error>(m, "NumericError",
                                                 PyExc_ArithmeticError);

  py::class_<volband::ObservationRecord>(m, "ObservationRecord")
      .def_readonly("times", &volband::ObservationRecord::times)
      .def_readonly("values", &volband::ObservationRecord::values)
      .def_readonly("horizon", &volband::ObservationRecord::horizon)
      .def_readonly("equidistant", &volband::ObservationRecord::equidistant)
      .def("increment_count", &volband::ObservationRecord::increment_count);

  py::class_<volband::BinLayout>(m, "BinLayout")
      .def_readonly("increment_count", &volband::BinLayout::increment_count)
      .def_readonly("per_bin", &volband::BinLayout::per_bin)
      .def_readonly("bin_count", &volband::BinLayout::bin_count)
      .def_readonly("remainder", &volband::BinLayout::remainder)
      .def_readonly("horizon", &volband::BinLayout::horizon)
      .def_readonly("edges", &volband::BinLayout::edges)
      .def("increments_in_bin", &volband::BinLayout::increments_in_bin);

  py::class_<volband::IncrementSet>(m, "IncrementSet")
      .def_readonly("increments", &volband::IncrementSet::increments)
      .def_readonly("squared_bin_sums",
                    &volband::IncrementSet::squared_bin_sums);

  py::class_<volband::ChainOutput>(m, "ChainOutput")
      .def_readonly("kept", &volband::ChainOutput::kept)
      .def_readonly("bins", &volband::ChainOutput::bins)
      .def_readonly("alpha_trace", &volband::ChainOutput::alpha_trace)
      .def_readonly("acceptance_rate", &volband::ChainOutput::acceptance_rate)
      .def_readonly("floor_count", &volband::ChainOutput::floor_count)
      .def_readonly("sigma_final", &volband::ChainOutput::sigma_final)
      .def("theta", &theta_matrix,
           "Kept draws as a (kept, bins) array of squared volatilities.");

  py::class_<volband::PosteriorSummary>(m, "PosteriorSummary")
      .def_readonly("bin_left", &volband::PosteriorSummary::bin_left)
      .def_readonly("bin_right", &volband::PosteriorSummary::bin_right)
      .def_readonly("vol_mean", &volband::PosteriorSummary::vol_mean)
      .def_readonly("vol_lower", &volband::PosteriorSummary::vol_lower)
      .def_readonly("vol_upper", &volband::PosteriorSummary::vol_upper)
      .def_readonly("var_mean", &volband::PosteriorSummary::var_mean)
      .def_readonly("var_lower", &volband::PosteriorSummary::var_lower)
      .def_readonly("var_upper", &volband::PosteriorSummary::var_upper)
      .def_readonly("ess", &volband::PosteriorSummary::ess)
      .def_readonly("level", &volband::PosteriorSummary::level)
      .def_readonly("acceptance_rate",
                    &volband::PosteriorSummary::acceptance_rate)
      .def_readonly("alpha_mean", &volband::PosteriorSummary::alpha_mean)
      .def_readonly("alpha_lower", &volband::PosteriorSummary::alpha_lower)
      .def_readonly("alpha_upper", &volband::PosteriorSummary::alpha_upper)
      .def_readonly("alpha_ess", &volband::PosteriorSummary::alpha_ess);

  m.def("make_observation_record", &volband::make_observation_record,
        py::arg("times"), py::arg("values"));
  m.def("build_bin_layout", &volband::build_bin_layout, py::arg("n"),
        py::arg("horizon"), py::arg("per_bin"));
  m.def("build_layout_with_bin_count", &volband::build_layout_with_bin_count,
        py::arg("n"), py::arg("horizon"), py::arg("bin_count"));
  m.def("compute_increments", &volband::compute_increments_and_sums,
        py::arg("obs"), py::arg("layout"));
  m.def(
      "bin_increments",
      [](std::vector<double> increments, const volband::BinLayout& layout) {
        return volband::bin_increments(std::move(increments), layout);
      },
      py::arg("increments"), py::arg("layout"));
  m.def(
      "log_pseudo_likelihood",
      [](const std::vector<double>& theta, const volband::IncrementSet& inc,
         const volband::BinLayout& layout) {
        return volband::log_pseudo_likelihood(theta, inc, layout);
      },
      py::arg("theta"), py::arg("increments"), py::arg("layout"));

  m.def(
      "simulate_path",
      [](const std::function<double(double, double)>& drift,
         const std::function<double(double, double)>& dispersion, double x0,
         double horizon, std::size_t grid_points, std::uint64_t seed) {
        volband::SdeSpec spec;
        spec.drift = drift;
        spec.dispersion = dispersion;
        spec.initial_value = x0;
        spec.horizon = horizon;
        volband::Rng rng = volband::Rng::for_stream(seed, 0);
        return volband::euler_maruyama(spec, grid_points, rng);
      },
      py::arg("drift"), py::arg("dispersion"), py::arg("x0"),
      py::arg("horizon"), py::arg("grid_points"), py::arg("seed"));
  m.def("subsample", &volband::subsample, py::arg("path"), py::arg("n"));
  m.def("blocks_volatility", &volband::blocks_volatility, py::arg("t"));
  m.def(
      "simulate_cir",
      [](double eta1, double eta2, double eta3, double x0, double horizon,
         std::size_t grid_points, std::uint64_t seed) {
        volband::Rng rng = volband::Rng::for_stream(seed, 0);
        volband::CirPath cir = volband::simulate_cir(eta1, eta2, eta3, x0,
                                                     horizon, grid_points, rng);
        return py::make_tuple(cir.path, cir.realized_volatility, cir.feller_ok);
      },
      py::arg("eta1"), py::arg("eta2"), py::arg("eta3"), py::arg("x0"),
      py::arg("horizon"), py::arg("grid_points"), py::arg("seed"));
  m.def("log_transform", &volband::log_transform, py::arg("obs"));
  m.def("to_returns", &volband::to_returns, py::arg("obs"));

  m.def(
      "fit_igmc",
      [](const volband::IncrementSet& inc, const volband::BinLayout& layout,
         std::size_t iterations, std::size_t burn_in, std::size_t thinning,
         double alpha1, bool hyperprior, double alpha_a, double alpha_b,
         double proposal_sigma, std::uint64_t seed) {
        volband::SamplerConfig config;
        config.iterations = iterations;
        config.burn_in = burn_in;
        config.thinning = thinning;
        config.alpha1 = alpha1;
        config.alpha = alpha_from_args(hyperprior, alpha_a, alpha_b);
        config.proposal_sigma = proposal_sigma;
        config.seed = seed;
        config.validate();
        py::gil_scoped_release release;
        return volband::run_igmc_sampler(config, inc, layout);
      },
      py::arg("increments"), py::arg("layout"), py::arg("iterations") = 200000,
      py::arg("burn_in") = 1000, py::arg("thinning") = 1,
      py::arg("alpha1") = 0.1, py::arg("hyperprior") = true,
      py::arg("alpha_a") = 0.3, py::arg("alpha_b") = 0.3,
      py::arg("proposal_sigma") = 1.0, py::arg("seed") = 1,
      "Runs the IGMC Gibbs sampler. With hyperprior=True, alpha_a and "
      "alpha_b are the IG hyperprior shape and scale; otherwise they fix "
      "alpha and alpha_zeta.");
  m.def(
      "fit_iig",
      [](const volband::IncrementSet& inc, const volband::BinLayout& layout,
         std::size_t draws, double a0, double b0, std::uint64_t seed) {
        volband::SamplerConfig config;
        config.iterations = draws + 1;
        config.burn_in = 1;
        config.iig_shape = a0;
        config.iig_scale = b0;
        config.seed = seed;
        config.validate();
        py::gil_scoped_release release;
        return volband::run_iig_sampler(config, inc, layout);
      },
      py::arg("increments"), py::arg("layout"), py::arg("draws") = 10000,
      py::arg("a0") = 0.1, py::arg("b0") = 0.1, py::arg("seed") = 1);
  m.def("summarize", &volband::summarize, py::arg("chain"), py::arg("layout"),
        py::arg("level") = 0.95);

  m.def("read_observation_csv", &volband::read_observation_csv,
        py::arg("file"), py::arg("horizon") = 1.0);
  m.def("write_observation_csv", &volband::write_observation_csv,
        py::arg("file"), py::arg("obs"));
  m.def("write_band_csv", &volband::write_band_csv, py::arg("file"),
        py::arg("summary"));
}
