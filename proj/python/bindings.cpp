#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "relayarq/analytic.hpp"
#include "relayarq/channel.hpp"
#include "relayarq/montecarlo.hpp"
#include "relayarq/optimizer.hpp"
#include "relayarq/special_fn.hpp"

namespace py = pybind11;
using namespace relayarq;

PYBIND11_MODULE(_core, m) {
    m.doc() = "goodput models and ARQ protocol simulation for a 3-node relay network";

    py::enum_<Mode>(m, "Mode")
        .value("SINGLE", Mode::Single)
        .value("AF", Mode::AF)
        .value("DF", Mode::DF);

    py::enum_<OutageSource>(m, "OutageSource")
        .value("SAMPLED_FADING", OutageSource::SampledFading)
        .value("FIXED_EPS", OutageSource::FixedEps);

    py::class_<ChannelParams>(m, "ChannelParams")
        .def(py::init([](double gamma, double alpha, double k) {
                 ChannelParams p{gamma, alpha, k};
                 p.validate();
                 return p;
             }),
             py::arg("gamma"), py::arg("alpha") = 3.12, py::arg("k") = 0.5)
        .def_readwrite("gamma", &ChannelParams::gamma)
        .def_readwrite("alpha", &ChannelParams::alpha)
        .def_readwrite("k", &ChannelParams::k);

    py::class_<OutageSet>(m, "OutageSet")
        .def(py::init<>())
        .def_readwrite("eps_sd", &OutageSet::eps_sd)
        .def_readwrite("eps_path2", &OutageSet::eps_path2)
        .def_readwrite("eps_rd", &OutageSet::eps_rd);

    py::class_<StateDistribution>(m, "StateDistribution")
        .def_readonly("mode", &StateDistribution::mode)
        .def_readonly("probs", &StateDistribution::probs);

    py::class_<GoodputResult>(m, "GoodputResult")
        .def_readonly("mode", &GoodputResult::mode)
        .def_readonly("rate", &GoodputResult::rate)
        .def_readonly("expected_time", &GoodputResult::expected_time)
        .def_readonly("goodput", &GoodputResult::goodput);

    m.def("bessel_k1", &bessel_k1, py::arg("x"));
    m.def("xi_k1_factor", &xi_k1_factor, py::arg("xi"));

    m.def("outage_single", &outage_single, py::arg("gamma"), py::arg("rate"),
          py::arg("sigma2") = 1.0);
    m.def("outage_af_relay_path", &outage_af_relay_path, py::arg("params"),
          py::arg("rate"));
    m.def("outage_df_links", &outage_df_links, py::arg("params"), py::arg("rate"));

    m.def("state_probs_af", &state_probs_af, py::arg("eps1"), py::arg("eps2"));
    m.def("state_probs_df", &state_probs_df, py::arg("eps1"), py::arg("eps2"),
          py::arg("eps3"));
    m.def("expected_time_af", &expected_time_af, py::arg("eps1"), py::arg("eps2"));
    m.def("expected_time_df", &expected_time_df, py::arg("eps1"), py::arg("eps2"),
          py::arg("eps3"));
    m.def("expected_time_df_reduced", &expected_time_df_reduced, py::arg("eps1"),
          py::arg("eps2"), py::arg("eps3"));
    m.def("goodput_single", &goodput_single, py::arg("gamma"), py::arg("rate"),
          py::arg("sigma2") = 1.0);
    m.def("goodput_af", &goodput_af, py::arg("params"), py::arg("rate"));
    m.def("goodput_df", &goodput_df, py::arg("params"), py::arg("rate"));

    py::class_<SimConfig>(m, "SimConfig")
        .def(py::init<>())
        .def_readwrite("mode", &SimConfig::mode)
        .def_readwrite("source", &SimConfig::source)
        .def_readwrite("params", &SimConfig::params)
        .def_readwrite("eps", &SimConfig::eps)
        .def_readwrite("rate", &SimConfig::rate)
        .def_readwrite("trials", &SimConfig::trials)
        .def_readwrite("seed", &SimConfig::seed)
        .def_readwrite("max_slots_per_codeword", &SimConfig::max_slots_per_codeword)
        .def_readwrite("threads", &SimConfig::threads);

    py::class_<SimReport>(m, "SimReport")
        .def_readonly("mean_slots", &SimReport::mean_slots)
        .def_readonly("std_error", &SimReport::std_error)
        .def_readonly("empirical_goodput", &SimReport::empirical_goodput)
        .def_readonly("trials_used", &SimReport::trials_used)
        .def_readonly("truncated_trials", &SimReport::truncated_trials)
        .def_readonly("first_state_counts", &SimReport::first_state_counts);

    m.def("run_batch", &run_batch, py::arg("config"),
          py::call_guard<py::gil_scoped_release>());

    py::class_<KOptimum>(m, "KOptimum")
        .def_readonly("k_star", &KOptimum::k_star)
        .def_readonly("eta_star", &KOptimum::eta_star);

    py::class_<RateOptimum>(m, "RateOptimum")
        .def_readonly("rate_star", &RateOptimum::rate_star)
        .def_readonly("eta_star", &RateOptimum::eta_star)
        .def_readonly("boundary", &RateOptimum::boundary);

    py::class_<SearchPoint>(m, "SearchPoint")
        .def_readonly("rate", &SearchPoint::rate)
        .def_readonly("k", &SearchPoint::k)
        .def_readonly("goodput", &SearchPoint::goodput);

    py::class_<OptResult>(m, "OptResult")
        .def_readonly("mode", &OptResult::mode)
        .def_readonly("best_rate", &OptResult::best_rate)
        .def_readonly("best_k", &OptResult::best_k)
        .def_readonly("best_goodput", &OptResult::best_goodput)
        .def_readonly("sweeps", &OptResult::sweeps)
        .def_readonly("rate_on_boundary", &OptResult::rate_on_boundary)
        .def_readonly("search_trace", &OptResult::search_trace);

    py::class_<RateRange>(m, "RateRange")
        .def(py::init<>())
        .def(py::init([](double lo, double hi) { return RateRange{lo, hi}; }),
             py::arg("lo"), py::arg("hi"))
        .def_readwrite("lo", &RateRange::lo)
        .def_readwrite("hi", &RateRange::hi);

    m.def("optimize_k", &optimize_k, py::arg("mode"), py::arg("gamma"),
          py::arg("alpha"), py::arg("rate"));
    m.def("optimize_rate", &optimize_rate, py::arg("mode"), py::arg("gamma"),
          py::arg("alpha"), py::arg("k"), py::arg("range") = RateRange{});
    m.def("optimize_joint", &optimize_joint, py::arg("mode"), py::arg("gamma"),
          py::arg("alpha"), py::arg("range") = RateRange{});
}
