#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <sstream>

#include "seqcomp/analyze.hpp"
#include "seqcomp/ioutil.hpp"
#include "seqcomp/seqcore.hpp"
#include "seqcomp/smooth.hpp"
#include "seqcomp/synth.hpp"
#include "seqcomp/xcorr.hpp"

namespace py = pybind11;
using namespace seqcomp;

PYBIND11_MODULE(_core, m) {
    m.doc() = "sequence comparison by per-symbol channel correlation";

    py::register_exception<error>(m, "Error");

    py::enum_<Engine>(m, "Engine")
        .value("naive", Engine::naive)
        .value("fft", Engine::fft);
    py::enum_<NormalizeMode>(m, "NormalizeMode")
        .value("distinct_rank", NormalizeMode::distinct_rank)
        .value("affine_quantize", NormalizeMode::affine_quantize);

    py::class_<Sequence>(m, "Sequence")
        .def(py::init<>())
        .def(py::init<std::vector<std::int64_t>>(), py::arg("values"))
        .def_readwrite("values", &Sequence::values)
        .def("__len__", &Sequence::size);

    py::class_<AlphabetSpec>(m, "AlphabetSpec")
        .def(py::init<>())
        .def_readwrite("mode", &AlphabetSpec::mode)
        .def_readwrite("m", &AlphabetSpec::m)
        .def_readwrite("symbol_table", &AlphabetSpec::symbol_table);

    py::class_<NormalizedSequence>(m, "NormalizedSequence")
        .def_readonly("codes", &NormalizedSequence::codes)
        .def_readonly("m", &NormalizedSequence::m)
        .def("__len__", &NormalizedSequence::size);

    py::class_<ChannelSet>(m, "ChannelSet")
        .def_readonly("channels", &ChannelSet::channels)
        .def_readonly("n", &ChannelSet::n)
        .def_property_readonly("m", &ChannelSet::m);

    py::class_<RealChannelSet>(m, "RealChannelSet")
        .def_readonly("channels", &RealChannelSet::channels)
        .def_readonly("n", &RealChannelSet::n)
        .def_property_readonly("m", &RealChannelSet::m);

    py::class_<ChannelCorrelation>(m, "ChannelCorrelation")
        .def_readonly("values", &ChannelCorrelation::values)
        .def_readonly("offset", &ChannelCorrelation::offset)
        .def_readonly("channel", &ChannelCorrelation::channel)
        .def("p_min", &ChannelCorrelation::p_min)
        .def("p_max", &ChannelCorrelation::p_max)
        .def("at", &ChannelCorrelation::at, py::arg("p"))
        .def("__len__", [](const ChannelCorrelation& c) { return c.values.size(); });

    py::class_<CoincidenceSignal>(m, "CoincidenceSignal")
        .def_readonly("values", &CoincidenceSignal::values)
        .def_readonly("offset", &CoincidenceSignal::offset)
        .def_readonly("ns", &CoincidenceSignal::ns)
        .def_readonly("nq", &CoincidenceSignal::nq)
        .def_readonly("m", &CoincidenceSignal::m)
        .def_readonly("smoothed", &CoincidenceSignal::smoothed)
        .def("p_min", &CoincidenceSignal::p_min)
        .def("p_max", &CoincidenceSignal::p_max)
        .def("at", &CoincidenceSignal::at, py::arg("p"))
        .def("__len__", [](const CoincidenceSignal& s) { return s.values.size(); });

    py::class_<RealSignal>(m, "RealSignal")
        .def_readonly("values", &RealSignal::values)
        .def_readonly("offset", &RealSignal::offset)
        .def("p_min", &RealSignal::p_min)
        .def("p_max", &RealSignal::p_max)
        .def("at", &RealSignal::at, py::arg("p"))
        .def("__len__", [](const RealSignal& s) { return s.values.size(); });

    py::class_<RectKernel>(m, "RectKernel")
        .def_readonly("width", &RectKernel::width)
        .def_readonly("taps", &RectKernel::taps)
        .def("radius", &RectKernel::radius);

    py::class_<NoiseModel>(m, "NoiseModel")
        .def_readonly("ns", &NoiseModel::ns)
        .def_readonly("nq", &NoiseModel::nq)
        .def_readonly("m", &NoiseModel::m)
        .def_readonly("mu", &NoiseModel::mu)
        .def_readonly("sigma", &NoiseModel::sigma)
        .def_readonly("offset", &NoiseModel::offset)
        .def_readonly("smoothed", &NoiseModel::smoothed)
        .def("mu_at", &NoiseModel::mu_at, py::arg("p"))
        .def("sigma_at", &NoiseModel::sigma_at, py::arg("p"));

    py::class_<Peak>(m, "Peak")
        .def_readonly("displacement", &Peak::displacement)
        .def_readonly("height", &Peak::height)
        .def_readonly("excess", &Peak::excess)
        .def_readonly("z", &Peak::z)
        .def("__repr__", [](const Peak& p) {
            std::ostringstream s;
            s << "Peak(displacement=" << p.displacement << ", height=" << p.height
              << ", excess=" << p.excess << ", z=" << p.z << ")";
            return s.str();
        });

    py::class_<Deletion>(m, "Deletion")
        .def(py::init<>())
        .def(py::init([](std::size_t pos, std::size_t len) {
                 return Deletion{pos, len};
             }),
             py::arg("pos"), py::arg("len"))
        .def_readwrite("pos", &Deletion::pos)
        .def_readwrite("len", &Deletion::len);

    py::class_<PlantedSpec>(m, "PlantedSpec")
        .def(py::init<>())
        .def_readwrite("n", &PlantedSpec::n)
        .def_readwrite("m", &PlantedSpec::m)
        .def_readwrite("block_length", &PlantedSpec::block_length)
        .def_readwrite("deletions", &PlantedSpec::deletions)
        .def_readwrite("seed", &PlantedSpec::seed);

    py::class_<GroundTruth>(m, "GroundTruth")
        .def_readonly("displacement", &GroundTruth::displacement)
        .def_readonly("length", &GroundTruth::length)
        .def("__repr__", [](const GroundTruth& t) {
            std::ostringstream s;
            s << "GroundTruth(displacement=" << t.displacement << ", length=" << t.length << ")";
            return s.str();
        });

    py::class_<PlantedPair>(m, "PlantedPair")
        .def_readonly("s", &PlantedPair::s)
        .def_readonly("q", &PlantedPair::q)
        .def_readonly("truth", &PlantedPair::truth);

    m.def("normalize", &normalize, py::arg("a"), py::arg("b"),
          py::arg("spec") = AlphabetSpec{});
    m.def("decompose", &decompose, py::arg("x"));
    m.def("coincidence", &coincidence, py::arg("s"), py::arg("q"),
          py::arg("engine") = Engine::fft, py::arg("threads") = 1);
    m.def(
        "correlate_channel",
        [](const std::vector<std::uint8_t>& b, const std::vector<std::uint8_t>& c, Engine engine,
           std::uint32_t channel) {
            return engine == Engine::naive ? correlate_channel_naive(b, c, channel)
                                           : correlate_channel_fft(b, c, channel);
        },
        py::arg("b"), py::arg("c"), py::arg("engine") = Engine::fft, py::arg("channel") = 0,
        "cross-correlate two binary channels");
    m.def("numeric_xcorr", &numeric_xcorr, py::arg("s"), py::arg("q"),
          py::arg("engine") = Engine::fft);
    m.def("rect_kernel", &rect_kernel, py::arg("w"));
    m.def("smooth_channels", &smooth_channels, py::arg("channels"), py::arg("kernel"));
    m.def("smoothed_coincidence", &smoothed_coincidence, py::arg("s"), py::arg("q"),
          py::arg("w"), py::arg("engine") = Engine::fft, py::arg("threads") = 1);
    m.def("expected_floor", &expected_floor, py::arg("ns"), py::arg("nq"), py::arg("m"));
    m.def("smoothed_floor", &smoothed_floor, py::arg("ns"), py::arg("nq"), py::arg("m"),
          py::arg("kernel"));
    m.def("detect_peaks", &detect_peaks, py::arg("signal"), py::arg("model"),
          py::arg("z_min") = 5.0, py::arg("min_excess") = 1.0);
    m.def("peak_to_background",
          py::overload_cast<const CoincidenceSignal&>(&peak_to_background), py::arg("signal"));
    m.def("peak_to_background", py::overload_cast<const RealSignal&>(&peak_to_background),
          py::arg("signal"));
    m.def("peak_to_background",
          py::overload_cast<const std::vector<double>&>(&peak_to_background),
          py::arg("values"));
    m.def("overlap", &overlap, py::arg("ns"), py::arg("nq"), py::arg("p"));
    m.def("engine_name", [](Engine e) { return std::string(engine_name(e)); }, py::arg("engine"));
    m.def("gen_uniform", &gen_uniform, py::arg("n"), py::arg("m"), py::arg("seed"));
    m.def("gen_planted", &gen_planted, py::arg("spec"));
    m.def("make_planted_spec", &make_planted_spec, py::arg("n"), py::arg("m"), py::arg("block"),
          py::arg("n_deletions"), py::arg("seed"));

    m.def(
        "compare",
        [](const std::vector<std::int64_t>& a, const std::vector<std::int64_t>& b, Engine engine,
           std::optional<double> smooth, unsigned threads) {
            const auto [na, nb] = normalize(Sequence(a), Sequence(b));
            const auto ca = decompose(na);
            const auto cb = decompose(nb);
            return smooth ? smoothed_coincidence(ca, cb, *smooth, engine, threads)
                          : coincidence(ca, cb, engine, threads);
        },
        py::arg("a"), py::arg("b"), py::arg("engine") = Engine::fft,
        py::arg("smooth") = py::none(), py::arg("threads") = 1,
        "normalize, decompose and correlate two raw sequences in one call");

    m.attr("DISPLACEMENT_CONVENTION") = std::string(kDisplacementConvention);
    m.attr("MAX_ALPHABET") = kMaxAlphabet;
}
