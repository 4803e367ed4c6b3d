#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "eurhythm/applications.hpp"
#include "eurhythm/classify.hpp"
#include "eurhythm/corpus.hpp"
#include "eurhythm/deepness.hpp"
#include "eurhythm/evenness.hpp"
#include "eurhythm/generators.hpp"
#include "eurhythm/numtheory.hpp"
#include "eurhythm/report.hpp"
#include "eurhythm/svg.hpp"
#include "eurhythm/verify.hpp"

namespace py = pybind11;
using namespace eurhythm;

PYBIND11_MODULE(_eurhythm, m) {
    m.doc() = "Cyclic rhythm generation, evenness, deepness, and classification";

    py::class_<Rhythm>(m, "Rhythm")
        .def(py::init<int, std::vector<int>>(), py::arg("timespan"), py::arg("onsets"))
        .def_property_readonly("timespan", &Rhythm::timespan)
        .def_property_readonly("onsets", &Rhythm::onsets)
        .def_property_readonly("onset_count", &Rhythm::onset_count)
        .def("has_onset", &Rhythm::has_onset)
        .def("__eq__", [](const Rhythm& a, const Rhythm& b) { return a == b; })
        .def("__hash__", [](const Rhythm& r) { return py::hash(py::str(to_subset_text(r))); })
        .def("__repr__", [](const Rhythm& r) { return "Rhythm('" + to_subset_text(r) + "')"; });

    py::class_<NecklaceClass>(m, "NecklaceClass")
        .def_readonly("timespan", &NecklaceClass::timespan)
        .def_readonly("canonical", &NecklaceClass::canonical)
        .def("__eq__", [](const NecklaceClass& a, const NecklaceClass& b) { return a == b; })
        .def("__repr__", [](const NecklaceClass& n) {
            return "NecklaceClass(" + to_distance_text(n.canonical) + "/" +
                   std::to_string(n.timespan) + ")";
        });

    py::enum_<AksakClass>(m, "AksakClass")
        .value("NOT_AKSAK", AksakClass::NotAksak)
        .value("AUTHENTIC", AksakClass::Authentic)
        .value("QUASI", AksakClass::QuasiAksak)
        .value("PSEUDO", AksakClass::PseudoAksak);

    py::enum_<StringClass>(m, "StringClass")
        .value("NEITHER", StringClass::Neither)
        .value("EUCLIDEAN", StringClass::EuclideanString)
        .value("REVERSE", StringClass::ReverseEuclideanString)
        .value("BOTH", StringClass::Both);

    py::class_<DeepForm>(m, "DeepForm")
        .def_property_readonly("is_exceptional_f",
                               [](const DeepForm& f) { return f.kind == DeepForm::Kind::ExceptionalF; })
        .def_readonly("rotation", &DeepForm::rotation)
        .def_readonly("scaling", &DeepForm::scaling)
        .def_readonly("onsets", &DeepForm::onsets)
        .def_readonly("base_timespan", &DeepForm::base_timespan)
        .def_readonly("base_step", &DeepForm::base_step)
        .def("reconstruct", &DeepForm::reconstruct)
        .def("__repr__", [](const DeepForm& f) { return "DeepForm(" + to_string(f) + ")"; });

    py::class_<CorpusEntry>(m, "CorpusEntry")
        .def_readonly("id", &CorpusEntry::id)
        .def_readonly("onsets", &CorpusEntry::onsets)
        .def_readonly("pulses", &CorpusEntry::pulses)
        .def_readonly("pattern", &CorpusEntry::pattern)
        .def_readonly("distance_seq", &CorpusEntry::distance_seq)
        .def_readonly("aksak", &CorpusEntry::aksak)
        .def_readonly("string_class", &CorpusEntry::string_class)
        .def_readonly("necklace_only", &CorpusEntry::necklace_only)
        .def_readonly("names", &CorpusEntry::names)
        .def_readonly("notes", &CorpusEntry::notes)
        .def("rhythm", &CorpusEntry::rhythm)
        .def("__repr__", [](const CorpusEntry& e) { return "CorpusEntry(" + e.id + ")"; });

    // core
    m.def("gcd", [](long long a, long long b) { return gcd(a, b); });
    m.def("mod_inverse", &mod_inverse);
    m.def("parse_box", &parse_box);
    m.def("to_box", &to_box);
    m.def("to_subset_text", &to_subset_text);
    m.def("parse_pattern", &parse_pattern);
    m.def("to_distance_seq", &to_distance_seq);
    m.def("from_distance_seq", &from_distance_seq, py::arg("gaps"), py::arg("start"),
          py::arg("timespan"));
    m.def("clockwise_dist", &clockwise_dist);
    m.def("geodesic_dist", &geodesic_dist);
    m.def("rotate", &rotate);
    m.def("scale", &scale);
    m.def("reverse", &reverse);
    m.def("canonical_necklace", py::overload_cast<const Rhythm&>(&canonical_necklace));
    m.def("smallest_period", &smallest_period);

    // generators
    m.def("bjorklund", &bjorklund, py::arg("onsets"), py::arg("pulses"));
    m.def("euclidean_recursive", &euclidean_recursive, py::arg("pulses"), py::arg("onsets"));
    m.def("clough_douthett", &clough_douthett, py::arg("pulses"), py::arg("onsets"));
    m.def("snap", &snap, py::arg("pulses"), py::arg("onsets"));
    m.def("generated_rhythm", &generated_rhythm, py::arg("onsets"), py::arg("pulses"),
          py::arg("step"));
    m.def("exceptional_f", &exceptional_f);

    // evenness
    m.def("chord_length", &chord_length);
    m.def("evenness_chordal", &evenness_chordal);
    m.def("evenness_geodesic", &evenness_geodesic);
    m.def("evenness_squared_geodesic", &evenness_squared_geodesic);
    m.def("has_property_star", &has_property_star);

    // deepness
    m.def("histogram", [](const Rhythm& r) {
        std::map<int, int> out;
        for (const auto& [d, c] : histogram(r)) out[d] = c;
        return out;
    });
    m.def("is_erdos_deep", &is_erdos_deep);
    m.def("is_winograd_deep", &is_winograd_deep);
    m.def("characterize_deep", &characterize_deep);
    m.def("shelling", &shelling);
    m.def("validate_shelling", &validate_shelling);

    // classify
    m.def("aksak_class", &aksak_class);
    m.def("euclidean_aksak_condition", &euclidean_aksak_condition, py::arg("onsets"),
          py::arg("pulses"));
    m.def("tau", &tau);
    m.def("is_euclidean_string", &is_euclidean_string);
    m.def("string_class", &string_class);

    // applications
    m.def("jewish_leap_year", &jewish_leap_year);
    m.def("jewish_leap_pattern", &jewish_leap_pattern);
    m.def("gregorian_leap_year", &gregorian_leap_year);
    m.def("digital_line_runs", [](int width, int height, const std::string& side) {
        if (side != "lower" && side != "upper")
            throw std::invalid_argument("side must be 'lower' or 'upper'");
        return digital_line_runs(width, height,
                                 side == "lower" ? LineSide::Lower : LineSide::Upper);
    });

    // corpus, report, svg
    m.def("load_corpus", &load_corpus);
    m.def("render_analysis", py::overload_cast<const Rhythm&>(&render_analysis));
    m.def("clock_svg", &clock_svg);
}
