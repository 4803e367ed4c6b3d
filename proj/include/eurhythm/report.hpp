#pragma once

#include <optional>
#include <string>
#include <vector>

#include "eurhythm/classify.hpp"
#include "eurhythm/deepness.hpp"
#include "eurhythm/evenness.hpp"
#include "eurhythm/rhythm.hpp"

namespace eurhythm {

/// Everything the library can say about one rhythm; every field is the
/// direct result of the corresponding module call.
struct AnalysisReport {
    Rhythm rhythm;
    std::string box;
    std::string subset;
    std::optional<DistanceSeq> distance_seq;  // absent for the empty rhythm
    EvennessReport evenness;
    MultiplicityHistogram hist;
    bool erdos_deep = false;
    bool winograd_deep = false;
    std::optional<DeepForm> deep_form;
    std::optional<std::vector<int>> shelling_order;
    std::optional<AksakClass> aksak;          // k >= 1
    std::optional<StringClass> string_class;  // k >= 1
    std::optional<bool> property_star;        // k >= 2
    std::optional<int> period;                // k >= 1

    AnalysisReport() : rhythm(1, {}) {}
};

AnalysisReport analyze(const Rhythm& r);

/// Deterministic aligned-text rendering of a report.
std::string render_analysis(const AnalysisReport& report);
std::string render_analysis(const Rhythm& r);

/// Histogram in "{d:count,...}" form ordered by ascending multiplicity
/// (ties by distance), e.g. "{4:1,7:2,6:3,3:4}".
std::string histogram_by_multiplicity(const MultiplicityHistogram& hist);

std::string to_string(const DeepForm& form);

}  // namespace eurhythm
