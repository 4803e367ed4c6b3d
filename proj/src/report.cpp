#include "eurhythm/report.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

namespace eurhythm {

namespace {

std::string fixed6(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6f", v);
    return buf;
}

std::string join_ints(const std::vector<int>& v, const char* sep) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += sep;
        out += std::to_string(v[i]);
    }
    return out;
}

}  // namespace

std::string histogram_by_multiplicity(const MultiplicityHistogram& hist) {
    std::vector<std::pair<int, int>> rows(hist.begin(), hist.end());  // (distance, count)
    std::sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) {
        return std::tie(a.second, a.first) < std::tie(b.second, b.first);
    });
    std::string out = "{";
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(rows[i].first) + ":" + std::to_string(rows[i].second);
    }
    out += '}';
    return out;
}

std::string to_string(const DeepForm& form) {
    std::string out;
    if (form.kind == DeepForm::Kind::ExceptionalF) {
        out = "F";
    } else {
        out = "D(k=" + std::to_string(form.onsets) + ",n=" + std::to_string(form.base_timespan) +
              ",m=" + std::to_string(form.base_step) + ")";
    }
    out += " scaled by " + std::to_string(form.scaling) + ", rotated by " +
           std::to_string(form.rotation);
    return out;
}

AnalysisReport analyze(const Rhythm& r) {
    AnalysisReport rep;
    rep.rhythm = r;
    rep.box = to_box(r);
    rep.subset = to_subset_text(r);
    const int k = r.onset_count();
    if (k >= 1) {
        rep.distance_seq = to_distance_seq(r);
        rep.aksak = aksak_class(r);
        rep.string_class = string_class(r);
        rep.period = smallest_period(r);
    }
    if (k >= 2) rep.property_star = has_property_star(r);
    rep.evenness = evenness_report(r);
    rep.hist = histogram(r);
    rep.erdos_deep = is_erdos_deep(r);
    rep.winograd_deep = is_winograd_deep(r);
    if (rep.erdos_deep) {
        rep.deep_form = characterize_deep(r);
        rep.shelling_order = shelling(r);
    }
    return rep;
}

std::string render_analysis(const AnalysisReport& rep) {
    std::ostringstream out;
    auto row = [&](const char* label, const std::string& value) {
        out << label;
        for (std::size_t i = std::char_traits<char>::length(label); i < 22; ++i) out << ' ';
        out << value << '\n';
    };
    row("box:", rep.box);
    row("subset:", rep.subset);
    row("distance seq:", rep.distance_seq ? to_distance_text(*rep.distance_seq) : "-");
    row("pulses:", std::to_string(rep.rhythm.timespan()));
    row("onsets:", std::to_string(rep.rhythm.onset_count()));
    row("period:", rep.period ? std::to_string(*rep.period) : "-");
    row("chordal evenness:", fixed6(rep.evenness.chordal_sum));
    row("geodesic evenness:", std::to_string(rep.evenness.geodesic_sum));
    row("squared geodesic:", std::to_string(rep.evenness.squared_geodesic_sum));
    row("histogram:", histogram_by_multiplicity(rep.hist));
    row("erdos deep:", rep.erdos_deep ? "yes" : "no");
    row("winograd deep:", rep.winograd_deep ? "yes" : "no");
    if (rep.deep_form) row("deep form:", to_string(*rep.deep_form));
    if (rep.shelling_order) row("shelling:", join_ints(*rep.shelling_order, ","));
    row("aksak:", rep.aksak ? to_string(*rep.aksak) : "-");
    row("string class:", rep.string_class ? to_string(*rep.string_class) : "-");
    row("max evenness:", rep.property_star ? (*rep.property_star ? "yes" : "no") : "-");
    return out.str();
}

std::string render_analysis(const Rhythm& r) { return render_analysis(analyze(r)); }

}  // namespace eurhythm
