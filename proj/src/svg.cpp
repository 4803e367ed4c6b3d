#include "eurhythm/svg.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>

namespace eurhythm {

namespace {

// Layout constants; fixed in v1.
constexpr int kSize = 420;
constexpr double kCenter = kSize / 2.0;
constexpr double kRadius = 160.0;
constexpr double kTickLen = 8.0;
constexpr double kOnsetDot = 7.0;
constexpr double kLabelRadius = kRadius + 26.0;
constexpr int kFontSize = 14;

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.2f", v);
    return buf;
}

// Pulse 0 at the top, time clockwise.
double angle_of(int pulse, int n) {
    return -std::numbers::pi / 2.0 + 2.0 * std::numbers::pi * pulse / n;
}

}  // namespace

std::string clock_svg(const Rhythm& r) {
    const int n = r.timespan();
    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kSize << "\" height=\""
        << kSize << "\" viewBox=\"0 0 " << kSize << " " << kSize << "\">\n";
    svg << "<circle cx=\"" << num(kCenter) << "\" cy=\"" << num(kCenter) << "\" r=\""
        << num(kRadius) << "\" fill=\"none\" stroke=\"black\" stroke-width=\"1.5\"/>\n";

    for (int p = 0; p < n; ++p) {
        const double a = angle_of(p, n);
        const double x1 = kCenter + (kRadius - kTickLen) * std::cos(a);
        const double y1 = kCenter + (kRadius - kTickLen) * std::sin(a);
        const double x2 = kCenter + (kRadius + kTickLen) * std::cos(a);
        const double y2 = kCenter + (kRadius + kTickLen) * std::sin(a);
        svg << "<line x1=\"" << num(x1) << "\" y1=\"" << num(y1) << "\" x2=\"" << num(x2)
            << "\" y2=\"" << num(y2) << "\" stroke=\"black\" stroke-width=\"1\"/>\n";
    }

    // Zero label marks the start of the rhythm.
    svg << "<text x=\"" << num(kCenter) << "\" y=\"" << num(kCenter - kLabelRadius + 6)
        << "\" font-size=\"" << kFontSize
        << "\" text-anchor=\"middle\" font-family=\"sans-serif\">0</text>\n";

    const int k = r.onset_count();
    if (k >= 2) {
        svg << "<path d=\"";
        for (int i = 0; i < k; ++i) {
            const double a = angle_of(r.onsets()[static_cast<std::size_t>(i)], n);
            svg << (i == 0 ? 'M' : 'L') << num(kCenter + kRadius * std::cos(a)) << ' '
                << num(kCenter + kRadius * std::sin(a));
        }
        svg << "Z\" fill=\"none\" stroke=\"#555555\" stroke-width=\"1.5\"/>\n";
    }

    for (int o : r.onsets()) {
        const double a = angle_of(o, n);
        svg << "<circle cx=\"" << num(kCenter + kRadius * std::cos(a)) << "\" cy=\""
            << num(kCenter + kRadius * std::sin(a)) << "\" r=\"" << num(kOnsetDot)
            << "\" fill=\"black\"/>\n";
    }

    // Arc labels: the gap length at the midpoint of each inter-onset arc.
    if (k >= 2) {
        const DistanceSeq gaps = to_distance_seq(r);
        for (int i = 0; i < k; ++i) {
            const int start = r.onsets()[static_cast<std::size_t>(i)];
            const double mid = start + gaps[static_cast<std::size_t>(i)] / 2.0;
            const double a = -std::numbers::pi / 2.0 + 2.0 * std::numbers::pi * mid / n;
            svg << "<text x=\"" << num(kCenter + kLabelRadius * std::cos(a)) << "\" y=\""
                << num(kCenter + kLabelRadius * std::sin(a) + 5) << "\" font-size=\"" << kFontSize
                << "\" text-anchor=\"middle\" font-family=\"sans-serif\">"
                << gaps[static_cast<std::size_t>(i)] << "</text>\n";
        }
    }

    svg << "</svg>\n";
    return svg.str();
}

}  // namespace eurhythm
