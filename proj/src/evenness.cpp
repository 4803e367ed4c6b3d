#include "eurhythm/evenness.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

namespace eurhythm {

double chord_length(int dist, int timespan) {
    if (timespan < 1) throw std::invalid_argument("chord_length: timespan must be positive");
    if (dist < 0 || dist > timespan)
        throw std::invalid_argument("chord_length: distance outside [0, n]");
    return 2.0 * std::sin(std::numbers::pi * dist / timespan);
}

double evenness_chordal(const Rhythm& r) {
    const int k = r.onset_count();
    double sum = 0.0;
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) sum += chord_length(geodesic_dist(r, i, j), r.timespan());
    return sum;
}

long long evenness_geodesic(const Rhythm& r) {
    const int k = r.onset_count();
    long long sum = 0;
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) sum += geodesic_dist(r, i, j);
    return sum;
}

long long evenness_squared_geodesic(const Rhythm& r) {
    const int k = r.onset_count();
    long long sum = 0;
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) {
            const long long d = geodesic_dist(r, i, j);
            sum += d * d;
        }
    return sum;
}

int level_distance(const Rhythm& r, int onset_index, int level) {
    const int d = clockwise_dist(r, onset_index, onset_index + level);
    // The full loop counts as n, not 0; intermediate levels can never
    // produce 0 because onsets are distinct.
    return d == 0 ? r.timespan() : d;
}

LevelSum level_sum(const Rhythm& r, int level) {
    const int k = r.onset_count();
    if (level < 1 || level > k)
        throw std::invalid_argument("level_sum: level " + std::to_string(level) +
                                    " outside [1, " + std::to_string(k) + "]");
    LevelSum out;
    out.clockwise.reserve(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) out.clockwise.push_back(level_distance(r, i, level));
    std::sort(out.clockwise.begin(), out.clockwise.end());
    for (int d : out.clockwise) out.chordal += chord_length(d, r.timespan());
    return out;
}

bool has_property_star(const Rhythm& r) {
    const int k = r.onset_count();
    if (k < 2) throw std::invalid_argument("has_property_star: need at least two onsets");
    const long long n = r.timespan();
    for (int level = 1; level <= k; ++level) {
        const long long lo = level * n / k;
        const long long hi = lo + (level * n % k == 0 ? 0 : 1);
        for (int i = 0; i < k; ++i) {
            const int d = level_distance(r, i, level);
            if (d != lo && d != hi) return false;
        }
    }
    return true;
}

bool has_property_star_star(const Rhythm& r) {
    const int k = r.onset_count();
    if (k < 2) throw std::invalid_argument("has_property_star_star: need at least two onsets");
    const long long n = r.timespan();
    const DistanceSeq gaps = to_distance_seq(r);
    for (int level = 1; level <= k; ++level) {
        const long long lo = level * n / k;
        const long long hi = lo + (level * n % k == 0 ? 0 : 1);
        for (int i = 0; i < k; ++i) {
            long long window = 0;
            for (int j = 0; j < level; ++j) window += gaps[static_cast<std::size_t>((i + j) % k)];
            if (window != lo && window != hi) return false;
        }
    }
    return true;
}

EvennessReport evenness_report(const Rhythm& r) {
    EvennessReport out;
    out.chordal_sum = evenness_chordal(r);
    out.geodesic_sum = evenness_geodesic(r);
    out.squared_geodesic_sum = evenness_squared_geodesic(r);
    for (int level = 1; level <= r.onset_count(); ++level)
        out.per_level.push_back(level_sum(r, level));
    return out;
}

double evenness_value(const Rhythm& r, EvennessMetric metric) {
    switch (metric) {
        case EvennessMetric::Chordal: return evenness_chordal(r);
        case EvennessMetric::Geodesic: return static_cast<double>(evenness_geodesic(r));
        case EvennessMetric::SquaredGeodesic:
            return static_cast<double>(evenness_squared_geodesic(r));
    }
    throw std::logic_error("evenness_value: unknown metric");
}

void for_each_subset(int n, int k, const std::function<void(const std::vector<int>&)>& fn) {
    if (k < 0 || k > n) throw std::invalid_argument("for_each_subset: need 0 <= k <= n");
    std::vector<int> pick(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) pick[static_cast<std::size_t>(i)] = i;
    while (true) {
        fn(pick);
        int i = k - 1;
        while (i >= 0 && pick[static_cast<std::size_t>(i)] == n - k + i) --i;
        if (i < 0) break;
        ++pick[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < k; ++j)
            pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
    }
}

namespace {

// Metric over a subset using a precomputed chord table; integer metrics are
// exact in double.
double subset_value(const std::vector<int>& pick, int n, EvennessMetric metric,
                    const std::vector<double>& chords) {
    double sum = 0.0;
    const int k = static_cast<int>(pick.size());
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) {
            int d = pick[static_cast<std::size_t>(j)] - pick[static_cast<std::size_t>(i)];
            d = std::min(d, n - d);
            switch (metric) {
                case EvennessMetric::Chordal: sum += chords[static_cast<std::size_t>(d)]; break;
                case EvennessMetric::Geodesic: sum += d; break;
                case EvennessMetric::SquaredGeodesic: sum += static_cast<double>(d) * d; break;
            }
        }
    return sum;
}

}  // namespace

MaxEvennessResult brute_force_max_evenness(int timespan, int onsets, EvennessMetric metric,
                                           int enumeration_cap) {
    const int n = timespan;
    const int k = onsets;
    if (n < 1) throw std::invalid_argument("brute_force_max_evenness: timespan must be positive");
    if (n > enumeration_cap)
        throw std::invalid_argument("brute_force_max_evenness: timespan " + std::to_string(n) +
                                    " above enumeration cap " + std::to_string(enumeration_cap));
    if (k < 0 || k > n) throw std::invalid_argument("brute_force_max_evenness: need 0 <= k <= n");

    std::vector<double> chords(static_cast<std::size_t>(n / 2 + 1));
    for (int d = 0; d <= n / 2; ++d) chords[static_cast<std::size_t>(d)] = chord_length(d, n);

    constexpr double kTol = 1e-9;
    double best = -std::numeric_limits<double>::infinity();
    for_each_subset(n, k, [&](const std::vector<int>& pick) {
        best = std::max(best, subset_value(pick, n, metric, chords));
    });

    MaxEvennessResult out;
    out.max_value = best;
    out.runner_up = -std::numeric_limits<double>::infinity();
    for_each_subset(n, k, [&](const std::vector<int>& pick) {
        const double v = subset_value(pick, n, metric, chords);
        if (v >= best - kTol)
            out.maximizers.emplace_back(n, pick);
        else
            out.runner_up = std::max(out.runner_up, v);
    });
    return out;
}

}  // namespace eurhythm
